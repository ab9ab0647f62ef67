#ifndef NNDISP_ERROR_HPP
#define NNDISP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nndisp {

// Error categories surfaced verbatim by the CLI as "error[<category>]: ...".
enum class ErrorCategory { Domain, Guard, Usage, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

  const char* category_name() const noexcept {
    switch (category_) {
      case ErrorCategory::Domain: return "domain";
      case ErrorCategory::Guard: return "guard";
      case ErrorCategory::Usage: return "usage";
      case ErrorCategory::Io: return "io";
    }
    return "unknown";
  }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorCategory::Domain, msg);
}

[[noreturn]] inline void throw_guard(const std::string& msg) {
  throw Error(ErrorCategory::Guard, msg);
}

[[noreturn]] inline void throw_usage(const std::string& msg) {
  throw Error(ErrorCategory::Usage, msg);
}

[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorCategory::Io, msg);
}

}  // namespace nndisp

#endif
