#ifndef NNDISP_CLI_HPP
#define NNDISP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nndisp::cli {

// Full command-line driver.  args excludes the program name.  Returns the
// process exit status: 0 success, 2 usage errors, 1 anything else.  All
// diagnostics go to err with a machine-readable "error[category]:" prefix.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nndisp::cli

#endif
