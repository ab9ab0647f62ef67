#include "nndisp/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nndisp/analytics.hpp"
#include "nndisp/delta_method.hpp"
#include "nndisp/error.hpp"
#include "nndisp/montecarlo.hpp"
#include "nndisp/noise.hpp"
#include "nndisp/sampling.hpp"

namespace nndisp::cli {

namespace {

using nlohmann::json;

const double kLn2 = std::log(2.0);

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_cell(const json& cell, bool full_precision) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_number_integer()) return std::to_string(cell.get<std::int64_t>());
  if (cell.is_number_unsigned()) return std::to_string(cell.get<std::uint64_t>());
  if (full_precision) return format17(cell.get<double>());
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", cell.get<double>());
  return buf;
}

struct Opts {
  double power = 1.0;
  std::vector<double> interferers;
  std::string codebook = "shell";
  std::string interferer_codebook = "shell";
  std::string noise = "gaussian";
  std::string noise_table;
  std::int64_t n = 1000;
  std::vector<std::int64_t> n_list;
  double eps = 0.05;
  double log_m = 0.0;
  double rate = 0.0;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string method = "semi";
  std::string out_path;
  std::string format;
  bool bits = false;
  bool with_mc = false;
  double eta = 0.0;
  std::string var;
  double from = 0.0;
  double to = 0.0;
  std::int64_t steps = 10;
  double interferer_power = 1.0;
};

NoiseModel make_noise(const Opts& o) {
  if (!o.noise_table.empty()) {
    std::ifstream f(o.noise_table);
    if (!f) throw_io("cannot read noise table file: " + o.noise_table);
    std::stringstream ss;
    ss << f.rdbuf();
    return NoiseModel::finite_table_from_json(ss.str());
  }
  if (o.noise == "gaussian") return NoiseModel::gaussian();
  if (o.noise == "laplace") return NoiseModel::laplace();
  if (o.noise == "rademacher") return NoiseModel::rademacher();
  if (o.noise == "uniform") return NoiseModel::uniform();
  throw_usage("unknown noise model: " + o.noise);
}

CodebookKind parse_kind(const std::string& name) {
  if (name == "shell") return CodebookKind::Shell;
  if (name == "iid") return CodebookKind::IidGaussian;
  throw_usage("unknown codebook kind: " + name);
}

montecarlo::Scenario make_scenario(const Opts& o) {
  montecarlo::Scenario sc{Codebook{parse_kind(o.codebook), o.power},
                          {},
                          make_noise(o)};
  const CodebookKind ik = parse_kind(o.interferer_codebook);
  for (double p : o.interferers) sc.interferers.push_back(Codebook{ik, p});
  return sc;
}

// Uniform output envelope shared by every command: a named column schema, rows
// of numbers or strings, and a metadata object that round-trips through both
// serializations.
struct Output {
  std::string command;
  json metadata = json::object();
  json columns = json::array();
  json rows = json::array();
  json extras = json::object();  // optional top-level scalars (decay_slope)
};

std::string to_json_text(const Output& o) {
  json envelope;
  envelope["command"] = o.command;
  envelope["metadata"] = o.metadata;
  envelope["columns"] = o.columns;
  envelope["rows"] = o.rows;
  for (auto it = o.extras.begin(); it != o.extras.end(); ++it)
    envelope[it.key()] = it.value();
  return envelope.dump(2) + "\n";
}

std::string to_csv_text(const Output& o) {
  std::string text = "# command: " + o.command + "\n";
  text += "# metadata: " + o.metadata.dump() + "\n";
  for (auto it = o.extras.begin(); it != o.extras.end(); ++it)
    text += "# " + it.key() + ": " + format_cell(it.value(), true) + "\n";
  for (std::size_t c = 0; c < o.columns.size(); ++c) {
    if (c) text += ",";
    text += o.columns[c].get<std::string>();
  }
  text += "\n";
  for (const json& row : o.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ",";
      text += format_cell(row[c], true);
    }
    text += "\n";
  }
  return text;
}

std::string to_human_text(const Output& o) {
  std::ostringstream os;
  os << "# " << o.command << "  " << o.metadata.dump() << "\n";
  if (o.rows.size() == 1) {
    for (std::size_t c = 0; c < o.columns.size(); ++c)
      os << o.columns[c].get<std::string>() << ": "
         << format_cell(o.rows[0][c], false) << "\n";
  } else {
    std::vector<std::size_t> width(o.columns.size());
    for (std::size_t c = 0; c < o.columns.size(); ++c)
      width[c] = o.columns[c].get<std::string>().size();
    for (const json& row : o.rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], format_cell(row[c], false).size());
    for (std::size_t c = 0; c < o.columns.size(); ++c) {
      std::string h = o.columns[c].get<std::string>();
      h.resize(width[c], ' ');
      os << (c ? "  " : "") << h;
    }
    os << "\n";
    for (const json& row : o.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string cell = format_cell(row[c], false);
        cell.resize(width[c], ' ');
        os << (c ? "  " : "") << cell;
      }
      os << "\n";
    }
  }
  for (auto it = o.extras.begin(); it != o.extras.end(); ++it)
    os << it.key() << ": " << format_cell(it.value(), false) << "\n";
  return os.str();
}

// Routing: no --format and no --out prints a readable table; --format without
// --out prints that serialization instead; --out writes the serialization to
// the file (format inferred from the extension when not given) and keeps the
// readable table on stdout.
void emit(const Output& o, const Opts& opts, std::ostream& out) {
  std::string format = opts.format;
  if (format.empty() && !opts.out_path.empty()) {
    const bool csv = opts.out_path.size() >= 4 &&
                     opts.out_path.compare(opts.out_path.size() - 4, 4, ".csv") == 0;
    format = csv ? "csv" : "json";
  }
  if (format.empty()) {
    out << to_human_text(o);
    return;
  }
  const std::string text = format == "csv" ? to_csv_text(o) : to_json_text(o);
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw_io("cannot write output file: " + opts.out_path);
  f << text;
  if (!f) throw_io("failed while writing output file: " + opts.out_path);
  out << to_human_text(o);
}

double least_squares_slope(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

json report_row(const analytics::DispersionReport& r, bool bits) {
  json row = json::array({r.intended_codebook, r.interferer_codebook, r.power,
                          r.p_bar, r.p_tilde, r.capacity, r.dispersion, r.xi,
                          r.xi_effective, r.n, r.eps, r.log_m, r.rate});
  if (bits) {
    row.push_back(r.log_m / kLn2);
    row.push_back(r.rate / kLn2);
  }
  return row;
}

json report_columns(bool bits) {
  json cols = json::array({"intended_codebook", "interferer_codebook", "power",
                           "p_bar", "p_tilde", "capacity", "dispersion", "xi",
                           "xi_effective", "n", "eps", "log_m", "rate"});
  if (bits) {
    cols.push_back("log_m_bits");
    cols.push_back("rate_bits");
  }
  return cols;
}

void run_approx(const Opts& o, std::ostream& out) {
  const NoiseModel noise = make_noise(o);
  const double xi = noise.moments().xi;
  const CodebookKind ik = parse_kind(o.interferer_codebook);

  Output result;
  result.command = "approx";
  result.metadata = {{"power", o.power},
                     {"interferer_powers", o.interferers},
                     {"interferer_codebook", o.interferer_codebook},
                     {"noise", noise.name()},
                     {"xi", xi},
                     {"n", o.n},
                     {"eps", o.eps}};
  result.columns = report_columns(o.bits);
  std::vector<CodebookKind> kinds;
  if (o.codebook == "both")
    kinds = {CodebookKind::Shell, CodebookKind::IidGaussian};
  else
    kinds = {parse_kind(o.codebook)};
  for (CodebookKind kind : kinds)
    result.rows.push_back(report_row(
        analytics::dispersion_report(kind, ik, o.power, o.interferers, xi, o.n, o.eps),
        o.bits));
  emit(result, o, out);
}

// The target log M in nats: --logm wins, then --rate * n, then the normal
// approximation at --eps for the configured codebook.
double resolve_log_m(const Opts& o, bool have_logm, bool have_rate, bool have_eps,
                     double xi) {
  if (have_logm && have_rate) throw_usage("--logm and --rate are mutually exclusive");
  if (have_logm) return o.bits ? o.log_m * kLn2 : o.log_m;
  if (have_rate)
    return (o.bits ? o.rate * kLn2 : o.rate) * static_cast<double>(o.n);
  if (have_eps) {
    const analytics::DispersionReport r = analytics::dispersion_report(
        parse_kind(o.codebook), parse_kind(o.interferer_codebook), o.power,
        o.interferers, xi, o.n, o.eps);
    return r.log_m;
  }
  throw_usage("one of --logm, --rate, or --eps is required");
}

void run_simulate(const Opts& o, bool have_logm, bool have_rate, bool have_eps,
                  const char* command, std::ostream& out) {
  const montecarlo::Scenario sc = make_scenario(o);
  const double xi = sc.noise.moments().xi;
  const double log_m = resolve_log_m(o, have_logm, have_rate, have_eps, xi);

  montecarlo::MCEstimate est;
  if (o.method == "semi") {
    est = montecarlo::simulate_semi_analytic(sc, o.n, log_m, o.trials, o.seed);
  } else if (o.method == "brute") {
    const double m_real = std::exp(log_m);
    const std::int64_t m = m_real > 1e18 ? std::numeric_limits<std::int64_t>::max()
                                         : std::llround(m_real);
    est = montecarlo::simulate_brute_force(sc, o.n, m, o.trials, o.seed);
  } else {
    throw_usage("unknown method: " + o.method);
  }

  Output result;
  result.command = command;
  result.metadata = {{"power", o.power},
                     {"interferer_powers", o.interferers},
                     {"codebook", o.codebook},
                     {"interferer_codebook", o.interferer_codebook},
                     {"noise", sc.noise.name()},
                     {"xi", xi},
                     {"n", o.n},
                     {"log_m", log_m}};
  result.columns =
      json::array({"estimate", "std_error", "trials", "seed", "method"});
  result.rows.push_back(
      json::array({est.estimate, est.std_error, est.trials, est.seed, est.method}));
  emit(result, o, out);
}

void run_sweep(const Opts& o, std::ostream& out) {
  const NoiseModel noise = make_noise(o);
  const double xi = noise.moments().xi;

  Output result;
  result.command = "sweep";
  result.metadata = {{"var", o.var},
                     {"noise", noise.name()},
                     {"xi", xi},
                     {"power", o.power}};

  if (o.var == "num_interferers") {
    if (o.from < 0 || o.to < o.from) throw_usage("empty sweep range");
    const std::int64_t k_from = std::llround(o.from);
    const std::int64_t k_to = std::llround(o.to);
    result.metadata["interferer_power"] = o.interferer_power;
    result.columns = json::array({"num_interferers", "v_shell_interference",
                                  "v_iid_effective", "v_shell_effective"});
    for (std::int64_t k = k_from; k <= k_to; ++k) {
      const std::vector<double> powers(static_cast<std::size_t>(k),
                                       o.interferer_power);
      const analytics::Sinr s = analytics::sinr(o.power, powers);
      result.rows.push_back(json::array(
          {k, analytics::v_shell_interference(o.power, powers, xi),
           analytics::v_iid(s.p_bar, analytics::xi_prime(xi, s.p_tilde)),
           analytics::v_shell(s.p_bar, xi)}));
    }
    emit(result, o, out);
    return;
  }

  if (o.steps < 1 || (o.steps > 1 && !(o.to >= o.from)))
    throw_usage("empty sweep range");
  std::vector<double> values;
  for (std::int64_t i = 0; i < o.steps; ++i)
    values.push_back(o.steps == 1 ? o.from
                                  : o.from + (o.to - o.from) *
                                                 static_cast<double>(i) /
                                                 static_cast<double>(o.steps - 1));

  result.metadata["interferer_powers"] = o.interferers;
  result.metadata["codebook"] = o.codebook;
  result.metadata["interferer_codebook"] = o.interferer_codebook;
  if (o.var != "n") result.metadata["n"] = o.n;
  if (o.var != "eps") result.metadata["eps"] = o.eps;
  if (o.with_mc) {
    result.metadata["trials"] = o.trials;
    result.metadata["seed"] = o.seed;
  }

  result.columns = json::array({o.var, "capacity", "dispersion", "log_m", "rate"});
  if (o.bits) {
    result.columns.push_back("log_m_bits");
    result.columns.push_back("rate_bits");
  }
  if (o.with_mc) {
    result.columns.push_back("mc_estimate");
    result.columns.push_back("mc_std_error");
  }

  const CodebookKind kind = parse_kind(o.codebook);
  const CodebookKind ik = parse_kind(o.interferer_codebook);
  for (double v : values) {
    std::int64_t n = o.n;
    double eps = o.eps;
    double power = o.power;
    json head;
    if (o.var == "n") {
      n = std::llround(v);
      head = n;
    } else if (o.var == "eps") {
      eps = v;
      head = eps;
    } else if (o.var == "power") {
      power = v;
      head = power;
    } else {
      throw_usage("unknown sweep variable: " + o.var);
    }
    const analytics::DispersionReport r = analytics::dispersion_report(
        kind, ik, power, o.interferers, xi, n, eps);
    json row = json::array({head, r.capacity, r.dispersion, r.log_m, r.rate});
    if (o.bits) {
      row.push_back(r.log_m / kLn2);
      row.push_back(r.rate / kLn2);
    }
    if (o.with_mc) {
      Opts row_opts = o;
      row_opts.power = power;
      const montecarlo::Scenario sc = make_scenario(row_opts);
      const montecarlo::MCEstimate est =
          montecarlo::simulate_semi_analytic(sc, n, r.log_m, o.trials, o.seed);
      row.push_back(est.estimate);
      row.push_back(est.std_error);
    }
    result.rows.push_back(row);
  }
  emit(result, o, out);
}

void run_clt_check(const Opts& o, std::ostream& out) {
  const NoiseModel noise = make_noise(o);
  const double xi = noise.moments().xi;
  const montecarlo::Scenario sc{Codebook{CodebookKind::Shell, o.power},
                                [&] {
                                  std::vector<Codebook> v;
                                  for (double p : o.interferers)
                                    v.push_back(Codebook{CodebookKind::Shell, p});
                                  return v;
                                }(),
                                noise};
  const delta_method::DeltaSpec spec =
      o.interferers.empty()
          ? delta_method::p2p_spec(o.power, xi)
          : delta_method::interference_spec(o.power, o.interferers, xi);
  const double sigma2 = delta_method::delta_variance(spec);
  const delta_method::CltResult res = delta_method::clt_check(
      montecarlo::statistic_sampler(sc), sigma2, o.n_list, o.trials, o.seed);

  Output result;
  result.command = "clt-check";
  result.metadata = {{"power", o.power},
                     {"interferer_powers", o.interferers},
                     {"noise", noise.name()},
                     {"xi", xi},
                     {"sigma2", sigma2},
                     {"trials", o.trials},
                     {"seed", o.seed}};
  result.columns = json::array({"n", "ks_distance"});
  for (const delta_method::KsPoint& p : res.points)
    result.rows.push_back(json::array({p.n, p.distance}));
  result.extras["decay_slope"] = res.decay_slope;
  emit(result, o, out);
}

void run_diag_typical(const Opts& o, bool have_eta, std::ostream& out) {
  const NoiseModel noise = make_noise(o);
  const double eta = have_eta ? o.eta : o.power;

  Output result;
  result.command = "diag-typical";
  result.metadata = {{"power", o.power},
                     {"noise", noise.name()},
                     {"xi", noise.moments().xi},
                     {"eta", eta},
                     {"trials", o.trials},
                     {"seed", o.seed}};
  result.columns = json::array(
      {"n", "freq_y", "freq_z", "freq_q", "freq_total", "q_envelope"});
  std::vector<std::pair<double, double>> log_pts;
  for (std::int64_t n : o.n_list) {
    const montecarlo::TypicalSetDiagnostic d =
        montecarlo::typical_set_diagnostic(o.power, noise, n, eta, o.trials, o.seed);
    result.rows.push_back(json::array(
        {d.n, d.freq_y, d.freq_z, d.freq_q, d.freq_total, d.q_envelope}));
    if (d.freq_total > 0.0)
      log_pts.emplace_back(std::log(static_cast<double>(n)), std::log(d.freq_total));
  }
  if (log_pts.size() >= 2)
    result.extras["decay_slope"] = least_squares_slope(log_pts);
  emit(result, o, out);
}

void add_output_flags(CLI::App* sub, Opts& o) {
  sub->add_option("--out", o.out_path, "write the serialized result to this file");
  sub->add_option("--format", o.format, "serialization on stdout or for --out")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_noise_flags(CLI::App* sub, Opts& o) {
  sub->add_option("--noise", o.noise, "noise model (default gaussian)")
      ->check(CLI::IsMember({"gaussian", "laplace", "rademacher", "uniform"}));
  sub->add_option("--noise-table", o.noise_table,
                  "JSON file {\"values\": [...], \"probabilities\": [...]}");
}

void add_scenario_flags(CLI::App* sub, Opts& o, bool with_codebook) {
  sub->add_option("--power", o.power, "intended sender power P1 (default 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--interferers", o.interferers,
                  "comma-separated interferer powers, e.g. \"1,1\"")
      ->delimiter(',');
  if (with_codebook) {
    sub->add_option("--interferer-codebook", o.interferer_codebook,
                    "codebook of every interferer (default shell)")
        ->check(CLI::IsMember({"shell", "iid"}));
  }
  add_noise_flags(sub, o);
}

void add_mc_flags(CLI::App* sub, Opts& o) {
  sub->add_option("--trials", o.trials, "Monte Carlo trials (default 10000)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "RNG seed (default 1)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Opts o;
  CLI::App app{
      "Second-order rate approximations and exact-error Monte Carlo for "
      "Gaussian codebooks under nearest-neighbor decoding"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  CLI::App* approx = app.add_subcommand(
      "approx", "closed-form capacity/dispersion/normal-approximation report");
  add_scenario_flags(approx, o, true);
  approx->add_option("--codebook", o.codebook, "shell, iid, or both")
      ->check(CLI::IsMember({"shell", "iid", "both"}));
  approx->add_option("--n", o.n, "blocklength (default 1000)")
      ->check(CLI::PositiveNumber);
  approx->add_option("--eps", o.eps, "target error probability (default 0.05)")
      ->check(CLI::Range(1e-15, 1.0 - 1e-15));
  approx->add_flag("--bits", o.bits, "also report rates in bits");
  add_output_flags(approx, o);

  auto add_simulate_flags = [&](CLI::App* sub) {
    add_scenario_flags(sub, o, true);
    sub->add_option("--codebook", o.codebook, "intended codebook (default shell)")
        ->check(CLI::IsMember({"shell", "iid"}));
    sub->add_option("--n", o.n, "blocklength (default 1000)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--logm", o.log_m, "target log M in nats (or bits with --bits)");
    sub->add_option("--rate", o.rate, "target rate per channel use");
    sub->add_option("--eps", o.eps,
                    "derive log M from the normal approximation at this error")
        ->check(CLI::Range(1e-15, 1.0 - 1e-15));
    sub->add_option("--method", o.method, "semi (default) or brute")
        ->check(CLI::IsMember({"semi", "brute"}));
    sub->add_flag("--bits", o.bits, "interpret --logm/--rate in bits");
    add_mc_flags(sub, o);
    add_output_flags(sub, o);
  };
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo ensemble error probability");
  add_simulate_flags(simulate);
  CLI::App* interfere = app.add_subcommand(
      "interfere", "simulate with mandatory interferers");
  add_simulate_flags(interfere);
  interfere->get_option("--interferers")->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate quantities against n, eps, power, or num_interferers");
  add_scenario_flags(sweep, o, true);
  sweep->add_option("--codebook", o.codebook, "intended codebook (default shell)")
      ->check(CLI::IsMember({"shell", "iid"}));
  sweep->add_option("--var", o.var, "sweep variable")
      ->required()
      ->check(CLI::IsMember({"n", "eps", "power", "num_interferers"}));
  sweep->add_option("--from", o.from, "first value")->required();
  sweep->add_option("--to", o.to, "last value")->required();
  sweep->add_option("--steps", o.steps, "number of points (default 10)");
  sweep->add_option("--interferer-power", o.interferer_power,
                    "per-interferer power for num_interferers sweeps (default 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--n", o.n, "blocklength when not the sweep variable")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--eps", o.eps, "target error when not the sweep variable")
      ->check(CLI::Range(1e-15, 1.0 - 1e-15));
  sweep->add_flag("--bits", o.bits, "also report rates in bits");
  sweep->add_flag("--with-mc", o.with_mc,
                  "append a semi-analytic estimate to every row");
  add_mc_flags(sweep, o);
  add_output_flags(sweep, o);

  CLI::App* clt = app.add_subcommand(
      "clt-check", "KS distance of the standardized decoding statistic");
  add_scenario_flags(clt, o, false);
  clt->add_option("--n", o.n_list, "comma-separated blocklengths")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_mc_flags(clt, o);
  add_output_flags(clt, o);

  CLI::App* diag = app.add_subcommand(
      "diag-typical", "typical-set violation frequencies of the empirical powers");
  diag->add_option("--power", o.power, "sender power P (default 1)")
      ->check(CLI::PositiveNumber);
  add_noise_flags(diag, o);
  diag->add_option("--n", o.n_list, "comma-separated blocklengths")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  CLI::Option* eta_opt = diag->add_option("--eta", o.eta,
                                          "q-set margin in (0, 2P); default P");
  add_mc_flags(diag, o);
  add_output_flags(diag, o);

  approx->callback([&] { run_approx(o, out); });
  simulate->callback([&] {
    run_simulate(o, simulate->count("--logm") > 0, simulate->count("--rate") > 0,
                 simulate->count("--eps") > 0, "simulate", out);
  });
  interfere->callback([&] {
    run_simulate(o, interfere->count("--logm") > 0, interfere->count("--rate") > 0,
                 interfere->count("--eps") > 0, "interfere", out);
  });
  sweep->callback([&] { run_sweep(o, out); });
  clt->callback([&] { run_clt_check(o, out); });
  diag->callback([&] { run_diag_typical(o, eta_opt->count() > 0, out); });

  std::vector<const char*> argv;
  argv.push_back("nndisp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error[" << e.category_name() << "]: " << e.what() << "\n";
    return e.category() == ErrorCategory::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nndisp::cli
