#include "pidft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <regex>
#include <sstream>

#include "pidft/bounds.hpp"
#include "pidft/catalog.hpp"
#include "pidft/chargroup.hpp"
#include "pidft/converge.hpp"
#include "pidft/csv.hpp"
#include "pidft/dft.hpp"
#include "pidft/errors.hpp"
#include "pidft/verify.hpp"

namespace pidft {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(trim(current));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& token, const std::string& context) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("invalid integer '" + token + "' in " + context);
  }
  return value;
}

double parse_positive_real(const std::string& token, const std::string& context) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(value) ||
      value <= 0.0) {
    throw UsageError("invalid positive number '" + token + "' in " + context);
  }
  return value;
}

std::string quote_arg(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"'") == std::string::npos) return arg;
  std::string out = "'";
  for (const char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

FiniteGroup parse_group(const std::string& text) {
  constexpr std::int64_t kMaxOrder = 1024;
  static const std::regex cyclic(R"(z(\d+))", std::regex::icase);
  static const std::regex shift(R"(g(\d+))", std::regex::icase);
  static const std::regex scaled(R"(g(\d+)_(\d+))", std::regex::icase);
  std::smatch m;
  auto number = [&](std::size_t i) {
    const std::int64_t v = parse_int(m[i].str(), "--group");
    if (v < 1 || v > kMaxOrder) throw UsageError("--group parameter out of range: " + text);
    return v;
  };
  if (std::regex_match(text, m, cyclic)) return FiniteGroup::cyclic(number(1));
  if (std::regex_match(text, m, shift)) {
    const std::int64_t order = number(1);
    if (order % 2 != 0) throw UsageError("--group g<k> needs an even order k: " + text);
    return FiniteGroup::shift(order / 2);
  }
  if (std::regex_match(text, m, scaled)) {
    const std::int64_t mm = number(1);
    const std::int64_t nn = number(2);
    if (2 * mm > kMaxOrder) throw UsageError("--group order too large: " + text);
    return FiniteGroup::scaled(mm, nn);
  }
  throw UsageError("--group must be z<m>, g<2m> or g<m>_<n>, got '" + text + "'");
}

std::int64_t single_n(const RunConfig& c) {
  if (c.n_list.size() != 1) throw UsageError("this command needs exactly one --n value");
  return c.n_list.front();
}

std::vector<std::int64_t> n_or(const RunConfig& c, std::vector<std::int64_t> defaults) {
  return c.n_list.empty() ? defaults : c.n_list;
}

std::vector<SchwartzFunction> functions_for(const RunConfig& c) {
  if (c.function == "all") return catalog_list();
  try {
    return {find_function(c.function)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct Outcome {
  std::string csv;
  json failures = json::array();
};

void add_failure(Outcome& outcome, const std::string& function, std::int64_t n,
                 const std::string& metric, double value, std::optional<double> bound) {
  json entry{{"function", function}, {"n", n}, {"metric", metric}, {"value", value}};
  entry["bound"] = bound ? json(*bound) : json(nullptr);
  outcome.failures.push_back(std::move(entry));
}

std::string row_value(const ReportRow& row) {
  return row.value_text.empty() ? format_real(row.value) : row.value_text;
}

void write_report(const RunConfig& c, const std::vector<ReportRow>& rows, Outcome& outcome) {
  std::ostringstream out;
  CsvWriter csv(out, c.command_line, {"function", "n", "metric", "value", "bound", "pass"});
  for (const auto& r : rows) {
    csv.row({r.function, std::to_string(r.n), r.metric, row_value(r),
             r.bound ? format_real(*r.bound) : std::string(), r.pass ? "true" : "false"});
    if (!r.pass) add_failure(outcome, r.function, r.n, r.metric, r.value, r.bound);
  }
  outcome.csv = out.str();
}

bool use_fast(Method method, std::int64_t n) {
  return method == Method::Fast || (method == Method::Auto && n > 64);
}

Outcome run_dft(const RunConfig& c) {
  const std::int64_t n = single_n(c);
  const SchwartzFunction f = functions_for(c).front();
  const ScaledGrid grid = make_grid(n);
  const GridFunction g = sample(f, grid);
  const GridFunction ghat = use_fast(c.method, n) ? dft_fast(g) : dft(g, {c.threads});

  Outcome outcome;
  std::ostringstream out;
  CsvWriter csv(out, c.command_line, {"t", "re", "im"});
  for (std::int64_t k = grid.first_index(); k <= grid.last_index(); ++k) {
    const Complex v = ghat.at(k);
    csv.row({format_real(grid.point(k)), format_real(v.real()), format_real(v.imag())});
  }
  outcome.csv = out.str();
  return outcome;
}

Outcome run_invert(const RunConfig& c) {
  constexpr double kTolerance = 1e-11;
  const std::int64_t n = single_n(c);
  const SchwartzFunction f = functions_for(c).front();
  const ScaledGrid grid = make_grid(n);
  const GridFunction g = sample(f, grid);
  const bool fast = use_fast(c.method, n);
  const GridFunction back = fast ? idft_fast(dft_fast(g)) : idft(dft(g, {c.threads}), {c.threads});

  Outcome outcome;
  std::ostringstream out;
  CsvWriter csv(out, c.command_line, {"x", "re", "im"});
  double worst = 0.0;
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    const Complex v = back.at(j);
    worst = std::max(worst, std::abs(v - g.at(j)));
    csv.row({format_real(grid.point(j)), format_real(v.real()), format_real(v.imag())});
  }
  outcome.csv = out.str();
  const double bound = kTolerance * std::max(1.0, g.max_abs());
  if (worst > bound) add_failure(outcome, f.name, n, "round_trip", worst, bound);
  return outcome;
}

Outcome run_chartable(const RunConfig& c) {
  if (c.group.empty()) throw UsageError("chartable needs --group");
  const FiniteGroup group = parse_group(c.group);
  Outcome outcome;
  std::ostringstream out;
  CsvWriter csv(out, c.command_line, {"label", "element", "re", "im"});
  for (const Character& chi : characters(group)) {
    for (const std::int64_t x : group.elements()) {
      const Complex v = chi(x);
      csv.row({group.display(chi.label()), group.display(x), format_real(v.real()),
               format_real(v.imag())});
    }
  }
  outcome.csv = out.str();
  return outcome;
}

Outcome run_verify(const RunConfig& c) {
  const bool known = c.suite == "all" || std::find(suite_names().begin(), suite_names().end(),
                                                   c.suite) != suite_names().end();
  if (!known) throw UsageError("unknown --suite '" + c.suite + "'");
  VerifyOptions options;
  options.n_list = c.n_list;
  options.seed = c.seed;
  options.threads = c.threads;
  options.function = functions_for(c).front().name;
  Outcome outcome;
  write_report(c, run_suite(c.suite, options), outcome);
  return outcome;
}

Outcome run_converge(const RunConfig& c) {
  const auto ns = n_or(c, {4, 8, 16, 32});
  ConvergenceOptions options;
  options.threads = c.threads;
  options.max_bits = c.max_bits;
  std::vector<ReportRow> rows;
  for (const auto& f : functions_for(c)) {
    auto part = convergence_report(f, ns, c.eps_list, options);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  canonical_sort(rows);
  Outcome outcome;
  write_report(c, rows, outcome);
  return outcome;
}

Outcome run_bounds(const RunConfig& c) {
  BoundSuiteOptions options;
  options.n_list = n_or(c, {2, 4, 8, 16, 32});
  options.eps_list = c.eps_list;
  if (options.n_list.front() < 2) throw UsageError("bounds needs every n >= 2");

  Outcome outcome;
  std::ostringstream out;
  CsvWriter csv(out, c.command_line, {"function", "n", "quantity", "measured", "bound", "pass"});
  for (const auto& f : functions_for(c)) {
    for (const auto& r : bound_report(f, options)) {
      csv.row({r.function, std::to_string(r.n), r.quantity, format_real(r.measured),
               format_real(r.bound), r.pass ? "true" : "false"});
      if (!r.pass) add_failure(outcome, r.function, r.n, r.quantity, r.measured, r.bound);
    }
  }
  outcome.csv = out.str();
  return outcome;
}

const char* command_name(Command command) {
  switch (command) {
    case Command::Dft: return "dft";
    case Command::Invert: return "invert";
    case Command::Chartable: return "chartable";
    case Command::Verify: return "verify";
    case Command::Converge: return "converge";
    case Command::Bounds: return "bounds";
  }
  return "?";
}

void check_output_path(const std::string& path) {
  if (path.empty()) return;
  namespace fs = std::filesystem;
  const fs::path p(path);
  const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) throw UsageError("output directory does not exist: " + path);
  if (fs::is_directory(p, ec)) throw UsageError("output path is a directory: " + path);
}

void report_error(std::ostream& err, const char* status, const std::string& command,
                  const std::string& message, std::optional<double> achieved = std::nullopt) {
  json summary{{"status", status}, {"command", command}, {"message", message}};
  if (achieved) summary["achieved"] = *achieved;
  err << summary.dump() << '\n';
}

}  // namespace

std::vector<std::int64_t> parse_n_spec(const std::string& text) {
  if (trim(text).empty()) throw UsageError("empty n list");
  std::vector<std::int64_t> out;
  for (const auto& token : split(text, ',')) {
    if (token.empty()) throw UsageError("empty entry in n list '" + text + "'");
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(token, "n list"));
      continue;
    }
    const std::int64_t lo = parse_int(trim(token.substr(0, dots)), "n range");
    const std::int64_t hi = parse_int(trim(token.substr(dots + 2)), "n range");
    if (lo > hi) throw UsageError("empty n range '" + token + "'");
    if (lo < 1 || hi > kDefaultMaxN) throw UsageError("n range out of [1, 512]: " + token);
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  for (const auto n : out) {
    if (n < 1 || n > kDefaultMaxN) {
      throw UsageError("n = " + std::to_string(n) + " outside [1, 512]");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Pi-scaled discrete Fourier transform: transforms, checks and experiments",
               "pidft"};
  app.require_subcommand(1);

  std::string n_text, n_list_text, eps_text, method_text = "auto";
  RunConfig config;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "n, a..b, or a,b,c");
    sub->add_option("--n-list", n_list_text, "comma-separated n values");
  };
  auto add_fn = [&](CLI::App* sub, bool allow_all) {
    sub->add_option("--fn", config.function,
                    allow_all ? "catalog function or 'all'" : "catalog function");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", config.out_path, "CSV path"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", config.threads, "worker threads")->check(CLI::Range(1, 256));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method_text, "auto, naive or fast")
        ->check(CLI::IsMember({"auto", "naive", "fast"}));
  };

  auto* dft_cmd = app.add_subcommand("dft", "transform of a sampled function (t,re,im)");
  add_n(dft_cmd);
  add_fn(dft_cmd, false);
  add_out(dft_cmd);
  add_threads(dft_cmd);
  add_method(dft_cmd);

  auto* invert_cmd = app.add_subcommand("invert", "round trip idft(dft(g)) (x,re,im)");
  add_n(invert_cmd);
  add_fn(invert_cmd, false);
  add_out(invert_cmd);
  add_threads(invert_cmd);
  add_method(invert_cmd);

  auto* chartable_cmd = app.add_subcommand("chartable", "character table (label,element,re,im)");
  chartable_cmd->add_option("--group", config.group, "z<m>, g<2m> or g<m>_<n>")->required();
  add_out(chartable_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verification suites (report CSV)");
  verify_cmd->add_option("--suite", config.suite, "suite name or 'all'");
  verify_cmd->add_option("--seed", config.seed, "random seed");
  add_n(verify_cmd);
  add_fn(verify_cmd, false);
  add_out(verify_cmd);
  add_threads(verify_cmd);

  auto* converge_cmd = app.add_subcommand("converge", "convergence experiments (report CSV)");
  converge_cmd->add_option("--eps", eps_text, "comma-separated tail levels");
  converge_cmd->add_option("--max-bits", config.max_bits, "MPFR precision cap")
      ->check(CLI::Range(128L, 1L << 22));
  add_n(converge_cmd);
  add_fn(converge_cmd, true);
  add_out(converge_cmd);
  add_threads(converge_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "bound suite (bounds CSV)");
  bounds_cmd->add_option("--eps", eps_text, "comma-separated tail levels");
  add_n(bounds_cmd);
  add_fn(bounds_cmd, true);
  add_out(bounds_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {dft_cmd, Command::Dft},         {invert_cmd, Command::Invert},
      {chartable_cmd, Command::Chartable}, {verify_cmd, Command::Verify},
      {converge_cmd, Command::Converge},   {bounds_cmd, Command::Bounds}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }

  if (!n_text.empty() && !n_list_text.empty()) throw UsageError("use either --n or --n-list");
  if (!n_text.empty()) config.n_list = parse_n_spec(n_text);
  if (!n_list_text.empty()) config.n_list = parse_n_spec(n_list_text);
  if (!eps_text.empty()) {
    config.eps_list.clear();
    for (const auto& token : split(eps_text, ',')) {
      config.eps_list.push_back(parse_positive_real(token, "--eps"));
    }
  }
  config.method = method_text == "naive" ? Method::Naive
                  : method_text == "fast" ? Method::Fast
                                          : Method::Auto;
  if ((config.command == Command::Dft || config.command == Command::Invert) &&
      config.n_list.empty()) {
    throw UsageError(std::string(command_name(config.command)) + " needs --n");
  }

  std::string line = "pidft";
  for (int i = 1; i < argc; ++i) line += " " + quote_arg(argv[i]);
  config.command_line = std::move(line);
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string name = command_name(config.command);
  try {
    check_output_path(config.out_path);
    Outcome outcome;
    switch (config.command) {
      case Command::Dft: outcome = run_dft(config); break;
      case Command::Invert: outcome = run_invert(config); break;
      case Command::Chartable: outcome = run_chartable(config); break;
      case Command::Verify: outcome = run_verify(config); break;
      case Command::Converge: outcome = run_converge(config); break;
      case Command::Bounds: outcome = run_bounds(config); break;
    }
    if (config.out_path.empty()) {
      out << outcome.csv;
    } else {
      try {
        write_text_file(config.out_path, outcome.csv);
      } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
      }
    }
    if (!outcome.failures.empty()) {
      json summary{{"status", "assertion_failure"},
                   {"command", name},
                   {"failures", std::move(outcome.failures)}};
      err << summary.dump() << '\n';
      return kExitFailure;
    }
    return kExitPass;
  } catch (const UsageError& e) {
    report_error(err, "usage_error", name, e.what());
    return kExitUsage;
  } catch (const NonConvergenceError& e) {
    report_error(err, "non_convergence", name, e.what(), e.achieved());
    return kExitNonConvergence;
  } catch (const EvaluationError& e) {
    report_error(err, "evaluation_error", name, e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    report_error(err, "error", name, e.what());
    return kExitFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_command_line(argc, argv, out);
  } catch (const UsageError& e) {
    report_error(err, "usage_error", argc > 1 ? argv[1] : "", e.what());
    return kExitUsage;
  }
  if (!config) return kExitPass;
  return run(*config, out, err);
}

}  // namespace pidft
