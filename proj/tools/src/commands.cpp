#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "arithmorse/cohomology.hpp"
#include "arithmorse/complex.hpp"
#include "arithmorse/errors.hpp"
#include "arithmorse/morse.hpp"
#include "arithmorse/topology.hpp"
#include "cache.hpp"

#ifndef ARITHMORSE_VERSION
#define ARITHMORSE_VERSION "0.0.0"
#endif

namespace arithmorse::cli {

std::string tool_version() { return ARITHMORSE_VERSION; }

namespace {

constexpr int kReportDegrees = 7;  // b0..b6 and c0..c6
constexpr std::int64_t kDefaultSieveLimit = 1'000'000;

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(config.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + config.output_path + " for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to " + config.output_path + " failed");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to " + path + " failed");
}

std::int64_t require_n_max(const RunConfig& config, std::int64_t fallback) {
  const auto n = config.n_max.value_or(fallback);
  if (n < 2) throw UsageError("--n-max must be at least 2");
  return n;
}

FactorSieve make_sieve(const RunConfig& config, std::int64_t needed) {
  const auto limit = config.sieve_limit.value_or(std::max<std::int64_t>(needed, kDefaultSieveLimit));
  if (limit < 2) throw UsageError("--sieve-limit must be at least 2");
  if (needed > limit)
    throw UsageError("n = " + std::to_string(needed) + " exceeds --sieve-limit " + std::to_string(limit));
  return FactorSieve(limit);
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (config.format == a) return;
  throw UsageError("format " + config.format + " is not supported by " + config.command);
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string format_double(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string report_csv(const std::vector<MorseReport>& reports) {
  std::ostringstream os;
  os << "n,mertens,chi";
  for (int k = 0; k < kReportDegrees; ++k) os << ",b" << k;
  for (int k = 0; k < kReportDegrees; ++k) os << ",c" << k;
  os << ",weak,strong,h1,h3\n";
  for (const auto& r : reports) {
    if (r.betti.b.size() > kReportDegrees || r.c.size() > kReportDegrees)
      throw std::runtime_error("n = " + std::to_string(r.n) + " has more degrees than the report columns");
    os << r.n << ',' << r.mertens << ',' << r.chi;
    for (int k = 0; k < kReportDegrees; ++k) os << ',' << r.betti.at(static_cast<std::size_t>(k));
    for (int k = 0; k < kReportDegrees; ++k)
      os << ',' << (static_cast<std::size_t>(k) < r.c.size() ? r.c[static_cast<std::size_t>(k)] : 0);
    os << ',' << flag(r.weak) << ',' << flag(r.strong) << ',' << flag(r.formulas.h1) << ','
       << flag(r.formulas.h3) << '\n';
  }
  return os.str();
}

std::string report_json(const std::vector<MorseReport>& reports) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["mertens"] = r.mertens;
    j["chi"] = r.chi;
    j["betti"] = r.betti.b;
    j["c"] = r.c;
    j["r"] = r.r;
    j["fvector"] = r.f_vector;
    j["births"] = r.births;
    j["deaths"] = r.deaths;
    j["mertens_euler"] = r.mertens_euler;
    j["poincare_hopf"] = r.poincare_hopf;
    j["weak"] = r.weak;
    j["strong"] = r.strong;
    j["h1"] = r.formulas.h1;
    j["h2"] = r.formulas.h2;
    j["h3"] = r.formulas.h3;
    rows.push_back(std::move(j));
  }
  return rows.dump(1) + "\n";
}

std::string events_csv(const std::vector<FiltrationEvent>& events) {
  std::ostringstream os;
  os << "n,mu,sphere_dim,morse_index,ph_index,kind\n";
  for (const auto& e : events) {
    os << e.n << ',' << e.mu << ',';
    if (e.stable_sphere_dim) os << *e.stable_sphere_dim;
    os << ',';
    if (e.morse_index) os << *e.morse_index;
    os << ',' << e.ph_index << ',' << to_string(e.kind) << '\n';
  }
  return os.str();
}

}  // namespace

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (!config.n) throw UsageError("build needs --n");
  const auto n = *config.n;
  if (n < 2) throw UsageError("--n must be at least 2");
  require_format(config, {"json", "dot", "csv"});
  const auto sieve = make_sieve(config, n);
  const GraphKind kind{config.kind, n};
  const Graph g = build_graph(kind, sieve);
  std::string text;
  if (config.format == "json") {
    text = graph_to_json(g, kind) + "\n";
  } else if (config.format == "dot") {
    text = graph_to_dot(g, family_name(kind.family) + "_" + std::to_string(n));
  } else {
    std::ostringstream os;
    os << "a,b\n";
    for (const auto& [a, b] : g.edges()) os << a << ',' << b << '\n';
    text = os.str();
  }
  emit(config, text, out);
  return kExitOk;
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto n_max = require_n_max(config, 250);
  require_format(config, {"csv", "json"});
  if (config.kind == GraphFamily::Divisor) throw UsageError("table needs --kind prime or integer");
  for (auto c : config.checkpoints)
    if (c < 2 || c > n_max) throw UsageError("checkpoints must lie in [2, n-max]");
  const auto sieve = make_sieve(config, n_max);

  FiltrationConfig fc;
  fc.family = config.kind;
  fc.n_max = n_max;
  fc.checkpoints = config.checkpoints.empty() ? all_checkpoints(n_max) : config.checkpoints;
  fc.field_prime = config.field_prime;
  fc.threads = config.threads;
  std::optional<JsonlCache> cache;
  if (!config.cache_path.empty()) {
    cache.emplace(config.cache_path, tool_version(), err);
    fc.store = &*cache;
  }
  const auto result = run_filtration(fc, sieve);
  emit(config, config.format == "csv" ? report_csv(result.reports) : report_json(result.reports), out);
  if (!config.events_path.empty()) write_file(config.events_path, events_csv(result.events));
  if (cache) err << "cache: " << cache->hits() << " hits, " << cache->size() << " records\n";
  return kExitOk;
}

FitResult fit_const_linear_log(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("fit needs at least 3 points");
  Eigen::MatrixXd a(static_cast<Eigen::Index>(x.size()), 3);
  Eigen::VectorXd b(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    a(r, 0) = 1.0;
    a(r, 1) = x[i];
    a(r, 2) = std::log(x[i]);
    b(r) = y[i];
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
  return {c(0), c(1), c(2)};
}

int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"csv"});
  if (config.kind == GraphFamily::Divisor) throw UsageError("series needs --kind prime or integer");
  if (config.what != "dimension" && config.what != "wu") throw UsageError("--what must be dimension or wu");
  const bool dimension = config.what == "dimension";
  const auto n_max = require_n_max(config, dimension ? 2690 : 259);
  const auto sieve = make_sieve(config, n_max);
  const Graph g = build_graph({config.kind, n_max}, sieve);
  const auto labels = g.labels();

  std::ostringstream os;
  if (dimension) {
    os << "n,dimension,decimal\n";
    FiltrationDimension fd(g);
    Rational current(-1);
    std::vector<double> xs, ys;
    std::size_t next = 0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
      while (next < labels.size() && labels[next] <= n) {
        current = fd.add_next();
        ++next;
      }
      const double value = current.get_d();
      os << n << ',' << rational_string(current) << ',' << format_double(value, "%.12f") << '\n';
      if (n >= 6) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(value);
      }
    }
    if (xs.size() >= 3) {
      const auto fit = fit_const_linear_log(xs, ys);
      err << "fit over 6 <= n <= " << n_max << ": dim ~ " << format_double(fit.constant, "%.7g") << " + "
          << format_double(fit.linear, "%.7g") << " x + " << format_double(fit.log, "%.7g") << " log(x)\n";
    }
  } else {
    os << "n,wu,scaled_chi\n";
    std::size_t built = static_cast<std::size_t>(-1);
    std::int64_t wu = 0, chi = 0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
      const auto p = static_cast<std::size_t>(std::upper_bound(labels.begin(), labels.end(), n) - labels.begin());
      if (p != built) {
        std::vector<std::size_t> idx(p);
        for (std::size_t i = 0; i < p; ++i) idx[i] = i;
        const auto k = whitney_complex(induced_subgraph_by_index(g, idx));
        wu = wu_characteristic(k);
        chi = euler_characteristic(k);
        built = p;
      }
      os << n << ',' << wu << ',' << 100 - 15 * chi << '\n';
    }
  }
  emit(config, os.str(), out);
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.field_prime < 3 || config.field_prime >= (1u << 31) || !is_probable_prime(config.field_prime))
      throw UsageError("--field-prime must be an odd prime below 2^31");
    if (config.command == "build") return cmd_build(config, out, err);
    if (config.command == "table") return cmd_table(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "series") return cmd_series(config, out, err);
    throw UsageError("unknown command " + config.command);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RankDiscrepancyError& e) {
    err << "error: rank discrepancy: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

namespace {

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: " + item);
    }
    if (used != item.size()) throw UsageError("not an integer: " + item);
    v.push_back(x);
  }
  return v;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse filtrations and cohomology of arithmetic divisibility graphs", "arithmorse"};
  app.require_subcommand(1);

  RunConfig config;
  config.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string kind = "prime";
  std::string checkpoints;
  std::int64_t n = 0, n_max = 0, sieve_limit = 0;

  app.add_option("--kind", kind, "Graph family")->check(CLI::IsMember({"integer", "prime", "divisor"}));
  app.add_option("--n-max", n_max, "Largest n of a sweep")->check(CLI::PositiveNumber);
  app.add_option("--field-prime", config.field_prime, "Prime for modular rank computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--sieve-limit", sieve_limit, "Factor sieve size (default: the larger of 10^6 and what the command needs)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", config.cache_path, "JSON-lines result cache");
  app.add_option("--out", config.output_path, "Output file (default: standard output)");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"csv", "json", "dot"}));
  app.add_option("--checks", config.checks, "Comma-separated verify suites")
      ->delimiter(',')
      ->check(CLI::IsMember(known_checks()));

  auto* build = app.add_subcommand("build", "Write one graph as JSON, DOT or CSV");
  build->add_option("--n", n, "Graph parameter")->required();
  auto* table = app.add_subcommand("table", "Morse report for every checkpoint n");
  table->add_option("--checkpoints", checkpoints, "Comma-separated n values (default: every n)");
  table->add_option("--events", config.events_path, "Also write the filtration events CSV here");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--d", config.d, "Primorial indices for the kummer suite")->delimiter(',');
  auto* series = app.add_subcommand("series", "Dimension or Wu characteristic series");
  series->add_option("--what", config.what, "dimension or wu")->check(CLI::IsMember({"dimension", "wu"}));
  for (auto* sub : {build, table, verify, series}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.kind = parse_family(kind);
  if (build->count("--n")) config.n = n;
  if (app.count("--n-max")) config.n_max = n_max;
  if (app.count("--sieve-limit")) config.sieve_limit = sieve_limit;
  try {
    if (!checkpoints.empty()) config.checkpoints = parse_list(checkpoints);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace arithmorse::cli
