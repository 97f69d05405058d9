#ifndef ARITHMORSE_TOOLS_COMMANDS_HPP
#define ARITHMORSE_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithmorse/graph.hpp"
#include "arithmorse/rank.hpp"

namespace arithmorse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string tool_version();

struct RunConfig {
  std::string command;
  GraphFamily kind = GraphFamily::Prime;
  std::optional<std::int64_t> n;      // build: graph parameter
  std::optional<std::int64_t> n_max;  // table, verify, series
  std::optional<std::int64_t> sieve_limit;
  std::vector<std::int64_t> checkpoints;  // empty: every n
  std::uint32_t field_prime = kDefaultFieldPrime;
  unsigned threads = 1;
  std::string cache_path;
  std::string output_path;
  std::string events_path;
  std::string format = "csv";
  std::vector<std::string> checks;
  std::vector<int> d;  // kummer suite primorial indices
  std::string what = "dimension";
};

/// Each command writes its main output to config.output_path, or to out when
/// that is empty, and diagnostics to err. Returns the process exit code.
int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command and maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config, or throws UsageError. --help yields command "help" with text in err.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

struct FitResult {
  double constant = 0, linear = 0, log = 0;
};
/// Least-squares fit y ~ constant + linear * x + log * ln(x).
FitResult fit_const_linear_log(const std::vector<double>& x, const std::vector<double>& y);

std::vector<std::string> known_checks();

}  // namespace arithmorse::cli

#endif  // ARITHMORSE_TOOLS_COMMANDS_HPP
