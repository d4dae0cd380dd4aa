#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoclosure::cli {

enum class OutputFormat { csv, markdown, json };

struct NRange {
  std::int64_t from = 1;
  std::int64_t to = 1;
};

/// Bad flags or operands. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "MONOCLOSURE_WORKERS";

struct RunConfig {
  /// member | closure | growth | verify | oracle-check
  std::string command;
  /// verify only: intersection | radical-swap | counterexample | rees | constant
  std::string check;
  /// Ideal and monomial texts in command order.
  std::vector<std::string> operands;
  /// Inferred from the operands when absent.
  std::optional<std::size_t> dimension;
  std::optional<NRange> n_range;
  std::optional<std::int64_t> claimed_c;
  /// verify counterexample: a single k instead of the sampled ones.
  std::optional<std::int64_t> k;
  /// growth: J as ideal text; the maximal ideal when absent.
  std::optional<std::string> modulus;
  OutputFormat format = OutputFormat::csv;
  std::size_t k_max = 60;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::size_t cases = 200;

  /// Throws UsageError describing the first problem found.
  void validate() const;
};

/// "A..B" or a single "N". Throws UsageError.
NRange parse_n_range(const std::string& text);

/// Builds a validated RunConfig. `env_workers` is the raw value of
/// MONOCLOSURE_WORKERS (nullptr when unset); --workers wins over it.
/// Throws UsageError; returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, const char* env_workers,
                                            std::ostream& out);

}  // namespace monoclosure::cli
