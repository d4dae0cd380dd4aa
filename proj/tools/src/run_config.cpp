#include "monoclosure/cli/run_config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <ostream>

namespace monoclosure::cli {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError(what + ": not an integer: '" + text + "'");
  return value;
}

// Operand count per command (and per check for verify).
std::size_t expected_operands(const RunConfig& c) {
  static const std::map<std::string, std::size_t> commands{
      {"member", 2}, {"closure", 1}, {"growth", 1}, {"oracle-check", 0}};
  static const std::map<std::string, std::size_t> checks{
      {"intersection", 2}, {"radical-swap", 2}, {"counterexample", 0}, {"rees", 1}, {"constant", 1}};
  if (c.command == "verify") {
    const auto it = checks.find(c.check);
    if (it == checks.end()) {
      throw UsageError("unknown check '" + c.check +
                       "' (expected intersection, radical-swap, counterexample, rees or constant)");
    }
    return it->second;
  }
  const auto it = commands.find(c.command);
  if (it == commands.end()) throw UsageError("unknown command '" + c.command + "'");
  return it->second;
}

}  // namespace

NRange parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string::npos) {
    r.from = r.to = parse_int(text, "--n");
  } else {
    r.from = parse_int(text.substr(0, dots), "--n");
    r.to = parse_int(text.substr(dots + 2), "--n");
  }
  if (r.from < 1 || r.from > r.to) throw UsageError("--n needs 1 <= A <= B, got '" + text + "'");
  return r;
}

void RunConfig::validate() const {
  const std::size_t want = expected_operands(*this);
  const std::string name = command == "verify" ? "verify " + check : command;
  if (operands.size() != want) {
    throw UsageError(name + " takes " + std::to_string(want) + " operand(s), got " +
                     std::to_string(operands.size()));
  }
  const bool needs_range = command == "growth" || command == "verify";
  if (needs_range && !n_range) throw UsageError(name + " needs --n A..B");
  if (n_range && (n_range->from < 1 || n_range->from > n_range->to)) throw UsageError("--n needs 1 <= A <= B");
  if (claimed_c && *claimed_c < 1) throw UsageError("--c must be positive");
  if (claimed_c && !(command == "growth" || (command == "verify" && check == "constant"))) {
    throw UsageError("--c applies to growth and verify constant only");
  }
  if (modulus && command != "growth") throw UsageError("--modulus applies to growth only");
  if (k && !(command == "verify" && check == "counterexample")) {
    throw UsageError("--k applies to verify counterexample only");
  }
  if (k && *k < 0) throw UsageError("--k must be nonnegative");
  if (dimension && *dimension == 0) throw UsageError("--dim must be positive");
  if (k_max == 0) throw UsageError("--kmax must be positive");
  if (workers == 0) throw UsageError("--workers must be positive");
  if (cases == 0) throw UsageError("--cases must be positive");
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, const char* env_workers,
                                            std::ostream& out) {
  RunConfig config;
  CLI::App app{"Integral closures and growth bounds for monomial ideals", "monoclosure"};
  app.require_subcommand(1);

  std::optional<std::size_t> dim;
  std::string n_text;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> k;
  std::optional<std::string> modulus;
  std::string format = "csv";
  std::optional<std::size_t> workers;

  app.add_option("--dim", dim, "Number of variables (default: highest index used)");
  app.add_option("--n", n_text, "Range A..B of exponents n");
  app.add_option("--c", c, "Claimed constant c, checked as f(n) >= floor(n/c)");
  app.add_option("--k", k, "verify counterexample: test this k only");
  app.add_option("--modulus", modulus, "Ideal J replacing m in growth");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "markdown", "json"}));
  app.add_option("--kmax", config.k_max, "Largest power tried by the power-witness oracle")->capture_default_str();
  app.add_option("--workers", workers, std::string("Worker threads (default: $") + kWorkersEnv + " or 1)");
  app.add_option("--seed", config.seed, "Seed for oracle-check")->capture_default_str();
  app.add_option("--cases", config.cases, "Random ideals for oracle-check")->capture_default_str();

  std::vector<std::string> operands;
  auto add_command = [&](const char* name, const char* help, const char* operand_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (operand_help) sub->add_option("operands", operands, operand_help);
    return sub;
  };
  add_command("member", "Decide whether a monomial lies in the integral closure", "IDEAL MONOMIAL");
  add_command("closure", "Minimal generators of the integral closure", "IDEAL");
  add_command("growth", "Tabulate f(n) over --n", "IDEAL");
  CLI::App* verify = add_command("verify", "Run a containment check over --n", nullptr);
  verify->add_option("check", config.check, "intersection | radical-swap | counterexample | rees | constant")
      ->required();
  verify->add_option("operands", operands, "Ideals the check needs");
  add_command("oracle-check", "Compare the hull test with power witnesses on random ideals", nullptr);

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

  config.command = app.get_subcommands().front()->get_name();
  config.operands = std::move(operands);
  config.dimension = dim;
  if (!n_text.empty()) config.n_range = parse_n_range(n_text);
  config.claimed_c = c;
  config.k = k;
  config.modulus = modulus;
  config.format = format == "json" ? OutputFormat::json : format == "markdown" ? OutputFormat::markdown
                                                                                : OutputFormat::csv;
  if (workers) {
    config.workers = *workers;
  } else if (env_workers && *env_workers) {
    const auto value = parse_int(env_workers, kWorkersEnv);
    if (value < 1) throw UsageError(std::string(kWorkersEnv) + " must be positive");
    config.workers = static_cast<std::size_t>(value);
  }
  config.validate();
  return config;
}

}  // namespace monoclosure::cli
