#include "monoclosure/cli/run.hpp"

#include "monoclosure/bound_lab.hpp"
#include "monoclosure/cli/table.hpp"
#include "monoclosure/errors.hpp"
#include "monoclosure/ideal_text.hpp"
#include "monoclosure/newton_closure.hpp"

#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <random>
#include <set>

namespace monoclosure::cli {

namespace {

using nlohmann::json;

struct Report {
  Table table;
  json doc;
  /// When set, printed as-is for csv and markdown instead of the table.
  std::optional<std::string> plain;
  int exit_code = kOk;
};

std::string yes_no(bool value) { return value ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += to_string(items[i]);
  }
  return out + "]";
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json monomials(const std::vector<ExponentVector>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(format_monomial(v));
  return out;
}

json integer(const Integer& value) {
  if (const auto small = to_int64(value)) return *small;
  return value.str();
}

json growth_value(const GrowthValue& g) { return g.is_infinite() ? json("inf") : integer(g.value()); }

json certificate_json(const HullCertificate& cert, const ExponentVector& beta) {
  json out;
  out["columns"] = monomials(cert.columns);
  if (cert.feasible()) {
    out["kind"] = "convex";
    out["weights"] = rationals(cert.convex().weights);
    out["slacks"] = rationals(cert.convex().slacks);
  } else {
    out["kind"] = "separator";
    out["normal"] = rationals(cert.separator().normal);
    out["level"] = to_string(cert.separator().level);
  }
  out["valid"] = certificate_valid(cert, beta);
  return out;
}

json power_witness_json(const std::optional<PowerWitness>& w) {
  if (!w) return nullptr;
  return json{{"k", w->k}, {"factors", monomials(w->factors)}};
}

/// First generator of `a` outside `b`, if any.
std::optional<ExponentVector> escaping_generator(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : materialize(a).generators()) {
    if (!b.contains(g)) return g;
  }
  return std::nullopt;
}

std::size_t resolve_dimension(const RunConfig& config) {
  if (config.dimension) return *config.dimension;
  std::optional<std::size_t> best;
  auto consider = [&](const std::string& text) {
    const auto d = infer_dimension(text);
    if (d && (!best || *d > *best)) best = d;
  };
  for (const auto& op : config.operands) consider(op);
  if (config.modulus) consider(*config.modulus);
  if (!best) throw UsageError("cannot infer the dimension from the operands; pass --dim");
  return *best;
}

Report member(const RunConfig& config) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  const ExponentVector beta = parse_monomial(config.operands[1], dim);

  Report r;
  r.table.header = {"field", "value"};
  r.table.add({"ideal", format_ideal(ideal)});
  r.table.add({"monomial", format_monomial(beta)});
  r.table.add({"in_ideal", yes_no(ideal.contains(beta))});
  r.doc = {{"command", "member"},
           {"dimension", dim},
           {"ideal", format_ideal(ideal)},
           {"monomial", format_monomial(beta)},
           {"in_ideal", ideal.contains(beta)}};
  if (ideal.is_zero()) {
    r.table.add({"in_closure", "false"});
    r.doc["in_closure"] = false;
    r.doc["certificate"] = nullptr;
    return r;
  }

  const HullCertificate cert = hull_membership(ideal, beta);
  const bool valid = certificate_valid(cert, beta);
  const auto witness = power_witness(ideal, beta, config.k_max);
  r.table.add({"in_closure", yes_no(cert.feasible())});
  if (cert.feasible()) {
    r.table.add({"certificate", "convex"});
    r.table.add({"weights", join(cert.convex().weights)});
    r.table.add({"slacks", join(cert.convex().slacks)});
  } else {
    r.table.add({"certificate", "separator"});
    r.table.add({"normal", join(cert.separator().normal)});
    r.table.add({"level", to_string(cert.separator().level)});
  }
  r.table.add({"certificate_valid", yes_no(valid)});
  r.table.add({"power_witness_k", witness ? std::to_string(witness->k) : "none"});
  if (witness) {
    std::vector<std::string> names;
    for (const auto& f : witness->factors) names.push_back(format_monomial(f));
    std::string list = "[";
    for (std::size_t i = 0; i < names.size(); ++i) list += (i ? ", " : "") + names[i];
    r.table.add({"power_witness_factors", list + "]"});
  }
  r.doc["in_closure"] = cert.feasible();
  r.doc["certificate"] = certificate_json(cert, beta);
  r.doc["power_witness"] = power_witness_json(witness);
  r.doc["k_max"] = config.k_max;
  if (!valid || (witness && !cert.feasible())) r.exit_code = kVerificationFailed;
  return r;
}

Report closure(const RunConfig& config) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  const MonomialIdeal closed = integral_closure(ideal);
  Report r;
  r.plain = format_generators(closed) + "\n";
  r.doc = {{"command", "closure"},
           {"dimension", dim},
           {"ideal", format_ideal(ideal)},
           {"closure", monomials(closed.generators())},
           {"integrally_closed", closed == materialize(ideal)}};
  return r;
}

Report growth_table(const GrowthReport& report, const std::string& command, std::ostream& err) {
  Report r;
  r.table.header = {"n", "f_n", "floor_n_over_c", "verified"};
  json rows = json::array();
  const std::size_t dim = report.ideal.dim();
  for (const auto& row : report.rows) {
    r.table.add({std::to_string(row.n), row.point.f.str(),
                 row.floor_n_over_c ? std::to_string(*row.floor_n_over_c) : "",
                 row.verified ? yes_no(*row.verified) : ""});
    json j = {{"n", row.n}, {"f_n", growth_value(row.point.f)}};
    if (row.floor_n_over_c) j["floor_n_over_c"] = *row.floor_n_over_c;
    if (row.verified) j["verified"] = *row.verified;
    if (row.point.witness) {
      // The escaping generator, certified as a member of closure(I + J^n)
      // and, by its hull certificate, as a non-member of closure(I).
      const auto& g = *row.point.witness;
      const MonomialIdeal big = sum(report.ideal, power(report.modulus, row.n));
      j["witness"] = format_monomial(g);
      j["certificate"] = certificate_json(hull_membership(big, g), g);
      if (!report.ideal.is_zero()) j["outside_certificate"] = certificate_json(hull_membership(report.ideal, g), g);
    }
    rows.push_back(std::move(j));
    if (row.verified && !*row.verified) {
      r.exit_code = kVerificationFailed;
      err << "verification failed at n=" << row.n << ": "
          << (row.point.witness ? format_monomial(*row.point.witness) : std::string("?")) << " has order "
          << row.point.f.str() << " < floor(n/c) = " << *row.floor_n_over_c << "\n";
    }
  }
  r.doc = {{"command", command},
           {"dimension", dim},
           {"ideal", format_ideal(report.ideal)},
           {"modulus", format_ideal(report.modulus)},
           {"claimed_c", report.claimed_c ? json(*report.claimed_c) : json(nullptr)},
           {"empirical_c", report.empirical_c},
           {"rows", std::move(rows)}};
  return r;
}

Report growth(const RunConfig& config, std::ostream& err) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  const MonomialIdeal modulus = config.modulus ? parse_ideal(*config.modulus, dim) : m_power(dim, 1);
  const auto report =
      growth_report(ideal, modulus, config.n_range->from, config.n_range->to, config.claimed_c, config.workers);
  return growth_table(report, "growth", err);
}

Report verify_constant(const RunConfig& config, std::ostream& err) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  std::optional<std::int64_t> c = config.claimed_c;
  if (!c) {
    const auto product = pure_power_constant(ideal);
    if (!product) throw UsageError("the ideal is not generated by pure powers of distinct variables; pass --c");
    const auto small = to_int64(*product);
    if (!small) throw UsageError("the product of exponents does not fit in 64 bits");
    c = *small;
  }
  const auto report =
      growth_report(ideal, m_power(dim, 1), config.n_range->from, config.n_range->to, c, config.workers);
  return growth_table(report, "verify constant", err);
}

Report verify_intersection(const RunConfig& config, std::ostream& err) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal first = parse_ideal(config.operands[0], dim);
  const MonomialIdeal second = parse_ideal(config.operands[1], dim);
  const auto report =
      verify_intersection_lemma(first, second, config.n_range->from, config.n_range->to, config.workers);
  Report r;
  r.table.header = {"n", "f_n", "factor_exponent", "lemma_exponent", "inside_factor_sums", "inside_lemma_bound"};
  json rows = json::array();
  for (const auto& row : report.rows) {
    r.table.add({std::to_string(row.n), row.f.str(), std::to_string(row.factor_exponent),
                 std::to_string(row.lemma_exponent), yes_no(row.inside_factor_sums),
                 yes_no(row.inside_lemma_bound)});
    rows.push_back({{"n", row.n},
                    {"f_n", growth_value(row.f)},
                    {"factor_exponent", row.factor_exponent},
                    {"lemma_exponent", row.lemma_exponent},
                    {"inside_factor_sums", row.inside_factor_sums},
                    {"inside_lemma_bound", row.inside_lemma_bound}});
    if (row.inside_factor_sums && row.inside_lemma_bound) continue;
    r.exit_code = kVerificationFailed;
    const MonomialIdeal big = integral_closure(sum(report.intersection, m_power(dim, row.n)));
    const MonomialIdeal target = row.inside_factor_sums
                                     ? sum(report.intersection, m_power(dim, row.lemma_exponent))
                                     : intersection(sum(first, m_power(dim, row.factor_exponent)),
                                                    sum(second, m_power(dim, row.factor_exponent)));
    const auto g = escaping_generator(big, target);
    err << "verification failed at n=" << row.n << ": " << (g ? format_monomial(*g) : std::string("?"))
        << (row.inside_factor_sums ? " escapes the lemma bound\n" : " escapes the factor sums\n");
  }
  r.doc = {{"command", "verify intersection"},
           {"dimension", dim},
           {"first", format_ideal(first)},
           {"second", format_ideal(second)},
           {"intersection", format_ideal(report.intersection)},
           {"c_first", report.c_first},
           {"c_second", report.c_second},
           {"artin_rees_offset", report.artin_rees_offset},
           {"smallest_c", report.smallest_c},
           {"holds", report.holds()},
           {"rows", std::move(rows)}};
  return r;
}

Report verify_radical(const RunConfig& config, std::ostream& err) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  const MonomialIdeal modulus = parse_ideal(config.operands[1], dim);
  const auto report = verify_radical_swap(ideal, modulus, config.n_range->from, config.n_range->to, config.workers);
  Report r;
  r.table.header = {"n", "f_n", "g_n", "g_n_over_k", "forward_chain", "backward_chain"};
  json rows = json::array();
  for (const auto& row : report.rows) {
    r.table.add({std::to_string(row.n), row.f.str(), row.g.str(), row.g_at_n_over_k.str(),
                 yes_no(row.forward_chain), yes_no(row.backward_chain)});
    rows.push_back({{"n", row.n},
                    {"f_n", growth_value(row.f)},
                    {"g_n", growth_value(row.g)},
                    {"g_n_over_k", growth_value(row.g_at_n_over_k)},
                    {"forward_chain", row.forward_chain},
                    {"backward_chain", row.backward_chain}});
    if (row.forward_chain && row.backward_chain) continue;
    r.exit_code = kVerificationFailed;
    const auto& K = report.radical_of_modulus;
    const std::int64_t q = row.n / report.k;
    std::optional<ExponentVector> g;
    if (!row.forward_chain) {
      g = escaping_generator(integral_closure(sum(ideal, power(modulus, row.n))),
                             integral_closure(sum(ideal, power(K, row.n))));
    } else {
      g = escaping_generator(integral_closure(sum(ideal, power(K, row.n))),
                             integral_closure(sum(ideal, power(modulus, q))));
    }
    err << "verification failed at n=" << row.n << ": "
        << (g ? format_monomial(*g) + " escapes the containment"
              : std::string("containment holds but the order inequality fails"))
        << (row.forward_chain ? " (backward chain)\n" : " (forward chain)\n");
  }
  r.doc = {{"command", "verify radical-swap"},
           {"dimension", dim},
           {"ideal", format_ideal(ideal)},
           {"modulus", format_ideal(modulus)},
           {"radical", format_ideal(report.radical_of_modulus)},
           {"k", report.k},
           {"f_rate", report.f_rate},
           {"g_rate", report.g_rate},
           {"holds", report.holds()},
           {"rows", std::move(rows)}};
  return r;
}

Report verify_counterexample(const RunConfig& config, std::ostream& err) {
  Report r;
  r.table.header = {"n", "k", "monomial", "holds"};
  json rows = json::array();
  for (std::int64_t n = config.n_range->from; n <= config.n_range->to; ++n) {
    if (n % 2 != 0 || n < 6) continue;
    // Valid k satisfy n - k - 1 > n/2, i.e. k <= n/2 - 2.
    const std::int64_t top = n / 2 - 2;
    std::set<std::int64_t> ks;
    if (config.k) {
      if (*config.k <= top) ks.insert(*config.k);
    } else {
      ks = {0, top / 2, top};
    }
    const std::string mono = "x*y^" + std::to_string(n / 2);
    for (const std::int64_t k : ks) {
      const bool holds = counterexample_check(n, k);
      r.table.add({std::to_string(n), std::to_string(k), mono, yes_no(holds)});
      rows.push_back({{"n", n}, {"k", k}, {"monomial", mono}, {"holds", holds}});
      if (!holds) {
        r.exit_code = kVerificationFailed;
        err << "verification failed at n=" << n << ", k=" << k << ": " << mono << "\n";
      }
    }
  }
  if (r.table.rows.empty()) throw UsageError("no even n >= 6 in --n admits the requested k");
  r.doc = {{"command", "verify counterexample"}, {"dimension", 2}, {"rows", std::move(rows)}};
  return r;
}

Report verify_rees(const RunConfig& config, std::ostream& err) {
  const std::size_t dim = resolve_dimension(config);
  const MonomialIdeal ideal = parse_ideal(config.operands[0], dim);
  const auto report =
      growth_report(ideal, m_power(dim, 1), config.n_range->from, config.n_range->to, std::nullopt, config.workers);
  const auto gaps = additive_gaps(report);
  Report r;
  r.table.header = {"n", "f_n", "gap"};
  json rows = json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    r.table.add({std::to_string(row.n), row.point.f.str(), gaps[i] ? gaps[i]->str() : "inf"});
    rows.push_back({{"n", row.n},
                    {"f_n", growth_value(row.point.f)},
                    {"gap", gaps[i] ? integer(*gaps[i]) : json("inf")},
                    {"witness", row.point.witness ? json(format_monomial(*row.point.witness)) : json(nullptr)}});
  }
  const bool bounded = gaps_bounded(gaps);
  if (!bounded) {
    r.exit_code = kVerificationFailed;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] && (!gaps[worst] || *gaps[i] > *gaps[worst])) worst = i;
    }
    const auto& row = report.rows[worst];
    err << "verification failed at n=" << row.n << ": "
        << (row.point.witness ? format_monomial(*row.point.witness) : std::string("?"))
        << " gives the largest gap, above the final one\n";
  }
  r.doc = {{"command", "verify rees"},
           {"dimension", dim},
           {"ideal", format_ideal(ideal)},
           {"bounded", bounded},
           {"rows", std::move(rows)}};
  return r;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> exponent(0, 5);
  std::vector<ExponentVector> gens;
  const int n = count(rng);
  while (static_cast<int>(gens.size()) < n) {
    std::vector<Integer> coords(dim);
    for (auto& c : coords) c = exponent(rng);
    ExponentVector v(std::move(coords));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return MonomialIdeal::from_generators(dim, std::move(gens));
}

void degree_box(std::size_t dim, std::int64_t max_degree, std::vector<Integer>& coords, std::size_t pos,
                std::vector<ExponentVector>& out) {
  if (pos == dim) {
    out.emplace_back(coords);
    return;
  }
  for (std::int64_t v = 0; v <= max_degree; ++v) {
    coords[pos] = v;
    degree_box(dim, max_degree - v, coords, pos + 1, out);
  }
  coords[pos] = 0;
}

Report oracle_check(const RunConfig& config, std::ostream& err) {
  constexpr std::int64_t kBoxDegree = 12;
  std::mt19937_64 rng(config.seed);
  Report r;
  r.table.header = {"case", "dimension", "ideal", "points", "in_closure", "witnessed", "one_sided",
                    "contradictions", "invalid_certificates"};
  json cases = json::array();
  std::size_t total_one_sided = 0, total_contradictions = 0, total_invalid = 0;
  for (std::size_t c = 0; c < config.cases; ++c) {
    const std::size_t dim = config.dimension ? *config.dimension : 1 + c % 3;
    const MonomialIdeal ideal = random_ideal(rng, dim);
    std::vector<ExponentVector> box;
    std::vector<Integer> coords(dim, Integer(0));
    degree_box(dim, kBoxDegree, coords, 0, box);
    std::size_t feasible = 0, witnessed = 0, invalid = 0;
    json one_sided = json::array(), contradictions = json::array();
    for (const auto& beta : box) {
      const auto cert = hull_membership(ideal, beta);
      const auto w = power_witness(ideal, beta, config.k_max);
      if (!certificate_valid(cert, beta) || (w && !power_witness_valid(ideal, beta, *w))) {
        ++invalid;
        err << "case " << c << " " << format_ideal(ideal) << ": invalid certificate for "
            << format_monomial(beta) << "\n";
      }
      if (cert.feasible()) ++feasible;
      if (w) ++witnessed;
      if (cert.feasible() && !w) one_sided.push_back(format_monomial(beta));
      if (!cert.feasible() && w) {
        contradictions.push_back(format_monomial(beta));
        err << "case " << c << " " << format_ideal(ideal) << ": " << format_monomial(beta)
            << " has a power witness but no hull certificate\n";
      }
    }
    r.table.add({std::to_string(c), std::to_string(dim), format_ideal(ideal), std::to_string(box.size()),
                 std::to_string(feasible), std::to_string(witnessed), std::to_string(one_sided.size()),
                 std::to_string(contradictions.size()), std::to_string(invalid)});
    total_one_sided += one_sided.size();
    total_contradictions += contradictions.size();
    total_invalid += invalid;
    cases.push_back({{"case", c},
                     {"dimension", dim},
                     {"ideal", format_ideal(ideal)},
                     {"points", box.size()},
                     {"in_closure", feasible},
                     {"witnessed", witnessed},
                     {"one_sided", std::move(one_sided)},
                     {"contradictions", std::move(contradictions)},
                     {"invalid_certificates", invalid}});
  }
  if (total_contradictions || total_invalid) r.exit_code = kVerificationFailed;
  r.doc = {{"command", "oracle-check"},
           {"seed", config.seed},
           {"k_max", config.k_max},
           {"box_degree", kBoxDegree},
           {"one_sided", total_one_sided},
           {"contradictions", total_contradictions},
           {"invalid_certificates", total_invalid},
           {"cases", std::move(cases)}};
  return r;
}

Report dispatch(const RunConfig& config, std::ostream& err) {
  if (config.command == "member") return member(config);
  if (config.command == "closure") return closure(config);
  if (config.command == "growth") return growth(config, err);
  if (config.command == "oracle-check") return oracle_check(config, err);
  if (config.check == "intersection") return verify_intersection(config, err);
  if (config.check == "radical-swap") return verify_radical(config, err);
  if (config.check == "counterexample") return verify_counterexample(config, err);
  if (config.check == "rees") return verify_rees(config, err);
  return verify_constant(config, err);
}

/// Which operand a parse error belongs to is unknown here, so every operand
/// that fails to parse on its own is echoed with a caret.
void explain_parse_error(const RunConfig& config, std::ostream& err) {
  std::vector<std::string> texts = config.operands;
  if (config.modulus) texts.push_back(*config.modulus);
  for (const auto& text : texts) {
    try {
      parse_expression(text, config.dimension ? config.dimension : infer_dimension(text));
    } catch (const ParseError& e) {
      err << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    config.validate();
    report = dispatch(config, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    explain_parse_error(config, err);
    return kUsage;
  } catch (const std::invalid_argument& e) {  // PreconditionError, DimensionMismatch
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  switch (config.format) {
    case OutputFormat::json:
      out << report.doc.dump(2) << "\n";
      break;
    case OutputFormat::csv:
      if (report.plain) out << *report.plain;
      else write_csv(report.table, out);
      break;
    case OutputFormat::markdown:
      if (report.plain) out << *report.plain;
      else write_markdown(report.table, out);
      break;
  }
  return report.exit_code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_command_line(argc, argv, std::getenv(kWorkersEnv), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }
  if (!config) return kOk;
  return run(*config, out, err);
}

}  // namespace monoclosure::cli
