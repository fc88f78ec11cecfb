#include "cayley8p/report.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley8p {

namespace {

// Brute-force routes materialize 4p(p-1) permutations of 4p points.
constexpr int kDeskScalePrime = 61;

std::string str(const BigInt& v) { return v.str(); }

void add_check(VerificationReport& report, std::string name, bool ok, std::string details,
               CheckStatus on_mismatch = CheckStatus::Fail) {
  report.checks.push_back({std::move(name), ok ? CheckStatus::Pass : on_mismatch, std::move(details)});
}

void compare_to_paper(VerificationReport& report, const std::string& name,
                      const std::string& quantity, const std::string& formula_method,
                      const BigInt& formula, const std::string& oracle_method,
                      const BigInt& oracle) {
  const bool ok = formula == oracle;
  add_check(report, name, ok,
            formula_method + " " + str(formula) + ", " + oracle_method + " " + str(oracle),
            CheckStatus::Flagged);
  if (!ok) report.counts.discrepancies.push_back({quantity, formula_method, formula, oracle_method, oracle});
}

Check group_laws_check(OddPrime p) {
  const auto e = GroupElement::identity(p);
  const auto a = GroupElement::a(p);
  const auto b = GroupElement::b(p);
  std::size_t violations = 0;
  for (const GroupElement& x : all_elements(p)) {
    if (x * inv(x) != e || inv(x) * x != e) ++violations;
    if (element_order(x) != element_order_by_iteration(x)) ++violations;
  }
  if (power(a, 2 * p.value()) != e) ++violations;
  if (power(b, 8) != e) ++violations;
  if (power(b, 4) != power(a, p.value())) ++violations;
  if (inv(b) * a * b != inv(a)) ++violations;
  return {"group_laws", violations == 0 ? CheckStatus::Pass : CheckStatus::Fail,
          std::to_string(violations) + " violations of inverse law, order table or relations"};
}

Check isomorphism_check(OddPrime p) {
  const auto elements = all_elements(p);
  std::vector<char> hit(elements.size(), 0);
  std::size_t violations = 0;
  for (const GroupElement& x : elements) {
    const int idx = iso_f(x).index();
    if (hit[idx]) ++violations;
    hit[idx] = 1;
    for (const GroupElement& y : elements) {
      if (iso_f(x * y) != g_mul(iso_f(x), iso_f(y))) ++violations;
    }
  }
  return {"isomorphism_to_G", violations == 0 ? CheckStatus::Pass : CheckStatus::Fail,
          std::to_string(violations) + " violations over " +
              std::to_string(elements.size() * elements.size()) + " products"};
}

Check automorphism_family_check(const DomainAction& action) {
  const OddPrime p = action.prime();
  const auto e = GroupElement::identity(p);
  const std::uint64_t expected = 4ULL * p.value() * (p.value() - 1);
  std::size_t bad = 0;
  for (const Automorphism& f : action.automorphisms()) {
    const GroupElement fa = f(GroupElement::a(p));
    const GroupElement fb = f(GroupElement::b(p));
    const bool relations = power(fa, 2 * p.value()) == e && power(fb, 8) == e &&
                           power(fb, 4) == power(fa, p.value()) && inv(fb) * fa * fb == inv(fa);
    const auto table = materialize(f);
    std::vector<char> hit(table.size(), 0);
    bool bijective = true;
    for (const GroupElement& y : table) {
      bijective = bijective && !hit[y.index()];
      hit[y.index()] = 1;
    }
    if (!relations || !bijective || map_from_generators(fa, fb) != table) ++bad;
  }
  const bool ok = action.order() == expected && bad == 0;
  return {"automorphism_family", ok ? CheckStatus::Pass : CheckStatus::Fail,
          std::to_string(action.order()) + " automorphisms (expected " + std::to_string(expected) +
              "), " + std::to_string(bad) + " failing the relation/bijectivity check"};
}

Check cycle_type_check(const DomainAction& action) {
  std::size_t mismatches = 0;
  std::size_t malformed = 0;
  std::string first;
  const int points = action.domain().size();
  for (std::size_t t = 0; t < action.order(); ++t) {
    const CycleType brute = cycle_type_of(action.permutations()[t]);
    const CycleType closed = closed_form_cycle_type(action.automorphisms()[t]);
    if (brute.weighted_sum() != points || closed.weighted_sum() != points) ++malformed;
    if (brute != closed && mismatches++ == 0) {
      first = "; first: " + action.automorphisms()[t].to_string() + " brute " + brute.to_string() +
              " closed " + closed.to_string();
    }
  }
  // A cycle type that does not cover the domain is a defect here; a closed
  // form that disagrees with the decomposition is a defect in the formula.
  CheckStatus status = CheckStatus::Pass;
  if (mismatches != 0) status = CheckStatus::Flagged;
  if (malformed != 0) status = CheckStatus::Fail;
  return {"cycle_types", status,
          std::to_string(action.order()) + " automorphisms, " + std::to_string(mismatches) +
              " closed-form mismatches, " + std::to_string(malformed) + " not covering " +
              std::to_string(points) + " points" + first};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

VerifyLevel parse_level(const std::string& name) {
  if (name == "quick") return VerifyLevel::Quick;
  if (name == "full") return VerifyLevel::Full;
  throw std::invalid_argument("unknown level: " + name);
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
  }
  return "?";
}

CountReport make_count_report(OddPrime p) {
  CountReport r;
  r.p = p.value();
  r.aut_order = 4ULL * p.value() * (p.value() - 1);
  r.domain_size = 4 * p.value();
  r.n_total = n_total(p);
  r.n_circulant = n_circulant(p);
  r.n_connected = r.n_total - r.n_circulant * r.n_circulant - 8;
  r.methods["closed_form"] = r.n_total;
  r.methods["cycle_index_eval"] = evaluate(cycle_index_closed_form(p), 2);
  if (p.value() <= kDeskScalePrime) r.methods["burnside"] = burnside_count(p);
  for (const auto& [name, value] : r.methods) {
    if (name != "closed_form" && value != r.n_total) {
      r.discrepancies.push_back({"n_total", "closed_form", r.n_total, name, value});
    }
  }
  return r;
}

bool VerificationReport::has_failure() const {
  for (const Check& c : checks) {
    if (c.status == CheckStatus::Fail) return true;
  }
  return false;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport run_verify(OddPrime p, VerifyLevel level, const SweepOptions& options) {
  if (p.value() > kDeskScalePrime) {
    throw std::invalid_argument("verify supports p <= " + std::to_string(kDeskScalePrime));
  }
  if (level == VerifyLevel::Full && p.value() > options.cap) {
    throw std::invalid_argument("full verification refused: p = " + std::to_string(p.value()) +
                                " exceeds the oracle cap " + std::to_string(options.cap) +
                                " (raise it with --max-oracle-p)");
  }
  VerificationReport report;
  report.p = p.value();
  report.level = level;
  report.counts = make_count_report(p);

  const auto action = shared_action(p);
  report.checks.push_back(group_laws_check(p));
  report.checks.push_back(isomorphism_check(p));
  report.checks.push_back(automorphism_family_check(*action));
  report.checks.push_back(cycle_type_check(*action));

  const CycleIndexPoly closed = cycle_index_closed_form(p);
  const CycleIndexPoly brute = cycle_index_bruteforce(p);
  add_check(report, "cycle_index", closed == brute,
            std::to_string(closed.terms().size()) + " closed-form terms vs " +
                std::to_string(brute.terms().size()) + " brute-force terms",
            CheckStatus::Flagged);
  add_check(report, "cycle_index_at_1", evaluate(closed, 1) == 1 && evaluate(brute, 1) == 1,
            "P(1,...,1) for both constructions");

  // Routes that must agree by construction: the closed N against the closed
  // cycle index, and the decomposed cycle index against Burnside.
  const auto& m = report.counts.methods;
  const BigInt closed_eval = m.at("cycle_index_eval");
  add_check(report, "n_total_formula_routes", closed_eval == report.counts.n_total,
            "closed_form " + str(report.counts.n_total) + ", cycle_index_eval " + str(closed_eval));
  if (const auto it = m.find("burnside"); it != m.end()) {
    const BigInt brute_eval = evaluate(brute, 2);
    add_check(report, "n_total_oracle_routes", brute_eval == it->second,
              "brute-force cycle index at 2 " + str(brute_eval) + ", burnside " + str(it->second));
    add_check(report, "n_total_formula_vs_burnside", it->second == report.counts.n_total,
              "closed_form " + str(report.counts.n_total) + ", burnside " + str(it->second),
              CheckStatus::Flagged);
  }

  if (level == VerifyLevel::Full) {
    const OrbitCensus census = orbit_census(p, options);
    const BigInt disconnected = disconnected_orbit_count_burnside(p, options);
    const BigInt oracle_nc = circulant_orbit_count(p);
    report.census = census;
    report.circulant_oracle = oracle_nc;
    report.counts.methods["orbit_partition"] = census.total_orbits;
    report.counts.methods["oracle_circulant"] = oracle_nc;
    report.counts.methods["oracle_connected"] = census.connected_orbits;

    const BigInt burnside = burnside_count(p);
    add_check(report, "orbit_partition_vs_burnside", BigInt(census.total_orbits) == burnside,
              "orbit partition " + std::to_string(census.total_orbits) + ", Burnside " + str(burnside));
    add_check(report, "connected_partition",
              BigInt(census.connected_orbits) + disconnected == BigInt(census.total_orbits),
              "connected " + std::to_string(census.connected_orbits) + " + disconnected (Burnside) " +
                  str(disconnected) + " vs total " + std::to_string(census.total_orbits));
    add_check(report, "disconnected_partition",
              BigInt(census.a_only_orbits + census.b_touching_orbits) == disconnected,
              "a_only " + std::to_string(census.a_only_orbits) + " + b_touching " +
                  std::to_string(census.b_touching_orbits) + " vs disconnected " + str(disconnected));

    const BigInt nc = report.counts.n_circulant;
    compare_to_paper(report, "circulant_formula_vs_oracle", "n_circulant", "closed_form",
                     nc, "oracle_circulant", oracle_nc);
    compare_to_paper(report, "connected_formula_vs_oracle", "n_connected", "closed_form",
                     report.counts.n_connected, "oracle_connected", census.connected_orbits);
    compare_to_paper(report, "a_only_vs_circulant_squared", "a_only_orbits", "closed_form",
                     nc * nc, "orbit_partition", census.a_only_orbits);
    compare_to_paper(report, "b_touching_vs_eight", "b_touching_orbits", "closed_form", 8,
                     "orbit_partition", census.b_touching_orbits);
  }
  return report;
}

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["aut_order"] = r.aut_order;
  j["domain_size"] = r.domain_size;
  j["n_total"] = str(r.n_total);
  j["n_circulant"] = str(r.n_circulant);
  j["n_connected"] = str(r.n_connected);
  j["methods"] = nlohmann::json::object();
  for (const auto& [name, value] : r.methods) j["methods"][name] = str(value);
  j["discrepancies"] = nlohmann::json::array();
  for (const Discrepancy& d : r.discrepancies) {
    j["discrepancies"].push_back({{"quantity", d.quantity},
                                  {"method_a", d.method_a},
                                  {"value_a", str(d.value_a)},
                                  {"method_b", d.method_b},
                                  {"value_b", str(d.value_b)}});
  }
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["level"] = r.level == VerifyLevel::Quick ? "quick" : "full";
  j["status"] = r.has_failure() ? "fail" : "pass";
  j["checks"] = nlohmann::json::array();
  for (const Check& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  j["counts"] = to_json(r.counts);
  if (r.census) {
    j["census"] = {{"total_orbits", r.census->total_orbits},
                   {"connected_orbits", r.census->connected_orbits},
                   {"a_only_orbits", r.census->a_only_orbits},
                   {"b_touching_orbits", r.census->b_touching_orbits}};
  }
  return j;
}

nlohmann::json cycle_index_to_json(const CycleIndexPoly& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    nlohmann::json mono = nlohmann::json::array();
    for (auto [k, e] : it->first.exponents()) mono.push_back({k, e});
    terms.push_back({{"coeff_num", str(boost::multiprecision::numerator(it->second))},
                     {"coeff_den", str(boost::multiprecision::denominator(it->second))},
                     {"monomial", mono}});
  }
  return terms;
}

std::string render_count(const CountReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(r).dump() + "\n";
    case OutputFormat::Csv: return render_table({r}, OutputFormat::Csv);
    case OutputFormat::Text: break;
  }
  std::ostringstream out;
  out << "p            " << r.p << "\n"
      << "|Aut|        " << r.aut_order << "\n"
      << "|D|          " << r.domain_size << "\n"
      << "N            " << r.n_total << "\n"
      << "N_c          " << r.n_circulant << "\n"
      << "N'           " << r.n_connected << "\n";
  for (const auto& [name, value] : r.methods) out << "  " << name << ": " << value << "\n";
  for (const Discrepancy& d : r.discrepancies) {
    out << "  DISCREPANCY " << d.quantity << ": " << d.method_a << "=" << d.value_a << " vs "
        << d.method_b << "=" << d.value_b << "\n";
  }
  return out.str();
}

std::string render_table(const std::vector<CountReport>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j = nlohmann::json::array();
      for (const CountReport& r : rows) j.push_back(to_json(r));
      return j.dump() + "\n";
    }
    case OutputFormat::Csv:
      out << kCsvHeader << "\n";
      for (const CountReport& r : rows) {
        out << r.p << "," << r.n_total << "," << r.n_circulant << "," << r.n_connected << "\n";
      }
      return out.str();
    case OutputFormat::Text: break;
  }
  std::size_t width = 1;
  for (const CountReport& r : rows) width = std::max(width, r.n_total.str().size());
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  out << pad("p", 4) << "  " << pad("N", width) << "  " << pad("N_c", 8) << "  " << pad("N'", width) << "\n";
  for (const CountReport& r : rows) {
    out << pad(std::to_string(r.p), 4) << "  " << pad(r.n_total.str(), width) << "  "
        << pad(r.n_circulant.str(), 8) << "  " << pad(r.n_connected.str(), width) << "\n";
  }
  return out.str();
}

std::string render_verify(const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "name,status,details\n";
    for (const Check& c : r.checks) out << c.name << "," << to_string(c.status) << ",\"" << c.details << "\"\n";
    return out.str();
  }
  out << "verify p=" << r.p << " level=" << (r.level == VerifyLevel::Quick ? "quick" : "full") << "\n";
  std::size_t flagged = 0;
  for (const Check& c : r.checks) {
    if (c.status == CheckStatus::Flagged) ++flagged;
    const std::string tag = std::string("[") + to_string(c.status) + "]";
    out << "  " << tag << std::string(10 - tag.size(), ' ') << c.name << ": " << c.details << "\n";
  }
  out << "result: " << (r.has_failure() ? "fail" : "pass");
  if (flagged != 0) out << " (" << flagged << " flagged)";
  out << "\n";
  return out.str();
}

}  // namespace cayley8p
