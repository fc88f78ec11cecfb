// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cayley8p/oracle.hpp"
#include "cayley8p/report.hpp"

using namespace cayley8p;

namespace {

struct Outcome {
  bool ok = true;
  std::string details;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<int> kTablePrimes = {3, 5, 7, 11, 13};

std::vector<int> odd_primes_up_to(int n) {
  std::vector<int> out;
  for (int q = 3; q <= n; q += 2) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

Outcome reference_n() {
  const char* expected[] = {"432", "18144", "1824384", "41253667584", "7330997009984"};
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < kTablePrimes.size(); ++i) {
    const OddPrime p(kTablePrimes[i]);
    const BigInt want(expected[i]);
    const BigInt direct = n_total(p);
    const BigInt via_index = evaluate(cycle_index_closed_form(p), 2);
    if (direct != want || via_index != want) {
      o.ok = false;
      o.details += " p=" + std::to_string(p.value()) + ": formula " + direct.str() + ", cycle index " +
                   via_index.str() + ", expected " + want.str() + ";";
    }
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.ok = false;
  o.details += " " + std::to_string(t) + " s";
  return o;
}

Outcome burnside_matches_formula() {
  Outcome o;
  const auto t0 = Clock::now();
  int mismatches = 0;
  for (int q : odd_primes_up_to(23)) {
    const OddPrime p(q);
    const BigInt b = burnside_count(p);
    const BigInt n = n_total(p);
    if (b != n) {
      o.ok = false;
      if (mismatches++ < 3) o.details += " p=" + std::to_string(q) + ": burnside " + b.str() + " vs formula " + n.str() + ";";
    }
  }
  if (mismatches > 3) o.details += " ... " + std::to_string(mismatches) + " primes disagree;";
  const double t = seconds_since(t0);
  if (t >= 1.0) o.ok = false;
  o.details += " " + std::to_string(t) + " s";
  return o;
}

Outcome orbit_partition() {
  Outcome o;
  auto t0 = Clock::now();
  const BigInt c3 = orbit_partition_count(OddPrime(3), {5, 1});
  const double t3 = seconds_since(t0);
  t0 = Clock::now();
  const OrbitCensus one = orbit_census(OddPrime(5), {5, 1});
  const double t5 = seconds_since(t0);
  t0 = Clock::now();
  const OrbitCensus many = orbit_census(OddPrime(5), {5, 0});
  const double t5p = seconds_since(t0);
  const bool identical = one == many && orbit_census(OddPrime(5), {5, 3}) == one;
  o.ok = c3 == 432 && one.total_orbits == 18144 && identical && t3 < 1.0 && t5 < 60.0;
  o.details = " p=3: " + c3.str() + " (expected 432, " + std::to_string(t3) + " s); p=5: " +
              std::to_string(one.total_orbits) + " (expected 18144, " + std::to_string(t5) +
              " s single worker, " + std::to_string(t5p) + " s all cores); worker counts " +
              (identical ? "identical" : "DIFFER");
  return o;
}

Outcome cycle_types() {
  Outcome o;
  std::size_t total = 0;
  std::size_t mismatches = 0;
  std::string first;
  for (int q : odd_primes_up_to(31)) {
    const auto action = shared_action(OddPrime(q));
    for (std::size_t t = 0; t < action->order(); ++t) {
      ++total;
      const CycleType brute = cycle_type_of(action->permutations()[t]);
      const CycleType closed = closed_form_cycle_type(action->automorphisms()[t]);
      if (brute != closed && mismatches++ == 0) {
        first = " first at p=" + std::to_string(q) + " " + action->automorphisms()[t].to_string() +
                ": decomposed " + brute.to_string() + ", closed form " + closed.to_string();
      }
    }
  }
  o.ok = mismatches == 0;
  o.details = " " + std::to_string(mismatches) + " of " + std::to_string(total) + " automorphisms differ;" + first;
  return o;
}

Outcome cycle_index() {
  Outcome o;
  std::string differing;
  for (int q : {3, 5, 7, 11, 13}) {
    const OddPrime p(q);
    const CycleIndexPoly closed = cycle_index_closed_form(p);
    const CycleIndexPoly brute = cycle_index_bruteforce(p);
    if (closed != brute) {
      o.ok = false;
      differing += " " + std::to_string(q);
    }
    if (evaluate(closed, 1) != 1 || evaluate(brute, 1) != 1) {
      o.ok = false;
      o.details += " p=" + std::to_string(q) + " does not evaluate to 1 at 1;";
    }
  }
  o.details += differing.empty() ? " term maps identical" : " term maps differ for p =" + differing;
  o.details += "; at 2 for p=3: closed " + evaluate(cycle_index_closed_form(OddPrime(3)), 2).str() +
               ", decomposed " + evaluate(cycle_index_bruteforce(OddPrime(3)), 2).str();
  return o;
}

Outcome reference_nc_nprime() {
  const char* nc[] = {"6", "12", "28", "216", "704"};
  const char* np[] = {"388", "17992", "1823592", "41253620920", "7330996514360"};
  Outcome o;
  for (std::size_t i = 0; i < kTablePrimes.size(); ++i) {
    const OddPrime p(kTablePrimes[i]);
    if (n_circulant(p) != BigInt(nc[i]) || n_connected(p) != BigInt(np[i])) {
      o.ok = false;
      o.details += " p=" + std::to_string(p.value()) + ": " + n_circulant(p).str() + ", " + n_connected(p).str() + ";";
    }
  }
  if (o.ok) o.details = " all ten values exact";
  return o;
}

Outcome oracle_comparison() {
  Outcome o;
  for (int q : {3, 5}) {
    const VerificationReport r = run_verify(OddPrime(q), VerifyLevel::Full, {5, 0});
    const std::string tag = " p=" + std::to_string(q) + ":";
    bool records = r.census.has_value() && r.circulant_oracle.has_value();
    for (const char* name : {"circulant_formula_vs_oracle", "connected_formula_vs_oracle",
                             "a_only_vs_circulant_squared", "b_touching_vs_eight"}) {
      const Check* c = r.find(name);
      records = records && c != nullptr && c->status != CheckStatus::Fail;
    }
    bool identities = false;
    int flagged = 0;
    for (const Check& c : r.checks) flagged += c.status == CheckStatus::Flagged;
    if (r.census) {
      const OrbitCensus& c = *r.census;
      const BigInt disconnected = disconnected_orbit_count_burnside(OddPrime(q), {5, 0});
      identities = BigInt(c.connected_orbits) + disconnected == BigInt(c.total_orbits) &&
                   BigInt(c.a_only_orbits + c.b_touching_orbits) == disconnected;
      o.details += tag + " N_c oracle " + r.circulant_oracle->str() + " vs " + r.counts.n_circulant.str() +
                   ", N' oracle " + std::to_string(c.connected_orbits) + " vs " + r.counts.n_connected.str() +
                   ", " + std::to_string(flagged) + " flagged;";
    }
    const bool exit_zero = !r.has_failure();
    if (!records || !identities || !exit_zero) {
      o.ok = false;
      o.details += tag + (records ? "" : " missing records") + (identities ? "" : " partition identity broken") +
                   (exit_zero ? "" : " verification failed");
    }
  }
  return o;
}

Outcome group_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  const auto e3 = all_elements(OddPrime(3));
  for (const auto& x : e3)
    for (const auto& y : e3)
      for (const auto& z : e3) violations += (x * y) * z != x * (y * z);
  for (int q : odd_primes_up_to(13)) {
    for (const auto& x : all_elements(OddPrime(q))) {
      violations += !(x * inv(x)).is_identity() || !(inv(x) * x).is_identity();
      violations += element_order(x) != element_order_by_iteration(x);
    }
  }
  for (int q : {3, 5, 7}) {
    const auto els = all_elements(OddPrime(q));
    std::vector<char> hit(els.size(), 0);
    for (const auto& x : els) {
      const int idx = iso_f(x).index();
      violations += hit[idx];
      hit[idx] = 1;
      for (const auto& y : els) violations += iso_f(x * y) != g_mul(iso_f(x), iso_f(y));
    }
  }
  const double t = seconds_since(t0);
  o.ok = violations == 0 && t < 30.0;
  o.details = " " + std::to_string(violations) + " violations, " + std::to_string(t) + " s";
  return o;
}

Outcome structural_suite() {
  Outcome o;
  std::size_t bad_types = 0, bad_graphs = 0, bad_unique = 0, bad_aut = 0;
  for (int q : odd_primes_up_to(31)) {
    const OddPrime p(q);
    const auto action = shared_action(p);
    for (std::size_t t = 0; t < action->order(); ++t) {
      bad_types += cycle_type_of(action->permutations()[t]).weighted_sum() != 4 * q;
      bad_types += closed_form_cycle_type(action->automorphisms()[t]).weighted_sum() != 4 * q;
    }
    for (const UnitResidue& alpha : units_2p(p)) {
      if (alpha.value() == 1) continue;
      for (int t = 2; t < p.twice(); t += 2) {
        int hits = 0;
        for (const UnitResidue& x : units_2p(p)) hits += mod(x.value() - alpha.value() * x.value(), p.twice()) == t;
        const int x = unique_x(alpha, t).value();
        bad_unique += hits != 1 || mod(x - alpha.value() * x, p.twice()) != t;
      }
    }
  }
  for (int q : {3, 5}) {
    const OddPrime p(q);
    const Mask limit = Mask{1} << (4 * q);
    const Mask stride = q == 3 ? 1 : 211;
    for (Mask m = 0; m < limit; m += stride) {
      const CayleyGraph g = build_cayley_graph(ConnectionSet(p, m));
      bad_graphs += !g.is_regular() || !g.is_symmetric();
    }
    const auto auts = enumerate_aut(p);
    bad_aut += auts.size() != std::size_t(4 * q * (q - 1));
    for (const auto& f : auts) {
      bad_aut += !verify_automorphism(f);
      for (const auto& g : auts) bad_aut += std::find(auts.begin(), auts.end(), compose(f, g)) == auts.end();
    }
  }
  o.ok = bad_types + bad_graphs + bad_unique + bad_aut == 0;
  o.details = " cycle-type sums " + std::to_string(bad_types) + ", graphs " + std::to_string(bad_graphs) +
              ", unique_x " + std::to_string(bad_unique) + ", automorphism group " + std::to_string(bad_aut) +
              " violations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 reference N values from the count formula and the cycle index at 2", reference_n},
      {"2 Burnside count equals the N formula for p <= 23", burnside_matches_formula},
      {"3 exhaustive orbit partition equals reference N at p = 3, 5", orbit_partition},
      {"4 closed-form cycle types equal decomposed ones for p <= 31", cycle_types},
      {"5 closed-form cycle index equals decomposed one for p <= 13", cycle_index},
      {"6 reference N_c and N' values from the formulas", reference_nc_nprime},
      {"7 full verification carries oracle records and partition identities", oracle_comparison},
      {"8 group laws, order table and isomorphism to G", group_suite},
      {"9 structural invariants", structural_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s criterion %s:%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.details.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
