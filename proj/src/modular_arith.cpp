#include "cayley8p/modular_arith.hpp"

#include <algorithm>
#include <numeric>

namespace cayley8p {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

OddPrime::OddPrime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime (got " +
                                std::to_string(p) + ")");
  }
  if (p > 1'000'000) {
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " is beyond the supported range (p <= 10^6)");
  }
  p_ = static_cast<int>(p);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

int mult_order(std::int64_t u, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (gcd(mod(u, modulus), modulus) != 1) {
    throw std::invalid_argument(std::to_string(u) + " is not a unit modulo " +
                                std::to_string(modulus));
  }
  const std::int64_t base = mod(u, modulus);
  std::int64_t acc = base % modulus;
  int m = 1;
  while (acc != 1 % modulus) {
    acc = acc * base % modulus;
    ++m;
  }
  return m;
}

UnitResidue::UnitResidue(std::int64_t value, OddPrime p) : p_(p.value()) {
  const std::int64_t n = p.twice();
  if (value < 1 || value >= n || value % 2 == 0 || value == p.value()) {
    throw std::invalid_argument(std::to_string(value) +
                                " is not a unit residue modulo " +
                                std::to_string(n));
  }
  value_ = static_cast<int>(value);
}

std::vector<UnitResidue> units_2p(OddPrime p) {
  std::vector<UnitResidue> units;
  units.reserve(p.value() - 1);
  for (int v = 1; v < p.twice(); v += 2) {
    if (v != p.value()) units.emplace_back(v, p);
  }
  return units;
}

UnitResidue primitive_root_2p(OddPrime p) {
  for (const UnitResidue& u : units_2p(p)) {
    if (mult_order(u.value(), p.twice()) == p.value() - 1) return u;
  }
  // Z_{2p}^* is cyclic for every odd prime p.
  throw ConsistencyError("no primitive root modulo " +
                         std::to_string(p.twice()));
}

int discrete_log(UnitResidue z, UnitResidue u) {
  if (z.modulus() != u.modulus()) {
    throw std::invalid_argument("discrete_log: residues for different p");
  }
  const int n = z.modulus();
  const int order = n / 2 - 1;
  if (mult_order(z.value(), n) != order) {
    throw std::invalid_argument(std::to_string(z.value()) + " is not a primitive root modulo " +
                                std::to_string(n));
  }
  std::int64_t acc = 1;
  for (int i = 0; i < order; ++i) {
    if (acc == u.value()) return i;
    acc = acc * z.value() % n;
  }
  throw ConsistencyError("discrete_log: " + std::to_string(u.value()) + " not reached from primitive root " +
                         std::to_string(z.value()));
}

UnitResidue unique_x(UnitResidue alpha, std::int64_t t) {
  const OddPrime p = alpha.prime();
  const int n = p.twice();
  if (alpha.value() == 1) throw std::invalid_argument("unique_x: alpha must differ from 1");
  if (t <= 0 || t >= n || t % 2 != 0) {
    throw std::invalid_argument("unique_x: t must be in {2, 4, ..., 2p-2}");
  }
  std::vector<UnitResidue> hits;
  for (const UnitResidue& x : units_2p(p)) {
    const std::int64_t lhs = mod(x.value() - std::int64_t{alpha.value()} * x.value(), n);
    if (lhs == t) hits.push_back(x);
  }
  if (hits.size() != 1) {
    throw ConsistencyError("unique_x: expected exactly one solution, found " +
                           std::to_string(hits.size()));
  }
  return hits.front();
}

}  // namespace cayley8p
