#include "cayley8p/polya.hpp"

#include <stdexcept>

namespace cayley8p {

namespace {

BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BigInt one = 1;
  return one << static_cast<unsigned>(e);
}

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num, den); }

}  // namespace

Monomial Monomial::var(int k, int e) {
  if (k < 1 || e < 0) throw std::invalid_argument("invalid monomial variable");
  Monomial m;
  if (e > 0) m.exps_.emplace_back(k, e);
  return m;
}

Monomial Monomial::from_cycle_type(const CycleType& type) {
  Monomial m;
  for (auto [length, mult] : type.counts()) m.exps_.emplace_back(length, mult);
  return m;
}

int Monomial::weighted_degree() const {
  int total = 0;
  for (auto [k, e] : exps_) total += k * e;
  return total;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (auto [k, e] : exps_) {
    if (!out.empty()) out += "·";
    out += "x" + std::to_string(k);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto i = x.exps_.begin();
  auto j = y.exps_.begin();
  while (i != x.exps_.end() || j != y.exps_.end()) {
    if (j == y.exps_.end() || (i != x.exps_.end() && i->first < j->first)) {
      out.exps_.push_back(*i++);
    } else if (i == x.exps_.end() || j->first < i->first) {
      out.exps_.push_back(*j++);
    } else {
      out.exps_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

void CycleIndexPoly::add(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void CycleIndexPoly::validate() const {
  Rational sum = 0;
  for (const auto& [mono, coeff] : terms_) {
    if (coeff <= 0) {
      throw ConsistencyError("cycle index has non-positive coefficient on " + mono.to_string());
    }
    if (mono.weighted_degree() != 4 * p_) {
      throw ConsistencyError("cycle index monomial " + mono.to_string() +
                             " has weighted degree != 4p");
    }
    sum += coeff;
  }
  if (sum != 1) throw ConsistencyError("cycle index coefficients do not sum to 1");
}

std::string CycleIndexPoly::to_string() const {
  std::string out;
  // Highest x1 power first reads most naturally (identity term leads).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.str() + "·" + it->first.to_string();
  }
  return out;
}

CycleIndexPoly cycle_index_bruteforce(OddPrime p) {
  const auto action = shared_action(p);
  std::map<Monomial, std::int64_t> tally;
  for (const Permutation& perm : action->permutations()) {
    ++tally[Monomial::from_cycle_type(cycle_type_of(perm))];
  }
  const auto order = static_cast<std::int64_t>(action->order());
  CycleIndexPoly poly(p);
  for (const auto& [mono, count] : tally) poly.add(mono, frac(count, order));
  poly.validate();
  return poly;
}

CycleIndexPoly cycle_index_closed_form(OddPrime p) {
  const int q = p.value();
  const int m = q - 1;
  const auto x = [](int k, int e) { return Monomial::var(k, e); };
  CycleIndexPoly poly(p);

  const Rational head = frac(1, 4 * q);
  poly.add(x(1, 4 * q), -head);
  poly.add(x(1, 2 * q) * x(2, q), -head);
  poly.add(x(1, 2 * q) * x(q, 2), head);
  poly.add(x(1, 2 * q) * x(2 * q, 1), head);
  poly.add(x(1, q + 1) * x(2, (3 * q - 1) / 2), -head);
  poly.add(x(2, (q - 1) / 2) * x(1, 3 * q + 1), -head);
  poly.add(x(2, (q - 1) / 2) * x(1, q + 1) * x(q, 2), head);
  poly.add(x(2, (q - 1) / 2) * x(1, q + 1) * x(2 * q, 1), head);

  const Rational tail = frac(1, 4 * m);
  for (std::int64_t d64 : divisors(m)) {
    const int d = static_cast<int>(d64);
    const Rational w = tail * Rational(euler_phi(d));
    const Monomial full = x(d, 4 * m / d);
    poly.add(x(1, 4) * full, w);
    if (d % 2 == 0) {
      poly.add(x(1, 2) * x(2, 1) * full, 2 * w);
      poly.add(x(1, 4) * full, w);
    } else {
      poly.add(x(1, 2) * x(2, 1) * x(d, 2 * m / d) * x(2 * d, m / d), w);
      poly.add(x(1, 2) * x(2, 1) * x(d, m / d) * x(2 * d, 3 * m / (2 * d)), w);
      poly.add(x(1, 4) * x(d, 3 * m / d) * x(2 * d, m / (2 * d)), w);
    }
  }
  poly.validate();
  return poly;
}

BigInt require_integer(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw ConsistencyError(what + " is not an integer: " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

BigInt evaluate(const CycleIndexPoly& poly, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("evaluation point must be positive");
  Rational total = 0;
  for (const auto& [mono, coeff] : poly.terms()) {
    BigInt value = 1;
    for (auto [k, e] : mono.exponents()) value *= boost::multiprecision::pow(m, static_cast<unsigned>(e));
    total += coeff * Rational(value);
  }
  return require_integer(total, "cycle index evaluation");
}

BigInt n_total(OddPrime p) {
  const std::int64_t q = p.value();
  const std::int64_t m = q - 1;

  Rational first = Rational(-pow2(4 * q) + pow2(2 * q) * (-pow2(q) + 6) - pow2((5 * q + 1) / 2) +
                            pow2((q - 1) / 2) * (-pow2(3 * q + 1) + pow2(q + 3) + pow2(q + 2)));
  first /= 4 * q;

  BigInt all_d = 0, even_d = 0, odd_pair = 0, odd_single = 0;
  for (std::int64_t d : divisors(m)) {
    const BigInt phi = euler_phi(d);
    all_d += phi * pow2(4 * m / d);
    if (d % 2 == 0) {
      even_d += phi * pow2(4 * m / d);
    } else {
      odd_pair += phi * (pow2(3 * m / d) + pow2(5 * m / (2 * d)));
      odd_single += phi * pow2(7 * m / (2 * d));
    }
  }
  const Rational total = first + Rational(4 * all_d, m) + Rational(8 * even_d, m) +
                         Rational(2 * odd_pair, m) + Rational(4 * odd_single, m);
  return require_integer(total, "closed-form graph count");
}

BigInt n_circulant(OddPrime p) {
  const std::int64_t m = p.value() - 1;
  BigInt sum = 0;
  for (std::int64_t d : divisors(m)) sum += BigInt(euler_phi(d)) * pow2(m / d);
  return require_integer(Rational(2 * sum, m), "closed-form circulant count");
}

BigInt n_connected(OddPrime p) {
  const BigInt nc = n_circulant(p);
  return n_total(p) - nc * nc - 8;
}

}  // namespace cayley8p
