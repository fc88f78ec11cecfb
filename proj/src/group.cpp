#include "cayley8p/group.hpp"

#include <numeric>
#include <stdexcept>

namespace cayley8p {

namespace {

void require_same_p(int p, int q) {
  if (p != q) {
    throw std::invalid_argument("group elements for different p (" +
                                std::to_string(p) + " vs " + std::to_string(q) + ")");
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GroupElement GroupElement::make(OddPrime p, std::int64_t k, std::int64_t l) {
  const std::int64_t fours = floor_div(l, 4);
  const std::int64_t reduced_l = l - 4 * fours;
  const std::int64_t n = p.twice();
  // b^{4q} = a^{pq}; a^p is central so it can be moved onto the a-exponent.
  const std::int64_t reduced_k = mod(mod(k, n) + mod(fours, 2) * p.value(), n);
  return GroupElement(p.value(), static_cast<int>(reduced_k),
                      static_cast<int>(reduced_l));
}

GroupElement GroupElement::from_index(OddPrime p, int index) {
  const int n = p.twice();
  if (index < 0 || index >= 4 * n) throw std::out_of_range("element index out of range");
  return GroupElement(p.value(), index % n, index / n);
}

std::string GroupElement::to_string() const {
  return "a^" + std::to_string(k_) + " b^" + std::to_string(l_);
}

GroupElement mul(const GroupElement& x, const GroupElement& y) {
  require_same_p(x.p(), y.p());
  const OddPrime p = x.prime();
  const std::int64_t sign = (x.l() % 2 == 0) ? 1 : -1;
  std::int64_t k = x.k() + sign * y.k();
  int l = x.l() + y.l();
  if (l >= 4) {
    l -= 4;
    k += p.value();
  }
  return GroupElement::make(p, k, l);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) { return mul(x, y); }

GroupElement inv(const GroupElement& x) {
  const OddPrime p = x.prime();
  const int r = x.k();
  switch (x.l()) {
    case 0: return GroupElement::make(p, -r, 0);
    case 1: return GroupElement::make(p, r + p.value(), 3);
    case 2: return GroupElement::make(p, p.value() - r, 2);
    default: return GroupElement::make(p, r + p.value(), 1);
  }
}

GroupElement power(const GroupElement& x, std::int64_t n) {
  GroupElement base = n >= 0 ? x : inv(x);
  std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-n);
  GroupElement result = GroupElement::identity(x.prime());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

int element_order(const GroupElement& x) {
  const int n = 2 * x.p();
  const int cyclic = n / std::gcd(x.k(), n);
  if (x.l() == 0) return cyclic;
  if (x.l() == 2) return std::lcm(cyclic, 4);
  return 8;
}

int element_order_by_iteration(const GroupElement& x) {
  GroupElement acc = x;
  int m = 1;
  while (!acc.is_identity()) {
    acc = acc * x;
    ++m;
  }
  return m;
}

std::vector<GroupElement> all_elements(OddPrime p) {
  std::vector<GroupElement> out;
  out.reserve(8 * p.value());
  for (int idx = 0; idx < 8 * p.value(); ++idx) out.push_back(GroupElement::from_index(p, idx));
  return out;
}

GElement GElement::make(OddPrime p, std::int64_t i, std::int64_t j) {
  return GElement(p.value(), static_cast<int>(mod(i, p.value())),
                  static_cast<int>(mod(j, 8)));
}

std::string GElement::to_string() const {
  return "x^" + std::to_string(i_) + " b^" + std::to_string(j_);
}

GElement g_mul(const GElement& x, const GElement& y) {
  require_same_p(x.p(), y.p());
  const std::int64_t sign = (x.j() % 2 == 0) ? 1 : -1;
  return GElement::make(OddPrime::unchecked(x.p()), x.i() + sign * y.i(), x.j() + y.j());
}

GElement iso_f(const GroupElement& x) {
  const OddPrime p = x.prime();
  if (x.k() % 2 == 0) return GElement::make(p, x.k() / 2, x.l());
  return GElement::make(p, (x.k() - p.value()) / 2, x.l() + 4);
}

}  // namespace cayley8p
