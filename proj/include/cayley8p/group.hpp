#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley8p/modular_arith.hpp"

namespace cayley8p {

/// Element a^k b^l of T_{8p} = <a, b | a^{2p} = b^8 = e, a^p = b^4, b^-1 a b = a^-1>
/// in its unique normal form 0 <= k < 2p, 0 <= l < 4.
class GroupElement {
 public:
  /// Reduces arbitrary exponents: every b^4 removed from l becomes a^p.
  static GroupElement make(OddPrime p, std::int64_t k, std::int64_t l);
  static GroupElement identity(OddPrime p) { return make(p, 0, 0); }
  static GroupElement a(OddPrime p) { return make(p, 1, 0); }
  static GroupElement b(OddPrime p) { return make(p, 0, 1); }
  /// Inverse of index(): index = l * 2p + k.
  static GroupElement from_index(OddPrime p, int index);

  int k() const { return k_; }
  int l() const { return l_; }
  int p() const { return p_; }
  OddPrime prime() const { return OddPrime::unchecked(p_); }
  int index() const { return l_ * 2 * p_ + k_; }
  bool is_identity() const { return k_ == 0 && l_ == 0; }

  /// "a^k b^l"
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(int p, int k, int l) : p_(p), k_(k), l_(l) {}
  int p_;
  int k_;
  int l_;
};

GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement operator*(const GroupElement& x, const GroupElement& y);
GroupElement inv(const GroupElement& x);
GroupElement power(const GroupElement& x, std::int64_t n);

/// Order from the closed-form table: 2p/gcd(k,2p) for a^k, lcm(that, 4) for
/// a^k b^2, and 8 for odd powers of b.
int element_order(const GroupElement& x);
/// Order by repeated multiplication.
int element_order_by_iteration(const GroupElement& x);

/// All 8p elements in index order.
std::vector<GroupElement> all_elements(OddPrime p);

/// Element x^i b^j of G = <x, b | x^p = b^8 = 1, b^-1 x b = x^-1>,
/// 0 <= i < p, 0 <= j < 8.
class GElement {
 public:
  static GElement make(OddPrime p, std::int64_t i, std::int64_t j);

  int i() const { return i_; }
  int j() const { return j_; }
  int p() const { return p_; }
  int index() const { return j_ * p_ + i_; }
  std::string to_string() const;

  friend bool operator==(const GElement&, const GElement&) = default;

 private:
  GElement(int p, int i, int j) : p_(p), i_(i), j_(j) {}
  int p_;
  int i_;
  int j_;
};

GElement g_mul(const GElement& x, const GElement& y);

/// The isomorphism T_{8p} -> G: a^k b^l maps to x^{k/2} b^l for even k and to
/// x^{(k-p)/2 mod p} b^{l+4} for odd k.
GElement iso_f(const GroupElement& x);

}  // namespace cayley8p
