#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley8p/modular_arith.hpp"
#include "cayley8p/pair_domain.hpp"

namespace cayley8p {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Product of x_k^{e_k}, kept as an ascending (k, e_k) list with e_k >= 1 so
/// that structural equality is polynomial equality.
class Monomial {
 public:
  Monomial() = default;
  /// x_k^e; e = 0 gives the unit monomial.
  static Monomial var(int k, int e = 1);
  static Monomial from_cycle_type(const CycleType& type);

  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  int weighted_degree() const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Cycle index of the automorphism group acting on the 4p pair classes.
class CycleIndexPoly {
 public:
  explicit CycleIndexPoly(OddPrime p) : p_(p.value()) {}

  OddPrime prime() const { return OddPrime::unchecked(p_); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Adds coeff * mono, merging like terms and dropping zeros.
  void add(const Monomial& mono, const Rational& coeff);

  /// Throws ConsistencyError unless every coefficient is positive, every
  /// monomial has weighted degree 4p, and the coefficients sum to 1.
  void validate() const;

  /// "1/24·x1^12 + ..."
  std::string to_string() const;

  friend bool operator==(const CycleIndexPoly&, const CycleIndexPoly&) = default;

 private:
  int p_;
  std::map<Monomial, Rational> terms_;
};

/// Average of the monomials of the decomposed induced permutations.
CycleIndexPoly cycle_index_bruteforce(OddPrime p);

/// The closed-form expression assembled from its eight-monomial block and
/// the four divisor sums over d | (p - 1).
CycleIndexPoly cycle_index_closed_form(OddPrime p);

/// P(m, m, ..., m). A non-integral value is a ConsistencyError.
BigInt evaluate(const CycleIndexPoly& poly, const BigInt& m);

/// Number of Cayley graphs over T_{8p} up to isomorphism, from the closed
/// formula summed in its four grouped parts.
BigInt n_total(OddPrime p);

/// (2/(p-1)) * sum_{d | p-1} phi(d) 2^{(p-1)/d}
BigInt n_circulant(OddPrime p);

/// n_total - n_circulant^2 - 8
BigInt n_connected(OddPrime p);

/// Exact integer conversion; throws ConsistencyError if r is not integral.
BigInt require_integer(const Rational& r, const std::string& what);

}  // namespace cayley8p
