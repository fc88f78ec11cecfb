#pragma once

#include <span>
#include <string>
#include <vector>

#include "cayley8p/group.hpp"
#include "cayley8p/modular_arith.hpp"

namespace cayley8p {

enum class AutFamily { Sigma, Tau };

/// An automorphism of T_{8p}, stored by its parameters:
///   Sigma(alpha, beta): a -> a^alpha, b -> a^beta b
///   Tau(gamma, delta):  a -> a^gamma, b -> a^delta b^3
class Automorphism {
 public:
  Automorphism(AutFamily family, UnitResidue alpha, std::int64_t beta);

  static Automorphism sigma(OddPrime p, std::int64_t alpha, std::int64_t beta) {
    return {AutFamily::Sigma, UnitResidue(alpha, p), beta};
  }
  static Automorphism tau(OddPrime p, std::int64_t gamma, std::int64_t delta) {
    return {AutFamily::Tau, UnitResidue(gamma, p), delta};
  }
  static Automorphism identity(OddPrime p) { return sigma(p, 1, 0); }

  AutFamily family() const { return family_; }
  UnitResidue alpha() const { return alpha_; }
  int beta() const { return beta_; }
  OddPrime prime() const { return alpha_.prime(); }

  GroupElement apply(const GroupElement& g) const;
  GroupElement operator()(const GroupElement& g) const { return apply(g); }

  /// "sigma(alpha,beta)" or "tau(gamma,delta)"
  std::string to_string() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  AutFamily family_;
  UnitResidue alpha_;
  int beta_;
};

/// All 4p(p-1) automorphisms ordered by family (Sigma first), then alpha,
/// then beta ascending.
std::vector<Automorphism> enumerate_aut(OddPrime p);

/// Image table of f, indexed by GroupElement::index().
std::vector<GroupElement> materialize(const Automorphism& f);

/// The endomorphism candidate determined by generator images: a^k b^l maps
/// to a_image^k * b_image^l. Not necessarily well defined as a homomorphism.
std::vector<GroupElement> map_from_generators(const GroupElement& a_image,
                                              const GroupElement& b_image);

/// True iff `table` (indexed by element index) is a bijective homomorphism.
bool is_automorphism_table(OddPrime p, std::span<const GroupElement> table);

/// Definitional check: bijective and multiplicative on all (8p)^2 pairs.
bool verify_automorphism(const Automorphism& f);

/// The enumerated automorphism equal to f o g pointwise. Throws
/// ConsistencyError if no member of the family matches.
Automorphism compose(const Automorphism& f, const Automorphism& g);

}  // namespace cayley8p
