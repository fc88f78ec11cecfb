#include "cayley8p/automorphism.hpp"

#include <stdexcept>

namespace cayley8p {

Automorphism::Automorphism(AutFamily family, UnitResidue alpha, std::int64_t beta)
    : family_(family), alpha_(alpha), beta_(0) {
  const int n = alpha.modulus();
  if (beta < 0 || beta >= n) {
    throw std::invalid_argument("automorphism shift must lie in [0, 2p)");
  }
  beta_ = static_cast<int>(beta);
}

GroupElement Automorphism::apply(const GroupElement& g) const {
  const OddPrime p = prime();
  if (g.p() != p.value()) throw std::invalid_argument("automorphism and element for different p");
  const std::int64_t scaled = std::int64_t{g.k()} * alpha_.value();
  if (family_ == AutFamily::Sigma) {
    switch (g.l()) {
      case 0: return GroupElement::make(p, scaled, 0);
      case 1: return GroupElement::make(p, scaled + beta_, 1);
      case 2: return GroupElement::make(p, scaled, 2);
      default: return GroupElement::make(p, scaled + beta_, 3);
    }
  }
  switch (g.l()) {
    case 0: return GroupElement::make(p, scaled, 0);
    case 1: return GroupElement::make(p, scaled + beta_, 3);
    case 2: return GroupElement::make(p, scaled + p.value(), 2);
    default: return GroupElement::make(p, scaled + beta_, 1);
  }
}

std::string Automorphism::to_string() const {
  const char* name = family_ == AutFamily::Sigma ? "sigma" : "tau";
  return std::string(name) + "(" + std::to_string(alpha_.value()) + "," +
         std::to_string(beta_) + ")";
}

std::vector<Automorphism> enumerate_aut(OddPrime p) {
  std::vector<Automorphism> out;
  out.reserve(std::size_t{4} * p.value() * (p.value() - 1));
  const auto units = units_2p(p);
  for (AutFamily family : {AutFamily::Sigma, AutFamily::Tau}) {
    for (const UnitResidue& u : units) {
      for (int shift = 0; shift < p.twice(); ++shift) out.emplace_back(family, u, shift);
    }
  }
  return out;
}

std::vector<GroupElement> materialize(const Automorphism& f) {
  std::vector<GroupElement> table;
  const auto elements = all_elements(f.prime());
  table.reserve(elements.size());
  for (const GroupElement& g : elements) table.push_back(f.apply(g));
  return table;
}

std::vector<GroupElement> map_from_generators(const GroupElement& a_image,
                                              const GroupElement& b_image) {
  const OddPrime p = a_image.prime();
  std::vector<GroupElement> table;
  for (const GroupElement& g : all_elements(p)) {
    table.push_back(power(a_image, g.k()) * power(b_image, g.l()));
  }
  return table;
}

bool is_automorphism_table(OddPrime p, std::span<const GroupElement> table) {
  const int order = 8 * p.value();
  if (static_cast<int>(table.size()) != order) return false;
  std::vector<char> hit(order, 0);
  for (const GroupElement& y : table) {
    if (y.p() != p.value() || hit[y.index()]) return false;
    hit[y.index()] = 1;
  }
  const auto elements = all_elements(p);
  for (const GroupElement& x : elements) {
    for (const GroupElement& y : elements) {
      if (table[(x * y).index()] != table[x.index()] * table[y.index()]) return false;
    }
  }
  return true;
}

bool verify_automorphism(const Automorphism& f) {
  const auto table = materialize(f);
  return is_automorphism_table(f.prime(), table);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  const OddPrime p = f.prime();
  if (g.prime().value() != p.value()) throw std::invalid_argument("compose: automorphisms for different p");
  const GroupElement a_img = f(g(GroupElement::a(p)));
  const GroupElement b_img = f(g(GroupElement::b(p)));
  if (a_img.l() != 0 || gcd(a_img.k(), p.twice()) != 1 || b_img.l() % 2 == 0) {
    throw ConsistencyError("compose: generator images of " + f.to_string() + " o " +
                           g.to_string() + " fall outside both families");
  }
  const AutFamily family = b_img.l() == 1 ? AutFamily::Sigma : AutFamily::Tau;
  const Automorphism candidate(family, UnitResidue(a_img.k(), p), b_img.k());
  for (const GroupElement& x : all_elements(p)) {
    if (candidate(x) != f(g(x))) {
      throw ConsistencyError("compose: " + f.to_string() + " o " + g.to_string() +
                             " disagrees with " + candidate.to_string() + " at " +
                             x.to_string());
    }
  }
  return candidate;
}

}  // namespace cayley8p
