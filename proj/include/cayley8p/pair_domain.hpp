#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cayley8p/automorphism.hpp"
#include "cayley8p/group.hpp"

namespace cayley8p {

enum class ClassKind { A1, A2, Ap, B };

const char* to_string(ClassKind kind);

/// An inverse-closed class {s, s^-1} of non-identity elements.
struct PairClass {
  ClassKind kind;
  GroupElement rep;                   // least (l, k) among members
  std::vector<GroupElement> members;  // rep first; size 1 only for {a^p}
};

/// The 4p classes ordered as: A1 = {a^i, a^-i} for i = 1..p-1; A2 =
/// {a^l b^2, a^{p-l} b^2} for l = 0..(p-1)/2 then p+1..(3p-1)/2; {a^p};
/// B = {a^j b, a^{p+j} b^3} for j = 0..2p-1. Bit i of a connection-set mask
/// refers to class i of this order.
class Domain {
 public:
  explicit Domain(OddPrime p);

  OddPrime prime() const { return OddPrime::unchecked(p_); }
  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<PairClass>& classes() const { return classes_; }
  const PairClass& operator[](int i) const { return classes_[i]; }

  /// Index of the class containing g; throws std::invalid_argument for e.
  int class_of(const GroupElement& g) const;

  int a1_begin() const { return 0; }
  int a2_begin() const { return p_ - 1; }
  int ap_index() const { return 2 * p_ - 1; }
  int b_begin() const { return 2 * p_; }

 private:
  int p_;
  std::vector<PairClass> classes_;
  std::vector<int> class_of_element_;  // by element index, -1 for identity
};

Domain build_domain(OddPrime p);

/// A permutation of {0, ..., n-1} given by its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// (this o other)(i) = this(other(i))
  Permutation after(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Multiplicities b_k of cycle lengths k; lengths with b_k = 0 are absent.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::map<int, int> counts);

  void add(int length, int multiplicity);
  const std::map<int, int>& counts() const { return counts_; }
  int count(int length) const;
  /// Sum of k * b_k, i.e. the number of points permuted.
  int weighted_sum() const;
  int total_cycles() const;
  /// "1^a 2^b ..."
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::map<int, int> counts_;
};

Permutation induced_permutation(const Automorphism& f, const Domain& d);

CycleType cycle_type_of(const Permutation& perm);

/// Cycle type of f on the domain from the closed-form case analysis (no
/// permutation is built). Contributions that land on the same length add up.
CycleType closed_form_cycle_type(const Automorphism& f);

/// Domain, automorphisms and their induced permutations for one p, built once
/// and immutable afterwards.
class DomainAction {
 public:
  explicit DomainAction(OddPrime p);

  OddPrime prime() const { return domain_.prime(); }
  const Domain& domain() const { return domain_; }
  const std::vector<Automorphism>& automorphisms() const { return automorphisms_; }
  const std::vector<Permutation>& permutations() const { return permutations_; }
  std::size_t order() const { return automorphisms_.size(); }

 private:
  Domain domain_;
  std::vector<Automorphism> automorphisms_;
  std::vector<Permutation> permutations_;
};

/// Process-wide cache of DomainAction per p. Safe to call concurrently.
std::shared_ptr<const DomainAction> shared_action(OddPrime p);

}  // namespace cayley8p
