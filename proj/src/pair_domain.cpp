#include "cayley8p/pair_domain.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace cayley8p {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::A1: return "A1";
    case ClassKind::A2: return "A2";
    case ClassKind::Ap: return "Ap";
    case ClassKind::B: return "B";
  }
  return "?";
}

namespace {

bool rep_before(const GroupElement& x, const GroupElement& y) {
  return std::pair(x.l(), x.k()) < std::pair(y.l(), y.k());
}

PairClass make_class(ClassKind kind, const GroupElement& s) {
  const GroupElement t = inv(s);
  PairClass c{kind, s, {s}};
  if (t != s) {
    if (rep_before(t, s)) c.rep = t;
    c.members = {c.rep, c.rep == s ? t : s};
  }
  return c;
}

}  // namespace

Domain::Domain(OddPrime p) : p_(p.value()), class_of_element_(8 * p.value(), -1) {
  const int n = p.twice();
  classes_.reserve(4 * p_);
  for (int i = 1; i <= p_ - 1; ++i) {
    classes_.push_back(make_class(ClassKind::A1, GroupElement::make(p, i, 0)));
  }
  for (int l = 0; l <= (p_ - 1) / 2; ++l) {
    classes_.push_back(make_class(ClassKind::A2, GroupElement::make(p, l, 2)));
  }
  for (int l = p_ + 1; l <= (3 * p_ - 1) / 2; ++l) {
    classes_.push_back(make_class(ClassKind::A2, GroupElement::make(p, l, 2)));
  }
  classes_.push_back(make_class(ClassKind::Ap, GroupElement::make(p, p_, 0)));
  for (int j = 0; j < n; ++j) {
    classes_.push_back(make_class(ClassKind::B, GroupElement::make(p, j, 1)));
  }

  for (int c = 0; c < size(); ++c) {
    for (const GroupElement& g : classes_[c].members) {
      if (class_of_element_[g.index()] != -1) {
        throw ConsistencyError("element " + g.to_string() + " lies in two classes");
      }
      class_of_element_[g.index()] = c;
    }
  }
  const auto uncovered = std::count(class_of_element_.begin() + 1, class_of_element_.end(), -1);
  if (uncovered != 0 || size() != 4 * p_) {
    throw ConsistencyError("pair classes do not partition the non-identity elements");
  }
}

int Domain::class_of(const GroupElement& g) const {
  if (g.p() != p_) throw std::invalid_argument("element and domain for different p");
  const int c = class_of_element_[g.index()];
  if (c < 0) throw std::invalid_argument("the identity belongs to no pair class");
  return c;
}

Domain build_domain(OddPrime p) { return Domain(p); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> images(size());
  for (int i = 0; i < size(); ++i) images[i] = images_[other[i]];
  return Permutation(std::move(images));
}

CycleType::CycleType(std::map<int, int> counts) {
  for (auto [length, mult] : counts) add(length, mult);
}

void CycleType::add(int length, int multiplicity) {
  if (length < 1 || multiplicity < 0) throw std::invalid_argument("invalid cycle type entry");
  if (multiplicity > 0) counts_[length] += multiplicity;
}

int CycleType::count(int length) const {
  const auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

int CycleType::weighted_sum() const {
  int total = 0;
  for (auto [length, mult] : counts_) total += length * mult;
  return total;
}

int CycleType::total_cycles() const {
  int total = 0;
  for (auto [length, mult] : counts_) total += mult;
  return total;
}

std::string CycleType::to_string() const {
  std::string out;
  for (auto [length, mult] : counts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + "^" + std::to_string(mult);
  }
  return out;
}

Permutation induced_permutation(const Automorphism& f, const Domain& d) {
  if (f.prime().value() != d.prime().value()) {
    throw std::invalid_argument("automorphism and domain for different p");
  }
  std::vector<int> images(d.size());
  for (int c = 0; c < d.size(); ++c) {
    const PairClass& cls = d[c];
    const int target = d.class_of(f(cls.rep));
    for (const GroupElement& m : cls.members) {
      if (d.class_of(f(m)) != target) {
        throw ConsistencyError(f.to_string() + " splits class of " + cls.rep.to_string());
      }
    }
    images[c] = target;
  }
  return Permutation(std::move(images));
}

CycleType cycle_type_of(const Permutation& perm) {
  CycleType type;
  std::vector<char> seen(perm.size(), 0);
  for (int start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int i = start; !seen[i]; i = perm[i]) {
      seen[i] = 1;
      ++length;
    }
    type.add(length, 1);
  }
  return type;
}

CycleType closed_form_cycle_type(const Automorphism& f) {
  const OddPrime p = f.prime();
  const int q = p.value();
  const int n = p.twice();
  const int shift = f.beta();
  CycleType type;

  if (f.alpha().value() == 1) {
    if (f.family() == AutFamily::Sigma) {
      if (shift == 0) {
        type.add(1, 4 * q);
      } else {
        type.add(1, 2 * q);
        if (shift == q) type.add(2, q);
        if (shift % 2 == 0) type.add(q, 2);
        if (shift % 2 == 1 && shift != q) type.add(n, 1);
      }
    } else {
      type.add(1, shift == q ? 3 * q + 1 : q + 1);
      type.add(2, shift == 0 ? (3 * q - 1) / 2 : (q - 1) / 2);
      if (shift % 2 == 1 && shift != q) type.add(q, 2);
      if (shift % 2 == 0 && shift != 0) type.add(n, 1);
    }
    return type;
  }

  const UnitResidue z = primitive_root_2p(p);
  const int index = discrete_log(z, f.alpha());
  const int g = static_cast<int>(gcd(index, q - 1));
  const int order = (q - 1) / g;
  const bool even_order = order % 2 == 0;
  const bool even_shift = shift % 2 == 0;

  if (f.family() == AutFamily::Sigma) {
    if (even_shift) {
      type.add(1, 4);
      type.add(order, 4 * g);
    } else {
      type.add(1, 2);
      type.add(2, 1);
      if (even_order) {
        type.add(order, 4 * g);
      } else {
        type.add(order, 2 * g);
        type.add(2 * order, g);
      }
    }
  } else {
    if (even_shift) {
      type.add(1, 2);
      type.add(2, 1);
      if (even_order) {
        type.add(order, 4 * g);
      } else {
        type.add(order, g);
        type.add(2 * order, 3 * g / 2);
      }
    } else {
      type.add(1, 4);
      if (even_order) {
        type.add(order, 4 * g);
      } else {
        type.add(order, 3 * g);
        type.add(2 * order, g / 2);
      }
    }
  }
  return type;
}

DomainAction::DomainAction(OddPrime p) : domain_(p), automorphisms_(enumerate_aut(p)) {
  permutations_.reserve(automorphisms_.size());
  for (const Automorphism& f : automorphisms_) {
    permutations_.push_back(induced_permutation(f, domain_));
  }
}

std::shared_ptr<const DomainAction> shared_action(OddPrime p) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const DomainAction>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p.value()); it != cache.end()) return it->second;
  }
  // Built outside the lock; a racing builder produces an identical value and
  // the first insertion wins.
  auto built = std::make_shared<const DomainAction>(p);
  std::lock_guard lock(mutex);
  return cache.try_emplace(p.value(), std::move(built)).first->second;
}

}  // namespace cayley8p
