#include "cayley8p/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cayley8p {

namespace {

int domain_bits(OddPrime p) { return 4 * p.value(); }

void require_mask_prime(OddPrime p) {
  if (p.value() > kMaxMaskPrime) {
    throw std::invalid_argument("connection-set masks support p <= " +
                                std::to_string(kMaxMaskPrime));
  }
}

Mask apply_permutation(const Permutation& perm, Mask mask) {
  Mask out = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    out |= Mask{1} << perm[i];
  }
  return out;
}

// Byte-sliced image tables: the image of a mask under permutation t is the OR
// of table[t][c][byte c of the mask] over the mask's bytes.
class ByteImageTables {
 public:
  explicit ByteImageTables(const DomainAction& action)
      : chunks_((domain_bits(action.prime()) + 7) / 8),
        perms_(static_cast<int>(action.permutations().size())),
        table_(static_cast<std::size_t>(perms_) * chunks_ * 256) {
    for (int t = 0; t < perms_; ++t) {
      const Permutation& perm = action.permutations()[t];
      for (int c = 0; c < chunks_; ++c) {
        for (int byte = 0; byte < 256; ++byte) {
          Mask chunk = Mask(byte) << (8 * c);
          chunk &= perm.size() >= 64 ? ~Mask{0} : ((Mask{1} << perm.size()) - 1);
          table_[index(t, c, byte)] = apply_permutation(perm, chunk);
        }
      }
    }
  }

  int perms() const { return perms_; }

  Mask image(int t, Mask mask) const {
    Mask out = 0;
    for (int c = 0; c < chunks_; ++c) {
      out |= table_[index(t, c, static_cast<int>((mask >> (8 * c)) & 0xFF))];
    }
    return out;
  }

 private:
  std::size_t index(int t, int c, int byte) const {
    return (static_cast<std::size_t>(t) * chunks_ + c) * 256 + byte;
  }

  int chunks_;
  int perms_;
  std::vector<Mask> table_;
};

// Element lists per class plus a left-multiplication table, for traversal
// of the Cayley graph without materializing adjacency lists.
class ConnectivityProbe {
 public:
  explicit ConnectivityProbe(OddPrime p) : order_(8 * p.value()) {
    const Domain domain(p);
    for (const PairClass& c : domain.classes()) {
      std::vector<int> members;
      for (const GroupElement& g : c.members) members.push_back(g.index());
      class_elements_.push_back(std::move(members));
    }
    left_mul_.resize(static_cast<std::size_t>(order_) * order_);
    const auto elements = all_elements(p);
    for (const GroupElement& s : elements) {
      for (const GroupElement& x : elements) {
        left_mul_[static_cast<std::size_t>(s.index()) * order_ + x.index()] = (s * x).index();
      }
    }
  }

  bool connected(Mask mask) const {
    std::vector<int> gens;
    while (mask != 0) {
      const int c = std::countr_zero(mask);
      mask &= mask - 1;
      gens.insert(gens.end(), class_elements_[c].begin(), class_elements_[c].end());
    }
    std::vector<char> seen(order_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int s : gens) {
        const int y = left_mul_[static_cast<std::size_t>(s) * order_ + x];
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == order_;
  }

 private:
  int order_;
  std::vector<std::vector<int>> class_elements_;
  std::vector<int> left_mul_;
};

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

ConnectionSet::ConnectionSet(OddPrime p, Mask mask) : p_(p.value()), mask_(mask) {
  require_mask_prime(p);
  if ((mask >> domain_bits(p)) != 0) {
    throw std::invalid_argument("mask has bits beyond the 4p domain classes");
  }
}

std::vector<GroupElement> ConnectionSet::elements() const {
  const Domain domain(prime());
  std::vector<GroupElement> out;
  for (int c = 0; c < domain.size(); ++c) {
    if ((mask_ >> c) & 1U) {
      out.insert(out.end(), domain[c].members.begin(), domain[c].members.end());
    }
  }
  return out;
}

std::string mask_to_hex(OddPrime p, Mask mask) {
  require_mask_prime(p);
  std::ostringstream out;
  out << "0x";
  for (int digit = p.value() - 1; digit >= 0; --digit) {
    out << "0123456789abcdef"[(mask >> (4 * digit)) & 0xF];
  }
  return out.str();
}

Mask mask_from_hex(OddPrime p, const std::string& text) {
  require_mask_prime(p);
  std::string digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 16) throw std::invalid_argument("bad hex mask: " + text);
  Mask mask = 0;
  for (char ch : digits) {
    int v = 0;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw std::invalid_argument("bad hex mask: " + text);
    mask = (mask << 4) | static_cast<Mask>(v);
  }
  return ConnectionSet(p, mask).mask();
}

CayleyGraph::CayleyGraph(const ConnectionSet& s) : p_(s.prime().value()) {
  const OddPrime p = s.prime();
  const auto elements = all_elements(p);
  const auto gens = s.elements();
  adjacency_.resize(elements.size());
  for (const GroupElement& x : elements) {
    auto& row = adjacency_[x.index()];
    for (const GroupElement& g : gens) row.push_back((g * x).index());
    std::sort(row.begin(), row.end());
  }
}

std::size_t CayleyGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& row : adjacency_) degree_sum += row.size();
  return degree_sum / 2;
}

bool CayleyGraph::is_regular() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [&](const auto& row) {
    return row.size() == adjacency_.front().size();
  });
}

bool CayleyGraph::is_symmetric() const {
  for (int x = 0; x < vertex_count(); ++x) {
    for (int y : adjacency_[x]) {
      if (!std::binary_search(adjacency_[y].begin(), adjacency_[y].end(), x)) return false;
    }
  }
  return true;
}

int CayleyGraph::component_count() const {
  std::vector<char> seen(vertex_count(), 0);
  int components = 0;
  for (int start = 0; start < vertex_count(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

std::string CayleyGraph::to_dot() const {
  const OddPrime p = prime();
  std::ostringstream out;
  out << "graph cayley_T" << 8 * p.value() << " {\n";
  for (int x = 0; x < vertex_count(); ++x) {
    out << "  " << x << " [label=\"" << GroupElement::from_index(p, x).to_string() << "\"];\n";
  }
  for (int x = 0; x < vertex_count(); ++x) {
    for (int y : adjacency_[x]) {
      if (x < y) out << "  " << x << " -- " << y << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

CayleyGraph build_cayley_graph(const ConnectionSet& s) { return CayleyGraph(s); }

bool is_connected(const ConnectionSet& s) {
  return ConnectivityProbe(s.prime()).connected(s.mask());
}

BigInt burnside_raw_sum(OddPrime p) {
  const auto action = shared_action(p);
  BigInt sum = 0;
  for (const Permutation& perm : action->permutations()) {
    BigInt one = 1;
    sum += one << cycle_type_of(perm).total_cycles();
  }
  return sum;
}

BigInt burnside_count(OddPrime p) {
  const auto order = static_cast<std::int64_t>(shared_action(p)->order());
  return require_integer(Rational(burnside_raw_sum(p), order), "Burnside orbit count");
}

Mask orbit_minimum(const DomainAction& action, Mask mask) {
  Mask best = mask;
  for (const Permutation& perm : action.permutations()) {
    best = std::min(best, apply_permutation(perm, mask));
  }
  return best;
}

OrbitCensus orbit_census(OddPrime p, const SweepOptions& options) {
  if (p.value() > options.cap) {
    throw std::invalid_argument("exhaustive sweep refused: p = " + std::to_string(p.value()) +
                                " exceeds the oracle cap " + std::to_string(options.cap));
  }
  require_mask_prime(p);
  const auto action = shared_action(p);
  const ByteImageTables images(*action);
  const ConnectivityProbe probe(p);
  const Mask b_bits = ((Mask{1} << (2 * p.value())) - 1) << action->domain().b_begin();
  const Mask end = Mask{1} << domain_bits(p);

  constexpr Mask kBlock = Mask{1} << 14;
  std::atomic<Mask> next{0};
  const unsigned workers = resolve_workers(options.workers);
  std::vector<OrbitCensus> partial(workers);

  auto run = [&](OrbitCensus& local) {
    for (;;) {
      const Mask lo = next.fetch_add(kBlock);
      if (lo >= end) return;
      const Mask hi = std::min(end, lo + kBlock);
      for (Mask mask = lo; mask < hi; ++mask) {
        bool minimal = true;
        for (int t = 0; t < images.perms() && minimal; ++t) {
          minimal = images.image(t, mask) >= mask;
        }
        if (!minimal) continue;
        ++local.total_orbits;
        if (probe.connected(mask)) {
          ++local.connected_orbits;
        } else if ((mask & b_bits) != 0) {
          ++local.b_touching_orbits;
        } else {
          ++local.a_only_orbits;
        }
      }
    }
  };

  {
    std::vector<std::jthread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, std::ref(partial[w]));
    run(partial[0]);
  }

  OrbitCensus census;
  census.p = p.value();
  for (const OrbitCensus& part : partial) {
    census.total_orbits += part.total_orbits;
    census.connected_orbits += part.connected_orbits;
    census.a_only_orbits += part.a_only_orbits;
    census.b_touching_orbits += part.b_touching_orbits;
  }
  return census;
}

BigInt orbit_partition_count(OddPrime p, const SweepOptions& options) {
  return orbit_census(p, options).total_orbits;
}

BigInt connected_orbit_count(OddPrime p, const SweepOptions& options) {
  return orbit_census(p, options).connected_orbits;
}

DisconnectedCensus disconnected_census(OddPrime p, const SweepOptions& options) {
  const OrbitCensus census = orbit_census(p, options);
  return {census.a_only_orbits, census.b_touching_orbits};
}

BigInt disconnected_orbit_count_burnside(OddPrime p, const SweepOptions& options) {
  if (p.value() > options.cap) {
    throw std::invalid_argument("exhaustive sweep refused: p = " + std::to_string(p.value()) +
                                " exceeds the oracle cap " + std::to_string(options.cap));
  }
  require_mask_prime(p);
  const auto action = shared_action(p);
  const ConnectivityProbe probe(p);
  const Mask end = Mask{1} << domain_bits(p);

  constexpr Mask kBlock = Mask{1} << 14;
  std::atomic<Mask> next{0};
  const unsigned workers = resolve_workers(options.workers);
  std::vector<std::uint64_t> partial(workers, 0);

  auto run = [&](std::uint64_t& local) {
    for (;;) {
      const Mask lo = next.fetch_add(kBlock);
      if (lo >= end) return;
      const Mask hi = std::min(end, lo + kBlock);
      for (Mask mask = lo; mask < hi; ++mask) {
        if (probe.connected(mask)) continue;
        for (const Permutation& perm : action->permutations()) {
          if (apply_permutation(perm, mask) == mask) ++local;
        }
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, std::ref(partial[w]));
    run(partial[0]);
  }
  BigInt fixed_total = 0;
  for (std::uint64_t part : partial) fixed_total += part;
  return require_integer(Rational(fixed_total, static_cast<std::int64_t>(action->order())),
                         "disconnected orbit count");
}

BigInt circulant_orbit_count(OddPrime p) {
  const int q = p.value();
  if (q > 31) throw std::invalid_argument("circulant oracle supports p <= 31");
  const int n = p.twice();
  // Class of v in Z_{2p} \ {0}: {v, -v} has index min(v, 2p - v) - 1, so {p}
  // is the last of the p classes.
  auto class_of = [&](int v) { return std::min(v, n - v) - 1; };
  std::vector<Permutation> perms;
  for (const UnitResidue& u : units_2p(p)) {
    std::vector<int> images(q);
    for (int v = 1; v <= q; ++v) images[class_of(v)] = class_of(static_cast<int>(mod(std::int64_t{u.value()} * v, n)));
    perms.emplace_back(std::move(images));
  }
  std::uint64_t orbits = 0;
  const Mask end = Mask{1} << q;
  for (Mask mask = 0; mask < end; ++mask) {
    bool minimal = true;
    for (std::size_t t = 0; t < perms.size() && minimal; ++t) {
      minimal = apply_permutation(perms[t], mask) >= mask;
    }
    if (minimal) ++orbits;
  }
  return orbits;
}

}  // namespace cayley8p
