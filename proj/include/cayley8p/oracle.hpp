#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley8p/pair_domain.hpp"
#include "cayley8p/polya.hpp"

namespace cayley8p {

using Mask = std::uint64_t;

/// Largest p whose 4p-bit connection-set masks fit in a Mask.
inline constexpr int kMaxMaskPrime = 13;

/// Subset of the pair classes of Domain(p); bit i selects class i.
class ConnectionSet {
 public:
  /// Throws std::invalid_argument if p > kMaxMaskPrime or mask has bits
  /// beyond 4p.
  ConnectionSet(OddPrime p, Mask mask);

  OddPrime prime() const { return OddPrime::unchecked(p_); }
  Mask mask() const { return mask_; }
  /// Union of the selected classes, as group elements (inverse-closed).
  std::vector<GroupElement> elements() const;

 private:
  int p_;
  Mask mask_;
};

/// Fixed-width lowercase hex with p digits (4p bits), "0x" prefixed.
std::string mask_to_hex(OddPrime p, Mask mask);
/// Accepts an optional 0x prefix; rejects bits beyond 4p.
Mask mask_from_hex(OddPrime p, const std::string& text);

/// Undirected Cayley graph on the 8p elements (vertex = element index), x
/// adjacent to s*x for every s in the expanded connection set.
class CayleyGraph {
 public:
  explicit CayleyGraph(const ConnectionSet& s);

  OddPrime prime() const { return OddPrime::unchecked(p_); }
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::size_t edge_count() const;

  bool is_regular() const;
  bool is_symmetric() const;
  int component_count() const;

  /// Graphviz DOT with vertices labelled "a^k b^l".
  std::string to_dot() const;

 private:
  int p_;
  std::vector<std::vector<int>> adjacency_;
};

CayleyGraph build_cayley_graph(const ConnectionSet& s);

/// Traversal from the identity reaches all 8p vertices.
bool is_connected(const ConnectionSet& s);

/// sum over automorphisms f of 2^{cycles of f on the domain}, from
/// decomposed permutations only.
BigInt burnside_raw_sum(OddPrime p);
/// burnside_raw_sum / |Aut|
BigInt burnside_count(OddPrime p);

struct SweepOptions {
  int cap = 5;           // largest p allowed for exhaustive mask sweeps
  unsigned workers = 1;  // 0 means hardware concurrency
};

/// Per-orbit tallies from one pass over all 2^{4p} masks. An orbit is counted
/// at its numerically smallest mask.
struct OrbitCensus {
  int p = 0;
  std::uint64_t total_orbits = 0;
  std::uint64_t connected_orbits = 0;
  std::uint64_t a_only_orbits = 0;      // disconnected, no class from B
  std::uint64_t b_touching_orbits = 0;  // disconnected, meets B
  std::uint64_t disconnected_orbits() const { return a_only_orbits + b_touching_orbits; }
  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

/// Throws std::invalid_argument when p exceeds options.cap.
OrbitCensus orbit_census(OddPrime p, const SweepOptions& options = {});

BigInt orbit_partition_count(OddPrime p, const SweepOptions& options = {});
BigInt connected_orbit_count(OddPrime p, const SweepOptions& options = {});

struct DisconnectedCensus {
  std::uint64_t a_only_orbits = 0;
  std::uint64_t b_touching_orbits = 0;
};
DisconnectedCensus disconnected_census(OddPrime p, const SweepOptions& options = {});

/// Orbits of disconnected masks by Burnside over the disconnected masks:
/// (1/|Aut|) * sum over disconnected masks of their stabilizer size. Shares
/// no code path with the minimal-representative census.
BigInt disconnected_orbit_count_burnside(OddPrime p, const SweepOptions& options = {});

/// Smallest mask in the orbit of `mask`.
Mask orbit_minimum(const DomainAction& action, Mask mask);

/// Orbits of inverse-closed subsets of Z_{2p} \ {0} under multiplication by
/// units, by exhaustive scan of the 2^p subsets of its p inverse classes.
BigInt circulant_orbit_count(OddPrime p);

}  // namespace cayley8p
