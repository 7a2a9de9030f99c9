#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gcpoly/errors.hpp"
#include "gcpoly/multigraph.hpp"

namespace gcpoly {

class Assigning;

/// A connected 2-regular subgraph, stored as its edge set together with the
/// sign pattern of one traversal. eta[i] belongs to edges[i]: +1 when the arc
/// agrees with the traversal, -1 otherwise. The traversal direction is fixed
/// so that the smallest edge id carries +1.
struct Cycle {
  EdgeSet edges;
  std::vector<int> eta;

  /// Sign on e, or 0 when e is not on the cycle.
  int sign(EdgeId e) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// A minimal nonempty edge cut.
struct Bond {
  EdgeSet edges;
  friend bool operator==(const Bond&, const Bond&) = default;
};

/// Total order on the edges of one graph.
class LinearOrder {
 public:
  /// Increasing edge id.
  static LinearOrder increasing(const MultiGraph& g);
  /// Throws InputError unless sequence is a permutation of g's edge ids.
  LinearOrder(const MultiGraph& g, std::vector<EdgeId> sequence);

  const std::vector<EdgeId>& sequence() const { return sequence_; }
  /// Position of e in the order. Throws InputError for an unknown edge.
  std::size_t rank_of(EdgeId e) const;
  bool precedes(EdgeId a, EdgeId b) const { return rank_of(a) < rank_of(b); }
  EdgeId min_of(const EdgeSet& s) const;
  EdgeId max_of(const EdgeSet& s) const;

 private:
  LinearOrder() = default;
  std::vector<EdgeId> sequence_;
  std::map<EdgeId, std::size_t> rank_;
};

/// True iff s is the edge set of a connected 2-regular subgraph of g.
bool is_cycle(const MultiGraph& g, const EdgeSet& s);

/// Every cycle of g exactly once, sorted by edge set. Loops give 1-edge
/// cycles and each pair of parallel links gives a 2-edge cycle.
std::vector<Cycle> enumerate_cycles(const MultiGraph& g);

/// Builds the Cycle record for an edge set. Throws InputError if s is not a
/// cycle of g.
Cycle make_cycle(const MultiGraph& g, const EdgeSet& s);

/// The full incidence vector, indexed like g.edges(), zero off the cycle.
std::vector<int> signed_incidence(const MultiGraph& g, const EdgeSet& cycle);

/// Every bond of g exactly once, sorted by edge set.
std::vector<Bond> enumerate_bonds(const MultiGraph& g);

/// Edge sets E(C) minus the order-maximal edge, over cycles with a(C) = 0.
/// Sorted, duplicates merged. Throws InputError if a misses a cycle of g.
std::vector<EdgeSet> broken_cycles(const MultiGraph& g, const Assigning& a,
                                   const LinearOrder& ord);

/// Calls visit for each X with X ∩ B != {min B} for every bond B, in
/// increasing bitmask order over edge positions.
void for_each_compatible_set(const MultiGraph& g, const LinearOrder& ord,
                             const std::function<void(const EdgeSet&)>& visit,
                             const Budget& budget = {});
std::vector<EdgeSet> compatible_sets(const MultiGraph& g, const LinearOrder& ord,
                                     const Budget& budget = {});

}  // namespace gcpoly
