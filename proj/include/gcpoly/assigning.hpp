#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcpoly/cycles.hpp"
#include "gcpoly/group.hpp"
#include "gcpoly/multigraph.hpp"

namespace gcpoly {

/// A 0/1 value on every cycle of a graph, keyed by the cycle's edge set.
/// A graph without cycles carries the empty assigning (alpha == 0 by
/// convention).
class Assigning {
 public:
  Assigning() = default;

  /// The same value on every cycle of g.
  static Assigning constant(const MultiGraph& g, int value);
  /// Throws InputError if a key is not a cycle of g, a value is not 0/1, or a
  /// cycle of g is missing.
  static Assigning from_values(const MultiGraph& g, std::map<EdgeSet, int> values);

  /// Throws InputError if the cycle is not a key.
  int at(const EdgeSet& cycle) const;
  bool contains(const EdgeSet& cycle) const { return values_.contains(cycle); }
  std::size_t size() const { return values_.size(); }
  const std::map<EdgeSet, int>& values() const { return values_; }

  /// Set when the assigning is known to be induced by some edge function.
  bool admissible() const { return admissible_; }
  void set_admissible(bool witnessed) { admissible_ = witnessed; }

  /// Compares values only.
  friend bool operator==(const Assigning& a, const Assigning& b) { return a.values_ == b.values_; }

 private:
  std::map<EdgeSet, int> values_;
  bool admissible_ = false;
};

/// Throws InputError unless a has exactly the cycles of g as keys.
void require_total(const MultiGraph& g, const Assigning& a);

/// alpha(C) = 0 iff the signed sum of f around C vanishes.
Assigning induced(const MultiGraph& g, const EdgeFunction& f);

/// Assigning of G - e: the cycles avoiding e keep their values.
Assigning restrict_delete(const Assigning& a, const MultiGraph& g, EdgeId e);
/// Assigning of the subgraph of g with edge set x.
Assigning restrict_to_edges(const Assigning& a, const MultiGraph& g, const EdgeSet& x);
/// Assigning of G / e. A cycle S of G/e takes a(S) if S is a cycle of G and
/// a(S + e) otherwise. Throws ContractError if e is a loop.
Assigning restrict_contract(const Assigning& a, const MultiGraph& g, EdgeId e);

/// No cycle inside x has value 1.
bool is_compatible(const Assigning& a, const MultiGraph& g, const EdgeSet& x);
/// 1 if x is compatible, 0 otherwise.
int delta(const MultiGraph& g, const Assigning& a, const EdgeSet& x);

/// a(C) <= b(C) for every cycle. Both must have the same keys.
bool pointwise_leq(const Assigning& a, const Assigning& b);

struct AdmissibilityWitness {
  AbelianGroup group;
  EdgeFunction f;
};

/// Searches one group for an f with induced(g, f) == a. Only f vanishing on
/// a fixed spanning forest are tried; every other f differs from one of
/// those by a coboundary, which leaves cycle sums alone.
std::optional<EdgeFunction> find_inducing_function(const MultiGraph& g, const Assigning& a,
                                                   const AbelianGroup& group,
                                                   const Budget& budget = {});

/// Tries every abelian group of order <= max_order (invariant factor form,
/// increasing order). An empty result means nothing was found within the
/// bound, not that a is inadmissible.
std::optional<AdmissibilityWitness> check_admissible(const MultiGraph& g, const Assigning& a,
                                                     std::uint64_t max_order,
                                                     const Budget& budget = {});

/// Products of cyclic groups of the given order, one per isomorphism class.
std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t order);

}  // namespace gcpoly
