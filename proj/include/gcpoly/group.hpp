#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gcpoly/cycles.hpp"
#include "gcpoly/errors.hpp"
#include "gcpoly/multigraph.hpp"

namespace gcpoly {

/// Z_{m1} x ... x Z_{mr}. Every finite abelian group is isomorphic to one.
class AbelianGroup {
 public:
  /// Throws InputError on an empty list or a modulus below 1.
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::uint64_t order() const { return order_; }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
  std::uint64_t order_ = 1;
};

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Throws InputError if x does not belong to the group.
void require_member(const AbelianGroup& group, const GroupElement& x);

GroupElement zero(const AbelianGroup& group);
bool is_zero(const GroupElement& x);
GroupElement add(const AbelianGroup& group, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& group, const GroupElement& a);
GroupElement sub(const AbelianGroup& group, const GroupElement& a, const GroupElement& b);

/// Odometer order: the last coordinate turns fastest.
GroupElement element_at(const AbelianGroup& group, std::uint64_t index);
std::uint64_t index_of(const AbelianGroup& group, const GroupElement& x);
std::vector<GroupElement> elements(const AbelianGroup& group);

/// f : E(G) -> A, keyed by edge id.
class EdgeFunction {
 public:
  EdgeFunction(AbelianGroup group, std::map<EdgeId, GroupElement> values);
  static EdgeFunction zero(const MultiGraph& g, const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  const std::map<EdgeId, GroupElement>& values() const { return values_; }
  /// Throws InputError for an edge without a value.
  const GroupElement& at(EdgeId e) const;
  void set(EdgeId e, GroupElement x);

  friend bool operator==(const EdgeFunction&, const EdgeFunction&) = default;

 private:
  AbelianGroup group_;
  std::map<EdgeId, GroupElement> values_;
};

/// Throws InputError unless f has a value on every edge of g.
void require_total(const MultiGraph& g, const EdgeFunction& f);

using VertexColoring = std::vector<GroupElement>;

/// delta c(e) = c(head) - c(tail) on links, 0 on loops.
EdgeFunction coboundary(const MultiGraph& g, const AbelianGroup& group, const VertexColoring& c);

/// An edge function on G/e inducing the contracted assigning: f shifted by
/// the coboundary that vanishes everywhere except at head(e), where it is
/// f(e), then restricted. Plain restriction is only right when f(e) = 0.
/// Throws ContractError if e is a loop.
EdgeFunction contract_edge_function(const MultiGraph& g, const EdgeFunction& f, EdgeId e);

/// Signed sum of f around the cycle.
GroupElement cycle_sum(const MultiGraph& g, const EdgeFunction& f, const Cycle& c);

/// Number of colorings c : V -> A with c(head) - c(tail) != f(e) on every
/// edge. Throws BudgetExceeded if |A|^|V| exceeds the iteration cap.
std::uint64_t count_colorings(const MultiGraph& g, const EdgeFunction& f, const Budget& budget = {});

/// Number of distinct coboundaries t with t(e) != f(e) on every edge, found
/// by running over all colorings. Same budget as count_colorings.
std::uint64_t count_tensions(const MultiGraph& g, const EdgeFunction& f, const Budget& budget = {});

}  // namespace gcpoly
