#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "gcpoly/errors.hpp"
#include "gcpoly/multigraph.hpp"

namespace gcpoly::detail {

// Bit i stands for g.edges()[i].
using EdgeMask = std::uint64_t;

inline EdgeMask to_mask(const MultiGraph& g, const EdgeSet& s) {
  EdgeMask m = 0;
  for (EdgeId id : s) m |= EdgeMask{1} << g.position(id);
  return m;
}

inline EdgeSet from_mask(const MultiGraph& g, EdgeMask m) {
  EdgeSet out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (m >> i & 1) out.push_back(g.edges()[i].id);
  }
  return out;
}

inline void require_subset_budget(const MultiGraph& g, const Budget& budget) {
  if (g.num_edges() > budget.max_subset_edges || g.num_edges() >= 63) {
    throw BudgetExceeded("subset expansion over " + std::to_string(g.num_edges()) +
                         " edges exceeds the limit of " +
                         std::to_string(budget.max_subset_edges));
  }
}

}  // namespace gcpoly::detail
