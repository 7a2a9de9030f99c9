#include "gcpoly/assigning.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gcpoly/detail/disjoint_sets.hpp"

namespace gcpoly {

namespace {

std::string describe(const EdgeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i].value);
  }
  return out + "}";
}

void require_edges(const MultiGraph& g, const EdgeSet& x) {
  for (EdgeId id : x) g.position(id);
}

}  // namespace

Assigning Assigning::constant(const MultiGraph& g, int value) {
  if (value != 0 && value != 1) throw InputError("assigning values must be 0 or 1");
  Assigning a;
  for (const Cycle& c : enumerate_cycles(g)) a.values_.emplace(c.edges, value);
  return a;
}

Assigning Assigning::from_values(const MultiGraph& g, std::map<EdgeSet, int> values) {
  for (const auto& [edges, value] : values) {
    if (value != 0 && value != 1) throw InputError("assigning values must be 0 or 1");
    if (!is_cycle(g, edges)) throw InputError("assigning key " + describe(edges) + " is not a cycle");
  }
  Assigning a;
  a.values_ = std::move(values);
  require_total(g, a);
  return a;
}

int Assigning::at(const EdgeSet& cycle) const {
  auto it = values_.find(cycle);
  if (it == values_.end()) throw InputError("assigning has no value for cycle " + describe(cycle));
  return it->second;
}

void require_total(const MultiGraph& g, const Assigning& a) {
  const auto cycles = enumerate_cycles(g);
  for (const Cycle& c : cycles) {
    if (!a.contains(c.edges)) throw InputError("assigning misses cycle " + describe(c.edges));
  }
  if (cycles.size() != a.size()) throw InputError("assigning has keys that are not cycles of the graph");
}

Assigning induced(const MultiGraph& g, const EdgeFunction& f) {
  require_total(g, f);
  std::map<EdgeSet, int> values;
  for (const Cycle& c : enumerate_cycles(g)) {
    values.emplace(c.edges, is_zero(cycle_sum(g, f, c)) ? 0 : 1);
  }
  Assigning a = Assigning::from_values(g, std::move(values));
  a.set_admissible(true);
  return a;
}

Assigning restrict_to_edges(const Assigning& a, const MultiGraph& g, const EdgeSet& x) {
  require_edges(g, x);
  std::map<EdgeSet, int> kept;
  for (const auto& [edges, value] : a.values()) {
    if (is_subset(edges, x)) kept.emplace(edges, value);
  }
  Assigning out = Assigning::from_values(restrict_to(g, x), std::move(kept));
  out.set_admissible(a.admissible());
  return out;
}

Assigning restrict_delete(const Assigning& a, const MultiGraph& g, EdgeId e) {
  g.position(e);
  std::map<EdgeSet, int> kept;
  for (const auto& [edges, value] : a.values()) {
    if (!std::binary_search(edges.begin(), edges.end(), e)) kept.emplace(edges, value);
  }
  Assigning out = Assigning::from_values(delete_edges(g, {e}), std::move(kept));
  out.set_admissible(a.admissible());
  return out;
}

Assigning restrict_contract(const Assigning& a, const MultiGraph& g, EdgeId e) {
  const MultiGraph minor = contract(g, e);
  std::map<EdgeSet, int> values;
  for (const Cycle& c : enumerate_cycles(minor)) {
    if (is_cycle(g, c.edges)) {
      values.emplace(c.edges, a.at(c.edges));
    } else {
      EdgeSet with_e = c.edges;
      with_e.insert(std::lower_bound(with_e.begin(), with_e.end(), e), e);
      values.emplace(c.edges, a.at(with_e));
    }
  }
  Assigning out = Assigning::from_values(minor, std::move(values));
  out.set_admissible(a.admissible());
  return out;
}

bool is_compatible(const Assigning& a, const MultiGraph& g, const EdgeSet& x) {
  require_edges(g, x);
  return std::none_of(a.values().begin(), a.values().end(), [&](const auto& kv) {
    return kv.second == 1 && is_subset(kv.first, x);
  });
}

int delta(const MultiGraph& g, const Assigning& a, const EdgeSet& x) {
  return is_compatible(a, g, x) ? 1 : 0;
}

bool pointwise_leq(const Assigning& a, const Assigning& b) {
  if (a.size() != b.size()) throw InputError("assignings are defined on different cycle families");
  for (const auto& [edges, value] : a.values()) {
    if (value > b.at(edges)) return false;
  }
  return true;
}

std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t order) {
  if (order == 0) throw InputError("group order must be positive");
  if (order == 1) return {AbelianGroup({1})};
  // Chains m1 | m2 | ... | mr with m1 >= 2 and product `order`.
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::int64_t> chain;
  std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t rest, std::uint64_t last) {
    if (rest == 1) {
      chains.push_back(chain);
      return;
    }
    for (std::uint64_t d = last; d <= rest; d += last) {
      if (rest % d != 0) continue;
      // whatever remains must still be a multiple of d
      if ((rest / d) % d != 0 && rest / d != 1) continue;
      chain.push_back(static_cast<std::int64_t>(d));
      grow(rest / d, d);
      chain.pop_back();
    }
  };
  for (std::uint64_t d = 2; d <= order; ++d) {
    if (order % d != 0) continue;
    if ((order / d) % d != 0 && order / d != 1) continue;
    chain = {static_cast<std::int64_t>(d)};
    grow(order / d, d);
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<AbelianGroup> out;
  for (auto& c : chains) out.emplace_back(std::move(c));
  return out;
}

std::optional<EdgeFunction> find_inducing_function(const MultiGraph& g, const Assigning& a,
                                                   const AbelianGroup& group, const Budget& budget) {
  require_total(g, a);
  const std::uint64_t n = group.order();
  if (n > 4096) throw BudgetExceeded("admissibility search is limited to groups of order 4096");

  // Free edges: everything outside a greedy spanning forest.
  detail::DisjointSets forest(g.num_vertices());
  std::vector<std::size_t> free_edges;
  std::vector<std::size_t> slot_of(g.num_edges(), g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (!forest.unite(e.tail.value, e.head.value)) {
      slot_of[i] = free_edges.size();
      free_edges.push_back(i);
    }
  }

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < free_edges.size(); ++i) {
    if (candidates > budget.max_iterations / n) {
      throw BudgetExceeded("admissibility search space exceeds the iteration budget");
    }
    candidates *= n;
  }

  const auto elems = elements(group);
  std::vector<std::uint32_t> add_table(n * n), neg_table(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    neg_table[x] = static_cast<std::uint32_t>(index_of(group, neg(group, elems[x])));
    for (std::uint64_t y = 0; y < n; ++y) {
      add_table[x * n + y] = static_cast<std::uint32_t>(index_of(group, add(group, elems[x], elems[y])));
    }
  }

  struct Target {
    std::vector<std::pair<std::size_t, int>> terms;  // (free slot, sign)
    int value;
  };
  std::vector<Target> targets;
  for (const Cycle& c : enumerate_cycles(g)) {
    Target t{{}, a.at(c.edges)};
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      const std::size_t slot = slot_of[g.position(c.edges[i])];
      if (slot != g.num_edges()) t.terms.emplace_back(slot, c.eta[i]);
    }
    targets.push_back(std::move(t));
  }

  std::vector<std::uint32_t> values(free_edges.size(), 0);
  for (std::uint64_t iter = 0; iter < candidates; ++iter) {
    const bool match = std::all_of(targets.begin(), targets.end(), [&](const Target& t) {
      std::uint32_t sum = 0;
      for (auto [slot, s] : t.terms) {
        const std::uint32_t x = s > 0 ? values[slot] : neg_table[values[slot]];
        sum = add_table[sum * n + x];
      }
      return (sum == 0 ? 0 : 1) == t.value;
    });
    if (match) {
      EdgeFunction f = EdgeFunction::zero(g, group);
      for (std::size_t s = 0; s < free_edges.size(); ++s) {
        f.set(g.edges()[free_edges[s]].id, elems[values[s]]);
      }
      return f;
    }
    for (std::size_t s = free_edges.size(); s-- > 0;) {
      if (++values[s] < n) break;
      values[s] = 0;
    }
  }
  return std::nullopt;
}

std::optional<AdmissibilityWitness> check_admissible(const MultiGraph& g, const Assigning& a,
                                                     std::uint64_t max_order, const Budget& budget) {
  for (std::uint64_t order = 1; order <= max_order; ++order) {
    for (const AbelianGroup& group : abelian_groups_of_order(order)) {
      if (auto f = find_inducing_function(g, a, group, budget)) {
        return AdmissibilityWitness{group, std::move(*f)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gcpoly
