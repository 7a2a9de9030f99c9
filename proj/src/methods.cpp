#include "gcpoly/methods.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <utility>

#include "gcpoly/detail/disjoint_sets.hpp"
#include "gcpoly/detail/edge_mask.hpp"

namespace gcpoly {

namespace {

using detail::EdgeMask;

// Masks of the cycles valued 1; a subset is compatible iff it contains none.
std::vector<EdgeMask> blocking_masks(const MultiGraph& g, const Assigning& a) {
  require_total(g, a);
  std::vector<EdgeMask> out;
  for (const auto& [edges, value] : a.values()) {
    if (value == 1) out.push_back(detail::to_mask(g, edges));
  }
  return out;
}

bool contains_any(EdgeMask x, const std::vector<EdgeMask>& masks) {
  return std::any_of(masks.begin(), masks.end(), [x](EdgeMask m) { return (x & m) == m; });
}

std::size_t components_of(const MultiGraph& g, EdgeMask x) {
  detail::DisjointSets sets(g.num_vertices());
  for (std::size_t i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1) sets.unite(g.edges()[i].tail.value, g.edges()[i].head.value);
  }
  return sets.classes();
}

// counts[c] = signed number of compatible spanning subgraphs with c components.
std::vector<std::int64_t> signed_component_counts(const MultiGraph& g, const Assigning& a,
                                                  const Budget& budget) {
  detail::require_subset_budget(g, budget);
  const auto blocking = blocking_masks(g, a);
  std::vector<std::int64_t> counts(g.num_vertices() + 1, 0);
  const EdgeMask end = EdgeMask{1} << g.num_edges();
  for (EdgeMask x = 0; x < end; ++x) {
    if (contains_any(x, blocking)) continue;
    counts[components_of(g, x)] += (std::popcount(x) % 2 == 0) ? 1 : -1;
  }
  return counts;
}

IntPolynomial from_counts(const std::vector<std::int64_t>& counts, std::size_t offset) {
  IntPolynomial p;
  for (std::size_t c = offset; c < counts.size(); ++c) p.add_term(c - offset, counts[c]);
  return p;
}

void warn_if_unverified(const Assigning& a, std::string_view method, Diagnostics* diag) {
  if (diag != nullptr && !a.admissible()) {
    diag->warnings.push_back(std::string(method) +
                             ": assigning is not known to be induced by an edge function; "
                             "the result equals P only for admissible assignings");
  }
}

// Memo key: vertex count, edges, then every (cycle, value) pair.
std::vector<std::int64_t> memo_key(const MultiGraph& g, const Assigning& a) {
  std::vector<std::int64_t> key;
  key.reserve(1 + 3 * g.num_edges() + 4 * a.size());
  key.push_back(static_cast<std::int64_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) {
    key.push_back(e.id.value);
    key.push_back(static_cast<std::int64_t>(e.tail.value));
    key.push_back(static_cast<std::int64_t>(e.head.value));
  }
  for (const auto& [edges, value] : a.values()) {
    key.push_back(-1);
    for (EdgeId id : edges) key.push_back(id.value);
    key.push_back(-2 - value);
  }
  return key;
}

class DelConSolver {
 public:
  IntPolynomial solve(const MultiGraph& g, const Assigning& a) {
    if (g.num_edges() == 0) return IntPolynomial::constant(1);
    auto key = memo_key(g, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPolynomial result;
    const EdgeId e = pick_edge(g);
    if (is_loop(g, e)) {
      if (a.at({e}) == 1) result = solve(delete_edges(g, {e}), restrict_delete(a, g, e));
    } else if (is_bridge(g, e)) {
      result = IntPolynomial::binomial_power(-1, 1) *
               solve(delete_edges(g, {e}), restrict_delete(a, g, e));
    } else {
      result = solve(delete_edges(g, {e}), restrict_delete(a, g, e)) -
               solve(contract(g, e), restrict_contract(a, g, e));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static EdgeId pick_edge(const MultiGraph& g) {
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) return e.id;
    }
    for (const Edge& e : g.edges()) {
      if (is_bridge(g, e.id)) return e.id;
    }
    return g.edges().front().id;
  }

  std::map<std::vector<std::int64_t>, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial poly_subgraph(const MultiGraph& g, const Assigning& a, const Budget& budget) {
  return from_counts(signed_component_counts(g, a, budget), 0);
}

IntPolynomial tau_subgraph(const MultiGraph& g, const Assigning& a, const Budget& budget) {
  return from_counts(signed_component_counts(g, a, budget), num_components(g));
}

IntPolynomial tau_delcon(const MultiGraph& g, const Assigning& a) {
  require_total(g, a);
  DelConSolver solver;
  return solver.solve(g, a);
}

IntPolynomial poly_delcon(const MultiGraph& g, const Assigning& a) {
  return tau_delcon(g, a).shifted_up(num_components(g));
}

std::vector<BigInt> broken_cycle_counts(const MultiGraph& g, const Assigning& a,
                                        const LinearOrder& ord, const Budget& budget) {
  detail::require_subset_budget(g, budget);
  const std::size_t r = g.num_vertices() - num_components(g);
  std::vector<std::uint64_t> w(r + 1, 0);

  std::vector<EdgeMask> broken;
  for (const EdgeSet& b : broken_cycles(g, a, ord)) broken.push_back(detail::to_mask(g, b));
  const bool empty_broken = std::find(broken.begin(), broken.end(), EdgeMask{0}) != broken.end();

  if (!empty_broken) {
    // Grow forests edge by edge; a broken cycle inside X stays inside every
    // superset, so those branches are cut.
    std::function<void(std::size_t, EdgeMask, const detail::DisjointSets&)> grow =
        [&](std::size_t i, EdgeMask x, const detail::DisjointSets& sets) {
          if (i == g.num_edges()) {
            ++w[static_cast<std::size_t>(std::popcount(x))];
            return;
          }
          grow(i + 1, x, sets);
          const Edge& e = g.edges()[i];
          detail::DisjointSets next = sets;
          if (e.is_loop() || !next.unite(e.tail.value, e.head.value)) return;
          const EdgeMask y = x | EdgeMask{1} << i;
          if (contains_any(y, broken)) return;
          grow(i + 1, y, next);
        };
    grow(0, 0, detail::DisjointSets(g.num_vertices()));
  }
  return {w.begin(), w.end()};
}

IntPolynomial poly_broken(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                          const Budget& budget, Diagnostics* diag) {
  warn_if_unverified(a, "broken", diag);
  const auto w = broken_cycle_counts(g, a, ord, budget);
  IntPolynomial p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    p.add_term(g.num_vertices() - i, i % 2 == 0 ? w[i] : BigInt(-w[i]));
  }
  return p;
}

IntPolynomial tau_bond(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                       const Budget& budget, Diagnostics* diag) {
  warn_if_unverified(a, "bond", diag);
  detail::require_subset_budget(g, budget);
  const auto blocking = blocking_masks(g, a);
  std::vector<std::pair<EdgeMask, EdgeMask>> bonds;  // (all edges, minimum edge)
  for (const Bond& b : enumerate_bonds(g)) {
    bonds.emplace_back(detail::to_mask(g, b.edges), EdgeMask{1} << g.position(ord.min_of(b.edges)));
  }

  const std::size_t c_g = num_components(g);
  const std::size_t r_g = g.num_vertices() - c_g;
  // counts[j] collects (-1)^|X| for the X with r(G) - r(X) = j
  std::vector<std::int64_t> counts(r_g + 1, 0);
  const EdgeMask end = EdgeMask{1} << g.num_edges();
  for (EdgeMask x = 0; x < end; ++x) {
    const bool in_family = std::none_of(bonds.begin(), bonds.end(),
                                        [x](const auto& b) { return (x & b.first) == b.second; });
    if (!in_family || contains_any(x, blocking)) continue;
    const std::size_t r_x = g.num_vertices() - components_of(g, x);
    counts[r_g - r_x] += (std::popcount(x) % 2 == 0) ? 1 : -1;
  }

  IntPolynomial tau;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] != 0) tau += IntPolynomial::binomial_power(-1, j) * IntPolynomial::constant(counts[j]);
  }
  return tau;
}

IntPolynomial poly_bond(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                        const Budget& budget, Diagnostics* diag) {
  return tau_bond(g, a, ord, budget, diag).shifted_up(num_components(g));
}

IntPolynomial decompose(const MultiGraph& g, const Assigning& a, const Budget& budget) {
  require_total(g, a);
  IntPolynomial product = IntPolynomial::constant(1);
  for (const MultiGraph& part : component_subgraphs(g)) {
    const EdgeSet ids = part.edge_ids();
    std::map<EdgeSet, int> values;
    for (const auto& [edges, value] : a.values()) {
      if (is_subset(edges, ids)) values.emplace(edges, value);
    }
    product *= poly_subgraph(part, Assigning::from_values(part, std::move(values)), budget);
  }
  return product;
}

std::vector<BigInt> unsigned_coefficients(const IntPolynomial& p, std::size_t num_vertices) {
  std::vector<BigInt> w;
  for (std::size_t i = 0; i <= num_vertices; ++i) {
    const BigInt c = p.coefficient(num_vertices - i);
    w.push_back(i % 2 == 0 ? c : BigInt(-c));
  }
  return w;
}

Method parse_method(std::string_view name) {
  if (name == "subgraph") return Method::subgraph;
  if (name == "delcon") return Method::delcon;
  if (name == "broken") return Method::broken;
  if (name == "bond") return Method::bond;
  if (name == "decompose") return Method::decompose;
  throw InputError("unknown method '" + std::string(name) +
                   "' (expected subgraph, delcon, broken, bond or decompose)");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::subgraph: return "subgraph";
    case Method::delcon: return "delcon";
    case Method::broken: return "broken";
    case Method::bond: return "bond";
    case Method::decompose: return "decompose";
  }
  return "unknown";
}

IntPolynomial cycle_assigning_polynomial(const MultiGraph& g, const Assigning& a, Method method,
                                         const LinearOrder& ord, const Budget& budget,
                                         Diagnostics* diag) {
  switch (method) {
    case Method::subgraph: return poly_subgraph(g, a, budget);
    case Method::delcon: return poly_delcon(g, a);
    case Method::broken: return poly_broken(g, a, ord, budget, diag);
    case Method::bond: return poly_bond(g, a, ord, budget, diag);
    case Method::decompose: return decompose(g, a, budget);
  }
  throw InputError("unknown method");
}

IntPolynomial alpha_assigning_polynomial(const MultiGraph& g, const Assigning& a, Method method,
                                         const LinearOrder& ord, const Budget& budget,
                                         Diagnostics* diag) {
  switch (method) {
    case Method::subgraph: return tau_subgraph(g, a, budget);
    case Method::delcon: return tau_delcon(g, a);
    case Method::bond: return tau_bond(g, a, ord, budget, diag);
    case Method::broken:
    case Method::decompose:
      return cycle_assigning_polynomial(g, a, method, ord, budget, diag).shifted_down(num_components(g));
  }
  throw InputError("unknown method");
}

IntPolynomial chromatic_polynomial(const MultiGraph& g) {
  using SimpleGraph = std::pair<std::size_t, std::set<std::pair<std::size_t, std::size_t>>>;
  SimpleGraph start{g.num_vertices(), {}};
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return {};
    start.second.emplace(std::min(e.tail.value, e.head.value), std::max(e.tail.value, e.head.value));
  }

  std::map<SimpleGraph, IntPolynomial> memo;
  std::function<IntPolynomial(const SimpleGraph&)> solve = [&](const SimpleGraph& h) -> IntPolynomial {
    if (h.second.empty()) return IntPolynomial::monomial(h.first);
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    const auto [u, v] = *h.second.begin();

    SimpleGraph minus = h;
    minus.second.erase(minus.second.begin());

    // merge v into u, then close the gap left by v
    SimpleGraph merged{h.first - 1, {}};
    auto relabel = [v = v, u = u](std::size_t x) {
      if (x == v) x = u;
      return x > v ? x - 1 : x;
    };
    for (auto [x, y] : minus.second) {
      const std::size_t a = relabel(x), b = relabel(y);
      if (a != b) merged.second.emplace(std::min(a, b), std::max(a, b));
    }
    IntPolynomial result = solve(minus) - solve(merged);
    memo.emplace(h, result);
    return result;
  };
  return solve(start);
}

}  // namespace gcpoly
