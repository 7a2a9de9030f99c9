#include "gcpoly/cycles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gcpoly/assigning.hpp"
#include "gcpoly/detail/disjoint_sets.hpp"
#include "gcpoly/detail/edge_mask.hpp"

namespace gcpoly {

namespace {

struct Incidence {
  std::size_t edge;  // position in g.edges()
  std::size_t other;
};

std::vector<std::vector<Incidence>> link_adjacency(const MultiGraph& g) {
  std::vector<std::vector<Incidence>> adj(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) continue;
    adj[e.tail.value].push_back({i, e.head.value});
    adj[e.head.value].push_back({i, e.tail.value});
  }
  return adj;
}

// Orders (edge position, sign) pairs by edge id and flips the global sign so
// the smallest id is +1.
Cycle canonical_cycle(const MultiGraph& g, std::vector<std::pair<std::size_t, int>> walk) {
  std::sort(walk.begin(), walk.end());
  Cycle c;
  const int flip = walk.front().second;
  for (auto [pos, s] : walk) {
    c.edges.push_back(g.edges()[pos].id);
    c.eta.push_back(s * flip);
  }
  return c;
}

// Walks the cycle through its edge set. Requires is_cycle(g, s).
Cycle traverse(const MultiGraph& g, const EdgeSet& s) {
  if (s.size() == 1) return Cycle{s, {1}};
  std::vector<std::size_t> positions;
  for (EdgeId id : s) positions.push_back(g.position(id));

  std::vector<std::pair<std::size_t, int>> walk;
  std::vector<bool> used(positions.size(), false);
  const Edge& first = g.edges()[positions[0]];
  std::size_t at = first.head.value;
  walk.emplace_back(positions[0], 1);
  used[0] = true;
  while (walk.size() < positions.size()) {
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (used[j]) continue;
      const Edge& e = g.edges()[positions[j]];
      if (e.tail.value == at) {
        walk.emplace_back(positions[j], 1);
        at = e.head.value;
      } else if (e.head.value == at) {
        walk.emplace_back(positions[j], -1);
        at = e.tail.value;
      } else {
        continue;
      }
      used[j] = true;
      break;
    }
  }
  return canonical_cycle(g, std::move(walk));
}

}  // namespace

int Cycle::sign(EdgeId e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return 0;
  return eta[static_cast<std::size_t>(it - edges.begin())];
}

LinearOrder LinearOrder::increasing(const MultiGraph& g) { return LinearOrder(g, g.edge_ids()); }

LinearOrder::LinearOrder(const MultiGraph& g, std::vector<EdgeId> sequence)
    : sequence_(std::move(sequence)) {
  if (sequence_.size() != g.num_edges()) {
    throw InputError("linear order must list each of the " + std::to_string(g.num_edges()) +
                     " edges exactly once");
  }
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (!g.contains(sequence_[i])) {
      throw InputError("linear order names unknown edge " + std::to_string(sequence_[i].value));
    }
    if (!rank_.emplace(sequence_[i], i).second) {
      throw InputError("linear order repeats edge " + std::to_string(sequence_[i].value));
    }
  }
}

std::size_t LinearOrder::rank_of(EdgeId e) const {
  auto it = rank_.find(e);
  if (it == rank_.end()) throw InputError("edge " + std::to_string(e.value) + " is not ordered");
  return it->second;
}

EdgeId LinearOrder::min_of(const EdgeSet& s) const {
  if (s.empty()) throw InputError("minimum of an empty edge set");
  return *std::min_element(s.begin(), s.end(),
                           [this](EdgeId a, EdgeId b) { return rank_of(a) < rank_of(b); });
}

EdgeId LinearOrder::max_of(const EdgeSet& s) const {
  if (s.empty()) throw InputError("maximum of an empty edge set");
  return *std::max_element(s.begin(), s.end(),
                           [this](EdgeId a, EdgeId b) { return rank_of(a) < rank_of(b); });
}

bool is_cycle(const MultiGraph& g, const EdgeSet& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    return false;
  }
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  detail::DisjointSets sets(g.num_vertices());
  for (EdgeId id : s) {
    if (!g.contains(id)) return false;
    const Edge& e = g.edge(id);
    degree[e.tail.value] += 1;
    degree[e.head.value] += 1;
    sets.unite(e.tail.value, e.head.value);
  }
  std::size_t root = g.num_vertices();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] != 2) return false;
    if (root == g.num_vertices()) root = sets.find(v);
    if (sets.find(v) != root) return false;
  }
  return true;
}

std::vector<Cycle> enumerate_cycles(const MultiGraph& g) {
  std::map<EdgeSet, Cycle> found;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) found.emplace(EdgeSet{e.id}, Cycle{{e.id}, {1}});
  }

  // Each link cycle is found from its smallest vertex, once per direction.
  const auto adj = link_adjacency(g);
  std::vector<bool> on_path(g.num_vertices(), false);
  std::vector<bool> edge_used(g.num_edges(), false);
  std::vector<std::pair<std::size_t, int>> walk;

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t at) {
    for (const Incidence& inc : adj[at]) {
      if (edge_used[inc.edge]) continue;
      const Edge& e = g.edges()[inc.edge];
      const int s = e.tail.value == at ? 1 : -1;
      if (inc.other == start) {
        walk.emplace_back(inc.edge, s);
        Cycle c = canonical_cycle(g, walk);
        found.emplace(c.edges, std::move(c));
        walk.pop_back();
      } else if (inc.other > start && !on_path[inc.other]) {
        walk.emplace_back(inc.edge, s);
        edge_used[inc.edge] = true;
        on_path[inc.other] = true;
        extend(start, inc.other);
        on_path[inc.other] = false;
        edge_used[inc.edge] = false;
        walk.pop_back();
      }
    }
  };
  for (std::size_t start = 0; start < g.num_vertices(); ++start) {
    on_path[start] = true;
    extend(start, start);
    on_path[start] = false;
  }

  std::vector<Cycle> out;
  out.reserve(found.size());
  for (auto& [key, c] : found) out.push_back(std::move(c));
  return out;
}

Cycle make_cycle(const MultiGraph& g, const EdgeSet& s) {
  if (!is_cycle(g, s)) throw InputError("edge set is not a cycle of the graph");
  return traverse(g, s);
}

std::vector<int> signed_incidence(const MultiGraph& g, const EdgeSet& cycle) {
  const Cycle c = make_cycle(g, cycle);
  std::vector<int> eta(g.num_edges(), 0);
  for (std::size_t i = 0; i < c.edges.size(); ++i) eta[g.position(c.edges[i])] = c.eta[i];
  return eta;
}

std::vector<Bond> enumerate_bonds(const MultiGraph& g) {
  const Components comp = components(g);
  std::vector<std::vector<std::size_t>> members(comp.count);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) members[comp.labels[v]].push_back(v);

  std::vector<Bond> bonds;
  std::vector<int> side(g.num_vertices(), -1);
  for (const auto& verts : members) {
    if (verts.size() < 2) continue;
    if (verts.size() > 40) throw BudgetExceeded("bond enumeration limited to 40-vertex components");
    const std::uint64_t half = std::uint64_t{1} << (verts.size() - 1);
    // The first vertex always sits on side 0; s picks the rest of side 0.
    for (std::uint64_t s = 0; s + 1 < half; ++s) {
      side[verts[0]] = 0;
      for (std::size_t j = 1; j < verts.size(); ++j) side[verts[j]] = (s >> (j - 1) & 1) ? 0 : 1;

      detail::DisjointSets sets(g.num_vertices());
      EdgeSet cut;
      for (const Edge& e : g.edges()) {
        if (comp.labels[e.tail.value] != comp.labels[verts[0]] || e.is_loop()) continue;
        if (side[e.tail.value] == side[e.head.value]) {
          sets.unite(e.tail.value, e.head.value);
        } else {
          cut.push_back(e.id);
        }
      }
      std::size_t roots[2] = {g.num_vertices(), g.num_vertices()};
      bool connected_sides = true;
      for (std::size_t v : verts) {
        std::size_t& r = roots[side[v]];
        if (r == g.num_vertices()) {
          r = sets.find(v);
        } else if (sets.find(v) != r) {
          connected_sides = false;
          break;
        }
      }
      if (connected_sides) bonds.push_back(Bond{std::move(cut)});
    }
    for (std::size_t v : verts) side[v] = -1;
  }
  std::sort(bonds.begin(), bonds.end(),
            [](const Bond& a, const Bond& b) { return a.edges < b.edges; });
  return bonds;
}

std::vector<EdgeSet> broken_cycles(const MultiGraph& g, const Assigning& a, const LinearOrder& ord) {
  require_total(g, a);
  std::set<EdgeSet> out;
  for (const auto& [edges, value] : a.values()) {
    if (value != 0) continue;
    EdgeSet broken = edges;
    broken.erase(std::find(broken.begin(), broken.end(), ord.max_of(edges)));
    out.insert(std::move(broken));
  }
  return {out.begin(), out.end()};
}

void for_each_compatible_set(const MultiGraph& g, const LinearOrder& ord,
                             const std::function<void(const EdgeSet&)>& visit,
                             const Budget& budget) {
  detail::require_subset_budget(g, budget);
  struct BondMask {
    detail::EdgeMask all;
    detail::EdgeMask min;
  };
  std::vector<BondMask> bonds;
  for (const Bond& b : enumerate_bonds(g)) {
    bonds.push_back({detail::to_mask(g, b.edges),
                     detail::EdgeMask{1} << g.position(ord.min_of(b.edges))});
  }
  const detail::EdgeMask end = detail::EdgeMask{1} << g.num_edges();
  for (detail::EdgeMask x = 0; x < end; ++x) {
    const bool ok = std::none_of(bonds.begin(), bonds.end(),
                                 [x](const BondMask& b) { return (x & b.all) == b.min; });
    if (ok) visit(detail::from_mask(g, x));
  }
}

std::vector<EdgeSet> compatible_sets(const MultiGraph& g, const LinearOrder& ord,
                                     const Budget& budget) {
  std::vector<EdgeSet> out;
  for_each_compatible_set(g, ord, [&](const EdgeSet& x) { out.push_back(x); }, budget);
  return out;
}

}  // namespace gcpoly
