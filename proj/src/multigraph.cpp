#include "gcpoly/multigraph.hpp"

#include <algorithm>
#include <string>

#include "gcpoly/detail/disjoint_sets.hpp"
#include "gcpoly/errors.hpp"

namespace gcpoly {

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << 'v' << v.value; }
std::ostream& operator<<(std::ostream& os, EdgeId e) { return os << 'e' << e.value; }

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet make_edge_set(std::initializer_list<std::int64_t> ids) {
  std::vector<EdgeId> out;
  out.reserve(ids.size());
  for (auto id : ids) out.emplace_back(id);
  return make_edge_set(std::move(out));
}

bool is_subset(const EdgeSet& inner, const EdgeSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

MultiGraph::MultiGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail.value >= num_vertices_ || e.head.value >= num_vertices_) {
      throw InputError("edge " + std::to_string(e.id.value) + " has an endpoint out of range");
    }
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw InputError("duplicate edge id " + std::to_string(e.id.value));
    }
  }
}

EdgeSet MultiGraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool MultiGraph::contains(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

std::size_t MultiGraph::position(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) {
    throw InputError("unknown edge id " + std::to_string(e.value));
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& MultiGraph::edge(EdgeId e) const { return edges_[position(e)]; }

Components components(const MultiGraph& g) {
  detail::DisjointSets sets(g.num_vertices());
  for (const Edge& e : g.edges()) sets.unite(e.tail.value, e.head.value);

  Components out;
  out.labels.assign(g.num_vertices(), 0);
  std::vector<std::size_t> label_of_root(g.num_vertices(), g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::size_t root = sets.find(v);
    if (label_of_root[root] == g.num_vertices()) label_of_root[root] = out.count++;
    out.labels[v] = label_of_root[root];
  }
  return out;
}

std::size_t num_components(const MultiGraph& g) {
  detail::DisjointSets sets(g.num_vertices());
  for (const Edge& e : g.edges()) sets.unite(e.tail.value, e.head.value);
  return sets.classes();
}

std::size_t rank(const MultiGraph& g, const EdgeSet& x) {
  detail::DisjointSets sets(g.num_vertices());
  for (EdgeId id : x) {
    const Edge& e = g.edge(id);
    sets.unite(e.tail.value, e.head.value);
  }
  return g.num_vertices() - sets.classes();
}

bool is_loop(const MultiGraph& g, EdgeId e) { return g.edge(e).is_loop(); }

bool is_bridge(const MultiGraph& g, EdgeId e) {
  const Edge& target = g.edge(e);
  if (target.is_loop()) return false;
  detail::DisjointSets sets(g.num_vertices());
  for (const Edge& other : g.edges()) {
    if (other.id != e) sets.unite(other.tail.value, other.head.value);
  }
  return sets.find(target.tail.value) != sets.find(target.head.value);
}

MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& s) {
  for (EdgeId id : s) g.position(id);
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(s.begin(), s.end(), e.id)) kept.push_back(e);
  }
  return MultiGraph(g.num_vertices(), std::move(kept));
}

MultiGraph restrict_to(const MultiGraph& g, const EdgeSet& x) {
  for (EdgeId id : x) g.position(id);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(x.begin(), x.end(), e.id)) kept.push_back(e);
  }
  return MultiGraph(g.num_vertices(), std::move(kept));
}

MultiGraph contract(const MultiGraph& g, EdgeId id) {
  const Edge& target = g.edge(id);
  if (target.is_loop()) {
    throw ContractError("cannot contract loop " + std::to_string(id.value));
  }
  const std::size_t keep = std::min(target.tail.value, target.head.value);
  const std::size_t gone = std::max(target.tail.value, target.head.value);
  auto remap = [&](VertexId v) {
    std::size_t x = v.value == gone ? keep : v.value;
    return VertexId(x > gone ? x - 1 : x);
  };

  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - 1);
  for (const Edge& e : g.edges()) {
    if (e.id == id) continue;
    edges.push_back(Edge{e.id, remap(e.tail), remap(e.head)});
  }
  return MultiGraph(g.num_vertices() - 1, std::move(edges));
}

std::vector<MultiGraph> component_subgraphs(const MultiGraph& g) {
  const Components comp = components(g);
  std::vector<std::size_t> local_index(g.num_vertices());
  std::vector<std::size_t> sizes(comp.count, 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    local_index[v] = sizes[comp.labels[v]]++;
  }
  std::vector<std::vector<Edge>> edges(comp.count);
  for (const Edge& e : g.edges()) {
    edges[comp.labels[e.tail.value]].push_back(
        Edge{e.id, VertexId(local_index[e.tail.value]), VertexId(local_index[e.head.value])});
  }
  std::vector<MultiGraph> out;
  out.reserve(comp.count);
  for (std::size_t c = 0; c < comp.count; ++c) out.emplace_back(sizes[c], std::move(edges[c]));
  return out;
}

}  // namespace gcpoly
