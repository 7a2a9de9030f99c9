#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace gcpoly {

struct VertexId {
  std::size_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::size_t v) : value(v) {}
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Edge identity. Survives deletion and contraction of other edges.
struct EdgeId {
  std::int64_t value = 0;

  constexpr EdgeId() = default;
  constexpr explicit EdgeId(std::int64_t v) : value(v) {}
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);
std::ostream& operator<<(std::ostream& os, EdgeId e);

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet make_edge_set(std::initializer_list<std::int64_t> ids);
bool is_subset(const EdgeSet& inner, const EdgeSet& outer);

/// An arc of the reference orientation: tail -> head. tail == head is a loop.
struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable multigraph with a fixed reference orientation. Loops and
/// parallel edges are allowed. Edges are kept sorted by id.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws InputError on out-of-range endpoints or repeated ids.
  MultiGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  EdgeSet edge_ids() const;

  bool contains(EdgeId e) const;
  /// Throws InputError for an unknown id.
  const Edge& edge(EdgeId e) const;
  /// Index of e in edges(). Throws InputError for an unknown id.
  std::size_t position(EdgeId e) const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

struct Components {
  std::size_t count = 0;
  // labels[v] is the component index of vertex v, numbered by first vertex
  std::vector<std::size_t> labels;
};

Components components(const MultiGraph& g);
std::size_t num_components(const MultiGraph& g);

/// |V| - c(G|X). Throws InputError if X names an unknown edge.
std::size_t rank(const MultiGraph& g, const EdgeSet& x);

bool is_loop(const MultiGraph& g, EdgeId e);
bool is_bridge(const MultiGraph& g, EdgeId e);

/// G - S. Vertices and surviving edges are untouched.
MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& s);
/// G|X, the spanning subgraph with edge set X.
MultiGraph restrict_to(const MultiGraph& g, const EdgeSet& x);

/// G/e for a link e. The merged vertex keeps the smaller endpoint index and
/// higher indices shift down by one. Throws ContractError for a loop.
MultiGraph contract(const MultiGraph& g, EdgeId e);

/// The components of g as standalone graphs, vertices renumbered densely in
/// increasing order, edge ids kept.
std::vector<MultiGraph> component_subgraphs(const MultiGraph& g);

}  // namespace gcpoly
