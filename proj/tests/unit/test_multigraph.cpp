#include <doctest.h>

#include <random>

#include "gcpoly/errors.hpp"
#include "gcpoly/multigraph.hpp"
#include "support/graphs.hpp"

using namespace gcpoly;
using namespace gcpoly::testing;

TEST_CASE("construction validates endpoints and ids") {
  CHECK_THROWS_AS(graph(2, {{0, 0, 2}}), InputError);
  CHECK_THROWS_AS(graph(3, {{4, 0, 1}, {4, 1, 2}}), InputError);
  const MultiGraph g = graph(3, {{7, 0, 1}, {2, 1, 2}, {5, 2, 2}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.edge_ids() == make_edge_set({2, 5, 7}));
  CHECK(g.contains(EdgeId(5)));
  CHECK_FALSE(g.contains(EdgeId(6)));
  CHECK(g.edge(EdgeId(5)).is_loop());
  CHECK_THROWS_AS(g.edge(EdgeId(6)), InputError);
}

TEST_CASE("components") {
  CHECK(num_components(empty_graph(3)) == 3);
  CHECK(num_components(path_graph(4)) == 1);
  const MultiGraph two = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const Components c = components(two);
  CHECK(c.count == 2);
  CHECK(c.labels == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
  CHECK(num_components(empty_graph(0)) == 0);
}

TEST_CASE("rank") {
  const MultiGraph tri = cycle_graph(3);
  CHECK(rank(tri, {}) == 0);
  CHECK(rank(tri, tri.edge_ids()) == 2);
  const MultiGraph two_edges = from_pairs(4, {{0, 1}, {2, 3}});
  CHECK(rank(two_edges, two_edges.edge_ids()) == 2);
  CHECK_THROWS_AS(rank(tri, make_edge_set({9})), InputError);
  // loops never add rank
  CHECK(rank(graph(1, {{0, 0, 0}}), make_edge_set({0})) == 0);
}

TEST_CASE("bridges and loops") {
  CHECK(is_bridge(path_graph(3), EdgeId(0)));
  CHECK_FALSE(is_bridge(cycle_graph(3), EdgeId(0)));
  const MultiGraph digon = cycle_graph(2);
  CHECK_FALSE(is_bridge(digon, EdgeId(0)));
  // delete-and-recount oracle
  CHECK(num_components(delete_edges(digon, make_edge_set({0}))) == num_components(digon));
  const MultiGraph loop = graph(1, {{0, 0, 0}});
  CHECK(is_loop(loop, EdgeId(0)));
  CHECK_FALSE(is_bridge(loop, EdgeId(0)));
  CHECK_THROWS_AS(is_bridge(loop, EdgeId(1)), InputError);
  CHECK_THROWS_AS(is_loop(loop, EdgeId(1)), InputError);
}

TEST_CASE("delete and restrict keep ids and vertex count") {
  const MultiGraph tri = cycle_graph(3);
  const MultiGraph none = delete_edges(tri, tri.edge_ids());
  CHECK(none.num_vertices() == 3);
  CHECK(none.num_edges() == 0);
  const MultiGraph p = delete_edges(tri, make_edge_set({1}));
  CHECK(p.edge_ids() == make_edge_set({0, 2}));
  CHECK(num_components(p) == 1);
  CHECK(delete_edges(cycle_graph(2), make_edge_set({0})).edge_ids() == make_edge_set({1}));
  CHECK_THROWS_AS(delete_edges(tri, make_edge_set({3})), InputError);
  CHECK(restrict_to(tri, make_edge_set({1})).edge_ids() == make_edge_set({1}));
}

TEST_CASE("contract") {
  // triangle -> digon
  const MultiGraph d = contract(cycle_graph(3), EdgeId(0));
  CHECK(d.num_vertices() == 2);
  CHECK(d.edge_ids() == make_edge_set({1, 2}));
  for (const Edge& e : d.edges()) CHECK_FALSE(e.is_loop());
  // endpoint remap oracle: v0,v1 -> v0 and v2 -> v1
  CHECK(d.edge(EdgeId(1)).tail == VertexId(0));
  CHECK(d.edge(EdgeId(1)).head == VertexId(1));
  CHECK(d.edge(EdgeId(2)).tail == VertexId(1));
  CHECK(d.edge(EdgeId(2)).head == VertexId(0));

  // digon -> loop
  const MultiGraph l = contract(cycle_graph(2), EdgeId(0));
  CHECK(l.num_vertices() == 1);
  CHECK(l.edge(EdgeId(1)).is_loop());

  const MultiGraph k1 = contract(path_graph(2), EdgeId(0));
  CHECK(k1.num_vertices() == 1);
  CHECK(k1.num_edges() == 0);

  CHECK_THROWS_AS(contract(graph(1, {{0, 0, 0}}), EdgeId(0)), ContractError);
  CHECK_THROWS_AS(contract(path_graph(2), EdgeId(3)), InputError);
}

TEST_CASE("component subgraphs keep edge ids") {
  const MultiGraph g = from_pairs(5, {{3, 4}, {0, 1}, {1, 1}});
  const auto parts = component_subgraphs(g);
  REQUIRE(parts.size() == 3);
  std::size_t vertices = 0, edges = 0;
  for (const auto& p : parts) {
    CHECK(num_components(p) == 1);
    vertices += p.num_vertices();
    edges += p.num_edges();
  }
  CHECK(vertices == 5);
  CHECK(edges == 3);
}

TEST_CASE("edge ids are stable under deletion and contraction") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = random_multigraph(5, 7, rng);
    for (const Edge& e : g.edges()) {
      const MultiGraph minus = delete_edges(g, make_edge_set({e.id.value}));
      for (const Edge& other : g.edges()) {
        if (other.id == e.id) continue;
        CHECK(minus.edge(other.id) == other);
      }
      if (e.is_loop()) continue;
      const MultiGraph slash = contract(g, e.id);
      CHECK(slash.num_vertices() == g.num_vertices() - 1);
      CHECK(slash.num_edges() == g.num_edges() - 1);
      for (const Edge& other : g.edges()) {
        if (other.id != e.id) CHECK(slash.contains(other.id));
      }
    }
  }
}

TEST_CASE("rank is monotone and submodular on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = random_multigraph(5, 6, rng);
    const auto ids = g.edge_ids();
    for (std::uint64_t x = 0; x < (1u << ids.size()); ++x) {
      EdgeSet s;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (x >> i & 1) s.push_back(ids[i]);
      }
      const std::size_t r = rank(g, s);
      CHECK(r <= s.size());
      CHECK(r <= rank(g, ids));
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (x >> i & 1) continue;
        EdgeSet bigger = s;
        bigger.push_back(ids[i]);
        bigger = make_edge_set(bigger);
        const std::size_t rb = rank(g, bigger);
        CHECK((rb == r || rb == r + 1));
      }
    }
  }
}
