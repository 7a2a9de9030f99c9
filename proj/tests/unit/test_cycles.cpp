#include <doctest.h>

#include <random>
#include <set>

#include "gcpoly/assigning.hpp"
#include "gcpoly/cycles.hpp"
#include "gcpoly/errors.hpp"
#include "support/graphs.hpp"

using namespace gcpoly;
using namespace gcpoly::testing;

namespace {

std::set<EdgeSet> cycle_sets(const MultiGraph& g) {
  std::set<EdgeSet> out;
  for (const Cycle& c : enumerate_cycles(g)) CHECK(out.insert(c.edges).second);
  return out;
}

std::set<EdgeSet> bond_sets(const MultiGraph& g) {
  std::set<EdgeSet> out;
  for (const Bond& b : enumerate_bonds(g)) CHECK(out.insert(b.edges).second);
  return out;
}

// Net flow of eta through every vertex must vanish.
bool is_circulation(const MultiGraph& g, const Cycle& c) {
  std::vector<int> net(g.num_vertices(), 0);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = g.edge(c.edges[i]);
    net[e.tail.value] -= c.eta[i];
    net[e.head.value] += c.eta[i];
  }
  for (int x : net) {
    if (x != 0) return false;
  }
  for (int s : c.eta) {
    if (s != 1 && s != -1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumerate_cycles on small graphs") {
  CHECK(enumerate_cycles(path_graph(5)).empty());
  CHECK(enumerate_cycles(star_graph(4)).empty());

  const auto digon = enumerate_cycles(cycle_graph(2));
  REQUIRE(digon.size() == 1);
  CHECK(digon[0].edges.size() == 2);

  const MultiGraph k4 = complete_graph(4);
  const auto cycles = enumerate_cycles(k4);
  CHECK(cycles.size() == 7);
  CHECK(cycle_sets(k4) == brute_force_cycles(k4));
  std::size_t triangles = 0, squares = 0;
  for (const auto& c : cycles) {
    triangles += c.edges.size() == 3;
    squares += c.edges.size() == 4;
  }
  CHECK(triangles == 4);
  CHECK(squares == 3);

  const auto loop = enumerate_cycles(graph(2, {{0, 0, 1}, {3, 1, 1}}));
  REQUIRE(loop.size() == 1);
  CHECK(loop[0].edges == make_edge_set({3}));
}

TEST_CASE("signed incidence") {
  const MultiGraph tri = cycle_graph(3);
  const Cycle c = make_cycle(tri, tri.edge_ids());
  CHECK(c.eta == std::vector<int>{1, 1, 1});

  const MultiGraph digon = graph(2, {{0, 0, 1}, {1, 0, 1}});
  const Cycle d = make_cycle(digon, digon.edge_ids());
  CHECK(d.eta == std::vector<int>{1, -1});
  CHECK(d.sign(EdgeId(1)) == -1);
  CHECK(d.sign(EdgeId(9)) == 0);
  CHECK(signed_incidence(digon, digon.edge_ids()) == std::vector<int>{1, -1});

  const MultiGraph loop = graph(2, {{0, 0, 1}, {1, 1, 1}});
  CHECK(signed_incidence(loop, make_edge_set({1})) == std::vector<int>{0, 1});

  CHECK_THROWS_AS(make_cycle(path_graph(3), path_graph(3).edge_ids()), InputError);
  CHECK_THROWS_AS(signed_incidence(path_graph(3), path_graph(3).edge_ids()), InputError);
}

TEST_CASE("enumerate_cycles matches the subset oracle on random multigraphs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const MultiGraph g = random_multigraph(n, rng() % 9, rng);
    CHECK(cycle_sets(g) == brute_force_cycles(g));
    for (const Cycle& c : enumerate_cycles(g)) {
      CHECK(is_cycle(g, c.edges));
      CHECK(is_circulation(g, c));
      CHECK(c.eta.front() == 1);
    }
  }
}

TEST_CASE("enumerate_bonds") {
  CHECK(bond_sets(path_graph(2)) == std::set<EdgeSet>{make_edge_set({0})});
  CHECK(bond_sets(cycle_graph(3)) ==
        std::set<EdgeSet>{make_edge_set({0, 1}), make_edge_set({0, 2}), make_edge_set({1, 2})});
  CHECK(bond_sets(path_graph(3)) == std::set<EdgeSet>{make_edge_set({0}), make_edge_set({1})});
  CHECK(enumerate_bonds(empty_graph(3)).empty());
  CHECK(enumerate_bonds(graph(1, {{0, 0, 0}})).empty());

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const MultiGraph g = random_multigraph(1 + rng() % 5, rng() % 8, rng);
    CHECK(bond_sets(g) == brute_force_bonds(g));
  }
}

TEST_CASE("broken cycles") {
  const MultiGraph tri = cycle_graph(3);
  const LinearOrder ord = LinearOrder::increasing(tri);
  CHECK(broken_cycles(tri, Assigning::constant(tri, 0), ord) == std::vector<EdgeSet>{make_edge_set({0, 1})});
  CHECK(broken_cycles(tri, Assigning::constant(tri, 1), ord).empty());
  const LinearOrder other(tri, {EdgeId(2), EdgeId(0), EdgeId(1)});
  CHECK(broken_cycles(tri, Assigning::constant(tri, 0), other) == std::vector<EdgeSet>{make_edge_set({0, 2})});

  const MultiGraph loop = graph(1, {{0, 0, 0}});
  CHECK(broken_cycles(loop, Assigning::constant(loop, 0), LinearOrder::increasing(loop)) ==
        std::vector<EdgeSet>{EdgeSet{}});

  CHECK_THROWS_AS(broken_cycles(tri, Assigning{}, ord), InputError);
}

TEST_CASE("linear orders") {
  const MultiGraph tri = cycle_graph(3);
  CHECK_THROWS_AS(LinearOrder(tri, {EdgeId(0), EdgeId(1)}), InputError);
  CHECK_THROWS_AS(LinearOrder(tri, {EdgeId(0), EdgeId(1), EdgeId(1)}), InputError);
  CHECK_THROWS_AS(LinearOrder(tri, {EdgeId(0), EdgeId(1), EdgeId(5)}), InputError);
  const LinearOrder ord(tri, {EdgeId(2), EdgeId(0), EdgeId(1)});
  CHECK(ord.precedes(EdgeId(2), EdgeId(0)));
  CHECK(ord.min_of(make_edge_set({0, 2})) == EdgeId(2));
  CHECK(ord.max_of(make_edge_set({0, 1, 2})) == EdgeId(1));
  CHECK_THROWS_AS(ord.rank_of(EdgeId(7)), InputError);
}

TEST_CASE("compatible sets") {
  const MultiGraph k2 = path_graph(2);
  CHECK(compatible_sets(k2, LinearOrder::increasing(k2)) == std::vector<EdgeSet>{EdgeSet{}});
  CHECK(compatible_sets(empty_graph(3), LinearOrder::increasing(empty_graph(3))) == std::vector<EdgeSet>{EdgeSet{}});

  // filter all subsets against the bond list
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph g = random_multigraph(1 + rng() % 4, rng() % 7, rng);
    const LinearOrder ord = random_order(g, rng);
    const auto bonds = brute_force_bonds(g);
    std::set<EdgeSet> expected;
    const auto ids = g.edge_ids();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << ids.size()); ++x) {
      EdgeSet s;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (x >> i & 1) s.push_back(ids[i]);
      }
      bool ok = true;
      for (const EdgeSet& b : bonds) {
        EdgeSet meet;
        std::set_intersection(s.begin(), s.end(), b.begin(), b.end(), std::back_inserter(meet));
        ok = ok && !(meet.size() == 1 && meet[0] == ord.min_of(b));
      }
      if (ok) expected.insert(s);
    }
    const auto got = compatible_sets(g, ord);
    CHECK(std::set<EdgeSet>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }

  const MultiGraph tri = cycle_graph(3);
  // bonds {0,1},{0,2},{1,2}, minima 0, 0 and 1
  const auto tri_sets = compatible_sets(tri, LinearOrder::increasing(tri));
  CHECK(std::set<EdgeSet>(tri_sets.begin(), tri_sets.end()) ==
        std::set<EdgeSet>{EdgeSet{}, make_edge_set({2}), make_edge_set({1, 2}), make_edge_set({0, 1, 2})});
}
