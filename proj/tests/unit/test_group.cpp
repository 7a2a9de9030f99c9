#include <doctest.h>

#include <random>

#include "gcpoly/group.hpp"
#include "support/graphs.hpp"

using namespace gcpoly;
using namespace gcpoly::testing;

namespace {

GroupElement el(std::initializer_list<std::int64_t> r) { return GroupElement{std::vector<std::int64_t>(r)}; }

EdgeFunction function_of(const MultiGraph& g, const AbelianGroup& a, std::vector<std::int64_t> residues) {
  std::map<EdgeId, GroupElement> values;
  for (std::size_t i = 0; i < g.num_edges(); ++i) values.emplace(g.edges()[i].id, GroupElement{{residues[i]}});
  return EdgeFunction(a, values);
}

// All tensions as a set, by pushing every coloring through the coboundary.
std::set<std::vector<GroupElement>> tension_oracle(const MultiGraph& g, const EdgeFunction& f) {
  const AbelianGroup& a = f.group();
  std::set<std::vector<GroupElement>> out;
  std::vector<std::uint64_t> idx(g.num_vertices(), 0);
  while (true) {
    VertexColoring c;
    for (auto i : idx) c.push_back(element_at(a, i));
    const EdgeFunction t = coboundary(g, a, c);
    bool avoids = true;
    std::vector<GroupElement> key;
    for (const Edge& e : g.edges()) {
      avoids = avoids && t.at(e.id) != f.at(e.id);
      key.push_back(t.at(e.id));
    }
    if (avoids) out.insert(key);
    std::size_t v = 0;
    while (v < idx.size() && ++idx[v] == a.order()) idx[v++] = 0;
    if (v == idx.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("group arithmetic") {
  const AbelianGroup z3({3});
  CHECK(add(z3, el({2}), el({2})) == el({1}));
  const AbelianGroup v4({2, 2});
  CHECK(add(v4, el({1, 0}), el({1, 1})) == el({0, 1}));
  CHECK(neg(z3, zero(z3)) == zero(z3));
  CHECK(neg(z3, el({1})) == el({2}));
  CHECK(sub(z3, el({0}), el({1})) == el({2}));
  CHECK(is_zero(zero(v4)));
  CHECK(v4.order() == 4);
  CHECK_THROWS_AS(add(z3, el({1}), el({1, 0})), InputError);
  CHECK_THROWS_AS(add(z3, el({3}), el({1})), InputError);
  CHECK_THROWS_AS(AbelianGroup({}), InputError);
  CHECK_THROWS_AS(AbelianGroup({0}), InputError);
}

TEST_CASE("elements come in odometer order") {
  const AbelianGroup g({2, 3});
  const auto all = elements(g);
  REQUIRE(all.size() == 6);
  CHECK(all[0] == el({0, 0}));
  CHECK(all[1] == el({0, 1}));
  CHECK(all[3] == el({1, 0}));
  for (std::uint64_t i = 0; i < all.size(); ++i) CHECK(index_of(g, all[i]) == i);
  CHECK(std::set<GroupElement>(all.begin(), all.end()).size() == 6);
  CHECK_THROWS_AS(element_at(g, 6), InputError);
}

TEST_CASE("coboundary") {
  const AbelianGroup z3({3});
  const MultiGraph tri = cycle_graph(3);
  const EdgeFunction zero_t = coboundary(tri, z3, VertexColoring(3, el({2})));
  for (const Edge& e : tri.edges()) CHECK(is_zero(zero_t.at(e.id)));

  const MultiGraph k2 = path_graph(2);
  CHECK(coboundary(k2, z3, {el({0}), el({1})}).at(EdgeId(0)) == el({1}));

  const MultiGraph loop = graph(2, {{0, 0, 1}, {1, 1, 1}});
  CHECK(is_zero(coboundary(loop, z3, {el({0}), el({1})}).at(EdgeId(1))));
  CHECK_THROWS_AS(coboundary(loop, z3, {el({0})}), InputError);
}

TEST_CASE("cycle sums") {
  const AbelianGroup z2({2});
  const MultiGraph digon = graph(2, {{0, 0, 1}, {1, 0, 1}});
  const Cycle c = make_cycle(digon, digon.edge_ids());
  CHECK(cycle_sum(digon, function_of(digon, z2, {1, 0}), c) == el({1}));
  CHECK(is_zero(cycle_sum(digon, EdgeFunction::zero(digon, z2), c)));

  const AbelianGroup z5({5});
  const MultiGraph loop = graph(1, {{0, 0, 0}});
  const Cycle l = make_cycle(loop, loop.edge_ids());
  for (std::int64_t a = 0; a < 5; ++a) {
    const GroupElement s = cycle_sum(loop, function_of(loop, z5, {a}), l);
    CHECK((s == el({a}) || s == neg(z5, el({a}))));
    CHECK(is_zero(s) == (a == 0));
  }
}

TEST_CASE("tensions have zero cycle sums") {
  std::mt19937_64 rng(4);
  const AbelianGroup a({2, 2});
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = random_multigraph(4, 6, rng);
    VertexColoring c;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) c.push_back(element_at(a, rng() % 4));
    const EdgeFunction t = coboundary(g, a, c);
    for (const Cycle& cyc : enumerate_cycles(g)) CHECK(is_zero(cycle_sum(g, t, cyc)));
  }
}

TEST_CASE("count_colorings") {
  const AbelianGroup z3({3});
  const MultiGraph tri = cycle_graph(3);
  CHECK(count_colorings(tri, EdgeFunction::zero(tri, z3)) == 6);
  CHECK(count_colorings(tri, function_of(tri, z3, {1, 0, 0})) == 9);
  const MultiGraph loop = graph(1, {{0, 0, 0}});
  CHECK(count_colorings(loop, EdgeFunction::zero(loop, z3)) == 0);
  CHECK(count_colorings(loop, function_of(loop, z3, {1})) == 3);

  Budget tight;
  tight.max_iterations = 10;
  CHECK_THROWS_AS(count_colorings(path_graph(4), EdgeFunction::zero(path_graph(4), z3), tight), BudgetExceeded);
  CHECK_THROWS_AS(count_tensions(path_graph(4), EdgeFunction::zero(path_graph(4), z3), tight), BudgetExceeded);
}

TEST_CASE("count_tensions") {
  for (std::int64_t k = 2; k <= 5; ++k) {
    const AbelianGroup zk({k});
    for (std::size_t n = 1; n <= 5; ++n) {
      const MultiGraph t = path_graph(n);
      std::uint64_t expected = 1;
      for (std::size_t i = 1; i < n; ++i) expected *= static_cast<std::uint64_t>(k - 1);
      CHECK(count_tensions(t, EdgeFunction::zero(t, zk)) == expected);
    }
  }
  const AbelianGroup z3({3});
  CHECK(count_tensions(empty_graph(3), EdgeFunction::zero(empty_graph(3), z3)) == 1);
  const MultiGraph loop = graph(1, {{0, 0, 0}});
  CHECK(count_tensions(loop, function_of(loop, z3, {2})) == 1);
}

TEST_CASE("coloring count is |A|^c times the tension count") {
  std::mt19937_64 rng(9);
  const std::vector<AbelianGroup> groups{AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({2, 2})};
  for (int trial = 0; trial < 80; ++trial) {
    const MultiGraph g = random_multigraph(1 + rng() % 4, rng() % 6, rng);
    const AbelianGroup& a = groups[rng() % groups.size()];
    const EdgeFunction f = random_edge_function(g, a, rng);
    const auto oracle = tension_oracle(g, f);
    CHECK(count_tensions(g, f) == oracle.size());
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < num_components(g); ++i) scale *= a.order();
    CHECK(count_colorings(g, f) == scale * oracle.size());
  }
}

TEST_CASE("orientation reversal with negated values keeps the coloring count") {
  std::mt19937_64 rng(21);
  const AbelianGroup a({5});
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = random_multigraph(4, 5, rng);
    const EdgeFunction f = random_edge_function(g, a, rng);
    const MultiGraph flipped = reorient(g, rng);
    EdgeFunction f2 = f;
    for (const Edge& e : g.edges()) {
      if (flipped.edge(e.id).tail != e.tail) f2.set(e.id, neg(a, f.at(e.id)));
    }
    CHECK(count_colorings(g, f) == count_colorings(flipped, f2));
  }
}

TEST_CASE("contract_edge_function preserves cycle sums") {
  std::mt19937_64 rng(17);
  const AbelianGroup a({4});
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph g = random_multigraph(4, 6, rng);
    const EdgeFunction f = random_edge_function(g, a, rng);
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        CHECK_THROWS_AS(contract_edge_function(g, f, e.id), ContractError);
        continue;
      }
      const MultiGraph h = contract(g, e.id);
      const EdgeFunction fh = contract_edge_function(g, f, e.id);
      for (const Cycle& c : enumerate_cycles(h)) {
        EdgeSet lifted = c.edges;
        if (!is_cycle(g, lifted)) {
          lifted.push_back(e.id);
          lifted = make_edge_set(lifted);
        }
        REQUIRE(is_cycle(g, lifted));
        CHECK(is_zero(cycle_sum(h, fh, c)) == is_zero(cycle_sum(g, f, make_cycle(g, lifted))));
      }
    }
  }
}
