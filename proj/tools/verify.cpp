#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "gcpoly/methods.hpp"

namespace gcpoly::cli {

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult skip(std::string name, std::string why) {
  return {std::move(name), CheckStatus::skipped, std::move(why)};
}

std::string versus(const IntPolynomial& a, const IntPolynomial& b) {
  return a.to_string() + " vs " + b.to_string();
}

bool loops_all_one(const MultiGraph& g, const Assigning& a) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop() && a.at({e.id}) == 0) return false;
  }
  return true;
}

// Subsets that are compatible and contain no broken compatible cycle, by
// running over every edge subset.
std::uint64_t count_nbc_subgraphs(const MultiGraph& g, const Assigning& a, const LinearOrder& ord) {
  std::vector<std::uint64_t> one_cycles, broken;
  for (const auto& [edges, value] : a.values()) {
    std::uint64_t m = 0;
    for (EdgeId id : edges) m |= std::uint64_t{1} << g.position(id);
    if (value == 1) {
      one_cycles.push_back(m);
    } else {
      broken.push_back(m & ~(std::uint64_t{1} << g.position(ord.max_of(edges))));
    }
  }
  auto hits = [](std::uint64_t x, const std::vector<std::uint64_t>& ms) {
    return std::any_of(ms.begin(), ms.end(), [x](std::uint64_t m) { return (x & m) == m; });
  };
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.num_edges()); ++x) {
    if (!hits(x, one_cycles) && !hits(x, broken)) ++count;
  }
  return count;
}

std::vector<LinearOrder> sample_orders(const MultiGraph& g, const LinearOrder& given) {
  std::vector<LinearOrder> out{given};
  auto seq = given.sequence();
  std::reverse(seq.begin(), seq.end());
  out.emplace_back(g, seq);
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 4; ++i) {
    std::shuffle(seq.begin(), seq.end(), rng);
    out.emplace_back(g, seq);
  }
  return out;
}

}  // namespace

io::Json to_json(const CheckResult& r) {
  static constexpr const char* names[] = {"pass", "fail", "skipped"};
  io::Json j{{"name", r.name}, {"status", names[static_cast<int>(r.status)]}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::vector<CheckResult> verify_instance(const Instance& inst, const Budget& budget) {
  const MultiGraph& g = inst.graph;
  const Assigning& a = inst.assigning;
  const std::size_t c = num_components(g);
  const std::size_t r = g.num_vertices() - c;
  std::vector<CheckResult> out;

  const IntPolynomial p = poly_subgraph(g, a, budget);
  const IntPolynomial tau = tau_subgraph(g, a, budget);

  out.push_back(check("p_equals_k_pow_c_times_tau", p == tau.shifted_up(c), versus(p, tau.shifted_up(c))));
  const IntPolynomial via_delcon = poly_delcon(g, a);
  out.push_back(check("delcon_matches_subgraph", via_delcon == p, versus(via_delcon, p)));
  const IntPolynomial via_decompose = decompose(g, a, budget);
  out.push_back(check("decompose_matches_subgraph", via_decompose == p, versus(via_decompose, p)));

  const bool loops_ok = loops_all_one(g, a);
  if (loops_ok) {
    const bool deg_ok = !tau.is_zero() && *tau.degree() == r;
    out.push_back(check("degree_law", deg_ok, "tau = " + tau.to_string()));
  } else {
    out.push_back(check("degree_law", tau.is_zero(), "a loop is valued 0; tau = " + tau.to_string()));
  }

  const IntPolynomial chromatic = chromatic_polynomial(g);
  const IntPolynomial p_zero = poly_subgraph(g, Assigning::constant(g, 0), budget);
  out.push_back(check("chromatic_specialization", chromatic == p_zero, versus(p_zero, chromatic)));

  for (const Cycle& cyc : enumerate_cycles(g)) {
    std::vector<int> net(g.num_vertices(), 0);
    for (std::size_t i = 0; i < cyc.edges.size(); ++i) {
      const Edge& e = g.edge(cyc.edges[i]);
      net[e.head.value] += cyc.eta[i];
      net[e.tail.value] -= cyc.eta[i];
    }
    if (std::any_of(net.begin(), net.end(), [](int x) { return x != 0; })) {
      out.push_back(check("eta_is_circulation", false, "cycle " + io::to_json(cyc.edges).dump()));
      break;
    }
  }
  if (out.back().name != "eta_is_circulation") out.push_back(check("eta_is_circulation", true));

  if (!a.admissible()) {
    for (const char* name : {"broken_matches_subgraph", "bond_matches_subgraph", "order_independence",
                             "coefficient_signs", "monotonicity_over_chromatic", "evaluation_at_minus_one"}) {
      out.push_back(skip(name, "assigning is not known to be induced by an edge function"));
    }
  } else {
    const IntPolynomial via_broken = poly_broken(g, a, inst.order, budget);
    out.push_back(check("broken_matches_subgraph", via_broken == p, versus(via_broken, p)));
    const IntPolynomial via_bond = poly_bond(g, a, inst.order, budget);
    out.push_back(check("bond_matches_subgraph", via_bond == p, versus(via_bond, p)));

    bool same = true;
    for (const LinearOrder& ord : sample_orders(g, inst.order)) same = same && poly_broken(g, a, ord, budget) == via_broken;
    out.push_back(check("order_independence", same));

    const auto w = broken_cycle_counts(g, a, inst.order, budget);
    if (loops_ok) {
      const bool positive = std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x > 0; });
      const auto from_p = unsigned_coefficients(p, g.num_vertices());
      bool alternating = true;
      for (std::size_t i = 0; i < from_p.size(); ++i) {
        alternating = alternating && (i <= r ? from_p[i] > 0 : from_p[i] == 0);
      }
      out.push_back(check("coefficient_signs", w.front() == 1 && positive && alternating, p.to_string()));
    } else {
      out.push_back(check("coefficient_signs", p.is_zero(), "a loop is valued 0; P = " + p.to_string()));
    }

    const auto w_zero = broken_cycle_counts(g, Assigning::constant(g, 0), inst.order, budget);
    bool monotone = true;
    for (std::size_t i = 0; i < w.size(); ++i) monotone = monotone && w_zero[i] <= w[i];
    out.push_back(check("monotonicity_over_chromatic", monotone));

    BigInt at_minus_one = evaluate(p, -1);
    if (g.num_vertices() % 2 == 1) at_minus_one = -at_minus_one;
    const std::uint64_t direct = count_nbc_subgraphs(g, a, inst.order);
    out.push_back(check("evaluation_at_minus_one", at_minus_one == direct,
                        at_minus_one.str() + " vs " + std::to_string(direct)));
  }

  if (!inst.f) {
    for (const char* name : {"counting", "tension_counting", "colorings_per_tension", "coboundary_cycle_sums",
                             "orientation_robustness", "minor_consistency", "group_structure_independence"}) {
      out.push_back(skip(name, "needs --group and --f"));
    }
    return out;
  }

  const EdgeFunction& f = *inst.f;
  const AbelianGroup& group = f.group();
  const std::uint64_t colorings = count_colorings(g, f, budget);
  const std::uint64_t tensions = count_tensions(g, f, budget);
  const BigInt order = group.order();
  const BigInt p_at = evaluate(p, order);
  const BigInt tau_at = evaluate(tau, order);
  out.push_back(check("counting", p_at == colorings, p_at.str() + " vs " + std::to_string(colorings)));
  out.push_back(check("tension_counting", tau_at == tensions, tau_at.str() + " vs " + std::to_string(tensions)));
  BigInt scale = 1;
  for (std::size_t i = 0; i < c; ++i) scale *= order;
  out.push_back(check("colorings_per_tension", scale * tensions == colorings));

  {
    const auto cycles = enumerate_cycles(g);
    std::mt19937_64 rng(0xc0b0);
    bool ok = true;
    for (int trial = 0; trial < 16 && ok; ++trial) {
      VertexColoring col;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) col.push_back(element_at(group, rng() % group.order()));
      const EdgeFunction t = coboundary(g, group, col);
      for (const Cycle& cyc : cycles) ok = ok && is_zero(cycle_sum(g, t, cyc));
    }
    out.push_back(check("coboundary_cycle_sums", ok));
  }

  {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      std::vector<Edge> flipped(g.edges().begin(), g.edges().end());
      for (Edge& x : flipped) {
        if (x.id == e.id) std::swap(x.tail, x.head);
      }
      const MultiGraph h(g.num_vertices(), std::move(flipped));
      EdgeFunction f2 = f;
      f2.set(e.id, neg(group, f.at(e.id)));
      ok = ok && induced(h, f2) == a;
    }
    out.push_back(check("orientation_robustness", ok));
  }

  {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      ok = ok && induced(delete_edges(g, {e.id}), f) == restrict_delete(a, g, e.id);
      if (!e.is_loop()) {
        ok = ok && induced(contract(g, e.id), contract_edge_function(g, f, e.id)) ==
                       restrict_contract(a, g, e.id);
      }
    }
    out.push_back(check("minor_consistency", ok));
  }

  {
    std::optional<CheckResult> result;
    for (const AbelianGroup& other : abelian_groups_of_order(group.order())) {
      if (other == group) continue;
      const auto f2 = find_inducing_function(g, a, other, budget);
      if (!f2) continue;
      const std::uint64_t other_count = count_colorings(g, *f2, budget);
      result = check("group_structure_independence", other_count == colorings,
                     io::format_group(other) + ": " + std::to_string(other_count) + " vs " +
                         std::to_string(colorings));
      break;
    }
    out.push_back(result ? *result
                         : skip("group_structure_independence",
                                "no other group of this order induces the same assigning"));
  }
  return out;
}

}  // namespace gcpoly::cli
