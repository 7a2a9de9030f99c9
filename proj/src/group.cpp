#include "gcpoly/group.hpp"

#include <cstring>
#include <limits>
#include <string>
#include <unordered_set>

namespace gcpoly {

namespace {

void require_same_group(const AbelianGroup& group, const GroupElement& a) {
  require_member(group, a);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Element codes for the counting loops; sub_table[a * n + b] = code(a - b).
struct CodedGroup {
  std::uint64_t n;
  std::vector<std::uint32_t> sub_table;

  explicit CodedGroup(const AbelianGroup& group) : n(group.order()) {
    if (n > 4096) throw BudgetExceeded("group order above 4096 is not supported by the counters");
    const auto elems = elements(group);
    sub_table.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        sub_table[a * n + b] = static_cast<std::uint32_t>(index_of(group, sub(group, elems[a], elems[b])));
      }
    }
  }
  std::uint32_t diff(std::uint32_t head, std::uint32_t tail) const { return sub_table[head * n + tail]; }
};

struct CodedInstance {
  std::vector<std::size_t> tail, head;
  std::vector<std::uint32_t> forbidden;
};

CodedInstance code_instance(const MultiGraph& g, const EdgeFunction& f) {
  require_total(g, f);
  CodedInstance out;
  for (const Edge& e : g.edges()) {
    out.tail.push_back(e.tail.value);
    out.head.push_back(e.head.value);
    out.forbidden.push_back(static_cast<std::uint32_t>(index_of(f.group(), f.at(e.id))));
  }
  return out;
}

// Runs visit over every coloring (as element codes) in odometer order.
template <typename Visit>
void for_each_coloring(std::size_t num_vertices, std::uint64_t order, const Budget& budget,
                       Visit&& visit) {
  if (checked_power(order, num_vertices, budget.max_iterations) > budget.max_iterations) {
    throw BudgetExceeded("|A|^|V| = " + std::to_string(order) + "^" + std::to_string(num_vertices) +
                         " exceeds the iteration budget");
  }
  std::vector<std::uint32_t> c(num_vertices, 0);
  while (true) {
    visit(c);
    std::size_t v = num_vertices;
    while (v > 0) {
      --v;
      if (++c[v] < order) break;
      c[v] = 0;
      if (v == 0) return;
    }
    if (num_vertices == 0) return;
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("a group needs at least one cyclic factor");
  for (std::int64_t m : moduli_) {
    if (m < 1) throw InputError("cyclic factor orders must be at least 1");
    if (order_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
      throw InputError("group order overflows 64 bits");
    }
    order_ *= static_cast<std::uint64_t>(m);
  }
}

void require_member(const AbelianGroup& group, const GroupElement& x) {
  if (x.residues.size() != group.moduli().size()) throw InputError("element does not belong to the group");
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (x.residues[i] < 0 || x.residues[i] >= group.moduli()[i]) {
      throw InputError("residue out of range for its cyclic factor");
    }
  }
}

GroupElement zero(const AbelianGroup& group) {
  return GroupElement{std::vector<std::int64_t>(group.moduli().size(), 0)};
}

bool is_zero(const GroupElement& x) {
  for (auto r : x.residues) {
    if (r != 0) return false;
  }
  return true;
}

GroupElement add(const AbelianGroup& group, const GroupElement& a, const GroupElement& b) {
  require_same_group(group, a);
  require_same_group(group, b);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.residues.size(); ++i) {
    out.residues[i] = (a.residues[i] + b.residues[i]) % group.moduli()[i];
  }
  return out;
}

GroupElement neg(const AbelianGroup& group, const GroupElement& a) {
  require_same_group(group, a);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.residues.size(); ++i) {
    out.residues[i] = (group.moduli()[i] - a.residues[i]) % group.moduli()[i];
  }
  return out;
}

GroupElement sub(const AbelianGroup& group, const GroupElement& a, const GroupElement& b) {
  return add(group, a, neg(group, b));
}

GroupElement element_at(const AbelianGroup& group, std::uint64_t index) {
  if (index >= group.order()) throw InputError("element index out of range");
  GroupElement out = zero(group);
  for (std::size_t i = group.moduli().size(); i-- > 0;) {
    const auto m = static_cast<std::uint64_t>(group.moduli()[i]);
    out.residues[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return out;
}

std::uint64_t index_of(const AbelianGroup& group, const GroupElement& x) {
  require_member(group, x);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    index = index * static_cast<std::uint64_t>(group.moduli()[i]) + static_cast<std::uint64_t>(x.residues[i]);
  }
  return index;
}

std::vector<GroupElement> elements(const AbelianGroup& group) {
  std::vector<GroupElement> out;
  out.reserve(group.order());
  for (std::uint64_t i = 0; i < group.order(); ++i) out.push_back(element_at(group, i));
  return out;
}

EdgeFunction::EdgeFunction(AbelianGroup group, std::map<EdgeId, GroupElement> values)
    : group_(std::move(group)), values_(std::move(values)) {
  for (const auto& [id, x] : values_) require_member(group_, x);
}

EdgeFunction EdgeFunction::zero(const MultiGraph& g, const AbelianGroup& group) {
  std::map<EdgeId, GroupElement> values;
  for (const Edge& e : g.edges()) values.emplace(e.id, gcpoly::zero(group));
  return EdgeFunction(group, std::move(values));
}

const GroupElement& EdgeFunction::at(EdgeId e) const {
  auto it = values_.find(e);
  if (it == values_.end()) throw InputError("edge function has no value on edge " + std::to_string(e.value));
  return it->second;
}

void EdgeFunction::set(EdgeId e, GroupElement x) {
  require_member(group_, x);
  values_[e] = std::move(x);
}

void require_total(const MultiGraph& g, const EdgeFunction& f) {
  for (const Edge& e : g.edges()) f.at(e.id);
}

EdgeFunction coboundary(const MultiGraph& g, const AbelianGroup& group, const VertexColoring& c) {
  if (c.size() != g.num_vertices()) throw InputError("coloring must cover every vertex");
  std::map<EdgeId, GroupElement> values;
  for (const Edge& e : g.edges()) {
    values.emplace(e.id, e.is_loop() ? zero(group) : sub(group, c[e.head.value], c[e.tail.value]));
  }
  return EdgeFunction(group, std::move(values));
}

EdgeFunction contract_edge_function(const MultiGraph& g, const EdgeFunction& f, EdgeId e) {
  require_total(g, f);
  const Edge& target = g.edge(e);
  if (target.is_loop()) throw ContractError("cannot contract loop " + std::to_string(e.value));
  const AbelianGroup& group = f.group();
  VertexColoring shift(g.num_vertices(), zero(group));
  shift[target.head.value] = f.at(e);
  const EdgeFunction t = coboundary(g, group, shift);

  std::map<EdgeId, GroupElement> values;
  for (const Edge& x : g.edges()) {
    if (x.id != e) values.emplace(x.id, sub(group, f.at(x.id), t.at(x.id)));
  }
  return EdgeFunction(group, std::move(values));
}

GroupElement cycle_sum(const MultiGraph& g, const EdgeFunction& f, const Cycle& c) {
  const AbelianGroup& group = f.group();
  GroupElement total = zero(group);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    g.position(c.edges[i]);
    const GroupElement& x = f.at(c.edges[i]);
    total = c.eta[i] > 0 ? add(group, total, x) : sub(group, total, x);
  }
  return total;
}

std::uint64_t count_colorings(const MultiGraph& g, const EdgeFunction& f, const Budget& budget) {
  const CodedInstance inst = code_instance(g, f);
  const CodedGroup coded(f.group());
  std::uint64_t count = 0;
  for_each_coloring(g.num_vertices(), coded.n, budget, [&](const std::vector<std::uint32_t>& c) {
    for (std::size_t i = 0; i < inst.tail.size(); ++i) {
      if (coded.diff(c[inst.head[i]], c[inst.tail[i]]) == inst.forbidden[i]) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t count_tensions(const MultiGraph& g, const EdgeFunction& f, const Budget& budget) {
  const CodedInstance inst = code_instance(g, f);
  const CodedGroup coded(f.group());
  std::unordered_set<std::string> seen;
  std::string key(inst.tail.size() * sizeof(std::uint32_t), '\0');
  for_each_coloring(g.num_vertices(), coded.n, budget, [&](const std::vector<std::uint32_t>& c) {
    for (std::size_t i = 0; i < inst.tail.size(); ++i) {
      const std::uint32_t t = coded.diff(c[inst.head[i]], c[inst.tail[i]]);
      if (t == inst.forbidden[i]) return;
      std::memcpy(key.data() + i * sizeof(t), &t, sizeof(t));
    }
    seen.insert(key);
  });
  return seen.size();
}

}  // namespace gcpoly
