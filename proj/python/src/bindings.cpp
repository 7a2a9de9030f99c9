#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "gcpoly/assigning.hpp"
#include "gcpoly/cycles.hpp"
#include "gcpoly/errors.hpp"
#include "gcpoly/group.hpp"
#include "gcpoly/io.hpp"
#include "gcpoly/methods.hpp"
#include "gcpoly/multigraph.hpp"
#include "gcpoly/polynomial.hpp"

namespace py = pybind11;
using namespace gcpoly;

namespace {

// Coefficients cross the boundary as decimal strings so Python gets exact ints.
py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }
BigInt from_py(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }

EdgeSet edge_set(const std::vector<std::int64_t>& ids) {
  std::vector<EdgeId> out(ids.begin(), ids.end());
  return make_edge_set(std::move(out));
}

py::tuple to_tuple(const EdgeSet& s) {
  py::tuple t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i].value;
  return t;
}

GroupElement element(const AbelianGroup& group, const py::handle& value) {
  std::vector<std::int64_t> residues;
  if (py::isinstance<py::int_>(value)) {
    residues.push_back(value.cast<std::int64_t>());
  } else {
    residues = value.cast<std::vector<std::int64_t>>();
  }
  if (residues.size() != group.moduli().size()) throw InputError("element has the wrong number of residues");
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const auto m = group.moduli()[i];
    residues[i] = ((residues[i] % m) + m) % m;
  }
  return GroupElement{residues};
}

EdgeFunction edge_function(const MultiGraph& g, const AbelianGroup& group, const py::dict& values) {
  std::map<EdgeId, GroupElement> out;
  for (const auto& [key, value] : values) out.emplace(EdgeId(key.cast<std::int64_t>()), element(group, value));
  EdgeFunction f(group, std::move(out));
  require_total(g, f);
  for (const auto& [id, x] : f.values()) {
    if (!g.contains(id)) throw InputError("edge function names unknown edge " + std::to_string(id.value));
  }
  return f;
}

LinearOrder order_of(const MultiGraph& g, const std::optional<std::vector<std::int64_t>>& seq) {
  if (!seq) return LinearOrder::increasing(g);
  return LinearOrder(g, std::vector<EdgeId>(seq->begin(), seq->end()));
}

Assigning assigning_or_zero(const MultiGraph& g, const std::optional<Assigning>& a) {
  if (a) return *a;
  Assigning zero = Assigning::constant(g, 0);
  zero.set_admissible(true);
  return zero;
}

Budget budget_of(std::optional<std::uint64_t> max_iterations) {
  Budget b;
  if (max_iterations) b.max_iterations = *max_iterations;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cycle-assigning and alpha-assigning polynomials of multigraphs";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", input_error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<MultiGraph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>>& edges) {
             std::vector<Edge> out;
             for (const auto& [id, t, h] : edges) out.push_back(Edge{EdgeId(id), VertexId(t), VertexId(h)});
             return MultiGraph(n, std::move(out));
           }),
           py::arg("num_vertices"), py::arg("edges") = std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>>{},
           "edges are (id, tail, head) triples")
      .def_static("parse", [](const std::string& text) { return io::parse_graph(text); })
      .def("format", &io::format_graph)
      .def_property_readonly("num_vertices", &MultiGraph::num_vertices)
      .def_property_readonly("num_edges", &MultiGraph::num_edges)
      .def_property_readonly("edges",
                             [](const MultiGraph& g) {
                               std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.id.value, e.tail.value, e.head.value);
                               return out;
                             })
      .def("num_components", [](const MultiGraph& g) { return num_components(g); })
      .def("rank", [](const MultiGraph& g, const std::vector<std::int64_t>& x) { return rank(g, edge_set(x)); })
      .def("delete", [](const MultiGraph& g, const std::vector<std::int64_t>& x) { return delete_edges(g, edge_set(x)); })
      .def("contract", [](const MultiGraph& g, std::int64_t e) { return contract(g, EdgeId(e)); })
      .def("cycles",
           [](const MultiGraph& g) {
             py::list out;
             for (const Cycle& c : enumerate_cycles(g)) out.append(py::make_tuple(to_tuple(c.edges), c.eta));
             return out;
           },
           "(edge ids, eta) pairs")
      .def("bonds",
           [](const MultiGraph& g) {
             py::list out;
             for (const Bond& b : enumerate_bonds(g)) out.append(to_tuple(b.edges));
             return out;
           })
      .def("__repr__", [](const MultiGraph& g) {
        std::ostringstream s;
        s << "Graph(" << g.num_vertices() << " vertices, " << g.num_edges() << " edges)";
        return s.str();
      });

  py::class_<AbelianGroup>(m, "Group")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("moduli"))
      .def_static("parse", &io::parse_group)
      .def_property_readonly("moduli", &AbelianGroup::moduli)
      .def_property_readonly("order", &AbelianGroup::order)
      .def(py::self == py::self)
      .def("__repr__", [](const AbelianGroup& a) { return "Group(" + io::format_group(a) + ")"; });

  py::class_<Assigning>(m, "Assigning")
      .def(py::init([](const MultiGraph& g, const py::dict& values) {
             std::map<EdgeSet, int> out;
             for (const auto& [key, value] : values) {
               out.emplace(edge_set(key.cast<std::vector<std::int64_t>>()), value.cast<int>());
             }
             return Assigning::from_values(g, std::move(out));
           }),
           py::arg("graph"), py::arg("values"), "values maps cycle edge-id tuples to 0 or 1")
      .def_static("constant", &Assigning::constant, py::arg("graph"), py::arg("value"))
      .def_property_readonly("values",
                             [](const Assigning& a) {
                               py::dict out;
                               for (const auto& [c, v] : a.values()) out[to_tuple(c)] = v;
                               return out;
                             })
      .def_property("admissible", &Assigning::admissible, &Assigning::set_admissible)
      .def("__le__", [](const Assigning& a, const Assigning& b) { return pointwise_leq(a, b); })
      .def(py::self == py::self)
      .def("__repr__", [](const Assigning& a) { return "Assigning(" + std::to_string(a.size()) + " cycles)"; });

  py::class_<IntPolynomial>(m, "Polynomial")
      .def_property_readonly("coefficients",
                             [](const IntPolynomial& p) {
                               py::dict out;
                               for (const auto& [d, c] : p.coefficients()) out[py::int_(d)] = to_py(c);
                               return out;
                             })
      .def_property_readonly("degree", &IntPolynomial::degree)
      .def("coefficient", [](const IntPolynomial& p, std::size_t d) { return to_py(p.coefficient(d)); })
      .def("__call__", [](const IntPolynomial& p, const py::int_& k) { return to_py(evaluate(p, from_py(k))); })
      .def("to_json", [](const IntPolynomial& p) { return io::to_json(p).dump(); })
      .def(py::self == py::self)
      .def("__str__", &IntPolynomial::to_string)
      .def("__repr__", [](const IntPolynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

  m.def("induced",
        [](const MultiGraph& g, const AbelianGroup& group, const py::dict& f) {
          return induced(g, edge_function(g, group, f));
        },
        py::arg("graph"), py::arg("group"), py::arg("f"),
        "Assigning induced by f; f maps edge ids to ints or residue tuples");

  m.def("cycle_assigning_polynomial",
        [](const MultiGraph& g, const std::optional<Assigning>& a, const std::string& method,
           const std::optional<std::vector<std::int64_t>>& order) {
          return cycle_assigning_polynomial(g, assigning_or_zero(g, a), parse_method(method), order_of(g, order));
        },
        py::arg("graph"), py::arg("assigning") = py::none(), py::arg("method") = "subgraph",
        py::arg("order") = py::none());

  m.def("alpha_assigning_polynomial",
        [](const MultiGraph& g, const std::optional<Assigning>& a, const std::string& method,
           const std::optional<std::vector<std::int64_t>>& order) {
          return alpha_assigning_polynomial(g, assigning_or_zero(g, a), parse_method(method), order_of(g, order));
        },
        py::arg("graph"), py::arg("assigning") = py::none(), py::arg("method") = "subgraph",
        py::arg("order") = py::none());

  m.def("broken_cycle_counts",
        [](const MultiGraph& g, const std::optional<Assigning>& a, const std::optional<std::vector<std::int64_t>>& order) {
          py::list out;
          for (const BigInt& w : broken_cycle_counts(g, assigning_or_zero(g, a), order_of(g, order))) out.append(to_py(w));
          return out;
        },
        py::arg("graph"), py::arg("assigning") = py::none(), py::arg("order") = py::none());

  m.def("chromatic_polynomial", &chromatic_polynomial, py::arg("graph"));

  m.def("count_colorings",
        [](const MultiGraph& g, const AbelianGroup& group, const py::dict& f, std::optional<std::uint64_t> budget) {
          return count_colorings(g, edge_function(g, group, f), budget_of(budget));
        },
        py::arg("graph"), py::arg("group"), py::arg("f"), py::arg("max_iterations") = py::none());

  m.def("count_tensions",
        [](const MultiGraph& g, const AbelianGroup& group, const py::dict& f, std::optional<std::uint64_t> budget) {
          return count_tensions(g, edge_function(g, group, f), budget_of(budget));
        },
        py::arg("graph"), py::arg("group"), py::arg("f"), py::arg("max_iterations") = py::none());

  m.def("check_admissible",
        [](const MultiGraph& g, const Assigning& a, std::uint64_t max_order) -> py::object {
          const auto w = check_admissible(g, a, max_order);
          if (!w) return py::none();
          py::dict f;
          for (const auto& [id, x] : w->f.values()) f[py::int_(id.value)] = py::tuple(py::cast(x.residues));
          return py::make_tuple(w->group, f);
        },
        py::arg("graph"), py::arg("assigning"), py::arg("max_order") = 6,
        "(group, f) inducing the assigning, or None if no group up to max_order works");
}
