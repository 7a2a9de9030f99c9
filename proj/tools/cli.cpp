#include "cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "gcpoly/assigning.hpp"
#include "gcpoly/errors.hpp"
#include "gcpoly/io.hpp"
#include "gcpoly/methods.hpp"
#include "verify.hpp"

namespace gcpoly::cli {

namespace {

// Groups up to this order are searched to confirm that an assigning read
// from a file is induced by some edge function.
constexpr std::uint64_t kAdmissibilitySearchOrder = 6;

struct Options {
  std::string graph_path;
  std::string group_spec;
  std::string f_path;
  std::string assigning_path;
  std::string method = "subgraph";
  std::string order_spec;
  std::string eval_point;
  std::uint64_t budget = Budget{}.max_iterations;
  bool compact = false;
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--graph", o.graph_path, "Graph file")->required();
  cmd.add_option("--budget", o.budget, "Iteration cap for exhaustive searches");
  cmd.add_flag("--json", o.compact, "Print single-line JSON");
}

void add_assigning_source(CLI::App& cmd, Options& o) {
  cmd.add_option("--group", o.group_spec, "Group, e.g. Z3 or Z2x2");
  cmd.add_option("--f", o.f_path, "Edge function file");
  cmd.add_option("--assigning", o.assigning_path, "Assigning file");
  cmd.add_option("--order", o.order_spec, "Linear order, e.g. e3,e1,e2");
}

struct Loaded {
  MultiGraph graph;
  Assigning assigning;
  std::optional<EdgeFunction> f;
  std::string source;
};

Loaded load(const Options& o, const Budget& budget, std::ostream& err) {
  Loaded out{io::parse_graph(io::read_file(o.graph_path)), {}, std::nullopt, "zero"};
  if (!o.f_path.empty() || !o.group_spec.empty()) {
    if (o.f_path.empty() || o.group_spec.empty()) throw InputError("--f and --group must be given together");
    if (!o.assigning_path.empty()) throw InputError("give either --f or --assigning, not both");
    const AbelianGroup group = io::parse_group(o.group_spec);
    out.f = io::parse_edge_function(io::read_file(o.f_path), out.graph, group);
    out.assigning = induced(out.graph, *out.f);
    out.source = "f";
  } else if (!o.assigning_path.empty()) {
    out.assigning = io::parse_assigning(io::read_file(o.assigning_path), out.graph);
    out.source = "file";
    try {
      if (check_admissible(out.graph, out.assigning, kAdmissibilitySearchOrder, budget)) {
        out.assigning.set_admissible(true);
      }
    } catch (const BudgetExceeded&) {
      err << "warning: admissibility search exceeded the budget\n";
    }
  } else {
    out.assigning = Assigning::constant(out.graph, 0);
    out.assigning.set_admissible(true);
  }
  return out;
}

LinearOrder order_for(const Options& o, const MultiGraph& g) {
  return o.order_spec.empty() ? LinearOrder::increasing(g) : io::parse_order(o.order_spec, g);
}

io::Json graph_summary(const MultiGraph& g) {
  return io::Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"components", num_components(g)}};
}

int print(std::ostream& out, const io::Json& doc, bool compact) {
  out << (compact ? doc.dump() : doc.dump(2)) << '\n';
  return kSuccess;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  const MultiGraph g = io::parse_graph(io::read_file(o.graph_path));
  io::Json list = io::Json::array();
  for (const Cycle& c : enumerate_cycles(g)) list.push_back({{"edges", io::to_json(c.edges)}, {"eta", c.eta}});
  return print(out, {{"command", "cycles"}, {"graph", graph_summary(g)}, {"cycles", list}}, o.compact);
}

int cmd_bonds(const Options& o, std::ostream& out) {
  const MultiGraph g = io::parse_graph(io::read_file(o.graph_path));
  io::Json list = io::Json::array();
  for (const Bond& b : enumerate_bonds(g)) list.push_back(io::to_json(b.edges));
  return print(out, {{"command", "bonds"}, {"graph", graph_summary(g)}, {"bonds", list}}, o.compact);
}

int cmd_induced(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  if (o.f_path.empty() || o.group_spec.empty()) throw InputError("induced needs --group and --f");
  const Loaded in = load(o, budget, err);
  return print(out,
               {{"command", "induced"},
                {"graph", graph_summary(in.graph)},
                {"group", io::format_group(in.f->group())},
                {"assigning", io::to_json(in.assigning)}},
               o.compact);
}

int cmd_polynomial(const Options& o, bool tau, const Budget& budget, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o, budget, err);
  const Method method = parse_method(o.method);
  const LinearOrder ord = order_for(o, in.graph);
  Diagnostics diag;
  const IntPolynomial p = tau ? alpha_assigning_polynomial(in.graph, in.assigning, method, ord, budget, &diag)
                              : cycle_assigning_polynomial(in.graph, in.assigning, method, ord, budget, &diag);
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';

  io::Json doc{{"command", tau ? "tau" : "poly"},
               {"method", std::string(method_name(method))},
               {"graph", graph_summary(in.graph)},
               {"assigning_source", in.source},
               {"polynomial", io::to_json(p)},
               {"expression", p.to_string()}};
  if (!o.eval_point.empty()) {
    BigInt k;
    try {
      k = BigInt(o.eval_point);
    } catch (const std::runtime_error&) {
      throw InputError("--eval expects an integer");
    }
    doc["evaluation"] = {{"k", k.str()}, {"value", evaluate(p, k).str()}};
  }
  return print(out, doc, o.compact);
}

int cmd_count(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  if (o.f_path.empty() || o.group_spec.empty()) throw InputError("count needs --group and --f");
  const Loaded in = load(o, budget, err);
  return print(out,
               {{"command", "count"},
                {"graph", graph_summary(in.graph)},
                {"group", io::format_group(in.f->group())},
                {"group_order", in.f->group().order()},
                {"colorings", count_colorings(in.graph, *in.f, budget)},
                {"tensions", count_tensions(in.graph, *in.f, budget)}},
               o.compact);
}

int cmd_verify(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  Loaded in = load(o, budget, err);
  const LinearOrder ord = order_for(o, in.graph);
  const Instance inst{in.graph, in.assigning, in.f, ord};
  const auto results = verify_instance(inst, budget);

  bool passed = true;
  io::Json checks = io::Json::array();
  for (const auto& r : results) {
    passed = passed && r.status != CheckStatus::fail;
    checks.push_back(to_json(r));
  }
  io::Json doc{{"command", "verify"},
               {"graph", graph_summary(in.graph)},
               {"assigning_source", in.source},
               {"polynomial", io::to_json(poly_subgraph(in.graph, in.assigning, budget))}};
  if (in.f) {
    doc["group"] = io::format_group(in.f->group());
    doc["colorings"] = count_colorings(in.graph, *in.f, budget);
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = passed;
  print(out, doc, o.compact);
  return passed ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-assigning and alpha-assigning polynomials of multigraphs", "gcpoly"};
  app.require_subcommand(1);
  Options o;

  auto* cycles = app.add_subcommand("cycles", "List cycles with signed incidences");
  auto* bonds = app.add_subcommand("bonds", "List bonds");
  auto* induced_cmd = app.add_subcommand("induced", "Assigning induced by an edge function");
  auto* poly = app.add_subcommand("poly", "Cycle-assigning polynomial P(G, a; k)");
  auto* tau = app.add_subcommand("tau", "Alpha-assigning polynomial tau(G, a; k)");
  auto* count = app.add_subcommand("count", "Brute-force coloring and tension counts");
  auto* verify = app.add_subcommand("verify", "Cross-check every method and oracle on one instance");

  for (auto* cmd : {cycles, bonds, induced_cmd, poly, tau, count, verify}) add_common(*cmd, o);
  for (auto* cmd : {induced_cmd, poly, tau, count, verify}) add_assigning_source(*cmd, o);
  for (auto* cmd : {poly, tau}) {
    cmd->add_option("--method", o.method, "subgraph, delcon, broken, bond or decompose");
    cmd->add_option("--eval", o.eval_point, "Also evaluate at this integer");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  Budget budget;
  budget.max_iterations = o.budget;
  try {
    if (cycles->parsed()) return cmd_cycles(o, out);
    if (bonds->parsed()) return cmd_bonds(o, out);
    if (induced_cmd->parsed()) return cmd_induced(o, budget, out, err);
    if (poly->parsed()) return cmd_polynomial(o, false, budget, out, err);
    if (tau->parsed()) return cmd_polynomial(o, true, budget, out, err);
    if (count->parsed()) return cmd_count(o, budget, out, err);
    if (verify->parsed()) return cmd_verify(o, budget, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace gcpoly::cli
