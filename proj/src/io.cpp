#include "gcpoly/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace gcpoly::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view word, const std::string& context) {
  Int value{};
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw InputError(context + ": '" + std::string(word) + "' is not an integer");
  }
  return value;
}

template <typename Int>
Int parse_int(const Line& line, std::size_t index) {
  return parse_int<Int>(line.words[index], "line " + std::to_string(line.number));
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines.front().words[0] != "vertices" || lines.front().words.size() != 2) {
    throw InputError("graph file must start with 'vertices <n>'");
  }
  const auto n = parse_int<std::size_t>(lines.front(), 1);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words[0] != "edge" || line.words.size() != 4) fail(line, "expected 'edge <id> <tail> <head>'");
    const auto id = parse_int<std::int64_t>(line, 1);
    if (id < 0) fail(line, "edge ids must be nonnegative");
    edges.push_back(Edge{EdgeId(id), VertexId(parse_int<std::size_t>(line, 2)),
                         VertexId(parse_int<std::size_t>(line, 3))});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id.value << ' ' << e.tail.value << ' ' << e.head.value << '\n';
  }
  return out.str();
}

AbelianGroup parse_group(std::string_view spec) {
  const std::string context = "group spec '" + std::string(spec) + "'";
  if (spec.empty() || spec.front() != 'Z') throw InputError(context + " must start with 'Z'");
  spec.remove_prefix(1);
  std::vector<std::int64_t> moduli;
  while (true) {
    const auto x = spec.find('x');
    std::string_view factor = spec.substr(0, x);
    if (!factor.empty() && factor.front() == 'Z') factor.remove_prefix(1);
    if (factor.empty()) throw InputError(context + " has an empty factor");
    moduli.push_back(parse_int<std::int64_t>(factor, context));
    if (x == std::string_view::npos) break;
    spec.remove_prefix(x + 1);
  }
  return AbelianGroup(std::move(moduli));
}

std::string format_group(const AbelianGroup& group) {
  std::string out = "Z";
  for (std::size_t i = 0; i < group.moduli().size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(group.moduli()[i]);
  }
  return out;
}

EdgeFunction parse_edge_function(std::istream& in, const MultiGraph& g, const AbelianGroup& group) {
  std::map<EdgeId, GroupElement> values;
  for (const Line& line : tokenize(in)) {
    if (line.words[0] != "f") fail(line, "expected 'f <edge-id> <residues...>'");
    if (line.words.size() != 2 + group.moduli().size()) {
      fail(line, "expected " + std::to_string(group.moduli().size()) + " residues");
    }
    const EdgeId id(parse_int<std::int64_t>(line, 1));
    if (!g.contains(id)) fail(line, "unknown edge " + line.words[1]);
    GroupElement x;
    for (std::size_t i = 2; i < line.words.size(); ++i) {
      const auto r = parse_int<std::int64_t>(line, i);
      const auto m = group.moduli()[i - 2];
      x.residues.push_back(((r % m) + m) % m);
    }
    if (!values.emplace(id, std::move(x)).second) fail(line, "edge " + line.words[1] + " given twice");
  }
  EdgeFunction f(group, std::move(values));
  require_total(g, f);
  return f;
}

EdgeFunction parse_edge_function(std::string_view text, const MultiGraph& g, const AbelianGroup& group) {
  std::istringstream in{std::string(text)};
  return parse_edge_function(in, g, group);
}

std::string format_edge_function(const EdgeFunction& f) {
  std::ostringstream out;
  for (const auto& [id, x] : f.values()) {
    out << "f " << id.value;
    for (auto r : x.residues) out << ' ' << r;
    out << '\n';
  }
  return out.str();
}

Assigning parse_assigning(std::istream& in, const MultiGraph& g) {
  std::map<EdgeSet, int> values;
  for (const Line& line : tokenize(in)) {
    const auto& w = line.words;
    if (w[0] != "cycle" || w.size() < 4 || w[w.size() - 2] != "=") {
      fail(line, "expected 'cycle <edge ids...> = <0|1>'");
    }
    std::vector<EdgeId> ids;
    for (std::size_t i = 1; i + 2 < w.size(); ++i) ids.emplace_back(parse_int<std::int64_t>(line, i));
    const auto value = parse_int<int>(line, w.size() - 1);
    if (value != 0 && value != 1) fail(line, "value must be 0 or 1");
    EdgeSet key = make_edge_set(std::move(ids));
    if (!is_cycle(g, key)) fail(line, "edge set is not a cycle of the graph");
    if (!values.emplace(std::move(key), value).second) fail(line, "cycle listed twice");
  }
  return Assigning::from_values(g, std::move(values));
}

Assigning parse_assigning(std::string_view text, const MultiGraph& g) {
  std::istringstream in{std::string(text)};
  return parse_assigning(in, g);
}

std::string format_assigning(const Assigning& a) {
  std::ostringstream out;
  for (const auto& [edges, value] : a.values()) {
    out << "cycle";
    for (EdgeId id : edges) out << ' ' << id.value;
    out << " = " << value << '\n';
  }
  return out.str();
}

LinearOrder parse_order(std::string_view spec, const MultiGraph& g) {
  std::vector<EdgeId> seq;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    if (!item.empty() && item.front() == 'e') item.remove_prefix(1);
    seq.emplace_back(parse_int<std::int64_t>(item, "order"));
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return LinearOrder(g, std::move(seq));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json to_json(const IntPolynomial& p) {
  Json coefficients = Json::object();
  for (const auto& [d, c] : p.coefficients()) coefficients[std::to_string(d)] = c.str();
  Json out;
  out["variable"] = "k";
  out["degree"] = p.degree() ? Json(*p.degree()) : Json(nullptr);
  out["coefficients"] = std::move(coefficients);
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  try {
    IntPolynomial p;
    for (const auto& [degree, value] : j.at("coefficients").items()) {
      p.add_term(parse_int<std::size_t>(degree, "degree"), BigInt(value.get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const EdgeSet& s) {
  Json out = Json::array();
  for (EdgeId id : s) out.push_back(id.value);
  return out;
}

Json to_json(const Assigning& a) {
  Json out = Json::array();
  for (const auto& [edges, value] : a.values()) {
    out.push_back(Json{{"cycle", to_json(edges)}, {"value", value}});
  }
  return out;
}

}  // namespace gcpoly::io
