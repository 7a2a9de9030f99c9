#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gcpoly/assigning.hpp"
#include "gcpoly/cycles.hpp"
#include "gcpoly/group.hpp"
#include "gcpoly/multigraph.hpp"
#include "gcpoly/polynomial.hpp"

namespace gcpoly::io {

using Json = nlohmann::ordered_json;

// All text formats are line based; '#' starts a comment and blank lines are
// skipped. Parse failures throw InputError naming the line.

/// `vertices <n>` followed by `edge <id> <tail> <head>` lines.
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph(std::string_view text);
std::string format_graph(const MultiGraph& g);

/// `Z<m1>x<m2>x...`; a `Z` before later factors is also accepted.
AbelianGroup parse_group(std::string_view spec);
std::string format_group(const AbelianGroup& group);

/// `f <edge-id> <r1> <r2> ...` lines, one per edge of g.
EdgeFunction parse_edge_function(std::istream& in, const MultiGraph& g, const AbelianGroup& group);
EdgeFunction parse_edge_function(std::string_view text, const MultiGraph& g, const AbelianGroup& group);
std::string format_edge_function(const EdgeFunction& f);

/// `cycle <sorted edge ids...> = <0|1>` lines covering every cycle of g.
Assigning parse_assigning(std::istream& in, const MultiGraph& g);
Assigning parse_assigning(std::string_view text, const MultiGraph& g);
std::string format_assigning(const Assigning& a);

/// Comma-separated edge ids, each optionally prefixed by `e`.
LinearOrder parse_order(std::string_view spec, const MultiGraph& g);

std::string read_file(const std::filesystem::path& path);

Json to_json(const IntPolynomial& p);
/// Inverse of to_json. Throws InputError on malformed input.
IntPolynomial polynomial_from_json(const Json& j);
Json to_json(const EdgeSet& s);
Json to_json(const Assigning& a);

}  // namespace gcpoly::io
