#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "madgad/graph.hpp"
#include "madgad/rational.hpp"

namespace madgad {

using Json = nlohmann::json;

/// Text form: first line "n m", then m lines "u v" (0-based).
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

/// JSON form: {"n": int, "edges": [[u,v],...]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Accepts either form; a leading '{' selects JSON.
Graph parse_graph(const std::string& text);

inline Json rational_to_json(const Rational& r) { return r.to_string(); }
Rational rational_from_json(const Json& j);

Json vertex_set_to_json(const VertexSet& s);

/// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path);

}  // namespace madgad
