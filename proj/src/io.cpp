#include "madgad/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "madgad/errors.hpp"

namespace madgad {

Graph read_graph_text(std::istream& in) {
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw DomainError("graph text must start with 'n m'");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> u >> v)) throw DomainError("graph text: expected " + std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw DomainError("edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, std::move(edges));
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("malformed graph JSON: ") + ex.what());
    }
}

Graph parse_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(Json::parse(text));
        } catch (const Json::parse_error& ex) {
            throw DomainError(std::string("malformed graph JSON: ") + ex.what());
        }
    }
    std::istringstream in(text);
    return read_graph_text(in);
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw DomainError("rational must be a \"num/den\" string or an integer");
}

Json vertex_set_to_json(const VertexSet& s) { return Json(s); }

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace madgad
