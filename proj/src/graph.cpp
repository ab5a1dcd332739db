#include "qhom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "qhom/errors.hpp"

namespace qhom {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": invalid " + what +
                         " '" + tok + "'");
    return value;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == '#';
    }
    return true;
}

struct ParsedEdges {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> colors; // empty unless colored
};

ParsedEdges parse_edge_lines(const std::string& text, bool colored) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertex_count = -1;
    long long edge_count = -1;
    ParsedEdges out;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line))
            continue;
        auto tokens = split_tokens(line);
        if (vertex_count < 0) {
            if (tokens.size() != 2)
                throw InputError("line " + std::to_string(line_no) +
                                 ": malformed header, expected 'V E'");
            vertex_count = parse_int(tokens[0], line_no, "vertex count");
            edge_count = parse_int(tokens[1], line_no, "edge count");
            if (vertex_count < 1)
                throw InputError("line " + std::to_string(line_no) +
                                 ": vertex count must be positive");
            if (edge_count < 0)
                throw InputError("line " + std::to_string(line_no) +
                                 ": edge count must be non-negative");
            out.vertex_count = vertex_count;
            continue;
        }
        std::size_t expected = colored ? 3 : 2;
        if (tokens.size() != expected)
            throw InputError("line " + std::to_string(line_no) + ": expected " +
                             (colored ? "'u v color'" : "'u v'"));
        if (static_cast<long long>(out.edges.size()) >= edge_count)
            throw InputError("line " + std::to_string(line_no) +
                             ": more edge lines than the declared " +
                             std::to_string(edge_count));
        int u = parse_int(tokens[0], line_no, "vertex index");
        int v = parse_int(tokens[1], line_no, "vertex index");
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InputError("line " + std::to_string(line_no) +
                             ": vertex index out of range [0, " +
                             std::to_string(vertex_count) + ")");
        if (u == v)
            throw InputError("line " + std::to_string(line_no) + ": loop edge " +
                             std::to_string(u) + "-" + std::to_string(v));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw InputError("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::to_string(key.first) + "-" + std::to_string(key.second));
        out.edges.push_back(key);
        if (colored)
            out.colors.push_back(tokens[2]);
    }

    if (vertex_count < 0)
        throw InputError("empty graph file (missing 'V E' header)");
    if (static_cast<long long>(out.edges.size()) != edge_count)
        throw InputError("declared " + std::to_string(edge_count) + " edges but found " +
                         std::to_string(out.edges.size()));
    return out;
}

} // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
        throw InputError("graph must have at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
            throw InputError("edge endpoint out of range");
        if (u == v)
            throw InputError("loop edge " + std::to_string(u) + "-" + std::to_string(v));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
    adjacency_.resize(static_cast<std::size_t>(vertex_count_));
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[static_cast<std::size_t>(e)];
        adjacency_[static_cast<std::size_t>(u)].emplace_back(v, e);
        adjacency_[static_cast<std::size_t>(v)].emplace_back(u, e);
    }
}

const std::vector<std::pair<int, int>>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw InputError("vertex index out of range");
    return adjacency_[static_cast<std::size_t>(v)];
}

Degrees degrees(const Graph& g) {
    Degrees d;
    d.per_vertex.resize(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        ++d.per_vertex[static_cast<std::size_t>(u)];
        ++d.per_vertex[static_cast<std::size_t>(v)];
    }
    d.max_degree = d.per_vertex.empty()
                       ? 0
                       : *std::max_element(d.per_vertex.begin(), d.per_vertex.end());
    return d;
}

Graph parse_graph(const std::string& text) {
    auto parsed = parse_edge_lines(text, /*colored=*/false);
    return Graph(parsed.vertex_count, std::move(parsed.edges));
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

ColoredGraph parse_colored_graph(const std::string& text) {
    auto parsed = parse_edge_lines(text, /*colored=*/true);
    // Graph construction re-sorts edges; apply the same permutation to colors.
    std::vector<std::size_t> order(parsed.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return parsed.edges[a] < parsed.edges[b];
    });
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> colors;
    edges.reserve(order.size());
    colors.reserve(order.size());
    for (std::size_t idx : order) {
        edges.push_back(parsed.edges[idx]);
        colors.push_back(parsed.colors[idx]);
    }
    return ColoredGraph{Graph(parsed.vertex_count, std::move(edges)), std::move(colors)};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace qhom
