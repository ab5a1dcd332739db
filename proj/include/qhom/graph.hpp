#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qhom {

/// Simple undirected graph. Vertices are 0-indexed; edges are stored in
/// canonical order (sorted by (min, max)) so edge indices are deterministic
/// and weight tensors can bind blocks to them. Immutable after construction.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edge list; every pair satisfies u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Per-vertex list of (neighbor, edge index).
    const std::vector<std::pair<int, int>>& neighbors(int v) const;

    bool operator==(const Graph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

struct Degrees {
    std::vector<int> per_vertex;
    int max_degree = 0;
};

Degrees degrees(const Graph& g);

/// Parses the graph file format: header "V E", then E lines "u v".
/// Lines whose first non-blank character is '#' are comments.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);

/// Graph whose edges carry a color name (third token per edge line).
struct ColoredGraph {
    Graph graph;
    std::vector<std::string> edge_colors; // per canonical edge index
};

ColoredGraph parse_colored_graph(const std::string& text);

std::string read_text_file(const std::string& path);

} // namespace qhom
