#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autgram {

using Vertex = int;

/// Sorted, duplicate-free set of 1-based vertices.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts and deduplicates.
    VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    /// Index of `v` in the sorted member list, or -1.
    int index_of(Vertex v) const;

    bool is_subset_of(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

using Edge = std::pair<Vertex, Vertex>;  // first < second

/// Simple undirected graph on vertices 1..m. Immutable after construction.
class Graph {
public:
    /// Throws ParseError on self-loops, duplicates or out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return m_; }
    /// Normalized (u < v) and sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted neighbor list of `v`.
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= m_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_ && a.edges_ == b.edges_; }

private:
    int m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;  // index 0 unused
    std::vector<char> matrix_;               // (m+1)^2
};

/// Parses the edge-list format: first line "m k", then k lines "u v".
Graph parse_graph(std::string_view text);
/// Inverse of parse_graph on normalized input.
std::string serialize_graph(const Graph& g);
Graph load_graph(const std::string& path);

/// N(s) ∪ s. Throws std::out_of_range for vertices outside the graph.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// E(g) restricted to pairs inside `s`, original labels kept.
std::vector<Edge> induced_subgraph(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
int max_degree(const Graph& g);

/// Throws PreconditionError("graph not connected") when `g` is disconnected.
void require_connected(const Graph& g);

}  // namespace autgram
