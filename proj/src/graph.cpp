#include "autgram/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

int VertexSet::index_of(Vertex v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return -1;
    return static_cast<int>(it - members_.begin());
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    VertexSet r;
    r.members_ = std::move(out);
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    VertexSet r;
    r.members_ = std::move(out);
    return r;
}

std::string to_string(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : m_(vertex_count) {
    if (m_ < 1) throw ParseError(ParseError::Kind::OutOfRange, "vertex count must be positive");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > m_ || v < 1 || v > m_)
            throw ParseError(ParseError::Kind::OutOfRange,
                             "vertex out of range in edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw ParseError(ParseError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw ParseError(ParseError::Kind::DuplicateEdge,
                         "duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
    edges_ = std::move(edges);

    adj_.assign(m_ + 1, {});
    matrix_.assign(static_cast<std::size_t>(m_ + 1) * (m_ + 1), 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[static_cast<std::size_t>(u) * (m_ + 1) + v] = 1;
        matrix_[static_cast<std::size_t>(v) * (m_ + 1) + u] = 1;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (!has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return matrix_[static_cast<std::size_t>(u) * (m_ + 1) + v] != 0;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// Two integers separated by a single space, nothing else.
bool parse_pair(std::string_view line, long& a, long& b) {
    auto sp = line.find(' ');
    if (sp == std::string_view::npos) return false;
    auto lhs = line.substr(0, sp), rhs = line.substr(sp + 1);
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), a);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), b);
    return !lhs.empty() && !rhs.empty() && r1.ec == std::errc{} && r1.ptr == lhs.data() + lhs.size() &&
           r2.ec == std::errc{} && r2.ptr == rhs.data() + rhs.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(ParseError::Kind::Malformed, "empty graph text");
    long m = 0, k = 0;
    if (!parse_pair(lines[0], m, k) || m < 1 || k < 0)
        throw ParseError(ParseError::Kind::Malformed, "malformed header line: '" + std::string(lines[0]) + "'");
    if (static_cast<long>(lines.size()) - 1 != k)
        throw ParseError(ParseError::Kind::Malformed, "header declares " + std::to_string(k) + " edges, found " +
                                                          std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(k);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        long u = 0, v = 0;
        if (!parse_pair(lines[i], u, v))
            throw ParseError(ParseError::Kind::Malformed,
                             "malformed edge line " + std::to_string(i + 1) + ": '" + std::string(lines[i]) + "'");
        if (u < 1 || u > m || v < 1 || v > m)
            throw ParseError(ParseError::Kind::OutOfRange, "vertex out of range on line " + std::to_string(i + 1));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(m), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edges().size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> out(s.begin(), s.end());
    for (Vertex v : s) {
        auto nb = g.neighbors(v);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    return VertexSet(std::move(out));
}

std::vector<Edge> induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    std::vector<Edge> out;
    for (auto e : g.edges())
        if (s.contains(e.first) && s.contains(e.second)) out.push_back(e);
    return out;
}

bool is_connected(const Graph& g) {
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == g.vertex_count();
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph not connected");
}

}  // namespace autgram
