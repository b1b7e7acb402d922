#include "autgram/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram {

std::string format_position(const Position& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(p[i]);
    }
    return out;
}

bool is_tree_like(const std::vector<Position>& positions) {
    if (positions.empty()) return false;
    std::vector<Position> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    auto present = [&](const Position& p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
    for (const auto& p : sorted) {
        if (p.empty()) continue;
        if (p.back() < 1) return false;
        Position parent(p.begin(), p.end() - 1);
        if (!present(parent)) return false;  // prefix closure: checking the parent suffices inductively
        if (p.back() > 1) {
            Position sibling = p;
            --sibling.back();
            if (!present(sibling)) return false;  // well numbered
        }
    }
    return present(Position{});
}

PositionTree::PositionTree() : parent_{-1}, children_(1) {}

PositionTree PositionTree::from_positions(std::vector<Position> positions) {
    if (!is_tree_like(positions)) throw std::invalid_argument("position set is not tree-like");
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    // Lexicographic order of child-index strings is preorder.
    PositionTree tree;
    std::map<Position, int> id{{Position{}, 0}};
    for (const auto& p : positions) {
        if (p.empty()) continue;
        int parent = id.at(Position(p.begin(), p.end() - 1));
        id[p] = tree.add_child(parent);
    }
    return tree;
}

int PositionTree::add_child(int node) {
    int id = size();
    parent_.push_back(node);
    children_.emplace_back();
    children_.at(node).push_back(id);
    return id;
}

Position PositionTree::position(int node) const {
    Position p;
    while (node != 0) {
        int par = parent_.at(node);
        const auto& sib = children_[par];
        p.push_back(static_cast<int>(std::find(sib.begin(), sib.end(), node) - sib.begin()) + 1);
        node = par;
    }
    std::reverse(p.begin(), p.end());
    return p;
}

int PositionTree::depth(int node) const {
    int d = 0;
    while (node != 0) {
        node = parent_.at(node);
        ++d;
    }
    return d;
}

std::vector<int> PositionTree::descendants(int node) const {
    std::vector<int> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        const auto& ch = children_.at(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<int> PositionTree::preorder() const { return descendants(0); }

std::vector<int> PositionTree::leaves() const {
    std::vector<int> out;
    for (int v : preorder())
        if (is_leaf(v)) out.push_back(v);
    return out;
}

int TreeDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
}

std::vector<int> occurrences(const TreeDecomposition& t, Vertex v) {
    std::vector<int> out;
    for (int node = 0; node < t.shape.size(); ++node)
        if (t.bags[node].contains(v)) out.push_back(node);
    return out;
}

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& t) {
    ValidationReport report;
    if (static_cast<int>(t.bags.size()) != t.shape.size()) {
        report.violations.push_back({Axiom::Range, "bag count does not match tree size"});
        return report;
    }
    report.width = t.width();
    const int m = g.vertex_count();
    for (int node = 0; node < t.shape.size(); ++node)
        for (Vertex v : t.bags[node])
            if (!g.has_vertex(v))
                report.violations.push_back({Axiom::Range, "bag at position '" +
                                                               format_position(t.shape.position(node)) +
                                                               "' holds out-of-range vertex " + std::to_string(v)});
    if (!report.ok()) return report;

    std::vector<std::vector<char>> member(t.shape.size(), std::vector<char>(m + 1, 0));
    for (int node = 0; node < t.shape.size(); ++node)
        for (Vertex v : t.bags[node]) member[node][v] = 1;

    for (Vertex v = 1; v <= m; ++v) {
        auto occ = occurrences(t, v);
        if (occ.empty()) {
            report.violations.push_back({Axiom::T1, "T1: vertex " + std::to_string(v) + " is in no bag"});
            continue;
        }
        // Connected iff exactly one occurrence has its parent outside the occurrence set.
        int tops = 0;
        for (int node : occ) {
            int par = t.shape.parent(node);
            if (par < 0 || !member[par][v]) ++tops;
        }
        if (tops != 1)
            report.violations.push_back(
                {Axiom::T3, "T3: bags containing vertex " + std::to_string(v) + " do not induce a subterm"});
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int node = 0; node < t.shape.size() && !covered; ++node) covered = member[node][u] && member[node][v];
        if (!covered)
            report.violations.push_back({Axiom::T2, "T2: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                                        "} is in no bag"});
    }
    return report;
}

namespace {

using Mask = std::uint32_t;

constexpr int kMaskLimit = 24;

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nb(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        nb[u - 1] |= Mask{1} << (v - 1);
        nb[v - 1] |= Mask{1} << (u - 1);
    }
    return nb;
}

// Vertices outside eliminated ∪ {v} reachable from v through eliminated vertices.
Mask elimination_frontier(const std::vector<Mask>& nb, Mask eliminated, int v) {
    Mask visited = Mask{1} << v, result = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        Mask next = nb[x] & ~visited;
        visited |= next;
        for (Mask bits = next; bits; bits &= bits - 1) {
            int y = __builtin_ctz(bits);
            if (eliminated >> y & 1)
                stack.push_back(y);
            else
                result |= Mask{1} << y;
        }
    }
    return result;
}

}  // namespace

int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
    const int m = g.vertex_count();
    std::vector<std::vector<char>> adj(m + 1, std::vector<char>(m + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(m + 1, 0);
    int width = 0;
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex u = 1; u <= m; ++u)
            if (!gone[u] && u != v && adj[v][u]) later.push_back(u);
        width = std::max(width, static_cast<int>(later.size()));
        for (Vertex a : later)
            for (Vertex b : later)
                if (a != b) adj[a][b] = 1;
        gone[v] = 1;
    }
    return width;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
    const int m = g.vertex_count();
    if (static_cast<int>(order.size()) != m) throw std::invalid_argument("elimination order must list every vertex");
    std::vector<int> rank(m + 1, -1);
    for (int i = 0; i < m; ++i) {
        Vertex v = order[i];
        if (!g.has_vertex(v) || rank[v] != -1) throw std::invalid_argument("elimination order is not a permutation");
        rank[v] = i;
    }
    std::vector<std::vector<char>> adj(m + 1, std::vector<char>(m + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

    std::vector<VertexSet> bag_of(m + 1);
    std::vector<Vertex> parent_of(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex u = 1; u <= m; ++u)
            if (u != v && adj[v][u] && rank[u] > i) later.push_back(u);
        for (Vertex a : later)
            for (Vertex b : later)
                if (a != b) adj[a][b] = 1;
        Vertex parent = 0;
        for (Vertex u : later)
            if (parent == 0 || rank[u] < rank[parent]) parent = u;
        parent_of[v] = parent;
        later.push_back(v);
        bag_of[v] = VertexSet(std::move(later));
    }

    // Eliminated-vertex forest; the last vertex roots it. Disconnected graphs produce several
    // roots, which are chained under the last one so the result is still a single term.
    std::vector<std::vector<Vertex>> kids(m + 1);
    Vertex root = order.back();
    for (int i = 0; i < m; ++i) {
        Vertex v = order[i];
        if (v == root) continue;
        kids[parent_of[v] == 0 ? root : parent_of[v]].push_back(v);
    }
    TreeDecomposition t;
    t.bags.push_back(bag_of[root]);
    std::vector<std::pair<Vertex, int>> stack{{root, 0}};
    while (!stack.empty()) {
        auto [v, node] = stack.back();
        stack.pop_back();
        // kids[v] is already in elimination order.
        std::vector<std::pair<Vertex, int>> added;
        for (Vertex c : kids[v]) {
            int id = t.shape.add_child(node);
            t.bags.push_back(bag_of[c]);
            added.emplace_back(c, id);
        }
        for (auto it = added.rbegin(); it != added.rend(); ++it) stack.push_back(*it);
    }
    return t;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
    const int m = g.vertex_count();
    std::vector<std::vector<char>> adj(m + 1, std::vector<char>(m + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(m + 1, 0);
    std::vector<Vertex> order;
    for (int step = 0; step < m; ++step) {
        Vertex best = 0;
        long best_fill = std::numeric_limits<long>::max();
        int best_degree = std::numeric_limits<int>::max();
        for (Vertex v = 1; v <= m; ++v) {
            if (gone[v]) continue;
            std::vector<Vertex> nb;
            for (Vertex u = 1; u <= m; ++u)
                if (!gone[u] && adj[v][u]) nb.push_back(u);
            long fill = 0;
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    if (!adj[nb[a]][nb[b]]) ++fill;
            int degree = static_cast<int>(nb.size());
            if (fill < best_fill || (fill == best_fill && degree < best_degree)) {
                best = v;
                best_fill = fill;
                best_degree = degree;
            }
        }
        std::vector<Vertex> nb;
        for (Vertex u = 1; u <= m; ++u)
            if (!gone[u] && adj[best][u]) nb.push_back(u);
        for (Vertex a : nb)
            for (Vertex b : nb)
                if (a != b) adj[a][b] = 1;
        gone[best] = 1;
        order.push_back(best);
    }
    return order;
}

std::vector<Vertex> exact_elimination_order(const Graph& g) {
    const int m = g.vertex_count();
    if (m > kMaskLimit) throw PreconditionError("exact treewidth search limited to " + std::to_string(kMaskLimit) + " vertices");
    auto nb = neighbor_masks(g);
    const Mask full = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
    // best[S]: minimum over orderings that eliminate exactly S first of the largest frontier.
    std::vector<int> best(std::size_t{1} << m, std::numeric_limits<int>::max());
    std::vector<signed char> last(std::size_t{1} << m, -1);
    best[0] = -1;
    for (Mask s = 1; s <= full; ++s) {
        for (Mask bits = s; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            Mask rest = s & ~(Mask{1} << v);
            int cost = std::max(best[rest], __builtin_popcount(elimination_frontier(nb, rest, v)));
            if (cost < best[s]) {
                best[s] = cost;
                last[s] = static_cast<signed char>(v);
            }
        }
        if (s == full) break;
    }
    std::vector<Vertex> order(m);
    Mask s = full;
    for (int i = m - 1; i >= 0; --i) {
        int v = last[s];
        order[i] = v + 1;
        s &= ~(Mask{1} << v);
    }
    return order;
}

TreeDecomposition compute_tree_decomposition(const Graph& g, const DecompositionOptions& options) {
    require_connected(g);
    if (options.strategy == DecompositionStrategy::ExactSmall) {
        if (g.vertex_count() > options.exact_vertex_cap)
            throw PreconditionError("exact-small refused: " + std::to_string(g.vertex_count()) +
                                    " vertices exceeds cap " + std::to_string(options.exact_vertex_cap));
        return decomposition_from_elimination_order(g, exact_elimination_order(g));
    }
    return decomposition_from_elimination_order(g, min_fill_order(g));
}

bool is_permutation_yielding(const Graph& g, const TreeDecomposition& t) {
    auto leaves = t.shape.leaves();
    if (static_cast<int>(leaves.size()) != g.vertex_count()) return false;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    for (int leaf : leaves) {
        const auto& b = t.bags[leaf];
        if (b.size() != 1 || !g.has_vertex(b[0]) || seen[b[0]]) return false;
        seen[b[0]] = 1;
    }
    return true;
}

YieldOrder yield_order(const Graph& g, const TreeDecomposition& t) {
    if (!is_permutation_yielding(g, t)) throw std::invalid_argument("decomposition is not permutation yielding");
    auto leaves = t.shape.leaves();
    std::vector<Vertex> verts;
    for (int leaf : leaves) verts.push_back(t.bags[leaf][0]);
    Permutation alpha_t(verts);
    Permutation alpha = inverse(alpha_t);
    return YieldOrder{std::move(leaves), std::move(verts), std::move(alpha_t), std::move(alpha)};
}

Permutation leaf_order_permutation(const YieldOrder& y) { return y.alpha; }

YieldingDecomposition make_permutation_yielding(const Graph& g, const TreeDecomposition& input) {
    auto report = validate_tree_decomposition(g, input);
    if (!report.ok()) throw std::invalid_argument("invalid tree decomposition: " + report.violations.front().message);
    const int m = g.vertex_count();

    TreeDecomposition t = input;
    // One singleton leaf per vertex: preorder-smallest existing one, else a new last child of the
    // preorder-smallest node containing the vertex.
    std::vector<int> chosen(m + 1, -1);
    {
        auto pre = t.shape.preorder();
        for (Vertex v = 1; v <= m; ++v) {
            for (int node : pre)
                if (t.shape.is_leaf(node) && t.bags[node].size() == 1 && t.bags[node][0] == v) {
                    chosen[v] = node;
                    break;
                }
        }
        for (Vertex v = 1; v <= m; ++v) {
            if (chosen[v] != -1) continue;
            for (int node : pre)
                if (t.bags[node].contains(v)) {
                    chosen[v] = t.shape.add_child(node);
                    t.bags.push_back(VertexSet{v});
                    break;
                }
        }
    }

    // Closest ancestral closure: nodes on root paths of chosen leaves, below their common ancestor.
    std::vector<int> below(t.shape.size(), 0);
    for (Vertex v = 1; v <= m; ++v)
        for (int node = chosen[v]; node != -1; node = t.shape.parent(node)) ++below[node];
    int top = 0;
    for (;;) {
        int next = -1;
        for (int c : t.shape.children(top))
            if (below[c] == m) next = c;
        if (next == -1) break;
        top = next;
    }

    TreeDecomposition out;
    out.bags.push_back(t.bags[top]);
    std::vector<std::pair<int, int>> stack{{top, 0}};
    while (!stack.empty()) {
        auto [old_node, new_node] = stack.back();
        stack.pop_back();
        std::vector<std::pair<int, int>> added;
        for (int c : t.shape.children(old_node)) {
            if (below[c] == 0) continue;
            int id = out.shape.add_child(new_node);
            out.bags.push_back(t.bags[c]);
            added.emplace_back(c, id);
        }
        for (auto it = added.rbegin(); it != added.rend(); ++it) stack.push_back(*it);
    }

    auto check = validate_tree_decomposition(g, out);
    if (!check.ok() || check.width > report.width || !is_permutation_yielding(g, out))
        throw SoundnessError("permutation-yielding transform produced an invalid decomposition");
    YieldOrder order = yield_order(g, out);
    return YieldingDecomposition{std::move(out), std::move(order)};
}

TreeDecomposition path_decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    const int m = g.vertex_count();
    if (static_cast<int>(order.size()) != m) throw std::invalid_argument("vertex order must list every vertex");
    std::vector<int> rank(m + 1, -1);
    for (int i = 0; i < m; ++i) {
        if (!g.has_vertex(order[i]) || rank[order[i]] != -1) throw std::invalid_argument("vertex order is not a permutation");
        rank[order[i]] = i;
    }
    // reach[v]: largest rank among v and its neighbors.
    std::vector<int> reach(m + 1);
    for (Vertex v = 1; v <= m; ++v) {
        reach[v] = rank[v];
        for (Vertex u : g.neighbors(v)) reach[v] = std::max(reach[v], rank[u]);
    }
    TreeDecomposition t;
    int node = 0;
    for (int i = 0; i < m; ++i) {
        std::vector<Vertex> bag{order[i]};
        for (int j = 0; j < i; ++j)
            if (reach[order[j]] >= i) bag.push_back(order[j]);
        if (i == 0) {
            t.bags.push_back(VertexSet(std::move(bag)));
        } else {
            node = t.shape.add_child(node);
            t.bags.push_back(VertexSet(std::move(bag)));
        }
    }
    return t;
}

namespace {

std::vector<Vertex> exact_separation_order(const Graph& g) {
    const int m = g.vertex_count();
    auto nb = neighbor_masks(g);
    const Mask full = (Mask{1} << m) - 1;
    auto boundary = [&](Mask t) {
        int count = 0;
        for (Mask bits = t; bits; bits &= bits - 1) {
            int u = __builtin_ctz(bits);
            if (nb[u] & ~t) ++count;
        }
        return count;
    };
    std::vector<int> best(std::size_t{1} << m, std::numeric_limits<int>::max());
    std::vector<signed char> last(std::size_t{1} << m, -1);
    best[0] = 0;
    for (Mask s = 1; s <= full; ++s) {
        for (Mask bits = s; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            Mask rest = s & ~(Mask{1} << v);
            int cost = std::max(best[rest], boundary(rest));
            if (cost < best[s]) {
                best[s] = cost;
                last[s] = static_cast<signed char>(v);
            }
        }
        if (s == full) break;
    }
    std::vector<Vertex> order(m);
    Mask s = full;
    for (int i = m - 1; i >= 0; --i) {
        int v = last[s];
        order[i] = v + 1;
        s &= ~(Mask{1} << v);
    }
    return order;
}

std::vector<Vertex> greedy_separation_order(const Graph& g) {
    const int m = g.vertex_count();
    std::vector<char> placed(m + 1, 0);
    std::vector<int> unplaced_nb(m + 1);
    for (Vertex v = 1; v <= m; ++v) unplaced_nb[v] = g.degree(v);
    std::vector<Vertex> order;
    int boundary = 0;
    for (int step = 0; step < m; ++step) {
        Vertex best = 0;
        int best_boundary = std::numeric_limits<int>::max();
        for (Vertex v = 1; v <= m; ++v) {
            if (placed[v]) continue;
            // Boundary after placing v.
            int b = boundary + (unplaced_nb[v] > 0 ? 1 : 0);
            for (Vertex u : g.neighbors(v))
                if (placed[u] && unplaced_nb[u] == 1) --b;
            if (b < best_boundary) {
                best = v;
                best_boundary = b;
            }
        }
        placed[best] = 1;
        for (Vertex u : g.neighbors(best)) --unplaced_nb[u];
        boundary = best_boundary;
        order.push_back(best);
    }
    return order;
}

}  // namespace

TreeDecomposition compute_path_decomposition(const Graph& g, const PathDecompositionOptions& options) {
    require_connected(g);
    auto order = g.vertex_count() <= std::min(options.exact_vertex_cap, kMaskLimit) ? exact_separation_order(g)
                                                                                     : greedy_separation_order(g);
    return path_decomposition_from_order(g, order);
}

std::vector<Vertex> path_introductions(const TreeDecomposition& t) {
    std::vector<Vertex> intro;
    int node = 0;
    const VertexSet* previous = nullptr;
    for (;;) {
        const auto& bag = t.bags.at(node);
        VertexSet fresh = bag;
        if (previous) {
            std::vector<Vertex> diff;
            for (Vertex v : bag)
                if (!previous->contains(v)) diff.push_back(v);
            fresh = VertexSet(std::move(diff));
        }
        if (fresh.size() != 1)
            throw std::invalid_argument("path node at depth " + std::to_string(intro.size()) + " introduces " +
                                        std::to_string(fresh.size()) + " vertices, expected exactly one");
        intro.push_back(fresh[0]);
        const auto& ch = t.shape.children(node);
        if (ch.empty()) break;
        if (ch.size() > 1) throw std::invalid_argument("decomposition is not path-shaped");
        previous = &bag;
        node = ch[0];
    }
    return intro;
}

TreeDecomposition parse_td(std::string_view text, const Graph& g) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start < text.size();) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    auto tokens = [](std::string_view line) {
        std::vector<std::string> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && line[i] == ' ') ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ') ++j;
            if (j > i) out.emplace_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    };
    auto to_int = [](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return static_cast<int>(v);
        } catch (const std::exception&) {
            throw ParseError(ParseError::Kind::Malformed, "td: bad integer '" + s + "'");
        }
    };

    int bag_count = -1, declared_width1 = 0, vertex_count = 0;
    std::vector<VertexSet> bags;
    std::vector<std::vector<int>> adj;
    std::vector<char> defined;
    int edges = 0;
    for (auto line : lines) {
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (tok.size() != 5 || tok[1] != "td") throw ParseError(ParseError::Kind::Malformed, "td: bad header");
            bag_count = to_int(tok[2]);
            declared_width1 = to_int(tok[3]);
            vertex_count = to_int(tok[4]);
            if (bag_count < 1) throw ParseError(ParseError::Kind::Malformed, "td: need at least one bag");
            if (vertex_count != g.vertex_count())
                throw ParseError(ParseError::Kind::Malformed, "td: vertex count does not match graph");
            bags.assign(bag_count + 1, {});
            adj.assign(bag_count + 1, {});
            defined.assign(bag_count + 1, 0);
            continue;
        }
        if (bag_count < 0) throw ParseError(ParseError::Kind::Malformed, "td: header must come first");
        if (tok[0] == "b") {
            if (tok.size() < 2) throw ParseError(ParseError::Kind::Malformed, "td: bad bag line");
            int id = to_int(tok[1]);
            if (id < 1 || id > bag_count || defined[id])
                throw ParseError(ParseError::Kind::OutOfRange, "td: bad bag id " + tok[1]);
            std::vector<Vertex> vs;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                int v = to_int(tok[i]);
                if (!g.has_vertex(v)) throw ParseError(ParseError::Kind::OutOfRange, "td: vertex out of range " + tok[i]);
                vs.push_back(v);
            }
            bags[id] = VertexSet(std::move(vs));
            defined[id] = 1;
            continue;
        }
        if (tok.size() != 2) throw ParseError(ParseError::Kind::Malformed, "td: bad line '" + std::string(line) + "'");
        int a = to_int(tok[0]), b = to_int(tok[1]);
        if (a < 1 || a > bag_count || b < 1 || b > bag_count || a == b)
            throw ParseError(ParseError::Kind::OutOfRange, "td: bad tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
    }
    if (bag_count < 0) throw ParseError(ParseError::Kind::Malformed, "td: missing header");
    for (int id = 1; id <= bag_count; ++id)
        if (!defined[id]) throw ParseError(ParseError::Kind::Malformed, "td: bag " + std::to_string(id) + " missing");
    if (edges != bag_count - 1) throw ParseError(ParseError::Kind::Malformed, "td: tree must have #bags-1 edges");
    int widest = 0;
    for (int id = 1; id <= bag_count; ++id) widest = std::max(widest, static_cast<int>(bags[id].size()));
    if (widest != declared_width1) throw ParseError(ParseError::Kind::Malformed, "td: declared width does not match bags");

    TreeDecomposition t;
    t.bags.push_back(bags[1]);
    std::vector<char> seen(bag_count + 1, 0);
    seen[1] = 1;
    std::vector<std::pair<int, int>> stack{{1, 0}};
    int reached = 1;
    while (!stack.empty()) {
        auto [id, node] = stack.back();
        stack.pop_back();
        auto nbrs = adj[id];
        std::sort(nbrs.begin(), nbrs.end());
        std::vector<std::pair<int, int>> added;
        for (int c : nbrs) {
            if (seen[c]) continue;
            seen[c] = 1;
            ++reached;
            int child = t.shape.add_child(node);
            t.bags.push_back(bags[c]);
            added.emplace_back(c, child);
        }
        for (auto it = added.rbegin(); it != added.rend(); ++it) stack.push_back(*it);
    }
    if (reached != bag_count) throw ParseError(ParseError::Kind::Malformed, "td: tree is not connected");
    return t;
}

std::string write_td(const TreeDecomposition& t, const Graph& g) {
    auto pre = t.shape.preorder();
    std::vector<int> id(t.shape.size());
    for (std::size_t i = 0; i < pre.size(); ++i) id[pre[i]] = static_cast<int>(i) + 1;
    std::string out = "s td " + std::to_string(t.shape.size()) + " " + std::to_string(t.width() + 1) + " " +
                      std::to_string(g.vertex_count()) + "\n";
    for (int node : pre) {
        out += "b " + std::to_string(id[node]);
        for (Vertex v : t.bags[node]) out += " " + std::to_string(v);
        out += "\n";
    }
    for (int node : pre)
        if (node != 0) out += std::to_string(id[t.shape.parent(node)]) + " " + std::to_string(id[node]) + "\n";
    return out;
}

}  // namespace autgram
