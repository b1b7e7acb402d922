#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autgram/graph.hpp"
#include "autgram/perm.hpp"

namespace autgram {

/// A node address in a tree-like set: the sequence of 1-based child indices from the root.
/// The root is the empty position.
using Position = std::vector<int>;

/// "1.2.1"; the root formats as the empty string.
std::string format_position(const Position& p);

/// True iff `positions` is prefix-closed and well-numbered (and therefore contains the root).
bool is_tree_like(const std::vector<Position>& positions);

/// Ordered rooted tree. Node 0 is the root; nodes are addressed by integer ids and map to
/// Positions through their child indices, so the node set is tree-like by construction.
class PositionTree {
public:
    PositionTree();

    /// Builds the tree for a tree-like position set; throws std::invalid_argument otherwise.
    /// Node ids follow preorder.
    static PositionTree from_positions(std::vector<Position> positions);

    /// Appends a new last child of `node`; returns its id.
    int add_child(int node);

    int size() const noexcept { return static_cast<int>(parent_.size()); }
    int root() const noexcept { return 0; }
    int parent(int node) const { return parent_.at(node); }
    const std::vector<int>& children(int node) const { return children_.at(node); }
    bool is_leaf(int node) const { return children_.at(node).empty(); }
    Position position(int node) const;
    int depth(int node) const;

    std::vector<int> preorder() const;
    /// Leaves left to right.
    std::vector<int> leaves() const;
    /// Nodes of the subtree rooted at `node` (U|_p), preorder.
    std::vector<int> descendants(int node) const;

private:
    std::vector<int> parent_;  // parent_[0] == -1
    std::vector<std::vector<int>> children_;
};

/// A term over bags: `bags[node]` labels each node of `shape`.
struct TreeDecomposition {
    PositionTree shape;
    std::vector<VertexSet> bags;

    /// Max bag size minus one.
    int width() const;
    const VertexSet& bag(int node) const { return bags.at(node); }
};

enum class Axiom { Range, T1, T2, T3 };

struct Violation {
    Axiom axiom;
    std::string message;
};

struct ValidationReport {
    int width = -1;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks T1 (coverage), T2 (edges), T3 (connected occurrences). Violations are data.
ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& t);

/// Nodes whose bags contain `v`.
std::vector<int> occurrences(const TreeDecomposition& t, Vertex v);

enum class DecompositionStrategy { MinFill, ExactSmall };

struct DecompositionOptions {
    DecompositionStrategy strategy = DecompositionStrategy::MinFill;
    /// ExactSmall refuses graphs with more vertices than this.
    int exact_vertex_cap = 10;
};

/// Decomposition induced by eliminating vertices in `order` (a permutation of 1..m).
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);
/// Width of the decomposition induced by `order`, without building it.
int elimination_width(const Graph& g, const std::vector<Vertex>& order);

std::vector<Vertex> min_fill_order(const Graph& g);
/// Optimal elimination order by dynamic programming over vertex subsets.
std::vector<Vertex> exact_elimination_order(const Graph& g);

/// Requires a connected graph (PreconditionError otherwise).
TreeDecomposition compute_tree_decomposition(const Graph& g, const DecompositionOptions& options = {});

/// Left-to-right leaf order of a permutation-yielding decomposition.
struct YieldOrder {
    std::vector<int> leaf_sequence;   // node ids, left to right
    std::vector<Vertex> vertex_of_leaf;  // π, parallel to leaf_sequence
    Permutation alpha_t;              // str(alpha_t) = v_1 … v_n
    Permutation alpha;                // inverse(alpha_t)
};

/// True iff every leaf bag is a singleton and leaves biject with V(g).
bool is_permutation_yielding(const Graph& g, const TreeDecomposition& t);
/// Reads the yield of a permutation-yielding decomposition; throws std::invalid_argument otherwise.
YieldOrder yield_order(const Graph& g, const TreeDecomposition& t);

struct YieldingDecomposition {
    TreeDecomposition decomposition;
    YieldOrder order;
};

/// Attaches missing singleton leaves, keeps one singleton leaf per vertex and restricts the
/// decomposition to the closest ancestral closure of those leaves.
YieldingDecomposition make_permutation_yielding(const Graph& g, const TreeDecomposition& t);

/// Returns y.alpha, the inverse of the leaf-order permutation.
Permutation leaf_order_permutation(const YieldOrder& y);

struct PathDecompositionOptions {
    /// Exact vertex-separation search up to this many vertices; greedy above.
    int exact_vertex_cap = 16;
};

/// Path-shaped decomposition (every node has at most one child) in which node i introduces
/// exactly one new vertex. Requires a connected graph.
TreeDecomposition compute_path_decomposition(const Graph& g, const PathDecompositionOptions& options = {});
/// Path decomposition for a fixed vertex order: bag i holds v_i and every earlier vertex with a
/// neighbor at index ≥ i.
TreeDecomposition path_decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);
/// Introduced vertex per path node if `t` is path-shaped with one introduction per node.
std::vector<Vertex> path_introductions(const TreeDecomposition& t);

/// PACE 2017 .td format. Import re-roots at bag 1; children ordered by bag id.
TreeDecomposition parse_td(std::string_view text, const Graph& g);
std::string write_td(const TreeDecomposition& t, const Graph& g);

}  // namespace autgram
