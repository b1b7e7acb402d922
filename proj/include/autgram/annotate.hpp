#pragma once

#include <functional>
#include <string>
#include <vector>

#include "autgram/decomp.hpp"
#include "autgram/graph.hpp"
#include "autgram/perm.hpp"

namespace autgram {

/// A bag S with a partial automorphism φ defined on the closed neighborhood N̄(S).
struct AnnotatedBag {
    VertexSet s;
    VertexSet domain;         // N̄(s)
    std::vector<Vertex> images;  // images[i] = φ(domain[i])

    /// φ(v); throws std::out_of_range if v is outside the domain.
    Vertex phi(Vertex v) const;
    VertexSet image_of(const VertexSet& subset) const;

    friend bool operator==(const AnnotatedBag&, const AnnotatedBag&) = default;
};

std::string to_string(const AnnotatedBag& b);

/// Builds an annotated bag from explicit (vertex, image) pairs; the domain is taken from the pairs.
AnnotatedBag make_annotated_bag(const VertexSet& s, const std::vector<std::pair<Vertex, Vertex>>& mapping);

/// Every φ on N̄(s) with φ(N̄(s)) = N̄(φ(s)) that is an isomorphism X[N̄(s)] → X[N̄(φ(s))],
/// ordered lexicographically by images over the sorted domain.
/// Throws std::invalid_argument for an empty bag or vertices outside the graph.
std::vector<AnnotatedBag> enumerate_annotated_bags(const Graph& g, const VertexSet& s);

/// Both annotated-bag conditions. Throws std::invalid_argument if b.domain != N̄(b.s).
bool check_annotated_bag(const Graph& g, const AnnotatedBag& b);

/// φ_parent and φ_child agree on the whole intersection of their domains.
bool consistent_bags(const AnnotatedBag& parent, const AnnotatedBag& child);

/// One annotated bag per decomposition node.
using AnnotationAssignment = std::vector<AnnotatedBag>;

/// Throws std::invalid_argument naming the first failed check (erasure, bag validity,
/// parent–child consistency); returns normally when `a` annotates `t`.
void check_annotation(const Graph& g, const TreeDecomposition& t, const AnnotationAssignment& a);

/// The union of all φ's. Validates `a` first; throws SoundnessError if the union is not an
/// automorphism of g.
Permutation annotation_morphism(const Graph& g, const TreeDecomposition& t, const AnnotationAssignment& a);

/// φ_p := σ|N̄(bag_p) at every node.
AnnotationAssignment restrict_automorphism(const Graph& g, const TreeDecomposition& t, const Permutation& sigma);

/// Annotated bags per node (index = node id), sharing enumeration between equal bags.
std::vector<std::vector<AnnotatedBag>> annotated_bags_per_node(const Graph& g, const TreeDecomposition& t);

/// Visits every valid full annotation of `t` by backtracking in preorder; stops early when
/// `visit` returns false. Returns the number visited.
long for_each_annotation(const Graph& g, const TreeDecomposition& t,
                         const std::function<bool(const AnnotationAssignment&)>& visit);

}  // namespace autgram
