#pragma once

#include <optional>
#include <vector>

#include "autgram/graph.hpp"
#include "autgram/perm.hpp"

namespace autgram::oracle {

/// Graphs above this size are refused by the brute-force routines.
inline constexpr int kDefaultVertexCap = 10;

/// Aut(g) by backtracking over degree-compatible images, sorted lexicographically.
/// Throws PreconditionError when g has more than `cap` vertices.
std::vector<Permutation> brute_force_automorphisms(const Graph& g, int cap = kDefaultVertexCap);

bool is_automorphism(const Graph& g, const Permutation& sigma);

struct RestrictedAction {
    /// Aut(g)|_[n], sorted; empty when invariance fails.
    std::vector<Permutation> group;
    /// An automorphism that moves some vertex of [n] outside [n].
    std::optional<Permutation> violation;

    bool invariant() const noexcept { return !violation.has_value(); }
};

RestrictedAction restricted_action(const Graph& g, int n, int cap = kDefaultVertexCap);

/// Closed under compose and inverse and contains the identity.
bool is_group(const std::vector<Permutation>& perms);

/// |big| / |small|. Throws std::invalid_argument if small is not a subgroup of big.
long group_index(const std::vector<Permutation>& big, const std::vector<Permutation>& small);

/// One representative per left coset β∘small; the identity comes first, remaining representatives
/// are the lexicographically smallest of their cosets, in lexicographic order.
std::vector<Permutation> left_transversal(const std::vector<Permutation>& big, const std::vector<Permutation>& small);

/// All n! permutations of {1..n} in lexicographic order.
std::vector<Permutation> symmetric_group(int n);

/// {β∘γ : γ ∈ group}, sorted.
std::vector<Permutation> left_coset(const Permutation& beta, const std::vector<Permutation>& group);

}  // namespace autgram::oracle
