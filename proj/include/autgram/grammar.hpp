#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autgram/annotate.hpp"
#include "autgram/decomp.hpp"
#include "autgram/graph.hpp"
#include "autgram/perm.hpp"

namespace autgram {

using BigInt = boost::multiprecision::cpp_int;

/// A terminal in 1..sigma_max or a variable index.
struct Symbol {
    bool is_variable = false;
    int id = 0;

    static Symbol terminal(int a) { return {false, a}; }
    static Symbol variable(int v) { return {true, v}; }
    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Rule {
    int lhs = 0;
    std::vector<Symbol> rhs;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Where a (position, annotated bag) variable came from.
struct VariableProvenance {
    Position position;
    int bag_index = 0;
    AnnotatedBag bag;
};

/// Context-free grammar over the terminal alphabet {1..sigma_max}.
struct Grammar {
    int sigma_max = 0;
    std::vector<std::string> variables;  // names, unique
    int start = 0;
    std::vector<Rule> rules;
    /// The empty word belongs to the language; ε-free rules cannot express it.
    bool accepts_empty = false;
    std::map<int, VariableProvenance> provenance;

    int variable_count() const noexcept { return static_cast<int>(variables.size()); }
    /// Index of the variable called `name`, or -1.
    int find_variable(const std::string& name) const;
};

/// Throws std::invalid_argument if indices or terminals are out of range or names repeat.
void check_well_formed(const Grammar& gr);

/// Variables in an order where every variable precedes the variables on its right-hand sides;
/// std::nullopt if the dependency relation has a cycle.
std::optional<std::vector<int>> topological_order(const Grammar& gr);
bool is_acyclic(const Grammar& gr);
/// Every rule is (B, a) or (B, a B').
bool is_regular(const Grammar& gr);

/// Removes variables that derive no terminal string, then those unreachable from the start.
/// Surviving variables and rules keep their relative order.
Grammar trim(const Grammar& gr);

struct GrammarSize {
    double value = 0;           // Σ (1 + |u|) · log2(|Σ| + |𝓑|)
    long symbol_count = 0;      // Σ (1 + |u|)
    long alphabet_plus_variables = 0;
};

GrammarSize grammar_size(const Grammar& gr);

struct LanguageEnumeration {
    std::vector<Word> words;  // sorted, distinct
    bool truncated = false;
};

/// All words of an acyclic grammar, lexicographically sorted, truncated at `cap`.
/// Throws std::invalid_argument on cyclic grammars.
LanguageEnumeration enumerate_language(const Grammar& gr, std::size_t cap = static_cast<std::size_t>(-1));

/// Number of accepting parse trees (the flagged empty word counts as one).
BigInt count_parse_trees(const Grammar& gr);

bool membership(const Grammar& gr, const Word& w);

/// A derivation: the rule applied at the root and one subtree per variable on its right-hand side.
struct ParseTree {
    int rule = 0;
    std::vector<ParseTree> children;
};

/// Accepting parse trees in rule order, at most `cap`.
std::vector<ParseTree> enumerate_parse_trees(const Grammar& gr, std::size_t cap = static_cast<std::size_t>(-1));
/// Throws std::invalid_argument if `t` is not a parse tree of `gr` rooted at the start.
void check_parse_tree(const Grammar& gr, const ParseTree& t);
Word parse_tree_yield(const Grammar& gr, const ParseTree& t);

/// Applies `b` to every terminal. Throws std::invalid_argument if a terminal exceeds b.size().
Grammar rename_terminals(const Grammar& gr, const Permutation& b);

/// Image under the homomorphism deleting every terminal > keep, made ε-free; a derivable empty
/// word sets accepts_empty. Requires an acyclic grammar.
Grammar erase_terminals(const Grammar& gr, int keep);

/// Fresh start with one unit rule per operand; operand variables are renamed apart.
Grammar union_grammars(std::span<const Grammar> parts);
Grammar union_grammar(const Grammar& g1, const Grammar& g2);

struct TransversalGrammar {
    Grammar grammar;
    std::vector<std::string> warnings;
};

/// ⋃_{β ∈ transversal} Perm(str(β∘H), α) from a grammar for Perm(str(H), α). When `subgroup`
/// is given, representatives sharing a coset are reported as warnings.
TransversalGrammar group_from_subgroup(const Grammar& subgroup_grammar, const std::vector<Permutation>& transversal,
                                       const std::vector<Permutation>* subgroup = nullptr);

/// A grammar together with the permutation α for which L = Perm(str(group), α).
struct AlignedGrammar {
    Permutation alpha;
    Grammar grammar;
};

/// Grammar whose parse trees are the annotations of a permutation-yielding decomposition.
/// Requires a connected graph and a valid permutation-yielding decomposition.
AlignedGrammar build_aut_grammar(const Graph& g, const TreeDecomposition& yielding);
/// Decomposes with `options`, applies the yielding transform, then builds.
AlignedGrammar build_aut_grammar(const Graph& g, const DecompositionOptions& options = {});

/// Regular variant over a path decomposition in which each node introduces one vertex.
AlignedGrammar build_regular_aut_grammar(const Graph& g, const TreeDecomposition& path);

struct EmbedOptions {
    /// Verify invariance of [n] with the brute-force oracle.
    bool checked = true;
    int oracle_cap = 10;
    /// Use the regular (path decomposition) construction.
    bool regular = false;
    DecompositionOptions decomposition;
};

/// Grammar for Perm(str(β ∘ Aut(g,[n])), α).
AlignedGrammar build_embedded_group_grammar(const Graph& g, int n, const Permutation& beta,
                                            const EmbedOptions& options = {});

/// JSON document: sigma_max, start, variables, rules, accepts_empty, optional alpha and provenance.
std::string grammar_to_json(const Grammar& gr, const std::optional<Permutation>& alpha = std::nullopt);
struct GrammarFile {
    Grammar grammar;
    std::optional<Permutation> alpha;
};
GrammarFile grammar_from_json(const std::string& text);

}  // namespace autgram
