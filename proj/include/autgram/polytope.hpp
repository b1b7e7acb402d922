#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autgram/grammar.hpp"

namespace autgram {

using Rational = boost::multiprecision::cpp_rational;

enum class Sense { Eq, Le, Ge };

struct Term {
    int var = 0;
    long coef = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

struct Constraint {
    std::string name;
    std::vector<Term> terms;  // projection variables first, then flows; no zero coefficients
    Sense sense = Sense::Eq;
    long rhs = 0;
    /// Flow terms always print their coefficient (projection rows).
    bool explicit_coefficients = false;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// 0 ≤ variable ≤ upper (no upper bound when absent).
struct Bound {
    int var = 0;
    std::optional<long> upper;

    friend bool operator==(const Bound&, const Bound&) = default;
};

enum class ProjectionStyle { Value, Matrix };

/// Rule-flow system of a positional grammar. Variables 0..flow_count-1 are y_<rule>, followed by
/// x_1..x_n and, in matrix style, z_<i>_<j> for every position i and symbol j.
struct ExtendedFormulation {
    int flow_count = 0;
    int word_length = 0;
    int sigma_max = 0;
    ProjectionStyle style = ProjectionStyle::Value;
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
    std::vector<Bound> bounds;
    std::vector<std::string> warnings;

    int x_var(int i) const { return flow_count + i - 1; }
    int z_var(int i, int j) const { return flow_count + word_length + (i - 1) * sigma_max + (j - 1); }
    /// Rows plus one lower and one upper bound per bounded variable.
    long constraint_count() const;

    friend bool operator==(const ExtendedFormulation& a, const ExtendedFormulation& b) {
        const bool same_sigma = a.style == ProjectionStyle::Value || a.sigma_max == b.sigma_max;
        return a.flow_count == b.flow_count && a.word_length == b.word_length && same_sigma && a.style == b.style && a.variables == b.variables && a.constraints == b.constraints &&
               a.bounds == b.bounds;
    }
};

/// Puts `terms` in the canonical row order for a formulation with `flow_count` flow variables.
void canonical_order(std::vector<Term>& terms, int flow_count);

/// Fixed word length and start offset of every variable reachable through productive rules.
struct Positional {
    int word_length = 0;
    std::vector<int> length;  // -1 for unproductive variables
    std::vector<int> offset;  // 0-based; -1 when unreachable
};

/// Throws std::invalid_argument when some variable derives words of several lengths or occurs at
/// several offsets, or when the grammar is cyclic.
Positional positional_spans(const Grammar& gr);

ExtendedFormulation build_extended_formulation(const Grammar& gr, ProjectionStyle style = ProjectionStyle::Value);

/// One exact value per EF variable.
struct RationalPoint {
    std::vector<Rational> values;
};

/// y_R = multiplicity of R in `t`, projection variables set accordingly.
/// Throws std::invalid_argument if `t` is not a parse tree of `gr`.
RationalPoint lift_parse_tree(const ExtendedFormulation& ef, const Grammar& gr, const ParseTree& t);

/// Names of the rows and bounds `p` violates; empty iff feasible.
std::vector<std::string> violated_constraints(const ExtendedFormulation& ef, const RationalPoint& p);

/// (x_1, …, x_n) read from `p`.
std::vector<Rational> projection_of(const ExtendedFormulation& ef, const RationalPoint& p);

/// Word vector ŵ = (w_1, …, w_n).
std::vector<Rational> word_vector(const Word& w);

/// Does some feasible point project to `x`? Exact phase-1 simplex with Bland's rule.
/// Throws std::invalid_argument on a dimension mismatch.
bool check_projection_feasibility(const ExtendedFormulation& ef, const std::vector<Rational>& x);

/// Parses "3", "-2", "3/2"; throws ParseError.
Rational parse_rational(std::string_view text);
/// Whitespace- or comma-separated rationals.
std::vector<Rational> parse_rational_vector(std::string_view text);

/// CPLEX LP text, deterministic.
std::string emit_lp(const ExtendedFormulation& ef);
/// Reads the LP subset written by emit_lp back into a formulation; throws ParseError.
ExtendedFormulation parse_lp(std::string_view text);

}  // namespace autgram
