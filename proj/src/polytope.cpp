#include "autgram/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram {

long ExtendedFormulation::constraint_count() const {
    long bounded = 0;
    for (const auto& b : bounds) bounded += b.upper ? 2 : 1;
    return static_cast<long>(constraints.size()) + bounded;
}

void canonical_order(std::vector<Term>& terms, int flow_count) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        const bool fa = a.var < flow_count, fb = b.var < flow_count;
        return fa != fb ? fb : a.var < b.var;
    });
}

Positional positional_spans(const Grammar& gr) {
    check_well_formed(gr);
    auto order = topological_order(gr);
    if (!order) throw std::invalid_argument("cyclic grammar has no extended formulation here");
    const int nv = gr.variable_count();
    std::vector<std::vector<int>> by(nv);
    for (std::size_t i = 0; i < gr.rules.size(); ++i) by[gr.rules[i].lhs].push_back(static_cast<int>(i));

    Positional pos;
    pos.length.assign(nv, -1);
    pos.offset.assign(nv, -1);
    auto usable = [&](const Rule& r) {
        return std::all_of(r.rhs.begin(), r.rhs.end(), [&](Symbol s) { return !s.is_variable || pos.length[s.id] >= 0; });
    };
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        for (int ri : by[*it]) {
            const auto& r = gr.rules[ri];
            if (!usable(r)) continue;
            int len = 0;
            for (auto s : r.rhs) len += s.is_variable ? pos.length[s.id] : 1;
            if (pos.length[*it] >= 0 && pos.length[*it] != len)
                throw std::invalid_argument("grammar is not positional: variable '" + gr.variables[*it] +
                                            "' derives words of different lengths");
            pos.length[*it] = len;
        }
    }
    pos.word_length = std::max(pos.length[gr.start], 0);
    if (gr.accepts_empty && pos.word_length > 0)
        throw std::invalid_argument("grammar is not positional: it accepts the empty word and longer words");
    if (pos.length[gr.start] < 0) return pos;

    pos.offset[gr.start] = 0;
    for (int v : *order) {
        if (pos.offset[v] < 0) continue;
        for (int ri : by[v]) {
            const auto& r = gr.rules[ri];
            if (!usable(r)) continue;
            int at = pos.offset[v];
            for (auto s : r.rhs) {
                if (!s.is_variable) {
                    ++at;
                    continue;
                }
                if (pos.offset[s.id] >= 0 && pos.offset[s.id] != at)
                    throw std::invalid_argument("grammar is not positional: variable '" + gr.variables[s.id] +
                                                "' occurs at several offsets");
                pos.offset[s.id] = at;
                at += pos.length[s.id];
            }
        }
    }
    return pos;
}

namespace {

void add_term(std::map<int, long>& row, int var, long coef) {
    row[var] += coef;
}

Constraint make_row(std::string name, const std::map<int, long>& coefs, Sense sense, long rhs, bool explicit_coefs,
                    int flow_count) {
    Constraint c{std::move(name), {}, sense, rhs, explicit_coefs};
    for (auto [v, a] : coefs)
        if (a != 0) c.terms.push_back(Term{v, a});
    canonical_order(c.terms, flow_count);
    return c;
}

}  // namespace

ExtendedFormulation build_extended_formulation(const Grammar& gr, ProjectionStyle style) {
    const Positional pos = positional_spans(gr);
    ExtendedFormulation ef;
    ef.flow_count = static_cast<int>(gr.rules.size());
    ef.word_length = pos.word_length;
    ef.sigma_max = gr.sigma_max;
    ef.style = style;
    for (int r = 0; r < ef.flow_count; ++r) ef.variables.push_back("y_" + std::to_string(r));
    for (int i = 1; i <= ef.word_length; ++i) ef.variables.push_back("x_" + std::to_string(i));
    if (style == ProjectionStyle::Matrix)
        for (int i = 1; i <= ef.word_length; ++i)
            for (int j = 1; j <= ef.sigma_max; ++j)
                ef.variables.push_back("z_" + std::to_string(i) + "_" + std::to_string(j));

    std::map<int, long> source;
    std::vector<std::map<int, long>> conservation(gr.variable_count());
    for (int r = 0; r < ef.flow_count; ++r) {
        const auto& rule = gr.rules[r];
        if (rule.lhs == gr.start)
            add_term(source, r, 1);
        else
            add_term(conservation[rule.lhs], r, 1);
        for (auto s : rule.rhs)
            if (s.is_variable) add_term(conservation[s.id], r, -1);
    }
    ef.constraints.push_back(make_row("src", source, Sense::Eq, 1, false, ef.flow_count));
    if (source.empty()) ef.warnings.push_back("empty language: no rule rewrites the start variable, source row is infeasible");
    for (int v = 0; v < gr.variable_count(); ++v) {
        if (v == gr.start) continue;
        auto row = make_row("c" + std::to_string(v), conservation[v], Sense::Eq, 0, false, ef.flow_count);
        if (!row.terms.empty()) ef.constraints.push_back(std::move(row));
    }

    // Terminal j written at position i by rule r contributes j·y_r to x_i and y_r to z_i_j.
    std::vector<std::map<int, long>> value(ef.word_length + 1);
    std::map<std::pair<int, int>, std::map<int, long>> cell;
    for (int r = 0; r < ef.flow_count; ++r) {
        const auto& rule = gr.rules[r];
        int at = pos.offset[rule.lhs];
        if (at < 0) continue;
        bool usable = std::all_of(rule.rhs.begin(), rule.rhs.end(),
                                  [&](Symbol s) { return !s.is_variable || pos.length[s.id] >= 0; });
        if (!usable) continue;
        for (auto s : rule.rhs) {
            if (s.is_variable) {
                at += pos.length[s.id];
                continue;
            }
            ++at;
            add_term(value[at], r, -s.id);
            add_term(cell[{at, s.id}], r, -1);
        }
    }
    for (int i = 1; i <= ef.word_length; ++i) {
        auto row = value[i];
        row[ef.x_var(i)] = 1;
        ef.constraints.push_back(make_row("px" + std::to_string(i), row, Sense::Eq, 0, true, ef.flow_count));
    }
    if (style == ProjectionStyle::Matrix)
        for (int i = 1; i <= ef.word_length; ++i)
            for (int j = 1; j <= ef.sigma_max; ++j) {
                auto row = cell[{i, j}];
                row[ef.z_var(i, j)] = 1;
                ef.constraints.push_back(
                    make_row("pz" + std::to_string(i) + "_" + std::to_string(j), row, Sense::Eq, 0, true, ef.flow_count));
            }
    for (int r = 0; r < ef.flow_count; ++r) ef.bounds.push_back(Bound{r, 1});
    return ef;
}

RationalPoint lift_parse_tree(const ExtendedFormulation& ef, const Grammar& gr, const ParseTree& t) {
    check_parse_tree(gr, t);
    if (static_cast<int>(gr.rules.size()) != ef.flow_count)
        throw std::invalid_argument("formulation was not built from this grammar");
    RationalPoint p;
    p.values.assign(ef.variables.size(), 0);
    auto walk = [&](auto&& self, const ParseTree& node) -> void {
        p.values[node.rule] += 1;
        for (const auto& c : node.children) self(self, c);
    };
    walk(walk, t);
    // Projection rows define x and z from y: solve each for its single non-flow variable.
    for (const auto& c : ef.constraints) {
        if (c.name.rfind("px", 0) != 0 && c.name.rfind("pz", 0) != 0) continue;
        Rational acc = c.rhs;
        int target = -1;
        for (const auto& term : c.terms) {
            if (term.var < ef.flow_count)
                acc -= Rational(term.coef) * p.values[term.var];
            else
                target = term.var;
        }
        if (target >= 0) p.values[target] = acc;
    }
    return p;
}

std::vector<std::string> violated_constraints(const ExtendedFormulation& ef, const RationalPoint& p) {
    if (p.values.size() != ef.variables.size()) throw std::invalid_argument("point dimension mismatch");
    std::vector<std::string> bad;
    for (const auto& c : ef.constraints) {
        Rational lhs = 0;
        for (const auto& t : c.terms) lhs += Rational(t.coef) * p.values[t.var];
        bool ok = c.sense == Sense::Eq ? lhs == c.rhs : c.sense == Sense::Le ? lhs <= c.rhs : lhs >= c.rhs;
        if (!ok) bad.push_back(c.name);
    }
    for (std::size_t v = 0; v < ef.variables.size(); ++v)
        if (p.values[v] < 0) bad.push_back("lower bound of " + ef.variables[v]);
    for (const auto& b : ef.bounds)
        if (b.upper && p.values[b.var] > *b.upper) bad.push_back("upper bound of " + ef.variables[b.var]);
    return bad;
}

std::vector<Rational> projection_of(const ExtendedFormulation& ef, const RationalPoint& p) {
    std::vector<Rational> x;
    for (int i = 1; i <= ef.word_length; ++i) x.push_back(p.values.at(ef.x_var(i)));
    return x;
}

std::vector<Rational> word_vector(const Word& w) {
    std::vector<Rational> x;
    for (int s : w.symbols) x.emplace_back(s);
    return x;
}

namespace {

// Phase-1 simplex on A y = b, y ≥ 0, with one artificial per row and Bland's rule.
class Phase1 {
public:
    Phase1(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : rows_(static_cast<int>(a.size())), cols_(rows_ ? static_cast<int>(a[0].size()) : 0) {
        for (int i = 0; i < rows_; ++i)
            if (b[i] < 0) {
                for (auto& v : a[i]) v = -v;
                b[i] = -b[i];
            }
        const int width = cols_ + rows_;
        tab_.assign(rows_ + 1, std::vector<Rational>(width + 1, 0));
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) tab_[i][j] = a[i][j];
            tab_[i][cols_ + i] = 1;
            tab_[i][width] = b[i];
            basis_.push_back(cols_ + i);
        }
        // Objective row holds reduced costs of w = Σ artificials, rhs holds −w.
        auto& obj = tab_[rows_];
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) obj[j] -= tab_[i][j];
            obj[width] -= tab_[i][width];
        }
    }

    bool feasible() {
        const int width = cols_ + rows_;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < width; ++j)
                if (tab_[rows_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) break;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][width] / tab_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw SoundnessError("phase-1 objective unbounded");
            pivot(leave, enter);
        }
        return tab_[rows_][width] == 0;
    }

private:
    void pivot(int r, int c) {
        const int width = cols_ + rows_;
        auto& prow = tab_[r];
        const Rational inv = 1 / prow[c];
        std::vector<int> nonzero;
        for (int j = 0; j <= width; ++j)
            if (prow[j] != 0) {
                prow[j] *= inv;
                nonzero.push_back(j);
            }
        for (int i = 0; i <= rows_; ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            const Rational f = tab_[i][c];
            for (int j : nonzero) tab_[i][j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    int rows_, cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basis_;
};

}  // namespace

bool check_projection_feasibility(const ExtendedFormulation& ef, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != ef.word_length)
        throw std::invalid_argument("point has dimension " + std::to_string(x.size()) + ", formulation expects " +
                                    std::to_string(ef.word_length));
    // Columns: every non-x variable, then one slack per inequality row and per upper bound.
    const int nv = static_cast<int>(ef.variables.size());
    std::vector<int> column(nv, -1);
    int cols = 0;
    for (int v = 0; v < nv; ++v) {
        bool is_x = v >= ef.flow_count && v < ef.flow_count + ef.word_length;
        if (!is_x) column[v] = cols++;
    }
    for (const auto& c : ef.constraints)
        if (c.sense != Sense::Eq) ++cols;
    for (const auto& b : ef.bounds)
        if (b.upper) ++cols;

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    int slack = cols;
    for (const auto& b : ef.bounds)
        if (b.upper) --slack;
    for (const auto& c : ef.constraints)
        if (c.sense != Sense::Eq) --slack;
    for (const auto& c : ef.constraints) {
        std::vector<Rational> row(cols, 0);
        Rational value = c.rhs;
        for (const auto& t : c.terms) {
            if (column[t.var] >= 0)
                row[column[t.var]] += t.coef;
            else
                value -= Rational(t.coef) * x[t.var - ef.flow_count];
        }
        if (c.sense == Sense::Le) row[slack++] = 1;
        if (c.sense == Sense::Ge) row[slack++] = -1;
        a.push_back(std::move(row));
        rhs.push_back(value);
    }
    for (const auto& b : ef.bounds) {
        if (!b.upper) continue;
        if (column[b.var] < 0) {
            const Rational& fixed = x[b.var - ef.flow_count];
            if (fixed > *b.upper) return false;
            continue;
        }
        std::vector<Rational> row(cols, 0);
        row[column[b.var]] = 1;
        row[slack++] = 1;
        a.push_back(std::move(row));
        rhs.emplace_back(*b.upper);
    }
    for (int i = 1; i <= ef.word_length; ++i)
        if (x[i - 1] < 0) return false;
    // Rows without columns are decided directly.
    std::vector<std::vector<Rational>> kept;
    std::vector<Rational> kept_rhs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool empty = std::all_of(a[i].begin(), a[i].end(), [](const Rational& q) { return q == 0; });
        if (empty) {
            if (rhs[i] != 0) return false;
            continue;
        }
        kept.push_back(std::move(a[i]));
        kept_rhs.push_back(std::move(rhs[i]));
    }
    if (kept.empty()) return true;
    Phase1 lp(std::move(kept), std::move(kept_rhs));
    return lp.feasible();
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return ParseError(ParseError::Kind::Malformed, "bad rational '" + std::string(text) + "'"); };
    auto slash = text.find('/');
    auto integer = [&](std::string_view s) -> BigInt {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw bad();
        BigInt v(std::string(s.substr(i)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(integer(text));
    BigInt num = integer(text.substr(0, slash));
    BigInt den = integer(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
}

std::vector<Rational> parse_rational_vector(std::string_view text) {
    std::vector<Rational> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t' || text[i] == '\n')) ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t' && text[j] != '\n') ++j;
        if (j > i) out.push_back(parse_rational(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

}  // namespace autgram
