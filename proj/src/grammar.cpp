#include "autgram/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "autgram/error.hpp"

namespace autgram {

int Grammar::find_variable(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

void check_well_formed(const Grammar& gr) {
    if (gr.sigma_max < 0) throw std::invalid_argument("negative alphabet size");
    if (gr.start < 0 || gr.start >= gr.variable_count()) throw std::invalid_argument("start variable missing");
    std::unordered_set<std::string> names(gr.variables.begin(), gr.variables.end());
    if (names.size() != gr.variables.size()) throw std::invalid_argument("duplicate variable name");
    for (const auto& r : gr.rules) {
        if (r.lhs < 0 || r.lhs >= gr.variable_count()) throw std::invalid_argument("rule lhs is not a variable");
        for (auto s : r.rhs) {
            if (s.is_variable && (s.id < 0 || s.id >= gr.variable_count()))
                throw std::invalid_argument("rule references an undeclared variable");
            if (!s.is_variable && (s.id < 1 || s.id > gr.sigma_max))
                throw std::invalid_argument("terminal " + std::to_string(s.id) + " outside alphabet");
        }
    }
}

namespace {

std::vector<std::vector<int>> rules_by_lhs(const Grammar& gr) {
    std::vector<std::vector<int>> by(gr.variable_count());
    for (std::size_t i = 0; i < gr.rules.size(); ++i) by[gr.rules[i].lhs].push_back(static_cast<int>(i));
    return by;
}

std::vector<int> require_order(const Grammar& gr) {
    auto order = topological_order(gr);
    if (!order) throw std::invalid_argument("grammar is cyclic; only finite-language grammars are supported");
    return *order;
}

}  // namespace

std::optional<std::vector<int>> topological_order(const Grammar& gr) {
    const int n = gr.variable_count();
    std::vector<std::set<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (const auto& r : gr.rules)
        for (auto s : r.rhs)
            if (s.is_variable && succ[r.lhs].insert(s.id).second) ++indegree[s.id];
    std::vector<int> order, ready;
    for (int v = n - 1; v >= 0; --v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : succ[v])
            if (--indegree[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const Grammar& gr) { return topological_order(gr).has_value(); }

bool is_regular(const Grammar& gr) {
    for (const auto& r : gr.rules) {
        if (r.rhs.size() == 1 && !r.rhs[0].is_variable) continue;
        if (r.rhs.size() == 2 && !r.rhs[0].is_variable && r.rhs[1].is_variable) continue;
        return false;
    }
    return true;
}

Grammar trim(const Grammar& gr) {
    const int n = gr.variable_count();
    std::vector<char> productive(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : gr.rules) {
            if (productive[r.lhs]) continue;
            bool ok = std::all_of(r.rhs.begin(), r.rhs.end(),
                                  [&](Symbol s) { return !s.is_variable || productive[s.id]; });
            if (ok) productive[r.lhs] = changed = true;
        }
    }
    std::vector<char> reachable(n, 0);
    reachable[gr.start] = 1;
    auto by = rules_by_lhs(gr);
    std::vector<int> stack{gr.start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ri : by[v]) {
            const auto& r = gr.rules[ri];
            bool usable = std::all_of(r.rhs.begin(), r.rhs.end(),
                                      [&](Symbol s) { return !s.is_variable || productive[s.id]; });
            if (!usable) continue;
            for (auto s : r.rhs)
                if (s.is_variable && !reachable[s.id]) {
                    reachable[s.id] = 1;
                    stack.push_back(s.id);
                }
        }
    }
    std::vector<int> remap(n, -1);
    Grammar out;
    out.sigma_max = gr.sigma_max;
    out.accepts_empty = gr.accepts_empty;
    for (int v = 0; v < n; ++v)
        if (v == gr.start || (reachable[v] && productive[v])) {
            remap[v] = out.variable_count();
            out.variables.push_back(gr.variables[v]);
            if (auto it = gr.provenance.find(v); it != gr.provenance.end()) out.provenance[remap[v]] = it->second;
        }
    out.start = remap[gr.start];
    for (const auto& r : gr.rules) {
        if (remap[r.lhs] < 0 || !productive[r.lhs]) continue;
        bool keep = std::all_of(r.rhs.begin(), r.rhs.end(), [&](Symbol s) { return !s.is_variable || remap[s.id] >= 0; });
        if (!keep) continue;
        Rule nr{remap[r.lhs], {}};
        for (auto s : r.rhs) nr.rhs.push_back(s.is_variable ? Symbol::variable(remap[s.id]) : s);
        out.rules.push_back(std::move(nr));
    }
    return out;
}

GrammarSize grammar_size(const Grammar& gr) {
    GrammarSize size;
    size.alphabet_plus_variables = gr.sigma_max + gr.variable_count();
    for (const auto& r : gr.rules) size.symbol_count += 1 + static_cast<long>(r.rhs.size());
    size.value = size.symbol_count == 0
                     ? 0.0
                     : static_cast<double>(size.symbol_count) * std::log2(static_cast<double>(size.alphabet_plus_variables));
    return size;
}

LanguageEnumeration enumerate_language(const Grammar& gr, std::size_t cap) {
    check_well_formed(gr);
    auto order = require_order(gr);
    auto by = rules_by_lhs(gr);
    constexpr std::size_t kWordLimit = 20'000'000;
    std::vector<std::set<std::vector<int>>> lang(gr.variable_count());
    // Reverse topological order: right-hand-side variables are complete before their users.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto& out = lang[v];
        for (int ri : by[v]) {
            std::vector<std::vector<int>> partial{{}};
            for (auto s : gr.rules[ri].rhs) {
                std::vector<std::vector<int>> next;
                if (!s.is_variable) {
                    for (auto& p : partial) {
                        p.push_back(s.id);
                        next.push_back(std::move(p));
                    }
                } else {
                    for (const auto& p : partial)
                        for (const auto& w : lang[s.id]) {
                            auto q = p;
                            q.insert(q.end(), w.begin(), w.end());
                            next.push_back(std::move(q));
                        }
                }
                if (next.size() > kWordLimit) throw std::length_error("language too large to enumerate");
                partial = std::move(next);
            }
            for (auto& p : partial) out.insert(std::move(p));
        }
    }
    LanguageEnumeration result;
    const auto& words = lang[gr.start];
    if (gr.accepts_empty && !words.contains({})) {
        result.words.push_back(Word{});
        if (cap == 0) {
            result.words.clear();
            result.truncated = true;
            return result;
        }
    }
    for (const auto& w : words) {
        if (result.words.size() >= cap) {
            result.truncated = true;
            break;
        }
        result.words.push_back(Word{w});
    }
    return result;
}

BigInt count_parse_trees(const Grammar& gr) {
    check_well_formed(gr);
    auto order = require_order(gr);
    auto by = rules_by_lhs(gr);
    std::vector<BigInt> count(gr.variable_count(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        BigInt total = 0;
        for (int ri : by[*it]) {
            BigInt product = 1;
            for (auto s : gr.rules[ri].rhs)
                if (s.is_variable) product *= count[s.id];
            total += product;
        }
        count[*it] = total;
    }
    return count[gr.start] + (gr.accepts_empty ? 1 : 0);
}

bool membership(const Grammar& gr, const Word& w) {
    check_well_formed(gr);
    require_order(gr);
    if (w.symbols.empty() && gr.accepts_empty) return true;
    const int len = static_cast<int>(w.length());
    const int span = len + 1;
    auto by = rules_by_lhs(gr);
    // memo[(v * span + i) * span + j]: 0 unknown, 1 no, 2 yes.
    std::vector<char> memo(static_cast<std::size_t>(gr.variable_count()) * span * span, 0);

    auto derives = [&](auto&& self, int v, int i, int j) -> bool {
        char& slot = memo[(static_cast<std::size_t>(v) * span + i) * span + j];
        if (slot) return slot == 2;
        bool found = false;
        for (int ri : by[v]) {
            const auto& rhs = gr.rules[ri].rhs;
            std::vector<char> reach(span, 0);
            reach[i] = 1;
            for (auto s : rhs) {
                std::vector<char> next(span, 0);
                for (int p = i; p <= j; ++p) {
                    if (!reach[p]) continue;
                    if (!s.is_variable) {
                        if (p < j && w.symbols[p] == s.id) next[p + 1] = 1;
                    } else {
                        for (int q = p; q <= j; ++q)
                            if (!next[q] && self(self, s.id, p, q)) next[q] = 1;
                    }
                }
                reach = std::move(next);
            }
            if (reach[j]) {
                found = true;
                break;
            }
        }
        slot = found ? 2 : 1;
        return found;
    };
    return derives(derives, gr.start, 0, len);
}

std::vector<ParseTree> enumerate_parse_trees(const Grammar& gr, std::size_t cap) {
    check_well_formed(gr);
    require_order(gr);
    auto by = rules_by_lhs(gr);
    auto trees_of = [&](auto&& self, int v, std::size_t limit) -> std::vector<ParseTree> {
        std::vector<ParseTree> out;
        for (int ri : by[v]) {
            if (out.size() >= limit) break;
            std::vector<std::vector<ParseTree>> options;
            bool empty = false;
            for (auto s : gr.rules[ri].rhs)
                if (s.is_variable) {
                    options.push_back(self(self, s.id, limit));
                    if (options.back().empty()) empty = true;
                }
            if (empty) continue;
            std::vector<std::size_t> idx(options.size(), 0);
            for (;;) {
                ParseTree t{ri, {}};
                for (std::size_t k = 0; k < options.size(); ++k) t.children.push_back(options[k][idx[k]]);
                out.push_back(std::move(t));
                if (out.size() >= limit) break;
                std::size_t k = options.size();
                while (k > 0) {
                    --k;
                    if (++idx[k] < options[k].size()) break;
                    idx[k] = 0;
                    if (k == 0) {
                        k = options.size() + 1;
                        break;
                    }
                }
                if (options.empty() || k == options.size() + 1) break;
            }
        }
        return out;
    };
    return trees_of(trees_of, gr.start, cap);
}

void check_parse_tree(const Grammar& gr, const ParseTree& t) {
    auto check = [&](auto&& self, const ParseTree& node, int expected_lhs) -> void {
        if (node.rule < 0 || node.rule >= static_cast<int>(gr.rules.size()))
            throw std::invalid_argument("parse tree references unknown rule " + std::to_string(node.rule));
        const auto& r = gr.rules[node.rule];
        if (r.lhs != expected_lhs) throw std::invalid_argument("parse tree rule does not expand the expected variable");
        std::size_t k = 0;
        for (auto s : r.rhs) {
            if (!s.is_variable) continue;
            if (k >= node.children.size()) throw std::invalid_argument("parse tree node has too few children");
            self(self, node.children[k++], s.id);
        }
        if (k != node.children.size()) throw std::invalid_argument("parse tree node has too many children");
    };
    check(check, t, gr.start);
}

Word parse_tree_yield(const Grammar& gr, const ParseTree& t) {
    check_parse_tree(gr, t);
    Word w;
    auto walk = [&](auto&& self, const ParseTree& node) -> void {
        std::size_t k = 0;
        for (auto s : gr.rules[node.rule].rhs) {
            if (s.is_variable)
                self(self, node.children[k++]);
            else
                w.symbols.push_back(s.id);
        }
    };
    walk(walk, t);
    return w;
}

Grammar rename_terminals(const Grammar& gr, const Permutation& b) {
    Grammar out = gr;
    for (auto& r : out.rules)
        for (auto& s : r.rhs) {
            if (s.is_variable) continue;
            if (s.id > b.size())
                throw std::invalid_argument("renaming permutation undefined on terminal " + std::to_string(s.id));
            s.id = b(s.id);
            out.sigma_max = std::max(out.sigma_max, s.id);
        }
    return out;
}

Grammar erase_terminals(const Grammar& input, int keep) {
    check_well_formed(input);
    if (keep < 0) throw std::invalid_argument("keep must be non-negative");
    Grammar gr = trim(input);
    auto order = require_order(gr);
    for (auto& r : gr.rules)
        std::erase_if(r.rhs, [&](Symbol s) { return !s.is_variable && s.id > keep; });

    const int n = gr.variable_count();
    auto by = rules_by_lhs(gr);
    std::vector<char> nullable(n, 0), only_empty(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bool any_null = false, all_empty = !by[v].empty();
        for (int ri : by[v]) {
            bool rule_null = true, rule_empty = true;
            for (auto s : gr.rules[ri].rhs) {
                rule_null = rule_null && s.is_variable && nullable[s.id];
                rule_empty = rule_empty && s.is_variable && only_empty[s.id];
            }
            any_null = any_null || rule_null;
            all_empty = all_empty && rule_empty;
        }
        nullable[v] = any_null;
        only_empty[v] = all_empty;
    }

    Grammar out;
    out.sigma_max = keep;
    out.variables = gr.variables;
    out.start = gr.start;
    out.provenance = gr.provenance;
    out.accepts_empty = gr.accepts_empty || nullable[gr.start];
    for (const auto& r : gr.rules) {
        std::vector<Symbol> base;
        std::vector<std::size_t> optional_at;
        for (auto s : r.rhs) {
            if (s.is_variable && only_empty[s.id]) continue;
            if (s.is_variable && nullable[s.id]) optional_at.push_back(base.size());
            base.push_back(s);
        }
        if (optional_at.size() > 20) throw std::length_error("too many nullable variables in one rule");
        for (unsigned long mask = 0; mask < (1ul << optional_at.size()); ++mask) {
            Rule nr{r.lhs, {}};
            std::size_t k = 0;
            for (std::size_t i = 0; i < base.size(); ++i) {
                if (k < optional_at.size() && optional_at[k] == i) {
                    bool drop = mask >> k & 1;
                    ++k;
                    if (drop) continue;
                }
                nr.rhs.push_back(base[i]);
            }
            if (!nr.rhs.empty()) out.rules.push_back(std::move(nr));
        }
    }
    return trim(out);
}

Grammar union_grammars(std::span<const Grammar> parts) {
    if (parts.empty()) throw std::invalid_argument("union of no grammars");
    Grammar out;
    out.sigma_max = parts.front().sigma_max;
    out.variables.push_back("B1");
    out.start = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& part = parts[k];
        check_well_formed(part);
        if (part.sigma_max != out.sigma_max) throw std::invalid_argument("union: terminal alphabets differ");
        const int offset = out.variable_count();
        const std::string prefix = "u" + std::to_string(k + 1) + "/";
        for (const auto& name : part.variables) out.variables.push_back(prefix + name);
        for (const auto& [v, prov] : part.provenance) out.provenance[v + offset] = prov;
        out.rules.push_back(Rule{0, {Symbol::variable(part.start + offset)}});
        out.accepts_empty = out.accepts_empty || part.accepts_empty;
    }
    for (std::size_t k = 0, offset = 1; k < parts.size(); offset += parts[k].variables.size(), ++k)
        for (const auto& r : parts[k].rules) {
            Rule nr{r.lhs + static_cast<int>(offset), r.rhs};
            for (auto& s : nr.rhs)
                if (s.is_variable) s.id += static_cast<int>(offset);
            out.rules.push_back(std::move(nr));
        }
    return out;
}

Grammar union_grammar(const Grammar& g1, const Grammar& g2) {
    const Grammar parts[] = {g1, g2};
    return union_grammars(parts);
}

TransversalGrammar group_from_subgroup(const Grammar& subgroup_grammar, const std::vector<Permutation>& transversal,
                                       const std::vector<Permutation>* subgroup) {
    if (transversal.empty()) throw std::invalid_argument("empty transversal");
    TransversalGrammar result;
    if (subgroup) {
        std::set<Permutation> h(subgroup->begin(), subgroup->end());
        for (std::size_t i = 0; i < transversal.size(); ++i)
            for (std::size_t j = i + 1; j < transversal.size(); ++j)
                if (h.contains(compose(inverse(transversal[i]), transversal[j])))
                    result.warnings.push_back("representatives " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " share a coset; size accounting is violated");
    }
    std::vector<Grammar> parts;
    for (const auto& beta : transversal) parts.push_back(rename_terminals(subgroup_grammar, beta));
    result.grammar = union_grammars(parts);
    return result;
}

}  // namespace autgram
