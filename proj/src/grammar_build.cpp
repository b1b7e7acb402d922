#include <algorithm>
#include <stdexcept>

#include "autgram/error.hpp"
#include "autgram/grammar.hpp"
#include "autgram/oracle.hpp"

namespace autgram {

namespace {

std::string variable_name(const Position& p, int bag_index) {
    return "p:" + format_position(p) + "|b:" + std::to_string(bag_index);
}

// Interns (node, bag) variables in preorder, then canonical bag order.
struct VariableTable {
    std::vector<std::vector<int>> id;  // id[node][bag]

    VariableTable(Grammar& gr, const TreeDecomposition& t, const std::vector<std::vector<AnnotatedBag>>& per_node,
                  const std::vector<int>& nodes) {
        id.assign(t.shape.size(), {});
        for (int node : nodes) {
            const Position pos = t.shape.position(node);
            for (std::size_t b = 0; b < per_node[node].size(); ++b) {
                const int v = gr.variable_count();
                id[node].push_back(v);
                gr.variables.push_back(variable_name(pos, static_cast<int>(b) + 1));
                gr.provenance[v] = VariableProvenance{pos, static_cast<int>(b) + 1, per_node[node][b]};
            }
        }
    }
};

Grammar fresh_grammar(const Graph& g) {
    Grammar gr;
    gr.sigma_max = g.vertex_count();
    gr.variables.push_back("B1");
    gr.start = 0;
    return gr;
}

}  // namespace

AlignedGrammar build_aut_grammar(const Graph& g, const TreeDecomposition& t) {
    require_connected(g);
    auto report = validate_tree_decomposition(g, t);
    if (!report.ok()) throw std::invalid_argument("invalid tree decomposition: " + report.violations.front().message);
    const YieldOrder order = yield_order(g, t);

    const auto per_node = annotated_bags_per_node(g, t);
    const auto nodes = t.shape.preorder();
    Grammar gr = fresh_grammar(g);
    VariableTable table(gr, t, per_node, nodes);

    for (int v : table.id[t.shape.root()]) gr.rules.push_back(Rule{gr.start, {Symbol::variable(v)}});

    for (int node : nodes) {
        const auto& bags = per_node[node];
        const auto& kids = t.shape.children(node);
        for (std::size_t b = 0; b < bags.size(); ++b) {
            const int lhs = table.id[node][b];
            if (kids.empty()) {
                const Vertex v = t.bag(node)[0];
                gr.rules.push_back(Rule{lhs, {Symbol::terminal(bags[b].phi(v))}});
                continue;
            }
            std::vector<std::vector<int>> options;
            for (int c : kids) {
                std::vector<int> fits;
                for (std::size_t cb = 0; cb < per_node[c].size(); ++cb)
                    if (consistent_bags(bags[b], per_node[c][cb])) fits.push_back(table.id[c][cb]);
                options.push_back(std::move(fits));
            }
            bool any = std::all_of(options.begin(), options.end(), [](const auto& o) { return !o.empty(); });
            if (!any) continue;
            std::vector<std::size_t> idx(options.size(), 0);
            for (;;) {
                Rule r{lhs, {}};
                for (std::size_t k = 0; k < options.size(); ++k) r.rhs.push_back(Symbol::variable(options[k][idx[k]]));
                gr.rules.push_back(std::move(r));
                std::size_t k = options.size();
                while (k > 0 && ++idx[k - 1] == options[k - 1].size()) idx[--k] = 0;
                if (k == 0) break;
            }
        }
    }
    return AlignedGrammar{order.alpha_t, trim(gr)};
}

AlignedGrammar build_aut_grammar(const Graph& g, const DecompositionOptions& options) {
    auto t = compute_tree_decomposition(g, options);
    auto yielding = make_permutation_yielding(g, t);
    return build_aut_grammar(g, yielding.decomposition);
}

AlignedGrammar build_regular_aut_grammar(const Graph& g, const TreeDecomposition& path) {
    require_connected(g);
    auto report = validate_tree_decomposition(g, path);
    if (!report.ok()) throw std::invalid_argument("invalid path decomposition: " + report.violations.front().message);
    const std::vector<Vertex> intro = path_introductions(path);
    const int n = static_cast<int>(intro.size());
    if (n != g.vertex_count()) throw std::invalid_argument("path decomposition must introduce every vertex once");

    const auto per_node = annotated_bags_per_node(g, path);
    // Path node ids in order from the root.
    std::vector<int> chain{path.shape.root()};
    while (!path.shape.is_leaf(chain.back())) chain.push_back(path.shape.children(chain.back()).front());

    // Variable for (chain index d, bag b): node d carries b and positions d+1.. remain to be emitted.
    Grammar gr = fresh_grammar(g);
    std::vector<int> nodes(chain.begin(), chain.end() - 1);
    VariableTable table(gr, path, per_node, nodes);

    auto emit = [&](int lhs, int d, const AnnotatedBag* prev) {
        const int node = chain[d];
        for (std::size_t b = 0; b < per_node[node].size(); ++b) {
            const auto& bag = per_node[node][b];
            if (prev && !consistent_bags(*prev, bag)) continue;
            Rule r{lhs, {Symbol::terminal(bag.phi(intro[d]))}};
            if (d + 1 < n) r.rhs.push_back(Symbol::variable(table.id[node][b]));
            gr.rules.push_back(std::move(r));
        }
    };
    emit(gr.start, 0, nullptr);
    for (int d = 0; d + 1 < n; ++d) {
        const int node = chain[d];
        for (std::size_t b = 0; b < per_node[node].size(); ++b) emit(table.id[node][b], d + 1, &per_node[node][b]);
    }
    return AlignedGrammar{Permutation(intro), trim(gr)};
}

AlignedGrammar build_embedded_group_grammar(const Graph& g, int n, const Permutation& beta,
                                            const EmbedOptions& options) {
    require_connected(g);
    const int m = g.vertex_count();
    if (n < 1 || n > m) throw std::invalid_argument("prefix size must lie in 1.." + std::to_string(m));
    if (beta.size() != n) throw std::invalid_argument("beta must permute exactly the kept prefix");
    if (options.checked) {
        auto action = oracle::restricted_action(g, n, options.oracle_cap);
        if (!action.invariant()) throw PreconditionError("prefix not invariant under Aut(g)");
    }
    AlignedGrammar full = options.regular
                              ? build_regular_aut_grammar(g, compute_path_decomposition(g))
                              : build_aut_grammar(g, options.decomposition);
    std::vector<int> kept;
    for (int v : full.alpha.image())
        if (v <= n) kept.push_back(v);
    Grammar erased = erase_terminals(full.grammar, n);
    return AlignedGrammar{Permutation(std::move(kept)), rename_terminals(erased, beta)};
}

}  // namespace autgram
