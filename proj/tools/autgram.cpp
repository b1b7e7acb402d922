#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "autgram/annotate.hpp"
#include "autgram/decomp.hpp"
#include "autgram/error.hpp"
#include "autgram/grammar.hpp"
#include "autgram/oracle.hpp"
#include "autgram/polytope.hpp"

using namespace autgram;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DecompositionStrategy strategy_from(const std::string& name) {
    if (name == "min-fill") return DecompositionStrategy::MinFill;
    if (name == "exact-small") return DecompositionStrategy::ExactSmall;
    throw UsageError("unknown strategy '" + name + "'");
}

struct BuildArgs {
    std::string graph, td, strategy = "min-fill", out;
    bool path = false;
};

AlignedGrammar build_for(const Graph& g, const BuildArgs& a) {
    if (a.path) {
        TreeDecomposition pd = a.td.empty() ? compute_path_decomposition(g) : parse_td(read_file(a.td), g);
        return build_regular_aut_grammar(g, pd);
    }
    if (!a.td.empty()) {
        auto yielding = make_permutation_yielding(g, parse_td(read_file(a.td), g));
        return build_aut_grammar(g, yielding.decomposition);
    }
    return build_aut_grammar(g, DecompositionOptions{strategy_from(a.strategy)});
}

int run_build(const BuildArgs& a) {
    Graph g = load_graph(a.graph);
    require_connected(g);
    AlignedGrammar result = build_for(g, a);
    write_file(a.out, grammar_to_json(result.grammar, result.alpha));
    std::cout << format(result.alpha) << '\n';
    return kOk;
}

struct EmbedArgs {
    std::string graph, beta, out, strategy = "min-fill";
    int keep = 0;
    bool unchecked = false, path = false;
};

int run_embed(const EmbedArgs& a) {
    Graph g = load_graph(a.graph);
    Permutation beta = a.beta.empty() ? Permutation::identity(a.keep) : parse_permutation(a.beta);
    EmbedOptions opts;
    opts.checked = !a.unchecked;
    opts.regular = a.path;
    opts.decomposition.strategy = strategy_from(a.strategy);
    auto result = build_embedded_group_grammar(g, a.keep, beta, opts);
    write_file(a.out, grammar_to_json(result.grammar, result.alpha));
    std::cout << format(result.alpha) << '\n';
    return kOk;
}

GrammarFile load_grammar(const std::string& path) { return grammar_from_json(read_file(path)); }

int run_stats(const std::string& path) {
    auto file = load_grammar(path);
    const auto& gr = file.grammar;
    auto size = grammar_size(gr);
    std::cout << "rules: " << gr.rules.size() << '\n'
              << "variables: " << gr.variable_count() << '\n'
              << "size: " << std::setprecision(12) << size.value << '\n'
              << "symbols: " << size.symbol_count << '\n'
              << "alphabet_plus_variables: " << size.alphabet_plus_variables << '\n'
              << "regular: " << (is_regular(gr) ? "yes" : "no") << '\n'
              << "accepts_empty: " << (gr.accepts_empty ? "yes" : "no") << '\n';
    return kOk;
}

int run_enum(const std::string& path, long cap) {
    auto file = load_grammar(path);
    auto lang = enumerate_language(file.grammar, cap < 0 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(cap));
    for (const auto& w : lang.words) std::cout << format(w) << '\n';
    if (lang.truncated) std::cerr << "note: truncated at " << cap << " words\n";
    return kOk;
}

int run_count(const std::string& path) {
    std::cout << count_parse_trees(load_grammar(path).grammar) << '\n';
    return kOk;
}

int run_member(const std::string& path, const std::string& word) {
    std::cout << (membership(load_grammar(path).grammar, parse_word(word)) ? "true" : "false") << '\n';
    return kOk;
}

int run_lift(const std::string& path, const std::string& out, bool matrix) {
    auto file = load_grammar(path);
    auto ef = build_extended_formulation(file.grammar, matrix ? ProjectionStyle::Matrix : ProjectionStyle::Value);
    for (const auto& w : ef.warnings) std::cerr << "warning: " << w << '\n';
    write_file(out, emit_lp(ef));
    std::cout << "variables: " << ef.variables.size() << '\n'
              << "flow_variables: " << ef.flow_count << '\n'
              << "constraints: " << ef.constraint_count() << '\n';
    return kOk;
}

int run_check(const std::string& model, const std::string& point) {
    ExtendedFormulation ef = ends_with(model, ".lp") ? parse_lp(read_file(model))
                                                     : build_extended_formulation(load_grammar(model).grammar);
    std::cout << (check_projection_feasibility(ef, parse_rational_vector(point)) ? "feasible" : "infeasible") << '\n';
    return kOk;
}

int run_validate(const std::string& graph_path, const std::string& strategy) {
    Graph g = load_graph(graph_path);
    require_connected(g);
    auto aut = oracle::brute_force_automorphisms(g);
    auto t = compute_tree_decomposition(g, DecompositionOptions{strategy_from(strategy)});
    auto yielding = make_permutation_yielding(g, t);
    auto built = build_aut_grammar(g, yielding.decomposition);

    std::set<Word> expected;
    for (const auto& sigma : aut) expected.insert(permute_word(to_string_word(sigma), built.alpha));
    auto lang = enumerate_language(built.grammar);
    std::set<Word> got(lang.words.begin(), lang.words.end());
    const BigInt trees = count_parse_trees(built.grammar);
    const long annotations = for_each_annotation(g, yielding.decomposition, [](const AnnotationAssignment&) { return true; });

    bool ok = true;
    auto report = [&](const std::string& what, const std::string& lhs, const std::string& rhs, bool good) {
        std::cout << what << ": " << lhs << (good ? " == " : " != ") << rhs << '\n';
        ok = ok && good;
    };
    report("language", std::to_string(got.size()), std::to_string(expected.size()), got == expected);
    report("parse_trees", trees.str(), std::to_string(got.size()), trees == got.size());
    report("annotations", std::to_string(annotations), std::to_string(aut.size()),
           annotations == static_cast<long>(aut.size()));
    std::cout << "width: " << yielding.decomposition.width() << '\n';
    std::cout << (ok ? "ok" : "mismatch") << '\n';
    if (!ok) std::cerr << "error: oracle mismatch\n";
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grammars and extended formulations for graph automorphism groups"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* cmd_build = app.add_subcommand("build", "grammar for Aut(g)");
    cmd_build->add_option("--graph", build.graph, "edge-list file")->required();
    auto* td_opt = cmd_build->add_option("--td", build.td, "PACE .td decomposition");
    cmd_build->add_option("--strategy", build.strategy, "min-fill | exact-small")->excludes(td_opt);
    cmd_build->add_flag("--path", build.path, "regular grammar over a path decomposition");
    cmd_build->add_option("--out", build.out, "grammar JSON")->required();

    EmbedArgs embed;
    auto* cmd_embed = app.add_subcommand("embed", "grammar for a coset of Aut(g) restricted to [keep]");
    cmd_embed->add_option("--graph", embed.graph, "edge-list file")->required();
    cmd_embed->add_option("--keep", embed.keep, "prefix size n")->required();
    cmd_embed->add_option("--beta", embed.beta, "permutation of [n], e.g. \"2 1 3 4\"");
    cmd_embed->add_option("--strategy", embed.strategy, "min-fill | exact-small");
    cmd_embed->add_flag("--path", embed.path, "regular construction");
    cmd_embed->add_flag("--unchecked", embed.unchecked, "skip the oracle invariance check");
    cmd_embed->add_option("--out", embed.out, "grammar JSON")->required();

    std::string grammar_path;
    auto* cmd_stats = app.add_subcommand("stats", "rule count, variable count, size, regularity");
    cmd_stats->add_option("grammar", grammar_path)->required();

    long cap = -1;
    auto* cmd_enum = app.add_subcommand("enum", "list the language");
    cmd_enum->add_option("grammar", grammar_path)->required();
    cmd_enum->add_option("--cap", cap, "maximum number of words");

    auto* cmd_count = app.add_subcommand("count", "number of parse trees");
    cmd_count->add_option("grammar", grammar_path)->required();

    std::string word;
    auto* cmd_member = app.add_subcommand("member", "word membership");
    cmd_member->add_option("grammar", grammar_path)->required();
    cmd_member->add_option("--word", word, "space-separated symbols")->required();

    std::string lp_out;
    bool matrix = false;
    auto* cmd_lift = app.add_subcommand("lift", "extended formulation as CPLEX LP");
    cmd_lift->add_option("grammar", grammar_path)->required();
    cmd_lift->add_option("--out", lp_out, "LP file")->required();
    cmd_lift->add_flag("--matrix", matrix, "add assignment-matrix projection z_i_j");

    std::string model, point;
    auto* cmd_check = app.add_subcommand("check", "is a point in the projected polytope");
    cmd_check->add_option("model", model, "grammar JSON or LP file")->required();
    cmd_check->add_option("--point", point, "x_1 … x_n, rationals allowed")->required();

    std::string graph_path, strategy = "min-fill";
    auto* cmd_validate = app.add_subcommand("validate", "cross-check against the brute-force oracle");
    cmd_validate->add_option("--graph", graph_path, "edge-list file")->required();
    cmd_validate->add_option("--strategy", strategy, "min-fill | exact-small");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (cmd_build->parsed()) return run_build(build);
        if (cmd_embed->parsed()) return run_embed(embed);
        if (cmd_stats->parsed()) return run_stats(grammar_path);
        if (cmd_enum->parsed()) return run_enum(grammar_path, cap);
        if (cmd_count->parsed()) return run_count(grammar_path);
        if (cmd_member->parsed()) return run_member(grammar_path, word);
        if (cmd_lift->parsed()) return run_lift(grammar_path, lp_out, matrix);
        if (cmd_check->parsed()) return run_check(model, point);
        if (cmd_validate->parsed()) return run_validate(graph_path, strategy);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const SoundnessError& e) {
        std::cerr << "error: internal check failed: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
