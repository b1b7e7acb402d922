#include <json.hpp>
#include <stdexcept>

#include "autgram/error.hpp"
#include "autgram/grammar.hpp"

namespace autgram {

using ordered_json = nlohmann::ordered_json;

namespace {

Position parse_position(const std::string& text) {
    Position p;
    if (text.empty()) return p;
    std::size_t start = 0;
    for (;;) {
        std::size_t dot = text.find('.', start);
        std::string part = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(ParseError::Kind::Malformed, "bad position '" + text + "'");
        p.push_back(std::stoi(part));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return p;
}

}  // namespace

std::string grammar_to_json(const Grammar& gr, const std::optional<Permutation>& alpha) {
    check_well_formed(gr);
    ordered_json doc;
    doc["sigma_max"] = gr.sigma_max;
    doc["start"] = gr.variables[gr.start];
    doc["variables"] = gr.variables;
    ordered_json rules = ordered_json::array();
    for (const auto& r : gr.rules) {
        ordered_json rhs = ordered_json::array();
        for (auto s : r.rhs) {
            if (s.is_variable)
                rhs.push_back(gr.variables[s.id]);
            else
                rhs.push_back(s.id);
        }
        rules.push_back(ordered_json::array({gr.variables[r.lhs], std::move(rhs)}));
    }
    doc["rules"] = std::move(rules);
    doc["accepts_empty"] = gr.accepts_empty;
    if (alpha) doc["alpha"] = alpha->image();
    if (!gr.provenance.empty()) {
        ordered_json prov = ordered_json::object();
        for (const auto& [v, p] : gr.provenance) {
            ordered_json entry;
            entry["position"] = format_position(p.position);
            entry["bag_index"] = p.bag_index;
            entry["bag"] = p.bag.s.members();
            entry["domain"] = p.bag.domain.members();
            entry["images"] = p.bag.images;
            prov[gr.variables[v]] = std::move(entry);
        }
        doc["provenance"] = std::move(prov);
    }
    return doc.dump(1) + "\n";
}

GrammarFile grammar_from_json(const std::string& text) {
    GrammarFile file;
    Grammar& gr = file.grammar;
    try {
        auto doc = ordered_json::parse(text);
        gr.sigma_max = doc.at("sigma_max").get<int>();
        gr.variables = doc.at("variables").get<std::vector<std::string>>();
        gr.start = gr.find_variable(doc.at("start").get<std::string>());
        if (gr.start < 0) throw ParseError(ParseError::Kind::Malformed, "start variable is not declared");
        auto lookup = [&](const std::string& name) {
            int v = gr.find_variable(name);
            if (v < 0) throw ParseError(ParseError::Kind::Malformed, "undeclared variable '" + name + "'");
            return v;
        };
        for (const auto& r : doc.at("rules")) {
            if (!r.is_array() || r.size() != 2 || !r[1].is_array())
                throw ParseError(ParseError::Kind::Malformed, "rule must be [lhs, [rhs...]]");
            Rule rule{lookup(r[0].get<std::string>()), {}};
            for (const auto& tok : r[1]) {
                if (tok.is_string())
                    rule.rhs.push_back(Symbol::variable(lookup(tok.get<std::string>())));
                else
                    rule.rhs.push_back(Symbol::terminal(tok.get<int>()));
            }
            gr.rules.push_back(std::move(rule));
        }
        gr.accepts_empty = doc.value("accepts_empty", false);
        if (doc.contains("alpha")) file.alpha = Permutation(doc["alpha"].get<std::vector<int>>());
        if (doc.contains("provenance")) {
            for (const auto& [name, entry] : doc["provenance"].items()) {
                VariableProvenance p;
                p.position = parse_position(entry.at("position").get<std::string>());
                p.bag_index = entry.at("bag_index").get<int>();
                p.bag.s = VertexSet(entry.at("bag").get<std::vector<int>>());
                p.bag.domain = VertexSet(entry.at("domain").get<std::vector<int>>());
                p.bag.images = entry.at("images").get<std::vector<int>>();
                gr.provenance[lookup(name)] = std::move(p);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::Malformed, std::string("grammar JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::Malformed, std::string("grammar JSON: ") + e.what());
    }
    try {
        check_well_formed(gr);
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::Malformed, std::string("grammar JSON: ") + e.what());
    }
    return file;
}

}  // namespace autgram
