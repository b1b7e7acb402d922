#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "autgram/error.hpp"
#include "autgram/polytope.hpp"

namespace autgram {

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_row(std::ostringstream& out, const ExtendedFormulation& ef, const Constraint& c) {
    out << ' ' << c.name << ':';
    if (c.terms.empty()) out << " 0";
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
        const auto& t = c.terms[k];
        if (k > 0 && k % kTermsPerLine == 0) out << "\n   ";
        const long mag = t.coef < 0 ? -t.coef : t.coef;
        if (k == 0)
            out << (t.coef < 0 ? " -" : " ");
        else
            out << (t.coef < 0 ? " - " : " + ");
        const bool flow = t.var < ef.flow_count;
        if (mag != 1 || (c.explicit_coefficients && flow)) out << mag << ' ';
        out << ef.variables[t.var];
    }
    out << (c.sense == Sense::Eq ? " = " : c.sense == Sense::Le ? " <= " : " >= ") << c.rhs << '\n';
}

ParseError lp_error(const std::string& what) { return ParseError(ParseError::Kind::Malformed, "LP: " + what); }

long parse_long(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw lp_error("bad number '" + tok + "'");
    return std::stol(tok);
}

bool is_number(const std::string& tok) {
    return !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

struct RawRow {
    std::string name;
    std::vector<std::pair<std::string, long>> terms;
    Sense sense = Sense::Eq;
    long rhs = 0;
    bool explicit_coefficients = false;
};

}  // namespace

std::string emit_lp(const ExtendedFormulation& ef) {
    std::ostringstream out;
    for (const auto& w : ef.warnings) out << "\\ warning: " << w << '\n';
    out << "Minimize\n obj: 0\nSubject To\n";
    for (const auto& c : ef.constraints) write_row(out, ef, c);
    out << "Bounds\n";
    for (const auto& b : ef.bounds) {
        out << " 0 <= " << ef.variables[b.var];
        if (b.upper) out << " <= " << *b.upper;
        out << '\n';
    }
    out << "End\n";
    return out.str();
}

ExtendedFormulation parse_lp(std::string_view text) {
    enum class Section { None, Objective, Constraints, Bounds, End } section = Section::None;
    std::vector<RawRow> rows;
    std::vector<std::pair<std::string, std::optional<long>>> bounds;
    std::vector<std::string> warnings;
    std::vector<std::string> pending;

    auto flush_row = [&]() {
        if (pending.empty()) return;
        RawRow row;
        std::size_t i = 0;
        if (pending[0].back() != ':') throw lp_error("constraint without a name");
        row.name = pending[0].substr(0, pending[0].size() - 1);
        i = 1;
        long sign = 1;
        bool first = true;
        for (; i < pending.size(); ++i) {
            const auto& tok = pending[i];
            if (tok == "=" || tok == "<=" || tok == ">=") break;
            if (tok == "+" || tok == "-") {
                sign = tok == "-" ? -1 : 1;
                first = false;
                continue;
            }
            std::string name = tok;
            long coef = 1;
            if (tok[0] == '-' && tok.size() > 1 && first) {
                sign = -1;
                name = tok.substr(1);
            }
            if (is_number(name)) {
                coef = parse_long(name);
                if (i + 1 < pending.size() && pending[i + 1] != "=" && pending[i + 1] != "<=" &&
                    pending[i + 1] != ">=" && pending[i + 1] != "+" && pending[i + 1] != "-") {
                    name = pending[++i];
                } else {
                    if (coef != 0) throw lp_error("constant term in row " + row.name);
                    sign = 1;
                    first = false;
                    continue;
                }
            }
            row.terms.emplace_back(name, sign * coef);
            sign = 1;
            first = false;
        }
        if (i + 2 != pending.size()) throw lp_error("row " + row.name + " lacks a relation and right-hand side");
        const auto& rel = pending[i];
        row.sense = rel == "=" ? Sense::Eq : rel == "<=" ? Sense::Le : Sense::Ge;
        const auto& r = pending[i + 1];
        row.rhs = r[0] == '-' ? -parse_long(r.substr(1)) : parse_long(r);
        row.explicit_coefficients = row.name.rfind("px", 0) == 0 || row.name.rfind("pz", 0) == 0;
        rows.push_back(std::move(row));
        pending.clear();
    };

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '\\') {
            const std::string tag = "\\ warning: ";
            if (line.rfind(tag, 0) == 0) warnings.push_back(line.substr(tag.size()));
            continue;
        }
        std::istringstream words(line);
        std::vector<std::string> toks;
        for (std::string t; words >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        const std::string head = lower(line.substr(line.find_first_not_of(' ')));
        if (head == "minimize" || head == "maximize") {
            section = Section::Objective;
            continue;
        }
        if (head == "subject to" || head == "st" || head == "such that") {
            section = Section::Constraints;
            continue;
        }
        if (head == "bounds") {
            flush_row();
            section = Section::Bounds;
            continue;
        }
        if (head == "end") {
            flush_row();
            section = Section::End;
            continue;
        }
        switch (section) {
            case Section::Objective:
                break;
            case Section::Constraints:
                if (toks[0].back() == ':') flush_row();
                pending.insert(pending.end(), toks.begin(), toks.end());
                break;
            case Section::Bounds:
                if (toks.size() == 3 && toks[0] == "0" && toks[1] == "<=")
                    bounds.emplace_back(toks[2], std::nullopt);
                else if (toks.size() == 5 && toks[0] == "0" && toks[1] == "<=" && toks[3] == "<=")
                    bounds.emplace_back(toks[2], parse_long(toks[4]));
                else
                    throw lp_error("unsupported bound line '" + line + "'");
                break;
            default:
                throw lp_error("text outside any section: '" + line + "'");
        }
    }
    if (section != Section::End) throw lp_error("missing End");

    // Recover the canonical variable order from the names.
    int flows = 0, n = 0, sigma = 0;
    bool matrix = false;
    auto note = [&](const std::string& name) {
        auto bad = [&] { return lp_error("unexpected variable name '" + name + "'"); };
        if (name.size() < 3 || name[1] != '_') throw bad();
        std::string rest = name.substr(2);
        if (name[0] == 'y' && is_number(rest)) {
            flows = std::max(flows, static_cast<int>(parse_long(rest)) + 1);
        } else if (name[0] == 'x' && is_number(rest)) {
            n = std::max(n, static_cast<int>(parse_long(rest)));
        } else if (name[0] == 'z') {
            auto us = rest.find('_');
            if (us == std::string::npos) throw bad();
            n = std::max(n, static_cast<int>(parse_long(rest.substr(0, us))));
            sigma = std::max(sigma, static_cast<int>(parse_long(rest.substr(us + 1))));
            matrix = true;
        } else {
            throw bad();
        }
    };
    for (const auto& r : rows)
        for (const auto& t : r.terms) note(t.first);
    for (const auto& b : bounds) note(b.first);

    ExtendedFormulation ef;
    ef.flow_count = flows;
    ef.word_length = n;
    ef.sigma_max = sigma;
    ef.style = matrix ? ProjectionStyle::Matrix : ProjectionStyle::Value;
    ef.warnings = std::move(warnings);
    for (int r = 0; r < flows; ++r) ef.variables.push_back("y_" + std::to_string(r));
    for (int i = 1; i <= n; ++i) ef.variables.push_back("x_" + std::to_string(i));
    if (matrix)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= sigma; ++j) ef.variables.push_back("z_" + std::to_string(i) + "_" + std::to_string(j));
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < ef.variables.size(); ++v) index[ef.variables[v]] = static_cast<int>(v);
    for (auto& r : rows) {
        std::map<int, long> coefs;
        for (const auto& [name, coef] : r.terms) coefs[index.at(name)] += coef;
        Constraint c{r.name, {}, r.sense, r.rhs, r.explicit_coefficients};
        for (auto [v, a] : coefs)
            if (a != 0) c.terms.push_back(Term{v, a});
        canonical_order(c.terms, ef.flow_count);
        ef.constraints.push_back(std::move(c));
    }
    for (const auto& [name, upper] : bounds) ef.bounds.push_back(Bound{index.at(name), upper});
    return ef;
}

}  // namespace autgram
