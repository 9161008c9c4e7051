#include "diffalg/scenario.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diffalg/expr.hpp"

namespace diffalg {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Whitespace-separated items at parenthesis depth zero.
std::vector<std::string> split_list(const std::string& s, std::size_t line) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') {
            --depth;
            if (depth < 0) throw ScenarioError("unbalanced ')'", line);
        }
        if (depth == 0 && (ch == ' ' || ch == '\t')) {
            if (!cur.empty()) items.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw ScenarioError("unbalanced '('", line);
    if (!cur.empty()) items.push_back(cur);
    return items;
}

RatFunc parse_in(const std::string& text, const std::vector<std::string>& vars,
                 std::size_t line) {
    try {
        return parse_expr(text, vars);
    } catch (const ParseError& e) {
        throw ScenarioError(e.message + " in '" + text + "'", line);
    }
}

// Variables with a nonzero exponent anywhere in f.
std::set<std::string> used_vars(const RatFunc& f) {
    std::set<std::string> used;
    auto scan = [&](const MPoly& p) {
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used.insert(p.vars()[i]);
    };
    scan(f.num());
    scan(f.den());
    return used;
}

// Project onto the single variable `var`; all other variables must be unused.
RatFunc project_univariate(const RatFunc& f, const std::string& var, std::size_t line) {
    const std::vector<std::string> uni{var};
    auto project = [&](const MPoly& p) {
        MPoly out(uni);
        auto idx = p.var_index(var);
        for (const auto& [e, c] : p.terms()) {
            std::uint32_t d = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (idx && i == *idx) {
                    d = e[i];
                } else if (e[i] > 0) {
                    throw ScenarioError("residue entries must be univariate", line);
                }
            }
            out.add_term(ExpVec{d}, c);
        }
        return out;
    };
    return RatFunc(project(f.num()), project(f.den()));
}

struct RawLine {
    std::size_t number;
    std::string text;
};

}  // namespace

ScenarioDoc load_scenario(const std::string& text) {
    std::vector<RawLine> lines;
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t n = 0;
        while (std::getline(in, raw)) {
            ++n;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            raw = strip(raw);
            if (!raw.empty()) lines.push_back({n, raw});
        }
    }
    if (lines.empty()) throw ScenarioError("empty scenario document", 1);

    ScenarioDoc doc;
    bool have_field = false;

    // Raw section contents before expression parsing.
    struct KeyLine {
        std::size_t number;
        std::string key, value;
    };
    std::string section;
    std::size_t section_line = 0;
    std::vector<KeyLine> field_lines, dv_lines, ax_lines, res_lines;

    auto key_split = [](const RawLine& l) -> KeyLine {
        // "d t = 1" and "section x = x" keep their full structure in `key`.
        const std::size_t colon = l.text.find(':');
        const std::size_t eq = l.text.find('=');
        if (colon != std::string::npos && (eq == std::string::npos || colon < eq))
            return {l.number, strip(l.text.substr(0, colon)),
                    strip(l.text.substr(colon + 1))};
        if (eq != std::string::npos)
            return {l.number, strip(l.text.substr(0, eq)), strip(l.text.substr(eq + 1))};
        throw ScenarioError("expected 'key: value' or '... = value'", l.number);
    };

    for (const RawLine& l : lines) {
        if (l.text.front() == '[') {
            if (l.text.back() != ']')
                throw ScenarioError("malformed section header", l.number);
            section = l.text.substr(1, l.text.size() - 2);
            section_line = l.number;
            if (section == "field") {
                if (have_field) throw ScenarioError("duplicate [field] section", l.number);
                have_field = true;
                doc.field_line = l.number;
            } else if (section == "dvariety") {
                if (doc.dvariety) throw ScenarioError("duplicate [dvariety] section", l.number);
                doc.dvariety.emplace();
                doc.dvariety->line = l.number;
            } else if (section == "ax") {
                if (doc.ax) throw ScenarioError("duplicate [ax] section", l.number);
                doc.ax.emplace();
                doc.ax->line = l.number;
            } else if (section == "residue") {
                if (doc.residue) throw ScenarioError("duplicate [residue] section", l.number);
                doc.residue.emplace();
                doc.residue->line = l.number;
            } else {
                throw ScenarioError("unknown section [" + section + "]", l.number);
            }
            continue;
        }
        if (section.empty())
            throw ScenarioError("content before any section header", l.number);
        const KeyLine kl = key_split(l);
        if (section == "field") field_lines.push_back(kl);
        else if (section == "dvariety") dv_lines.push_back(kl);
        else if (section == "ax") ax_lines.push_back(kl);
        else res_lines.push_back(kl);
    }
    if (!have_field) throw ScenarioError("missing [field] section", section_line ? section_line : 1);

    // --- field ---------------------------------------------------------------
    std::vector<std::pair<std::string, KeyLine>> derivs;
    bool saw_generators = false;
    for (const KeyLine& kl : field_lines) {
        if (kl.key == "generators") {
            if (saw_generators) throw ScenarioError("duplicate generators line", kl.number);
            saw_generators = true;
            doc.generators = split_list(kl.value, kl.number);
        } else if (kl.key.rfind("d ", 0) == 0) {
            derivs.emplace_back(strip(kl.key.substr(2)), kl);
        } else {
            throw ScenarioError("unknown field key '" + kl.key + "'", kl.number);
        }
    }
    if (!saw_generators)
        throw ScenarioError("missing generators line", doc.field_line);
    {
        std::set<std::string> names(doc.generators.begin(), doc.generators.end());
        if (names.size() != doc.generators.size())
            throw ScenarioError("duplicate generator name", doc.field_line);
        std::vector<std::optional<RatFunc>> table(doc.generators.size());
        for (const auto& [name, kl] : derivs) {
            auto it = std::find(doc.generators.begin(), doc.generators.end(), name);
            if (it == doc.generators.end())
                throw ScenarioError("undeclared symbol " + name, kl.number);
            const std::size_t idx =
                static_cast<std::size_t>(it - doc.generators.begin());
            if (table[idx])
                throw ScenarioError("duplicate derivation for " + name, kl.number);
            table[idx] = parse_in(kl.value, doc.generators, kl.number);
        }
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!table[i])
                throw ScenarioError("no derivation given for generator " +
                                        doc.generators[i], doc.field_line);
            doc.derivation.push_back(*table[i]);
        }
    }

    // --- dvariety -------------------------------------------------------------
    if (doc.dvariety) {
        auto& dv = *doc.dvariety;
        std::vector<std::pair<std::string, KeyLine>> sections;
        std::optional<KeyLine> ideal_line, sharp_line;
        for (const KeyLine& kl : dv_lines) {
            if (kl.key == "ambient") {
                dv.ambient = split_list(kl.value, kl.number);
            } else if (kl.key == "ideal") {
                ideal_line = kl;
            } else if (kl.key == "sharp") {
                sharp_line = kl;
            } else if (kl.key.rfind("section ", 0) == 0) {
                sections.emplace_back(strip(kl.key.substr(8)), kl);
            } else {
                throw ScenarioError("unknown dvariety key '" + kl.key + "'", kl.number);
            }
        }
        if (dv.ambient.empty())
            throw ScenarioError("dvariety needs an ambient line", dv.line);
        std::vector<std::string> combined = doc.generators;
        combined.insert(combined.end(), dv.ambient.begin(), dv.ambient.end());
        {
            std::set<std::string> names(combined.begin(), combined.end());
            if (names.size() != combined.size())
                throw ScenarioError("ambient variable collides with a generator", dv.line);
        }
        if (ideal_line)
            for (const std::string& item : split_list(ideal_line->value, ideal_line->number))
                dv.ideal.push_back(parse_in(item, combined, ideal_line->number));
        std::vector<std::optional<RatFunc>> sec(dv.ambient.size());
        for (const auto& [var, kl] : sections) {
            auto it = std::find(dv.ambient.begin(), dv.ambient.end(), var);
            if (it == dv.ambient.end())
                throw ScenarioError("section for undeclared ambient variable " + var,
                                    kl.number);
            const std::size_t idx = static_cast<std::size_t>(it - dv.ambient.begin());
            if (sec[idx])
                throw ScenarioError("duplicate section component for " + var, kl.number);
            sec[idx] = parse_in(kl.value, combined, kl.number);
        }
        for (std::size_t i = 0; i < sec.size(); ++i) {
            if (!sec[i])
                throw ScenarioError("missing section component for " + dv.ambient[i],
                                    dv.line);
            dv.section.push_back(*sec[i]);
        }
        if (sharp_line) {
            std::vector<RatFunc> coords;
            for (const std::string& item :
                 split_list(sharp_line->value, sharp_line->number))
                coords.push_back(parse_in(item, doc.generators, sharp_line->number));
            if (coords.size() != dv.ambient.size())
                throw ScenarioError("sharp point arity mismatch", sharp_line->number);
            dv.sharp = std::move(coords);
        }
    }

    // --- ax --------------------------------------------------------------------
    if (doc.ax) {
        for (const KeyLine& kl : ax_lines) {
            std::vector<RatFunc>* dst = nullptr;
            if (kl.key == "a") dst = &doc.ax->a;
            else if (kl.key == "b") dst = &doc.ax->b;
            else throw ScenarioError("unknown ax key '" + kl.key + "'", kl.number);
            if (!dst->empty())
                throw ScenarioError("duplicate ax '" + kl.key + "' line", kl.number);
            for (const std::string& item : split_list(kl.value, kl.number))
                dst->push_back(parse_in(item, doc.generators, kl.number));
        }
        if (doc.ax->a.empty() || doc.ax->a.size() != doc.ax->b.size())
            throw ScenarioError("ax section needs equally many a and b entries",
                                doc.ax->line);
    }

    // --- residue -----------------------------------------------------------------
    if (doc.residue) {
        auto& rs = *doc.residue;
        std::vector<RatFunc> raw_b;
        std::optional<RatFunc> raw_nu;
        std::size_t nu_line = rs.line;
        for (const KeyLine& kl : res_lines) {
            if (kl.key == "b") {
                for (const std::string& item : split_list(kl.value, kl.number))
                    raw_b.push_back(parse_in(item, doc.generators, kl.number));
            } else if (kl.key == "c") {
                for (const std::string& item : split_list(kl.value, kl.number)) {
                    const RatFunc v = parse_in(item, doc.generators, kl.number);
                    const auto r = rf_as_rat(v);
                    if (!r)
                        throw ScenarioError("residue coefficients must be rational numbers",
                                            kl.number);
                    rs.c.push_back(*r);
                }
            } else if (kl.key == "nu") {
                raw_nu = parse_in(kl.value, doc.generators, kl.number);
                nu_line = kl.number;
            } else {
                throw ScenarioError("unknown residue key '" + kl.key + "'", kl.number);
            }
        }
        if (!raw_nu) throw ScenarioError("residue section needs a nu line", rs.line);
        if (raw_b.size() != rs.c.size())
            throw ScenarioError("residue b and c lists differ in length", rs.line);

        std::set<std::string> used = used_vars(*raw_nu);
        for (const RatFunc& b : raw_b)
            for (const std::string& v : used_vars(b)) used.insert(v);
        if (used.size() > 1)
            throw ScenarioError("residue section must be univariate", rs.line);
        rs.var = used.empty()
                     ? (doc.generators.empty() ? std::string("t") : doc.generators[0])
                     : *used.begin();
        for (const RatFunc& b : raw_b)
            rs.b.push_back(project_univariate(b, rs.var, rs.line));
        rs.nu = project_univariate(*raw_nu, rs.var, nu_line);
    }
    return doc;
}

namespace {

std::string list_item(const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string render_scenario(const ScenarioDoc& doc) {
    std::ostringstream out;
    out << "[field]\n";
    out << "generators:";
    for (const std::string& g : doc.generators) out << " " << g;
    out << "\n";
    for (std::size_t i = 0; i < doc.generators.size(); ++i)
        out << "d " << doc.generators[i] << " = "
            << ratfunc_to_string(doc.derivation[i]) << "\n";

    if (doc.dvariety) {
        const auto& dv = *doc.dvariety;
        out << "\n[dvariety]\n";
        out << "ambient:";
        for (const std::string& x : dv.ambient) out << " " << x;
        out << "\nideal:";
        for (const RatFunc& g : dv.ideal)
            out << " " << list_item(ratfunc_to_string(g));
        out << "\n";
        for (std::size_t i = 0; i < dv.ambient.size(); ++i)
            out << "section " << dv.ambient[i] << " = "
                << ratfunc_to_string(dv.section[i]) << "\n";
        if (dv.sharp) {
            out << "sharp:";
            for (const RatFunc& c : *dv.sharp)
                out << " " << list_item(ratfunc_to_string(c));
            out << "\n";
        }
    }
    if (doc.ax) {
        out << "\n[ax]\n";
        out << "a:";
        for (const RatFunc& e : doc.ax->a) out << " " << list_item(ratfunc_to_string(e));
        out << "\nb:";
        for (const RatFunc& e : doc.ax->b) out << " " << list_item(ratfunc_to_string(e));
        out << "\n";
    }
    if (doc.residue) {
        const auto& rs = *doc.residue;
        out << "\n[residue]\n";
        out << "b:";
        for (const RatFunc& e : rs.b) out << " " << list_item(ratfunc_to_string(e));
        out << "\nc:";
        for (const Rat& x : rs.c) out << " " << list_item(x.get_str());
        out << "\nnu: " << ratfunc_to_string(rs.nu) << "\n";
    }
    return out.str();
}

BuiltObjects build_objects(const ScenarioDoc& doc) {
    DiffField field(doc.generators, doc.derivation);
    BuiltObjects out{field, std::nullopt, std::nullopt, std::nullopt, std::nullopt};

    if (doc.dvariety) {
        const auto& dv = *doc.dvariety;
        std::vector<KPoly> ideal;
        for (const RatFunc& g : dv.ideal) {
            const KRatFunc kg = split_k_ratfunc(g, doc.generators, dv.ambient);
            if (!kg.den_is_one())
                throw ScenarioError(
                    "ideal generator has a denominator involving ambient variables",
                    dv.line);
            ideal.push_back(kg.num());
        }
        std::vector<KRatFunc> section;
        for (const RatFunc& s : dv.section)
            section.push_back(split_k_ratfunc(s, doc.generators, dv.ambient));
        try {
            out.dvariety.emplace(field, dv.ambient, std::move(ideal),
                                 std::move(section));
        } catch (const Error& e) {
            throw ScenarioError(std::string("dvariety construction failed: ") +
                                    e.what(), dv.line);
        }
        out.sharp_candidate = dv.sharp;
    }

    if (doc.ax) {
        AxScenario sc{field, doc.ax->a, doc.ax->b};
        try {
            sc.validate();
        } catch (const Error& e) {
            throw ScenarioError(std::string("ax section invalid: ") + e.what(),
                                doc.ax->line);
        }
        out.ax = std::move(sc);
    }

    if (doc.residue) out.residue = doc.residue;
    return out;
}

}  // namespace diffalg
