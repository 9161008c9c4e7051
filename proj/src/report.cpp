#include "diffalg/report.hpp"

#include <ctime>
#include <random>
#include <sstream>

#include "diffalg/expr.hpp"
#include "diffalg/residues.hpp"

namespace diffalg {

namespace {

using Status = CheckEntry::Status;

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
        case Status::Info: return "info";
    }
    return "?";
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const std::string& i : items) {
        if (!s.empty()) s += " ";
        s += i;
    }
    return s;
}

std::string rats_to_string(const std::vector<Rat>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (const Rat& x : v) parts.push_back(x.get_str());
    return join(parts);
}

std::string list_item(const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

std::string place_str(const std::string& var, const Place& p) {
    return p.at_infinity ? "infinity" : var + "=" + p.c.get_str();
}

}  // namespace

bool Report::hard_failure() const {
    for (const CheckEntry& e : entries)
        if (!e.informative &&
            (e.status == Status::Fail || e.status == Status::Error))
            return true;
    return false;
}

bool Report::informative_failure() const {
    for (const CheckEntry& e : entries)
        if (e.informative &&
            (e.status == Status::Fail || e.status == Status::Error))
            return true;
    return false;
}

int report_exit_code(const Report& r, bool strict) {
    if (r.hard_failure()) return 1;
    if (strict && r.informative_failure()) return 1;
    return 0;
}

std::string render_machine(const Report& r, bool strict) {
    std::ostringstream out;
    out << "scenario\t" << r.scenario_id << "\n";
    for (const CheckEntry& e : r.entries) {
        if (e.status == Status::Info) {
            out << e.key << "\t" << e.detail << "\n";
            continue;
        }
        out << e.key << "\t" << status_str(e.status);
        if (e.informative && e.status != Status::Pass) out << " (informative)";
        out << "\n";
        if (!e.detail.empty()) out << e.key << ".witness\t" << e.detail << "\n";
    }
    out << "overall\t" << (report_exit_code(r, strict) == 0 ? "pass" : "fail") << "\n";
    return out.str();
}

std::string render_human(const Report& r, bool strict, bool stamp) {
    std::ostringstream out;
    if (stamp) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%d %H:%M:%S", std::gmtime(&now));
        out << "# run at " << buf << " UTC\n";
    }
    out << "scenario " << r.scenario_id << "\n";
    for (const CheckEntry& e : r.entries) {
        const std::string label = e.anchor.empty() ? e.key : e.anchor;
        switch (e.status) {
            case Status::Info:
                out << "  " << label << ": " << e.detail << "\n";
                break;
            case Status::Pass:
                out << "  PASS " << label;
                if (!e.detail.empty()) out << " [" << e.detail << "]";
                out << "\n";
                break;
            case Status::Fail:
            case Status::Error:
                out << "  " << (e.status == Status::Fail ? "FAIL " : "ERROR ") << label;
                if (!e.detail.empty()) out << " [" << e.detail << "]";
                if (e.informative) out << " (informative; use --strict to fail)";
                out << "\n";
                break;
        }
    }
    out << "overall: " << (report_exit_code(r, strict) == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Differential-form expressions
// ---------------------------------------------------------------------------

namespace {

struct FormValue {
    std::optional<RatFunc> scalar;
    std::optional<DiffForm> form;
};

FormValue eval_form_ast(const DiffField& F, const ExprAst& ast) {
    auto scalar = [](RatFunc v) { return FormValue{std::move(v), std::nullopt}; };
    auto form = [](DiffForm w) { return FormValue{std::nullopt, std::move(w)}; };
    auto bad = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, ast.line, ast.col);
    };

    switch (ast.kind) {
        case ExprAst::Kind::Int:
            return scalar(F.constant(Rat(ast.int_value)));
        case ExprAst::Kind::Var:
            for (std::size_t i = 0; i < F.generator_count(); ++i)
                if (F.generators()[i] == ast.name) return scalar(F.gen(i));
            throw bad("unknown identifier '" + ast.name + "'");
        case ExprAst::Kind::Neg: {
            FormValue v = eval_form_ast(F, *ast.children[0]);
            if (v.scalar) return scalar(-*v.scalar);
            return form(-*v.form);
        }
        case ExprAst::Kind::Add:
        case ExprAst::Kind::Sub: {
            FormValue l = eval_form_ast(F, *ast.children[0]);
            FormValue r = eval_form_ast(F, *ast.children[1]);
            const bool sub = ast.kind == ExprAst::Kind::Sub;
            if (l.scalar && r.scalar)
                return scalar(sub ? *l.scalar - *r.scalar : *l.scalar + *r.scalar);
            // A scalar zero coerces to the zero form.
            if (l.scalar && l.scalar->is_zero()) l = form(zero_form(F));
            if (r.scalar && r.scalar->is_zero()) r = form(zero_form(F));
            if (l.form && r.form)
                return form(sub ? *l.form - *r.form : *l.form + *r.form);
            throw bad("cannot add a scalar and a differential form");
        }
        case ExprAst::Kind::Mul: {
            FormValue l = eval_form_ast(F, *ast.children[0]);
            FormValue r = eval_form_ast(F, *ast.children[1]);
            if (l.scalar && r.scalar) return scalar(*l.scalar * *r.scalar);
            if (l.scalar && r.form) return form(r.form->scaled(*l.scalar));
            if (l.form && r.scalar) return form(l.form->scaled(*r.scalar));
            throw bad("cannot multiply two differential forms");
        }
        case ExprAst::Kind::Div: {
            FormValue l = eval_form_ast(F, *ast.children[0]);
            FormValue r = eval_form_ast(F, *ast.children[1]);
            if (!r.scalar) throw bad("cannot divide by a differential form");
            if (r.scalar->is_zero()) throw bad("division by the zero function");
            if (l.scalar) return scalar(*l.scalar / *r.scalar);
            return form(l.form->scaled(r.scalar->inverse()));
        }
        case ExprAst::Kind::Pow: {
            FormValue v = eval_form_ast(F, *ast.children[0]);
            if (!v.scalar) throw bad("cannot raise a differential form to a power");
            return scalar(v.scalar->pow(ast.exponent));
        }
        case ExprAst::Kind::Diff: {
            FormValue v = eval_form_ast(F, *ast.children[0]);
            if (!v.scalar) throw bad("d(...) of a differential form");
            return form(d(F, *v.scalar));
        }
    }
    throw Error("unreachable form expression kind");
}

}  // namespace

DiffForm parse_form(const DiffField& F, const std::string& text) {
    const ExprPtr ast = parse_expr_ast(text, true);
    FormValue v = eval_form_ast(F, *ast);
    if (v.form) return *v.form;
    if (v.scalar->is_zero()) return zero_form(F);
    throw ParseError("expression is a scalar, not a differential form", ast->line,
                     ast->col);
}

// ---------------------------------------------------------------------------
// check pipeline
// ---------------------------------------------------------------------------

namespace {

void add_field_info(Report& r, const ScenarioDoc& doc) {
    r.add("field.generators", Status::Info,
          doc.generators.empty() ? "(none)" : join(doc.generators));
    for (std::size_t i = 0; i < doc.generators.size(); ++i)
        r.add("field.derivation." + doc.generators[i], Status::Info,
              ratfunc_to_string(doc.derivation[i]));
    r.add("field.constants", Status::Info,
          "Q declared; absence of hidden constants is assumed, not verified");
}

void check_dvariety(Report& r, const DiffField& field,
                    const ScenarioDoc::DVarietySec& dv, std::uint64_t seed) {
    r.add("dvariety.ambient", Status::Info, join(dv.ambient));

    std::optional<AffineDVariety> X;
    try {
        std::vector<KPoly> ideal;
        for (const RatFunc& g : dv.ideal) {
            const KRatFunc kg = split_k_ratfunc(g, field.generators(), dv.ambient);
            if (!kg.den_is_one())
                throw PreconditionError(
                    "ideal generator has a denominator involving ambient variables");
            ideal.push_back(kg.num());
        }
        std::vector<KRatFunc> section;
        for (const RatFunc& s : dv.section)
            section.push_back(split_k_ratfunc(s, field.generators(), dv.ambient));
        X.emplace(field, dv.ambient, std::move(ideal), std::move(section));
    } catch (const Error& e) {
        r.add("dvariety.construction", Status::Fail, e.what(),
              "rational section of the shifted tangent bundle");
        return;
    }
    r.add("dvariety.groebner_size", Status::Info,
          std::to_string(X->groebner().size()));
    r.add("dvariety.section_compatible", Status::Pass, "",
          "rational section of the shifted tangent bundle");
    r.add("dvariety.generic_sharp", X->generic_sharp_point_check()
                                        ? Status::Pass : Status::Fail,
          "", "coordinate functions flow along the section");

    if (!dv.sharp) return;
    const AffineDVariety::Point alpha = *dv.sharp;
    std::vector<std::string> coord_strs;
    for (const RatFunc& c : alpha) coord_strs.push_back(list_item(ratfunc_to_string(c)));
    r.add("dvariety.sharp_candidate.point", Status::Info, join(coord_strs));

    if (!X->on_variety(alpha)) {
        r.add("dvariety.sharp_candidate", Status::Error,
              "point is not on the variety", "sharp point candidate");
        return;
    }
    bool sharp = false;
    try {
        sharp = X->is_sharp_point(alpha);
    } catch (const DefinednessError& e) {
        r.add("dvariety.sharp_candidate", Status::Error, e.what(),
              "sharp point candidate: section definedness");
        return;
    }
    r.add("dvariety.sharp_candidate", sharp ? Status::Pass : Status::Fail, "",
          "sharp point: derivation matches the section coordinatewise");
    if (!sharp) return;

    r.add("dvariety.tangent_dim", Status::Info,
          std::to_string(X->tangent_space(alpha).size()));
    r.add("dvariety.cotangent_dim", Status::Info,
          std::to_string(X->cotangent_dim(alpha)));

    // Sampled checks of the cotangent flow at the sharp point (fixed seed,
    // so reports stay byte-identical).
    std::mt19937_64 rng(seed);
    auto rnd = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    const std::vector<std::string> cv = X->combined_vars();
    auto random_combined_poly = [&](int max_terms) {
        MPoly p(cv);
        const int nt = static_cast<int>(rnd(1, max_terms));
        for (int t = 0; t < nt; ++t) {
            ExpVec e(cv.size(), 0);
            std::uint32_t total = 0;
            for (std::size_t v = 0; v < cv.size() && total < 3; ++v) {
                const std::uint32_t d = static_cast<std::uint32_t>(rnd(0, 2));
                e[v] = d;
                total += d;
            }
            long numc = rnd(-3, 3);
            if (numc == 0) numc = 1;
            p.add_term(e, Rat(numc, rnd(1, 2)));
        }
        if (p.is_zero()) p = MPoly::constant(cv, Rat(1));
        return p;
    };
    auto random_local_function = [&]() {
        for (int attempt = 0; attempt < 8; ++attempt) {
            const MPoly num = random_combined_poly(3);
            const MPoly den = attempt < 4 ? random_combined_poly(2)
                                          : MPoly::constant(cv, Rat(1));
            if (den.is_zero()) continue;
            try {
                const FunctionOnX f = X->function(split_k_ratfunc(
                    RatFunc(num, den), field.generators(), dv.ambient));
                X->eval_function(f, alpha);  // defined at the point?
                return f;
            } catch (const Error&) {
                continue;
            }
        }
        return X->function(KRatFunc::from_poly(X->x_var(0), X->k_one()));
    };

    bool functorial = true;
    bool well_defined = true;
    const auto jac = X->jacobian_at(alpha);
    for (int s = 0; s < 3; ++s) {
        const FunctionOnX f = random_local_function();
        const CotangentClass v = X->cotangent_class(alpha, f);
        const CotangentClass lhs = X->cotangent_flow_apply(alpha, v);
        CotangentClass rhs;
        try {
            rhs = X->cotangent_class(alpha, X->induced_derivation(f));
        } catch (const DefinednessError&) {
            --s;  // derivative picked up a pole at the point; resample
            continue;
        }
        if (!X->cotangent_equal(alpha, lhs, rhs)) functorial = false;

        CotangentClass perturbed = v;
        for (const auto& row : jac) {
            const RatFunc lambda = field.constant(Rat(rnd(-2, 2)));
            for (std::size_t j = 0; j < row.size(); ++j)
                perturbed.rep[j] = perturbed.rep[j] + lambda * row[j];
        }
        const CotangentClass lhs2 = X->cotangent_flow_apply(alpha, perturbed);
        if (!X->cotangent_equal(alpha, lhs2, lhs)) well_defined = false;
    }
    r.add("dvariety.flow_functorial", functorial ? Status::Pass : Status::Fail,
          "3 sampled local functions",
          "cotangent flow intertwines the induced derivation");
    r.add("dvariety.flow_well_defined", well_defined ? Status::Pass : Status::Fail,
          "3 sampled representative perturbations",
          "cotangent flow respects the Jacobian row space");
}

void check_ax(Report& r, const DiffField& field, const ScenarioDoc::AxSec& ax) {
    AxScenario sc{field, ax.a, ax.b};
    r.add("ax.n", Status::Info, std::to_string(sc.n()));

    AxVerdict v;
    try {
        v = verify_claims(sc);
    } catch (const TheoremViolation& tv) {
        r.add("ax.pipeline", Status::Error, tv.what(),
              "claim pipeline consistency");
        return;
    }

    for (std::size_t i = 0; i < sc.n(); ++i) {
        const std::string idx = std::to_string(i + 1);
        r.add("ax.hypothesis.b_nonzero." + idx,
              v.hypotheses.b_nonzero[i] ? Status::Pass : Status::Fail, "",
              "multiplicative datum b_" + idx + " nonzero", true);
        r.add("ax.hypothesis.logderiv." + idx,
              v.hypotheses.logderiv_ok[i] ? Status::Pass : Status::Fail, "",
              "logarithmic derivative identity for index " + idx, true);
    }
    r.add("ax.hypothesis.q_independent",
          v.hypotheses.q_indep_mod_constants ? Status::Pass : Status::Fail, "",
          "additive data Q-linearly independent modulo constants", true);
    for (std::size_t i = 0; i < v.hypotheses.q_relations.size(); ++i)
        r.add("ax.hypothesis.q_relation." + std::to_string(i + 1), Status::Info,
              rats_to_string(v.hypotheses.q_relations[i]));

    if (v.forms_built) {
        r.add("ax.claim.pairing_zero",
              v.pairing_zero ? Status::Pass : Status::Fail, "",
              "logarithmic forms pair to zero with the derivation", true);
        r.add("ax.claim.flat", v.forms_flat ? Status::Pass : Status::Fail, "",
              "logarithmic forms are flat for the Lie derivative", true);
    }
    r.add("ax.claim.onto_witness", Status::Info,
          v.onto_witness ? std::to_string(*v.onto_witness) : "none");

    r.add("ax.trdeg", Status::Info, std::to_string(v.trdeg_value));
    r.add("ax.bound", Status::Info, std::to_string(v.bound));
    if (v.hypotheses.all_ok()) {
        r.add("ax.bound_satisfied", v.satisfied ? Status::Pass : Status::Fail, "",
              "transcendence bound trdeg >= n+1");
    } else {
        r.add("ax.bound_satisfied", Status::Info,
              v.satisfied ? "yes" : "no (not asserted: hypotheses fail)");
    }

    if (v.forms_rank)
        r.add("ax.claim.rank", Status::Info, std::to_string(*v.forms_rank));
    if (v.dependency)
        r.add("ax.claim.dependency", Status::Info, rats_to_string(*v.dependency));
    if (v.nu)
        r.add("ax.claim.nu", Status::Info, ratfunc_to_string(*v.nu));
    if (v.monomial_d)
        r.add("ax.claim.monomial_d", Status::Info, rats_to_string(*v.monomial_d));
    if (v.monomial_product)
        r.add("ax.claim.monomial_product", Status::Info,
              ratfunc_to_string(*v.monomial_product));
    if (v.derived_a_relation)
        r.add("ax.claim.a_relation", Status::Info,
              rats_to_string(*v.derived_a_relation));
}

void check_residue(Report& r, const ScenarioDoc::ResidueSec& rs) {
    for (std::size_t i = 0; i < rs.b.size(); ++i) {
        const std::string key = "residue.entry." + std::to_string(i + 1);
        if (rs.b[i].is_zero()) {
            r.add(key, Status::Error, "zero entry has no places",
                  "places of b_" + std::to_string(i + 1));
            return;
        }
        if (!places_supported(rs.b[i])) {
            r.add(key, Status::Error, "unsupported place (irrational zero or pole)",
                  "places of b_" + std::to_string(i + 1));
            return;
        }
        r.add(key, Status::Info, ratfunc_to_string(rs.b[i]));
    }

    OrderBalanceReport rep;
    try {
        rep = claim5_local_check(rs.b, rs.c, rs.nu);
    } catch (const PreconditionError& e) {
        r.add("residue.identity", Status::Fail, e.what(),
              "logarithmic differential identity sum c_i db_i/b_i = d(nu)");
        return;
    } catch (const UnsupportedPlaceError& e) {
        r.add("residue.supported", Status::Error, e.what(), "supported places");
        return;
    }
    r.add("residue.identity", Status::Pass, "",
          "logarithmic differential identity sum c_i db_i/b_i = d(nu)");
    for (const OrderBalanceRow& row : rep.rows) {
        const std::string base = "residue.place." + place_str(rs.var, row.place);
        std::vector<std::string> ords;
        for (long o : row.orders) ords.push_back(std::to_string(o));
        r.add(base + ".orders", Status::Info, join(ords));
        r.add(base, row.ok ? Status::Pass : Status::Fail,
              "weighted order sum " + row.weighted_sum.get_str(),
              "order balance at " + place_str(rs.var, row.place));
    }
    r.add("residue.balance", rep.all_ok ? Status::Pass : Status::Fail, "",
          "order balance at every supported place");
}

}  // namespace

Report run_check(const ScenarioDoc& doc, const std::string& scenario_id,
                 std::uint64_t sample_seed) {
    Report r;
    r.scenario_id = scenario_id;
    add_field_info(r, doc);
    const DiffField field(doc.generators, doc.derivation);
    if (doc.dvariety) check_dvariety(r, field, *doc.dvariety, sample_seed);
    if (doc.ax) check_ax(r, field, *doc.ax);
    if (doc.residue) check_residue(r, *doc.residue);
    return r;
}

Report run_lie(const ScenarioDoc& doc, const std::string& scenario_id,
               const std::string& form_text) {
    Report r;
    r.scenario_id = scenario_id;
    const DiffField field(doc.generators, doc.derivation);
    const DiffForm w = parse_form(field, form_text);
    r.add("lie.form", Status::Info, form_to_string(field, w));
    const DiffForm dw = lie_d1(field, w);
    r.add("lie.d1", Status::Info, form_to_string(field, dw));
    r.add("lie.pairing", Status::Info,
          ratfunc_to_string(pair_partial(field, w)));
    r.add("lie.flat", Status::Info, dw.is_zero() ? "FLAT" : "NOT FLAT");
    return r;
}

Report run_residue(const ScenarioDoc& doc, const std::string& scenario_id) {
    if (!doc.residue)
        throw ScenarioError("no [residue] section in scenario", 1);
    Report r;
    r.scenario_id = scenario_id;
    check_residue(r, *doc.residue);
    return r;
}

Report run_trdeg(const ScenarioDoc& doc, const std::string& scenario_id,
                 const std::vector<std::string>& elem_texts) {
    Report r;
    r.scenario_id = scenario_id;
    const DiffField field(doc.generators, doc.derivation);
    std::vector<RatFunc> elems;
    std::vector<std::string> echo;
    for (const std::string& t : elem_texts) {
        elems.push_back(field.parse(t));
        echo.push_back(list_item(ratfunc_to_string(elems.back())));
    }
    r.add("trdeg.elems", Status::Info, join(echo));
    r.add("trdeg.value", Status::Info, std::to_string(trdeg(field, elems)));
    return r;
}

Report run_prolong(const ScenarioDoc& doc, const std::string& scenario_id,
                   const std::vector<std::string>& elem_texts, unsigned order) {
    Report r;
    r.scenario_id = scenario_id;
    const DiffField field(doc.generators, doc.derivation);
    std::vector<RatFunc> elems;
    for (const std::string& t : elem_texts) elems.push_back(field.parse(t));
    r.add("prolong.order", Status::Info, std::to_string(order));
    const std::vector<RatFunc> rows = field.prolong(elems, order);
    for (unsigned j = 0; j <= order; ++j) {
        std::vector<std::string> items;
        for (std::size_t i = 0; i < elems.size(); ++i)
            items.push_back(
                list_item(ratfunc_to_string(rows[j * elems.size() + i])));
        r.add("prolong.row." + std::to_string(j), Status::Info, join(items));
    }
    return r;
}

}  // namespace diffalg
