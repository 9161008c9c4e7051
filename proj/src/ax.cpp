#include "diffalg/ax.hpp"

namespace diffalg {

void AxScenario::validate() const {
    if (a.empty() || a.size() != b.size())
        throw PreconditionError("scenario needs equally many a and b entries, at least one");
    for (const RatFunc& e : a) field.check_element(e);
    for (const RatFunc& e : b) field.check_element(e);
}

HypothesisReport check_hypotheses(const AxScenario& sc) {
    sc.validate();
    HypothesisReport r;
    for (std::size_t i = 0; i < sc.n(); ++i) {
        const bool nz = !sc.b[i].is_zero();
        r.b_nonzero.push_back(nz);
        if (!nz) {
            r.logderiv_ok.push_back(false);
            continue;
        }
        const RatFunc lhs = sc.field.derive(sc.a[i]);
        const RatFunc rhs = sc.field.derive(sc.b[i]) / sc.b[i];
        r.logderiv_ok.push_back(lhs == rhs);
    }
    r.q_relations = sc.field.q_relations_mod_constants(sc.a);
    r.q_indep_mod_constants = r.q_relations.empty();
    return r;
}

std::vector<DiffForm> build_forms(const AxScenario& sc) {
    sc.validate();
    std::vector<DiffForm> forms;
    forms.reserve(sc.n());
    for (std::size_t i = 0; i < sc.n(); ++i) {
        if (sc.b[i].is_zero())
            throw PreconditionError("b_" + std::to_string(i + 1) + " is zero");
        forms.push_back(d(sc.field, sc.a[i]) - dlog(sc.field, sc.b[i]));
    }
    return forms;
}

RatFunc monomial_product(const DiffField& F, const std::vector<RatFunc>& b,
                         const std::vector<Rat>& d) {
    if (b.size() != d.size()) throw PreconditionError("exponent arity mismatch");
    RatFunc prod = F.one();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!rat_is_integral(d[i]))
            throw PreconditionError("monomial exponents must be integers");
        if (!d[i].get_num().fits_slong_p())
            throw PreconditionError("monomial exponent too large");
        prod = prod * b[i].pow(d[i].get_num().get_si());
    }
    return prod;
}

std::optional<std::vector<Rat>> monomial_relation(const AxScenario& sc,
                                                  const std::vector<Rat>& c) {
    sc.validate();
    if (c.size() != sc.n()) throw PreconditionError("dependency arity mismatch");

    // Precondition: c really annihilates the logarithmic forms.
    const std::vector<DiffForm> forms = build_forms(sc);
    DiffForm combo = zero_form(sc.field);
    for (std::size_t i = 0; i < sc.n(); ++i)
        combo = combo + forms[i].scaled(sc.field.constant(c[i]));
    if (!combo.is_zero())
        throw PreconditionError("given coefficients do not annihilate the forms");

    std::vector<RatFunc> logderivs;
    logderivs.reserve(sc.n());
    for (const RatFunc& bi : sc.b)
        logderivs.push_back(sc.field.derive(bi) / bi);
    const auto rels = sc.field.q_relations(logderivs);
    if (rels.empty()) return std::nullopt;

    const std::vector<Rat>& dvec = rels.front();
    const RatFunc prod = monomial_product(sc.field, sc.b, dvec);
    if (!sc.field.is_constant(prod))
        throw TheoremViolation(
            "monomial built from a logarithmic-derivative relation is not constant");
    return dvec;
}

AxVerdict verify_claims(const AxScenario& sc) {
    AxVerdict v;
    v.hypotheses = check_hypotheses(sc);
    v.bound = sc.n() + 1;

    std::vector<RatFunc> elems = sc.a;
    elems.insert(elems.end(), sc.b.begin(), sc.b.end());
    v.trdeg_value = trdeg(sc.field, elems);
    v.satisfied = v.trdeg_value >= v.bound;

    for (std::size_t i = 0; i < sc.n(); ++i)
        if (!sc.field.derive(sc.a[i]).is_zero()) {
            v.onto_witness = i + 1;
            break;
        }

    bool all_b_nonzero = true;
    for (bool nz : v.hypotheses.b_nonzero) all_b_nonzero = all_b_nonzero && nz;
    if (all_b_nonzero) {
        const std::vector<DiffForm> forms = build_forms(sc);
        v.forms_built = true;
        v.pairing_zero = true;
        v.forms_flat = true;
        for (const DiffForm& w : forms) {
            if (!pair_partial(sc.field, w).is_zero()) v.pairing_zero = false;
            if (!flat_check(sc.field, w)) v.forms_flat = false;
        }

        // Contradiction branch: with trdeg <= n the forms must be linearly
        // dependent over the field with a constant dependency.
        if (v.trdeg_value <= sc.n() && v.forms_flat) {
            v.forms_rank = rank_forms(sc.field, forms);
            const bool claims_forced = v.pairing_zero && v.onto_witness.has_value();
            if (claims_forced && *v.forms_rank >= sc.n())
                throw TheoremViolation(
                    "forms paired to zero span full rank despite trdeg <= n");
            v.dependency = constant_dependence(sc.field, forms);
            if (claims_forced && !v.dependency)
                throw TheoremViolation(
                    "flat dependent forms admit no constant dependency");
            if (v.dependency) {
                RatFunc nu = sc.field.zero();
                for (std::size_t i = 0; i < sc.n(); ++i)
                    nu = nu + sc.field.constant((*v.dependency)[i]) * sc.a[i];
                v.nu = nu;
                v.monomial_d = monomial_relation(sc, *v.dependency);
                if (v.monomial_d) {
                    v.monomial_product =
                        monomial_product(sc.field, sc.b, *v.monomial_d);
                    // The same integers relate the a_i modulo constants.
                    RatFunc rel = sc.field.zero();
                    for (std::size_t i = 0; i < sc.n(); ++i)
                        rel = rel + sc.field.constant((*v.monomial_d)[i]) * sc.a[i];
                    if (sc.field.is_constant(rel))
                        v.derived_a_relation = v.monomial_d;
                }
            }
        }
    }

    if (v.hypotheses.all_ok() && !v.satisfied)
        throw TheoremViolation(
            "hypotheses hold but the transcendence bound fails");
    return v;
}

RatFunc log_derivative_hom(const DiffField& F, const std::vector<Rat>& c,
                           const GroupPoint& beta) {
    if (beta.x.size() != c.size() || beta.y.size() != c.size())
        throw PreconditionError("group point arity mismatch");
    RatFunc acc = F.zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (beta.y[i].is_zero())
            throw PreconditionError("multiplicative coordinate y_" +
                                    std::to_string(i + 1) + " is zero");
        acc = acc + F.constant(c[i]) *
                        (F.derive(beta.x[i]) - F.derive(beta.y[i]) / beta.y[i]);
    }
    return acc;
}

bool log_derivative_hom_check(std::size_t n, const std::vector<Rat>& c) {
    if (c.size() != n) throw PreconditionError("coefficient arity mismatch");
    // Fresh generators for two points and free stand-ins for their
    // derivatives, so equality below is a symbolic identity.
    std::vector<std::string> gens;
    auto push = [&](const std::string& base) {
        for (std::size_t i = 1; i <= n; ++i) gens.push_back(base + std::to_string(i));
    };
    push("x");
    push("y");
    push("xx");
    push("yy");
    push("dx");
    push("dy");
    push("dxx");
    push("dyy");
    std::vector<RatFunc> table;
    const std::size_t block = n;
    for (std::size_t g = 0; g < 4; ++g)  // d(value block) = matching velocity
        for (std::size_t i = 0; i < block; ++i)
            table.push_back(rf_var(gens, (g + 4) * block + i));
    table.insert(table.end(), 4 * block, rf_zero(gens));  // velocity ends
    DiffField F(gens, table);

    GroupPoint beta, gamma, product;
    for (std::size_t i = 0; i < n; ++i) {
        beta.x.push_back(F.gen(i));
        beta.y.push_back(F.gen(block + i));
        gamma.x.push_back(F.gen(2 * block + i));
        gamma.y.push_back(F.gen(3 * block + i));
        product.x.push_back(beta.x[i] + gamma.x[i]);
        product.y.push_back(beta.y[i] * gamma.y[i]);
    }
    const RatFunc lhs = log_derivative_hom(F, c, product);
    const RatFunc rhs =
        log_derivative_hom(F, c, beta) + log_derivative_hom(F, c, gamma);
    return lhs == rhs;
}

bool invariance_check(std::size_t n, const std::vector<Rat>& c) {
    if (c.size() != n) throw PreconditionError("coefficient arity mismatch");
    std::vector<std::string> gens;
    auto push = [&](const std::string& base) {
        for (std::size_t i = 1; i <= n; ++i) gens.push_back(base + std::to_string(i));
    };
    push("x");
    push("y");
    push("p");
    push("q");
    std::vector<RatFunc> table(4 * n, rf_zero(gens));
    DiffField F(gens, table);

    // Differentials relative to the field of the translation parameters.
    std::vector<bool> active(4 * n, false);
    for (std::size_t i = 0; i < 2 * n; ++i) active[i] = true;

    DiffForm original = zero_form(F);
    DiffForm pulled = zero_form(F);
    for (std::size_t i = 0; i < n; ++i) {
        const RatFunc xi = F.gen(i);
        const RatFunc yi = F.gen(n + i);
        const RatFunc pi = F.gen(2 * n + i);
        const RatFunc qi = F.gen(3 * n + i);
        const RatFunc ci = F.constant(c[i]);

        DiffForm wi = d_relative(F, xi, active) -
                      d_relative(F, yi, active).scaled(yi.inverse());
        original = original + wi.scaled(ci);

        const RatFunc tx = xi + pi;
        const RatFunc ty = qi * yi;
        DiffForm wt = d_relative(F, tx, active) -
                      d_relative(F, ty, active).scaled(ty.inverse());
        pulled = pulled + wt.scaled(ci);
    }
    return original == pulled;
}

}  // namespace diffalg
