#include "diffalg/d_variety.hpp"

#include <algorithm>
#include <set>

#include "diffalg/expr.hpp"
#include "diffalg/linalg.hpp"

namespace diffalg {

AffineDVariety::AffineDVariety(DiffField base, std::vector<std::string> ambient,
                               std::vector<KPoly> ideal_gens,
                               std::vector<KRatFunc> section, Validation mode)
    : base_(std::move(base)),
      ambient_(std::move(ambient)),
      gens_(std::move(ideal_gens)),
      section_(std::move(section)) {
    if (ambient_.empty()) throw PreconditionError("ambient dimension must be positive");
    std::set<std::string> names(base_.generators().begin(), base_.generators().end());
    for (const std::string& x : ambient_)
        if (!names.insert(x).second)
            throw PreconditionError("ambient variable '" + x + "' collides with a generator");
    for (const KPoly& p : gens_)
        if (p.vars() != ambient_)
            throw PreconditionError("ideal generator in wrong ambient variables");
    if (section_.size() != ambient_.size())
        throw PreconditionError("section must have one component per ambient variable");

    std::vector<KPoly> nonzero;
    for (const KPoly& p : gens_)
        if (!p.is_zero()) nonzero.push_back(p);
    gb_ = groebner_basis(nonzero, MonomialOrder::Degrevlex);

    if (mode == Validation::Strict) {
        if (is_unit_ideal(gb_))
            throw PreconditionError("ideal is the unit ideal: empty variety as presented");
        for (std::size_t i = 0; i < section_.size(); ++i)
            if (nf(section_[i].den()).is_zero())
                throw DefinednessError("section component " + std::to_string(i + 1) +
                                       " is undefined on all of X");
        const SectionCheck chk = validate_section();
        if (!chk.ok)
            throw PreconditionError(
                "section is not compatible with the ideal (generator " +
                std::to_string(*chk.failing_generator + 1) + " fails)");
    }
}

std::vector<std::string> AffineDVariety::combined_vars() const {
    std::vector<std::string> cv = base_.generators();
    cv.insert(cv.end(), ambient_.begin(), ambient_.end());
    return cv;
}

KRatFunc AffineDVariety::x_ratfunc(const KPoly& num, const KPoly& den) const {
    return KRatFunc(num, den);
}

KRatFunc split_k_ratfunc(const RatFunc& combined,
                         const std::vector<std::string>& base_gens,
                         const std::vector<std::string>& ambient) {
    const std::size_t k = base_gens.size();
    if (combined.vars().size() != k + ambient.size())
        throw PreconditionError("combined variable list has unexpected arity");

    auto split = [&](const MPoly& p) {
        KPoly out(ambient);
        for (const auto& [e, c] : p.terms()) {
            ExpVec ge(e.begin(), e.begin() + static_cast<long>(k));
            ExpVec xe(e.begin() + static_cast<long>(k), e.end());
            MPoly mono(base_gens);
            mono.add_term(ge, c);
            out.add_term(xe, rf_from_poly(mono));
        }
        return out;
    };
    return KRatFunc(split(combined.num()), split(combined.den()));
}

KRatFunc AffineDVariety::parse_k_ratfunc(std::string_view text) const {
    return split_k_ratfunc(parse_expr(text, combined_vars()), base_.generators(),
                           ambient_);
}

RatFunc AffineDVariety::merge_poly(const KPoly& p) const {
    const std::vector<std::string> cv = combined_vars();
    const std::size_t k = base_.generator_count();
    std::vector<RatFunc> point;
    point.reserve(ambient_.size());
    for (std::size_t i = 0; i < ambient_.size(); ++i) point.push_back(rf_var(cv, k + i));
    return p.eval<RatFunc>(
        point, [&](const RatFunc& c) { return rf_with_vars(c, cv); }, rf_zero(cv));
}

RatFunc AffineDVariety::merge(const KRatFunc& f) const {
    return merge_poly(f.num()) / merge_poly(f.den());
}

KPoly AffineDVariety::nf(const KPoly& p) const {
    return normal_form(p, gb_, MonomialOrder::Degrevlex);
}

KPoly AffineDVariety::coeff_derivative(const KPoly& p) const {
    KPoly out(ambient_);
    for (const auto& [e, c] : p.terms()) out.add_term(e, base_.derive(c));
    return out;
}

KRatFunc AffineDVariety::derive_poly(const KPoly& p) const {
    KRatFunc acc = KRatFunc::from_poly(coeff_derivative(p), k_one());
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
        const KPoly pi = p.derivative(i);
        if (pi.is_zero()) continue;
        acc = acc + KRatFunc::from_poly(pi, k_one()) * section_[i];
    }
    return acc;
}

AffineDVariety::SectionCheck AffineDVariety::validate_section() const {
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        if (gens_[gi].is_zero()) continue;
        const KRatFunc flow = derive_poly(gens_[gi]);
        if (nf(flow.den()).is_zero())
            throw DefinednessError("section undefined on all of X");
        const KPoly residue = nf(flow.num());
        if (!residue.is_zero())
            return SectionCheck{false, gi, merge_poly(residue)};
    }
    return SectionCheck{};
}

bool AffineDVariety::generic_sharp_point_check() const {
    const SectionCheck chk = validate_section();
    if (!chk.ok)
        throw PreconditionError("generic sharp point check requires a valid section");
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
        const FunctionOnX lhs = induced_derivation(function(
            KRatFunc::from_poly(x_var(i), k_one())));
        const FunctionOnX rhs = function(section_[i]);
        if (!equal_on_x(lhs, rhs)) return false;
    }
    return true;
}

std::vector<KPoly> AffineDVariety::shifted_tangent_ideal() const {
    std::set<std::string> used(base_.generators().begin(), base_.generators().end());
    used.insert(ambient_.begin(), ambient_.end());
    std::vector<std::string> aliases;
    for (const std::string& x : ambient_) {
        std::string u = "u_" + x;
        while (used.count(u)) u += "_";
        used.insert(u);
        aliases.push_back(u);
    }
    std::vector<std::string> tv = ambient_;
    tv.insert(tv.end(), aliases.begin(), aliases.end());

    std::vector<KPoly> out;
    for (const KPoly& p : gens_) {
        if (p.is_zero()) continue;
        out.push_back(p.with_vars(tv));
        KPoly twisted = coeff_derivative(p).with_vars(tv);
        for (std::size_t i = 0; i < ambient_.size(); ++i) {
            const KPoly pi = p.derivative(i);
            if (pi.is_zero()) continue;
            twisted = twisted +
                      pi.with_vars(tv) *
                          KPoly::variable(tv, ambient_.size() + i, k_one());
        }
        out.push_back(std::move(twisted));
    }
    return out;
}

FunctionOnX AffineDVariety::function(const KRatFunc& f) const {
    const KPoly dn = nf(f.den());
    if (dn.is_zero())
        throw DefinednessError("denominator lies in the ideal");
    return FunctionOnX{nf(f.num()), dn};
}

FunctionOnX AffineDVariety::parse_function(std::string_view text) const {
    return function(parse_k_ratfunc(text));
}

FunctionOnX AffineDVariety::function_from_k(const RatFunc& c) const {
    base_.check_element(c);
    return function(KRatFunc::from_poly(KPoly::constant(ambient_, c), k_one()));
}

bool AffineDVariety::equal_on_x(const FunctionOnX& f, const FunctionOnX& g) const {
    return nf(f.num * g.den - g.num * f.den).is_zero();
}

FunctionOnX AffineDVariety::add(const FunctionOnX& f, const FunctionOnX& g) const {
    return function(x_ratfunc(f.num, f.den) + x_ratfunc(g.num, g.den));
}

FunctionOnX AffineDVariety::mul(const FunctionOnX& f, const FunctionOnX& g) const {
    return function(x_ratfunc(f.num, f.den) * x_ratfunc(g.num, g.den));
}

FunctionOnX AffineDVariety::induced_derivation(const FunctionOnX& f) const {
    const KRatFunc n = KRatFunc::from_poly(f.num, k_one());
    const KRatFunc dd = KRatFunc::from_poly(f.den, k_one());
    const KRatFunc result = (derive_poly(f.num) * dd - n * derive_poly(f.den)) / (dd * dd);
    return function(result);
}

bool AffineDVariety::on_variety(const Point& p) const {
    if (p.size() != ambient_.size())
        throw PreconditionError("point arity mismatch");
    for (const RatFunc& c : p) base_.check_element(c);
    for (const KPoly& g : gens_) {
        const RatFunc v = g.eval<RatFunc>(
            p, [](const RatFunc& c) { return c; }, base_.zero());
        if (!v.is_zero()) return false;
    }
    return true;
}

void AffineDVariety::check_point(const Point& p) const {
    if (!on_variety(p)) throw PreconditionError("point is not on the variety");
}

std::vector<RatFunc> AffineDVariety::section_at(const Point& p) const {
    std::vector<RatFunc> out;
    out.reserve(section_.size());
    for (const KRatFunc& s : section_) {
        try {
            out.push_back(s.eval<RatFunc>(
                p, [](const RatFunc& c) { return c; }, base_.zero()));
        } catch (const DefinednessError&) {
            throw DefinednessError("section undefined at the point");
        }
    }
    return out;
}

bool AffineDVariety::is_sharp_point(const Point& p) const {
    check_point(p);
    const std::vector<RatFunc> s = section_at(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (base_.derive(p[i]) != s[i]) return false;
    return true;
}

RatFunc AffineDVariety::eval_function(const FunctionOnX& f, const Point& p) const {
    const RatFunc dv = f.den.eval<RatFunc>(
        p, [](const RatFunc& c) { return c; }, base_.zero());
    if (dv.is_zero()) throw DefinednessError("function undefined at the point");
    const RatFunc nv = f.num.eval<RatFunc>(
        p, [](const RatFunc& c) { return c; }, base_.zero());
    return nv / dv;
}

std::vector<std::vector<RatFunc>> AffineDVariety::jacobian_at(const Point& p) const {
    check_point(p);
    std::vector<std::vector<RatFunc>> rows;
    for (const KPoly& g : gb_) {
        std::vector<RatFunc> row;
        row.reserve(ambient_.size());
        for (std::size_t j = 0; j < ambient_.size(); ++j)
            row.push_back(g.derivative(j).eval<RatFunc>(
                p, [](const RatFunc& c) { return c; }, base_.zero()));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<RatFunc>> AffineDVariety::tangent_space(const Point& p) const {
    return kernel_basis(jacobian_at(p), ambient_.size(), k_one());
}

std::size_t AffineDVariety::cotangent_dim(const Point& p) const {
    return ambient_.size() - matrix_rank(jacobian_at(p), ambient_.size(), k_one());
}

std::vector<RatFunc> AffineDVariety::gradient_at(const KRatFunc& f, const Point& p) const {
    const auto lift = [](const RatFunc& c) { return c; };
    const RatFunc dv = f.den().eval<RatFunc>(p, lift, base_.zero());
    if (dv.is_zero()) throw DefinednessError("function undefined at the point");
    const RatFunc nv = f.num().eval<RatFunc>(p, lift, base_.zero());
    std::vector<RatFunc> grad;
    grad.reserve(ambient_.size());
    for (std::size_t j = 0; j < ambient_.size(); ++j) {
        const RatFunc dn = f.num().derivative(j).eval<RatFunc>(p, lift, base_.zero());
        const RatFunc dd = f.den().derivative(j).eval<RatFunc>(p, lift, base_.zero());
        grad.push_back((dn * dv - nv * dd) / (dv * dv));
    }
    return grad;
}

CotangentClass AffineDVariety::cotangent_class(const Point& p, const FunctionOnX& f) const {
    check_point(p);
    return CotangentClass{gradient_at(x_ratfunc(f.num, f.den), p)};
}

bool AffineDVariety::cotangent_equal(const Point& p, const CotangentClass& v,
                                     const CotangentClass& w) const {
    std::vector<RatFunc> diff;
    diff.reserve(ambient_.size());
    for (std::size_t j = 0; j < ambient_.size(); ++j)
        diff.push_back(v.rep[j] - w.rep[j]);
    return in_row_space(jacobian_at(p), diff, ambient_.size(), k_one());
}

CotangentClass AffineDVariety::cotangent_flow_apply(const Point& p,
                                                    const CotangentClass& v) const {
    if (!is_sharp_point(p))
        throw PreconditionError("cotangent flow is only defined at sharp points");
    std::vector<std::vector<RatFunc>> grads;
    grads.reserve(section_.size());
    for (const KRatFunc& s : section_) grads.push_back(gradient_at(s, p));
    std::vector<RatFunc> out;
    out.reserve(ambient_.size());
    for (std::size_t j = 0; j < ambient_.size(); ++j) {
        RatFunc acc = base_.derive(v.rep[j]);
        for (std::size_t i = 0; i < ambient_.size(); ++i)
            acc = acc + v.rep[i] * grads[i][j];
        out.push_back(std::move(acc));
    }
    return CotangentClass{std::move(out)};
}

}  // namespace diffalg
