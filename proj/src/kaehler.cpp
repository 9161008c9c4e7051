#include "diffalg/kaehler.hpp"

#include <algorithm>
#include <numeric>

#include "diffalg/linalg.hpp"

namespace diffalg {

DiffForm zero_form(const DiffField& F) {
    return DiffForm{std::vector<RatFunc>(F.generator_count(), F.zero())};
}

DiffForm d(const DiffField& F, const RatFunc& f) {
    F.check_element(f);
    DiffForm w = zero_form(F);
    for (std::size_t i = 0; i < F.generator_count(); ++i)
        w.coeffs[i] = f.derivative(i);
    return w;
}

DiffForm d_relative(const DiffField& F, const RatFunc& f,
                    const std::vector<bool>& active) {
    F.check_element(f);
    if (active.size() != F.generator_count())
        throw PreconditionError("active mask size mismatch");
    DiffForm w = zero_form(F);
    for (std::size_t i = 0; i < F.generator_count(); ++i)
        if (active[i]) w.coeffs[i] = f.derivative(i);
    return w;
}

DiffForm dlog(const DiffField& F, const RatFunc& f) {
    if (f.is_zero()) throw PreconditionError("dlog of zero");
    return d(F, f).scaled(f.inverse());
}

DiffForm lie_d1(const DiffField& F, const DiffForm& w) {
    if (w.coeffs.size() != F.generator_count())
        throw PreconditionError("form does not live over this presentation");
    DiffForm out = zero_form(F);
    const std::vector<RatFunc>& table = F.derivation_table();
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        out.coeffs[i] = out.coeffs[i] + F.derive(w.coeffs[i]);
        if (!w.coeffs[i].is_zero())
            out = out + d(F, table[i]).scaled(w.coeffs[i]);
    }
    return out;
}

RatFunc pair_partial(const DiffField& F, const DiffForm& w) {
    if (w.coeffs.size() != F.generator_count())
        throw PreconditionError("form does not live over this presentation");
    RatFunc acc = F.zero();
    const std::vector<RatFunc>& table = F.derivation_table();
    for (std::size_t i = 0; i < w.coeffs.size(); ++i)
        acc = acc + w.coeffs[i] * table[i];
    return acc;
}

bool flat_check(const DiffField& F, const DiffForm& w) {
    return lie_d1(F, w).is_zero();
}

std::size_t rank_forms(const DiffField& F, const std::vector<DiffForm>& forms) {
    if (forms.empty() || F.generator_count() == 0) return 0;
    std::vector<std::vector<RatFunc>> rows;
    rows.reserve(forms.size());
    for (const DiffForm& w : forms) rows.push_back(w.coeffs);
    return matrix_rank(std::move(rows), F.generator_count(), F.one());
}

std::size_t trdeg(const DiffField& F, const std::vector<RatFunc>& elems) {
    std::vector<DiffForm> ds;
    ds.reserve(elems.size());
    for (const RatFunc& e : elems) ds.push_back(d(F, e));
    return rank_forms(F, ds);
}

namespace {

// First kernel vector of the columns-restricted form matrix, or nullopt if
// those forms are independent.  Entries come back pivot-normalized (first
// nonzero coefficient 1), matching the shape used to argue constancy.
std::optional<std::vector<RatFunc>> restricted_dependency(
    const DiffField& F, const std::vector<DiffForm>& forms,
    const std::vector<std::size_t>& support) {
    const std::size_t k = F.generator_count();
    std::vector<std::vector<RatFunc>> cols;  // k x |support|
    cols.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<RatFunc> row;
        row.reserve(support.size());
        for (std::size_t idx : support) row.push_back(forms[idx].coeffs[r]);
        cols.push_back(std::move(row));
    }
    auto basis = kernel_basis(std::move(cols), support.size(), F.one());
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

}  // namespace

std::optional<std::vector<Rat>> constant_dependence(const DiffField& F,
                                                    const std::vector<DiffForm>& forms) {
    for (const DiffForm& w : forms)
        if (!flat_check(F, w))
            throw PreconditionError("constant_dependence requires flat input forms");
    if (forms.empty()) return std::nullopt;

    // Keep (values, indices) compressed together so they stay aligned.
    auto compress = [](const std::vector<RatFunc>& v,
                       const std::vector<std::size_t>& sup) {
        std::pair<std::vector<RatFunc>, std::vector<std::size_t>> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            out.first.push_back(v[i]);
            out.second.push_back(sup[i]);
        }
        return out;
    };

    std::vector<std::size_t> all(forms.size());
    std::iota(all.begin(), all.end(), 0);
    auto first = restricted_dependency(F, forms, all);
    if (!first) return std::nullopt;
    auto [values, support] = compress(*first, all);

    // Shrink to a minimal dependent subset; its relation is then unique up
    // to scale, which is what forces constant coefficients.
    bool changed = true;
    while (changed && support.size() > 1) {
        changed = false;
        for (std::size_t drop = 0; drop < support.size(); ++drop) {
            std::vector<std::size_t> candidate;
            for (std::size_t i = 0; i < support.size(); ++i)
                if (i != drop) candidate.push_back(support[i]);
            auto sub = restricted_dependency(F, forms, candidate);
            if (sub) {
                std::tie(values, support) = compress(*sub, candidate);
                changed = true;
                break;
            }
        }
    }

    std::vector<Rat> full(forms.size(), Rat(0));
    for (std::size_t i = 0; i < support.size(); ++i) {
        const RatFunc& c = values[i];
        if (!F.is_constant(c))
            throw TheoremViolation("minimal dependency has non-constant coefficient");
        const auto r = rf_as_rat(c);
        if (!r)
            throw TheoremViolation(
                "minimal dependency coefficient is constant but not rational; "
                "presentation hides constants beyond the declared field");
        full[support[i]] = *r;
    }

    std::vector<Rat> out;
    for (const Int& n : primitive_integer_vector(full)) out.emplace_back(n);

    // Exactness guard on the returned dependency.
    DiffForm check = zero_form(F);
    for (std::size_t i = 0; i < forms.size(); ++i)
        check = check + forms[i].scaled(F.constant(out[i]));
    if (!check.is_zero())
        throw TheoremViolation("returned dependency does not annihilate the forms");
    return out;
}

std::string form_to_string(const DiffField& F, const DiffForm& w) {
    if (w.coeffs.size() != F.generator_count())
        throw PreconditionError("form does not live over this presentation");
    std::string s;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        const RatFunc& c = w.coeffs[i];
        if (c.is_zero()) continue;
        // Sign comes from the numerator's leading coefficient (denominator
        // is monic).
        const Rat lead = c.num().leading_term(MonomialOrder::Degrevlex).second;
        const bool neg = sgn(lead) < 0;
        const RatFunc mag = neg ? -c : c;
        std::string cs = ratfunc_to_string(mag);
        std::string term;
        if (cs == "1") {
            term = "d(" + F.generators()[i] + ")";
        } else {
            const bool parens = mag.den_is_one() && mag.num().term_count() > 1;
            term = (parens ? "(" + cs + ")" : cs) + "*d(" + F.generators()[i] + ")";
        }
        if (s.empty())
            s = (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace diffalg
