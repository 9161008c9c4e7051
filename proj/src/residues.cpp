#include "diffalg/residues.hpp"

#include <algorithm>
#include <map>

#include "diffalg/partial_fractions.hpp"
#include "diffalg/unipoly.hpp"

namespace diffalg {

namespace {

void require_univariate(const RatFunc& e) {
    if (e.vars().size() != 1)
        throw PreconditionError("places are defined for univariate functions");
}

// All rational roots with multiplicities; throws when the polynomial does
// not split into rational linear factors times a constant.
std::map<Rat, std::uint32_t> full_rational_factorization(const UniPoly& p) {
    std::map<Rat, std::uint32_t> out;
    if (p.degree() <= 0) return out;
    std::uint32_t total = 0;
    for (const Rat& r : uni_rational_roots(p)) {
        const std::uint32_t m = uni_root_multiplicity(p, r);
        out.emplace(r, m);
        total += m;
    }
    if (static_cast<int>(total) != p.degree())
        throw UnsupportedPlaceError("irrational zero or pole");
    return out;
}

}  // namespace

std::optional<long> ord_place(const RatFunc& e, const Place& p) {
    require_univariate(e);
    if (e.is_zero()) return std::nullopt;
    const UniPoly num = UniPoly::from_mpoly(e.num());
    const UniPoly den = UniPoly::from_mpoly(e.den());
    if (p.at_infinity) return den.degree() - num.degree();
    return static_cast<long>(uni_root_multiplicity(num, p.c)) -
           static_cast<long>(uni_root_multiplicity(den, p.c));
}

Rat residue_at(const RatForm1& w, const Place& p) {
    require_univariate(w.f);
    const PartialFractions pf = partial_fractions(w.f);  // also vets the poles
    if (!p.at_infinity) {
        for (const PartialFractionTerm& t : pf.terms)
            if (t.order == 1 && t.root == p.c) return t.coeff;
        return Rat(0);
    }

    // Substitution t = 1/s: residue at infinity of f dt is the residue at
    // s = 0 of -f(1/s)/s^2 ds.
    const UniPoly num = UniPoly::from_mpoly(w.f.num());
    const UniPoly den = UniPoly::from_mpoly(w.f.den());
    Rat by_substitution(0);
    if (!num.is_zero()) {
        const int a = num.degree(), b = den.degree();
        const int m = a + 2 - b;  // pole order of the pulled-back form at 0
        if (m > 0) {
            std::vector<Rat> nrev(num.c.rbegin(), num.c.rend());
            std::vector<Rat> drev(den.c.rbegin(), den.c.rend());
            // Power series of nrev/drev up to s^(m-1); drev[0] = lc(den) != 0.
            std::vector<Rat> q(static_cast<std::size_t>(m), Rat(0));
            for (int k = 0; k < m; ++k) {
                Rat acc = k < static_cast<int>(nrev.size()) ? nrev[k] : Rat(0);
                for (int j = 0; j < k; ++j) {
                    const int idx = k - j;
                    if (idx < static_cast<int>(drev.size()))
                        acc -= q[j] * drev[idx];
                }
                q[k] = acc / drev[0];
            }
            by_substitution = -q[static_cast<std::size_t>(m - 1)];
        }
    }

    Rat negated_sum(0);
    for (const PartialFractionTerm& t : pf.terms)
        if (t.order == 1) negated_sum -= t.coeff;
    if (by_substitution != negated_sum)
        throw TheoremViolation("infinity residue methods disagree");
    return by_substitution;
}

bool dlog_residue_check(const RatFunc& e, const Place& p) {
    require_univariate(e);
    if (e.is_zero()) throw PreconditionError("dlog residue check needs e != 0");
    const RatFunc de = e.derivative(0);
    const Rat res_dlog = residue_at(RatForm1{de / e}, p);
    const std::optional<long> ord = ord_place(e, p);
    if (res_dlog != Rat(*ord)) return false;
    return residue_at(RatForm1{de}, p) == Rat(0);
}

bool places_supported(const RatFunc& e) {
    require_univariate(e);
    if (e.is_zero()) throw PreconditionError("zero has no places");
    try {
        full_rational_factorization(UniPoly::from_mpoly(e.num()));
        full_rational_factorization(UniPoly::from_mpoly(e.den()));
        return true;
    } catch (const UnsupportedPlaceError&) {
        return false;
    }
}

OrderBalanceReport claim5_local_check(const std::vector<RatFunc>& bs,
                                      const std::vector<Rat>& c, const RatFunc& nu) {
    if (bs.size() != c.size())
        throw PreconditionError("coefficient arity mismatch");
    for (const RatFunc& b : bs) {
        require_univariate(b);
        if (b.is_zero()) throw PreconditionError("b entries must be nonzero");
    }
    require_univariate(nu);

    // Verify the identity sum c_i b_i'/b_i = nu' before comparing residues.
    const std::vector<std::string>& vars = bs.empty() ? nu.vars() : bs[0].vars();
    RatFunc lhs = rf_zero(vars);
    for (std::size_t i = 0; i < bs.size(); ++i)
        lhs = lhs + rf_constant(vars, c[i]) * (bs[i].derivative(0) / bs[i]);
    if (lhs != nu.derivative(0))
        throw PreconditionError(
            "identity sum c_i db_i/b_i = d(nu) does not hold");

    // Places: every rational zero/pole of some b_i, plus infinity when some
    // order there is nonzero.
    std::map<Rat, bool> finite_places;
    for (const RatFunc& b : bs) {
        for (const auto& [root, mult] :
             full_rational_factorization(UniPoly::from_mpoly(b.num())))
            finite_places.emplace(root, true);
        for (const auto& [root, mult] :
             full_rational_factorization(UniPoly::from_mpoly(b.den())))
            finite_places.emplace(root, true);
    }

    OrderBalanceReport report;
    auto add_row = [&](const Place& p) {
        OrderBalanceRow row;
        row.place = p;
        Rat sum(0);
        bool any_nonzero = false;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            const long o = *ord_place(bs[i], p);
            row.orders.push_back(o);
            if (o != 0) any_nonzero = true;
            sum += c[i] * Rat(o);
        }
        row.weighted_sum = sum;
        row.ok = sgn(sum) == 0;
        if (p.at_infinity && !any_nonzero) return;  // constants: vacuous
        report.rows.push_back(std::move(row));
        report.all_ok = report.all_ok && report.rows.back().ok;
    };
    for (const auto& [root, _] : finite_places) add_row(Place::finite(root));
    add_row(Place::infinity());
    return report;
}

}  // namespace diffalg
