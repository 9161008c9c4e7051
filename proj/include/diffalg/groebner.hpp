#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "diffalg/mpoly.hpp"

namespace diffalg {

// Remainder of p under full reduction by `basis`.  Unique when the basis is a
// Groebner basis for the order; divisor selection is by list position, so the
// result is deterministic for any basis.
template <class C>
MPolyOf<C> normal_form(const MPolyOf<C>& p, const std::vector<MPolyOf<C>>& basis,
                       MonomialOrder ord = MonomialOrder::Degrevlex) {
    MPolyOf<C> r(p.vars());
    MPolyOf<C> h = p;
    struct Lead {
        ExpVec e;
        C c;
    };
    std::vector<Lead> leads;
    leads.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        auto [e, c] = b.leading_term(ord);
        leads.push_back({std::move(e), std::move(c)});
    }
    std::vector<const MPolyOf<C>*> polys;
    for (const auto& b : basis)
        if (!b.is_zero()) polys.push_back(&b);

    while (!h.is_zero()) {
        const auto [eh, ch] = h.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < leads.size(); ++i) {
            if (!monomial_divides(leads[i].e, eh)) continue;
            MPolyOf<C> t(p.vars());
            t.add_term(monomial_quotient(eh, leads[i].e), ch / leads[i].c);
            h = h - t * *polys[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            MPolyOf<C> t(p.vars());
            t.add_term(eh, ch);
            r = r + t;
            h = h - t;
        }
    }
    return r;
}

template <class C>
MPolyOf<C> s_polynomial(const MPolyOf<C>& f, const MPolyOf<C>& g, MonomialOrder ord) {
    const auto [ef, cf] = f.leading_term(ord);
    const auto [eg, cg] = g.leading_term(ord);
    const ExpVec l = monomial_lcm(ef, eg);
    MPolyOf<C> tf(f.vars()), tg(g.vars());
    tf.add_term(monomial_quotient(l, ef), coeff_one_like(cf) / cf);
    tg.add_term(monomial_quotient(l, eg), coeff_one_like(cg) / cg);
    return tf * f - tg * g;
}

// Reduced Groebner basis by Buchberger's algorithm with the product and chain
// pair-elimination criteria.  Deterministic for a given order and input order:
// pairs are processed sorted by lcm (then indices), and the reduced basis is
// returned monic, sorted ascending by leading monomial.
template <class C>
std::vector<MPolyOf<C>> groebner_basis(const std::vector<MPolyOf<C>>& gens,
                                       MonomialOrder ord = MonomialOrder::Degrevlex) {
    std::vector<MPolyOf<C>> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(p);
    if (g.empty()) return g;

    struct PairCmp {
        MonomialOrder ord;
        bool operator()(const std::tuple<ExpVec, std::size_t, std::size_t>& a,
                        const std::tuple<ExpVec, std::size_t, std::size_t>& b) const {
            const auto& [ea, ia, ja] = a;
            const auto& [eb, ib, jb] = b;
            if (ea != eb) return monomial_greater(eb, ea, ord);  // smaller lcm first
            if (ia != ib) return ia < ib;
            return ja < jb;
        }
    };

    std::vector<ExpVec> lm;
    for (const auto& p : g) lm.push_back(p.leading_term(ord).first);

    std::set<std::tuple<ExpVec, std::size_t, std::size_t>, PairCmp> pending{PairCmp{ord}};
    std::set<std::pair<std::size_t, std::size_t>> unseen;
    auto push_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            pending.insert({monomial_lcm(lm[i], lm[k]), i, k});
            unseen.insert({i, k});
        }
    };
    for (std::size_t k = 1; k < g.size(); ++k) push_pairs_with(k);

    while (!pending.empty()) {
        auto it = pending.begin();
        const auto [l, i, j] = *it;
        pending.erase(it);
        unseen.erase({i, j});

        // Product criterion: coprime leading monomials reduce to zero.
        ExpVec sum(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) sum[k] = lm[i][k] + lm[j][k];
        if (sum == l) continue;

        // Chain criterion: some g_k divides the lcm and both companion pairs
        // were already handled.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j || !monomial_divides(lm[k], l)) continue;
            const auto p1 = std::minmax(i, k);
            const auto p2 = std::minmax(j, k);
            if (!unseen.count({p1.first, p1.second}) && !unseen.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        MPolyOf<C> s = normal_form(s_polynomial(g[i], g[j], ord), g, ord);
        if (s.is_zero()) continue;
        const auto [es, cs] = s.leading_term(ord);
        g.push_back(s.scaled(coeff_one_like(cs) / cs));
        lm.push_back(es);
        push_pairs_with(g.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (monomial_divides(lm[j], lm[i]) &&
                (lm[j] != lm[i] || j < i))
                keep[i] = false;
        }
    }
    std::vector<MPolyOf<C>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) minimal.push_back(g[i]);

    // Interreduce and normalize monic.
    std::vector<MPolyOf<C>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPolyOf<C>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPolyOf<C> r = normal_form(minimal[i], others, ord);
        if (r.is_zero()) continue;
        const auto [e, c] = r.leading_term(ord);
        reduced.push_back(r.scaled(coeff_one_like(c) / c));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const MPolyOf<C>& a, const MPolyOf<C>& b) {
                  return monomial_greater(b.leading_term(ord).first,
                                          a.leading_term(ord).first, ord);
              });
    return reduced;
}

// Zero normal form against a Groebner basis = ideal membership.
template <class C>
bool ideal_contains(const std::vector<MPolyOf<C>>& gb, const MPolyOf<C>& p,
                    MonomialOrder ord = MonomialOrder::Degrevlex) {
    return normal_form(p, gb, ord).is_zero();
}

// {1} as a reduced basis means the unit ideal (empty variety as presented).
template <class C>
bool is_unit_ideal(const std::vector<MPolyOf<C>>& gb) {
    return gb.size() == 1 && !gb[0].is_zero() && gb[0].degree() == 0;
}

}  // namespace diffalg
