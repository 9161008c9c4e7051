#pragma once

#include <cstdint>
#include <map>

#include "diffalg/mpoly.hpp"

namespace diffalg {

// Quotient of an exact division a / b.  Throws when b does not divide a;
// internal callers only divide known factors.
template <class C>
MPolyOf<C> exact_divide(const MPolyOf<C>& a, const MPolyOf<C>& b) {
    if (b.is_zero()) throw PreconditionError("exact division by zero polynomial");
    MPolyOf<C> q(a.vars());
    if (a.is_zero()) return q;
    const auto [eb, cb] = b.leading_term(MonomialOrder::Degrevlex);
    MPolyOf<C> h = a;
    while (!h.is_zero()) {
        const auto [eh, ch] = h.leading_term(MonomialOrder::Degrevlex);
        if (!monomial_divides(eb, eh))
            throw PreconditionError("exact_divide: division is not exact");
        MPolyOf<C> t(a.vars());
        t.add_term(monomial_quotient(eh, eb), ch / cb);
        q = q + t;
        h = h - t * b;
    }
    return q;
}

namespace detail {

// Univariate view in variable v: degree -> coefficient polynomial (the
// coefficient carries the full variable list with v-exponent zero).
template <class C>
std::map<std::uint32_t, MPolyOf<C>> uni_view(const MPolyOf<C>& p, std::size_t v) {
    std::map<std::uint32_t, MPolyOf<C>> out;
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        const std::uint32_t d = f[v];
        f[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MPolyOf<C>(p.vars())).first;
        it->second.add_term(f, c);
    }
    return out;
}

template <class C>
MPolyOf<C> times_var_power(const MPolyOf<C>& p, std::size_t v, std::uint32_t d) {
    MPolyOf<C> r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f[v] += d;
        r.add_term(f, c);
    }
    return r;
}

template <class C>
MPolyOf<C> gcd_rec(const MPolyOf<C>& a, const MPolyOf<C>& b, int v);

// Gcd of the coefficients of the univariate view of p in variable v.
template <class C>
MPolyOf<C> content_in(const MPolyOf<C>& p, std::size_t v) {
    auto view = uni_view(p, v);
    MPolyOf<C> g(p.vars());
    for (const auto& [d, c] : view) {
        if (g.is_zero()) {
            g = c;
            continue;
        }
        if (g.degree() == 0) break;
        g = gcd_rec(g, c, static_cast<int>(v) - 1);
    }
    if (g.degree() == 0 && !g.is_zero()) {
        const auto [e, c] = g.leading_term(MonomialOrder::Degrevlex);
        return MPolyOf<C>::constant(p.vars(), coeff_one_like(c));
    }
    return g;
}

// One pseudo-remainder step sequence in variable v; inputs primitive in v.
template <class C>
MPolyOf<C> pseudo_remainder(MPolyOf<C> r, const MPolyOf<C>& b, std::size_t v) {
    auto bview = uni_view(b, v);
    const std::uint32_t db = bview.rbegin()->first;
    const MPolyOf<C> lb = bview.rbegin()->second;
    while (!r.is_zero()) {
        auto rview = uni_view(r, v);
        const std::uint32_t dr = rview.rbegin()->first;
        if (dr < db) break;
        const MPolyOf<C> lr = rview.rbegin()->second;
        r = r * lb - times_var_power(lr, v, dr - db) * b;
    }
    return r;
}

template <class C>
MPolyOf<C> gcd_rec(const MPolyOf<C>& a, const MPolyOf<C>& b, int v) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (v < 0) {
        const auto [e, c] = a.leading_term(MonomialOrder::Degrevlex);
        return MPolyOf<C>::constant(a.vars(), coeff_one_like(c));
    }
    const std::size_t sv = static_cast<std::size_t>(v);
    if (a.degree_in(sv) == 0 && b.degree_in(sv) == 0) return gcd_rec(a, b, v - 1);

    const MPolyOf<C> ca = content_in(a, sv);
    const MPolyOf<C> cb = content_in(b, sv);
    const MPolyOf<C> cont = gcd_rec(ca, cb, v - 1);
    MPolyOf<C> pa = exact_divide(a, ca);
    MPolyOf<C> pb = exact_divide(b, cb);
    if (pa.degree_in(sv) < pb.degree_in(sv)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPolyOf<C> r = pseudo_remainder(pa, pb, sv);
        if (!r.is_zero()) r = exact_divide(r, content_in(r, sv));
        pa = pb;
        pb = r;
    }
    return cont * pa;
}

}  // namespace detail

// Monic gcd (degrevlex leading coefficient 1).  gcd(0,0) = 0.
template <class C>
MPolyOf<C> poly_gcd(const MPolyOf<C>& a, const MPolyOf<C>& b) {
    MPolyOf<C> g = detail::gcd_rec(a, b, static_cast<int>(a.nvars()) - 1);
    if (g.is_zero()) return g;
    const auto [e, c] = g.leading_term(MonomialOrder::Degrevlex);
    return g.scaled(coeff_one_like(c) / c);
}

}  // namespace diffalg
