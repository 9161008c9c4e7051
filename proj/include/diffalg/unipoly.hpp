#pragma once

#include <cstdint>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/mpoly.hpp"

namespace diffalg {

// Dense univariate polynomial over Rat: c[i] is the coefficient of t^i.
// Canonical: empty vector is zero, otherwise the last entry is nonzero.
struct UniPoly {
    std::vector<Rat> c;

    static UniPoly zero() { return {}; }

    static UniPoly from_coeffs(std::vector<Rat> v) {
        UniPoly p{std::move(v)};
        p.trim();
        return p;
    }

    // The polynomial must use exactly one variable.
    static UniPoly from_mpoly(const MPoly& p) {
        if (p.nvars() != 1)
            throw PreconditionError("expected a univariate polynomial");
        UniPoly u;
        u.c.assign(p.is_zero() ? 0 : p.degree() + 1, Rat(0));
        for (const auto& [e, coeff] : p.terms()) u.c[e[0]] = coeff;
        u.trim();
        return u;
    }

    MPoly to_mpoly(const std::vector<std::string>& vars) const {
        MPoly p(vars);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c[i]) != 0) p.add_term(ExpVec{static_cast<std::uint32_t>(i)}, c[i]);
        return p;
    }

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    UniPoly derivative() const {
        UniPoly d;
        for (std::size_t i = 1; i < c.size(); ++i)
            d.c.push_back(c[i] * Rat(static_cast<long>(i)));
        d.trim();
        return d;
    }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        UniPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }

    UniPoly operator-(const UniPoly& o) const {
        UniPoly r = *this;
        if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), Rat(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }

    bool operator==(const UniPoly& o) const { return c == o.c; }
};

// Quotient and remainder of a by b, b nonzero.
inline std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    UniPoly q, r = a;
    if (a.degree() >= b.degree())
        q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int d = r.degree() - b.degree();
        const Rat f = r.lead() / b.lead();
        q.c[d] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const Rat inv = 1 / a.lead();
        for (Rat& x : a.c) x *= inv;
    }
    return a;
}

// Multiplicity of the root x in p (0 when p(x) != 0).  p nonzero.
inline std::uint32_t uni_root_multiplicity(UniPoly p, const Rat& x) {
    const UniPoly lin = UniPoly::from_coeffs({-x, Rat(1)});
    std::uint32_t m = 0;
    while (!p.is_zero() && sgn(p.eval(x)) == 0) {
        p = uni_divmod(p, lin).first;
        ++m;
    }
    return m;
}

// All rational roots of p (nonzero), via trial candidates from the
// squarefree part.  Throws UnsupportedPlaceError when the coefficients are
// too large for divisor enumeration.
std::vector<Rat> uni_rational_roots(const UniPoly& p);

}  // namespace diffalg
