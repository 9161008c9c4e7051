#pragma once

#include <optional>
#include <string>
#include <utility>

#include "diffalg/mpoly.hpp"
#include "diffalg/mpoly_gcd.hpp"

namespace diffalg {

// ---------------------------------------------------------------------------
// Reduced fraction of sparse polynomials over a coefficient field C.
// Canonical form: gcd(num, den) = 1 and den monic under degrevlex, so
// equality is structural identity.
// ---------------------------------------------------------------------------

template <class C>
class RatFuncOf {
public:
    using Poly = MPolyOf<C>;

    RatFuncOf(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw DefinednessError("division by the zero function");
        canonicalize();
    }

    static RatFuncOf from_poly(const Poly& p, const C& one) {
        return RatFuncOf(p, Poly::constant(p.vars(), one));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const {
        return den_.term_count() == 1 && den_.degree() == 0;
    }

    bool operator==(const RatFuncOf& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFuncOf& o) const { return !(*this == o); }

    RatFuncOf operator-() const { return RatFuncOf(-num_, den_, already_canonical_tag{}); }

    RatFuncOf operator+(const RatFuncOf& o) const {
        return RatFuncOf(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFuncOf operator-(const RatFuncOf& o) const {
        return RatFuncOf(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFuncOf operator*(const RatFuncOf& o) const {
        return RatFuncOf(num_ * o.num_, den_ * o.den_);
    }
    RatFuncOf operator/(const RatFuncOf& o) const {
        if (o.is_zero()) throw DefinednessError("division by the zero function");
        return RatFuncOf(num_ * o.den_, den_ * o.num_);
    }

    RatFuncOf inverse() const {
        if (is_zero()) throw DefinednessError("inverse of the zero function");
        return RatFuncOf(den_, num_);
    }

    RatFuncOf pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        const C one = one_coeff();
        RatFuncOf r = from_poly(Poly::constant(num_.vars(), one), one);
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    // Formal partial derivative in variable `var` by the quotient rule.
    RatFuncOf derivative(std::size_t var) const {
        return RatFuncOf(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                         den_ * den_);
    }

    template <class V, class Lift>
    V eval(const std::vector<V>& point, Lift lift, const V& zero) const {
        V d = den_.eval(point, lift, zero);
        if (coeff_is_zero(d))
            throw DefinednessError("denominator vanishes at evaluation point");
        V n = num_.eval(point, lift, zero);
        return n / d;
    }

    C one_coeff() const {
        return coeff_one_like(den_.leading_term(MonomialOrder::Degrevlex).second);
    }

private:
    struct already_canonical_tag {};
    RatFuncOf(Poly num, Poly den, already_canonical_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (num_.is_zero()) {
            const auto [e, c] = den_.leading_term(MonomialOrder::Degrevlex);
            den_ = Poly::constant(den_.vars(), coeff_one_like(c));
            return;
        }
        const Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        const C lc = den_.leading_term(MonomialOrder::Degrevlex).second;
        const C inv = coeff_one_like(lc) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly num_, den_;
};

using RatFunc = RatFuncOf<Rat>;

// Coefficient customization so RatFuncOf<C> nests as a coefficient field.
template <class C>
bool coeff_is_zero(const RatFuncOf<C>& f) { return f.is_zero(); }

template <class C>
RatFuncOf<C> coeff_one_like(const RatFuncOf<C>& f) {
    const C one = f.one_coeff();
    using Poly = MPolyOf<C>;
    return RatFuncOf<C>::from_poly(Poly::constant(f.vars(), one), one);
}

template <class C>
RatFuncOf<C> coeff_from_long(const RatFuncOf<C>& like, long n) {
    const C one = like.one_coeff();
    using Poly = MPolyOf<C>;
    return RatFuncOf<C>::from_poly(
        Poly::constant(like.vars(), one * coeff_from_long(one, n)), one);
}

// --- Rat-coefficient conveniences -----------------------------------------

inline RatFunc rf_constant(const std::vector<std::string>& vars, const Rat& c) {
    return RatFunc::from_poly(MPoly::constant(vars, c), Rat(1));
}

inline RatFunc rf_zero(const std::vector<std::string>& vars) {
    return rf_constant(vars, Rat(0));
}

inline RatFunc rf_var(const std::vector<std::string>& vars, std::size_t i) {
    return RatFunc::from_poly(MPoly::variable(vars, i, Rat(1)), Rat(1));
}

inline RatFunc rf_from_poly(const MPoly& p) {
    return RatFunc::from_poly(p, Rat(1));
}

// The value as a rational number, when the function is one.
inline std::optional<Rat> rf_as_rat(const RatFunc& f) {
    if (f.is_zero()) return Rat(0);
    if (f.num().degree() == 0 && f.den_is_one())
        return f.num().terms().begin()->second;
    return std::nullopt;
}

inline std::string ratfunc_to_string(const RatFunc& f) {
    const std::string num = poly_to_string(f.num());
    if (f.den_is_one()) return num;
    const std::string den = poly_to_string(f.den());
    const bool num_parens = f.num().term_count() > 1;
    std::size_t den_factors = 0;
    for (auto e : f.den().terms().begin()->first)
        if (e > 0) ++den_factors;
    const bool den_parens = f.den().term_count() > 1 || den_factors > 1;
    return (num_parens ? "(" + num + ")" : num) + "/" +
           (den_parens ? "(" + den + ")" : den);
}

// Reinterpret over a superset variable list.
inline RatFunc rf_with_vars(const RatFunc& f, const std::vector<std::string>& vars) {
    return RatFunc(f.num().with_vars(vars), f.den().with_vars(vars));
}

using KPoly = MPolyOf<RatFunc>;
using KRatFunc = RatFuncOf<RatFunc>;

}  // namespace diffalg
