#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/rat.hpp"

namespace diffalg {

using ExpVec = std::vector<std::uint32_t>;

enum class MonomialOrder { Degrevlex, Lex };

inline std::uint32_t total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Strict "a comes after b" (a > b) under the given order.  Variable order is
// declaration order in both cases.
inline bool monomial_greater(const ExpVec& a, const ExpVec& b, MonomialOrder ord) {
    if (ord == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    const std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool monomial_divides(const ExpVec& d, const ExpVec& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

inline ExpVec monomial_quotient(const ExpVec& e, const ExpVec& d) {
    ExpVec q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) q[i] = e[i] - d[i];
    return q;
}

inline ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

// ---------------------------------------------------------------------------
// Coefficient customization points.  Overloads for Rat live here; RatFuncOf
// provides its own in ratfunc.hpp (found through ADL).
// ---------------------------------------------------------------------------

inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline Rat coeff_one_like(const Rat&) { return Rat(1); }
inline Rat coeff_from_long(const Rat&, long n) { return Rat(n); }

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial over a coefficient field C.
// ---------------------------------------------------------------------------

template <class C>
class MPolyOf {
public:
    explicit MPolyOf(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPolyOf constant(std::vector<std::string> vars, C value) {
        MPolyOf p(std::move(vars));
        if (!coeff_is_zero(value))
            p.terms_.emplace(ExpVec(p.vars_.size(), 0), std::move(value));
        return p;
    }

    static MPolyOf variable(std::vector<std::string> vars, std::size_t index, C one) {
        if (index >= vars.size())
            throw PreconditionError("variable index out of range");
        MPolyOf p(std::move(vars));
        ExpVec e(p.vars_.size(), 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), std::move(one));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<ExpVec, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    // Accumulate a term; drops the entry if the sum cancels.
    void add_term(const ExpVec& e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    bool operator==(const MPolyOf& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MPolyOf& o) const { return !(*this == o); }

    MPolyOf operator-() const {
        MPolyOf r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MPolyOf operator+(const MPolyOf& o) const {
        check_same_vars(o);
        MPolyOf r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MPolyOf operator-(const MPolyOf& o) const {
        check_same_vars(o);
        MPolyOf r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MPolyOf operator*(const MPolyOf& o) const {
        check_same_vars(o);
        MPolyOf r(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                ExpVec e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPolyOf scaled(const C& c) const {
        MPolyOf r(vars_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [e, t] : terms_) r.add_term(e, t * c);
        return r;
    }

    MPolyOf pow(std::uint32_t n) const {
        if (n == 0) {
            if (terms_.empty())
                throw PreconditionError("0^0 of zero polynomial");
            return constant(vars_, coeff_one_like(terms_.begin()->second));
        }
        MPolyOf r = *this;
        for (std::uint32_t i = 1; i < n; ++i) r = r * *this;
        return r;
    }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    MPolyOf derivative(std::size_t var) const {
        if (var >= vars_.size()) throw PreconditionError("unknown variable");
        MPolyOf r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            ExpVec f = e;
            f[var] -= 1;
            r.add_term(f, c * coeff_from_long(c, static_cast<long>(e[var])));
        }
        return r;
    }

    // Largest monomial with its coefficient under ord.  Poly must be nonzero.
    std::pair<ExpVec, C> leading_term(MonomialOrder ord) const {
        if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (monomial_greater(it->first, best->first, ord)) best = it;
        return {best->first, best->second};
    }

    const C& coeff_at(const ExpVec& e) const {
        auto it = terms_.find(e);
        if (it == terms_.end()) throw PreconditionError("no such term");
        return it->second;
    }

    // Substitute point[i] for variable i.  `lift` injects coefficients into V;
    // `zero` supplies the additive identity of V.
    template <class V, class Lift>
    V eval(const std::vector<V>& point, Lift lift, const V& zero) const {
        if (point.size() != vars_.size())
            throw PreconditionError("evaluation point arity mismatch");
        V acc = zero;
        for (const auto& [e, c] : terms_) {
            V term = lift(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t j = 0; j < e[i]; ++j) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    template <class D, class Fn>
    MPolyOf<D> map_coeffs(std::vector<std::string> vars, Fn fn) const {
        MPolyOf<D> r(std::move(vars));
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    // Reinterpret in a superset variable list (matched by name).
    MPolyOf with_vars(const std::vector<std::string>& newvars) const {
        std::vector<std::size_t> at(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
            if (it == newvars.end())
                throw PreconditionError("with_vars: variable " + vars_[i] + " missing");
            at[i] = static_cast<std::size_t>(it - newvars.begin());
        }
        MPolyOf r(newvars);
        for (const auto& [e, c] : terms_) {
            ExpVec f(newvars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[at[i]] = e[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

private:
    void check_same_vars(const MPolyOf& o) const {
        if (vars_ != o.vars_)
            throw PreconditionError("polynomial variable lists differ");
    }

    std::vector<std::string> vars_;
    std::map<ExpVec, C> terms_;
};

using MPoly = MPolyOf<Rat>;

template <class C>
bool coeff_is_zero(const MPolyOf<C>& p) { return p.is_zero(); }

// ---------------------------------------------------------------------------
// Canonical text form for rational-coefficient polynomials.  Terms descend in
// the fixed degrevlex order; output re-parses under the expression grammar.
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const ExpVec& e,
                                      const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

inline std::string poly_to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const ExpVec, Rat>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return monomial_greater(a->first, b->first, MonomialOrder::Degrevlex);
    });
    std::string s;
    bool first = true;
    for (auto* t : ts) {
        Rat c = t->second;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        Rat a = abs(c);
        std::string mon = monomial_to_string(t->first, p.vars());
        if (mon.empty()) {
            s += a.get_str();
        } else if (a == 1) {
            s += mon;
        } else {
            s += a.get_str() + "*" + mon;
        }
    }
    return s;
}

}  // namespace diffalg
