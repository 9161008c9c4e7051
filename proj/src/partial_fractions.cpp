#include "diffalg/partial_fractions.hpp"

#include <algorithm>

#include "diffalg/unipoly.hpp"

namespace diffalg {

PartialFractions partial_fractions(const RatFunc& f) {
    if (f.vars().size() != 1)
        throw PreconditionError("partial fractions require a univariate function");
    const std::vector<std::string>& vars = f.vars();

    const UniPoly num = UniPoly::from_mpoly(f.num());
    const UniPoly den = UniPoly::from_mpoly(f.den());

    PartialFractions out{MPoly(vars), {}};
    if (num.is_zero()) return out;

    auto [q, r] = uni_divmod(num, den);
    out.poly_part = q.to_mpoly(vars);
    if (r.is_zero()) return out;
    if (den.degree() == 0) return out;  // pure polynomial input

    // Split the denominator into rational linear factors.
    std::vector<std::pair<Rat, std::uint32_t>> factors;
    std::uint32_t found = 0;
    for (const Rat& root : uni_rational_roots(den)) {
        const std::uint32_t m = uni_root_multiplicity(den, root);
        factors.emplace_back(root, m);
        found += m;
    }
    if (static_cast<int>(found) != den.degree())
        throw UnsupportedPlaceError(
            "irreducible nonlinear factor of degree " +
            std::to_string(den.degree() - static_cast<int>(found)) +
            " in denominator");

    for (const auto& [root, mult] : factors) {
        // h = r / (den / (t-root)^mult) is regular at the root; the term
        // coefficients are the first `mult` Taylor coefficients of h there.
        const UniPoly lin = UniPoly::from_coeffs({-root, Rat(1)});
        UniPoly cof = den;
        for (std::uint32_t i = 0; i < mult; ++i) cof = uni_divmod(cof, lin).first;
        RatFunc h(r.to_mpoly(vars), cof.to_mpoly(vars));
        Rat fact(1);
        for (std::uint32_t i = 0; i < mult; ++i) {
            if (i > 0) {
                h = h.derivative(0);
                fact *= Rat(static_cast<long>(i));
            }
            const Rat value =
                h.eval<Rat>({root}, [](const Rat& c) { return c; }, Rat(0)) / fact;
            if (sgn(value) != 0)
                out.terms.push_back({root, mult - i, value});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.order < b.order;
    });
    return out;
}

}  // namespace diffalg
