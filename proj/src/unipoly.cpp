#include "diffalg/unipoly.hpp"

#include <algorithm>
#include <set>

namespace diffalg {

namespace {

// Positive divisors by trial division, with an effort cap so adversarial
// coefficients fail loudly instead of hanging.
std::vector<Int> divisors_of(const Int& n_in) {
    Int n = abs(n_in);
    if (n == 0) throw PreconditionError("divisors of zero");
    std::vector<Int> small, large;
    Int i(1);
    long steps = 0;
    while (i * i <= n) {
        if (++steps > 2000000)
            throw UnsupportedPlaceError(
                "coefficients too large for rational root search");
        if (n % i == 0) {
            small.push_back(i);
            Int j = n / i;
            if (j != i) large.push_back(j);
        }
        ++i;
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rat> uni_rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("roots of zero polynomial");
    std::vector<Rat> roots;

    // Strip the root at zero first.
    std::size_t low = 0;
    while (low < p.c.size() && sgn(p.c[low]) == 0) ++low;
    UniPoly q = UniPoly::from_coeffs(
        std::vector<Rat>(p.c.begin() + static_cast<long>(low), p.c.end()));
    if (low > 0) roots.push_back(Rat(0));
    if (q.degree() < 1) return roots;

    // Work on the squarefree part; clear denominators to integer coefficients.
    UniPoly s = uni_divmod(q, uni_gcd(q, q.derivative())).first;
    Int l(1);
    for (const Rat& x : s.c) l = lcm(l, x.get_den());
    std::vector<Int> ic;
    ic.reserve(s.c.size());
    for (const Rat& x : s.c) ic.push_back(x.get_num() * (l / x.get_den()));
    Int g(0);
    for (const Int& x : ic) g = gcd(g, x);
    for (Int& x : ic) x /= g;

    const Int a0 = ic.front(), an = ic.back();
    std::set<Rat> seen;
    for (const Int& pn : divisors_of(a0)) {
        for (const Int& qd : divisors_of(an)) {
            for (int sign : {1, -1}) {
                Rat cand(sign * pn, qd);
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                if (sgn(s.eval(cand)) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace diffalg
