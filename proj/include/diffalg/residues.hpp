#pragma once

#include <optional>
#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Place of the rational function field in one variable: a rational finite
// point t = c, or the place at infinity.
struct Place {
    bool at_infinity = false;
    Rat c;

    static Place finite(Rat value) { return Place{false, std::move(value)}; }
    static Place infinity() { return Place{true, Rat(0)}; }

    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && (at_infinity || c == o.c);
    }
};

// Rational 1-form f(t) dt.
struct RatForm1 {
    RatFunc f;
};

// Vanishing order of e at the place; nullopt encodes +infinity (e = 0).
std::optional<long> ord_place(const RatFunc& e, const Place& p);

// Residue of the form at the place.  Finite places read the coefficient of
// 1/(t-c) off the partial-fraction expansion; infinity is computed through
// the substitution t = 1/s and cross-checked against the negated sum of the
// finite residues.  Irrational poles raise UnsupportedPlaceError.
Rat residue_at(const RatForm1& w, const Place& p);

// res_p(de/e) = ord_p(e) and res_p(de) = 0.
bool dlog_residue_check(const RatFunc& e, const Place& p);

// True when every zero and pole of e is rational (e nonzero, univariate).
bool places_supported(const RatFunc& e);

struct OrderBalanceRow {
    Place place;
    std::vector<long> orders;  // ord_p(b_i)
    Rat weighted_sum;          // sum c_i ord_p(b_i)
    bool ok = false;           // weighted_sum == 0
};

struct OrderBalanceReport {
    std::vector<OrderBalanceRow> rows;  // finite places ascending, then infinity
    bool all_ok = true;
};

// Residue argument at every zero/pole of the b_i (and infinity): under the
// verified identity sum c_i db_i/b_i = d(nu), each weighted order sum must
// vanish.  Throws PreconditionError when the identity fails and
// UnsupportedPlaceError on irrational zeros or poles.
OrderBalanceReport claim5_local_check(const std::vector<RatFunc>& bs,
                                      const std::vector<Rat>& c, const RatFunc& nu);

}  // namespace diffalg
