#pragma once

#include <cstdint>
#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// One term  coeff / (t - root)^order  of a partial-fraction expansion.
struct PartialFractionTerm {
    Rat root;
    std::uint32_t order;
    Rat coeff;
};

struct PartialFractions {
    MPoly poly_part;                        // univariate polynomial part
    std::vector<PartialFractionTerm> terms; // sorted by (root, order)
};

// Exact expansion f = poly_part + sum coeff/(t-root)^order.  Requires the
// denominator to split into rational linear factors; otherwise throws
// UnsupportedPlaceError.  Zero-coefficient terms are omitted.
PartialFractions partial_fractions(const RatFunc& f);

}  // namespace diffalg
