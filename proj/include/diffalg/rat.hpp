#pragma once

#include <gmpxx.h>

#include <string>

namespace diffalg {

// Exact rational scalar.  mpq_class keeps fractions canonical (reduced,
// positive denominator) which is exactly the Rat invariant.
using Rat = mpq_class;
using Int = mpz_class;

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

// True iff x is an integer.
inline bool rat_is_integral(const Rat& x) { return x.get_den() == 1; }

}  // namespace diffalg
