#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffalg/diff_field.hpp"

namespace diffalg {

// Element of the module of differentials of a presentation, written in the
// canonical coordinates: sum coeffs[i] * d(g_i).
struct DiffForm {
    std::vector<RatFunc> coeffs;

    bool is_zero() const {
        for (const RatFunc& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const DiffForm& o) const { return coeffs == o.coeffs; }
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    DiffForm operator+(const DiffForm& o) const {
        DiffForm r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] = r.coeffs[i] + o.coeffs[i];
        return r;
    }
    DiffForm operator-(const DiffForm& o) const {
        DiffForm r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] = r.coeffs[i] - o.coeffs[i];
        return r;
    }
    DiffForm operator-() const {
        DiffForm r = *this;
        for (RatFunc& c : r.coeffs) c = -c;
        return r;
    }
    DiffForm scaled(const RatFunc& f) const {
        DiffForm r = *this;
        for (RatFunc& c : r.coeffs) c = c * f;
        return r;
    }
};

DiffForm zero_form(const DiffField& F);

// Universal derivation: d(f) = sum of formal partials.
DiffForm d(const DiffField& F, const RatFunc& f);

// Differential relative to the subfield generated by the inactive
// generators: coefficients on inactive slots are forced to zero.
DiffForm d_relative(const DiffField& F, const RatFunc& f,
                    const std::vector<bool>& active);

// d(f)/f, f nonzero.
DiffForm dlog(const DiffField& F, const RatFunc& f);

// Lie derivative induced by the field derivation:
// D1(sum c_i dg_i) = sum (d/dt c_i) dg_i + c_i d(d/dt g_i).
DiffForm lie_d1(const DiffField& F, const DiffForm& w);

// Pairing with the derivation: sum c_i * (d/dt g_i); satisfies
// pair_partial(d f) = derive(f).
RatFunc pair_partial(const DiffField& F, const DiffForm& w);

bool flat_check(const DiffField& F, const DiffForm& w);

// Rank over the field of the coefficient matrix of the forms.
std::size_t rank_forms(const DiffField& F, const std::vector<DiffForm>& forms);

// Transcendence degree over the declared constants of the subfield the
// elements generate (rank of their differentials).
std::size_t trdeg(const DiffField& F, const std::vector<RatFunc>& elems);

// For flat input forms: nullopt when independent over the field, otherwise a
// rational dependency (primitive integer entries, positive first nonzero)
// with sum c_i w_i = 0 exactly.  A minimal dependency with a non-constant
// coefficient is mathematically impossible for flat forms and raises
// TheoremViolation.
std::optional<std::vector<Rat>> constant_dependence(const DiffField& F,
                                                    const std::vector<DiffForm>& forms);

std::string form_to_string(const DiffField& F, const DiffForm& w);

}  // namespace diffalg
