#pragma once

#include <optional>
#include <vector>

#include "diffalg/diff_field.hpp"
#include "diffalg/kaehler.hpp"

namespace diffalg {

// Input to the exponential Ax-Schanuel pipeline: elements a_i, b_i of one
// presentation, expected (but not required) to satisfy the logarithmic
// derivative identities d/dt a_i = (d/dt b_i)/b_i.
struct AxScenario {
    DiffField field;
    std::vector<RatFunc> a;
    std::vector<RatFunc> b;

    std::size_t n() const { return a.size(); }
    void validate() const;
};

struct HypothesisReport {
    std::vector<bool> logderiv_ok;              // per index
    std::vector<bool> b_nonzero;                // per index
    bool q_indep_mod_constants = false;         // the a_i, modulo constants
    std::vector<std::vector<Rat>> q_relations;  // witnesses when not independent

    bool all_ok() const {
        for (bool x : logderiv_ok)
            if (!x) return false;
        for (bool x : b_nonzero)
            if (!x) return false;
        return q_indep_mod_constants;
    }
};

// Outcome of replaying the transcendence-bound argument on a scenario.  The
// contradiction-branch fields are only populated when trdeg <= n, which can
// only happen when some hypothesis fails.
struct AxVerdict {
    HypothesisReport hypotheses;
    std::size_t trdeg_value = 0;
    std::size_t bound = 0;  // n + 1
    bool satisfied = false; // trdeg_value >= bound

    bool forms_built = false;
    bool forms_flat = false;
    bool pairing_zero = false;
    std::optional<std::size_t> onto_witness;  // 1-based index with d/dt a_i != 0

    std::optional<std::size_t> forms_rank;
    std::optional<std::vector<Rat>> dependency;          // c with sum c_i w_i = 0
    std::optional<RatFunc> nu;                           // sum c_i a_i
    std::optional<std::vector<Rat>> monomial_d;          // prod b_i^{d_i} constant
    std::optional<RatFunc> monomial_product;
    std::optional<std::vector<Rat>> derived_a_relation;  // d as a relation among the a_i
};

// Additive-by-multiplicative group point (x in G_a^n, y in G_m^n).
struct GroupPoint {
    std::vector<RatFunc> x;
    std::vector<RatFunc> y;
};

HypothesisReport check_hypotheses(const AxScenario& sc);

// The logarithmic forms w_i = d(a_i) - d(b_i)/b_i; requires every b_i != 0.
std::vector<DiffForm> build_forms(const AxScenario& sc);

// Runs the full claim pipeline.  When every hypothesis holds the bound must
// be satisfied; a violation raises TheoremViolation (kernel bug).
AxVerdict verify_claims(const AxScenario& sc);

// Integer vector d (primitive, positive first entry) with prod b_i^{d_i}
// constant, extracted from a Q-relation among the logarithmic derivatives
// of the b_i; nullopt when they are Q-independent.  Precondition: c is a
// verified dependency of the forms.
std::optional<std::vector<Rat>> monomial_relation(const AxScenario& sc,
                                                  const std::vector<Rat>& c);

// prod b_i^{d_i} for integer d.
RatFunc monomial_product(const DiffField& F, const std::vector<RatFunc>& b,
                         const std::vector<Rat>& d);

// l(beta) = sum c_i (d/dt x_i - (d/dt y_i)/y_i); all y_i must be nonzero.
RatFunc log_derivative_hom(const DiffField& F, const std::vector<Rat>& c,
                           const GroupPoint& beta);

// Symbolic identity l(beta * gamma) = l(beta) + l(gamma) over a presentation
// of fresh generators with unconstrained derivatives.
bool log_derivative_hom_check(std::size_t n, const std::vector<Rat>& c);

// Symbolic check that sum c_i (dx_i - dy_i/y_i) is unchanged by the
// translation (x, y) -> (x + p, q y), differentials taken relative to the
// subfield of the translation parameters.
bool invariance_check(std::size_t n, const std::vector<Rat>& c);

}  // namespace diffalg
