#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Purely transcendental differential field Q(g1..gk) presented by a
// derivation table on its generators.  The declared constant field is Q;
// the presentation is trusted not to hide further constants (reports state
// this assumption).  k = 0 presents the plain rationals.
class DiffField {
public:
    DiffField(std::vector<std::string> generators, std::vector<RatFunc> derivation);

    static DiffField rationals() { return DiffField({}, {}); }

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<RatFunc>& derivation_table() const { return table_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool operator==(const DiffField& o) const {
        return gens_ == o.gens_ && table_ == o.table_;
    }
    bool operator!=(const DiffField& o) const { return !(*this == o); }

    RatFunc zero() const { return rf_zero(gens_); }
    RatFunc one() const { return rf_constant(gens_, Rat(1)); }
    RatFunc constant(const Rat& c) const { return rf_constant(gens_, c); }
    RatFunc gen(std::size_t i) const { return rf_var(gens_, i); }

    // Parses an expression over the generators.
    RatFunc parse(std::string_view text) const;

    // The derivation extended to the whole field by the chain rule over the
    // table; additive and Leibniz by construction.
    RatFunc derive(const RatFunc& f) const;

    bool is_constant(const RatFunc& f) const { return derive(f).is_zero(); }

    // Basis of { q in Q^n : sum q_i e_i = 0 }, primitive-integer scaled with
    // positive first entry.
    std::vector<std::vector<Rat>> q_relations(const std::vector<RatFunc>& elems) const;

    // Basis of { q in Q^n : sum q_i e_i is a constant }.  Empty basis
    // certifies Q-linear independence modulo the constants.
    std::vector<std::vector<Rat>> q_relations_mod_constants(
        const std::vector<RatFunc>& elems) const;

    // Iterated derivatives laid out j-major:
    // elems, then their derivatives, ..., up to order N inclusive.
    std::vector<RatFunc> prolong(const std::vector<RatFunc>& elems, unsigned order) const;

    // Element-of-this-field guard (variable list must match).
    void check_element(const RatFunc& f) const;

private:
    std::vector<std::string> gens_;
    std::vector<RatFunc> table_;
};

}  // namespace diffalg
