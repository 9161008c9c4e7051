#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffalg/diff_field.hpp"
#include "diffalg/groebner.hpp"

namespace diffalg {

// Rational function on X with numerator and denominator stored in normal
// form modulo the ideal.  Equality on X is cross-multiplied normal-form
// equality (see AffineDVariety::equal_on_x).
struct FunctionOnX {
    KPoly num;
    KPoly den;
};

// Representative row vector of a cotangent class at a point; two
// representatives are identified when their difference lies in the K-row
// space of the Jacobian there.
struct CotangentClass {
    std::vector<RatFunc> rep;
};

// Regroups a rational function in (base generators ++ ambient) as a fraction
// of ambient polynomials with coefficients in the base field.
KRatFunc split_k_ratfunc(const RatFunc& combined,
                         const std::vector<std::string>& base_gens,
                         const std::vector<std::string>& ambient);

// Affine rational D-variety (X, s): ideal generators in the ambient
// variables over the base differential field K, plus a rational section of
// the shifted tangent bundle.  The ideal's primality is asserted by the
// caller, not verified; construction checks only that the reduced Groebner
// basis is not {1} and that the section satisfies the compatibility identity
// modulo the ideal.
class AffineDVariety {
public:
    using Point = std::vector<RatFunc>;  // coordinates in K

    enum class Validation { Strict, Deferred };

    AffineDVariety(DiffField base, std::vector<std::string> ambient,
                   std::vector<KPoly> ideal_gens, std::vector<KRatFunc> section,
                   Validation mode = Validation::Strict);

    const DiffField& base() const { return base_; }
    const std::vector<std::string>& ambient() const { return ambient_; }
    std::size_t ambient_dim() const { return ambient_.size(); }
    const std::vector<KPoly>& ideal_gens() const { return gens_; }
    const std::vector<KPoly>& groebner() const { return gb_; }
    const std::vector<KRatFunc>& section() const { return section_; }

    // Variable list "base generators then ambient" used by parse_function.
    std::vector<std::string> combined_vars() const;

    // --- constructors for the building blocks -----------------------------

    RatFunc k_one() const { return base_.one(); }
    KPoly x_zero() const { return KPoly(ambient_); }
    KPoly x_one() const { return KPoly::constant(ambient_, k_one()); }
    KPoly x_var(std::size_t i) const { return KPoly::variable(ambient_, i, k_one()); }
    KRatFunc x_ratfunc(const KPoly& num, const KPoly& den) const;

    // Parses an expression in base generators and ambient variables into a
    // fraction of ambient polynomials with K coefficients.
    KRatFunc parse_k_ratfunc(std::string_view text) const;

    // Flattens to one rational function in the combined variables (printing).
    RatFunc merge(const KRatFunc& f) const;
    RatFunc merge_poly(const KPoly& p) const;

    // --- section compatibility (Fact about sections of the shifted bundle) --

    struct SectionCheck {
        bool ok = true;
        std::optional<std::size_t> failing_generator;  // index into ideal_gens
        std::optional<RatFunc> residue;                // merged nonzero normal form
    };
    SectionCheck validate_section() const;

    // Coordinate functions must flow to the section components; always true
    // once validate_section holds, executed as a self-test.
    bool generic_sharp_point_check() const;

    // Defining equations of the shifted tangent bundle in variables
    // (ambient..., tangent aliases...): the ideal generators together with
    // their twisted Jacobian relations.
    std::vector<KPoly> shifted_tangent_ideal() const;

    // --- the function field K(X) -------------------------------------------

    FunctionOnX function(const KRatFunc& f) const;
    FunctionOnX parse_function(std::string_view text) const;
    FunctionOnX function_from_k(const RatFunc& c) const;  // constants from K
    bool equal_on_x(const FunctionOnX& f, const FunctionOnX& g) const;
    FunctionOnX add(const FunctionOnX& f, const FunctionOnX& g) const;
    FunctionOnX mul(const FunctionOnX& f, const FunctionOnX& g) const;

    // The derivation on K(X) induced by the section.
    FunctionOnX induced_derivation(const FunctionOnX& f) const;

    // --- points ------------------------------------------------------------

    bool on_variety(const Point& p) const;
    void check_point(const Point& p) const;

    // Section evaluated coordinatewise; DefinednessError when a component
    // denominator vanishes at the point.
    std::vector<RatFunc> section_at(const Point& p) const;

    // Sharp: the derivation moves the coordinates exactly along the section.
    bool is_sharp_point(const Point& p) const;

    RatFunc eval_function(const FunctionOnX& f, const Point& p) const;

    // --- linear data at a point ---------------------------------------------

    // One row per Groebner-basis element: the gradient evaluated at p.
    std::vector<std::vector<RatFunc>> jacobian_at(const Point& p) const;

    std::vector<std::vector<RatFunc>> tangent_space(const Point& p) const;

    std::size_t cotangent_dim(const Point& p) const;

    CotangentClass cotangent_class(const Point& p, const FunctionOnX& f) const;

    bool cotangent_equal(const Point& p, const CotangentClass& v,
                         const CotangentClass& w) const;

    // The linear flow on cotangent classes at a sharp point: writing the
    // representative as sum c_i e_i, the image is
    // sum (derive(c_i) e_i + c_i * grad(s_i)(p)).
    CotangentClass cotangent_flow_apply(const Point& p, const CotangentClass& v) const;

private:
    KRatFunc derive_poly(const KPoly& p) const;  // section chain rule + coefficient derivation
    KPoly coeff_derivative(const KPoly& p) const;
    std::vector<RatFunc> gradient_at(const KRatFunc& f, const Point& p) const;
    KPoly nf(const KPoly& p) const;

    DiffField base_;
    std::vector<std::string> ambient_;
    std::vector<KPoly> gens_;
    std::vector<KRatFunc> section_;
    std::vector<KPoly> gb_;
};

}  // namespace diffalg
