#include "diffalg/diff_field.hpp"

#include <set>

#include "diffalg/expr.hpp"
#include "diffalg/linalg.hpp"

namespace diffalg {

DiffField::DiffField(std::vector<std::string> generators, std::vector<RatFunc> derivation)
    : gens_(std::move(generators)), table_(std::move(derivation)) {
    if (gens_.size() != table_.size())
        throw PreconditionError("derivation table size differs from generator count");
    std::set<std::string> names(gens_.begin(), gens_.end());
    if (names.size() != gens_.size())
        throw PreconditionError("duplicate generator name");
    for (const RatFunc& v : table_)
        if (v.vars() != gens_)
            throw PreconditionError("derivation value uses undeclared generators");
}

RatFunc DiffField::parse(std::string_view text) const {
    return parse_expr(text, gens_);
}

void DiffField::check_element(const RatFunc& f) const {
    if (f.vars() != gens_)
        throw PreconditionError("element does not belong to this field presentation");
}

RatFunc DiffField::derive(const RatFunc& f) const {
    check_element(f);
    RatFunc acc = zero();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const RatFunc pf = f.derivative(i);
        if (pf.is_zero()) continue;
        acc = acc + pf * table_[i];
    }
    return acc;
}

std::vector<std::vector<Rat>> DiffField::q_relations(
    const std::vector<RatFunc>& elems) const {
    for (const RatFunc& e : elems) check_element(e);
    if (elems.empty()) return {};

    // Bring everything over one denominator, then read off the Q-coefficient
    // matrix of the numerators by monomial.
    MPoly common = MPoly::constant(gens_, Rat(1));
    for (const RatFunc& e : elems) {
        const MPoly g = poly_gcd(common, e.den());
        common = exact_divide(common, g) * e.den();
    }
    std::vector<MPoly> nums;
    nums.reserve(elems.size());
    std::set<ExpVec> monomials;
    for (const RatFunc& e : elems) {
        MPoly n = e.num() * exact_divide(common, e.den());
        for (const auto& [m, c] : n.terms()) monomials.insert(m);
        nums.push_back(std::move(n));
    }

    std::vector<std::vector<Rat>> rows;
    for (const ExpVec& m : monomials) {
        std::vector<Rat> row;
        row.reserve(elems.size());
        for (const MPoly& n : nums) {
            auto it = n.terms().find(m);
            row.push_back(it == n.terms().end() ? Rat(0) : it->second);
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::vector<Rat>> out;
    for (const auto& v : kernel_basis(std::move(rows), elems.size(), Rat(1))) {
        std::vector<Rat> w;
        for (const Int& n : primitive_integer_vector(v)) w.emplace_back(n);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<Rat>> DiffField::q_relations_mod_constants(
    const std::vector<RatFunc>& elems) const {
    std::vector<RatFunc> derived;
    derived.reserve(elems.size());
    for (const RatFunc& e : elems) derived.push_back(derive(e));
    return q_relations(derived);
}

std::vector<RatFunc> DiffField::prolong(const std::vector<RatFunc>& elems,
                                        unsigned order) const {
    std::vector<RatFunc> out;
    out.reserve(elems.size() * (order + 1));
    std::vector<RatFunc> row = elems;
    for (const RatFunc& e : row) check_element(e);
    for (unsigned j = 0; j <= order; ++j) {
        out.insert(out.end(), row.begin(), row.end());
        if (j == order) break;
        for (RatFunc& e : row) e = derive(e);
    }
    return out;
}

}  // namespace diffalg
