#pragma once

#include <cstddef>
#include <vector>

#include "diffalg/rat.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg {

namespace detail {

// Gauss-Jordan; returns pivot (row, col) pairs.  A is reduced in place so
// pivot columns are unit columns.
template <class F>
std::vector<std::pair<std::size_t, std::size_t>> rref(std::vector<std::vector<F>>& a,
                                                      std::size_t ncols, const F& one) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && coeff_is_zero(a[p][col])) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const F inv = one / a[r][col];
        for (std::size_t j = 0; j < ncols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || coeff_is_zero(a[i][col])) continue;
            const F f = a[i][col];
            for (std::size_t j = 0; j < ncols; ++j)
                a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.emplace_back(r, col);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class F>
std::size_t matrix_rank(std::vector<std::vector<F>> rows, std::size_t ncols, const F& one) {
    return detail::rref(rows, ncols, one).size();
}

// Basis of the right kernel over the coefficient field, one vector per free
// column (ascending), each scaled so its first nonzero entry is 1.  An empty
// row list yields the standard basis of the full space.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows,
                                         std::size_t ncols, const F& one) {
    const F zero = one - one;
    const auto pivots = detail::rref(rows, ncols, one);
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [r, c] : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<F> v(ncols, zero);
        v[j] = one;
        for (const auto& [r, c] : pivots) v[c] = zero - rows[r][j];
        for (std::size_t k = 0; k < ncols; ++k) {
            if (coeff_is_zero(v[k])) continue;
            const F inv = one / v[k];
            for (std::size_t l = k; l < ncols; ++l) v[l] = v[l] * inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// True iff v lies in the row space of `rows`.
template <class F>
bool in_row_space(const std::vector<std::vector<F>>& rows, const std::vector<F>& v,
                  std::size_t ncols, const F& one) {
    const std::size_t base = matrix_rank(rows, ncols, one);
    std::vector<std::vector<F>> ext = rows;
    ext.push_back(v);
    return matrix_rank(std::move(ext), ncols, one) == base;
}

// Primitive integer vector on the same ray, positive first nonzero entry.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int l(1);
    for (const Rat& x : v) l = lcm(l, x.get_den());
    std::vector<Int> w;
    w.reserve(v.size());
    Int g(0);
    for (const Rat& x : v) {
        Int n = x.get_num() * (l / x.get_den());
        g = gcd(g, n);
        w.push_back(std::move(n));
    }
    if (g == 0) return w;  // zero vector
    int lead = 0;
    for (const Int& n : w)
        if (n != 0) {
            lead = sgn(n);
            break;
        }
    if (lead < 0) g = -g;
    for (Int& n : w) n /= g;
    return w;
}

// Basis of the rational right kernel, scaled to coprime integer vectors with
// positive first nonzero entry.
inline std::vector<std::vector<Int>> integer_kernel(
    const std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
    std::vector<std::vector<Int>> out;
    for (const auto& v : kernel_basis(rows, ncols, Rat(1)))
        out.push_back(primitive_integer_vector(v));
    return out;
}

}  // namespace diffalg
