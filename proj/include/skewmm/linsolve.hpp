#pragma once

#include "skewmm/errors.hpp"
#include "skewmm/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace skewmm::linsolve {

// Exact Gauss-Jordan elimination over any field type F providing
//   F + F, F - F, F * F, is_zero(F), inverse(F), pivot_weight(F).
// Matrices are dense row-major vectors. Among the nonzero candidates in a
// column the pivot of least pivot_weight is taken (first one on ties), so
// cheap-to-invert entries are preferred. Zero tests are exact.

/// Reduces `m` (rows x cols) to reduced row echelon form in place and
/// returns the rank.
template <class F>
std::size_t reduce(std::vector<F>& m, std::size_t rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        int best = 0;
        for (std::size_t i = rank; i < rows; ++i) {
            const F& cand = m[i * cols + col];
            if (is_zero(cand))
                continue;
            int w = pivot_weight(cand);
            if (pivot == rows || w < best) {
                pivot = i;
                best = w;
            }
        }
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[pivot * cols + j], m[rank * cols + j]);
        }
        const F inv = inverse(m[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j) {
            F& e = m[rank * cols + j];
            if (!is_zero(e))
                e = e * inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank)
                continue;
            const F factor = m[i * cols + col];
            if (is_zero(factor))
                continue;
            for (std::size_t j = col; j < cols; ++j) {
                const F& src = m[rank * cols + j];
                if (!is_zero(src))
                    m[i * cols + j] = m[i * cols + j] - factor * src;
            }
        }
        ++rank;
    }
    return rank;
}

template <class F>
std::size_t rank(std::vector<F> m, std::size_t rows, std::size_t cols)
{
    return reduce(m, rows, cols);
}

/// Solves the n x n system a * x = b. Throws SingularSystem when a is singular.
template <class F>
std::vector<F> solve(const std::vector<F>& a, const std::vector<F>& b, std::size_t n)
{
    if (a.size() != n * n || b.size() != n)
        throw DimensionError("linsolve::solve: inconsistent system size");
    if (n == 0)
        return {};
    std::vector<F> aug;
    aug.reserve(n * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.push_back(a[i * n + j]);
        aug.push_back(b[i]);
    }
    const std::size_t r = reduce(aug, n, n + 1);
    // Full rank on the left block means the first n columns all pivoted.
    if (r < n || is_zero(aug[(n - 1) * (n + 1) + (n - 1)]))
        throw SingularSystem("linsolve::solve: singular system");
    std::vector<F> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x.push_back(aug[i * (n + 1) + n]);
    return x;
}

}  // namespace skewmm::linsolve
