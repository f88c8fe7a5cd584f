#pragma once

#include "skewmm/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace skewmm {

/// Dense row-major matrix of exact rationals.
///
/// The multiplication algorithms work on square (p-1)x(p-1) matrices; the
/// evaluation stage also needs rectangular t x (p-1) blocks, so the type
/// itself does not force squareness.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> entries() const noexcept { return data_; }

    bool is_zero() const;
    RatMatrix transposed() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    RatMatrix& operator*=(const Rational& c);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
    friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Pluggable rectangular multiply. Implementations must return the exact
/// product and report every scalar multiplication through add_rational_muls.
using RectMultiply = std::function<RatMatrix(const RatMatrix&, const RatMatrix&)>;

/// Schoolbook product, (rows * inner * cols) counted multiplications.
RatMatrix cubic_multiply(const RatMatrix& a, const RatMatrix& b);

/// The hook used when callers pass none.
const RectMultiply& default_rect_multiply();

/// Matrix-vector product, counted.
std::vector<Rational> multiply(const RatMatrix& a, std::span<const Rational> x);

/// Product through the default hook; throws DimensionError on shape mismatch.
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Rank by exact elimination.
std::size_t rank(const RatMatrix& a);

}  // namespace skewmm
