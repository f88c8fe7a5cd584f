#include "skewmm/matrix.hpp"

#include "skewmm/counters.hpp"
#include "skewmm/errors.hpp"
#include "skewmm/linsolve.hpp"

#include <string>

namespace skewmm {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (!skewmm::is_zero(x))
            return false;
    return true;
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("RatMatrix: shape mismatch in addition");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("RatMatrix: shape mismatch in subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c)
{
    for (auto& x : data_)
        x *= c;
    add_rational_muls(data_.size());
    return *this;
}

RatMatrix cubic_multiply(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("cubic_multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    RatMatrix c(a.rows(), b.cols());
    Rational prod;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                mpq_mul(prod.get_mpq_t(), aik.get_mpq_t(), b(k, j).get_mpq_t());
                c(i, j) += prod;
            }
        }
    }
    add_rational_muls(static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols());
    return c;
}

const RectMultiply& default_rect_multiply()
{
    static const RectMultiply hook = cubic_multiply;
    return hook;
}

std::vector<Rational> multiply(const RatMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size())
        throw DimensionError("matrix-vector product: dimension mismatch");
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            y[i] += a(i, k) * x[k];
    add_rational_muls(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    return default_rect_multiply()(a, b);
}

std::size_t rank(const RatMatrix& a)
{
    std::vector<Rational> m(a.entries().begin(), a.entries().end());
    return linsolve::rank(std::move(m), a.rows(), a.cols());
}

}  // namespace skewmm
