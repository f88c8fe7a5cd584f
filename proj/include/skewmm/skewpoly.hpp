#pragma once

#include "skewmm/cyclotomic.hpp"
#include "skewmm/matrix.hpp"

#include <map>
#include <set>
#include <span>
#include <vector>

namespace skewmm {

/// Sorted set of exponents in Z_{p-1}.
using SupportSet = std::set<int>;

/// {a + b mod modulus : a in lhs, b in rhs}.
SupportSet sumset(const SupportSet& lhs, const SupportSet& rhs, int modulus);

/// Sparse element of Q(beta)[x; sigma] / (x^(p-1) - 1), with x * c = sigma(c) * x.
/// Only nonzero coefficients are stored; exponents live in [0, p-2].
class SkewPoly {
public:
    explicit SkewPoly(CycCtxPtr ctx);

    static SkewPoly constant(const CycElem& c) { return monomial(c, 0); }
    /// c * x^e, e reduced mod p-1.
    static SkewPoly monomial(const CycElem& c, long long e);
    /// x^e with coefficient 1.
    static SkewPoly x_power(CycCtxPtr ctx, long long e);

    const CycCtxPtr& context() const noexcept { return ctx_; }
    const std::map<int, CycElem>& terms() const noexcept { return terms_; }
    int sparsity() const noexcept { return static_cast<int>(terms_.size()); }
    bool is_zero() const noexcept { return terms_.empty(); }
    SupportSet support() const;

    /// Coefficient of x^e (zero when absent).
    CycElem coeff(long long e) const;
    /// Replaces the coefficient of x^e; a zero value removes the term.
    void set_coeff(long long e, CycElem c);

    SkewPoly operator-() const;
    SkewPoly& operator+=(const SkewPoly& g);
    SkewPoly& operator-=(const SkewPoly& g);
    friend SkewPoly operator+(SkewPoly f, const SkewPoly& g) { return f += g; }
    friend SkewPoly operator-(SkewPoly f, const SkewPoly& g) { return f -= g; }
    /// Skew product: (a x^s) * (b x^u) = a sigma^s(b) x^((s+u) mod (p-1)).
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);
    friend SkewPoly operator*(const Rational& c, const SkewPoly& f);
    friend bool operator==(const SkewPoly& f, const SkewPoly& g);

private:
    int reduce_exponent(long long e) const;

    CycCtxPtr ctx_;
    std::map<int, CycElem> terms_;
};

SupportSet sumset(const SkewPoly& f, const SkewPoly& g);

/// f(b) = sum_i a_i sigma^(e_i)(b).
CycElem evaluate(const SkewPoly& f, const CycElem& b);

/// Evaluates the composite map "inner then outer" at t points at once.
///
/// Row i of `points` holds the normal coordinates of the i-th point. With the
/// row-vector convention coords(f(b)) = coords(b) * phi(f), row i of
/// points * inner * outer is the normal-coordinate vector of
/// outer(inner(b_i)). Both products go through `mul`.
std::vector<CycElem> batch_evaluate(const CycCtxPtr& ctx, const RatMatrix& points,
                                    const RatMatrix& inner, const RatMatrix& outer,
                                    const RectMultiply& mul = default_rect_multiply());

/// Rows ell = first, ..., first+count-1 of the evaluation-point matrix (points v_1^ell).
RatMatrix evaluation_points(const CycCtx& ctx, long long first, long long count);

/// Recovers f with supp(f) inside `support` from values[i] = f(v_1^i),
/// i = 0 .. |support|-1, by solving the Vandermonde system with nodes
/// v_{e+1}. Extra values beyond |support| are ignored.
SkewPoly interpolate_known_support(const CycCtxPtr& ctx, std::span<const CycElem> values,
                                   const SupportSet& support);

/// Recovers f from values[l] = f(v_1^l), l = 0 .. 2*bound-1, given #f <= bound.
///
/// Computes t = rank of the bound x bound Hankel-type system, solves the
/// t x t system for the locator Lambda_t, finds its roots among
/// v_1, ..., v_{p-1} by exhaustive evaluation and solves the transposed
/// Vandermonde system for the coefficients. Throws InterpolationError when
/// the values are inconsistent with any polynomial of sparsity <= bound.
SkewPoly sparse_interpolate(const CycCtxPtr& ctx, std::span<const CycElem> values, int bound);

}  // namespace skewmm
