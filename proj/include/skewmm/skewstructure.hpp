#pragma once

#include "skewmm/cyclotomic.hpp"
#include "skewmm/matrix.hpp"
#include "skewmm/random.hpp"
#include "skewmm/skewpoly.hpp"

#include <span>
#include <utility>
#include <vector>

namespace skewmm {

// Layer structure of (p-1)x(p-1) rational matrices. X = phi(x) is the cyclic
// row shift, Y = phi(beta), and layer L_i is spanned by X^i Y^j. A matrix
// lies in the direct sum of the layers in I exactly when the support of its
// preimage under phi is I.

/// Layer index set, a subset of Z_{p-1}.
using LayerSet = SupportSet;

/// Ones on the superdiagonal and in the lower-left corner.
RatMatrix build_X(const CycCtx& ctx);
/// Row k_index is all -1; every other row j is E_{s_j} with r^(s_j - 1) = r^(j-1) + 1.
RatMatrix build_Y(const CycCtx& ctx);

/// Row s(i) of Y^j without forming the power, for 1 <= i <= p-1, 0 <= j <= p-1:
/// E_{q(j-i)} when j > i, E_{q(p+j-i)} when j < i, all -1 when j == i.
std::vector<Rational> y_power_row(const CycCtx& ctx, int j, int i);

/// Toeplitz matrix with zero diagonal: P(i, m) = c_{(i - m) mod p}, c_0 = 0
/// (1-based indices).
RatMatrix build_P(std::span<const Rational> c);
/// Row i is constant c_i.
RatMatrix build_Q(std::span<const Rational> c);

/// A has rows E_{s(i)}; B has columns E_{q(i)}.
std::pair<RatMatrix, RatMatrix> build_AB_perm(const CycCtx& ctx);
/// Entry (i, j) = 1 iff p divides i + j (1-based).
RatMatrix build_antidiag(const CycCtx& ctx);

/// X^i Y^j, built by shifting rows of Y^j up by i.
RatMatrix layer_basis_elem(const CycCtx& ctx, int i, int j);

/// Cyclic shift of rows: row k of the result is row (k + i) mod n of c.
RatMatrix shift_rows_up(const RatMatrix& c, int i);

struct SkewSparsity {
    int sparsity = 0;
    SupportSet support;
};

/// Sparsity and support of phi^{-1}(c).
SkewSparsity skew_sparsity(const CycCtxPtr& ctx, const RatMatrix& c);

/// Nonzero element with integer beta-power coordinates in [-range, range].
CycElem random_cyc_elem(const CycCtxPtr& ctx, SeededRng& rng, int range = 9);

/// Skew polynomial with support exactly `layers`, random nonzero coefficients.
SkewPoly random_skew_poly(const CycCtxPtr& ctx, const LayerSet& layers, SeededRng& rng,
                          int range = 9);

/// phi of a random polynomial supported on `layers`. Throws DomainError for
/// an empty or out-of-range layer set.
RatMatrix random_layered(const CycCtxPtr& ctx, const LayerSet& layers, RngSeed seed,
                         int range = 9);

/// Dense matrix with independent integer entries in [-range, range].
RatMatrix random_dense(std::size_t n, RngSeed seed, int range = 9);

struct L0Check {
    RatMatrix lhs;  // A * phi(sum_j c_j beta^j) * B
    RatMatrix rhs;  // (P(c) - Q(c)) * antidiag
};

/// Both sides of the L_0 characterization identity for coefficients c_1..c_{p-1}.
L0Check l0_characterization_check(const CycCtxPtr& ctx, std::span<const Rational> c);

/// Which conjugation writes L_0 as conjugates of P - Q.
enum class ConjugationSide {
    AInverseLeft,  // phi(a) = A^{-1} (P - Q) A
    ALeft,         // phi(a) = A (P - Q) A^{-1}
    Both,
    Neither,
};

std::string_view to_string(ConjugationSide s);

/// Tests both conjugation forms on the given coefficients.
ConjugationSide l0_conjugation_side(const CycCtxPtr& ctx, std::span<const Rational> c);

}  // namespace skewmm
