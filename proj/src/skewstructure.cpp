#include "skewmm/skewstructure.hpp"

#include "skewmm/errors.hpp"
#include "skewmm/transform.hpp"

#include <string>

namespace skewmm {

namespace {

std::size_t dim(const CycCtx& ctx) { return static_cast<std::size_t>(ctx.degree()); }

std::vector<Rational> unit_row(std::size_t n, int k)
{
    std::vector<Rational> row(n);
    row[static_cast<std::size_t>(k - 1)] = 1;
    return row;
}

void set_row(RatMatrix& m, std::size_t i, const std::vector<Rational>& row)
{
    for (std::size_t j = 0; j < row.size(); ++j)
        m(i, j) = row[j];
}

}  // namespace

RatMatrix build_X(const CycCtx& ctx)
{
    const std::size_t n = dim(ctx);
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        x(i, (i + 1) % n) = 1;
    return x;
}

RatMatrix build_Y(const CycCtx& ctx)
{
    const std::size_t n = dim(ctx);
    RatMatrix y(n, n);
    for (int j = 1; j <= ctx.degree(); ++j) {
        const auto row = static_cast<std::size_t>(j - 1);
        if (j == ctx.k_index()) {
            for (std::size_t col = 0; col < n; ++col)
                y(row, col) = -1;
            continue;
        }
        const int s_j = ctx.log_r(ctx.pow_r(j - 1) + 1) + 1;
        y(row, static_cast<std::size_t>(s_j - 1)) = 1;
    }
    return y;
}

std::vector<Rational> y_power_row(const CycCtx& ctx, int j, int i)
{
    const int p = ctx.p();
    if (i < 1 || i > p - 1 || j < 0 || j > p - 1)
        throw DomainError("y_power_row: index out of range");
    const int d = j - i;
    if (d > 0)
        return unit_row(dim(ctx), ctx.q(d));
    if (d < 0)
        return unit_row(dim(ctx), ctx.q(p + d));
    return std::vector<Rational>(dim(ctx), Rational(-1));
}

namespace {

// P and Q are only defined for p-1 coefficients, p an odd prime.
void require_template_size(std::size_t n)
{
    if (n < 2 || !is_prime(static_cast<long long>(n) + 1))
        throw DimensionError("expected p-1 coefficients for an odd prime p, got " + std::to_string(n));
}

}  // namespace

RatMatrix build_P(std::span<const Rational> c)
{
    const std::size_t n = c.size();
    require_template_size(n);
    const long long p = static_cast<long long>(n) + 1;
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t col = 0; col < n; ++col) {
            if (i == col)
                continue;
            const long long idx = ((static_cast<long long>(i) - static_cast<long long>(col)) % p + p) % p;
            m(i, col) = c[static_cast<std::size_t>(idx - 1)];
        }
    return m;
}

RatMatrix build_Q(std::span<const Rational> c)
{
    const std::size_t n = c.size();
    require_template_size(n);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t col = 0; col < n; ++col)
            m(i, col) = c[i];
    return m;
}

std::pair<RatMatrix, RatMatrix> build_AB_perm(const CycCtx& ctx)
{
    const std::size_t n = dim(ctx);
    RatMatrix a(n, n);
    RatMatrix b(n, n);
    for (int i = 1; i <= ctx.degree(); ++i) {
        a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(ctx.s(i) - 1)) = 1;
        b(static_cast<std::size_t>(ctx.q(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
    }
    return {std::move(a), std::move(b)};
}

RatMatrix build_antidiag(const CycCtx& ctx)
{
    const std::size_t n = dim(ctx);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, n - 1 - i) = 1;  // (i+1) + (n-i) = p
    return m;
}

RatMatrix shift_rows_up(const RatMatrix& c, int i)
{
    const std::size_t n = c.rows();
    RatMatrix out(n, c.cols());
    if (n == 0)
        return out;
    const auto shift = static_cast<std::size_t>(((i % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                                static_cast<long long>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t col = 0; col < c.cols(); ++col)
            out(k, col) = c((k + shift) % n, col);
    return out;
}

RatMatrix layer_basis_elem(const CycCtx& ctx, int i, int j)
{
    if (i < 0 || i > ctx.p() - 2 || j < 1 || j > ctx.p() - 1)
        throw DomainError("layer_basis_elem: index out of range");
    const std::size_t n = dim(ctx);
    RatMatrix y_pow(n, n);
    for (int row = 1; row <= ctx.degree(); ++row)
        set_row(y_pow, static_cast<std::size_t>(ctx.s(row) - 1), y_power_row(ctx, j, row));
    return shift_rows_up(y_pow, i);
}

SkewSparsity skew_sparsity(const CycCtxPtr& ctx, const RatMatrix& c)
{
    const SkewPoly f = mat_to_skew(ctx, c);
    return {f.sparsity(), f.support()};
}

CycElem random_cyc_elem(const CycCtxPtr& ctx, SeededRng& rng, int range)
{
    if (range < 1)
        throw DomainError("coefficient range must be at least 1");
    std::vector<Rational> coords(dim(*ctx));
    for (;;) {
        bool nonzero = false;
        for (auto& x : coords) {
            x = static_cast<long>(rng.uniform(-range, range));
            nonzero = nonzero || !is_zero(x);
        }
        if (nonzero)
            return CycElem(ctx, coords);
    }
}

SkewPoly random_skew_poly(const CycCtxPtr& ctx, const LayerSet& layers, SeededRng& rng, int range)
{
    SkewPoly f(ctx);
    for (int e : layers) {
        if (e < 0 || e > ctx->p() - 2)
            throw DomainError("layer index " + std::to_string(e) + " outside [0, p-2]");
        f.set_coeff(e, random_cyc_elem(ctx, rng, range));
    }
    return f;
}

RatMatrix random_layered(const CycCtxPtr& ctx, const LayerSet& layers, RngSeed seed, int range)
{
    if (layers.empty())
        throw DomainError("random_layered: empty layer set");
    SeededRng rng(seed);
    return skew_to_mat(random_skew_poly(ctx, layers, rng, range));
}

RatMatrix random_dense(std::size_t n, RngSeed seed, int range)
{
    if (range < 1)
        throw DomainError("coefficient range must be at least 1");
    SeededRng rng(seed);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(rng.uniform(-range, range));
    return m;
}

namespace {

void require_coeff_count(const CycCtx& ctx, std::span<const Rational> c)
{
    if (c.size() != dim(ctx))
        throw DimensionError("expected " + std::to_string(dim(ctx)) + " coefficients, got " +
                          std::to_string(c.size()));
}

}  // namespace

L0Check l0_characterization_check(const CycCtxPtr& ctx, std::span<const Rational> c)
{
    require_coeff_count(*ctx, c);
    const CycElem a(ctx, std::vector<Rational>(c.begin(), c.end()));
    const RatMatrix phi_a = skew_to_mat(SkewPoly::constant(a));
    const auto [pa, pb] = build_AB_perm(*ctx);
    return {pa * phi_a * pb, (build_P(c) - build_Q(c)) * build_antidiag(*ctx)};
}

std::string_view to_string(ConjugationSide s)
{
    switch (s) {
    case ConjugationSide::AInverseLeft:
        return "A^-1 (P - Q) A";
    case ConjugationSide::ALeft:
        return "A (P - Q) A^-1";
    case ConjugationSide::Both:
        return "both";
    case ConjugationSide::Neither:
        return "neither";
    }
    return "?";
}

ConjugationSide l0_conjugation_side(const CycCtxPtr& ctx, std::span<const Rational> c)
{
    require_coeff_count(*ctx, c);
    const CycElem a(ctx, std::vector<Rational>(c.begin(), c.end()));
    const RatMatrix phi_a = skew_to_mat(SkewPoly::constant(a));
    const RatMatrix perm = build_AB_perm(*ctx).first;
    const RatMatrix perm_inv = perm.transposed();  // permutation matrix
    const RatMatrix pq = build_P(c) - build_Q(c);
    const bool inverse_left = perm_inv * pq * perm == phi_a;
    const bool plain_left = perm * pq * perm_inv == phi_a;
    if (inverse_left && plain_left)
        return ConjugationSide::Both;
    if (inverse_left)
        return ConjugationSide::AInverseLeft;
    return plain_left ? ConjugationSide::ALeft : ConjugationSide::Neither;
}

}  // namespace skewmm
