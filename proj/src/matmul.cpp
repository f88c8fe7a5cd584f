#include "skewmm/matmul.hpp"

#include "skewmm/counters.hpp"
#include "skewmm/cyclotomic.hpp"
#include "skewmm/errors.hpp"
#include "skewmm/skewpoly.hpp"
#include "skewmm/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace skewmm {

std::string_view to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::Naive:
        return "naive";
    case Algorithm::Deterministic:
        return "det";
    case Algorithm::MonteCarlo:
        return "mc";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

void require_square_pair(const RatMatrix& a, const RatMatrix& b)
{
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("expected two square matrices of equal size, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

CycCtxPtr context_for(const RatMatrix& a)
{
    const auto p = static_cast<long long>(a.rows()) + 1;
    if (p < 3 || !is_prime(p))
        throw DomainError("matrix size " + std::to_string(a.rows()) + " is not p-1 for an odd prime p");
    return cyc_context(static_cast<int>(p));
}

void require_probability(double x, const char* what)
{
    if (!(x > 0.0 && x < 1.0))
        throw DomainError(std::string(what) + " must lie in (0,1)");
}

}  // namespace

RatMatrix naive_mul(const RatMatrix& a, const RatMatrix& b, const RectMultiply& mul)
{
    require_square_pair(a, b);
    return mul(a, b);
}

MulResult det_mul(const RatMatrix& a, const RatMatrix& b, const RectMultiply& mul)
{
    require_square_pair(a, b);
    const auto start = Clock::now();
    const MulCountScope total;
    const CycCtxPtr ctx = context_for(a);
    const std::size_t n = a.rows();

    MulResult out{RatMatrix::zero(n), {}};
    out.report.algorithm = Algorithm::Deterministic;

    const SkewPoly fa = mat_to_skew(ctx, a);
    const SkewPoly fb = mat_to_skew(ctx, b);
    const SupportSet support = sumset(fa, fb);
    out.report.t_used = static_cast<int>(support.size());

    if (!support.empty()) {
        // phi(product polynomial) = A B and coords(h(b)) = coords(b) phi(h), so
        // the evaluations at v_1^0 .. v_1^{t-1} are the rows of points * A * B.
        const RatMatrix points = evaluation_points(*ctx, 0, static_cast<long long>(support.size()));
        const MulCountScope eval;
        const auto values = batch_evaluate(ctx, points, a, b, mul);
        out.report.eval_rational_mul_count = eval.count();

        const SkewPoly product = interpolate_known_support(ctx, values, support);
        out.product = skew_to_mat(product);
    }

    out.report.rational_mul_count = total.count();
    out.report.wall_time = Clock::now() - start;
    return out;
}

int freivalds_rounds(double mu)
{
    require_probability(mu, "mu");
    return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / mu))));
}

Verdict freivalds(const RatMatrix& m, const RatMatrix& a, const RatMatrix& b, double mu,
                  SeededRng& rng)
{
    require_square_pair(a, b);
    require_square_pair(m, a);
    const int rounds = freivalds_rounds(mu);
    const std::size_t n = m.rows();
    std::vector<Rational> y(n);
    for (int round = 0; round < rounds; ++round) {
        for (auto& yi : y)
            yi = rng.next_bit() ? 1 : 0;
        const auto lhs = multiply(m, y);
        const auto rhs = multiply(a, multiply(b, y));
        if (lhs != rhs)
            return Verdict::NotEqual;
    }
    return Verdict::Equal;
}

Verdict freivalds(const RatMatrix& m, const RatMatrix& a, const RatMatrix& b, double mu,
                  RngSeed seed)
{
    SeededRng rng(seed);
    return freivalds(m, a, b, mu, rng);
}

MulResult mc_mul(const RatMatrix& a, const RatMatrix& b, double nu, RngSeed seed,
                 const RectMultiply& mul)
{
    require_square_pair(a, b);
    require_probability(nu, "nu");
    const auto start = Clock::now();
    const MulCountScope total;
    const CycCtxPtr ctx = context_for(a);
    const int cap = ctx->degree();

    // ceil(log2(p-1)) is the bit width of p-2; at least 1 for p = 3.
    const int log_rounds = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(cap - 1))));
    const double mu = nu / log_rounds;

    MulResult out{RatMatrix::zero(a.rows()), {}};
    out.report.algorithm = Algorithm::MonteCarlo;

    SeededRng rng(seed);
    std::vector<CycElem> values;
    for (int bound = 1;; bound = std::min(2 * bound, cap)) {
        ++out.report.iterations;
        out.report.t_used = bound;

        // Only the evaluations not computed in earlier rounds.
        const auto have = static_cast<long long>(values.size());
        const auto need = 2LL * bound;
        if (need > have) {
            const RatMatrix points = evaluation_points(*ctx, have, need - have);
            const MulCountScope eval;
            auto fresh = batch_evaluate(ctx, points, a, b, mul);
            out.report.eval_rational_mul_count += eval.count();
            values.insert(values.end(), std::make_move_iterator(fresh.begin()),
                          std::make_move_iterator(fresh.end()));
        }

        bool accepted = false;
        try {
            const SkewPoly candidate = sparse_interpolate(ctx, values, bound);
            RatMatrix m = skew_to_mat(candidate);
            if (freivalds(m, a, b, mu, rng) == Verdict::Equal) {
                out.product = std::move(m);
                accepted = true;
            }
        } catch (const InterpolationError&) {
            // The bound is below the true sparsity; try a larger one.
        }
        if (accepted)
            break;
        if (bound == cap) {
            out.product = naive_mul(a, b, mul);
            out.report.fallback = true;
            break;
        }
    }

    out.report.rational_mul_count = total.count();
    out.report.wall_time = Clock::now() - start;
    return out;
}

}  // namespace skewmm
