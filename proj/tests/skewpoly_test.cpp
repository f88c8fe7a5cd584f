#include "skewmm/errors.hpp"
#include "skewmm/skewpoly.hpp"
#include "skewmm/transform.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace skewmm {
namespace {

using testing::evaluations;
using testing::oracle_field_mul;
using testing::random_elem;
using testing::random_nonzero_elem;
using testing::random_poly_with_sparsity;

SkewPoly rational_poly(const CycCtxPtr& ctx, std::initializer_list<std::pair<int, int>> terms)
{
    SkewPoly f(ctx);
    for (auto [e, c] : terms)
        f.set_coeff(e, CycElem::from_rational(ctx, c));
    return f;
}

// Term-by-term product written directly from the twisting rule.
SkewPoly oracle_skew_mul(const SkewPoly& f, const SkewPoly& g)
{
    const CycCtxPtr& ctx = f.context();
    const int m = ctx->degree();
    std::vector<CycElem> acc(static_cast<std::size_t>(m), CycElem(ctx));
    for (const auto& [s, a] : f.terms())
        for (const auto& [u, b] : g.terms())
            acc[static_cast<std::size_t>((s + u) % m)] += oracle_field_mul(a, b.sigma(s));
    SkewPoly h(ctx);
    for (int e = 0; e < m; ++e)
        h.set_coeff(e, acc[static_cast<std::size_t>(e)]);
    return h;
}

TEST(SkewPoly, SetCoeffDropsZero)
{
    const auto ctx = cyc_context(7);
    SkewPoly f = SkewPoly::x_power(ctx, 3);
    EXPECT_EQ(f.sparsity(), 1);
    f.set_coeff(3, CycElem(ctx));
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(SkewPoly::x_power(ctx, 9), SkewPoly::x_power(ctx, 3));
    EXPECT_EQ(SkewPoly::x_power(ctx, -1), SkewPoly::x_power(ctx, 5));
}

TEST(SkewPoly, Addition)
{
    const auto ctx = cyc_context(7);
    SeededRng rng(RngSeed{1});
    const SkewPoly f = random_poly_with_sparsity(ctx, 3, rng);
    EXPECT_EQ(f + SkewPoly(ctx), f);
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_TRUE((f - f).terms().empty());
    const SkewPoly x = SkewPoly::x_power(ctx, 1);
    const SkewPoly bx = SkewPoly::monomial(CycElem::beta_power(ctx, 1), 1);
    const SkewPoly sum = x + bx;
    EXPECT_EQ(sum.sparsity(), 1);
    EXPECT_EQ(sum.coeff(1), CycElem::one(ctx) + CycElem::beta_power(ctx, 1));
}

TEST(SkewPoly, MismatchedFieldThrows)
{
    const SkewPoly f = SkewPoly::x_power(cyc_context(5), 1);
    const SkewPoly g = SkewPoly::x_power(cyc_context(7), 1);
    EXPECT_THROW(f + g, DimensionError);
    EXPECT_THROW(f * g, DimensionError);
}

TEST(SkewPoly, TwistingRule)
{
    for (int p : {3, 5, 7}) {
        const auto ctx = cyc_context(p);
        SeededRng rng(RngSeed{static_cast<std::uint64_t>(p)});
        const CycElem c = random_nonzero_elem(ctx, rng);
        EXPECT_EQ(SkewPoly::x_power(ctx, 1) * SkewPoly::constant(c), SkewPoly::monomial(c.sigma(1), 1));
    }
}

TEST(SkewPoly, CancellationFamily)
{
    const auto ctx = cyc_context(13);
    for (int k = 0; k <= 10; ++k) {
        SkewPoly g(ctx);
        for (int j = 0; j <= k; ++j)
            g.set_coeff(j, CycElem::one(ctx));
        const SkewPoly f = rational_poly(ctx, {{0, 1}, {1, -1}});
        const SkewPoly h = f * g;
        EXPECT_EQ(h, rational_poly(ctx, {{0, 1}, {k + 1, -1}}));
        EXPECT_EQ(h.sparsity(), 2);
        EXPECT_EQ(static_cast<int>(sumset(f, g).size()), std::min(k + 2, 12));
    }
}

TEST(SkewPoly, ExponentWrapsAtP3)
{
    const auto ctx = cyc_context(3);
    const SkewPoly x = SkewPoly::x_power(ctx, 1);
    EXPECT_EQ(x * x, SkewPoly::constant(CycElem::one(ctx)));
}

TEST(SkewPoly, ProductMatchesOracle)
{
    for (int p : {3, 5, 7, 11}) {
        const auto ctx = cyc_context(p);
        SeededRng rng(RngSeed{10u + static_cast<std::uint64_t>(p)});
        for (int trial = 0; trial < 10; ++trial) {
            const int tf = 1 + static_cast<int>(rng.uniform(0, p - 2));
            const int tg = 1 + static_cast<int>(rng.uniform(0, p - 2));
            const SkewPoly f = random_poly_with_sparsity(ctx, tf, rng);
            const SkewPoly g = random_poly_with_sparsity(ctx, tg, rng);
            const SkewPoly h = f * g;
            EXPECT_EQ(h, oracle_skew_mul(f, g));
            // The product acts as composition.
            const CycElem b = random_elem(ctx, rng);
            EXPECT_EQ(evaluate(h, b), evaluate(f, evaluate(g, b)));
            for (int e : h.support())
                EXPECT_TRUE(sumset(f, g).contains(e));
        }
    }
}

TEST(SkewPoly, RingAxiomsProperty)
{
    const auto ctx = cyc_context(7);
    SeededRng rng(RngSeed{77});
    for (int trial = 0; trial < 8; ++trial) {
        const SkewPoly f = random_poly_with_sparsity(ctx, 2, rng);
        const SkewPoly g = random_poly_with_sparsity(ctx, 3, rng);
        const SkewPoly h = random_poly_with_sparsity(ctx, 2, rng);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((g + h) * f, g * f + h * f);
    }
}

TEST(Sumset, Examples)
{
    EXPECT_EQ(sumset(SupportSet{0, 1}, SupportSet{0, 1, 2}, 6), (SupportSet{0, 1, 2, 3}));
    EXPECT_TRUE(sumset(SupportSet{}, SupportSet{0, 1}, 6).empty());
    for (int p : {5, 7, 11, 13}) {
        const int h = (p - 1) / 2;
        EXPECT_EQ(sumset(SupportSet{0, h}, SupportSet{0, h}, p - 1), (SupportSet{0, h}));
    }
    const auto ctx = cyc_context(7);
    EXPECT_TRUE(sumset(SkewPoly(ctx), SkewPoly::x_power(ctx, 2)).empty());
}

TEST(Evaluate, Examples)
{
    const auto ctx = cyc_context(11);
    SeededRng rng(RngSeed{3});
    const CycElem b = random_elem(ctx, rng);
    EXPECT_EQ(evaluate(SkewPoly::constant(CycElem::one(ctx)), b), b);
    EXPECT_EQ(evaluate(SkewPoly::x_power(ctx, 1), b), b.sigma(1));
    const SkewPoly f = random_poly_with_sparsity(ctx, 4, rng);
    CycElem expect(ctx);
    for (const auto& [e, c] : f.terms())
        expect += oracle_field_mul(c, b.sigma(e));
    EXPECT_EQ(evaluate(f, b), expect);
}

TEST(BatchEvaluate, SinglePointIdentity)
{
    const auto ctx = cyc_context(7);
    const RatMatrix pts = evaluation_points(*ctx, 1, 1);
    const RatMatrix id = RatMatrix::identity(6);
    const auto vals = batch_evaluate(ctx, pts, id, id);
    ASSERT_EQ(vals.size(), 1u);
    EXPECT_EQ(vals[0], CycElem::beta_power(ctx, 1));
}

TEST(BatchEvaluate, MatchesRingProduct)
{
    for (int p : {5, 7}) {
        const auto ctx = cyc_context(p);
        SeededRng rng(RngSeed{20u + static_cast<std::uint64_t>(p)});
        for (int trial = 0; trial < 5; ++trial) {
            const SkewPoly f = random_poly_with_sparsity(ctx, 2, rng);
            const SkewPoly g = random_poly_with_sparsity(ctx, 3, rng);
            // Row 0 is the point beta^0 = 1, whose coordinates are all -1.
            const RatMatrix pts = evaluation_points(*ctx, 0, p + 1);
            const auto vals = batch_evaluate(ctx, pts, skew_to_mat(g), skew_to_mat(f));
            const auto expect = evaluations(f * g, p + 1);
            EXPECT_EQ(vals, expect);
        }
    }
}

TEST(BatchEvaluate, DimensionMismatchThrows)
{
    const auto ctx = cyc_context(7);
    const RatMatrix pts = evaluation_points(*ctx, 0, 2);
    EXPECT_THROW(batch_evaluate(ctx, pts, RatMatrix::identity(5), RatMatrix::identity(6)), DimensionError);
}

TEST(InterpolateKnownSupport, Zero)
{
    const auto ctx = cyc_context(7);
    const std::vector<CycElem> zeros(3, CycElem(ctx));
    EXPECT_TRUE(interpolate_known_support(ctx, zeros, SupportSet{0, 2, 4}).is_zero());
}

TEST(InterpolateKnownSupport, Roundtrip)
{
    for (int p : {5, 7, 13}) {
        const auto ctx = cyc_context(p);
        SeededRng rng(RngSeed{30u + static_cast<std::uint64_t>(p)});
        for (int t = 1; t <= p - 1; ++t) {
            const SkewPoly f = random_poly_with_sparsity(ctx, t, rng);
            EXPECT_EQ(interpolate_known_support(ctx, evaluations(f, t), f.support()), f) << p << ' ' << t;
        }
    }
}

TEST(InterpolateKnownSupport, LargerSupportRecoversZeros)
{
    const auto ctx = cyc_context(13);
    const SkewPoly f = rational_poly(ctx, {{0, 1}, {1, -1}});
    const SkewPoly g = rational_poly(ctx, {{0, 1}, {1, 1}, {2, 1}});
    const SupportSet s = sumset(f, g);
    ASSERT_EQ(s, (SupportSet{0, 1, 2, 3}));
    const SkewPoly h = interpolate_known_support(ctx, evaluations(f * g, 4), s);
    EXPECT_EQ(h, rational_poly(ctx, {{0, 1}, {3, -1}}));
    EXPECT_EQ(h.support(), (SupportSet{0, 3}));
}

TEST(InterpolateKnownSupport, TooFewValuesThrows)
{
    const auto ctx = cyc_context(7);
    const std::vector<CycElem> vals(2, CycElem::one(ctx));
    EXPECT_THROW(interpolate_known_support(ctx, vals, SupportSet{0, 1, 2}), DimensionError);
}

TEST(SparseInterpolate, ZeroValues)
{
    const auto ctx = cyc_context(13);
    const std::vector<CycElem> zeros(10, CycElem(ctx));
    EXPECT_TRUE(sparse_interpolate(ctx, zeros, 5).is_zero());
}

TEST(SparseInterpolate, SingleTerm)
{
    const auto ctx = cyc_context(13);
    SeededRng rng(RngSeed{4});
    for (int e = 0; e < 12; ++e) {
        const SkewPoly f = SkewPoly::monomial(random_nonzero_elem(ctx, rng), e);
        EXPECT_EQ(sparse_interpolate(ctx, evaluations(f, 2), 1), f) << e;
    }
}

TEST(SparseInterpolate, RecoversWithSlack)
{
    const auto ctx = cyc_context(13);
    SeededRng rng(RngSeed{5});
    for (int trial = 0; trial < 5; ++trial) {
        const SkewPoly f = random_poly_with_sparsity(ctx, 3, rng);
        EXPECT_EQ(sparse_interpolate(ctx, evaluations(f, 10), 5), f);
    }
}

TEST(SparseInterpolate, FullBound)
{
    for (int p : {3, 5, 7}) {
        const auto ctx = cyc_context(p);
        SeededRng rng(RngSeed{6});
        const SkewPoly f = random_poly_with_sparsity(ctx, p - 1, rng);
        EXPECT_EQ(sparse_interpolate(ctx, evaluations(f, 2 * (p - 1)), p - 1), f);
    }
}

TEST(SparseInterpolate, Errors)
{
    const auto ctx = cyc_context(7);
    const std::vector<CycElem> three(3, CycElem::one(ctx));
    EXPECT_THROW(sparse_interpolate(ctx, three, 2), DimensionError);
    EXPECT_THROW(sparse_interpolate(ctx, three, -1), DomainError);
    EXPECT_THROW(sparse_interpolate(ctx, std::vector<CycElem>(14, CycElem::one(ctx)), 7), DomainError);
    // a_1 / a_0 = 2 is not a node, so the locator has no root.
    const std::vector<CycElem> bad{CycElem::one(ctx), CycElem::from_rational(ctx, 2)};
    EXPECT_THROW(sparse_interpolate(ctx, bad, 1), InterpolationError);
}

}  // namespace
}  // namespace skewmm
