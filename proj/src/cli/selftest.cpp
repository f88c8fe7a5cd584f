#include "skewmm/cli.hpp"

#include "skewmm/cyclotomic.hpp"
#include "skewmm/errors.hpp"
#include "skewmm/matmul.hpp"
#include "skewmm/skewstructure.hpp"
#include "skewmm/transform.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace skewmm::cli {

namespace {

constexpr int kPrimes[] = {3, 5, 7, 11, 13};

std::vector<Rational> random_rationals(std::size_t n, SeededRng& rng)
{
    std::vector<Rational> c(n);
    for (auto& x : c) {
        const long num = rng.uniform(-9, 9);
        const long den = rng.uniform(1, 4);
        x = Rational(num, den);
        x.canonicalize();
    }
    return c;
}

bool check_tables(const CycCtx& ctx)
{
    const int p = ctx.p();
    std::set<int> powers;
    for (int e = 0; e < p - 1; ++e)
        powers.insert(ctx.pow_r(e));
    if (static_cast<int>(powers.size()) != p - 1)
        return false;
    for (int i = 1; i < p; ++i) {
        if (ctx.pow_r(ctx.q(i) - 1) != i || ctx.pow_r(ctx.s(i) - 1) != p - i)
            return false;
        if ((ctx.q(i) + (p - 1) / 2 - ctx.s(i)) % (p - 1) != 0)
            return false;
    }
    return ctx.pow_r(ctx.k_index() - 1) == p - 1;
}

bool check_vw(const CycCtxPtr& ctx)
{
    const CycMatrix vw = multiply(build_V(ctx), build_W(ctx));
    const CycElem p_elem = CycElem::from_rational(ctx, ctx->p());
    const CycElem zero(ctx);
    for (std::size_t i = 0; i < vw.n; ++i)
        for (std::size_t j = 0; j < vw.n; ++j)
            if (vw(i, j) != (i == j ? p_elem : zero))
                return false;
    return true;
}

bool check_field(const CycCtxPtr& ctx, SeededRng& rng)
{
    for (int trial = 0; trial < 5; ++trial) {
        const CycElem a = random_cyc_elem(ctx, rng);
        const CycElem b = random_cyc_elem(ctx, rng);
        const CycElem c = random_cyc_elem(ctx, rng);
        if ((a * b) * c != a * (b * c) || a * b != b * a || a * (b + c) != a * b + a * c)
            return false;
        if (a * a.inverse() != CycElem::one(ctx))
            return false;
        if ((a * b).sigma(1) != a.sigma(1) * b.sigma(1) || a.sigma(ctx->degree()) != a)
            return false;
        if (CycElem::from_normal_coords(ctx, a.normal_coords()) != a)
            return false;
    }
    return true;
}

bool check_phi(const CycCtxPtr& ctx, SeededRng& rng)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    for (int trial = 0; trial < 3; ++trial) {
        const RatMatrix c = random_dense(n, RngSeed{rng.next_word()});
        if (skew_to_mat(mat_to_skew(ctx, c)) != c)
            return false;
        const SkewPoly f = random_skew_poly(ctx, {0, 1 % (ctx->p() - 1)}, rng);
        const SkewPoly g = random_skew_poly(ctx, {0}, rng);
        if (mat_to_skew(ctx, skew_to_mat(f)) != f)
            return false;
        if (skew_to_mat(f * g) != oriented_product(phi_orientation(ctx), skew_to_mat(f), skew_to_mat(g)))
            return false;
    }
    return skew_to_mat(SkewPoly::x_power(ctx, 1)) == build_X(*ctx) &&
           skew_to_mat(SkewPoly::constant(CycElem::beta_power(ctx, 1))) == build_Y(*ctx);
}

bool check_structure(const CycCtxPtr& ctx)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    const RatMatrix y = build_Y(*ctx);
    RatMatrix power = RatMatrix::identity(n);
    RatMatrix sum(n, n);
    for (int j = 1; j <= ctx->degree(); ++j) {
        power = power * y;
        sum += power;
    }
    if (sum != RatMatrix::identity(n) * Rational(-1))
        return false;

    const auto [a, b] = build_AB_perm(*ctx);
    if (a * b != build_antidiag(*ctx))
        return false;

    power = RatMatrix::identity(n);
    for (int j = 0; j <= ctx->degree(); ++j) {
        for (int i = 1; i <= ctx->degree(); ++i) {
            const auto row = power.row(static_cast<std::size_t>(ctx->s(i) - 1));
            const auto expected = y_power_row(*ctx, j, i);
            if (!std::equal(row.begin(), row.end(), expected.begin(), expected.end()))
                return false;
        }
        power = power * y;
    }
    return true;
}

bool check_l0(const CycCtxPtr& ctx, SeededRng& rng, std::set<ConjugationSide>& sides)
{
    for (int trial = 0; trial < 3; ++trial) {
        const auto c = random_rationals(static_cast<std::size_t>(ctx->degree()), rng);
        const L0Check chk = l0_characterization_check(ctx, c);
        if (chk.lhs != chk.rhs)
            return false;
        const ConjugationSide side = l0_conjugation_side(ctx, c);
        // The identity above forces A^-1 (P - Q) A since A B is the antidiagonal.
        if (side != ConjugationSide::AInverseLeft && side != ConjugationSide::Both)
            return false;
        sides.insert(side);
    }
    return true;
}

bool check_products(const CycCtxPtr& ctx, SeededRng& rng)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    for (int trial = 0; trial < 2; ++trial) {
        const RatMatrix a = random_dense(n, RngSeed{rng.next_word()});
        const RatMatrix b = random_layered(ctx, {0}, RngSeed{rng.next_word()});
        const RatMatrix ab = naive_mul(a, b);
        if (det_mul(a, b).product != ab)
            return false;
        if (mc_mul(a, b, 0.05, RngSeed{rng.next_word()}).product != ab)
            return false;
        if (freivalds(ab, a, b, 0.01, RngSeed{rng.next_word()}) != Verdict::Equal)
            return false;
    }
    return true;
}

bool check_interpolation(const CycCtxPtr& ctx, SeededRng& rng)
{
    const int m = ctx->degree();
    const int t = std::min(3, m);
    SupportSet support;
    while (static_cast<int>(support.size()) < t)
        support.insert(static_cast<int>(rng.uniform(0, m - 1)));
    const SkewPoly f = random_skew_poly(ctx, support, rng);
    const int bound = std::min(t + 1, m);
    std::vector<CycElem> values;
    for (int l = 0; l < 2 * bound; ++l)
        values.push_back(evaluate(f, power_of_v1(ctx, l)));
    return sparse_interpolate(ctx, values, bound) == f &&
           interpolate_known_support(ctx, values, support) == f;
}

}  // namespace

SelftestOutcome run_selftest(std::ostream& log)
{
    SelftestOutcome outcome;
    SeededRng rng(RngSeed{20240601});
    std::set<Orientation> orientations;
    std::map<int, std::set<ConjugationSide>> sides;

    auto run_check = [&](const std::string& name, int p, const std::function<bool()>& fn) {
        if (!outcome.passed)
            return;
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        if (!ok) {
            outcome.passed = false;
            outcome.first_failure = name + " at p=" + std::to_string(p) + detail;
            log << "FAIL " << outcome.first_failure << '\n';
        }
    };

    for (int p : kPrimes) {
        const CycCtxPtr ctx = cyc_context(p);
        run_check("primitive root and permutation tables", p, [&] { return check_tables(*ctx); });
        run_check("VW = pI", p, [&] { return check_vw(ctx); });
        run_check("field axioms and sigma automorphism", p, [&] { return check_field(ctx, rng); });
        run_check("orientation probe", p, [&] {
            orientations.insert(phi_orientation(ctx));
            return true;
        });
        run_check("phi bijection and multiplicativity", p, [&] { return check_phi(ctx, rng); });
        run_check("sum of Y^j = -I, AB antidiagonal, Y^j row formula", p,
                  [&] { return check_structure(ctx); });
        run_check("L_0 identity A phi(a) B = (P - Q) antidiag", p, [&] { return check_l0(ctx, rng, sides[p]); });
        run_check("sparse and known-support interpolation", p, [&] { return check_interpolation(ctx, rng); });
        run_check("det_mul, mc_mul and Freivalds against the schoolbook product", p,
                  [&] { return check_products(ctx, rng); });
        if (!outcome.passed)
            return outcome;
        log << "p=" << p << ": ok\n";
    }

    log << "VW = pI verified for p ∈ {3,5,7,11,13}\n";
    log << "phi orientation: ";
    for (Orientation o : orientations)
        log << to_string(o) << (o == Orientation::Reversed ? " (phi(f*g) = phi(g) phi(f))" : " (phi(f*g) = phi(f) phi(g))");
    log << '\n';
    log << "L_0 conjugation side:";
    for (const auto& [p, found] : sides) {
        log << " p=" << p << ':';
        for (ConjugationSide s : found)
            log << ' ' << to_string(s);
    }
    log << '\n';
    if (orientations.size() != 1) {
        outcome.passed = false;
        outcome.first_failure = "orientation differs between primes";
    }
    log << (outcome.passed ? "selftest passed\n" : "selftest FAILED\n");
    return outcome;
}

}  // namespace skewmm::cli
