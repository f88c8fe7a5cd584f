#include "skewmm/transform.hpp"

#include "skewmm/errors.hpp"

#include <map>
#include <mutex>
#include <string>

namespace skewmm {

CycMatrix build_V(const CycCtxPtr& ctx)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    CycMatrix v{n, {}};
    v.entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v.entries.push_back(CycElem::beta_power(ctx, ctx->pow_r(static_cast<long long>(i + j))));
    return v;
}

CycMatrix build_W(const CycCtxPtr& ctx)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    const CycElem one = CycElem::one(ctx);
    CycMatrix w{n, {}};
    w.entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w.entries.push_back(
                CycElem::beta_power(ctx, -ctx->pow_r(static_cast<long long>(i + j))) - one);
    return w;
}

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b)
{
    if (a.n != b.n || a.entries.empty())
        throw DimensionError("CycMatrix multiply: dimension mismatch");
    const CycCtxPtr& ctx = a.entries.front().context();
    CycMatrix c{a.n, std::vector<CycElem>(a.n * a.n, CycElem(ctx))};
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k)
            for (std::size_t j = 0; j < a.n; ++j)
                c.entries[i * a.n + j] += a(i, k) * b(k, j);
    return c;
}

namespace {

void require_phi_shape(const CycCtx& ctx, const RatMatrix& c)
{
    const auto n = static_cast<std::size_t>(ctx.degree());
    if (c.rows() != n || c.cols() != n)
        throw DimensionError("expected a " + std::to_string(n) + "x" + std::to_string(n) +
                             " matrix for p = " + std::to_string(ctx.p()) + ", got " +
                             std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
}

}  // namespace

SkewPoly mat_to_skew(const CycCtxPtr& ctx, const RatMatrix& c)
{
    require_phi_shape(*ctx, c);
    const auto n = static_cast<std::size_t>(ctx->degree());

    // b_k = sum_j c_{kj} v_j: row k read as normal coordinates.
    std::vector<CycElem> b;
    b.reserve(n);
    CycElem b_sum(ctx);
    for (std::size_t k = 0; k < n; ++k) {
        b.push_back(CycElem::from_normal_coords(ctx, c.row(k)));
        b_sum += b.back();
    }

    // mu_i = (1/p) sum_k (1/v_{i+k} - 1) b_k; each factor is a monomial minus one.
    const Rational inv_p(1, ctx->p());
    SkewPoly f(ctx);
    for (std::size_t i = 0; i < n; ++i) {
        CycElem mu(ctx);
        for (std::size_t k = 0; k < n; ++k) {
            if (b[k].is_zero())
                continue;
            mu += b[k].times_beta_power(-ctx->pow_r(static_cast<long long>(i + k)));
        }
        mu -= b_sum;
        mu *= inv_p;
        f.set_coeff(static_cast<long long>(i), std::move(mu));
    }
    return f;
}

RatMatrix skew_to_mat(const SkewPoly& f)
{
    const CycCtxPtr& ctx = f.context();
    const auto n = static_cast<std::size_t>(ctx->degree());
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        // f(v_{i+1}) = sum_j mu_j v_{i+1+j}
        CycElem value(ctx);
        for (const auto& [j, mu] : f.terms())
            value += mu.times_beta_power(ctx->pow_r(static_cast<long long>(i) + j));
        auto coords = value.normal_coords();
        for (std::size_t col = 0; col < n; ++col)
            out(i, col) = std::move(coords[col]);
    }
    return out;
}

std::string_view to_string(Orientation o)
{
    return o == Orientation::Direct ? "Direct" : "Reversed";
}

Orientation phi_orientation(const CycCtxPtr& ctx)
{
    static std::mutex mutex;
    static std::map<int, Orientation> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(ctx->p());
        if (it != cache.end())
            return it->second;
    }

    const SkewPoly f = SkewPoly::x_power(ctx, 1);
    const SkewPoly g = SkewPoly::monomial(CycElem::beta_power(ctx, 1), 2);
    const RatMatrix pf = skew_to_mat(f);
    const RatMatrix pg = skew_to_mat(g);
    const RatMatrix pfg = skew_to_mat(f * g);
    const bool direct = pfg == pf * pg;
    const bool reversed = pfg == pg * pf;
    if (direct == reversed)
        throw InternalError("phi orientation probe inconclusive for p = " + std::to_string(ctx->p()) +
                            (direct ? " (probes commute)" : " (no ordering matches)"));
    const Orientation o = direct ? Orientation::Direct : Orientation::Reversed;

    std::lock_guard lock(mutex);
    cache.emplace(ctx->p(), o);
    return o;
}

RatMatrix oriented_product(Orientation o, const RatMatrix& phi_f, const RatMatrix& phi_g)
{
    return o == Orientation::Direct ? phi_f * phi_g : phi_g * phi_f;
}

}  // namespace skewmm
