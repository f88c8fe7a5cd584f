#include "skewmm/skewpoly.hpp"

#include "skewmm/errors.hpp"
#include "skewmm/linsolve.hpp"

#include <string>

namespace skewmm {

SupportSet sumset(const SupportSet& lhs, const SupportSet& rhs, int modulus)
{
    SupportSet out;
    for (int a : lhs)
        for (int b : rhs)
            out.insert((a + b) % modulus);
    return out;
}

SkewPoly::SkewPoly(CycCtxPtr ctx) : ctx_(std::move(ctx)) {}

SkewPoly SkewPoly::monomial(const CycElem& c, long long e)
{
    SkewPoly f(c.context());
    f.set_coeff(e, c);
    return f;
}

SkewPoly SkewPoly::x_power(CycCtxPtr ctx, long long e)
{
    return monomial(CycElem::one(std::move(ctx)), e);
}

int SkewPoly::reduce_exponent(long long e) const
{
    const long long m = ctx_->p() - 1;
    long long r = e % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

SupportSet SkewPoly::support() const
{
    SupportSet s;
    for (const auto& [e, c] : terms_)
        s.insert(e);
    return s;
}

CycElem SkewPoly::coeff(long long e) const
{
    auto it = terms_.find(reduce_exponent(e));
    return it == terms_.end() ? CycElem(ctx_) : it->second;
}

void SkewPoly::set_coeff(long long e, CycElem c)
{
    if (c.p() != ctx_->p())
        throw DimensionError("SkewPoly: coefficient from a different field");
    const int k = reduce_exponent(e);
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_.insert_or_assign(k, std::move(c));
}

SkewPoly SkewPoly::operator-() const
{
    SkewPoly f(ctx_);
    for (const auto& [e, c] : terms_)
        f.terms_.emplace(e, -c);
    return f;
}

namespace {

void require_same_ring(const SkewPoly& f, const SkewPoly& g)
{
    if (f.context()->p() != g.context()->p())
        throw DimensionError("skew polynomials over different fields: p = " +
                             std::to_string(f.context()->p()) + " and p = " +
                             std::to_string(g.context()->p()));
}

}  // namespace

SkewPoly& SkewPoly::operator+=(const SkewPoly& g)
{
    require_same_ring(*this, g);
    for (const auto& [e, c] : g.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& g)
{
    return *this += -g;
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g)
{
    require_same_ring(f, g);
    const int m = f.ctx_->p() - 1;
    std::map<int, CycElem> acc;
    for (const auto& [s, a] : f.terms_) {
        for (const auto& [u, b] : g.terms_) {
            CycElem term = a * b.sigma(s);
            const int e = (s + u) % m;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(term));
            else
                it->second += term;
        }
    }
    SkewPoly h(f.ctx_);
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            h.terms_.emplace(e, std::move(c));
    return h;
}

SkewPoly operator*(const Rational& c, const SkewPoly& f)
{
    SkewPoly h(f.ctx_);
    if (is_zero(c))
        return h;
    for (const auto& [e, a] : f.terms_)
        h.terms_.emplace(e, a * c);
    return h;
}

bool operator==(const SkewPoly& f, const SkewPoly& g)
{
    return f.ctx_->p() == g.ctx_->p() && f.terms_ == g.terms_;
}

SupportSet sumset(const SkewPoly& f, const SkewPoly& g)
{
    require_same_ring(f, g);
    return sumset(f.support(), g.support(), f.context()->p() - 1);
}

CycElem evaluate(const SkewPoly& f, const CycElem& b)
{
    if (b.p() != f.context()->p())
        throw DimensionError("evaluate: point from a different field");
    CycElem out(f.context());
    for (const auto& [e, a] : f.terms())
        out += a * b.sigma(e);
    return out;
}

RatMatrix evaluation_points(const CycCtx& ctx, long long first, long long count)
{
    const auto n = static_cast<std::size_t>(ctx.degree());
    RatMatrix pts(static_cast<std::size_t>(count), n);
    for (long long l = 0; l < count; ++l) {
        auto row = evaluation_point_coords(ctx, first + l);
        for (std::size_t j = 0; j < n; ++j)
            pts(static_cast<std::size_t>(l), j) = std::move(row[j]);
    }
    return pts;
}

std::vector<CycElem> batch_evaluate(const CycCtxPtr& ctx, const RatMatrix& points,
                                    const RatMatrix& inner, const RatMatrix& outer,
                                    const RectMultiply& mul)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    if (points.cols() != n || inner.rows() != n || inner.cols() != n || outer.rows() != n ||
        outer.cols() != n)
        throw DimensionError("batch_evaluate: expected width " + std::to_string(n));
    const RatMatrix rows = mul(mul(points, inner), outer);
    std::vector<CycElem> out;
    out.reserve(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        out.push_back(CycElem::from_normal_coords(ctx, rows.row(i)));
    return out;
}

SkewPoly interpolate_known_support(const CycCtxPtr& ctx, std::span<const CycElem> values,
                                   const SupportSet& support)
{
    const std::size_t t = support.size();
    if (values.size() < t)
        throw DimensionError("interpolate_known_support: need " + std::to_string(t) +
                             " values, got " + std::to_string(values.size()));
    const int m = ctx->p() - 1;
    for (int e : support)
        if (e < 0 || e >= m)
            throw DomainError("interpolate_known_support: exponent out of range");
    SkewPoly f(ctx);
    if (t == 0)
        return f;

    // Row l, column j: v_{e_j+1}^l = beta^(l * r^(e_j)).
    std::vector<CycElem> vand;
    vand.reserve(t * t);
    for (std::size_t l = 0; l < t; ++l)
        for (int e : support)
            vand.push_back(CycElem::beta_power(ctx, static_cast<long long>(l) * ctx->pow_r(e)));
    std::vector<CycElem> rhs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(t));
    for (const auto& v : rhs)
        if (v.p() != ctx->p())
            throw DimensionError("interpolate_known_support: value from a different field");

    std::vector<CycElem> coeffs;
    try {
        coeffs = linsolve::solve(vand, rhs, t);
    } catch (const SingularSystem&) {
        throw InternalError("interpolate_known_support: singular Vandermonde system");
    }
    std::size_t j = 0;
    for (int e : support)
        f.set_coeff(e, std::move(coeffs[j++]));
    return f;
}

SkewPoly sparse_interpolate(const CycCtxPtr& ctx, std::span<const CycElem> values, int bound)
{
    const int m = ctx->p() - 1;
    if (bound < 0 || bound > m)
        throw DomainError("sparse_interpolate: bound must lie in [0, p-1]");
    const auto T = static_cast<std::size_t>(bound);
    if (values.size() < 2 * T)
        throw DimensionError("sparse_interpolate: need " + std::to_string(2 * T) + " values, got " +
                             std::to_string(values.size()));
    SkewPoly zero(ctx);
    if (T == 0)
        return zero;

    // A_T(j, k) = a_{T-1-j+k}
    std::vector<CycElem> hankel;
    hankel.reserve(T * T);
    for (std::size_t j = 0; j < T; ++j)
        for (std::size_t k = 0; k < T; ++k)
            hankel.push_back(values[T - 1 - j + k]);
    const std::size_t t = linsolve::rank(std::move(hankel), T, T);
    if (t == 0)
        return zero;

    // sum_k a_{j+k} lambda_k = -a_{j+t}, j = 0 .. t-1
    std::vector<CycElem> sys;
    std::vector<CycElem> rhs;
    sys.reserve(t * t);
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t k = 0; k < t; ++k)
            sys.push_back(values[j + k]);
        rhs.push_back(-values[j + t]);
    }
    std::vector<CycElem> lambda;
    try {
        lambda = linsolve::solve(sys, rhs, t);
    } catch (const SingularSystem&) {
        throw InterpolationError("sparse_interpolate: locator system is singular");
    }

    // Roots of Lambda_t among v_1 .. v_{p-1}, by Horner at each candidate.
    SupportSet exponents;
    const CycElem one = CycElem::one(ctx);
    for (int i = 1; i <= m; ++i) {
        const int node = ctx->pow_r(i - 1);  // v_i = beta^node
        CycElem acc = one;
        for (std::size_t k = t; k-- > 0;)
            acc = acc.times_beta_power(node) + lambda[k];
        if (acc.is_zero())
            exponents.insert(i - 1);
    }
    if (exponents.size() != t)
        throw InterpolationError("sparse_interpolate: locator has " + std::to_string(exponents.size()) +
                                 " roots among the normal basis, expected " + std::to_string(t));
    return interpolate_known_support(ctx, values, exponents);
}

}  // namespace skewmm
