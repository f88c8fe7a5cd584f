#include "skewmm/cyclotomic.hpp"

#include "skewmm/counters.hpp"
#include "skewmm/errors.hpp"
#include "skewmm/linsolve.hpp"

#include <map>
#include <mutex>
#include <string>

namespace skewmm {

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

long long mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

void require_odd_prime(int p)
{
    if (p < 3 || !is_prime(p))
        throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

int find_primitive_root(int p)
{
    require_odd_prime(p);
    for (int r = 2; r < p; ++r) {
        long long x = 1;
        int order = 0;
        do {
            x = x * r % p;
            ++order;
        } while (x != 1);
        if (order == p - 1)
            return r;
    }
    throw InternalError("no primitive root found for p = " + std::to_string(p));
}

CycCtx::CycCtx(int p) : p_(p), r_(find_primitive_root(p))
{
    const auto n = static_cast<std::size_t>(p - 1);
    pow_.resize(n);
    log_.assign(static_cast<std::size_t>(p), -1);
    long long x = 1;
    for (std::size_t e = 0; e < n; ++e) {
        pow_[e] = static_cast<int>(x);
        log_[static_cast<std::size_t>(x)] = static_cast<int>(e);
        x = x * r_ % p;
    }
    q_perm_.resize(n);
    s_perm_.resize(n);
    for (int i = 1; i < p; ++i) {
        q_perm_[static_cast<std::size_t>(i - 1)] = log_[static_cast<std::size_t>(i)] + 1;
        s_perm_[static_cast<std::size_t>(i - 1)] = log_[static_cast<std::size_t>(p - i)] + 1;
    }
    k_idx_ = log_[static_cast<std::size_t>(p - 1)] + 1;
}

int CycCtx::pow_r(long long e) const
{
    return pow_[static_cast<std::size_t>(mod(e, p_ - 1))];
}

int CycCtx::log_r(long long a) const
{
    const long long m = mod(a, p_);
    if (m == 0)
        throw DomainError("log_r: argument divisible by p");
    return log_[static_cast<std::size_t>(m)];
}

CycCtxPtr cyc_context(int p)
{
    static std::mutex mutex;
    static std::map<int, CycCtxPtr> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(p);
    if (it != cache.end())
        return it->second;
    auto ctx = std::make_shared<const CycCtx>(p);
    cache.emplace(p, ctx);
    return ctx;
}

// ---------------------------------------------------------------------------

CycElem::CycElem(CycCtxPtr ctx)
    : ctx_(std::move(ctx)), coeffs_(static_cast<std::size_t>(ctx_->degree()))
{
}

CycElem::CycElem(CycCtxPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(ctx_->degree()))
        throw DimensionError("CycElem: expected " + std::to_string(ctx_->degree()) + " coordinates");
}

CycElem CycElem::one(CycCtxPtr ctx)
{
    return from_rational(std::move(ctx), 1);
}

CycElem CycElem::from_rational(CycCtxPtr ctx, const Rational& c)
{
    const auto n = static_cast<std::size_t>(ctx->degree());
    return CycElem(std::move(ctx), std::vector<Rational>(n, -c));
}

CycElem CycElem::beta_power(CycCtxPtr ctx, long long k)
{
    const long long e = mod(k, ctx->p());
    if (e == 0)
        return one(std::move(ctx));
    CycElem r(std::move(ctx));
    r.coeffs_[static_cast<std::size_t>(e - 1)] = 1;
    return r;
}

CycElem CycElem::from_normal_coords(CycCtxPtr ctx, std::span<const Rational> coords)
{
    CycElem r(std::move(ctx));
    if (coords.size() != r.coeffs_.size())
        throw DimensionError("from_normal_coords: wrong coordinate count");
    for (std::size_t j = 0; j < coords.size(); ++j)
        r.coeffs_[static_cast<std::size_t>(r.ctx_->pow_r(static_cast<long long>(j)) - 1)] = coords[j];
    return r;
}

bool CycElem::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!skewmm::is_zero(c))
            return false;
    return true;
}

bool CycElem::is_rational() const
{
    for (const auto& c : coeffs_)
        if (c != coeffs_.front())
            return false;
    return true;
}

int CycElem::support_size() const
{
    int n = 0;
    for (const auto& c : coeffs_)
        n += skewmm::is_zero(c) ? 0 : 1;
    return n;
}

CycElem CycElem::sigma(long long k) const
{
    const int p = ctx_->p();
    const long long m = ctx_->pow_r(k);
    CycElem r(ctx_);
    for (int i = 1; i < p; ++i)
        r.coeffs_[static_cast<std::size_t>(i * m % p - 1)] = coeffs_[static_cast<std::size_t>(i - 1)];
    return r;
}

CycElem CycElem::times_beta_power(long long k) const
{
    const int p = ctx_->p();
    const long long shift = mod(k, p);
    if (shift == 0)
        return *this;
    std::vector<Rational> acc(static_cast<std::size_t>(p));
    for (int i = 1; i < p; ++i)
        acc[static_cast<std::size_t>((i + shift) % p)] = coeffs_[static_cast<std::size_t>(i - 1)];
    CycElem r(ctx_);
    const Rational& c0 = acc[0];
    for (int i = 1; i < p; ++i)
        r.coeffs_[static_cast<std::size_t>(i - 1)] = acc[static_cast<std::size_t>(i)] - c0;
    return r;
}

CycElem CycElem::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero in Q(beta)");
    const int n = ctx_->degree();

    // c * beta^k
    if (support_size() == 1) {
        for (int k = 1; k <= n; ++k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k - 1)];
            if (!skewmm::is_zero(c)) {
                add_rational_muls(1);
                return beta_power(ctx_, -k) * skewmm::inverse(c);
            }
        }
    }
    // Rational element -c, all coordinates equal to c.
    if (is_rational()) {
        add_rational_muls(1);
        return from_rational(ctx_, -skewmm::inverse(coeffs_.front()));
    }

    // Column j of the multiplication matrix holds the coordinates of a * beta^j.
    const auto un = static_cast<std::size_t>(n);
    std::vector<Rational> m(un * un);
    for (int j = 1; j <= n; ++j) {
        const CycElem col = times_beta_power(j);
        for (std::size_t i = 0; i < un; ++i)
            m[i * un + static_cast<std::size_t>(j - 1)] = col.coeffs_[i];
    }
    std::vector<Rational> rhs(un, Rational(-1));
    add_rational_muls(un * un * un / 3);
    return CycElem(ctx_, linsolve::solve(m, rhs, un));
}

std::vector<Rational> CycElem::normal_coords() const
{
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = coeffs_[static_cast<std::size_t>(ctx_->pow_r(static_cast<long long>(j)) - 1)];
    return out;
}

CycElem CycElem::operator-() const
{
    CycElem r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CycElem& CycElem::operator+=(const CycElem& b)
{
    require_same_field(*this, b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += b.coeffs_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& b)
{
    require_same_field(*this, b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= b.coeffs_[i];
    return *this;
}

CycElem& CycElem::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    add_rational_muls(coeffs_.size());
    return *this;
}

CycElem operator*(const CycElem& a, const CycElem& b)
{
    require_same_field(a, b);
    const int p = a.p();
    const auto up = static_cast<std::size_t>(p);
    std::vector<Rational> acc(up);
    Rational prod;
    std::uint64_t muls = 0;
    for (std::size_t i = 1; i < up; ++i) {
        const Rational& ai = a.coeffs_[i - 1];
        if (is_zero(ai))
            continue;
        for (std::size_t j = 1; j < up; ++j) {
            const Rational& bj = b.coeffs_[j - 1];
            if (is_zero(bj))
                continue;
            mpq_mul(prod.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
            acc[(i + j) % up] += prod;
            ++muls;
        }
    }
    add_rational_muls(muls);
    CycElem r(a.ctx_);
    for (std::size_t k = 1; k < up; ++k)
        r.coeffs_[k - 1] = acc[k] - acc[0];
    return r;
}

bool operator==(const CycElem& a, const CycElem& b)
{
    return a.p() == b.p() && a.coeffs_ == b.coeffs_;
}

bool is_zero(const CycElem& a) { return a.is_zero(); }

CycElem inverse(const CycElem& a) { return a.inverse(); }

int pivot_weight(const CycElem& a) { return a.support_size(); }

void require_same_field(const CycElem& a, const CycElem& b)
{
    if (a.p() != b.p())
        throw DimensionError("Q(beta) elements for different primes: p = " + std::to_string(a.p()) +
                             " and p = " + std::to_string(b.p()));
}

CycElem power_of_v1(const CycCtxPtr& ctx, long long i)
{
    return CycElem::beta_power(ctx, i);
}

std::vector<Rational> evaluation_point_coords(const CycCtx& ctx, long long i)
{
    const long long m = mod(i, ctx.p());
    const auto n = static_cast<std::size_t>(ctx.degree());
    if (m == 0)
        return std::vector<Rational>(n, Rational(-1));
    std::vector<Rational> row(n);
    row[static_cast<std::size_t>(ctx.q(static_cast<int>(m)) - 1)] = 1;
    return row;
}

}  // namespace skewmm
