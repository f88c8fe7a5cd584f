#pragma once

#include "skewmm/rational.hpp"

#include <memory>
#include <span>
#include <vector>

namespace skewmm {

// Arithmetic in the cyclotomic field Q(beta), beta a primitive p-th root of
// unity, p an odd prime.
//
// Elements are stored in the basis {beta, beta^2, ..., beta^(p-1)}; the
// constant 1 is -(beta + ... + beta^(p-1)). In this basis the automorphism
// sigma: beta -> beta^r and the change to the normal basis
// v_i = beta^(r^(i-1)) are coordinate permutations.

bool is_prime(long long n);

/// Smallest primitive root of Z_p. Throws DomainError unless p is an odd prime.
int find_primitive_root(int p);

/// Per-prime tables. Immutable after construction; share through CycCtxPtr.
class CycCtx {
public:
    /// Throws DomainError unless p is an odd prime.
    explicit CycCtx(int p);

    int p() const noexcept { return p_; }
    /// Field degree over Q, equal to p - 1.
    int degree() const noexcept { return p_ - 1; }
    /// Primitive root r.
    int root() const noexcept { return r_; }

    /// r^e mod p for any integer e (reduced mod p-1).
    int pow_r(long long e) const;
    /// Discrete log: the e in [0, p-2] with r^e = a (mod p); a not divisible by p.
    int log_r(long long a) const;

    /// q(i) in [1, p-1] with r^(q(i)-1) = i (mod p), for i in [1, p-1].
    int q(int i) const { return q_perm_.at(static_cast<std::size_t>(i - 1)); }
    /// s(i) in [1, p-1] with r^(s(i)-1) = -i (mod p).
    int s(int i) const { return s_perm_.at(static_cast<std::size_t>(i - 1)); }
    /// The index k with r^(k-1) = p-1 (mod p).
    int k_index() const noexcept { return k_idx_; }

    std::span<const int> q_perm() const noexcept { return q_perm_; }
    std::span<const int> s_perm() const noexcept { return s_perm_; }

private:
    int p_;
    int r_;
    std::vector<int> pow_;  // pow_[e] = r^e mod p, e in [0, p-2]
    std::vector<int> log_;  // log_[a] = e, a in [1, p-1]
    std::vector<int> q_perm_;
    std::vector<int> s_perm_;
    int k_idx_;
};

using CycCtxPtr = std::shared_ptr<const CycCtx>;

/// Shared context for p; one instance per prime per process.
CycCtxPtr cyc_context(int p);

class CycElem;
bool is_zero(const CycElem& a);
CycElem inverse(const CycElem& a);
int pivot_weight(const CycElem& a);

/// Element of Q(beta). Coordinates are canonical rationals, so equality is
/// exact coordinatewise comparison.
class CycElem {
public:
    /// Zero of the field.
    explicit CycElem(CycCtxPtr ctx);
    /// coeffs[k-1] is the coefficient of beta^k, k in [1, p-1].
    CycElem(CycCtxPtr ctx, std::vector<Rational> coeffs);

    static CycElem one(CycCtxPtr ctx);
    static CycElem from_rational(CycCtxPtr ctx, const Rational& c);
    /// beta^k for any integer k.
    static CycElem beta_power(CycCtxPtr ctx, long long k);
    /// Inverse of normal_coords(): sum_j coords[j-1] * v_j.
    static CycElem from_normal_coords(CycCtxPtr ctx, std::span<const Rational> coords);

    const CycCtxPtr& context() const noexcept { return ctx_; }
    int p() const noexcept { return ctx_->p(); }

    /// Coefficient of beta^k, k in [1, p-1].
    const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// True when the element lies in Q (all coordinates equal).
    bool is_rational() const;
    /// Number of nonzero coordinates.
    int support_size() const;

    /// sigma^k, k any integer. Pure permutation: beta^i -> beta^(i r^k).
    CycElem sigma(long long k) const;
    /// this * beta^k, a cyclic shift of coordinates followed by reduction.
    CycElem times_beta_power(long long k) const;
    /// Throws DivisionByZero for zero.
    CycElem inverse() const;

    /// Coordinates in the normal basis {v_1, ..., v_{p-1}}: normal coordinate
    /// j equals the beta-power coordinate at r^(j-1) mod p.
    std::vector<Rational> normal_coords() const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& b);
    CycElem& operator-=(const CycElem& b);
    CycElem& operator*=(const Rational& c);

    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(CycElem a, const Rational& c) { return a *= c; }
    friend CycElem operator*(const Rational& c, CycElem a) { return a *= c; }
    /// Field product: cyclic convolution of exponents mod p, then
    /// beta^0 -> -(beta + ... + beta^(p-1)).
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

    friend bool operator==(const CycElem& a, const CycElem& b);

private:
    CycCtxPtr ctx_;
    std::vector<Rational> coeffs_;
};

/// v_1^i = beta^(i mod p); the all-(-1) vector when p divides i.
CycElem power_of_v1(const CycCtxPtr& ctx, long long i);

/// Normal-basis coordinates of v_1^i, i.e. the evaluation point of index i.
std::vector<Rational> evaluation_point_coords(const CycCtx& ctx, long long i);

/// Throws DimensionError when the operands were built for different primes.
void require_same_field(const CycElem& a, const CycElem& b);

}  // namespace skewmm
