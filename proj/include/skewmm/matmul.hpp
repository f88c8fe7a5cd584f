#pragma once

#include "skewmm/matrix.hpp"
#include "skewmm/random.hpp"

#include <chrono>
#include <cstdint>
#include <string_view>

namespace skewmm {

enum class Algorithm { Naive, Deterministic, MonteCarlo };

std::string_view to_string(Algorithm a);

struct MulReport {
    Algorithm algorithm = Algorithm::Naive;
    /// Sumset size (deterministic) or final sparsity bound T (Monte Carlo).
    int t_used = 0;
    /// Doubling rounds, Monte Carlo only.
    int iterations = 0;
    /// All counted rational multiplications of the call.
    std::uint64_t rational_mul_count = 0;
    /// Multiplications spent evaluating the product polynomial.
    std::uint64_t eval_rational_mul_count = 0;
    /// Monte Carlo only: verification failed at T = p-1 and the schoolbook
    /// product was returned instead.
    bool fallback = false;
    std::chrono::nanoseconds wall_time{0};
};

struct MulResult {
    RatMatrix product;
    MulReport report;
};

/// Schoolbook product through the rectangular-multiply hook.
RatMatrix naive_mul(const RatMatrix& a, const RatMatrix& b,
                    const RectMultiply& mul = default_rect_multiply());

/// Deterministic product via skew polynomials: convert both factors, take the
/// sumset of their supports as the product support, evaluate the product
/// polynomial at |S| points as points * A * B, interpolate on that known
/// support and convert back. Inputs must be (p-1)x(p-1) with p an odd prime.
MulResult det_mul(const RatMatrix& a, const RatMatrix& b,
                  const RectMultiply& mul = default_rect_multiply());

enum class Verdict { Equal, NotEqual };

/// ceil(log2(1/mu)) for mu in (0,1).
int freivalds_rounds(double mu);

/// Randomized test of m == a * b drawing 0/1 vectors from `rng`. Never
/// reports NotEqual for a correct product.
Verdict freivalds(const RatMatrix& m, const RatMatrix& a, const RatMatrix& b, double mu,
                  SeededRng& rng);
Verdict freivalds(const RatMatrix& m, const RatMatrix& a, const RatMatrix& b, double mu,
                  RngSeed seed);

/// Monte Carlo product: doubles the sparsity bound T = 1, 2, 4, ... (capped
/// at p-1), interpolating the product from 2T evaluations and accepting the
/// first candidate that passes Freivalds with mu = nu / ceil(log2(p-1)).
/// Correct with probability >= 1 - nu.
MulResult mc_mul(const RatMatrix& a, const RatMatrix& b, double nu, RngSeed seed,
                 const RectMultiply& mul = default_rect_multiply());

}  // namespace skewmm
