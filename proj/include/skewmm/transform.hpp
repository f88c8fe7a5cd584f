#pragma once

#include "skewmm/cyclotomic.hpp"
#include "skewmm/matrix.hpp"
#include "skewmm/skewpoly.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace skewmm {

/// Square matrix over Q(beta), row-major.
struct CycMatrix {
    std::size_t n = 0;
    std::vector<CycElem> entries;

    const CycElem& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// V(i, j) = v_{i+j-1}, indices cyclic in {1..p-1}.
CycMatrix build_V(const CycCtxPtr& ctx);
/// W(i, j) = 1 / v_{i+j-1} - 1. V * W = p * I.
CycMatrix build_W(const CycCtxPtr& ctx);
CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);

/// phi^{-1}: the skew polynomial sum_j mu_{j+1} x^j with
/// mu = (1/p) * W * (C * (v_1 .. v_{p-1})^T).
SkewPoly mat_to_skew(const CycCtxPtr& ctx, const RatMatrix& c);

/// phi: row i of the result holds the normal coordinates of f(v_i).
RatMatrix skew_to_mat(const SkewPoly& f);

/// Which ordering of phi(f) and phi(g) reproduces phi(f * g).
enum class Orientation {
    Direct,    // phi(f * g) = phi(f) phi(g)
    Reversed,  // phi(f * g) = phi(g) phi(f)
};

std::string_view to_string(Orientation o);

/// Probes the product convention with f = x, g = beta x^2 and caches the
/// answer per prime. Throws InternalError if neither ordering matches.
Orientation phi_orientation(const CycCtxPtr& ctx);

/// Product of the matrices in the order that matches phi(f * g).
RatMatrix oriented_product(Orientation o, const RatMatrix& phi_f, const RatMatrix& phi_g);

}  // namespace skewmm
