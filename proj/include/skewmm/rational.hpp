#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace skewmm {

/// Exact rational. GMP keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Throws DivisionByZero on zero.
Rational inverse(const Rational& x);

/// Pivot preference for exact elimination; rationals are all equally cheap.
inline int pivot_weight(const Rational&) { return 0; }

/// Canonical text: "n" for integers, otherwise "n/d" with d > 1.
std::string to_string(const Rational& x);

/// Strict parser for the canonical text form. Rejects "+1", "-0", "01",
/// "3/1", "2/4", "1/-2" and anything with surrounding characters.
std::optional<Rational> parse_canonical_rational(std::string_view text);

}  // namespace skewmm
