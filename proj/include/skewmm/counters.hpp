#pragma once

#include <cstdint>

namespace skewmm {

// Per-thread tally of rational multiplications. The dense matrix kernels add
// one per scalar product; field multiplication adds one per coordinate
// product. Counts are deterministic functions of the inputs.

std::uint64_t rational_mul_total() noexcept;
void add_rational_muls(std::uint64_t n) noexcept;

/// Counts multiplications performed on this thread while alive.
class MulCountScope {
public:
    MulCountScope() noexcept : start_(rational_mul_total()) {}
    std::uint64_t count() const noexcept { return rational_mul_total() - start_; }

private:
    std::uint64_t start_;
};

}  // namespace skewmm
