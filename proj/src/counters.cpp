#include "skewmm/counters.hpp"

namespace skewmm {

namespace {
thread_local std::uint64_t g_rational_muls = 0;
}

std::uint64_t rational_mul_total() noexcept { return g_rational_muls; }

void add_rational_muls(std::uint64_t n) noexcept { g_rational_muls += n; }

}  // namespace skewmm
