#include "skewmm/random.hpp"

#include "skewmm/errors.hpp"

#include <limits>

namespace skewmm {

bool SeededRng::next_bit()
{
    if (bits_left_ == 0) {
        word_ = engine_();
        bits_left_ = 64;
    }
    --bits_left_;
    return ((word_ >> bits_left_) & 1U) != 0;
}

std::uint64_t SeededRng::next_word() { return engine_(); }

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw DomainError("SeededRng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t n = span + 1;
    // Largest multiple of n that fits; draws at or above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t w;
    do {
        w = engine_();
    } while (w > limit);
    return lo + static_cast<std::int64_t>(w % n);
}

}  // namespace skewmm
