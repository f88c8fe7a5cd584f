#pragma once

#include <cstdint>
#include <random>

namespace skewmm {

/// Explicit 64-bit seed for every randomized routine.
struct RngSeed {
    std::uint64_t value = 0;
};

/// Deterministic random source, generator "mt19937_64/v1".
///
/// std::mt19937_64 is fully specified by the standard, so its output is
/// identical on every conforming implementation. The library distributions
/// are not, hence the hand-written draws below:
///  - next_bit() consumes each 64-bit word most-significant bit first;
///  - uniform(lo, hi) uses rejection sampling on whole words.
/// Bit draws and integer draws share the underlying word stream.
class SeededRng {
public:
    static constexpr const char* kName = "mt19937_64/v1";

    explicit SeededRng(RngSeed seed) : engine_(seed.value) {}

    bool next_bit();
    std::uint64_t next_word();
    /// Uniform integer in [lo, hi]; requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
    std::uint64_t word_ = 0;
    int bits_left_ = 0;
};

}  // namespace skewmm
