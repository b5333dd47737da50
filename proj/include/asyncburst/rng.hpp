#ifndef ASYNCBURST_RNG_HPP
#define ASYNCBURST_RNG_HPP

#include <array>
#include <cstdint>

namespace asyncburst {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Trial t / object (a,m) randomness is addressed by a 64-bit stream id, so
// draws are independent of scheduling and worker count.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    Philox4x32(std::uint64_t key, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(key)),
          key1_(static_cast<std::uint32_t>(key >> 32)),
          stream_(stream) {}

    Block block(std::uint64_t counter) const;

private:
    std::uint32_t key0_, key1_;
    std::uint64_t stream_;
};

// Buffered stream of uniform values on top of Philox blocks.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream)
        : philox_(seed, stream), counter_(0), have_(0) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // uniform on [0,1) with 53 random bits
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased uniform on [0, bound)
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return next_double() < p; }

private:
    Philox4x32 philox_;
    std::uint64_t counter_;
    Philox4x32::Block buf_{};
    int have_;
};

namespace stream {

// Stream id layout: purpose(4) | trial(32) | block(16) | message(12).
enum Purpose : std::uint64_t {
    codebook = 1,
    hypothesis = 2,
    noise = 3,
    derive = 4,
    generic = 5,
};

inline std::uint64_t id(Purpose purpose, std::uint64_t trial, std::uint64_t block = 0,
                        std::uint64_t message = 0) {
    return (static_cast<std::uint64_t>(purpose) << 60) | ((trial & 0xffffffffULL) << 28) |
           ((block & 0xffffULL) << 12) | (message & 0xfffULL);
}

} // namespace stream

} // namespace asyncburst

#endif
