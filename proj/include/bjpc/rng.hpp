#ifndef BJPC_RNG_HPP
#define BJPC_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace bjpc {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

}  // namespace detail

// Seeded, stream-splittable generator (xoshiro256++ core). The same
// (seed, stream_id) pair always reproduces the same draw sequence, and
// distinct stream ids give statistically independent streams, so Monte Carlo
// replication r of experiment e can run on substream(e, r) in any order.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {
        std::uint64_t sm = seed;
        std::uint64_t mixed = detail::splitmix64(sm) ^ (stream_id * 0xD2B74407B1CE6E93ULL);
        std::uint64_t sm2 = mixed;
        for (auto& word : state_) word = detail::splitmix64(sm2);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    // Derived stream for sub-experiment a, replication b.
    RngStream substream(std::uint64_t a, std::uint64_t b = 0) const {
        std::uint64_t sm = stream_ ^ (a * 0x9E3779B97F4A7C15ULL);
        std::uint64_t h = detail::splitmix64(sm);
        sm = h ^ (b * 0xC2B2AE3D27D4EB4FULL);
        return RngStream(seed_, detail::splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential with the given rate; strictly positive.
    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, n), n >= 1 (Lemire rejection method).
    std::uint64_t uniform_below(std::uint64_t n) {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (low < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
};

}  // namespace bjpc

#endif  // BJPC_RNG_HPP
