#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cyclelab {

// Deterministic seeded stream. Stream derivation is part of the external
// contract and is bit-exact:
//
//   state(seed, index) = splitmix64(splitmix64(seed ^ (0x9E3779B97F4A7C15 * (index + 1))))
//
// where splitmix64(z) is the standard finalizer
//   z += 0x9E3779B97F4A7C15; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31);
//
// The resulting 64-bit state seeds a std::mt19937_64. Uniform integers are
// drawn by rejection (no modulo bias) and doubles as (x >> 11) * 2^-53, so
// identical (seed, index) reproduces identical output on any platform.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t index)
        : seed_(seed), index_(index), eng_(mix(seed, index)) {}

    static std::uint64_t splitmix64(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        return splitmix64(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t index() const { return index_; }

    // Independent child stream; children of distinct indices never collide
    // with this stream or with each other.
    RngStream substream(std::uint64_t child_index) const {
        return RngStream(mix(seed_, index_), child_index);
    }

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= threshold) return x % bound;
        }
    }

    long long below_ll(long long bound) { return static_cast<long long>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::mt19937_64 eng_;
};

}  // namespace cyclelab
