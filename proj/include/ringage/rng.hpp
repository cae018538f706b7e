#pragma once

// Deterministic random number machinery. The generator is xoshiro256++ with
// state derived from a 64-bit seed via splitmix64; substreams for replications
// and sweep cells are derived by hashing the seed with stream labels. All
// transforms (uniform doubles, exponentials, bounded integers) are written out
// explicitly so results are identical on any platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ringage {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stable stream derivation: fold labels into the seed one splitmix step each.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64_next(s);
    s ^= a + 0x632BE59BD9B4E019ULL;
    h ^= splitmix64_next(s);
    s ^= b + 0x9E3779B97F4A7C15ULL;
    h ^= splitmix64_next(s);
    s ^= c + 0xD1B54A32D192ED03ULL;
    h ^= splitmix64_next(s);
    return h;
}

class Xoshiro256pp {
  public:
    static constexpr const char* algorithm_name = "xoshiro256++ (seeded via splitmix64)";

    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform double in (0, 1]; never returns 0 so -log is finite
    double next_unit() {
        std::uint64_t bits = next() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    double next_exponential(double rate) { return -std::log(next_unit()) / rate; }

    // uniform integer in [0, bound) via 128-bit multiply (Lemire, unbiased
    // enough at 64 bits for any bound we use; bias < 2^-53 per draw)
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// k distinct indices from {0, .., n-1}, partial Fisher-Yates over an index
// vector. Deterministic per rng state; output sorted ascending.
inline std::vector<std::int64_t> sample_distinct_indices(Xoshiro256pp& rng, std::int64_t n,
                                                         std::int64_t k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_distinct_indices: need 0 <= k <= n");
    std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + rng.next_below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<std::int64_t> out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ringage
