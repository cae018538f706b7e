#pragma once

// Jammer placement strategies and the placement-quality objectives built on
// the analytic engine: split age for a single cut, whole-system average age,
// and the ring total-age difference that drives the ordering results.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringage/analytic.hpp"
#include "ringage/model.hpp"
#include "ringage/rng.hpp"

namespace ringage {

enum class StrategyKind { Equidistant, Adjacent, Random };

inline const char* to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::Equidistant: return "equidistant";
        case StrategyKind::Adjacent: return "adjacent";
        case StrategyKind::Random: return "random";
    }
    return "?";
}

inline StrategyKind strategy_from_string(const std::string& s) {
    if (s == "equidistant") return StrategyKind::Equidistant;
    if (s == "adjacent") return StrategyKind::Adjacent;
    if (s == "random") return StrategyKind::Random;
    throw std::invalid_argument("unknown placement strategy: " + s);
}

struct PlacementStrategy {
    StrategyKind kind = StrategyKind::Equidistant;
    std::uint64_t seed = 0;  // used by Random only

    static PlacementStrategy equidistant() { return {StrategyKind::Equidistant, 0}; }
    static PlacementStrategy adjacent() { return {StrategyKind::Adjacent, 0}; }
    static PlacementStrategy random(std::uint64_t seed) { return {StrategyKind::Random, seed}; }
};

// Cut links for n_jammers jammers on a ring of n nodes.
//   Equidistant: cuts at floor(t*n/n_jammers), balanced-as-possible segments
//   (sizes differ by at most 1).
//   Adjacent: cuts 0..n_jammers-1, i.e. n_jammers-1 isolated nodes plus one
//   segment of n-n_jammers+1 nodes.
//   Random: n_jammers distinct uniform links, deterministic per seed.
inline JammerPlacement place(const PlacementStrategy& strategy, std::int64_t n,
                             std::int64_t n_jammers) {
    if (n < 1) throw std::invalid_argument("place: n must be >= 1");
    if (n_jammers < 0 || n_jammers > n)
        throw std::invalid_argument("place: need 0 <= n_jammers <= n");
    if (n_jammers == 0) return JammerPlacement{};

    std::vector<std::int64_t> cuts;
    cuts.reserve(static_cast<std::size_t>(n_jammers));
    switch (strategy.kind) {
        case StrategyKind::Equidistant:
            for (std::int64_t t = 0; t < n_jammers; ++t) cuts.push_back(t * n / n_jammers);
            break;
        case StrategyKind::Adjacent:
            for (std::int64_t t = 0; t < n_jammers; ++t) cuts.push_back(t);
            break;
        case StrategyKind::Random: {
            Xoshiro256pp rng(strategy.seed);
            cuts = sample_distinct_indices(rng, n, n_jammers);
            break;
        }
    }
    return JammerPlacement(std::move(cuts));
}

// Total age of a size-n0 mini-ring split by one jammer into rings of m and
// n0-m nodes. Non-increasing as the cut moves toward the middle.
inline double split_total_age(std::int64_t n0, std::int64_t m, const Rates& rates) {
    if (n0 < 2 || n0 > rates.n) throw std::invalid_argument("split_total_age: need 2 <= n0 <= n");
    if (m < 1 || m > n0 - 1) throw std::invalid_argument("split_total_age: need 1 <= m <= n0-1");
    return ring_total_age(m, rates) + ring_total_age(n0 - m, rates);
}

// Average per-node age over the whole n-node system; works for mixed
// line/ring partitions.
inline double system_age(const Partition& p, const Rates& rates) {
    if (p.n != rates.n)
        throw std::invalid_argument("system_age: partition n differs from rates.n");
    detail::CompensatedSum total;
    for (const auto& seg : p.segments) {
        if (seg.kind == SegmentKind::Ring || seg.size == 1)
            total.add(ring_total_age(seg.size, rates));
        else
            total.add(line_total_age(seg.size, rates));
    }
    return total.value() / static_cast<double>(p.n);
}

// Delta^{r(n0)} - Delta^{r(n0+1)}: change in ring total age when one node is
// added. Always negative, and strictly decreasing in n0.
inline double ring_total_age_difference(std::int64_t n0, const Rates& rates) {
    if (n0 < 1) throw std::invalid_argument("ring_total_age_difference: n0 must be >= 1");
    if (n0 + 1 > rates.n)
        throw std::invalid_argument("ring_total_age_difference: n0+1 exceeds ring size n");
    return ring_total_age(n0, rates) - ring_total_age(n0 + 1, rates);
}

}  // namespace ringage
