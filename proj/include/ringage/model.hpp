#pragma once

// Domain types for gossip on a jammed ring: update rates, segments of the
// dismembered ring, partitions, and jammer placements.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringage {

// Update rates of the system. The source refreshes itself at rate lambda_s,
// pushes to each of the n ring nodes at rate lambda/n, and every node updates
// each neighbor over an un-cut link at rate lambda/2. n is always the size of
// the ORIGINAL ring; jammers never change the source->node rate.
struct Rates {
    double lambda_s = 1.0;
    double lambda = 1.0;
    std::int64_t n = 1;

    Rates() = default;
    Rates(double lambda_s_, double lambda_, std::int64_t n_)
        : lambda_s(lambda_s_), lambda(lambda_), n(n_) {
        if (!(lambda_s > 0.0)) throw std::invalid_argument("Rates: lambda_s must be > 0");
        if (!(lambda > 0.0)) throw std::invalid_argument("Rates: lambda must be > 0");
        if (n < 1) throw std::invalid_argument("Rates: n must be >= 1");
    }

    double source_node_rate() const { return lambda / static_cast<double>(n); }
    double neighbor_rate() const { return lambda / 2.0; }
};

enum class SegmentKind { Line, Ring };

inline const char* to_string(SegmentKind k) {
    return k == SegmentKind::Line ? "line" : "ring";
}

// One connected piece of the dismembered ring. A Line of size 1 and a Ring of
// size 1 are the same object (an isolated node) and compare equal.
struct Segment {
    SegmentKind kind = SegmentKind::Line;
    std::int64_t size = 1;

    Segment() = default;
    Segment(SegmentKind kind_, std::int64_t size_) : kind(kind_), size(size_) {
        if (size < 1) throw std::invalid_argument("Segment: size must be >= 1");
    }

    friend bool operator==(const Segment& a, const Segment& b) {
        if (a.size != b.size) return false;
        return a.size == 1 || a.kind == b.kind;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
};

inline Segment line_segment(std::int64_t size) { return Segment(SegmentKind::Line, size); }
inline Segment ring_segment(std::int64_t size) { return Segment(SegmentKind::Ring, size); }

// Distinct cut links on a ring of n nodes; link i joins node i and (i+1) mod n.
// Duplicate indices are merged, matching the one-jammer-per-link model.
class JammerPlacement {
  public:
    JammerPlacement() = default;
    explicit JammerPlacement(std::vector<std::int64_t> cut_links) : cut_links_(std::move(cut_links)) {
        for (auto link : cut_links_) {
            if (link < 0) throw std::invalid_argument("JammerPlacement: negative link index");
        }
        std::sort(cut_links_.begin(), cut_links_.end());
        cut_links_.erase(std::unique(cut_links_.begin(), cut_links_.end()), cut_links_.end());
    }

    const std::vector<std::int64_t>& cut_links() const { return cut_links_; }
    std::int64_t count() const { return static_cast<std::int64_t>(cut_links_.size()); }
    bool empty() const { return cut_links_.empty(); }

    bool valid_for(std::int64_t n) const {
        return cut_links_.empty() || (n >= 1 && cut_links_.back() < n);
    }

    friend bool operator==(const JammerPlacement& a, const JammerPlacement& b) {
        return a.cut_links_ == b.cut_links_;
    }

  private:
    std::vector<std::int64_t> cut_links_;  // sorted, unique
};

// A jammed ring decomposed into segments whose sizes sum to n. Equality is by
// size multiset: age is invariant under segment order and under rotation of
// the cut pattern, so only the sorted sizes (and kinds) matter.
struct Partition {
    std::vector<Segment> segments;
    std::int64_t n = 1;

    Partition() = default;
    Partition(std::vector<Segment> segments_, std::int64_t n_)
        : segments(std::move(segments_)), n(n_) {
        if (n < 1) throw std::invalid_argument("Partition: n must be >= 1");
        std::int64_t total = 0;
        for (const auto& s : segments) total += s.size;
        if (total != n)
            throw std::invalid_argument("Partition: segment sizes sum to " + std::to_string(total) +
                                        ", expected n = " + std::to_string(n));
    }

    std::int64_t segment_count() const { return static_cast<std::int64_t>(segments.size()); }

    std::vector<std::int64_t> sorted_sizes() const {
        std::vector<std::int64_t> sizes;
        sizes.reserve(segments.size());
        for (const auto& s : segments) sizes.push_back(s.size);
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        if (a.n != b.n || a.segments.size() != b.segments.size()) return false;
        auto canon = [](const Partition& p) {
            std::vector<Segment> v = p.segments;
            std::sort(v.begin(), v.end(), [](const Segment& x, const Segment& y) {
                if (x.size != y.size) return x.size < y.size;
                return static_cast<int>(x.kind) < static_cast<int>(y.kind);
            });
            return v;
        };
        auto ca = canon(a), cb = canon(b);
        return std::equal(ca.begin(), ca.end(), cb.begin());
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

// Cuts the ring at the given links. Segment sizes are the gaps between
// consecutive cut links around the ring; node c+1 .. c' (mod n) form the
// segment between cuts c and c'. No jammers leaves the full ring intact.
inline Partition partition_from_placement(const JammerPlacement& placement, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("partition_from_placement: n must be >= 1");
    if (!placement.valid_for(n))
        throw std::invalid_argument("partition_from_placement: cut link index >= n");

    const auto& cuts = placement.cut_links();
    if (cuts.empty()) return Partition({ring_segment(n)}, n);

    std::vector<Segment> segments;
    segments.reserve(cuts.size());
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t)
        segments.push_back(line_segment(cuts[t + 1] - cuts[t]));
    segments.push_back(line_segment(cuts.front() + n - cuts.back()));  // wrap gap
    return Partition(std::move(segments), n);
}

// Alternate mini-ring model: every segment keeps its size but its endpoints
// are joined, restoring radial symmetry. Idempotent.
inline Partition to_miniring_model(const Partition& p) {
    std::vector<Segment> segments = p.segments;
    for (auto& s : segments) s.kind = SegmentKind::Ring;
    return Partition(std::move(segments), p.n);
}

}  // namespace ringage
