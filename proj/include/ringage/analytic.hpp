#pragma once

// Exact long-term expected version ages for line and ring segments embedded in
// an original ring of n nodes.
//
// The state variable is the age of a contiguous set of k nodes. A set's age
// obeys a linear recursion in the ages of its one-node extensions, so the
// whole profile is computed bottom-up over set size k = n0 .. 1: O(n0^2)
// states for a line, O(n0) for a ring. Closed forms for the ring node age and
// the line corner age are evaluated in log-space with compensated summation;
// the raw products underflow for n >= 1e4.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringage/model.hpp"

namespace ringage {

namespace detail {

// Kahan-compensated accumulator.
class CompensatedSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline void require_segment_size(std::int64_t n0, const Rates& rates, const char* who) {
    if (n0 < 1) throw std::invalid_argument(std::string(who) + ": n0 must be >= 1");
    if (n0 > rates.n) throw std::invalid_argument(std::string(who) + ": n0 exceeds ring size n");
}

}  // namespace detail

// log of prod_{k=1..j} 1/(1 + k/n), the survival factor of a length-j chain of
// neighbor hops. j = 0 is the empty product.
inline double log_product_term(std::int64_t j, std::int64_t n) {
    if (j < 0) throw std::invalid_argument("log_product_term: j must be >= 0");
    if (n < 1) throw std::invalid_argument("log_product_term: n must be >= 1");
    detail::CompensatedSum acc;
    for (std::int64_t k = 1; k <= j; ++k)
        acc.add(-std::log1p(static_cast<double>(k) / static_cast<double>(n)));
    return acc.value();
}

inline double product_term(std::int64_t j, std::int64_t n) {
    return std::exp(log_product_term(j, n));
}

inline double product_term(std::int64_t j, const Rates& rates) {
    return product_term(j, rates.n);
}

// Gaussian envelope of the product term: e^{-j^2/n} <= prod <= e^{-j^2/(4n)}.
inline std::pair<double, double> gaussian_bounds(std::int64_t j, std::int64_t n) {
    if (j < 0 || n < 1) throw std::invalid_argument("gaussian_bounds: need j >= 0, n >= 1");
    double j2 = static_cast<double>(j) * static_cast<double>(j);
    double nn = static_cast<double>(n);
    return {std::exp(-j2 / nn), std::exp(-j2 / (4.0 * nn))};
}

// sum_{j=1..jmax} prod_{k=1..j} 1/(1 + k/n), in log space.
inline double product_term_sum(std::int64_t jmax, std::int64_t n) {
    if (jmax < 0) throw std::invalid_argument("product_term_sum: jmax must be >= 0");
    if (n < 1) throw std::invalid_argument("product_term_sum: n must be >= 1");
    detail::CompensatedSum logp;
    detail::CompensatedSum sum;
    for (std::int64_t j = 1; j <= jmax; ++j) {
        logp.add(-std::log1p(static_cast<double>(j) / static_cast<double>(n)));
        sum.add(std::exp(logp.value()));
    }
    return sum.value();
}

// Common age of every node in a mini-ring of n0 nodes, closed form:
//   (lambda_s/lambda) [ sum_{j=1..n0-1} prod_{k=1..j} 1/(k/n+1)
//                       + (n/n0) prod_{k=1..n0-1} 1/(k/n+1) ].
inline double ring_node_age(std::int64_t n0, const Rates& rates) {
    detail::require_segment_size(n0, rates, "ring_node_age");
    detail::CompensatedSum logp;
    detail::CompensatedSum sum;
    for (std::int64_t j = 1; j <= n0 - 1; ++j) {
        logp.add(-std::log1p(static_cast<double>(j) / static_cast<double>(rates.n)));
        sum.add(std::exp(logp.value()));
    }
    double tail = static_cast<double>(rates.n) / static_cast<double>(n0) * std::exp(logp.value());
    return rates.lambda_s / rates.lambda * (sum.value() + tail);
}

// Ring contiguous-set age profile: profile[k-1] is the age of any k contiguous
// nodes on a Ring(n0). By radial symmetry the start index is irrelevant. This
// is the generic recursion solver the closed form is checked against.
inline std::vector<double> ring_age_profile(std::int64_t n0, const Rates& rates) {
    detail::require_segment_size(n0, rates, "ring_age_profile");
    std::vector<double> profile(static_cast<std::size_t>(n0));
    double src = rates.source_node_rate();
    // full set: served by the source only
    profile[static_cast<std::size_t>(n0 - 1)] =
        rates.lambda_s / (static_cast<double>(n0) * src);
    for (std::int64_t k = n0 - 1; k >= 1; --k) {
        double parent = profile[static_cast<std::size_t>(k)];
        profile[static_cast<std::size_t>(k - 1)] =
            (rates.lambda_s + rates.lambda * parent) / (static_cast<double>(k) * src + rates.lambda);
    }
    return profile;
}

// Full line DP table. rows[k-1][j-1] is the age of nodes {j, .., j+k-1} on a
// Line(n0). O(n0^2) memory; intended for modest n0 (tests, set queries).
class LineAgeTable {
  public:
    LineAgeTable(std::int64_t n0, const Rates& rates) : n0_(n0) {
        detail::require_segment_size(n0, rates, "LineAgeTable");
        rows_.resize(static_cast<std::size_t>(n0));
        double src = rates.source_node_rate();
        double half = rates.neighbor_rate();
        rows_[static_cast<std::size_t>(n0 - 1)] = {rates.lambda_s /
                                                   (static_cast<double>(n0) * src)};
        for (std::int64_t k = n0 - 1; k >= 1; --k) {
            const auto& above = rows_[static_cast<std::size_t>(k)];
            auto& row = rows_[static_cast<std::size_t>(k - 1)];
            row.resize(static_cast<std::size_t>(n0 - k + 1));
            for (std::int64_t j = 1; j <= n0 - k + 1; ++j) {
                double num = rates.lambda_s;
                double den = static_cast<double>(k) * src;
                if (j > 1) {  // extend left
                    num += half * above[static_cast<std::size_t>(j - 2)];
                    den += half;
                }
                if (j + k - 1 < n0) {  // extend right
                    num += half * above[static_cast<std::size_t>(j - 1)];
                    den += half;
                }
                row[static_cast<std::size_t>(j - 1)] = num / den;
            }
        }
    }

    std::int64_t n0() const { return n0_; }

    double age(std::int64_t j, std::int64_t k) const {
        if (k < 1 || k > n0_ || j < 1 || j + k - 1 > n0_)
            throw std::invalid_argument("LineAgeTable::age: set out of range");
        return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }

  private:
    std::int64_t n0_;
    std::vector<std::vector<double>> rows_;
};

// Per-node ages on a Line(n0), rolling two-row DP: O(n0^2) time, O(n0) memory.
// Vector index i holds the age of node i+1.
inline std::vector<double> line_ages(std::int64_t n0, const Rates& rates) {
    detail::require_segment_size(n0, rates, "line_ages");
    double src = rates.source_node_rate();
    double half = rates.neighbor_rate();
    std::vector<double> above{rates.lambda_s / (static_cast<double>(n0) * src)};
    std::vector<double> row;
    for (std::int64_t k = n0 - 1; k >= 1; --k) {
        row.assign(static_cast<std::size_t>(n0 - k + 1), 0.0);
        for (std::int64_t j = 1; j <= n0 - k + 1; ++j) {
            double num = rates.lambda_s;
            double den = static_cast<double>(k) * src;
            if (j > 1) {
                num += half * above[static_cast<std::size_t>(j - 2)];
                den += half;
            }
            if (j + k - 1 < n0) {
                num += half * above[static_cast<std::size_t>(j - 1)];
                den += half;
            }
            row[static_cast<std::size_t>(j - 1)] = num / den;
        }
        above.swap(row);
    }
    return above;
}

// Corner age of a Line(n0), closed form: the ring formula with n replaced by
// n/2 and the prefactor doubled.
inline double line_corner_age_closed_form(std::int64_t n0, const Rates& rates) {
    detail::require_segment_size(n0, rates, "line_corner_age_closed_form");
    double nh = static_cast<double>(rates.n) / 2.0;
    detail::CompensatedSum logp;
    detail::CompensatedSum sum;
    for (std::int64_t j = 1; j <= n0 - 1; ++j) {
        logp.add(-std::log1p(static_cast<double>(j) / nh));
        sum.add(std::exp(logp.value()));
    }
    double tail = nh / static_cast<double>(n0) * std::exp(logp.value());
    return 2.0 * rates.lambda_s / rates.lambda * (sum.value() + tail);
}

// Contiguous set of k nodes starting at j (1-based) within a segment. On a
// ring, wraparound is allowed and the age depends on k only.
struct ContiguousSet {
    std::int64_t start_j = 1;
    std::int64_t k = 1;
    Segment segment;

    ContiguousSet(std::int64_t start_j_, std::int64_t k_, Segment segment_)
        : start_j(start_j_), k(k_), segment(segment_) {
        if (start_j < 1 || k < 1 || k > segment.size)
            throw std::invalid_argument("ContiguousSet: need 1 <= j and 1 <= k <= n0");
        if (segment.kind == SegmentKind::Line) {
            if (start_j + k - 1 > segment.size)
                throw std::invalid_argument("ContiguousSet: set leaves the line");
        } else {
            if (start_j > segment.size)
                throw std::invalid_argument("ContiguousSet: start beyond ring");
        }
    }
};

inline double contiguous_set_age(const ContiguousSet& set, const Rates& rates) {
    detail::require_segment_size(set.segment.size, rates, "contiguous_set_age");
    if (set.segment.kind == SegmentKind::Ring)
        return ring_age_profile(set.segment.size, rates)[static_cast<std::size_t>(set.k - 1)];
    return LineAgeTable(set.segment.size, rates).age(set.start_j, set.k);
}

inline double ring_total_age(std::int64_t n0, const Rates& rates) {
    return static_cast<double>(n0) * ring_node_age(n0, rates);
}

inline double line_total_age(std::int64_t n0, const Rates& rates) {
    detail::CompensatedSum sum;
    for (double a : line_ages(n0, rates)) sum.add(a);
    return sum.value();
}

// (ring node age, max line age, 2 * ring node age): the per-node line ages sit
// inside this sandwich for every n0 <= n.
struct SandwichCheck {
    double lower = 0.0;
    double line_max = 0.0;
    double upper = 0.0;
};

inline SandwichCheck sandwich_check(std::int64_t n0, const Rates& rates) {
    double ring = ring_node_age(n0, rates);
    const auto ages = line_ages(n0, rates);
    double line_max = 0.0;
    for (double a : ages) line_max = std::max(line_max, a);
    return {ring, line_max, 2.0 * ring};
}

}  // namespace ringage
