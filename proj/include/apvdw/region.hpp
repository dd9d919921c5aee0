#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "apvdw/rational.hpp"

namespace apvdw {

// Nonnegative fraction-or-infinity used for bounds on the common
// difference d. Comparisons are exact (128-bit cross multiplication).
struct DBound {
    std::int64_t num = 0;
    std::int64_t den = 1;  // den == 0 encodes +infinity
    bool infinite() const { return den == 0; }
    Rational to_rational() const;  // throws for infinity
};

bool operator<(const DBound& a, const DBound& b);

// Closed interval [lo, hi] of d values compatible with a set of pairwise
// constraints of the form
//     x_p - x_q <= (i_p - i_q + 2 eps) d      (and the same with p, q swapped),
// which is exactly the projection onto d of the closed relaxation of
// |x_i - (a + i d)| <= eps d.
class DRange {
public:
    DRange() = default;
    DRange(std::int64_t eps_num, std::int64_t eps_den) : p_(eps_num), q_(eps_den) {}

    // Adds the constraints for a pair of matched points with index
    // difference di = i_p - i_q and value difference dx = x_p - x_q.
    void add_pair(std::int64_t di, std::int64_t dx);

    bool empty() const { return contradiction_ || hi_ < lo_; }
    const DBound& lo() const { return lo_; }
    const DBound& hi() const { return hi_; }

private:
    void add_one_sided(std::int64_t di, std::int64_t dx);

    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
    DBound lo_{0, 1};
    DBound hi_{1, 0};
    bool contradiction_ = false;
};

// Feasible (a, d) set of the closed relaxation
//     a + (i - eps) d <= x_i <= a + (i + eps) d,   d >= 0
// for the points added so far. Points are added with increasing index.
// Emptiness here only proves infeasibility of the strict system; an open
// system can be infeasible while this region is a single point.
class FeasibleRegion2D {
public:
    FeasibleRegion2D(std::size_t k, const Epsilon& eps);

    // Returns the region after adding point x at index i (value semantics).
    FeasibleRegion2D add_point(std::size_t i, std::int64_t x) const;
    void add_point_in_place(std::size_t i, std::int64_t x);

    bool closed_empty() const { return range_.empty(); }
    bool contains(const Rational& a, const Rational& d) const;

    // Projection onto d; the upper end is nullopt when unbounded.
    std::pair<Rational, std::optional<Rational>> d_range() const;
    const DRange& range() const { return range_; }

    std::size_t capacity() const { return k_; }
    const std::vector<std::pair<std::size_t, std::int64_t>>& constraints() const { return points_; }

private:
    std::size_t k_;
    Epsilon eps_;
    DRange range_;
    std::vector<std::pair<std::size_t, std::int64_t>> points_;
};

}  // namespace apvdw
