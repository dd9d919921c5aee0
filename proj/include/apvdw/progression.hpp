#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apvdw/rational.hpp"

namespace apvdw {

// x_0 < x_1 < ... < x_{k-1}, k >= 2. Position in the sequence is the index i
// of the progression term a + i*d the point is matched against.
class IndexedPoints1D {
public:
    explicit IndexedPoints1D(std::vector<std::int64_t> points);

    const std::vector<std::int64_t>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::int64_t operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<std::int64_t> points_;
};

struct Witness1D {
    Rational a;
    Rational d;
    Rational margin;  // eps*d - (max_i(x_i - i d) - min_i(x_i - i d)) / 2
};

// Exact decision of: exists a, d > 0 with |x_i - (a + i d)| < eps d for all i.
// Returns the margin-maximizing witness (smallest d among maximizers, a the
// midrange of x_i - i d) when the optimal margin is positive.
//
// When eps > (k-1)/2 the margin grows without bound; the witness is then
// taken at twice the largest breakpoint of the margin function.
std::optional<Witness1D> recognize_ap(const IndexedPoints1D& points, const Epsilon& eps);

// Set-level entry point: sorts, rejects duplicates, and requires eps < 1/2.
std::optional<Witness1D> recognize_ap_set(std::vector<std::int64_t> points, const Epsilon& eps);

// Margin of the best (a, d) for a fixed d.
Rational margin_at(std::span<const std::int64_t> points, const Epsilon& eps, const Rational& d);

// Direct substitution: |x_i - (a + i d)| < eps d for every i, and d > 0.
bool witness_holds(std::span<const std::int64_t> points, const Epsilon& eps, const Rational& a, const Rational& d);

// True iff every ratio of consecutive gaps lies strictly inside
// (1 - 5 eps, 1 + 5 eps). For eps < 1/10 this is necessary for recognize_ap
// to accept. Vacuously true for fewer than three points.
bool gap_ratio_filter(std::span<const std::int64_t> points, const Epsilon& eps);

}  // namespace apvdw
