#include "apvdw/progression.hpp"

#include <algorithm>
#include <stdexcept>

namespace apvdw {

IndexedPoints1D::IndexedPoints1D(std::vector<std::int64_t> points) : points_(std::move(points))
{
    if (points_.size() < 2) {
        throw std::invalid_argument("an indexed progression needs at least 2 points");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i] <= points_[i - 1]) {
            throw std::invalid_argument("indexed points must be strictly increasing");
        }
    }
}

namespace {

struct Spread {
    Rational lo;
    Rational hi;
};

Spread residual_range(std::span<const std::int64_t> xs, const Rational& d)
{
    Spread s{Rational(xs[0]), Rational(xs[0])};
    for (std::size_t i = 1; i < xs.size(); ++i) {
        Rational v = Rational(xs[i]) - d * static_cast<long>(i);
        if (v < s.lo) s.lo = v;
        if (v > s.hi) s.hi = v;
    }
    return s;
}

}  // namespace

Rational margin_at(std::span<const std::int64_t> points, const Epsilon& eps, const Rational& d)
{
    Spread s = residual_range(points, d);
    return eps.value() * d - (s.hi - s.lo) / 2;
}

std::optional<Witness1D> recognize_ap(const IndexedPoints1D& points, const Epsilon& eps)
{
    const auto& xs = points.points();
    const std::size_t k = xs.size();

    // margin(d) is concave piecewise linear; its kinks sit where two of the
    // lines x_i - i d cross, i.e. at d = (x_j - x_i) / (j - i).
    std::vector<Rational> breakpoints;
    breakpoints.reserve(k * (k - 1) / 2);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            breakpoints.push_back(make_rational(xs[j] - xs[i], static_cast<std::int64_t>(j - i)));
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    std::optional<Rational> best_d;
    Rational best_margin;
    for (const auto& d : breakpoints) {
        Rational m = margin_at(xs, eps, d);
        if (!best_d || m > best_margin) {
            best_d = d;
            best_margin = m;
        }
    }

    // Beyond the last breakpoint the slope is eps - (k-1)/2.
    if (eps.value() > make_rational(static_cast<std::int64_t>(k - 1), 2)) {
        best_d = breakpoints.back() * 2;
        best_margin = margin_at(xs, eps, *best_d);
    }

    if (best_margin <= 0) {
        return std::nullopt;
    }
    Spread s = residual_range(xs, *best_d);
    return Witness1D{(s.hi + s.lo) / 2, *best_d, best_margin};
}

std::optional<Witness1D> recognize_ap_set(std::vector<std::int64_t> points, const Epsilon& eps)
{
    eps.require_set_level();
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw std::invalid_argument("set-level recognition requires distinct points");
    }
    return recognize_ap(IndexedPoints1D(std::move(points)), eps);
}

bool witness_holds(std::span<const std::int64_t> points, const Epsilon& eps, const Rational& a, const Rational& d)
{
    if (d <= 0) return false;
    const Rational bound = eps.value() * d;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rational r = Rational(points[i]) - (a + d * static_cast<long>(i));
        if (abs(r) >= bound) return false;
    }
    return true;
}

bool gap_ratio_filter(std::span<const std::int64_t> points, const Epsilon& eps)
{
    if (points.size() < 3) return true;
    // |g_j / g_i - 1| < 5 eps  <=>  |g_j - g_i| * den < 5 num g_i
    const Rational five_eps = eps.value() * 5;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const Rational gi(std::abs(points[i + 1] - points[i]));
        if (gi == 0) return false;
        for (std::size_t j = 0; j + 1 < points.size(); ++j) {
            if (i == j) continue;
            const Rational gj(std::abs(points[j + 1] - points[j]));
            if (abs(gj / gi - 1) >= five_eps) return false;
        }
    }
    return true;
}

}  // namespace apvdw
