#include "apvdw/region.hpp"

#include <limits>
#include <stdexcept>

namespace apvdw {

namespace {

using i128 = __int128;

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

std::int64_t checked(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("d-range bound does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational DBound::to_rational() const
{
    if (infinite()) throw std::logic_error("infinite bound has no rational value");
    return make_rational(num, den);
}

bool operator<(const DBound& a, const DBound& b)
{
    if (a.infinite()) return false;
    if (b.infinite()) return true;
    return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

void DRange::add_one_sided(std::int64_t di, std::int64_t dx)
{
    // q dx <= (q di + 2 p) d
    const i128 c = static_cast<i128>(q_) * di + 2 * static_cast<i128>(p_);
    const i128 b = static_cast<i128>(q_) * dx;
    if (c > 0) {
        if (b > 0) {
            DBound cand{checked(b), checked(c)};
            if (lo_ < cand) lo_ = cand;
        }
    } else if (c < 0) {
        // d <= b / c with both signs flipped
        if (b >= 0) {
            // d <= nonpositive: only d = 0 survives when b == 0
            DBound cand{0, 1};
            if (b > 0) {
                contradiction_ = true;
                return;
            }
            if (cand < hi_) hi_ = cand;
        } else {
            DBound cand{checked(-b), checked(-c)};
            if (cand < hi_) hi_ = cand;
        }
    } else if (b > 0) {
        contradiction_ = true;
    }
}

void DRange::add_pair(std::int64_t di, std::int64_t dx)
{
    if (dx >= kCoordLimit || dx <= -kCoordLimit) {
        throw std::overflow_error("coordinate difference too large for the d-range tracker");
    }
    add_one_sided(di, dx);
    add_one_sided(-di, -dx);
}

FeasibleRegion2D::FeasibleRegion2D(std::size_t k, const Epsilon& eps)
    : k_(k), eps_(eps), range_(eps.num(), eps.den())
{
    points_.reserve(k);
}

void FeasibleRegion2D::add_point_in_place(std::size_t i, std::int64_t x)
{
    if (!points_.empty() && i <= points_.back().first) {
        throw std::invalid_argument("region points must be added with increasing index");
    }
    for (const auto& [j, xj] : points_) {
        range_.add_pair(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), x - xj);
    }
    points_.emplace_back(i, x);
}

FeasibleRegion2D FeasibleRegion2D::add_point(std::size_t i, std::int64_t x) const
{
    FeasibleRegion2D next = *this;
    next.add_point_in_place(i, x);
    return next;
}

bool FeasibleRegion2D::contains(const Rational& a, const Rational& d) const
{
    if (d < 0) return false;
    const Rational& e = eps_.value();
    for (const auto& [i, x] : points_) {
        const Rational idx(static_cast<long>(i));
        if (a + (idx - e) * d > x) return false;
        if (Rational(x) > a + (idx + e) * d) return false;
    }
    return true;
}

std::pair<Rational, std::optional<Rational>> FeasibleRegion2D::d_range() const
{
    if (closed_empty()) throw std::logic_error("d_range of an empty region");
    std::optional<Rational> hi;
    if (!range_.hi().infinite()) hi = range_.hi().to_rational();
    return {range_.lo().to_rational(), hi};
}

}  // namespace apvdw
