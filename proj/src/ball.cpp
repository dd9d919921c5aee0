#include "apvdw/ball.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace apvdw {

namespace {

double dist2(const PointF& a, const PointF& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

// Smallest ball with every point of `support` on its boundary and center in
// their affine hull. Affinely dependent support points are dropped from the
// linear system (they are consistent with the others whenever the recursion
// asks for such a ball).
Ball ball_through(const std::vector<const PointF*>& support, std::size_t dim)
{
    if (support.empty()) return Ball{PointF(dim, 0.0), -1.0};
    const PointF& p0 = *support[0];
    if (support.size() == 1) return Ball{p0, 0.0};

    const std::size_t n = support.size() - 1;
    std::vector<PointF> q(n, PointF(dim));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c) q[i][c] = (*support[i + 1])[c] - p0[c];
    }
    // 2 (Q Q^T) lambda = diag(Q Q^T)
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
    double scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double g = 0;
            for (std::size_t c = 0; c < dim; ++c) g += q[i][c] * q[j][c];
            m[i][j] = 2 * g;
        }
        double g = 0;
        for (std::size_t c = 0; c < dim; ++c) g += q[i][c] * q[i][c];
        m[i][n] = g;
        scale = std::max(scale, g);
    }

    std::vector<double> lambda(n, 0.0);
    std::vector<int> pivot_col(n, -1);
    std::size_t row = 0;
    const double tiny = 1e-12 * std::max(scale, 1.0);
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
        }
        if (std::abs(m[best][col]) <= tiny) continue;
        std::swap(m[row], m[best]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) continue;
            double f = m[r][col] / m[row][col];
            if (f == 0) continue;
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (std::size_t r = 0; r < row; ++r) {
        const auto col = static_cast<std::size_t>(pivot_col[r]);
        lambda[col] = m[r][n] / m[r][col];
    }

    Ball b{p0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c) b.center[c] += lambda[i] * q[i][c];
    }
    double r2 = 0;
    for (const PointF* p : support) r2 = std::max(r2, dist2(b.center, *p));
    b.radius = std::sqrt(r2);
    return b;
}

Ball welzl(const std::vector<const PointF*>& pts, std::size_t end, std::vector<const PointF*>& support,
           std::size_t dim)
{
    Ball b = ball_through(support, dim);
    if (support.size() == dim + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
        if (b.radius < 0 || !ball_contains(b, *pts[i])) {
            support.push_back(pts[i]);
            b = welzl(pts, i, support, dim);
            support.pop_back();
        }
    }
    return b;
}

}  // namespace

bool ball_contains(const Ball& ball, const PointF& p, double rel_slack)
{
    if (ball.radius < 0) return false;
    const double d = std::sqrt(dist2(ball.center, p));
    double mag = ball.radius;
    for (double c : ball.center) mag = std::max(mag, std::abs(c));
    return d <= ball.radius + rel_slack * std::max(mag, 1.0);
}

Ball min_enclosing_ball(std::span<const PointF> points)
{
    if (points.empty()) throw std::invalid_argument("min_enclosing_ball of an empty point list");
    const std::size_t dim = points[0].size();
    std::vector<const PointF*> order;
    order.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != dim) throw std::invalid_argument("min_enclosing_ball: mixed dimensions");
        order.push_back(&p);
    }
    std::mt19937_64 rng(0x5eb5eb);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<const PointF*> support;
    return welzl(order, order.size(), support, dim);
}

}  // namespace apvdw
