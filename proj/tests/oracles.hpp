#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;

// Strict feasibility of |x_i - (a + i d)| < eps d by maximizing the common
// slack s over the vertices of the LP
//     a + (i - eps) d + s <= x_i,   -a - (i + eps) d + s <= -x_i,   -d <= 0.
// Feasible iff the optimum s is positive (which forces d > 0).
inline bool ap_lp(const std::vector<std::int64_t>& x, const Q& eps)
{
    struct Row {
        Q c[3];
        Q b;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Q idx(static_cast<long>(i));
        rows.push_back({{Q(1), idx - eps, Q(1)}, Q(static_cast<long>(x[i]))});
        rows.push_back({{Q(-1), -idx - eps, Q(1)}, Q(-static_cast<long>(x[i]))});
    }
    rows.push_back({{Q(0), Q(-1), Q(0)}, Q(0)});
    std::optional<Q> best;
    const std::size_t n = rows.size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            for (std::size_t r = q + 1; r < n; ++r) {
                // Cramer's rule on the three tight rows.
                const Row* R[3] = {&rows[p], &rows[q], &rows[r]};
                auto det3 = [](const Q m[3][3]) -> Q {
                    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                };
                Q M[3][3];
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) M[i][j] = R[i]->c[j];
                const Q det = det3(M);
                if (det == 0) continue;
                Q sol[3];
                for (int col = 0; col < 3; ++col) {
                    Q A[3][3];
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) A[i][j] = (j == col) ? R[i]->b : M[i][j];
                    sol[col] = det3(A) / det;
                }
                bool feasible = true;
                for (const auto& row : rows) {
                    if (row.c[0] * sol[0] + row.c[1] * sol[1] + row.c[2] * sol[2] > row.b) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible && (!best || sol[2] > *best)) best = sol[2];
            }
        }
    }
    return best && *best > 0;
}

// All k-subsets of {1..N} accepted by the LP oracle.
inline std::vector<std::vector<std::int64_t>> naive_edges(std::int64_t N, std::size_t k, const Q& eps)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::int64_t>(i) + 1;
    if (static_cast<std::int64_t>(k) > N) return out;
    while (true) {
        if (ap_lp(c, eps)) out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == N - static_cast<std::int64_t>(k - i)) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// Largest subset of {1..N} (N <= 20) containing no listed edge, by
// exhaustive enumeration of all 2^N subsets.
inline std::size_t brute_max_free(std::int64_t N, const std::vector<std::vector<std::int64_t>>& edges)
{
    std::vector<std::uint32_t> masks;
    for (const auto& e : edges) {
        std::uint32_t m = 0;
        for (auto x : e) m |= 1u << (x - 1);
        masks.push_back(m);
    }
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << N); ++s) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(s));
        if (size <= best) continue;
        bool ok = true;
        for (auto m : masks) {
            if ((s & m) == m) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Smallest enclosing circle by trying every circle through two or three
// of the points.
inline double brute_circle_radius(const std::vector<std::array<double, 2>>& pts)
{
    auto covers = [&](double cx, double cy, double r) {
        for (const auto& p : pts) {
            if (std::hypot(p[0] - cx, p[1] - cy) > r * (1 + 1e-12) + 1e-12) return false;
        }
        return true;
    };
    double best = INFINITY;
    const std::size_t n = pts.size();
    if (n == 1) return 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cx = (pts[i][0] + pts[j][0]) / 2;
            const double cy = (pts[i][1] + pts[j][1]) / 2;
            const double r = std::hypot(pts[i][0] - cx, pts[i][1] - cy);
            if (r < best && covers(cx, cy, r)) best = r;
            for (std::size_t l = j + 1; l < n; ++l) {
                const double ax = pts[i][0], ay = pts[i][1];
                const double bx = pts[j][0], by = pts[j][1];
                const double qx = pts[l][0], qy = pts[l][1];
                const double d = 2 * (ax * (by - qy) + bx * (qy - ay) + qx * (ay - by));
                if (std::abs(d) < 1e-15) continue;
                const double ux = ((ax * ax + ay * ay) * (by - qy) + (bx * bx + by * by) * (qy - ay) +
                                   (qx * qx + qy * qy) * (ay - by)) / d;
                const double uy = ((ax * ax + ay * ay) * (qx - bx) + (bx * bx + by * by) * (ax - qx) +
                                   (qx * qx + qy * qy) * (bx - ax)) / d;
                const double rr = std::hypot(ax - ux, ay - uy);
                if (rr < best && covers(ux, uy, rr)) best = rr;
            }
        }
    }
    return best;
}

}  // namespace oracle
