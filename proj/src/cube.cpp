#include "apvdw/cube.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace apvdw {

std::vector<std::size_t> cell_index_vector(std::size_t cell, std::size_t m, std::size_t k)
{
    std::vector<std::size_t> v(m);
    for (std::size_t j = m; j-- > 0;) {
        v[j] = cell % k;
        cell /= k;
    }
    return v;
}

IndexedGrid::IndexedGrid(std::size_t m, std::size_t k, std::vector<PointI> cells)
    : m_(m), k_(k), cells_(std::move(cells))
{
    if (m < 1 || k < 2) throw std::invalid_argument("grid needs m >= 1 and k >= 2");
    std::size_t expected = 1;
    for (std::size_t j = 0; j < m; ++j) expected *= k;
    if (cells_.size() != expected) throw std::invalid_argument("grid must have exactly k^m points");
    std::set<PointI> seen;
    for (const auto& p : cells_) {
        if (p.size() != m) throw std::invalid_argument("grid point has wrong dimension");
        if (!seen.insert(p).second) throw std::invalid_argument("grid has duplicate points");
    }
}

std::vector<std::size_t> IndexedGrid::index_vector(std::size_t cell) const { return cell_index_vector(cell, m_, k_); }

IndexedGrid index_grid_points(std::vector<PointI> points, std::size_t m, std::size_t k, const Epsilon& eps)
{
    eps.require_set_level();
    std::size_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= k;
    if (points.size() != total) {
        throw std::invalid_argument("expected k^m = " + std::to_string(total) + " points, got "
                                    + std::to_string(points.size()));
    }
    const std::size_t cluster = total / k;
    std::vector<std::vector<std::size_t>> idx(points.size(), std::vector<std::size_t>(m));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::int64_t> coords;
        coords.reserve(points.size());
        for (const auto& p : points) {
            if (p.size() != m) throw std::invalid_argument("point has wrong dimension");
            coords.push_back(p[j]);
        }
        std::sort(coords.begin(), coords.end());
        for (std::size_t c = 1; c < k; ++c) {
            if (coords[c * cluster - 1] == coords[c * cluster]) {
                throw AmbiguousIndexing("axis " + std::to_string(j) + ": coordinate "
                                        + std::to_string(coords[c * cluster])
                                        + " straddles a cluster boundary");
            }
        }
        for (std::size_t p = 0; p < points.size(); ++p) {
            auto pos = std::lower_bound(coords.begin(), coords.end(), points[p][j]) - coords.begin();
            idx[p][j] = static_cast<std::size_t>(pos) / cluster;
        }
    }
    std::vector<PointI> cells(total);
    std::vector<bool> used(total, false);
    for (std::size_t p = 0; p < points.size(); ++p) {
        std::size_t cell = 0;
        for (std::size_t j = 0; j < m; ++j) cell = cell * k + idx[p][j];
        if (used[cell]) {
            throw AmbiguousIndexing("two points fall into the same grid cell");
        }
        used[cell] = true;
        cells[cell] = points[p];
    }
    return IndexedGrid(m, k, std::move(cells));
}

double cube_gap(const IndexedGrid& grid, double eps, double d, Ball* ball_out)
{
    std::vector<PointF> shifted;
    shifted.reserve(grid.size());
    for (std::size_t c = 0; c < grid.size(); ++c) {
        auto v = grid.index_vector(c);
        PointF p(grid.m());
        for (std::size_t j = 0; j < grid.m(); ++j) {
            p[j] = static_cast<double>(grid.at(c)[j]) - d * static_cast<double>(v[j]);
        }
        shifted.push_back(std::move(p));
    }
    Ball b = min_enclosing_ball(shifted);
    if (ball_out) *ball_out = b;
    return b.radius - eps * d;
}

bool cube_witness_holds(const IndexedGrid& grid, double eps, const std::vector<double>& a, double d)
{
    if (!(d > 0)) return false;
    for (std::size_t c = 0; c < grid.size(); ++c) {
        auto v = grid.index_vector(c);
        double s = 0;
        for (std::size_t j = 0; j < grid.m(); ++j) {
            double t = static_cast<double>(grid.at(c)[j]) - (a[j] + d * static_cast<double>(v[j]));
            s += t * t;
        }
        if (!(std::sqrt(s) < eps * d)) return false;
    }
    return true;
}

CubeResult recognize_cube(const IndexedGrid& grid, const Epsilon& eps_in, double tol)
{
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const double eps = eps_in.as_double();
    const double k = static_cast<double>(grid.k());
    CubeResult out;

    // Any feasible d satisfies (k - 1 - 2 eps) d <= spread along every axis.
    double spread = 0;
    for (std::size_t j = 0; j < grid.m(); ++j) {
        std::int64_t lo = grid.at(0)[j], hi = lo;
        for (const auto& p : grid.cells()) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        spread = std::max(spread, static_cast<double>(hi - lo));
    }
    const double denom = k - 1 - 2 * eps;
    if (spread <= 0) {
        out.verdict = CubeVerdict::infeasible;
        return out;
    }
    // For eps >= (k-1)/2 the spread bound is void; any d up to a generous
    // multiple of the spread is a valid search window.
    const double d_max = denom > 0 ? spread / denom : 4 * spread;
    const double d_min = std::ldexp(d_max, -60);
    out.d_max = d_max;

    const double phi = (std::sqrt(5.0) - 1) / 2;
    double lo = d_min, hi = d_max;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double g1 = cube_gap(grid, eps, x1), g2 = cube_gap(grid, eps, x2);
    double best_d = g1 <= g2 ? x1 : x2;
    double best_g = std::min(g1, g2);
    auto consider = [&](double d, double g) {
        if (g < best_g) {
            best_g = g;
            best_d = d;
        }
    };
    consider(d_max, cube_gap(grid, eps, d_max));
    int it = 0;
    for (; it < 200 && (hi - lo) >= tol * d_max; ++it) {
        if (g1 <= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = cube_gap(grid, eps, x1);
            consider(x1, g1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = cube_gap(grid, eps, x2);
            consider(x2, g2);
        }
    }
    out.iterations = it;
    out.min_gap = best_g;

    const double threshold = tol * d_max;
    if (best_g < -threshold) {
        Ball b;
        double g = cube_gap(grid, eps, best_d, &b);
        out.verdict = CubeVerdict::feasible;
        out.witness = WitnessMD{b.center, best_d, -g, tol};
    } else if (best_g > threshold) {
        out.verdict = CubeVerdict::infeasible;
    } else {
        out.verdict = CubeVerdict::boundary;
    }
    return out;
}

const char* to_string(CubeVerdict v)
{
    switch (v) {
    case CubeVerdict::feasible: return "feasible";
    case CubeVerdict::infeasible: return "infeasible";
    case CubeVerdict::boundary: return "boundary";
    }
    return "?";
}

}  // namespace apvdw
