#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "apvdw/ball.hpp"
#include "apvdw/rational.hpp"

namespace apvdw {

using PointI = std::vector<std::int64_t>;

// Index vectors v in {0..k-1}^m are stored in lexicographic order: cell c
// has digits v_0 ... v_{m-1} of c in base k, v_0 most significant.
class IndexedGrid {
public:
    IndexedGrid(std::size_t m, std::size_t k, std::vector<PointI> cells);

    std::size_t m() const { return m_; }
    std::size_t k() const { return k_; }
    std::size_t size() const { return cells_.size(); }
    const std::vector<PointI>& cells() const { return cells_; }
    const PointI& at(std::size_t cell) const { return cells_[cell]; }
    std::vector<std::size_t> index_vector(std::size_t cell) const;

private:
    std::size_t m_;
    std::size_t k_;
    std::vector<PointI> cells_;
};

std::vector<std::size_t> cell_index_vector(std::size_t cell, std::size_t m, std::size_t k);

struct WitnessMD {
    std::vector<double> a;
    double d = 0;
    double residual = 0;  // eps d - R(d)
    double tol = 0;
};

enum class CubeVerdict { feasible, infeasible, boundary };

struct CubeResult {
    CubeVerdict verdict = CubeVerdict::infeasible;
    std::optional<WitnessMD> witness;  // set for feasible
    double min_gap = 0;                // min over the search of R(d) - eps d
    double d_max = 0;
    int iterations = 0;
};

class AmbiguousIndexing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Recovers the index vectors of a k^m point set by per-axis rank
// clustering. Requires eps < 1/2. Throws AmbiguousIndexing whenever the
// clustering is not forced.
IndexedGrid index_grid_points(std::vector<PointI> points, std::size_t m, std::size_t k, const Epsilon& eps);

// Decides exists a, d > 0 with ||x_v - (a + d v)|| < eps d by golden-section
// search on the convex function g(d) = R(d) - eps d, R the radius of the
// smallest ball enclosing {x_v - d v}. The verdict is feasible when
// min g < -tol d_max, infeasible when min g > tol d_max, boundary otherwise.
CubeResult recognize_cube(const IndexedGrid& grid, const Epsilon& eps, double tol = 1e-9);

// R(d) - eps d at a single d.
double cube_gap(const IndexedGrid& grid, double eps, double d, Ball* ball_out = nullptr);

// Direct substitution of a witness (Euclidean norm, floating point).
bool cube_witness_holds(const IndexedGrid& grid, double eps, const std::vector<double>& a, double d);

const char* to_string(CubeVerdict v);

}  // namespace apvdw
