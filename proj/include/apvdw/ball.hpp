#pragma once

#include <span>
#include <vector>

namespace apvdw {

using PointF = std::vector<double>;

struct Ball {
    PointF center;
    double radius = -1.0;  // negative: empty ball
};

// Smallest enclosing Euclidean ball (Welzl, randomized incremental with a
// fixed shuffle seed so results are reproducible). All input points must
// share one dimension. Throws std::invalid_argument on empty input.
Ball min_enclosing_ball(std::span<const PointF> points);

// Containment with relative slack for floating point round-off.
bool ball_contains(const Ball& ball, const PointF& p, double rel_slack = 1e-12);

}  // namespace apvdw
