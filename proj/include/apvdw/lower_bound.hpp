#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apvdw/colorings.hpp"
#include "apvdw/rational.hpp"

namespace apvdw {

struct LowerBoundConfig {
    Rational eps0 = make_rational(1, 1000);
    std::uint64_t run_cap = std::uint64_t{1} << 25;   // runs kept by the run-length form
    std::uint64_t materialize_cap = std::uint64_t{1} << 26;  // N1 limit for a plain Coloring
};

// Parameters of the recursive construction at one level. For r = 1 only k
// and N1 = k - 1 are meaningful.
struct LowerBoundParams {
    std::int64_t k = 0;
    std::int64_t r = 0;
    Rational eps;
    std::int64_t s = 0;               // ceil(ln(1/(5 eps)) / 0.9)
    std::int64_t w = 0;               // ceil(e^{0.9 s} / (s (r-1)!))
    std::int64_t t = 0;               // ceil(k / (2 r s))
    std::int64_t k_sub = 0;           // ceil(k / (r s))
    std::int64_t N0 = 0;              // N1 of the level below
    std::vector<std::int64_t> D;      // D[j-1] = ceil((s-j+1) N0 / s), j = 1..floor(s/2)
    BigInt N1;                        // r w t (D_1 + ... + D_{floor(s/2)})
    std::vector<LowerBoundParams> inner;  // the level below, empty for r = 1
};

// 2^r r! eps^{-1} ln^r(1/(5 eps)), rounded up: the least k accepted at r.
std::int64_t lower_bound_min_k(std::int64_t r, const Epsilon& eps);

// Throws std::domain_error naming the failed inequality.
LowerBoundParams params_eq5(std::int64_t k, std::int64_t r, const Epsilon& eps, const LowerBoundConfig& cfg = {});

struct Run {
    std::int64_t start = 1;  // first integer covered
    std::int64_t length = 0;
    std::uint16_t color = 0;
};

// Run-length coloring of [N]; runs are consecutive, nonempty and adjacent
// runs may share a color.
struct RunColoring {
    std::size_t r = 0;
    std::int64_t N = 0;
    std::vector<Run> runs;

    std::uint16_t color_at(std::int64_t x) const;
    Coloring materialize(std::uint64_t cap) const;
};

struct LowerBoundColoring {
    LowerBoundParams params;
    RunColoring phi;
    // sub[v-1] is the coloring of [N0] with colors [r] \ {v}, for r >= 2.
    std::vector<RunColoring> sub;
};

LowerBoundColoring build_lower_bound_runs(std::int64_t k, std::int64_t r, const Epsilon& eps,
                                          const LowerBoundConfig& cfg = {});
Coloring build_lower_bound_coloring(std::int64_t k, std::int64_t r, const Epsilon& eps,
                                    const LowerBoundConfig& cfg = {});

// Offsets of the four-level partition, 1-based indices as in the
// construction: alpha_i, beta_{i,j}, gamma_{i,j,u}, sigma_{i,j,u,v}.
std::int64_t offset_alpha(const LowerBoundParams& p, std::int64_t i);
std::int64_t offset_beta(const LowerBoundParams& p, std::int64_t i, std::int64_t j);
std::int64_t offset_gamma(const LowerBoundParams& p, std::int64_t i, std::int64_t j, std::int64_t u);
std::int64_t offset_sigma(const LowerBoundParams& p, std::int64_t i, std::int64_t j, std::int64_t u, std::int64_t v);

struct StructureReport {
    bool tiles = false;          // Y_i, Y_{i,j}, Z_u, Z_{u,v} are consecutive and cover [N1]
    bool omits_color = false;    // Z_{u,v} never uses color v
    bool matches_prefix = false; // Z_{u,v} equals the first D_j colors of sub[v-1]
    std::uint64_t blocks = 0;
    std::string failure;
    bool ok() const { return tiles && omits_color && matches_prefix; }
};

// Checks the partition from the closed-form offsets against the built
// coloring.
StructureReport verify_lower_bound_structure(const LowerBoundColoring& lb);

}  // namespace apvdw
