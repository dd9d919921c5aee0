#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apvdw/cube.hpp"
#include "apvdw/rational.hpp"

namespace apvdw {

enum class ProviderMode { exact, behrend3, greedy, automatic };

// Source of subsets of an interval without an exact k-term progression.
// automatic: exact up to exact_cap elements, behrend3 beyond for k = 3,
// greedy otherwise.
struct APkFreeProvider {
    ProviderMode mode = ProviderMode::automatic;
    std::int64_t exact_cap = 60;
};

ProviderMode parse_provider_mode(const std::string& name);
const char* to_string(ProviderMode mode);

// Subset of [lo, hi] without an exact k-term progression. The exact mode
// returns the lexicographically first maximum set of [1, n] shifted by
// lo - 1, n = hi - lo + 1.
std::vector<std::int64_t> apk_free_set(std::int64_t lo, std::int64_t hi, std::size_t k,
                                       const APkFreeProvider& provider = {});

struct DigitConstruction {
    std::int64_t q = 0;                // floor(1 / (25 eps))
    std::int64_t h = 0;                // number of base-q digits
    std::size_t k = 0;
    std::vector<std::int64_t> head;    // alphabet of the leading digit, S_k([0, q-1])
    std::vector<std::int64_t> tail;    // alphabet of the other digits, S_k([ceil(2q/5), floor(3q/5)])
    std::int64_t N = 0;                // q^h
};

struct DigitSet {
    DigitConstruction construction;
    std::vector<std::int64_t> elements;  // sorted, inside [0, q^h - 1]
};

// Requires 0 < eps <= 1/125 and h >= 1.
DigitSet build_behrend_digit_set(const Epsilon& eps, std::int64_t h, std::size_t k,
                                 const APkFreeProvider& provider = {});

// A x [N]^{m-1} for A inside [1, N], lexicographically sorted.
std::vector<PointI> product_free_set(const std::vector<std::int64_t>& A, std::size_t m, std::int64_t N);

struct CubeBlowupSpec {
    std::size_t m = 0;
    std::size_t k = 0;
    Rational eps;
    std::int64_t r = 0;
    std::int64_t t = 0;            // ceil(k sqrt(m) / eps)
    std::int64_t box = 0;          // every coordinate lies in [0, box - 1]; box <= k t^{r-1}
    std::vector<PointI> elements;  // v_0 + t v_1 + ... + t^{r-1} v_{r-1}, lexicographic
};

// Smallest r >= 1 with ((k^m - 1) / k^m)^r < alpha, compared exactly.
std::int64_t cube_blowup_iterations(std::size_t m, std::size_t k, const Rational& alpha);
// Smallest integer t with t >= k sqrt(m) / eps, compared exactly.
std::int64_t cube_blowup_scale(std::size_t m, std::size_t k, const Epsilon& eps);

CubeBlowupSpec build_cube_blowup(std::size_t m, std::size_t k, const Epsilon& eps, const Rational& alpha,
                                 std::uint64_t size_cap = std::uint64_t{1} << 22);
CubeBlowupSpec build_cube_blowup_r(std::size_t m, std::size_t k, const Epsilon& eps, std::int64_t r,
                                   std::uint64_t size_cap = std::uint64_t{1} << 22);

// The k^m blocks A_{r,u} = A_{r-1} + t^{r-1} u, ordered by u in
// lexicographic order; each block lists its points lexicographically.
std::vector<std::vector<PointI>> cube_blowup_blocks(const CubeBlowupSpec& spec);

struct TranslateResult {
    PointI shift;
    std::size_t count = 0;
    bool meets_bound = false;  // count * 2^m * N^m >= |X| |A|
    std::uint64_t shifts_examined = 0;
};

enum class TranslateMode { automatic, deterministic, randomized };

struct TranslateOptions {
    TranslateMode mode = TranslateMode::automatic;
    std::uint64_t shift_cap = 1000000;   // deterministic limit on (2N)^m
    std::uint64_t seed = 1;
    std::uint64_t max_samples = 10000000;
};

// |X intersect (A + u)|.
std::size_t translate_intersection(const std::vector<PointI>& A, const std::vector<PointI>& X, const PointI& u);

// Shift u in [-N+1, N]^m with many points of X in A + u. The deterministic
// mode returns the lexicographically first shift of maximum count; the
// randomized mode samples until the averaging bound is met.
TranslateResult find_dense_translate(const std::vector<PointI>& A, const std::vector<PointI>& X, std::int64_t N,
                                     std::size_t m, const TranslateOptions& opts = {});

struct VerifyCubeOptions {
    double tol = 1e-9;
    std::uint64_t node_cap = 0;       // 0 = unlimited
    std::optional<PointI> required;   // only report cubes containing this point
};

struct CubeHit {
    IndexedGrid grid;
    WitnessMD witness;
};

// First approximate cube inside S (cells assigned in lexicographic cell
// order, candidate points in lexicographic order), or nothing. Requires
// eps < 1/2. Assignments are pruned by strict per-axis monotonicity and by
// the exact common-difference interval of every coordinate pair; complete
// assignments are confirmed by recognize_cube. Boundary verdicts do not
// count as cubes. Throws SearchCapExceeded past node_cap.
std::optional<CubeHit> verify_cube_free(const std::vector<PointI>& S, std::size_t m, std::size_t k,
                                        const Epsilon& eps, const VerifyCubeOptions& opts = {});

}  // namespace apvdw
