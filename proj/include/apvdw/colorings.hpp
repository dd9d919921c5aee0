#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apvdw/progression.hpp"
#include "apvdw/rational.hpp"

namespace apvdw {

// Total map {1..N} -> {1..r}. colors()[i] is the color of the integer i+1.
class Coloring {
public:
    Coloring(std::size_t r, std::vector<std::uint16_t> colors);

    std::size_t N() const { return colors_.size(); }
    std::size_t r() const { return r_; }
    std::uint16_t color_of(std::int64_t x) const { return colors_.at(static_cast<std::size_t>(x - 1)); }
    const std::vector<std::uint16_t>& colors() const { return colors_; }
    std::vector<std::int64_t> color_class(std::uint16_t c) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::size_t r_;
    std::vector<std::uint16_t> colors_;
};

struct BlowupSpec {
    std::int64_t k = 0;
    std::int64_t r = 0;
    std::int64_t t = 0;                  // ceil(k / eps)
    std::vector<std::int64_t> elements;  // 0-based, sorted
    std::int64_t diameter() const { return elements.back() - elements.front(); }
    std::vector<std::int64_t> one_based() const;
};

// B_r = { b_0 + t b_1 + ... + t^{r-1} b_{r-1} : b_i in {0..k-1} }, t = ceil(k/eps).
BlowupSpec build_blowup_1d(std::int64_t k, std::int64_t r, const Epsilon& eps);

// (r-1, 1; D)-alternate labeling of [r t D]: D-blocks [bD+1, (b+1)D] are
// labeled +1 except those with (b - offset) mod r == r - 1.
struct AlternateLabeling {
    std::int64_t r = 0;
    std::int64_t D = 0;
    std::int64_t t = 0;
    std::int64_t offset = 0;
    std::vector<std::int8_t> labels;  // labels[x-1] for x in [1, rtD]

    std::int8_t label_of(std::int64_t x) const { return labels.at(static_cast<std::size_t>(x - 1)); }
};

AlternateLabeling build_alternate_labeling(std::int64_t r, std::int64_t D, std::int64_t t, std::int64_t offset);

// Label of a real point under the alternate labeling of the real line,
// intervals (bD + offset D, (b+1)D + offset D] being the blocks.
std::int8_t alternate_label_real(double x, std::int64_t r, std::int64_t D, std::int64_t offset);

// True iff d lies outside every interval ((i/q - delta) rD, (i/q + delta) rD),
// i in Z, 1 <= q <= r.
bool excluded_difference_check(const Rational& d, std::int64_t r, std::int64_t D, const Rational& delta);

// 2-coloring of [2 (k-1) floor((k-2)/3)] (empty for k = 4) from the (1,1;k-1)-alternate
// labeling: label +1 -> color 1, label -1 -> color 2.
Coloring build_simple_r2_coloring(std::int64_t k);

struct MonoAp {
    std::uint16_t color = 0;
    std::vector<std::int64_t> subset;
    Witness1D witness;
};

// Lexicographically smallest (color, subset) monochromatic AP_k(eps), if any.
std::optional<MonoAp> verify_no_mono_ap(const Coloring& coloring, std::size_t k, const Epsilon& eps);

// lcm(a, a+1, ..., b), exact.
BigInt lcm_range(std::int64_t a, std::int64_t b);

}  // namespace apvdw
