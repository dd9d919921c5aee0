#include "apvdw/colorings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "apvdw/search.hpp"

namespace apvdw {

Coloring::Coloring(std::size_t r, std::vector<std::uint16_t> colors) : r_(r), colors_(std::move(colors))
{
    if (r < 1) throw std::invalid_argument("a coloring needs at least one color");
    for (auto c : colors_) {
        if (c < 1 || c > r) throw std::invalid_argument("color out of range 1..r");
    }
}

std::vector<std::int64_t> Coloring::color_class(std::uint16_t c) const
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] == c) out.push_back(static_cast<std::int64_t>(i + 1));
    }
    return out;
}

std::vector<std::int64_t> BlowupSpec::one_based() const
{
    std::vector<std::int64_t> out(elements);
    for (auto& x : out) x += 1;
    return out;
}

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in construction");
    return out;
}

}  // namespace

BlowupSpec build_blowup_1d(std::int64_t k, std::int64_t r, const Epsilon& eps)
{
    if (k < 2) throw std::invalid_argument("blow-up needs k >= 2");
    if (r < 1) throw std::invalid_argument("blow-up needs r >= 1");
    BlowupSpec spec;
    spec.k = k;
    spec.r = r;
    spec.t = to_int64(ceil(Rational(k) / eps.value()));

    std::int64_t top = 1;  // t^{r-1}
    for (std::int64_t i = 1; i < r; ++i) top = mul_checked(top, spec.t);
    mul_checked(top, k);
    std::size_t count = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        count = static_cast<std::size_t>(mul_checked(static_cast<std::int64_t>(count), k));
    }

    spec.elements.reserve(count);
    std::vector<std::int64_t> digits(static_cast<std::size_t>(r), 0);
    for (std::size_t n = 0; n < count; ++n) {
        std::int64_t value = 0;
        for (std::int64_t i = r; i-- > 0;) value = value * spec.t + digits[static_cast<std::size_t>(i)];
        spec.elements.push_back(value);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < k) break;
            digits[i] = 0;
        }
    }
    std::sort(spec.elements.begin(), spec.elements.end());
    return spec;
}

AlternateLabeling build_alternate_labeling(std::int64_t r, std::int64_t D, std::int64_t t, std::int64_t offset)
{
    if (r < 2 || D < 1 || t < 1) throw std::invalid_argument("alternate labeling needs r >= 2, D >= 1, t >= 1");
    if (offset < 0 || offset >= r) throw std::invalid_argument("offset must lie in 0..r-1");
    AlternateLabeling lab{r, D, t, offset, {}};
    const std::int64_t n = mul_checked(mul_checked(r, t), D);
    lab.labels.resize(static_cast<std::size_t>(n));
    for (std::int64_t x = 1; x <= n; ++x) {
        const std::int64_t block = (x - 1) / D;
        const std::int64_t phase = ((block - offset) % r + r) % r;
        lab.labels[static_cast<std::size_t>(x - 1)] = phase == r - 1 ? -1 : +1;
    }
    return lab;
}

std::int8_t alternate_label_real(double x, std::int64_t r, std::int64_t D, std::int64_t offset)
{
    // x in (bD, (b+1)D]  <=>  b = ceil(x / D) - 1
    const double b = std::ceil(x / static_cast<double>(D)) - 1;
    const auto rr = static_cast<double>(r);
    double phase = std::fmod(b - static_cast<double>(offset), rr);
    if (phase < 0) phase += rr;
    return phase == rr - 1 ? -1 : +1;
}

bool excluded_difference_check(const Rational& d, std::int64_t r, std::int64_t D, const Rational& delta)
{
    const Rational rD(mul_checked(r, D));
    for (std::int64_t q = 1; q <= r; ++q) {
        // d in ((i/q - delta) rD, (i/q + delta) rD)  <=>  |q d / rD - i| < q delta
        const Rational x = Rational(q) * d / rD;
        const BigInt nearest = floor(x + Rational(1, 2));
        if (abs(x - Rational(nearest)) < Rational(q) * delta) return false;
    }
    return true;
}

Coloring build_simple_r2_coloring(std::int64_t k)
{
    if (k < 4) throw std::invalid_argument("simple r=2 coloring needs k >= 4");
    const std::int64_t t = (k - 2) / 3;
    if (t == 0) return Coloring(2, {});  // k = 4: [2 (k-1) * 0] is empty
    AlternateLabeling lab = build_alternate_labeling(2, k - 1, t, 0);
    std::vector<std::uint16_t> colors(lab.labels.size());
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = lab.labels[i] > 0 ? 1 : 2;
    return Coloring(2, std::move(colors));
}

std::optional<MonoAp> verify_no_mono_ap(const Coloring& coloring, std::size_t k, const Epsilon& eps)
{
    for (std::uint16_t c = 1; c <= coloring.r(); ++c) {
        auto cls = coloring.color_class(c);
        if (cls.size() < k) continue;
        std::optional<MonoAp> found;
        for_each_eps_ap(cls, k, eps, [&](const std::vector<std::int64_t>& subset, const Witness1D& w) {
            found = MonoAp{c, subset, w};
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

BigInt lcm_range(std::int64_t a, std::int64_t b)
{
    if (a < 1 || a > b) throw std::invalid_argument("lcm_range needs 1 <= a <= b");
    BigInt out = 1;
    for (std::int64_t n = a; n <= b; ++n) {
        BigInt v(static_cast<long>(n));
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_mpz_t());
    }
    return out;
}

}  // namespace apvdw
