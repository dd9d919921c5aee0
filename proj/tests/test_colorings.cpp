#include <cmath>

#include "doctest.h"

#include "apvdw/colorings.hpp"
#include "apvdw/search.hpp"

using namespace apvdw;

namespace {

Epsilon eps_of(std::int64_t p, std::int64_t q) { return Epsilon(make_rational(p, q)); }

// Unpruned search: every k-subset of every color class through recognize_ap.
bool brute_has_mono_ap(const Coloring& c, std::size_t k, const Epsilon& e)
{
    for (std::uint16_t color = 1; color <= c.r(); ++color) {
        auto cls = c.color_class(color);
        if (cls.size() < k) continue;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<std::int64_t> pts(k);
            for (std::size_t i = 0; i < k; ++i) pts[i] = cls[idx[i]];
            if (recognize_ap(IndexedPoints1D(pts), e)) return true;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == cls.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("coloring validation")
{
    Coloring c(2, {1, 2, 2, 1});
    CHECK(c.N() == 4);
    CHECK(c.color_of(2) == 2);
    CHECK(c.color_class(1) == std::vector<std::int64_t>{1, 4});
    CHECK_THROWS_AS(Coloring(2, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(0, {}), std::invalid_argument);
}

TEST_CASE("blow-up sets")
{
    auto b1 = build_blowup_1d(4, 1, eps_of(1, 3));
    CHECK(b1.elements == std::vector<std::int64_t>{0, 1, 2, 3});

    auto b = build_blowup_1d(3, 2, eps_of(1, 3));
    CHECK(b.t == 9);
    CHECK(b.elements == std::vector<std::int64_t>{0, 1, 2, 9, 10, 11, 18, 19, 20});
    CHECK(b.diameter() == 20);
    CHECK(b.diameter() < 2 * (b.k - 1) * b.t);
    CHECK(b.one_based().front() == 1);

    auto b3 = build_blowup_1d(3, 3, eps_of(1, 4));
    CHECK(b3.elements.size() == 27);
    CHECK(b3.t == 12);
    CHECK(b3.diameter() <= (3 - 1) * (1 + 12 + 144));
    CHECK_THROWS_AS(build_blowup_1d(10, 30, eps_of(1, 1000)), std::overflow_error);
    CHECK_THROWS_AS(build_blowup_1d(1, 2, eps_of(1, 3)), std::invalid_argument);
}

TEST_CASE("every 2-coloring of B_2 has a monochromatic AP_3(1/3)")
{
    auto b = build_blowup_1d(3, 2, eps_of(1, 3)).one_based();
    for (std::uint32_t mask = 0; mask < 512; ++mask) {
        std::vector<std::int64_t> cls[2];
        for (std::size_t i = 0; i < 9; ++i) cls[(mask >> i) & 1].push_back(b[i]);
        bool found = false;
        for (auto& c : cls) {
            for_each_eps_ap(c, 3, eps_of(1, 3), [&](const auto&, const auto&) {
                found = true;
                return false;
            });
        }
        CHECK(found);
    }
}

TEST_CASE("alternate labelings")
{
    auto a = build_alternate_labeling(2, 2, 2, 0);
    CHECK(a.labels == std::vector<std::int8_t>{1, 1, -1, -1, 1, 1, -1, -1});
    auto b = build_alternate_labeling(3, 1, 1, 0);
    CHECK(b.labels == std::vector<std::int8_t>{1, 1, -1});
    auto c = build_alternate_labeling(2, 2, 2, 1);
    CHECK(c.labels == std::vector<std::int8_t>{-1, -1, 1, 1, -1, -1, 1, 1});

    for (std::int64_t r = 2; r <= 4; ++r) {
        for (std::int64_t off = 0; off < r; ++off) {
            auto l = build_alternate_labeling(r, 3, 3, off);
            const auto n = static_cast<std::int64_t>(l.labels.size());
            for (std::int64_t x = 1; x + r * 3 <= n; ++x) CHECK(l.label_of(x) == l.label_of(x + r * 3));
            for (std::int64_t blk = 0; blk < n / 3; ++blk) {
                for (std::int64_t y = 2; y <= 3; ++y) CHECK(l.label_of(blk * 3 + y) == l.label_of(blk * 3 + 1));
            }
            for (std::int64_t x = 1; x <= n; ++x) {
                CHECK(alternate_label_real(static_cast<double>(x), r, 3, off) == l.label_of(x));
            }
        }
    }
    CHECK_THROWS_AS(build_alternate_labeling(1, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_alternate_labeling(2, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("excluded difference check")
{
    const auto delta = make_rational(1, 100);
    CHECK_FALSE(excluded_difference_check(Rational(20), 2, 10, delta));
    CHECK_FALSE(excluded_difference_check(Rational(10), 2, 10, delta));
    CHECK(excluded_difference_check(Rational(7), 2, 10, delta));
    CHECK_FALSE(excluded_difference_check(make_rational(101, 10), 2, 10, delta));
    CHECK(excluded_difference_check(make_rational(103, 10), 2, 10, delta));
    CHECK_FALSE(excluded_difference_check(Rational(0), 2, 10, delta));
}

TEST_CASE("a +1 transversal family has at most 3r/delta balls")
{
    // Labeled domain (0, r t D]; balls B(a + i d, delta r D) must lie inside it.
    for (std::int64_t r = 2; r <= 3; ++r) {
        const std::int64_t D = 5;
        const std::int64_t t = 40;
        const Rational delta = make_rational(1, 2 * r * (r + 1));
        const double rho = to_double(delta) * static_cast<double>(r * D);
        const double top = static_cast<double>(r * t * D);
        const double bound = 3.0 * static_cast<double>(r) / to_double(delta);
        auto has_plus = [&](double lo, double hi) {
            // Open interval (lo, hi) meets a +1 block (bD, (b+1)D].
            for (auto b = static_cast<std::int64_t>(std::floor(lo / D)); b * D < hi; ++b) {
                if (static_cast<double>((b + 1) * D) <= lo) continue;
                if (((b % r) + r) % r != r - 1) return true;
            }
            return false;
        };
        int tested = 0;
        for (int di = 1; di <= 400; ++di) {
            const Rational d = make_rational(di, 8);
            if (!excluded_difference_check(d, r, D, delta)) continue;
            const double dd = to_double(d);
            for (int ai = 0; ai < 40; ++ai) {
                const double a = rho + ai * 0.25;
                std::int64_t ell = 0;
                while (true) {
                    const double c = a + static_cast<double>(ell) * dd;
                    if (c + rho > top) break;
                    if (!has_plus(c - rho, c + rho)) break;
                    ++ell;
                }
                ++tested;
                CHECK(static_cast<double>(ell) <= bound);
            }
        }
        CHECK(tested > 100);
    }
}

TEST_CASE("monochromatic +1 progressions concentrate in one D-block")
{
    struct Case {
        std::int64_t r, D, t, ell;
        Epsilon eps;
    };
    const std::vector<Case> cases{{2, 8, 1, 5, eps_of(1, 5)}, {3, 4, 1, 6, eps_of(1, 7)}, {3, 4, 1, 8, eps_of(1, 7)},
                                  {2, 6, 2, 8, eps_of(1, 5)}};
    int instances = 0;
    for (const auto& cs : cases) {
        REQUIRE(cs.ell >= cs.t * (cs.r + 1) + 2);
        auto lab = build_alternate_labeling(cs.r, cs.D, cs.t, 0);
        std::vector<std::int64_t> plus;
        for (std::size_t i = 0; i < lab.labels.size(); ++i) {
            if (lab.labels[i] > 0) plus.push_back(static_cast<std::int64_t>(i) + 1);
        }
        for_each_eps_ap(plus, static_cast<std::size_t>(cs.ell), cs.eps, [&](const std::vector<std::int64_t>& s, const Witness1D&) {
            ++instances;
            std::vector<std::int64_t> per_block(static_cast<std::size_t>(cs.r * cs.t), 0);
            for (auto x : s) ++per_block[static_cast<std::size_t>((x - 1) / cs.D)];
            const auto most = *std::max_element(per_block.begin(), per_block.end());
            CHECK(static_cast<double>(most) * static_cast<double>(cs.r - 1) >= static_cast<double>(cs.ell));
            return true;
        });
    }
    CHECK(instances > 0);
}

TEST_CASE("simple r=2 coloring")
{
    auto c5 = build_simple_r2_coloring(5);
    CHECK(c5.colors() == std::vector<std::uint16_t>{1, 1, 1, 1, 2, 2, 2, 2});
    auto c8 = build_simple_r2_coloring(8);
    CHECK(c8.N() == 28);
    for (std::int64_t x = 1; x <= 28; ++x) CHECK(c8.color_of(x) == c8.color_of(((x - 1) / 7) * 7 + 1));
    CHECK(build_simple_r2_coloring(4).N() == 0);
    CHECK_THROWS_AS(build_simple_r2_coloring(3), std::invalid_argument);

    for (std::int64_t k : {7, 8}) {
        for (auto e : {eps_of(1, 5), eps_of(1, 4)}) {
            auto c = build_simple_r2_coloring(k);
            CHECK(verify_no_mono_ap(c, static_cast<std::size_t>(k), e).has_value() ==
                  brute_has_mono_ap(c, static_cast<std::size_t>(k), e));
        }
    }
}

TEST_CASE("verify_no_mono_ap returns the lexicographically first witness")
{
    CHECK_FALSE(verify_no_mono_ap(Coloring(1, {1, 1}), 3, eps_of(1, 3)));
    auto hit = verify_no_mono_ap(Coloring(1, {1, 1, 1}), 3, eps_of(1, 3));
    REQUIRE(hit);
    CHECK(hit->color == 1);
    CHECK(hit->subset == std::vector<std::int64_t>{1, 2, 3});
    CHECK(hit->witness.d == 1);

    auto h2 = verify_no_mono_ap(Coloring(2, {2, 1, 2, 1, 1, 2, 1}), 3, eps_of(1, 4));
    REQUIRE(h2);
    CHECK(h2->color == 1);
    CHECK(h2->subset == std::vector<std::int64_t>{2, 4, 5});
}

TEST_CASE("lcm_range")
{
    CHECK(lcm_range(1, 1) == 1);
    CHECK(lcm_range(4, 6) == 60);
    CHECK(lcm_range(1, 10) == 2520);
    CHECK(lcm_range(6, 10) == 2520);
    CHECK(lcm_range(1, 30) == BigInt("2329089562800"));
    CHECK_THROWS_AS(lcm_range(3, 2), std::invalid_argument);
}
