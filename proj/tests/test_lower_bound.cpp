#include "doctest.h"

#include "apvdw/lower_bound.hpp"

using namespace apvdw;

namespace {

Epsilon eps_of(std::int64_t p, std::int64_t q) { return Epsilon(make_rational(p, q)); }

}  // namespace

TEST_CASE("base level of the recursion")
{
    auto p = params_eq5(9, 1, eps_of(1, 3));
    CHECK(p.N1 == 8);
    auto c = build_lower_bound_coloring(9, 1, eps_of(1, 3));
    CHECK(c.N() == 8);
    CHECK(c.color_class(1).size() == 8);
}

TEST_CASE("hypothesis violations name the inequality")
{
    const auto e = eps_of(1, 1000);
    const auto kmin = lower_bound_min_k(2, e);
    CHECK(kmin == 224578);
    try {
        params_eq5(kmin - 1, 2, e);
        FAIL("expected a domain error");
    } catch (const std::domain_error& err) {
        CHECK(std::string(err.what()).find("k >= 2^r r! eps^-1 ln^r(1/(5 eps))") != std::string::npos);
    }
    try {
        params_eq5(kmin, 2, eps_of(1, 500));
        FAIL("expected a domain error");
    } catch (const std::domain_error& err) {
        CHECK(std::string(err.what()).find("eps <= eps0") != std::string::npos);
    }
    LowerBoundConfig loose;
    loose.eps0 = make_rational(1, 100);
    CHECK_NOTHROW(params_eq5(lower_bound_min_k(2, eps_of(1, 100)), 2, eps_of(1, 100), loose));
}

TEST_CASE("rounded parameters at the smallest admissible k")
{
    const auto e = eps_of(1, 1000);
    auto p = params_eq5(224578, 2, e);
    CHECK(p.s == 6);
    CHECK(p.w == 37);
    CHECK(p.t == 9358);
    CHECK(p.k_sub == 18715);
    CHECK(p.N0 == 18714);
    CHECK(p.D == std::vector<std::int64_t>{18714, 15595, 12476});
    BigInt sum = 0;
    for (auto d : p.D) sum += d;
    CHECK(p.N1 == BigInt(static_cast<long>(p.r)) * p.w * p.t * sum);
    CHECK(p.N1 == BigInt("32398238220"));
    for (std::size_t j = 1; j < p.D.size(); ++j) CHECK(p.D[j] <= p.D[j - 1]);
    CHECK(2 * p.D.back() >= p.N0);
}

TEST_CASE("four-level partition offsets")
{
    auto p = params_eq5(224578, 2, eps_of(1, 1000));
    CHECK(offset_alpha(p, 1) == 0);
    CHECK(offset_beta(p, 1, 1) == 0);
    CHECK(offset_beta(p, 2, 1) == offset_alpha(p, 2));
    CHECK(offset_beta(p, 1, 2) == 2 * 9358 * 18714);
    CHECK(offset_gamma(p, 1, 1, 2) == 2 * 18714);
    CHECK(offset_sigma(p, 1, 1, 1, 2) == 18714);
    CHECK(offset_sigma(p, 3, 2, 5, 2) == offset_gamma(p, 3, 2, 5) + 15595);
    CHECK(BigInt(static_cast<long>(offset_alpha(p, p.w + 1))) == p.N1);
}

TEST_CASE("recursive coloring structure at r = 2")
{
    auto lb = build_lower_bound_runs(224578, 2, eps_of(1, 1000));
    CHECK(lb.phi.N == 32398238220);
    CHECK(lb.sub.size() == 2);
    CHECK(lb.sub[0].runs.size() == 1);
    CHECK(lb.sub[0].runs[0].color == 2);
    CHECK(lb.sub[1].runs[0].color == 1);
    auto rep = verify_lower_bound_structure(lb);
    CHECK(rep.tiles);
    CHECK(rep.omits_color);
    CHECK(rep.matches_prefix);
    CHECK(rep.blocks == 37u * 3u * 9358u * 2u);
    CHECK(lb.phi.color_at(1) == 2);
    CHECK(lb.phi.color_at(18714) == 2);
    CHECK(lb.phi.color_at(18715) == 1);
}

TEST_CASE("structure check detects tampering")
{
    auto lb = build_lower_bound_runs(224578, 2, eps_of(1, 1000));
    auto& runs = lb.phi.runs;
    // Give the second Z block its own omitted color.
    runs[1].color = 2;
    auto rep = verify_lower_bound_structure(lb);
    CHECK_FALSE(rep.omits_color);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("materialization is capped")
{
    LowerBoundConfig cfg;
    cfg.materialize_cap = 1000;
    CHECK_THROWS_AS(build_lower_bound_coloring(224578, 2, eps_of(1, 1000), cfg), std::length_error);
    LowerBoundConfig tiny;
    tiny.run_cap = 10;
    CHECK_THROWS_AS(build_lower_bound_runs(224578, 2, eps_of(1, 1000), tiny), std::length_error);
}

TEST_CASE("run colorings materialize")
{
    RunColoring rc;
    rc.r = 2;
    rc.N = 5;
    rc.runs = {{1, 2, 1}, {3, 3, 2}};
    CHECK(rc.materialize(10).colors() == std::vector<std::uint16_t>{1, 1, 2, 2, 2});
    CHECK(rc.color_at(3) == 2);
    CHECK_THROWS_AS(rc.color_at(6), std::out_of_range);
}
