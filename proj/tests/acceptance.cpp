#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "apvdw/cli.hpp"
#include "apvdw/colorings.hpp"
#include "apvdw/density.hpp"
#include "apvdw/formats.hpp"
#include "apvdw/lower_bound.hpp"
#include "apvdw/search.hpp"
#include "oracles.hpp"

using namespace apvdw;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Epsilon eps_of(std::int64_t p, std::int64_t q) { return Epsilon(make_rational(p, q)); }

std::vector<std::vector<std::int64_t>> k_subsets(std::int64_t N, std::size_t k)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::int64_t>(i) + 1;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == N - static_cast<std::int64_t>(k - i)) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// Every k-subset of each color class checked with the LP oracle.
bool coloring_good_by_oracle(const Coloring& c, std::size_t k, const Rational& eps)
{
    for (std::uint16_t col = 1; col <= c.r(); ++col) {
        auto cls = c.color_class(col);
        if (cls.size() < k) continue;
        for (const auto& idx : k_subsets(static_cast<std::int64_t>(cls.size()), k)) {
            std::vector<std::int64_t> s;
            for (auto i : idx) s.push_back(cls[static_cast<std::size_t>(i - 1)]);
            if (oracle::ap_lp(s, eps)) return false;
        }
    }
    return true;
}

Outcome criterion1()
{
    const char* argv[] = {"apvdw", "recognize", "ap", "--points", "1,3,6", "--eps", "1/3", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli_main(9, const_cast<char**>(argv), out, err);
    const auto j = Json::parse(out.str());
    const std::vector<std::int64_t> xs{1, 3, 6};
    const Rational a = make_rational(4, 5), d = make_rational(12, 5), bound = make_rational(4, 5);
    bool residuals = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        residuals = residuals && abs(Rational(xs[i]) - a - Rational(static_cast<long>(i)) * d) < bound;
    }
    const bool holds = witness_holds(xs, eps_of(1, 3), a, d);
    return {code == 0 && j["accepted"] == true && residuals && holds,
            "exit " + std::to_string(code) + ", residuals 1/5 1/5 2/5 < 4/5"};
}

Outcome criterion2()
{
    std::size_t total = 0, agree = 0;
    for (std::size_t k : {3u, 4u, 5u}) {
        const auto subsets = k_subsets(12, k);
        for (auto [p, q] : {std::pair{1, 10}, std::pair{1, 4}, std::pair{1, 3}}) {
            const auto e = eps_of(p, q);
            for (const auto& s : subsets) {
                ++total;
                agree += recognize_ap(IndexedPoints1D(s), e).has_value() == oracle::ap_lp(s, e.value());
            }
        }
    }
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " instances agree"};
}

Outcome criterion3()
{
    auto b = build_blowup_1d(3, 2, eps_of(1, 3)).one_based();
    if (b.size() != 9) return {false, "B_2 has " + std::to_string(b.size()) + " elements"};
    std::size_t with_mono = 0;
    for (std::uint32_t mask = 0; mask < 512; ++mask) {
        std::vector<std::int64_t> cls[2];
        for (std::size_t i = 0; i < 9; ++i) cls[(mask >> i) & 1].push_back(b[i]);
        bool found = false;
        for (auto& cl : cls) {
            if (cl.size() < 3) continue;
            for (const auto& idx : k_subsets(static_cast<std::int64_t>(cl.size()), 3)) {
                std::vector<std::int64_t> s;
                for (auto i : idx) s.push_back(cl[static_cast<std::size_t>(i - 1)]);
                if (recognize_ap(IndexedPoints1D(s), eps_of(1, 3))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        with_mono += found;
    }
    return {with_mono == 512, std::to_string(with_mono) + "/512 colorings have a monochromatic AP_3(1/3)"};
}

Outcome criterion4()
{
    const auto e = eps_of(1, 3);
    auto w = exact_W(3, 2, e, 60);
    if (w.kind != OutcomeKind::value) return {false, "no exact value below 60"};
    const std::int64_t W = w.value;
    bool good = w.coloring && static_cast<std::int64_t>(w.coloring->N()) == W - 1 &&
                !verify_no_mono_ap(*w.coloring, 3, e) && coloring_good_by_oracle(*w.coloring, 3, e.value());
    Hypergraph oracle_h{W, 3, e.value(), oracle::naive_edges(W, 3, e.value())};
    const bool unsat = !find_good_coloring(oracle_h, W, 2).coloring;
    bool exhaustive = true;
    if (W <= 20) {
        for (std::uint32_t mask = 0; mask < (1u << W) && exhaustive; ++mask) {
            std::vector<std::uint16_t> colors(static_cast<std::size_t>(W));
            for (std::int64_t i = 0; i < W; ++i) colors[static_cast<std::size_t>(i)] = 1 + ((mask >> i) & 1);
            exhaustive = !coloring_good_by_oracle(Coloring(2, colors), 3, e.value());
        }
    }
    return {W <= 54 && good && unsat && exhaustive,
            "W = " + std::to_string(W) + " <= 54, witness at " + std::to_string(W - 1) + " verified"};
}

Outcome criterion5()
{
    bool ok = true;
    std::string bad;
    for (auto [p, q] : {std::pair{1, 10}, std::pair{1, 3}, std::pair{2, 5}}) {
        const auto e = eps_of(p, q);
        for (std::size_t k = 2; k <= 8; ++k) {
            auto w = exact_W(k, 1, e, 20);
            if (w.kind != OutcomeKind::value || w.value != static_cast<std::int64_t>(k)) {
                ok = false;
                bad += " k=" + std::to_string(k);
            }
        }
        for (std::size_t r = 1; r <= 5; ++r) {
            auto w = exact_W(2, r, e, 20);
            if (w.kind != OutcomeKind::value || w.value != static_cast<std::int64_t>(r) + 1) {
                ok = false;
                bad += " r=" + std::to_string(r);
            }
        }
    }
    return {ok, ok ? "W(k,1) = k for k <= 8, W(2,r) = r+1 for r <= 5" : "mismatch at" + bad};
}

Outcome criterion6()
{
    std::mt19937_64 rng(2024);
    const auto e = eps_of(1, 20);
    std::size_t filtered = 0, counterexamples = 0;
    const std::size_t trials = 20000;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t k = 3 + rng() % 4;
        std::vector<std::int64_t> pool(50);
        for (std::size_t i = 0; i < 50; ++i) pool[i] = static_cast<std::int64_t>(i) + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::int64_t> s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(s.begin(), s.end());
        if (gap_ratio_filter(s, e)) continue;
        ++filtered;
        counterexamples += recognize_ap(IndexedPoints1D(s), e).has_value();
    }
    return {counterexamples == 0, std::to_string(trials) + " subsets, " + std::to_string(filtered) +
                                      " filtered out, " + std::to_string(counterexamples) + " counterexamples"};
}

Outcome criterion7()
{
    const auto e = eps_of(1, 125);
    const APkFreeProvider exact{ProviderMode::exact};
    bool ok = true;
    std::string sizes;
    for (std::int64_t h = 1; h <= 3; ++h) {
        auto ds = build_behrend_digit_set(e, h, 3, exact);
        const auto& c = ds.construction;
        const auto head_max = apk_free_set(0, c.q - 1, 3, exact).size();
        const auto lo = (2 * c.q + 4) / 5, hi = 3 * c.q / 5;
        const auto tail_max = apk_free_set(lo, hi, 3, exact).size();
        const std::size_t expect = std::size_t{4} << (h - 1);
        ok = ok && ds.elements.size() == expect && c.head.size() == 4 && c.tail.size() == 2 && head_max == 4 &&
             tail_max == 2;
        for (const auto& idx : k_subsets(static_cast<std::int64_t>(ds.elements.size()), 3)) {
            std::vector<std::int64_t> s;
            for (auto i : idx) s.push_back(ds.elements[static_cast<std::size_t>(i - 1)]);
            if (recognize_ap(IndexedPoints1D(s), e)) ok = false;
        }
        sizes += (sizes.empty() ? "" : ", ") + std::to_string(ds.elements.size());
    }
    return {ok, "sizes " + sizes + ", head 4, tail 2, no AP_3(1/125)"};
}

Outcome criterion8()
{
    auto a2 = build_cube_blowup_r(2, 3, eps_of(1, 2), 2);
    if (a2.t != 9 || a2.elements.size() != 81) return {false, "unexpected t or |A_2|"};
    auto blocks = cube_blowup_blocks(a2);
    std::mt19937_64 rng(8);
    std::size_t accepted = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<PointI> pick;
        for (const auto& b : blocks) pick.push_back(b[rng() % b.size()]);
        accepted += recognize_cube(IndexedGrid(2, 3, pick), eps_of(1, 2), 1e-9).verdict == CubeVerdict::feasible;
    }
    return {accepted == 100, std::to_string(accepted) + "/100 transversals accepted, t = 9, |A_2| = 81"};
}

Outcome criterion9()
{
    std::mt19937_64 rng(9);
    const std::int64_t N = 6;
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PointI> A, X;
        for (std::int64_t x = 1; x <= N; ++x) {
            for (std::int64_t y = 1; y <= N; ++y) {
                if (rng() % 3 == 0) A.push_back({x, y});
                if (rng() % 2 == 0) X.push_back({x, y});
            }
        }
        if (A.empty()) A.push_back({3, 3});
        std::size_t total = 0;
        for (std::int64_t u = -N + 1; u <= N; ++u) {
            for (std::int64_t v = -N + 1; v <= N; ++v) total += translate_intersection(A, X, {u, v});
        }
        auto best = find_dense_translate(A, X, N, 2);
        // alpha/2^m |A| with alpha = |X| / N^m.
        const bool bound = best.count * 4 * N * N >= X.size() * A.size();
        ok = ok && total == X.size() * A.size() && best.meets_bound && bound &&
             best.count == translate_intersection(A, X, best.shift);
    }
    return {ok, "20 random pairs in [6]^2"};
}

Outcome criterion10()
{
    const std::vector<Epsilon> eps{eps_of(1, 3), eps_of(1, 4), eps_of(1, 5)};
    std::vector<std::int64_t> W;
    for (const auto& e : eps) {
        auto w = exact_W(3, 2, e, 60);
        if (w.kind != OutcomeKind::value) return {false, "W not determined"};
        W.push_back(w.value);
    }
    bool ok = W[0] <= W[1] && W[1] <= W[2];
    auto exact = exact_f_exact_ap(15, 3);
    std::vector<std::vector<std::size_t>> f;
    for (const auto& e : eps) {
        auto t = max_free_subsets(enumerate_eps_aps(15, 3, e));
        if (!t.complete) return {false, "f not determined"};
        f.push_back(t.f);
    }
    auto fx = max_free_subsets(exact_ap_hypergraph(15, 3));
    for (std::size_t n = 1; n <= 15; ++n) {
        ok = ok && f[0][n] <= f[1][n] && f[1][n] <= f[2][n] && f[2][n] <= fx.f[n];
    }
    ok = ok && exact.kind == OutcomeKind::value && static_cast<std::size_t>(exact.value) == fx.f[15];
    return {ok, "W = " + std::to_string(W[0]) + ", " + std::to_string(W[1]) + ", " + std::to_string(W[2]) +
                    "; f(15) = " + std::to_string(f[0][15]) + ", " + std::to_string(f[1][15]) + ", " +
                    std::to_string(f[2][15]) + " <= " + std::to_string(fx.f[15])};
}

Outcome criterion11()
{
    const auto e = eps_of(1, 1000);
    const auto k = lower_bound_min_k(2, e);
    bool below_rejected = false;
    try {
        params_eq5(k - 1, 2, e);
    } catch (const std::domain_error&) {
        below_rejected = true;
    }
    auto lb = build_lower_bound_runs(k, 2, e);
    auto rep = verify_lower_bound_structure(lb);
    return {below_rejected && rep.ok(), "k = " + std::to_string(k) + ", N1 = " + lb.params.N1.get_str() + ", " +
                                            std::to_string(rep.blocks) + " blocks" +
                                            (rep.failure.empty() ? "" : ", " + rep.failure)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"example {1,3,6} at eps 1/3", criterion1},
        {"1D recognizer vs LP oracle", criterion2},
        {"blow-up Ramsey property", criterion3},
        {"upper-bound consistency", criterion4},
        {"trivial exact values", criterion5},
        {"gap filter necessity", criterion6},
        {"digit-set freeness", criterion7},
        {"cube transversals", criterion8},
        {"averaging identity", criterion9},
        {"monotonicity suite", criterion10},
        {"recursive coloring structure", criterion11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("%s %zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
