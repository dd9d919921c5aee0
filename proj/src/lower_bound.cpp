#include "apvdw/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apvdw {

namespace {

long double log_inv_5eps(const Epsilon& eps)
{
    return std::log(1.0L / (5.0L * static_cast<long double>(eps.as_double())));
}

long double hypothesis_bound(std::int64_t r, const Epsilon& eps)
{
    long double b = std::pow(2.0L, static_cast<long double>(r));
    for (std::int64_t i = 2; i <= r; ++i) b *= static_cast<long double>(i);
    b /= static_cast<long double>(eps.as_double());
    b *= std::pow(log_inv_5eps(eps), static_cast<long double>(r));
    return b;
}

std::int64_t checked_ll(long double v, const char* what)
{
    if (!(v < 9.0e18L)) throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(std::ceil(v));
}

}  // namespace

std::int64_t lower_bound_min_k(std::int64_t r, const Epsilon& eps)
{
    if (eps.value() >= make_rational(1, 5)) throw std::domain_error("needs eps < 1/5");
    return checked_ll(hypothesis_bound(r, eps), "hypothesis bound");
}

LowerBoundParams params_eq5(std::int64_t k, std::int64_t r, const Epsilon& eps, const LowerBoundConfig& cfg)
{
    if (r < 1) throw std::invalid_argument("params_eq5 needs r >= 1");
    if (k < 1) throw std::invalid_argument("params_eq5 needs k >= 1");
    LowerBoundParams p;
    p.k = k;
    p.r = r;
    p.eps = eps.value();
    if (r == 1) {
        p.N1 = k - 1;
        return p;
    }
    if (eps.value() > cfg.eps0) {
        throw std::domain_error("hypothesis eps <= eps0 fails: eps = " + to_string(eps.value()) +
                                ", eps0 = " + to_string(cfg.eps0));
    }
    const long double bound = hypothesis_bound(r, eps);
    if (static_cast<long double>(k) < bound) {
        throw std::domain_error("hypothesis k >= 2^r r! eps^-1 ln^r(1/(5 eps)) fails at r = " + std::to_string(r) +
                                ": k = " + std::to_string(k) + ", bound = " + std::to_string(bound));
    }
    const long double L = log_inv_5eps(eps);
    p.s = checked_ll(L / 0.9L, "s");
    if (p.s / 2 < 1) throw std::domain_error("floor(s/2) >= 1 fails: s = " + std::to_string(p.s));
    long double fact = 1;
    for (std::int64_t i = 2; i < r; ++i) fact *= static_cast<long double>(i);
    p.w = checked_ll(std::exp(0.9L * static_cast<long double>(p.s)) / (static_cast<long double>(p.s) * fact), "w");
    p.t = to_int64(ceil_div(BigInt(static_cast<long>(k)), BigInt(static_cast<long>(2 * r * p.s))));
    p.k_sub = to_int64(ceil_div(BigInt(static_cast<long>(k)), BigInt(static_cast<long>(r * p.s))));
    p.inner.push_back(params_eq5(p.k_sub, r - 1, eps, cfg));
    p.N0 = to_int64(p.inner.front().N1);
    BigInt sum = 0;
    for (std::int64_t j = 1; j <= p.s / 2; ++j) {
        const auto Dj = to_int64(ceil_div(BigInt(static_cast<long>(p.s - j + 1)) * p.N0, BigInt(static_cast<long>(p.s))));
        p.D.push_back(Dj);
        sum += Dj;
    }
    p.N1 = BigInt(static_cast<long>(r)) * p.w * p.t * sum;
    return p;
}

std::uint16_t RunColoring::color_at(std::int64_t x) const
{
    if (x < 1 || x > N) throw std::out_of_range("color_at outside [1, N]");
    auto it = std::upper_bound(runs.begin(), runs.end(), x, [](std::int64_t v, const Run& run) { return v < run.start; });
    return std::prev(it)->color;
}

Coloring RunColoring::materialize(std::uint64_t cap) const
{
    if (static_cast<std::uint64_t>(N) > cap) {
        throw std::length_error("coloring of [" + std::to_string(N) + "] exceeds the materialization cap of " +
                                std::to_string(cap));
    }
    std::vector<std::uint16_t> colors;
    colors.reserve(static_cast<std::size_t>(N));
    for (const auto& run : runs) colors.insert(colors.end(), static_cast<std::size_t>(run.length), run.color);
    return Coloring(r, std::move(colors));
}

namespace {

void append_run(RunColoring& out, std::int64_t length, std::uint16_t color, std::uint64_t cap)
{
    if (length <= 0) return;
    if (!out.runs.empty() && out.runs.back().color == color) {
        out.runs.back().length += length;
    } else {
        if (out.runs.size() >= cap) {
            throw std::length_error("run-length coloring exceeds the cap of " + std::to_string(cap) + " runs");
        }
        out.runs.push_back(Run{out.N + 1, length, color});
    }
    out.N += length;
}

// Appends the first `length` colors of `src` to `out`.
void append_prefix(RunColoring& out, const RunColoring& src, std::int64_t length, std::uint64_t cap)
{
    for (const auto& run : src.runs) {
        if (length <= 0) break;
        const auto take = std::min(length, run.length);
        append_run(out, take, run.color, cap);
        length -= take;
    }
    if (length > 0) throw std::logic_error("prefix longer than the source coloring");
}

RunColoring relabel(const RunColoring& base, const std::vector<std::uint16_t>& palette, std::size_t r)
{
    RunColoring out;
    out.r = r;
    out.N = base.N;
    out.runs = base.runs;
    for (auto& run : out.runs) run.color = palette[run.color - 1];
    return out;
}

// Coloring of [N1] with colors 1..r.
LowerBoundColoring build_level(const LowerBoundParams& p, const LowerBoundConfig& cfg)
{
    LowerBoundColoring out;
    out.params = p;
    out.phi.r = static_cast<std::size_t>(p.r);
    if (p.r == 1) {
        append_run(out.phi, p.k - 1, 1, cfg.run_cap);
        return out;
    }
    if (!fits_int64(p.N1)) throw std::overflow_error("N1 = " + p.N1.get_str() + " does not fit in 64 bits");
    const auto inner = build_level(p.inner.front(), cfg).phi;
    for (std::int64_t v = 1; v <= p.r; ++v) {
        std::vector<std::uint16_t> palette;
        for (std::int64_t c = 1; c <= p.r; ++c) {
            if (c != v) palette.push_back(static_cast<std::uint16_t>(c));
        }
        out.sub.push_back(relabel(inner, palette, static_cast<std::size_t>(p.r)));
    }
    for (std::int64_t i = 1; i <= p.w; ++i) {
        for (std::size_t j = 0; j < p.D.size(); ++j) {
            for (std::int64_t u = 1; u <= p.t; ++u) {
                for (std::int64_t v = 1; v <= p.r; ++v) {
                    append_prefix(out.phi, out.sub[static_cast<std::size_t>(v - 1)], p.D[j], cfg.run_cap);
                }
            }
        }
    }
    return out;
}

std::int64_t sum_D(const LowerBoundParams& p, std::size_t count)
{
    std::int64_t s = 0;
    for (std::size_t j = 0; j < count; ++j) s += p.D[j];
    return s;
}

}  // namespace

LowerBoundColoring build_lower_bound_runs(std::int64_t k, std::int64_t r, const Epsilon& eps, const LowerBoundConfig& cfg)
{
    return build_level(params_eq5(k, r, eps, cfg), cfg);
}

Coloring build_lower_bound_coloring(std::int64_t k, std::int64_t r, const Epsilon& eps, const LowerBoundConfig& cfg)
{
    const auto p = params_eq5(k, r, eps, cfg);
    if (p.N1 > BigInt(std::to_string(cfg.materialize_cap))) {
        throw std::length_error("N1 = " + p.N1.get_str() + " exceeds the materialization cap of " +
                                std::to_string(cfg.materialize_cap));
    }
    return build_level(p, cfg).phi.materialize(cfg.materialize_cap);
}

std::int64_t offset_alpha(const LowerBoundParams& p, std::int64_t i)
{
    return (i - 1) * p.r * p.t * sum_D(p, p.D.size());
}

std::int64_t offset_beta(const LowerBoundParams& p, std::int64_t i, std::int64_t j)
{
    if (j == 1) return offset_alpha(p, i);
    return p.r * p.t * sum_D(p, static_cast<std::size_t>(j - 1)) + offset_alpha(p, i);
}

std::int64_t offset_gamma(const LowerBoundParams& p, std::int64_t i, std::int64_t j, std::int64_t u)
{
    return (u - 1) * p.r * p.D[static_cast<std::size_t>(j - 1)] + offset_beta(p, i, j);
}

std::int64_t offset_sigma(const LowerBoundParams& p, std::int64_t i, std::int64_t j, std::int64_t u, std::int64_t v)
{
    return (v - 1) * p.D[static_cast<std::size_t>(j - 1)] + offset_gamma(p, i, j, u);
}

namespace {

// Walks the runs of a coloring over consecutive intervals.
class RunCursor {
public:
    explicit RunCursor(const RunColoring& c) : c_(c) {}

    // Calls f(color, length) for the pieces of [lo, lo + len - 1].
    template <class F>
    void visit(std::int64_t lo, std::int64_t len, F&& f)
    {
        while (idx_ < c_.runs.size() && c_.runs[idx_].start + c_.runs[idx_].length <= lo) ++idx_;
        while (idx_ > 0 && c_.runs[idx_].start > lo) --idx_;
        std::size_t i = idx_;
        std::int64_t x = lo;
        const std::int64_t end = lo + len;
        while (x < end && i < c_.runs.size()) {
            const auto& run = c_.runs[i];
            const auto run_end = run.start + run.length;
            const auto piece = std::min(end, run_end) - x;
            f(run.color, piece);
            x += piece;
            if (x >= run_end) ++i;
        }
        if (x < end) f(std::uint16_t{0}, end - x);
    }

private:
    const RunColoring& c_;
    std::size_t idx_ = 0;
};

// Sequence of (color, length) pieces with adjacent equal colors merged.
using Pieces = std::vector<std::pair<std::uint16_t, std::int64_t>>;

void push_piece(Pieces& out, std::uint16_t color, std::int64_t len)
{
    if (!out.empty() && out.back().first == color) out.back().second += len;
    else out.emplace_back(color, len);
}

}  // namespace

StructureReport verify_lower_bound_structure(const LowerBoundColoring& lb)
{
    StructureReport rep;
    const auto& p = lb.params;
    if (p.r < 2) {
        rep.tiles = lb.phi.N == p.k - 1;
        rep.omits_color = rep.matches_prefix = true;
        if (!rep.tiles) rep.failure = "base coloring has the wrong length";
        return rep;
    }
    rep.tiles = rep.omits_color = rep.matches_prefix = true;
    auto fail = [&](bool& flag, const std::string& why) {
        if (flag) {
            flag = false;
            if (rep.failure.empty()) rep.failure = why;
        }
    };

    if (!fits_int64(p.N1) || lb.phi.N != to_int64(p.N1)) fail(rep.tiles, "coloring length differs from N1");
    const auto S = static_cast<std::int64_t>(p.D.size());
    if (offset_alpha(p, 1) != 0) fail(rep.tiles, "alpha_1 is not 0");
    if (offset_alpha(p, p.w + 1) != lb.phi.N) fail(rep.tiles, "Y blocks do not end at N1");

    std::int64_t expect = 0;  // running end of the previous Z_{u,v} block
    std::vector<Pieces> prefix(static_cast<std::size_t>(S) * static_cast<std::size_t>(p.r));
    for (std::int64_t j = 1; j <= S; ++j) {
        for (std::int64_t v = 1; v <= p.r; ++v) {
            auto& dst = prefix[static_cast<std::size_t>((j - 1) * p.r + (v - 1))];
            RunCursor cur(lb.sub[static_cast<std::size_t>(v - 1)]);
            cur.visit(1, p.D[static_cast<std::size_t>(j - 1)], [&](std::uint16_t c, std::int64_t len) { push_piece(dst, c, len); });
        }
    }

    RunCursor cursor(lb.phi);
    Pieces got;
    for (std::int64_t i = 1; i <= p.w; ++i) {
        if (offset_beta(p, i, 1) != offset_alpha(p, i)) fail(rep.tiles, "beta_{i,1} differs from alpha_i");
        for (std::int64_t j = 1; j <= S; ++j) {
            const auto Dj = p.D[static_cast<std::size_t>(j - 1)];
            if (offset_beta(p, i, j) + p.r * p.t * Dj !=
                (j < S ? offset_beta(p, i, j + 1) : offset_alpha(p, i + 1))) {
                fail(rep.tiles, "Y_{i,j} blocks are not consecutive");
            }
            for (std::int64_t u = 1; u <= p.t; ++u) {
                for (std::int64_t v = 1; v <= p.r; ++v) {
                    const auto sigma = offset_sigma(p, i, j, u, v);
                    if (sigma != expect) fail(rep.tiles, "Z blocks are not consecutive");
                    expect = sigma + Dj;
                    ++rep.blocks;
                    got.clear();
                    cursor.visit(sigma + 1, Dj, [&](std::uint16_t c, std::int64_t len) {
                        if (c == v) fail(rep.omits_color, "a Z block uses its omitted color");
                        push_piece(got, c, len);
                    });
                    if (got != prefix[static_cast<std::size_t>((j - 1) * p.r + (v - 1))]) {
                        fail(rep.matches_prefix, "a Z block differs from the recursive prefix");
                    }
                }
            }
        }
    }
    if (expect != lb.phi.N) fail(rep.tiles, "Z blocks do not cover [N1]");
    return rep;
}

}  // namespace apvdw
