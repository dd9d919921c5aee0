#include "apvdw/density.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "apvdw/region.hpp"
#include "apvdw/search.hpp"

namespace apvdw {

ProviderMode parse_provider_mode(const std::string& name)
{
    if (name == "exact") return ProviderMode::exact;
    if (name == "behrend3") return ProviderMode::behrend3;
    if (name == "greedy") return ProviderMode::greedy;
    if (name == "auto") return ProviderMode::automatic;
    throw std::invalid_argument("unknown provider mode: " + name);
}

const char* to_string(ProviderMode mode)
{
    switch (mode) {
    case ProviderMode::exact: return "exact";
    case ProviderMode::behrend3: return "behrend3";
    case ProviderMode::greedy: return "greedy";
    case ProviderMode::automatic: return "auto";
    }
    return "?";
}

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in construction");
    return out;
}

// Subset of [0, n-1]: numbers whose base-(2d-1) digits lie in [0, d-1]
// and whose digit vectors share one squared norm. Largest such set over
// all admissible (d, digit count).
std::vector<std::int64_t> behrend_sphere_set(std::int64_t n)
{
    std::vector<std::int64_t> best;
    for (std::int64_t d = 2; 2 * d - 1 <= n; ++d) {
        const std::int64_t base = 2 * d - 1;
        std::int64_t power = base;
        for (std::int64_t digits = 1; power <= n; ++digits) {
            std::map<std::int64_t, std::vector<std::int64_t>> spheres;
            std::vector<std::int64_t> v(static_cast<std::size_t>(digits), 0);
            while (true) {
                std::int64_t value = 0;
                std::int64_t norm = 0;
                for (std::size_t i = v.size(); i-- > 0;) {
                    value = value * base + v[i];
                    norm += v[i] * v[i];
                }
                spheres[norm].push_back(value);
                std::size_t i = 0;
                while (i < v.size() && v[i] == d - 1) v[i++] = 0;
                if (i == v.size()) break;
                ++v[i];
            }
            for (auto& [norm, members] : spheres) {
                if (members.size() > best.size()) {
                    std::sort(members.begin(), members.end());
                    best = members;
                }
            }
            if (power > n / base) break;
            power *= base;
        }
    }
    if (best.empty() && n >= 1) best.push_back(0);
    return best;
}

std::vector<std::int64_t> greedy_interval(std::int64_t lo, std::int64_t hi, std::size_t k)
{
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<char> in(n, 0);
    std::vector<std::int64_t> out;
    const auto steps = static_cast<std::int64_t>(k - 1);
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(n); ++x) {
        bool ok = true;
        for (std::int64_t d = 1; ok && x - steps * d >= 0; ++d) {
            bool all = true;
            for (std::int64_t i = 1; i <= steps; ++i) {
                if (!in[static_cast<std::size_t>(x - i * d)]) {
                    all = false;
                    break;
                }
            }
            if (all) ok = false;
        }
        if (ok) {
            in[static_cast<std::size_t>(x)] = 1;
            out.push_back(x + lo);
        }
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> apk_free_set(std::int64_t lo, std::int64_t hi, std::size_t k, const APkFreeProvider& provider)
{
    if (lo > hi) throw std::invalid_argument("apk_free_set needs lo <= hi");
    if (k < 3) throw std::invalid_argument("apk_free_set needs k >= 3");
    const std::int64_t n = hi - lo + 1;
    ProviderMode mode = provider.mode;
    if (mode == ProviderMode::automatic) {
        if (n <= provider.exact_cap) mode = ProviderMode::exact;
        else if (k == 3) mode = ProviderMode::behrend3;
        else mode = ProviderMode::greedy;
    }
    switch (mode) {
    case ProviderMode::exact: {
        if (n > provider.exact_cap) {
            throw std::invalid_argument("exact provider limited to " + std::to_string(provider.exact_cap) +
                                        " elements, interval has " + std::to_string(n));
        }
        auto table = max_free_subsets(exact_ap_hypergraph(n, k));
        std::vector<std::int64_t> out;
        for (auto x : table.best) out.push_back(x + lo - 1);
        return out;
    }
    case ProviderMode::behrend3: {
        if (k != 3) throw std::invalid_argument("behrend3 provider only applies to k = 3");
        auto out = behrend_sphere_set(n);
        for (auto& x : out) x += lo;
        return out;
    }
    case ProviderMode::greedy:
        return greedy_interval(lo, hi, k);
    case ProviderMode::automatic:
        break;
    }
    throw std::logic_error("unreachable provider mode");
}

DigitSet build_behrend_digit_set(const Epsilon& eps, std::int64_t h, std::size_t k, const APkFreeProvider& provider)
{
    if (eps.value() <= 0 || eps.value() > make_rational(1, 125)) {
        throw std::domain_error("digit construction needs 0 < eps <= 1/125, got " + to_string(eps.value()));
    }
    if (h < 1) throw std::invalid_argument("digit construction needs h >= 1");
    DigitSet out;
    auto& c = out.construction;
    c.q = to_int64(floor(1 / (25 * eps.value())));
    c.h = h;
    c.k = k;
    c.head = apk_free_set(0, c.q - 1, k, provider);
    c.tail = apk_free_set(to_int64(ceil_div(2 * BigInt(static_cast<long>(c.q)), 5)),
                          to_int64(floor_div(3 * BigInt(static_cast<long>(c.q)), 5)), k, provider);
    c.N = 1;
    for (std::int64_t i = 0; i < h; ++i) c.N = mul_checked(c.N, c.q);

    std::vector<std::int64_t> partial{0};  // values of the h-1 tail digits
    std::int64_t place = 1;
    for (std::int64_t i = 0; i + 1 < h; ++i) {
        std::vector<std::int64_t> next;
        for (auto p : partial) {
            for (auto s : c.tail) next.push_back(p + s * place);
        }
        partial = std::move(next);
        place *= c.q;
    }
    for (auto s : c.head) {
        for (auto p : partial) out.elements.push_back(p + s * place);
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::vector<PointI> product_free_set(const std::vector<std::int64_t>& A, std::size_t m, std::int64_t N)
{
    if (m < 1) throw std::invalid_argument("product set needs m >= 1");
    for (auto a : A) {
        if (a < 1 || a > N) throw std::invalid_argument("product set needs A inside [1, N]");
    }
    std::vector<std::int64_t> first(A);
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());
    std::vector<PointI> out;
    for (auto a : first) {
        PointI p(m, 1);
        p[0] = a;
        while (true) {
            out.push_back(p);
            std::size_t j = m;
            while (j > 1 && p[j - 1] == N) p[--j] = 1;
            if (j <= 1) break;
            ++p[j - 1];
        }
    }
    return out;
}

std::int64_t cube_blowup_iterations(std::size_t m, std::size_t k, const Rational& alpha)
{
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
    BigInt K = 1;
    for (std::size_t i = 0; i < m; ++i) K *= static_cast<unsigned long>(k);
    BigInt lhs = 1;  // (K-1)^r
    BigInt rhs = 1;  // K^r
    for (std::int64_t r = 1;; ++r) {
        lhs *= K - 1;
        rhs *= K;
        if (lhs * alpha.get_den() < alpha.get_num() * rhs) return r;
    }
}

std::int64_t cube_blowup_scale(std::size_t m, std::size_t k, const Epsilon& eps)
{
    // t^2 p^2 >= k^2 q^2 m with eps = p/q.
    const BigInt p = eps.value().get_num();
    const BigInt q = eps.value().get_den();
    const BigInt target = BigInt(static_cast<unsigned long>(k)) * static_cast<unsigned long>(k) * q * q *
                          static_cast<unsigned long>(m);
    BigInt t = sqrt(BigInt(target / (p * p)));
    while (t * t * p * p < target) ++t;
    while (t > 1 && (t - 1) * (t - 1) * p * p >= target) --t;
    return to_int64(t);
}

CubeBlowupSpec build_cube_blowup_r(std::size_t m, std::size_t k, const Epsilon& eps, std::int64_t r,
                                   std::uint64_t size_cap)
{
    if (m < 1) throw std::invalid_argument("cube blow-up needs m >= 1");
    if (k < 2) throw std::invalid_argument("cube blow-up needs k >= 2");
    if (r < 1) throw std::invalid_argument("cube blow-up needs r >= 1");
    CubeBlowupSpec spec;
    spec.m = m;
    spec.k = k;
    spec.eps = eps.value();
    spec.r = r;
    spec.t = cube_blowup_scale(m, k, eps);

    BigInt count = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < m; ++j) count *= static_cast<unsigned long>(k);
    }
    if (count > BigInt(std::to_string(size_cap))) {
        throw std::length_error("cube blow-up with r=" + std::to_string(r) + " has " + count.get_str() +
                                " points, above the cap of " + std::to_string(size_cap));
    }

    // 1-D blow-up values, then the m-fold product.
    std::vector<std::int64_t> line{0};
    std::int64_t place = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        std::vector<std::int64_t> next;
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(k); ++b) {
            for (auto x : line) next.push_back(x + mul_checked(b, place));
        }
        line = std::move(next);
        if (i + 1 < r) place = mul_checked(place, spec.t);
    }
    std::sort(line.begin(), line.end());
    spec.box = line.back() + 1;

    std::vector<std::size_t> idx(m, 0);
    while (true) {
        PointI p(m);
        for (std::size_t j = 0; j < m; ++j) p[j] = line[idx[j]];
        spec.elements.push_back(std::move(p));
        std::size_t j = m;
        while (j > 0 && idx[j - 1] + 1 == line.size()) idx[--j] = 0;
        if (j == 0) break;
        ++idx[j - 1];
    }
    return spec;
}

CubeBlowupSpec build_cube_blowup(std::size_t m, std::size_t k, const Epsilon& eps, const Rational& alpha,
                                 std::uint64_t size_cap)
{
    return build_cube_blowup_r(m, k, eps, cube_blowup_iterations(m, k, alpha), size_cap);
}

std::vector<std::vector<PointI>> cube_blowup_blocks(const CubeBlowupSpec& spec)
{
    std::int64_t top = 1;
    for (std::int64_t i = 1; i < spec.r; ++i) top = mul_checked(top, spec.t);
    std::size_t blocks = 1;
    for (std::size_t j = 0; j < spec.m; ++j) blocks *= spec.k;
    std::vector<std::vector<PointI>> out(blocks);
    for (const auto& p : spec.elements) {
        std::size_t cell = 0;
        for (std::size_t j = 0; j < spec.m; ++j) cell = cell * spec.k + static_cast<std::size_t>(p[j] / top);
        out[cell].push_back(p);
    }
    return out;
}

std::size_t translate_intersection(const std::vector<PointI>& A, const std::vector<PointI>& X, const PointI& u)
{
    std::vector<PointI> sorted_x(X);
    std::sort(sorted_x.begin(), sorted_x.end());
    std::size_t count = 0;
    for (const auto& a : A) {
        PointI p(a);
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += u.at(j);
        if (std::binary_search(sorted_x.begin(), sorted_x.end(), p)) ++count;
    }
    return count;
}

TranslateResult find_dense_translate(const std::vector<PointI>& A, const std::vector<PointI>& X, std::int64_t N,
                                     std::size_t m, const TranslateOptions& opts)
{
    if (A.empty()) throw std::invalid_argument("find_dense_translate needs a nonempty A");
    if (N < 1 || m < 1) throw std::invalid_argument("find_dense_translate needs N >= 1 and m >= 1");
    for (const auto& p : A) {
        if (p.size() != m) throw std::invalid_argument("point of A has the wrong dimension");
    }
    for (const auto& p : X) {
        if (p.size() != m) throw std::invalid_argument("point of X has the wrong dimension");
        for (auto c : p) {
            if (c < 1 || c > N) throw std::invalid_argument("X must lie inside [N]^m");
        }
    }

    BigInt shifts = 1;
    BigInt box = 1;
    for (std::size_t j = 0; j < m; ++j) {
        shifts *= 2 * BigInt(static_cast<long>(N));
        box *= 2 * BigInt(static_cast<long>(N));
    }
    const BigInt need = BigInt(static_cast<unsigned long>(X.size())) * static_cast<unsigned long>(A.size());
    auto meets = [&](std::size_t count) { return BigInt(static_cast<unsigned long>(count)) * box >= need; };

    TranslateMode mode = opts.mode;
    const bool small = shifts <= BigInt(std::to_string(opts.shift_cap));
    if (mode == TranslateMode::automatic) mode = small ? TranslateMode::deterministic : TranslateMode::randomized;

    TranslateResult res;
    if (mode == TranslateMode::deterministic) {
        if (!small) {
            throw std::length_error("deterministic scan needs " + shifts.get_str() + " shifts, above the cap of " +
                                    std::to_string(opts.shift_cap));
        }
        std::map<PointI, std::size_t> counts;
        for (const auto& x : X) {
            for (const auto& a : A) {
                PointI u(m);
                bool inside = true;
                for (std::size_t j = 0; j < m; ++j) {
                    u[j] = x[j] - a[j];
                    if (u[j] < -N + 1 || u[j] > N) inside = false;
                }
                if (inside) ++counts[u];
            }
        }
        res.shift = PointI(m, -N + 1);
        for (const auto& [u, c] : counts) {
            if (c > res.count) {
                res.count = c;
                res.shift = u;
            }
        }
        res.shifts_examined = to_int64(shifts);
        res.meets_bound = meets(res.count);
        return res;
    }

    std::vector<PointI> sorted_x(X);
    std::sort(sorted_x.begin(), sorted_x.end());
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> coord(-N + 1, N);
    bool have = false;
    for (std::uint64_t s = 0; s < opts.max_samples; ++s) {
        PointI u(m);
        for (auto& c : u) c = coord(rng);
        std::size_t count = 0;
        for (const auto& a : A) {
            PointI p(a);
            for (std::size_t j = 0; j < m; ++j) p[j] += u[j];
            if (std::binary_search(sorted_x.begin(), sorted_x.end(), p)) ++count;
        }
        ++res.shifts_examined;
        if (!have || count > res.count) {
            res.shift = u;
            res.count = count;
            have = true;
        }
        if (meets(res.count)) break;
    }
    res.meets_bound = meets(res.count);
    return res;
}

namespace {

class CubeFinder {
public:
    CubeFinder(std::vector<PointI> S, std::size_t m, std::size_t k, const Epsilon& eps, const VerifyCubeOptions& opts)
        : S_(std::move(S)), m_(m), k_(k), eps_(eps), opts_(opts), range0_(eps.num(), eps.den())
    {
        cells_ = 1;
        for (std::size_t j = 0; j < m; ++j) cells_ *= k;
        index_.resize(cells_);
        for (std::size_t c = 0; c < cells_; ++c) index_[c] = cell_index_vector(c, m, k);
        stride_.assign(m, 1);
        for (std::size_t j = m; j-- > 1;) stride_[j - 1] = stride_[j] * k;
        by_axis_.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            auto& order = by_axis_[j];
            order.resize(S_.size());
            for (std::size_t i = 0; i < S_.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return S_[a][j] < S_[b][j]; });
        }
        assigned_.assign(cells_, 0);
        used_.assign(S_.size(), 0);
        if (opts.required) {
            auto it = std::lower_bound(S_.begin(), S_.end(), *opts.required);
            if (it != S_.end() && *it == *opts.required) required_ = static_cast<std::size_t>(it - S_.begin());
        }
    }

    std::optional<CubeHit> run()
    {
        if (S_.size() < cells_) return std::nullopt;
        if (opts_.required && !required_) return std::nullopt;
        dfs(0, range0_);
        return std::move(hit_);
    }

private:
    bool tick()
    {
        if (++nodes_ > opts_.node_cap && opts_.node_cap) throw SearchCapExceeded("cube search exceeded its node cap");
        return true;
    }

    // Candidates for cell c: the coordinate window along the first axis
    // with an assigned predecessor, returned in lexicographic point order.
    std::vector<std::size_t> candidates(std::size_t c, const DRange& range) const
    {
        std::vector<std::size_t> out;
        if (c == 0) {
            out.resize(S_.size());
            for (std::size_t i = 0; i < S_.size(); ++i) out[i] = i;
            return out;
        }
        std::size_t axis = 0;
        while (index_[c][axis] == 0) ++axis;
        const std::int64_t base = S_[assigned_[c - stride_[axis]]][axis];
        const auto& order = by_axis_[axis];
        auto first = std::upper_bound(order.begin(), order.end(), base,
                                      [&](std::int64_t v, std::size_t i) { return v < S_[i][axis]; });
        auto last = order.end();
        if (!range.hi().infinite()) {
            // x - base <= (1 + 2 eps) d_hi, with eps = p / q.
            const __int128 num = static_cast<__int128>(eps_.den() + 2 * eps_.num()) * range.hi().num;
            const __int128 den = static_cast<__int128>(eps_.den()) * range.hi().den;
            const auto limit = static_cast<std::int64_t>(num / den) + base;
            last = std::upper_bound(first, order.end(), limit,
                                    [&](std::int64_t v, std::size_t i) { return v < S_[i][axis]; });
        }
        out.assign(first, last);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool dfs(std::size_t c, const DRange& range)
    {
        if (c == cells_) return confirm();
        for (auto i : candidates(c, range)) {
            if (used_[i]) continue;
            const PointI& x = S_[i];
            bool ok = true;
            for (std::size_t j = 0; j < m_ && ok; ++j) {
                if (index_[c][j] > 0 && x[j] <= S_[assigned_[c - stride_[j]]][j]) ok = false;
            }
            if (!ok) continue;
            tick();
            DRange next = range;
            for (std::size_t c2 = 0; c2 < c && !next.empty(); ++c2) {
                const PointI& y = S_[assigned_[c2]];
                for (std::size_t j = 0; j < m_; ++j) {
                    const auto di = static_cast<std::int64_t>(index_[c][j]) - static_cast<std::int64_t>(index_[c2][j]);
                    next.add_pair(di, x[j] - y[j]);
                }
            }
            if (next.empty()) continue;
            assigned_[c] = i;
            used_[i] = 1;
            const bool done = dfs(c + 1, next);
            used_[i] = 0;
            if (done) return true;
        }
        return false;
    }

    bool confirm()
    {
        if (required_ && !used_[*required_]) return false;
        std::vector<PointI> pts(cells_);
        for (std::size_t c = 0; c < cells_; ++c) pts[c] = S_[assigned_[c]];
        if (m_ == 1) {
            std::vector<std::int64_t> xs(cells_);
            for (std::size_t c = 0; c < cells_; ++c) xs[c] = pts[c][0];
            auto w = recognize_ap(IndexedPoints1D(xs), eps_);
            if (!w) return false;
            WitnessMD wm;
            wm.a = {to_double(w->a)};
            wm.d = to_double(w->d);
            wm.residual = to_double(w->margin);
            wm.tol = 0;
            hit_ = CubeHit{IndexedGrid(m_, k_, std::move(pts)), wm};
            return true;
        }
        IndexedGrid grid(m_, k_, std::move(pts));
        auto res = recognize_cube(grid, eps_, opts_.tol);
        if (res.verdict != CubeVerdict::feasible) return false;
        hit_ = CubeHit{std::move(grid), *res.witness};
        return true;
    }

    std::vector<PointI> S_;
    std::size_t m_;
    std::size_t k_;
    Epsilon eps_;
    VerifyCubeOptions opts_;
    DRange range0_;
    std::size_t cells_ = 1;
    std::vector<std::vector<std::size_t>> index_;
    std::vector<std::size_t> stride_;
    std::vector<std::vector<std::size_t>> by_axis_;
    std::vector<std::size_t> assigned_;
    std::vector<char> used_;
    std::optional<std::size_t> required_;
    std::optional<CubeHit> hit_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<CubeHit> verify_cube_free(const std::vector<PointI>& S, std::size_t m, std::size_t k,
                                        const Epsilon& eps, const VerifyCubeOptions& opts)
{
    eps.require_set_level();
    if (m < 1 || k < 2) throw std::invalid_argument("verify_cube_free needs m >= 1 and k >= 2");
    std::vector<PointI> sorted(S);
    for (const auto& p : sorted) {
        if (p.size() != m) throw std::invalid_argument("point of S has the wrong dimension");
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return CubeFinder(std::move(sorted), m, k, eps, opts).run();
}

}  // namespace apvdw
