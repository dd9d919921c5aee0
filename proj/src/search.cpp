#include "apvdw/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "apvdw/density.hpp"
#include "apvdw/formats.hpp"
#include "apvdw/region.hpp"

namespace apvdw {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

enum class Lookahead { ok, gap, beyond_end };

// Every later term x_{i+g} lies in [x + (g - 2 eps) d, x + (g + 2 eps) d] for
// some d in the range. The windows are widened slightly so rounding can only
// weaken the test.
Lookahead window_check(std::span<const std::int64_t> elements, std::int64_t x, std::size_t remaining,
                       const DRange& range, long double eps)
{
    const long double lo = static_cast<long double>(range.lo().num) / static_cast<long double>(range.lo().den);
    const bool open_top = range.hi().infinite();
    const long double hi =
        open_top ? 0 : static_cast<long double>(range.hi().num) / static_cast<long double>(range.hi().den);
    const long double last = static_cast<long double>(elements.back());
    for (std::size_t g = 1; g <= remaining; ++g) {
        const long double gd = static_cast<long double>(g);
        const long double from = static_cast<long double>(x) + (gd - 2 * eps) * lo;
        const long double slack_from = 1 + std::fabs(from) * 0x1p-40L;
        if (from - slack_from > last) return Lookahead::beyond_end;
        auto it = std::lower_bound(elements.begin(), elements.end(),
                                   static_cast<std::int64_t>(std::floor(from - slack_from)));
        if (it == elements.end()) return Lookahead::beyond_end;
        if (!open_top) {
            const long double to = static_cast<long double>(x) + (gd + 2 * eps) * hi;
            if (static_cast<long double>(*it) > to + 1 + std::fabs(to) * 0x1p-40L) return Lookahead::gap;
        }
    }
    return Lookahead::ok;
}

}  // namespace

EnumerationStats for_each_eps_ap(std::span<const std::int64_t> elements, std::size_t k, const Epsilon& eps,
                                 const ApCallback& callback, std::uint64_t node_cap)
{
    eps.require_set_level();
    if (k < 2) throw std::invalid_argument("progressions need k >= 2");
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] <= elements[i - 1]) throw std::invalid_argument("elements must be sorted and distinct");
    }
    EnumerationStats stats;
    const std::size_t n = elements.size();
    if (n < k) return stats;

    const long double eps_ld = static_cast<long double>(eps.num()) / static_cast<long double>(eps.den());
    std::vector<std::size_t> pos(k);
    std::vector<DRange> ranges(k + 1, DRange(eps.num(), eps.den()));
    std::vector<std::int64_t> tuple(k);

    // Iterative DFS: depth = number of fixed positions.
    std::size_t depth = 0;
    pos[0] = 0;
    while (true) {
        const std::size_t limit = n - (k - depth);  // last admissible element index
        if (pos[depth] > limit) {
            if (depth == 0) break;
            --depth;
            ++pos[depth];
            continue;
        }
        ++stats.nodes;
        if (node_cap && stats.nodes > node_cap) throw SearchCapExceeded("progression enumeration exceeded its node cap");

        const std::int64_t x = elements[pos[depth]];
        DRange next = ranges[depth];
        for (std::size_t j = 0; j < depth; ++j) {
            next.add_pair(static_cast<std::int64_t>(depth - j), x - tuple[j]);
        }
        if (next.empty()) {
            // Every lower bound on d grows with x, so once it passes the
            // upper bound of the prefix no larger x can succeed.
            if (depth > 0 && ranges[depth].hi() < next.lo()) {
                --depth;
                ++pos[depth];
            } else {
                ++pos[depth];
            }
            continue;
        }
        tuple[depth] = x;
        if (depth + 1 < k && depth > 0) {
            const Lookahead la = window_check(elements, x, k - 1 - depth, next, eps_ld);
            if (la == Lookahead::beyond_end) {
                --depth;
                ++pos[depth];
                continue;
            }
            if (la == Lookahead::gap) {
                ++pos[depth];
                continue;
            }
        }
        if (depth + 1 == k) {
            if (auto w = recognize_ap(IndexedPoints1D(tuple), eps)) {
                if (!callback(tuple, *w)) {
                    stats.stopped = true;
                    return stats;
                }
            }
            ++pos[depth];
            continue;
        }
        ranges[depth + 1] = next;
        ++depth;
        pos[depth] = pos[depth - 1] + 1;
    }
    return stats;
}

Hypergraph enumerate_eps_aps(std::int64_t N, std::size_t k, const Epsilon& eps, std::uint64_t node_cap)
{
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    Hypergraph h;
    h.N = N;
    h.k = k;
    h.eps = eps.value();
    std::vector<std::int64_t> elems(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    for_each_eps_ap(elems, k, eps, [&](const std::vector<std::int64_t>& s, const Witness1D&) {
        h.edges.push_back(s);
        return true;
    }, node_cap);
    return h;
}

Hypergraph exact_ap_hypergraph(std::int64_t N, std::size_t k)
{
    if (k < 2) throw std::invalid_argument("progressions need k >= 2");
    Hypergraph h;
    h.N = N;
    h.k = k;
    const auto steps = static_cast<std::int64_t>(k - 1);
    for (std::int64_t a = 1; a + steps <= N; ++a) {
        for (std::int64_t d = 1; a + steps * d <= N; ++d) {
            std::vector<std::int64_t> e(k);
            for (std::size_t i = 0; i < k; ++i) e[i] = a + static_cast<std::int64_t>(i) * d;
            h.edges.push_back(std::move(e));
        }
    }
    return h;
}

Hypergraph restrict_to_prefix(const Hypergraph& h, std::int64_t n)
{
    Hypergraph out;
    out.N = std::min(n, h.N);
    out.k = h.k;
    out.eps = h.eps;
    for (const auto& e : h.edges) {
        if (e.back() <= n) out.edges.push_back(e);
    }
    return out;
}

namespace {

// Shared state of one (possibly parallel) coloring search.
struct SharedSearch {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> capped{false};
    std::atomic<std::size_t> best_prefix{std::numeric_limits<std::size_t>::max()};
    std::uint64_t node_cap = 0;
};

class ColoringSolver {
public:
    ColoringSolver(const Hypergraph& h, std::int64_t N, std::size_t r, SharedSearch& shared)
        : N_(static_cast<std::size_t>(N)), r_(r), shared_(shared),
          color_(N_ + 1, 0), forb_((N_ + 1) * (r + 1), 0), by_second_(N_ + 1)
    {
        for (const auto& e : h.edges) {
            if (e.back() > N) continue;
            if (e.size() < 2) continue;
            edges_.push_back(e);
            by_second_[static_cast<std::size_t>(e[e.size() - 2])].push_back(edges_.size() - 1);
        }
    }

    // Replays a fixed prefix; returns false when it is inconsistent.
    bool replay(const std::vector<std::uint16_t>& prefix)
    {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const std::size_t v = i + 1;
            if (forb_[v * (r_ + 1) + prefix[i]]) return false;
            used_.push_back(std::max<std::uint16_t>(used_.empty() ? 0 : used_.back(), prefix[i]));
            if (!assign(v, prefix[i])) return false;
        }
        return true;
    }

    // DFS from vertex `from`; on success color_ holds the solution.
    bool solve(std::size_t from, std::size_t prefix_id = 0)
    {
        prefix_id_ = prefix_id;
        return dfs(from);
    }

    // Collects consistent canonical prefixes of the given length, in order.
    void prefixes(std::size_t v, std::size_t len, std::vector<std::vector<std::uint16_t>>& out)
    {
        if (v > len) {
            out.emplace_back(color_.begin() + 1, color_.begin() + 1 + static_cast<std::ptrdiff_t>(len));
            return;
        }
        const std::uint16_t used = used_.empty() ? 0 : used_.back();
        const auto top = static_cast<std::uint16_t>(std::min<std::size_t>(r_, used + 1));
        for (std::uint16_t c = 1; c <= top; ++c) {
            if (forb_[v * (r_ + 1) + c]) continue;
            const std::size_t mark = trail_.size();
            used_.push_back(std::max(used, c));
            if (assign(v, c)) prefixes(v + 1, len, out);
            undo(v, mark);
            used_.pop_back();
        }
    }

    std::vector<std::uint16_t> colors() const { return {color_.begin() + 1, color_.end()}; }
    std::uint64_t local_nodes() const { return local_nodes_; }

private:
    bool dfs(std::size_t v)
    {
        if (v > N_) return true;
        const std::uint16_t used = used_.empty() ? 0 : used_.back();
        const auto top = static_cast<std::uint16_t>(std::min<std::size_t>(r_, used + 1));
        for (std::uint16_t c = 1; c <= top; ++c) {
            if (forb_[v * (r_ + 1) + c]) continue;
            if (!tick()) return false;
            const std::size_t mark = trail_.size();
            used_.push_back(std::max(used, c));
            if (assign(v, c) && dfs(v + 1)) return true;
            undo(v, mark);
            used_.pop_back();
            if (stop_) return false;
        }
        return false;
    }

    bool tick()
    {
        ++local_nodes_;
        if ((local_nodes_ & 1023) == 0) {
            const auto total = shared_.nodes.fetch_add(1024) + 1024;
            if (shared_.node_cap && total > shared_.node_cap) {
                shared_.capped = true;
            }
            if (shared_.capped || shared_.best_prefix.load(std::memory_order_relaxed) < prefix_id_) {
                stop_ = true;
            }
        }
        return !stop_;
    }

    bool assign(std::size_t v, std::uint16_t c)
    {
        color_[v] = c;
        bool ok = true;
        for (auto ei : by_second_[v]) {
            const auto& e = edges_[ei];
            bool mono = true;
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                if (color_[static_cast<std::size_t>(e[i])] != c) {
                    mono = false;
                    break;
                }
            }
            if (!mono) continue;
            const auto M = static_cast<std::size_t>(e.back());
            ++forb_[M * (r_ + 1) + c];
            trail_.push_back(M * (r_ + 1) + c);
            if (ok) {
                bool wiped = true;
                for (std::size_t cc = 1; cc <= r_; ++cc) {
                    if (!forb_[M * (r_ + 1) + cc]) {
                        wiped = false;
                        break;
                    }
                }
                if (wiped) ok = false;
            }
        }
        return ok;
    }

    void undo(std::size_t v, std::size_t mark)
    {
        while (trail_.size() > mark) {
            --forb_[trail_.back()];
            trail_.pop_back();
        }
        color_[v] = 0;
    }

    std::size_t N_;
    std::size_t r_;
    SharedSearch& shared_;
    std::vector<std::uint16_t> color_;
    std::vector<std::uint32_t> forb_;
    std::vector<std::vector<std::int64_t>> edges_;
    std::vector<std::vector<std::size_t>> by_second_;
    std::vector<std::size_t> trail_;
    std::vector<std::uint16_t> used_;
    std::uint64_t local_nodes_ = 0;
    std::size_t prefix_id_ = 0;
    bool stop_ = false;
};

}  // namespace

GoodColoringResult find_good_coloring(const Hypergraph& h, std::int64_t N, std::size_t r, const SearchOptions& opts)
{
    if (r < 1) throw std::invalid_argument("need at least one color");
    if (N < 0 || N > h.N) throw std::invalid_argument("N outside the hypergraph's vertex range");
    GoodColoringResult result;
    if (N == 0) {
        result.coloring = Coloring(r, {});
        return result;
    }
    SharedSearch shared;
    shared.node_cap = opts.node_cap;

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || N < 8) {
        ColoringSolver solver(h, N, r, shared);
        const bool found = solver.solve(1);
        result.nodes = shared.nodes + (solver.local_nodes() & 1023);
        result.capped = shared.capped;
        if (found) result.coloring = Coloring(r, solver.colors());
        return result;
    }

    // Split on canonical prefixes; the lowest-index prefix with a solution
    // yields the same witness the serial search finds first.
    std::vector<std::vector<std::uint16_t>> prefixes;
    std::size_t len = 1;
    while (len < static_cast<std::size_t>(N) - 1 && len < 16) {
        prefixes.clear();
        ColoringSolver gen(h, N, r, shared);
        gen.prefixes(1, len, prefixes);
        if (prefixes.size() >= 8 * static_cast<std::size_t>(workers)) break;
        ++len;
    }
    if (prefixes.empty()) {
        result.nodes = shared.nodes;
        return result;
    }

    std::vector<std::optional<std::vector<std::uint16_t>>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> tail_nodes{0};
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size() || i > shared.best_prefix || shared.capped) break;
            ColoringSolver solver(h, N, r, shared);
            if (!solver.replay(prefixes[i])) continue;
            if (solver.solve(prefixes[i].size() + 1, i)) {
                found[i] = solver.colors();
                std::size_t cur = shared.best_prefix.load();
                while (i < cur && !shared.best_prefix.compare_exchange_weak(cur, i)) {
                }
            }
            tail_nodes += solver.local_nodes() & 1023;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    result.nodes = shared.nodes + tail_nodes;
    result.capped = shared.capped;
    const std::size_t best = shared.best_prefix;
    if (best < prefixes.size() && found[best]) {
        // A capped run may still have a fully explored lower prefix range.
        result.coloring = Coloring(r, *found[best]);
        result.capped = false;
    }
    return result;
}

SearchOutcome exact_W(std::size_t k, std::size_t r, const Epsilon& eps, std::int64_t N_max, const SearchOptions& opts)
{
    if (k < 2) throw std::invalid_argument("exact_W needs k >= 2");
    if (r < 1) throw std::invalid_argument("exact_W needs r >= 1");
    if (N_max < 1) throw std::invalid_argument("exact_W needs N_max >= 1");
    const auto start = Clock::now();
    SearchOutcome out;
    Hypergraph h;
    try {
        h = enumerate_eps_aps(N_max, k, eps, opts.node_cap);
    } catch (const SearchCapExceeded&) {
        out.kind = OutcomeKind::lower_bound_only;
        out.value = 0;
        out.note = "node cap exceeded while enumerating progressions";
        out.wall_ms = elapsed_ms(start);
        return out;
    }

    std::optional<Coloring> last_good = Coloring(r, {});
    for (std::int64_t N = 1; N <= N_max; ++N) {
        auto res = find_good_coloring(h, N, r, opts);
        out.nodes += res.nodes;
        if (res.capped) {
            out.kind = OutcomeKind::lower_bound_only;
            out.value = N - 1;
            out.coloring = last_good;
            out.note = "node cap exceeded at N=" + std::to_string(N);
            out.wall_ms = elapsed_ms(start);
            return out;
        }
        if (!res.coloring) {
            out.kind = OutcomeKind::value;
            out.value = N;
            out.coloring = last_good;
            out.wall_ms = elapsed_ms(start);
            return out;
        }
        last_good = std::move(res.coloring);
    }
    out.kind = OutcomeKind::lower_bound_only;
    out.value = N_max;
    out.coloring = last_good;
    out.note = "every N <= N_max admits a good coloring";
    out.wall_ms = elapsed_ms(start);
    return out;
}

namespace {

class FreeSubsetEngine {
public:
    FreeSubsetEngine(const Hypergraph& h, std::uint64_t node_cap)
        : N_(static_cast<std::size_t>(h.N)), node_cap_(node_cap), by_max_(N_ + 1), in_(N_ + 1, 0)
    {
        for (const auto& e : h.edges) by_max_[static_cast<std::size_t>(e.back())].push_back(e);
    }

    // Searches a free subset of [L] of exactly `target` elements, every
    // element below L decided include-first. When must_take_last is set the
    // set contains L. Suffix bound: a free subset of {x..L} has at most
    // bound(L - x + 1) elements.
    bool search(std::size_t L, std::size_t target, bool must_take_last, const std::vector<std::size_t>& f)
    {
        L_ = L;
        target_ = target;
        must_last_ = must_take_last;
        f_ = &f;
        for (auto x : chosen_) in_[static_cast<std::size_t>(x)] = 0;
        chosen_.clear();
        return dfs(1);
    }

    const std::vector<std::int64_t>& chosen() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t bound(std::size_t len) const
    {
        if (len == 0) return 0;
        if (len < L_) return (*f_)[len];
        return (*f_)[L_ - 1] + 1;
    }

    bool fits(std::size_t x) const
    {
        for (const auto& e : by_max_[x]) {
            bool all = true;
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                if (!in_[static_cast<std::size_t>(e[i])]) {
                    all = false;
                    break;
                }
            }
            if (all) return false;
        }
        return true;
    }

    bool dfs(std::size_t x)
    {
        const std::size_t have = chosen_.size();
        if (have == target_) return !must_last_ || (have > 0 && chosen_.back() == static_cast<std::int64_t>(L_));
        if (x > L_) return false;
        if (have + bound(L_ - x + 1) < target_) return false;
        if (++nodes_ > node_cap_ && node_cap_) throw SearchCapExceeded("free-subset search exceeded its node cap");
        if (must_last_ && have + 1 == target_ && x < L_) {
            return dfs(L_);
        }
        if (fits(x)) {
            in_[x] = 1;
            chosen_.push_back(static_cast<std::int64_t>(x));
            if (dfs(x + 1)) return true;
            chosen_.pop_back();
            in_[x] = 0;
        }
        if (must_last_ && x == L_) return false;
        return dfs(x + 1);
    }

    std::size_t N_;
    std::uint64_t node_cap_;
    std::vector<std::vector<std::vector<std::int64_t>>> by_max_;
    std::vector<char> in_;
    std::vector<std::int64_t> chosen_;
    std::size_t L_ = 0;
    std::size_t target_ = 0;
    bool must_last_ = false;
    const std::vector<std::size_t>* f_ = nullptr;
    std::uint64_t nodes_ = 0;
};

}  // namespace

FreeSubsetTable max_free_subsets(const Hypergraph& h, std::uint64_t node_cap)
{
    FreeSubsetTable table;
    table.f.push_back(0);
    FreeSubsetEngine engine(h, node_cap);
    const auto N = static_cast<std::size_t>(h.N);
    try {
        for (std::size_t L = 1; L <= N; ++L) {
            const std::size_t prev = table.f[L - 1];
            std::size_t value = prev;
            if (engine.search(L, prev + 1, true, table.f)) value = prev + 1;
            table.f.push_back(value);
        }
        if (N > 0 && !engine.search(N, table.f[N], false, table.f)) {
            throw std::logic_error("free-subset search lost its own maximum");
        }
        table.best = engine.chosen();
        table.complete = true;
    } catch (const SearchCapExceeded&) {
        table.complete = false;
        table.best = greedy_free_subset(restrict_to_prefix(h, static_cast<std::int64_t>(table.f.size()) - 1));
    }
    table.nodes = engine.nodes();
    return table;
}

std::vector<std::int64_t> greedy_free_subset(const Hypergraph& h)
{
    const auto N = static_cast<std::size_t>(h.N);
    std::vector<std::vector<const std::vector<std::int64_t>*>> by_max(N + 1);
    for (const auto& e : h.edges) by_max[static_cast<std::size_t>(e.back())].push_back(&e);
    std::vector<char> in(N + 1, 0);
    std::vector<std::int64_t> out;
    for (std::size_t x = 1; x <= N; ++x) {
        bool ok = true;
        for (const auto* e : by_max[x]) {
            bool all = true;
            for (std::size_t i = 0; i + 1 < e->size(); ++i) {
                if (!in[static_cast<std::size_t>((*e)[i])]) {
                    all = false;
                    break;
                }
            }
            if (all) {
                ok = false;
                break;
            }
        }
        if (ok) {
            in[x] = 1;
            out.push_back(static_cast<std::int64_t>(x));
        }
    }
    return out;
}

namespace {

SearchOutcome outcome_from_table(const FreeSubsetTable& t, std::int64_t N, Clock::time_point start)
{
    SearchOutcome out;
    out.nodes = t.nodes;
    for (auto x : t.best) out.set.push_back(PointI{x});
    if (t.complete) {
        out.kind = OutcomeKind::value;
        out.value = static_cast<std::int64_t>(t.f[static_cast<std::size_t>(N)]);
    } else {
        out.kind = OutcomeKind::lower_bound_only;
        out.value = static_cast<std::int64_t>(t.best.size());
        out.note = "node cap exceeded; exact values known up to N=" + std::to_string(t.f.size() - 1);
    }
    out.wall_ms = elapsed_ms(start);
    return out;
}

class CubeFreeBranchAndBound {
public:
    CubeFreeBranchAndBound(std::vector<PointI> universe, std::size_t m, std::size_t k, const Epsilon& eps,
                           std::uint64_t node_cap)
        : universe_(std::move(universe)), m_(m), k_(k), eps_(eps), node_cap_(node_cap)
    {
    }

    bool admissible(const std::vector<PointI>& current, const PointI& p)
    {
        std::vector<PointI> next = current;
        next.push_back(p);
        std::sort(next.begin(), next.end());
        VerifyCubeOptions opts;
        opts.required = p;
        return !verify_cube_free(next, m_, k_, eps_, opts).has_value();
    }

    void run(std::vector<PointI> incumbent)
    {
        best_ = std::move(incumbent);
        std::vector<PointI> current;
        dfs(0, current);
    }

    const std::vector<PointI>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(std::size_t i, std::vector<PointI>& current)
    {
        if (current.size() + (universe_.size() - i) <= best_.size()) return;
        if (i == universe_.size()) {
            best_ = current;
            return;
        }
        if (++nodes_ > node_cap_ && node_cap_) throw SearchCapExceeded("cube-free search exceeded its node cap");
        if (admissible(current, universe_[i])) {
            current.push_back(universe_[i]);
            dfs(i + 1, current);
            current.pop_back();
        }
        dfs(i + 1, current);
    }

    std::vector<PointI> universe_;
    std::size_t m_;
    std::size_t k_;
    Epsilon eps_;
    std::uint64_t node_cap_;
    std::vector<PointI> best_;
    std::uint64_t nodes_ = 0;
};

std::vector<PointI> grid_points(std::int64_t N, std::size_t m)
{
    std::vector<PointI> out;
    PointI p(m, 1);
    if (N < 1) return out;
    while (true) {
        out.push_back(p);
        std::size_t j = m;
        while (j > 0) {
            --j;
            if (p[j] < N) {
                ++p[j];
                break;
            }
            p[j] = 1;
            if (j == 0) return out;
        }
    }
}

}  // namespace

SearchOutcome exact_f(std::int64_t N, std::size_t m, std::size_t k, const Epsilon& eps, const SearchOptions& opts)
{
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const auto start = Clock::now();
    if (m == 1) {
        Hypergraph h;
        try {
            h = enumerate_eps_aps(N, k, eps, opts.node_cap);
        } catch (const SearchCapExceeded&) {
            SearchOutcome out;
            out.note = "node cap exceeded while enumerating progressions";
            out.wall_ms = elapsed_ms(start);
            return out;
        }
        return outcome_from_table(max_free_subsets(h, opts.node_cap), N, start);
    }

    eps.require_set_level();
    const auto universe = grid_points(N, m);
    CubeFreeBranchAndBound bb(universe, m, k, eps, opts.node_cap);
    std::vector<PointI> greedy;
    for (const auto& p : universe) {
        if (bb.admissible(greedy, p)) greedy.push_back(p);
    }
    SearchOutcome out;
    try {
        bb.run(greedy);
        out.kind = OutcomeKind::value;
    } catch (const SearchCapExceeded&) {
        out.kind = OutcomeKind::lower_bound_only;
        out.note = "node cap exceeded; reporting the best incumbent";
    }
    out.set = bb.best();
    out.value = static_cast<std::int64_t>(out.set.size());
    out.nodes = bb.nodes();
    out.wall_ms = elapsed_ms(start);
    return out;
}

SearchOutcome exact_f_exact_ap(std::int64_t N, std::size_t k, const SearchOptions& opts)
{
    const auto start = Clock::now();
    return outcome_from_table(max_free_subsets(exact_ap_hypergraph(N, k), opts.node_cap), N, start);
}

std::string export_hypergraph(const Hypergraph& h, const std::string& format)
{
    if (format == "text") return write_hypergraph(h);
    if (format == "json") {
        Json j;
        j["N"] = h.N;
        j["k"] = h.k;
        j["eps"] = h.eps ? Json(to_string(*h.eps)) : Json(nullptr);
        j["edges"] = h.edges;
        return j.dump() + "\n";
    }
    throw std::invalid_argument("unknown hypergraph format: " + format);
}

}  // namespace apvdw
