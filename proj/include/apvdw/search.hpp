#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "apvdw/colorings.hpp"
#include "apvdw/cube.hpp"
#include "apvdw/progression.hpp"
#include "apvdw/rational.hpp"

namespace apvdw {

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// k-uniform hypergraph on [N]. Edges are sorted k-subsets in lexicographic
// order. eps is absent for the exact-progression hypergraph.
struct Hypergraph {
    std::int64_t N = 0;
    std::size_t k = 0;
    std::optional<Rational> eps;
    std::vector<std::vector<std::int64_t>> edges;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

using ApCallback = std::function<bool(const std::vector<std::int64_t>& subset, const Witness1D& witness)>;

struct EnumerationStats {
    std::uint64_t nodes = 0;
    bool stopped = false;  // callback asked to stop
};

// Visits every k-subset of the sorted, distinct `elements` that is an
// AP_k(eps), in lexicographic order. DFS over increasing tuples, pruning
// when the closed feasible region empties, confirming full tuples exactly.
// Throws SearchCapExceeded past node_cap (0 = unlimited).
EnumerationStats for_each_eps_ap(std::span<const std::int64_t> elements, std::size_t k, const Epsilon& eps,
                                 const ApCallback& callback, std::uint64_t node_cap = 0);

Hypergraph enumerate_eps_aps(std::int64_t N, std::size_t k, const Epsilon& eps, std::uint64_t node_cap = 0);

// All exact k-term arithmetic progressions in [N].
Hypergraph exact_ap_hypergraph(std::int64_t N, std::size_t k);

// Edges of h contained in [n].
Hypergraph restrict_to_prefix(const Hypergraph& h, std::int64_t n);

struct SearchOptions {
    unsigned workers = 1;
    std::uint64_t node_cap = 0;  // 0 = unlimited
};

enum class OutcomeKind { value, lower_bound_only };

struct SearchOutcome {
    OutcomeKind kind = OutcomeKind::lower_bound_only;
    // For W: the value, or (lower_bound_only) the largest N proven to admit
    // a good coloring, so W > value. For f: the maximum, or the incumbent.
    std::int64_t value = 0;
    std::optional<Coloring> coloring;
    std::vector<PointI> set;
    std::uint64_t nodes = 0;
    double wall_ms = 0;
    std::string note;
};

struct GoodColoringResult {
    std::optional<Coloring> coloring;  // lexicographically first canonical good coloring
    std::uint64_t nodes = 0;
    bool capped = false;
};

// Backtracking for an r-coloring of [N] with no monochromatic edge of h
// (edges beyond N are ignored). Color of 1 is fixed to 1 and colors appear
// in first-occurrence order; forward checking removes a color from the
// largest vertex of an edge once the rest of the edge is monochromatic.
GoodColoringResult find_good_coloring(const Hypergraph& h, std::int64_t N, std::size_t r,
                                      const SearchOptions& opts = {});

SearchOutcome exact_W(std::size_t k, std::size_t r, const Epsilon& eps, std::int64_t N_max,
                      const SearchOptions& opts = {});

struct FreeSubsetTable {
    std::vector<std::size_t> f;               // f[n] for n = 0..N (complete entries only)
    std::vector<std::int64_t> best;           // lexicographically first maximum set of [N]
    std::uint64_t nodes = 0;
    bool complete = false;
};

// Maximum subsets of [n], n = 1..N, containing no edge of h, for a
// hypergraph invariant under translation (f of a suffix of length L equals
// f(L), which bounds the branch and bound).
FreeSubsetTable max_free_subsets(const Hypergraph& h, std::uint64_t node_cap = 0);

// Greedy by increasing element.
std::vector<std::int64_t> greedy_free_subset(const Hypergraph& h);

// f_eps(N, m, k). m = 1 runs on the AP_k(eps) hypergraph; m >= 2 runs a
// branch and bound over [N]^m in lexicographic order with verify_cube_free
// as the violation oracle.
SearchOutcome exact_f(std::int64_t N, std::size_t m, std::size_t k, const Epsilon& eps,
                      const SearchOptions& opts = {});

// f(N, 1, k) for exact progressions, same engine.
SearchOutcome exact_f_exact_ap(std::int64_t N, std::size_t k, const SearchOptions& opts = {});

// Serialization for external cross-checks. Formats: "text" (the hypergraph
// file format) and "json". Throws std::invalid_argument for other names.
std::string export_hypergraph(const Hypergraph& h, const std::string& format);

}  // namespace apvdw
