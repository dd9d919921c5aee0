#include "apvdw/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "apvdw/colorings.hpp"
#include "apvdw/cube.hpp"
#include "apvdw/density.hpp"
#include "apvdw/formats.hpp"
#include "apvdw/lower_bound.hpp"
#include "apvdw/progression.hpp"
#include "apvdw/search.hpp"

namespace apvdw {

namespace {

struct Common {
    std::string format = "text";
    std::string out_path;
};

unsigned default_workers()
{
    if (const char* env = std::getenv("APVDW_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::vector<std::int64_t> parse_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + text);
        }
        if (used != item.size()) throw std::invalid_argument("not an integer list: " + text);
        out.push_back(v);
    }
    return out;
}

std::string scalar_text(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(std::ostream& out, const Json& result, const std::string& format)
{
    if (format == "json") {
        out << result.dump(2) << '\n';
    } else if (format == "csv") {
        out << "key,value\n";
        for (const auto& [key, value] : result.items()) {
            std::string text = scalar_text(value);
            if (text.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : text) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
                text = quoted + "\"";
            }
            out << key << ',' << text << '\n';
        }
    } else {
        for (const auto& [key, value] : result.items()) out << key << ": " << scalar_text(value) << '\n';
    }
}

// Writes file content to --out when given, else to stdout; the summary
// goes to stdout in the first case.
void emit_file(std::ostream& out, const Common& common, const std::string& content, Json summary)
{
    if (!common.out_path.empty()) {
        std::ofstream f(common.out_path);
        if (!f) throw std::runtime_error("cannot write " + common.out_path);
        f << content;
        summary["written"] = common.out_path;
        emit(out, summary, common.format);
    } else if (common.format == "text") {
        out << content;
    } else {
        summary["content"] = content;
        emit(out, summary, common.format);
    }
}

Json set_json(const std::vector<PointI>& pts)
{
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::vector<PointI> to_points(const std::vector<std::int64_t>& xs)
{
    std::vector<PointI> out;
    for (auto x : xs) out.push_back(PointI{x});
    return out;
}

Json params_json(const LowerBoundParams& p)
{
    Json j;
    j["k"] = p.k;
    j["r"] = p.r;
    j["eps"] = to_string(p.eps);
    j["N1"] = p.N1.get_str();
    if (p.r >= 2) {
        j["s"] = p.s;
        j["w"] = p.w;
        j["t"] = p.t;
        j["k_sub"] = p.k_sub;
        j["N0"] = p.N0;
        j["D"] = p.D;
        j["inner"] = params_json(p.inner.front());
    }
    return j;
}

void add_format(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Approximate arithmetic progressions: recognition, colorings, densities and exact searches"};
    app.require_subcommand(1);
    Common common;
    add_format(&app, common);
    app.add_option("--out", common.out_path, "Write constructed files here");

    std::string eps_text;
    std::string alpha_text;
    std::int64_t k = 3;
    std::int64_t r = 2;
    std::int64_t m = 1;
    std::int64_t N = 0;
    std::int64_t h = 1;
    std::int64_t D = 1;
    std::int64_t t = 1;
    std::int64_t offset = 0;
    std::int64_t iterations = 0;
    std::string points_text;
    std::string file;
    std::string file2;
    std::string provider = "auto";
    std::string mode = "auto";
    std::string eps0_text = "1/1000";
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::uint64_t cap = 0;
    std::uint64_t materialize_cap = std::uint64_t{1} << 26;
    unsigned workers = default_workers();
    bool indexed = false;
    bool one_based = false;
    bool exact_ap = false;
    bool summary_only = false;
    std::string hyper_format = "text";
    int code = 0;

    auto eps = [&] { return Epsilon::parse(eps_text); };
    auto opts = [&] {
        SearchOptions o;
        o.workers = workers;
        o.node_cap = cap;
        return o;
    };

    // recognize
    auto* recognize = app.add_subcommand("recognize", "Decide approximate progressions and cubes");
    recognize->require_subcommand(1);
    auto* rec_ap = recognize->add_subcommand("ap", "Decide AP_k(eps) for a list of integers");
    rec_ap->add_option("--points", points_text, "Comma-separated integers")->required();
    rec_ap->add_option("--eps", eps_text, "Tolerance p/q")->required();
    rec_ap->add_flag("--indexed", indexed, "Keep the given order as the index order");
    add_format(rec_ap, common);
    rec_ap->callback([&] {
        const auto pts = parse_list(points_text);
        const auto e = eps();
        auto w = indexed ? recognize_ap(IndexedPoints1D(pts), e) : recognize_ap_set(pts, e);
        Json res;
        res["accepted"] = w.has_value();
        res["k"] = pts.size();
        res["eps"] = to_string(e.value());
        if (w) res["witness"] = witness_json(*w);
        emit(out, res, common.format);
        code = w ? 0 : 1;
    });

    auto* rec_cube = recognize->add_subcommand("cube", "Decide C_eps(m,k) for a point set file");
    rec_cube->add_option("--set", file, "SET file with k^m points")->required();
    rec_cube->add_option("--m", m, "Dimension")->required();
    rec_cube->add_option("--k", k, "Side length")->required();
    rec_cube->add_option("--eps", eps_text, "Tolerance p/q")->required();
    rec_cube->add_option("--tol", tol, "Relative tolerance of the verdict");
    add_format(rec_cube, common);
    rec_cube->callback([&] {
        const auto e = eps();
        auto grid = index_grid_points(read_set_file(file), static_cast<std::size_t>(m), static_cast<std::size_t>(k), e);
        auto res = recognize_cube(grid, e, tol);
        Json j;
        j["verdict"] = to_string(res.verdict);
        j["min_gap"] = decimal(res.min_gap);
        j["d_max"] = decimal(res.d_max);
        if (res.witness) j["witness"] = witness_json(*res.witness);
        emit(out, j, common.format);
        code = res.verdict == CubeVerdict::feasible ? 0 : 1;
    });

    // construct
    auto* construct = app.add_subcommand("construct", "Build colorings and sets");
    construct->require_subcommand(1);
    auto* c_blowup = construct->add_subcommand("blowup", "Blow-up set B_r (1-based)");
    c_blowup->add_option("--k", k)->required();
    c_blowup->add_option("--r", r)->required();
    c_blowup->add_option("--eps", eps_text)->required();
    add_format(c_blowup, common);
    c_blowup->callback([&] {
        auto spec = build_blowup_1d(k, r, eps());
        Json s;
        s["k"] = spec.k;
        s["r"] = spec.r;
        s["t"] = spec.t;
        s["size"] = spec.elements.size();
        s["diameter"] = spec.diameter();
        emit_file(out, common, write_set(to_points(spec.one_based())), s);
    });

    auto* c_alt = construct->add_subcommand("alternate", "(r-1,1;D)-alternate labeling of [rtD]");
    c_alt->add_option("--r", r)->required();
    c_alt->add_option("--D", D)->required();
    c_alt->add_option("--t", t)->required();
    c_alt->add_option("--offset", offset);
    add_format(c_alt, common);
    c_alt->callback([&] {
        auto lab = build_alternate_labeling(r, D, t, offset);
        std::ostringstream content;
        for (auto l : lab.labels) content << (l > 0 ? "+1" : "-1") << '\n';
        Json s;
        s["r"] = r;
        s["D"] = D;
        s["t"] = t;
        s["offset"] = offset;
        s["size"] = lab.labels.size();
        emit_file(out, common, content.str(), s);
    });

    auto* c_simple = construct->add_subcommand("simple-r2", "2-coloring from the (1,1;k-1)-alternate labeling");
    c_simple->add_option("--k", k)->required();
    c_simple->add_option("--eps", eps_text, "Tolerance recorded in the header")->default_val("1/5");
    add_format(c_simple, common);
    c_simple->callback([&] {
        auto col = build_simple_r2_coloring(k);
        Json s;
        s["k"] = k;
        s["N"] = col.N();
        emit_file(out, common, write_coloring(col, eps().value(), static_cast<std::size_t>(k)), s);
    });

    auto* c_lower = construct->add_subcommand("lowerbound", "Recursive r-coloring without monochromatic AP_k(eps)");
    c_lower->add_option("--k", k)->required();
    c_lower->add_option("--r", r)->required();
    c_lower->add_option("--eps", eps_text)->required();
    c_lower->add_option("--eps0", eps0_text, "Upper limit on eps");
    c_lower->add_option("--cap", materialize_cap, "Largest N1 written out");
    c_lower->add_flag("--summary", summary_only, "Only report the parameters and structure checks");
    add_format(c_lower, common);
    c_lower->callback([&] {
        LowerBoundConfig cfg;
        cfg.eps0 = parse_rational(eps0_text);
        cfg.materialize_cap = materialize_cap;
        const auto e = eps();
        if (summary_only) {
            auto lb = build_lower_bound_runs(k, r, e, cfg);
            auto rep = verify_lower_bound_structure(lb);
            Json s = params_json(lb.params);
            s["runs"] = lb.phi.runs.size();
            s["blocks"] = rep.blocks;
            s["structure_ok"] = rep.ok();
            if (!rep.ok()) s["failure"] = rep.failure;
            emit(out, s, common.format);
            code = rep.ok() ? 0 : 1;
            return;
        }
        auto col = build_lower_bound_coloring(k, r, e, cfg);
        Json s;
        s["k"] = k;
        s["r"] = r;
        s["N"] = col.N();
        emit_file(out, common, write_coloring(col, e.value(), static_cast<std::size_t>(k)), s);
    });

    auto* c_behrend = construct->add_subcommand("behrend", "Digit set without AP_k(eps)");
    c_behrend->add_option("--eps", eps_text)->required();
    c_behrend->set_help_flag("--help", "Print this help message and exit");
    c_behrend->add_option("--h", h, "Number of base-q digits")->required();
    c_behrend->add_option("--k", k)->required();
    c_behrend->add_option("--provider", provider)->check(CLI::IsMember({"exact", "behrend3", "greedy", "auto"}));
    c_behrend->add_flag("--one-based", one_based, "Shift the set into [1, q^h]");
    add_format(c_behrend, common);
    c_behrend->callback([&] {
        APkFreeProvider pv;
        pv.mode = parse_provider_mode(provider);
        auto ds = build_behrend_digit_set(eps(), h, static_cast<std::size_t>(k), pv);
        auto elems = ds.elements;
        if (one_based) {
            for (auto& x : elems) ++x;
        }
        Json s;
        s["q"] = ds.construction.q;
        s["h"] = ds.construction.h;
        s["N"] = ds.construction.N;
        s["head"] = ds.construction.head;
        s["tail"] = ds.construction.tail;
        s["size"] = elems.size();
        emit_file(out, common, write_set(to_points(elems)), s);
    });

    auto* c_cube = construct->add_subcommand("cube-blowup", "Cube blow-up A_r");
    c_cube->add_option("--m", m)->required();
    c_cube->add_option("--k", k)->required();
    c_cube->add_option("--eps", eps_text)->required();
    auto* alpha_opt = c_cube->add_option("--alpha", alpha_text, "Density p/q, sets r");
    auto* iter_opt = c_cube->add_option("--iterations", iterations, "Explicit r");
    alpha_opt->excludes(iter_opt);
    add_format(c_cube, common);
    c_cube->callback([&] {
        CubeBlowupSpec spec;
        if (!alpha_text.empty()) {
            spec = build_cube_blowup(static_cast<std::size_t>(m), static_cast<std::size_t>(k), eps(),
                                     parse_rational(alpha_text));
        } else if (iterations > 0) {
            spec = build_cube_blowup_r(static_cast<std::size_t>(m), static_cast<std::size_t>(k), eps(), iterations);
        } else {
            throw std::invalid_argument("cube-blowup needs --alpha or --iterations");
        }
        Json s;
        s["r"] = spec.r;
        s["t"] = spec.t;
        s["box"] = spec.box;
        s["size"] = spec.elements.size();
        emit_file(out, common, write_set(spec.elements), s);
    });

    auto* c_product = construct->add_subcommand("product", "A x [N]^{m-1}");
    c_product->add_option("--set", file, "1-column SET file inside [1, N]")->required();
    c_product->add_option("--m", m)->required();
    c_product->add_option("--N", N)->required();
    add_format(c_product, common);
    c_product->callback([&] {
        std::vector<std::int64_t> A;
        for (const auto& p : read_set_file(file)) {
            if (p.size() != 1) throw std::invalid_argument("product needs a 1-column set");
            A.push_back(p[0]);
        }
        auto S = product_free_set(A, static_cast<std::size_t>(m), N);
        Json s;
        s["size"] = S.size();
        emit_file(out, common, write_set(S), s);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check colorings and sets");
    verify->require_subcommand(1);
    auto* v_col = verify->add_subcommand("coloring", "Search each color class for an AP_k(eps)");
    v_col->add_option("--file", file, "COLORING file")->required();
    v_col->add_option("--k", k, "Override k from the header");
    v_col->add_option("--eps", eps_text, "Override eps from the header");
    add_format(v_col, common);
    v_col->callback([&] {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        auto cf = read_coloring(in);
        const std::size_t kk = v_col->count("--k") ? static_cast<std::size_t>(k) : cf.k;
        const Epsilon e = eps_text.empty() ? Epsilon(cf.eps) : eps();
        auto hit = verify_no_mono_ap(cf.coloring, kk, e);
        Json j;
        j["N"] = cf.coloring.N();
        j["r"] = cf.coloring.r();
        j["k"] = kk;
        j["eps"] = to_string(e.value());
        j["good"] = !hit.has_value();
        if (hit) {
            j["color"] = hit->color;
            j["subset"] = hit->subset;
            j["witness"] = witness_json(hit->witness);
        }
        emit(out, j, common.format);
        code = hit ? 1 : 0;
    });

    auto* v_set = verify->add_subcommand("set", "Search a point set for an approximate cube");
    v_set->add_option("--file", file, "SET file")->required();
    v_set->add_option("--m", m)->required();
    v_set->add_option("--k", k)->required();
    v_set->add_option("--eps", eps_text)->required();
    v_set->add_option("--tol", tol);
    v_set->add_option("--cap", cap, "Node cap, 0 for none");
    add_format(v_set, common);
    v_set->callback([&] {
        VerifyCubeOptions vo;
        vo.tol = tol;
        vo.node_cap = cap;
        const auto S = read_set_file(file);
        auto hit = verify_cube_free(S, static_cast<std::size_t>(m), static_cast<std::size_t>(k), eps(), vo);
        Json j;
        j["size"] = S.size();
        j["free"] = !hit.has_value();
        if (hit) {
            j["cube"] = set_json(hit->grid.cells());
            j["witness"] = witness_json(hit->witness);
        }
        emit(out, j, common.format);
        code = hit ? 1 : 0;
    });

    // wnumber
    std::int64_t nmax = 60;
    auto* wnum = app.add_subcommand("wnumber", "Exact W_eps(k, r) by backtracking");
    wnum->add_option("--k", k)->required();
    wnum->add_option("--r", r)->required();
    wnum->add_option("--eps", eps_text)->required();
    wnum->add_option("--nmax", nmax, "Largest N tried");
    wnum->add_option("--workers", workers);
    wnum->add_option("--cap", cap, "Node cap, 0 for none");
    add_format(wnum, common);
    wnum->callback([&] {
        auto res = exact_W(static_cast<std::size_t>(k), static_cast<std::size_t>(r), eps(), nmax, opts());
        Json j;
        j["kind"] = res.kind == OutcomeKind::value ? "value" : "lower_bound_only";
        j["value"] = res.value;
        if (res.coloring) j["coloring"] = res.coloring->colors();
        if (!res.note.empty()) j["note"] = res.note;
        emit(out, j, common.format);
        code = res.kind == OutcomeKind::value ? 0 : 1;
    });

    // density
    auto* dens = app.add_subcommand("density", "Exact f_eps(N, m, k)");
    dens->add_option("--N", N)->required();
    dens->add_option("--m", m);
    dens->add_option("--k", k)->required();
    dens->add_option("--eps", eps_text);
    dens->add_flag("--exact-ap", exact_ap, "Exact progressions instead of AP_k(eps), m = 1");
    dens->add_option("--cap", cap, "Node cap, 0 for none");
    add_format(dens, common);
    dens->callback([&] {
        SearchOutcome res;
        if (exact_ap) {
            res = exact_f_exact_ap(N, static_cast<std::size_t>(k), opts());
        } else {
            if (eps_text.empty()) throw std::invalid_argument("density needs --eps or --exact-ap");
            res = exact_f(N, static_cast<std::size_t>(m), static_cast<std::size_t>(k), eps(), opts());
        }
        Json j;
        j["kind"] = res.kind == OutcomeKind::value ? "value" : "lower_bound_only";
        j["value"] = res.value;
        j["set"] = set_json(res.set);
        if (!res.note.empty()) j["note"] = res.note;
        emit(out, j, common.format);
        code = res.kind == OutcomeKind::value ? 0 : 1;
    });

    // hypergraph
    auto* hyper = app.add_subcommand("hypergraph", "Export the AP_k(eps) hypergraph of [N]");
    hyper->add_option("--N", N)->required();
    hyper->add_option("--k", k)->required();
    hyper->add_option("--eps", eps_text)->required();
    hyper->add_option("--cap", cap, "Node cap, 0 for none");
    hyper->add_option("--as", hyper_format, "Serialization")->check(CLI::IsMember({"text", "json"}));
    hyper->callback([&] {
        auto hg = enumerate_eps_aps(N, static_cast<std::size_t>(k), eps(), cap);
        const auto content = export_hypergraph(hg, hyper_format);
        if (!common.out_path.empty()) {
            std::ofstream f(common.out_path);
            if (!f) throw std::runtime_error("cannot write " + common.out_path);
            f << content;
        } else {
            out << content;
        }
    });

    // translate
    auto* trans = app.add_subcommand("translate", "Shift of A meeting X densely");
    trans->add_option("--a", file, "SET file for A")->required();
    trans->add_option("--x", file2, "SET file for X inside [N]^m")->required();
    trans->add_option("--N", N)->required();
    trans->add_option("--m", m)->required();
    trans->add_option("--seed", seed);
    trans->add_option("--mode", mode)->check(CLI::IsMember({"auto", "deterministic", "randomized"}));
    add_format(trans, common);
    trans->callback([&] {
        TranslateOptions to;
        to.seed = seed;
        to.mode = mode == "deterministic" ? TranslateMode::deterministic
                  : mode == "randomized"  ? TranslateMode::randomized
                                          : TranslateMode::automatic;
        auto res = find_dense_translate(read_set_file(file), read_set_file(file2), N, static_cast<std::size_t>(m), to);
        Json j;
        j["shift"] = res.shift;
        j["count"] = res.count;
        j["meets_bound"] = res.meets_bound;
        j["shifts_examined"] = res.shifts_examined;
        emit(out, j, common.format);
        code = res.meets_bound ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

}  // namespace apvdw
