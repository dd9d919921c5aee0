#include "apvdw/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace apvdw {

namespace {

std::vector<std::int64_t> parse_ints(const std::string& line, std::size_t line_no)
{
    std::vector<std::int64_t> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw FormatError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
        }
        out.push_back(v);
    }
    return out;
}

// Parses "key=value" pairs from a '#' header line.
std::string header_field(const std::string& header, const std::string& key)
{
    std::istringstream ss(header.substr(1));
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos && tok.substr(0, eq) == key) return tok.substr(eq + 1);
    }
    throw FormatError("header is missing '" + key + "=': " + header);
}

std::int64_t header_int(const std::string& header, const std::string& key)
{
    auto text = header_field(header, key);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw FormatError("header field " + key + " is not an integer: " + text);
    }
    return v;
}

std::string first_line(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing header line");
    return line;
}

}  // namespace

std::string write_set(std::vector<PointI> points, const std::string& comment)
{
    std::sort(points.begin(), points.end());
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << '\n';
    for (const auto& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << p[j];
        out << '\n';
    }
    return out.str();
}

std::vector<PointI> read_set(std::istream& in)
{
    std::vector<PointI> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto p = parse_ints(line, line_no);
        if (!points.empty() && p.size() != points.front().size()) {
            throw FormatError("line " + std::to_string(line_no) + ": inconsistent dimension");
        }
        if (!points.empty() && !(points.back() < p)) {
            throw FormatError("line " + std::to_string(line_no) + ": points must be strictly increasing");
        }
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<PointI> read_set_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_set(in);
}

std::string write_coloring(const Coloring& coloring, const Rational& eps, std::size_t k)
{
    std::ostringstream out;
    out << "# N=" << coloring.N() << " r=" << coloring.r() << " eps=" << to_string(eps) << " k=" << k << '\n';
    for (auto c : coloring.colors()) out << c << '\n';
    return out.str();
}

ColoringFile read_coloring(std::istream& in)
{
    const std::string header = first_line(in);
    if (header.empty() || header[0] != '#') throw FormatError("coloring file must start with a '#' header");
    const auto N = header_int(header, "N");
    const auto r = header_int(header, "r");
    const auto k = header_int(header, "k");
    if (N < 0 || r < 1 || k < 1) throw FormatError("bad coloring header: " + header);
    Rational eps;
    try {
        eps = parse_rational(header_field(header, "eps"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    std::vector<std::uint16_t> colors;
    colors.reserve(static_cast<std::size_t>(N));
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto v = parse_ints(line, line_no);
        if (v.size() != 1 || v[0] < 1 || v[0] > r) {
            throw FormatError("line " + std::to_string(line_no) + ": expected a color in 1.." + std::to_string(r));
        }
        colors.push_back(static_cast<std::uint16_t>(v[0]));
    }
    if (colors.size() != static_cast<std::size_t>(N)) {
        throw FormatError("expected " + std::to_string(N) + " colors, found " + std::to_string(colors.size()));
    }
    return ColoringFile{Coloring(static_cast<std::size_t>(r), std::move(colors)), eps, static_cast<std::size_t>(k)};
}

std::string write_hypergraph(const Hypergraph& h)
{
    std::ostringstream out;
    out << "# N=" << h.N << " k=" << h.k << " eps=" << (h.eps ? to_string(*h.eps) : std::string("0/1")) << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph read_hypergraph(std::istream& in)
{
    const std::string header = first_line(in);
    if (header.empty() || header[0] != '#') throw FormatError("hypergraph file must start with a '#' header");
    Hypergraph h;
    h.N = header_int(header, "N");
    h.k = static_cast<std::size_t>(header_int(header, "k"));
    Rational eps;
    try {
        eps = parse_rational(header_field(header, "eps"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    if (eps != 0) h.eps = eps;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto e = parse_ints(line, line_no);
        if (e.size() != h.k) throw FormatError("line " + std::to_string(line_no) + ": edge of wrong size");
        if (!std::is_sorted(e.begin(), e.end()) || e.front() < 1 || e.back() > h.N) {
            throw FormatError("line " + std::to_string(line_no) + ": edge must be sorted inside [1, N]");
        }
        h.edges.push_back(std::move(e));
    }
    return h;
}

Json rational_json(const Rational& q)
{
    auto part = [](const BigInt& v) -> Json {
        if (fits_int64(v)) return Json(to_int64(v));
        return Json(v.get_str());
    };
    return Json{{"num", part(q.get_num())}, {"den", part(q.get_den())}};
}

Json witness_json(const Witness1D& w)
{
    return Json{{"a", rational_json(w.a)}, {"d", rational_json(w.d)}, {"margin", rational_json(w.margin)}};
}

std::string decimal(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

Json witness_json(const WitnessMD& w)
{
    Json a = Json::array();
    for (double c : w.a) a.push_back(decimal(c));
    return Json{{"a", a}, {"d", decimal(w.d)}, {"residual", decimal(w.residual)}, {"tol", decimal(w.tol)}};
}

}  // namespace apvdw
