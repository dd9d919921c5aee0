#pragma once

// Text formats shared by the library and the command line tool.
//
// SET        optional '#' comment lines, then one point per line as m
//            whitespace-separated base-10 integers, lexicographically
//            sorted, every line newline-terminated.
// COLORING   "# N=<N> r=<r> eps=<p>/<q> k=<k>", then N lines; line i holds
//            the color (1..r) of the integer i.
// HYPERGRAPH "# N=<N> k=<k> eps=<p>/<q>", then one edge per line as k sorted
//            integers. The exact-progression hypergraph uses eps=0/1.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apvdw/colorings.hpp"
#include "apvdw/cube.hpp"
#include "apvdw/rational.hpp"
#include "apvdw/search.hpp"

namespace apvdw {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string write_set(std::vector<PointI> points, const std::string& comment = "");
std::vector<PointI> read_set(std::istream& in);
std::vector<PointI> read_set_file(const std::string& path);

struct ColoringFile {
    Coloring coloring;
    Rational eps;
    std::size_t k = 0;
};

std::string write_coloring(const Coloring& coloring, const Rational& eps, std::size_t k);
ColoringFile read_coloring(std::istream& in);

std::string write_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);

using Json = nlohmann::ordered_json;

// {"num": n, "den": d}; integers that do not fit in 64 bits become strings.
Json rational_json(const Rational& q);
Json witness_json(const Witness1D& w);
Json witness_json(const WitnessMD& w);
std::string decimal(double x);  // shortest round-trip representation

}  // namespace apvdw
