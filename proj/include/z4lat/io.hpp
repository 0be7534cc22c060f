#pragma once

#include <iosfwd>
#include <string>

#include "z4lat/lattice.hpp"
#include "z4lat/qseries.hpp"
#include "z4lat/weights.hpp"
#include "z4lat/z4.hpp"

namespace z4lat {

// Code file format, two accepted layouts:
//   `n k1` header + k1 rows of (n-k1) digits   (upper part, identity implicit)
//   `rows cols` header + `rows` full generator rows
Z4Code read_code(std::istream& in);
Z4Code load_code_file(const std::string& path);
// builtin name (C26..C45) or a path
Z4Code load_code(const std::string& name_or_path);

void write_code(std::ostream& out, const Z4Code& code);        // full generator layout
std::string to_string(const Z4Code& code);

BinaryCode read_binary_code(std::istream& in);                  // `n k` + k digit rows
void write_binary_code(std::ostream& out, const BinaryCode& code);

// SWE: `i j k coefficient` lines sorted lexicographically, plus a pretty
// printer matching the published polynomial layout (descending a, then b).
void write_swe_lines(std::ostream& out, const SWE& s);
std::string swe_polynomial(const SWE& s);

// Lattices serialize as the doubled basis: `n` + n rows of n integers.
void write_lattice(std::ostream& out, const LatticeBasis& basis);
LatticeBasis read_lattice(std::istream& in);
void write_gram(std::ostream& out, const LatticeBasis& basis);

// Series: `q^{k/4}: coefficient` lines (exponent reduced), and the polynomial
// string form `1 + 15426 q^4 + ...`.
void write_series_lines(std::ostream& out, const QuarterSeries& s);
std::string series_polynomial(const QuarterSeries& s);
std::string exponent_label(int qsteps);

}  // namespace z4lat
