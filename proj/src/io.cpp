#include "z4lat/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "z4lat/errors.hpp"
#include "z4lat/paperdata.hpp"

namespace z4lat {

namespace {

struct DigitGrid {
    int a = 0, b = 0;  // header numbers
    std::vector<std::string> rows;
    std::vector<int> row_lines;  // source line numbers for error reporting
};

DigitGrid read_digit_grid(std::istream& in) {
    DigitGrid g;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
        while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(trimmed);
            if (!(hs >> g.a >> g.b)) throw ParseError(lineno, 1, "expected two integers");
            std::string rest;
            if (hs >> rest) throw ParseError(lineno, 1, "header must hold exactly two integers");
            have_header = true;
            continue;
        }
        for (size_t c = 0; c < trimmed.size(); ++c)
            if (trimmed[c] < '0' || trimmed[c] > '3')
                throw ParseError(lineno, static_cast<int>(c) + 1,
                                 std::string("invalid digit '") + trimmed[c] + "'");
        g.rows.push_back(trimmed);
        g.row_lines.push_back(lineno);
    }
    if (!have_header) throw ParseError(1, 1, "empty input");
    return g;
}

}  // namespace

Z4Code read_code(std::istream& in) {
    const DigitGrid g = read_digit_grid(in);
    const int rows = static_cast<int>(g.rows.size());
    const int width = rows ? static_cast<int>(g.rows.front().size()) : 0;
    for (int i = 1; i < rows; ++i)
        if (static_cast<int>(g.rows[i].size()) != width)
            throw ParseError(g.row_lines[i], 1, "ragged row width");

    const bool upper_form = (rows == g.b && width == g.a - g.b);
    const bool full_form = (rows == g.a && width == g.b);
    if (upper_form) {
        std::vector<Z4Vector> m;
        m.reserve(rows);
        for (const auto& r : g.rows) m.push_back(Z4Vector::from_digits(r));
        return complete_from_upper(g.a, m);
    }
    if (full_form) {
        std::vector<Z4Vector> gens;
        gens.reserve(rows);
        for (const auto& r : g.rows) gens.push_back(Z4Vector::from_digits(r));
        return Z4Code(g.b, std::move(gens));
    }
    throw ParseError(g.row_lines.empty() ? 1 : g.row_lines.front(), 1,
                     "grid shape matches neither `n k1` upper form nor `rows cols` full form");
}

Z4Code load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_code(in);
}

Z4Code load_code(const std::string& name_or_path) {
    if (paperdata::is_builtin_name(name_or_path)) return paperdata::builtin_code(name_or_path);
    return load_code_file(name_or_path);
}

void write_code(std::ostream& out, const Z4Code& code) {
    const auto& sf = code.standard_form();
    out << (sf.k1 + sf.k2) << ' ' << code.length() << '\n';
    for (const auto& u : sf.upper) out << u.to_string() << '\n';
    for (const auto& l : sf.lower) out << l.to_string() << '\n';
}

std::string to_string(const Z4Code& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

BinaryCode read_binary_code(std::istream& in) {
    const DigitGrid g = read_digit_grid(in);
    if (static_cast<int>(g.rows.size()) != g.b)
        throw ParseError(1, 1, "expected k generator rows");
    std::vector<uint64_t> rows;
    for (size_t i = 0; i < g.rows.size(); ++i) {
        const auto& r = g.rows[i];
        if (static_cast<int>(r.size()) != g.a) throw ParseError(g.row_lines[i], 1, "row width != n");
        uint64_t w = 0;
        for (size_t c = 0; c < r.size(); ++c) {
            if (r[c] > '1')
                throw ParseError(g.row_lines[i], static_cast<int>(c) + 1, "binary digit expected");
            if (r[c] == '1') w |= uint64_t{1} << c;
        }
        rows.push_back(w);
    }
    return BinaryCode(g.a, rows);
}

void write_binary_code(std::ostream& out, const BinaryCode& code) {
    out << code.length() << ' ' << code.dim() << '\n';
    for (uint64_t row : code.generator()) {
        std::string s(code.length(), '0');
        for (int i = 0; i < code.length(); ++i)
            if (row >> i & 1) s[i] = '1';
        out << s << '\n';
    }
}

void write_swe_lines(std::ostream& out, const SWE& s) {
    for (const auto& [key, coeff] : s.terms)
        out << key[0] << ' ' << key[1] << ' ' << key[2] << ' ' << coeff.str() << '\n';
}

std::string swe_polynomial(const SWE& s) {
    // published layout: descending a exponent, then descending b exponent
    std::vector<std::array<int, 3>> keys;
    keys.reserve(s.terms.size());
    for (const auto& [key, coeff] : s.terms) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        if (x[0] != y[0]) return x[0] > y[0];
        return x[1] > y[1];
    });
    std::string out;
    auto var = [](const char* v, int e) -> std::string {
        if (e == 0) return {};
        if (e == 1) return std::string(" ") + v;
        return std::string(" ") + v + "^" + std::to_string(e);
    };
    for (const auto& key : keys) {
        const Int c = s.terms.at(key);
        if (!out.empty()) out += " + ";
        const std::string mono = var("a", key[0]) + var("b", key[1]) + var("c", key[2]);
        if (c == 1 && !mono.empty())
            out += mono.substr(1);
        else
            out += c.str() + mono;
    }
    return out;
}

void write_lattice(std::ostream& out, const LatticeBasis& basis) {
    out << basis.n << '\n';
    for (const auto& row : basis.m) {
        for (int t = 0; t < basis.n; ++t) out << (t ? " " : "") << row[t];
        out << '\n';
    }
}

LatticeBasis read_lattice(std::istream& in) {
    LatticeBasis b;
    if (!(in >> b.n) || b.n <= 0) throw ParseError(1, 1, "expected dimension header");
    b.m.assign(b.n, std::vector<long long>(b.n));
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            if (!(in >> b.m[i][j])) throw ParseError(i + 2, j + 1, "expected integer entry");
    return b;
}

void write_gram(std::ostream& out, const LatticeBasis& basis) {
    const auto g = gram(basis);
    out << basis.n << '\n';
    for (const auto& row : g) {
        for (int t = 0; t < basis.n; ++t) out << (t ? " " : "") << row[t].str();
        out << '\n';
    }
}

std::string exponent_label(int qsteps) {
    if (qsteps % 4 == 0) return std::to_string(qsteps / 4);
    if (qsteps % 2 == 0) return std::to_string(qsteps / 2) + "/2";
    return std::to_string(qsteps) + "/4";
}

void write_series_lines(std::ostream& out, const QuarterSeries& s) {
    for (const auto& [k, v] : s.coeffs()) out << "q^{" << exponent_label(k) << "}: " << v.str() << '\n';
}

std::string series_polynomial(const QuarterSeries& s) {
    if (s.coeffs().empty()) return "0";
    std::string out;
    for (const auto& [k, v] : s.coeffs()) {
        const bool neg = v < 0;
        const Rat mag = neg ? Rat(-v) : v;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string term;
        if (k == 0) {
            term = mag.str();
        } else {
            std::string e = exponent_label(k);
            std::string qpart = (e.find('/') == std::string::npos && e.size() == 1)
                                    ? "q^" + e
                                    : "q^{" + e + "}";
            if (k == 4) qpart = "q";
            term = (mag == 1 ? qpart : mag.str() + " " + qpart);
        }
        out += term;
    }
    return out;
}

}  // namespace z4lat
