#include "z4lat/z4.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "z4lat/errors.hpp"

namespace z4lat {

Z4Vector Z4Vector::from_digits(std::string_view digits) {
    Z4Vector v(static_cast<int>(digits.size()));
    for (size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c < '0' || c > '3') throw std::invalid_argument("Z4 digit out of range");
        v.set(static_cast<int>(i), c - '0');
    }
    return v;
}

Z4Vector Z4Vector::times(int scalar) const {
    switch (scalar & 3) {
        case 0: return Z4Vector(n_);
        case 1: return *this;
        case 2: return Z4Vector(n_, 0, lo_);
        default: return -*this;
    }
}

Z4Vector Z4Vector::erased(int coord) const {
    const uint64_t low = mask_n(coord);
    const uint64_t lo = (lo_ & low) | ((lo_ >> (coord + 1)) << coord);
    const uint64_t hi = (hi_ & low) | ((hi_ >> (coord + 1)) << coord);
    return Z4Vector(n_ - 1, lo, hi);
}

Z4Vector Z4Vector::permuted(const std::vector<int>& perm) const {
    Z4Vector out(static_cast<int>(perm.size()));
    for (size_t j = 0; j < perm.size(); ++j) out.set(static_cast<int>(j), get(perm[j]));
    return out;
}

std::string Z4Vector::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + get(i));
    return s;
}

Z4Vector StandardForm::upper_row_std(int i) const { return upper[i].permuted(perm); }
Z4Vector StandardForm::lower_row_std(int j) const { return lower[j].permuted(perm); }

StandardForm standardize(std::vector<Z4Vector> rows, int n) {
    StandardForm sf;
    sf.n = n;
    std::vector<bool> is_unit_pivot(n, false);

    // Phase 1: unit pivots. Eliminating at a later column can re-introduce odd
    // entries at earlier columns of the remaining rows, so rescan from column
    // zero after every pivot.
    for (;;) {
        int pc = -1;
        size_t pr = 0;
        for (int c = 0; c < n && pc < 0; ++c) {
            if (is_unit_pivot[c]) continue;
            for (size_t i = 0; i < rows.size(); ++i)
                if (rows[i].get(c) & 1) { pc = c; pr = i; break; }
        }
        if (pc < 0) break;
        Z4Vector p = rows[pr];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pr));
        if (p.get(pc) == 3) p = -p;
        for (auto& r : rows) {
            const int coef = r.get(pc);
            if (coef) r = r - p.times(coef);
        }
        for (auto& u : sf.upper) {
            const int coef = u.get(pc);
            if (coef) u = u - p.times(coef);
        }
        sf.upper.push_back(p);
        sf.unit_pivots.push_back(pc);
        is_unit_pivot[pc] = true;
    }
    sf.k1 = static_cast<int>(sf.upper.size());

    // Phase 2: remaining rows are {0,2}-valued; reduce their halves over GF(2).
    std::vector<uint64_t> two_rows;
    for (const auto& r : rows) {
        assert(r.lo() == 0);
        if (r.hi()) two_rows.push_back(r.hi());
    }
    for (int c = 0; c < n; ++c) {
        if (is_unit_pivot[c]) continue;
        const uint64_t bit = uint64_t{1} << c;
        size_t src = two_rows.size();
        for (size_t i = 0; i < two_rows.size(); ++i)
            if (two_rows[i] & bit) { src = i; break; }
        if (src == two_rows.size()) continue;
        const uint64_t p = two_rows[src];
        two_rows.erase(two_rows.begin() + static_cast<std::ptrdiff_t>(src));
        for (auto& r : two_rows)
            if (r & bit) r ^= p;
        for (auto& l : sf.lower) {
            if (l.hi() & bit) l = Z4Vector(n, 0, l.hi() ^ p);
        }
        sf.lower.emplace_back(n, 0, p);
        sf.two_pivots.push_back(c);
    }
    sf.k2 = static_cast<int>(sf.lower.size());

    // Bring the A block into {0,1}: clear the high bit of upper entries over
    // the 2I_{k2} columns by subtracting the matching lower row.
    for (auto& u : sf.upper)
        for (int j = 0; j < sf.k2; ++j)
            if (u.get(sf.two_pivots[j]) >= 2) u = u - sf.lower[j];

    for (int c = 0; c < n; ++c) {
        if (is_unit_pivot[c]) continue;
        if (std::find(sf.two_pivots.begin(), sf.two_pivots.end(), c) != sf.two_pivots.end())
            continue;
        sf.free_cols.push_back(c);
    }
    sf.perm = sf.unit_pivots;
    sf.perm.insert(sf.perm.end(), sf.two_pivots.begin(), sf.two_pivots.end());
    sf.perm.insert(sf.perm.end(), sf.free_cols.begin(), sf.free_cols.end());
    return sf;
}

Z4Code::Z4Code(int n, std::vector<Z4Vector> generators) : n_(n), gens_(std::move(generators)) {
    if (n < 0 || n > 64) throw std::invalid_argument("code length must be in [0,64]");
    for (const auto& g : gens_)
        if (g.size() != n) throw std::invalid_argument("generator length mismatch");
    sf_ = standardize(gens_, n);

    self_dual_ = (2 * sf_.k1 + sf_.k2 == n);
    if (self_dual_) {
        std::vector<const Z4Vector*> all;
        for (const auto& u : sf_.upper) all.push_back(&u);
        for (const auto& l : sf_.lower) all.push_back(&l);
        for (size_t i = 0; i < all.size() && self_dual_; ++i)
            for (size_t j = i; j < all.size(); ++j)
                if (all[i]->dot(*all[j]) != 0) { self_dual_ = false; break; }
    }
    if (!self_dual_) {
        type_ = CodeType::NotSelfDual;
    } else {
        // Generator-row criterion: ew(x+y) = ew(x)+ew(y)+2(x.y) (mod 8) makes
        // the Euclidean weight mod 8 additive over a self-orthogonal set.
        bool all_zero_mod8 = true;
        auto ew_mod8 = [](const Z4Vector& v) {
            return (popcount(v.odd_mask()) + 4 * popcount(v.two_mask())) % 8;
        };
        for (const auto& u : sf_.upper)
            if (ew_mod8(u) != 0) all_zero_mod8 = false;
        for (const auto& l : sf_.lower)
            if (ew_mod8(l) != 0) all_zero_mod8 = false;
        type_ = all_zero_mod8 ? CodeType::TypeII : CodeType::TypeI;
    }
}

Z4Code Z4Code::dual() const {
    const auto& sf = sf_;
    const int m = sf.free_count();
    std::vector<Z4Vector> rows;
    rows.reserve(m + sf.k2);
    // ( -(B1+2B2)^T - D^T A^T | D^T | I_m ) over the permuted coordinates
    for (int f = 0; f < m; ++f) {
        Z4Vector w(n_);
        w.set(sf.free_cols[f], 1);
        for (int j = 0; j < sf.k2; ++j) w.set(sf.two_pivots[j], sf.d_at(j, f));
        for (int i = 0; i < sf.k1; ++i) {
            int acc = sf.b_at(i, f);
            for (int j = 0; j < sf.k2; ++j) acc += sf.a_at(i, j) * sf.d_at(j, f);
            w.set(sf.unit_pivots[i], (4 - acc % 4) % 4);
        }
        rows.push_back(w);
    }
    // ( 2A^T | 2I_{k2} | O )
    for (int j = 0; j < sf.k2; ++j) {
        Z4Vector w(n_);
        w.set(sf.two_pivots[j], 2);
        for (int i = 0; i < sf.k1; ++i) w.set(sf.unit_pivots[i], 2 * sf.a_at(i, j));
        rows.push_back(w);
    }
    return Z4Code(n_, std::move(rows));
}

BinaryCode Z4Code::residue() const {
    std::vector<uint64_t> rows;
    rows.reserve(sf_.k1);
    for (const auto& u : sf_.upper) rows.push_back(u.lo());
    return BinaryCode(n_, rows);
}

BinaryCode Z4Code::torsion() const {
    std::vector<uint64_t> rows;
    rows.reserve(sf_.k1 + sf_.k2);
    for (const auto& u : sf_.upper) rows.push_back(u.lo());
    for (const auto& l : sf_.lower) rows.push_back(l.hi());
    return BinaryCode(n_, rows);
}

bool Z4Code::contains(Z4Vector v) const {
    for (int i = 0; i < sf_.k1; ++i) {
        const int coef = v.get(sf_.unit_pivots[i]);
        if (coef) v = v - sf_.upper[i].times(coef);
    }
    for (int j = 0; j < sf_.k2; ++j) {
        const int e = v.get(sf_.two_pivots[j]);
        if (e & 1) return false;
        if (e == 2) v = v - sf_.lower[j];
    }
    return v.is_zero();
}

bool Z4Code::same_span(const Z4Code& other) const {
    if (n_ != other.n_) return false;
    if (sf_.k1 != other.sf_.k1 || sf_.k2 != other.sf_.k2) return false;
    for (const auto& u : sf_.upper)
        if (!other.contains(u)) return false;
    for (const auto& l : sf_.lower)
        if (!other.contains(l)) return false;
    return true;
}

Z4Code Z4Code::shorten_sub(int coord) const {
    if (n_ < 2) throw std::invalid_argument("sub() needs length >= 2");
    if (coord < 0 || coord >= n_) throw std::invalid_argument("coordinate out of range");
    std::vector<Z4Vector> gens;
    for (const auto& u : sf_.upper) gens.push_back(u);
    for (const auto& l : sf_.lower) gens.push_back(l);

    std::vector<Z4Vector> odd, even;
    for (const auto& g : gens)
        (g.get(coord) & 1 ? odd : even).push_back(g);
    std::vector<Z4Vector> kept;
    if (!odd.empty()) {
        Z4Vector p = odd.front();
        if (p.get(coord) == 3) p = -p;
        for (size_t i = 1; i < odd.size(); ++i) kept.push_back(odd[i] - p.times(odd[i].get(coord)));
        for (auto g : even) {
            if (g.get(coord) == 2) g = g - p.times(2);
            kept.push_back(g);
        }
        kept.push_back(p.times(2));
    } else {
        // every generator already lands in {0,2} at the coordinate
        kept = even;
    }
    std::vector<Z4Vector> out;
    out.reserve(kept.size());
    for (const auto& g : kept) out.push_back(g.erased(coord));
    return Z4Code(n_ - 1, std::move(out));
}

Z4Code Z4Code::permuted(const std::vector<int>& perm) const {
    std::vector<Z4Vector> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.permuted(perm));
    return Z4Code(n_, std::move(gens));
}

void Z4Code::for_each_codeword(const std::function<void(const Z4Vector&)>& visit) const {
    const int k1 = sf_.k1, k2 = sf_.k2;
    const int digits = k1 + k2;
    std::vector<int> digit(digits, 0);
    Z4Vector word(n_);
    visit(word);
    if (digits == 0) return;
    const Z4Vector* row_of = nullptr;
    for (;;) {
        int pos = digits - 1;
        for (;;) {
            row_of = pos < k1 ? &sf_.upper[pos] : &sf_.lower[pos - k1];
            word = word + *row_of;
            digit[pos]++;
            const int base = pos < k1 ? 4 : 2;
            if (digit[pos] < base) break;
            digit[pos] = 0;
            if (--pos < 0) return;
        }
        visit(word);
    }
}

Z4Code complete_from_upper(int n, const std::vector<Z4Vector>& m_rows) {
    const int k1 = static_cast<int>(m_rows.size());
    if (2 * k1 > n) throw ShapeError("upper part has more than n/2 rows");
    std::vector<Z4Vector> upper;
    upper.reserve(k1);
    for (int i = 0; i < k1; ++i) {
        if (m_rows[i].size() != n - k1) throw ShapeError("upper row width must be n - k1");
        Z4Vector u(n);
        u.set(i, 1);
        for (int j = 0; j < n - k1; ++j) u.set(k1 + j, m_rows[i].get(j));
        upper.push_back(u);
    }
    for (int i = 0; i < k1; ++i)
        for (int j = i; j < k1; ++j) {
            const int d = upper[i].dot(upper[j]);
            if (d != 0) throw NonOrthogonalUpper(i, j, d);
        }

    // Lower block: doubled basis of the residue dual's subcode vanishing on
    // the first k1 coordinates.
    std::vector<uint64_t> res_rows;
    res_rows.reserve(k1);
    for (const auto& u : upper) res_rows.push_back(u.lo());
    const BinaryCode residue(n, res_rows);
    const BinaryCode tor = residue.dual();
    std::vector<uint64_t> t = tor.generator();
    std::vector<Z4Vector> gens = upper;
    for (int c = 0; c < k1; ++c) {
        const uint64_t bit = uint64_t{1} << c;
        size_t src = t.size();
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] & bit) { src = i; break; }
        if (src == t.size()) continue;
        const uint64_t p = t[src];
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(src));
        for (auto& r : t)
            if (r & bit) r ^= p;
    }
    for (uint64_t r : t) gens.emplace_back(n, 0, r);

    Z4Code code(n, std::move(gens));
    if (!code.self_dual()) throw std::logic_error("completion failed to produce a self-dual code");
    return code;
}

Z4Code direct_sum(const Z4Code& a, const Z4Code& b) {
    const int n = a.length() + b.length();
    std::vector<Z4Vector> gens;
    for (const auto& g : a.generators()) gens.emplace_back(n, g.lo(), g.hi());
    for (const auto& g : b.generators())
        gens.emplace_back(n, g.lo() << a.length(), g.hi() << a.length());
    return Z4Code(n, std::move(gens));
}

}  // namespace z4lat
