#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "z4lat/bits.hpp"
#include "z4lat/gf2.hpp"

namespace z4lat {

// A vector over Z4 of length n <= 64, stored as two bit planes:
// coordinate i has value lo_i + 2*hi_i.
class Z4Vector {
public:
    Z4Vector() = default;
    explicit Z4Vector(int n) : n_(n) {}
    Z4Vector(int n, uint64_t lo, uint64_t hi) : n_(n), lo_(lo & mask_n(n)), hi_(hi & mask_n(n)) {}

    static Z4Vector from_digits(std::string_view digits);

    int size() const { return n_; }
    int get(int i) const { return static_cast<int>((lo_ >> i) & 1) + 2 * static_cast<int>((hi_ >> i) & 1); }
    void set(int i, int v) {
        const uint64_t bit = uint64_t{1} << i;
        lo_ = (lo_ & ~bit) | (uint64_t(v & 1) << i);
        hi_ = (hi_ & ~bit) | (uint64_t((v >> 1) & 1) << i);
    }

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }
    uint64_t odd_mask() const { return lo_; }
    uint64_t two_mask() const { return hi_ & ~lo_; }
    uint64_t support() const { return lo_ | hi_; }
    bool is_zero() const { return lo_ == 0 && hi_ == 0; }

    Z4Vector operator+(const Z4Vector& o) const {
        const uint64_t lo = lo_ ^ o.lo_;
        return Z4Vector(n_, lo, hi_ ^ o.hi_ ^ (lo_ & o.lo_));
    }
    Z4Vector operator-() const { return Z4Vector(n_, lo_, hi_ ^ lo_); }
    Z4Vector operator-(const Z4Vector& o) const { return *this + (-o); }
    Z4Vector times(int scalar) const;

    // standard inner product mod 4
    int dot(const Z4Vector& o) const {
        return static_cast<int>(popcount(lo_ & o.lo_) +
                                2 * (popcount(lo_ & o.hi_) + popcount(hi_ & o.lo_))) & 3;
    }

    Z4Vector erased(int coord) const;                     // drop one coordinate
    Z4Vector permuted(const std::vector<int>& perm) const;  // new[j] = old[perm[j]]

    std::string to_string() const;
    bool operator==(const Z4Vector&) const = default;

private:
    int n_ = 0;
    uint64_t lo_ = 0, hi_ = 0;
};

// Eq-2 standard-form data: generator rows ( I_{k1} A B1+2B2 / O 2I_{k2} 2D )
// reachable from the input rows by the recorded coordinate permutation.
// upper/lower rows are kept in the *original* coordinates.
struct StandardForm {
    int n = 0, k1 = 0, k2 = 0;
    std::vector<int> unit_pivots;  // columns carrying I_{k1}
    std::vector<int> two_pivots;   // columns carrying 2I_{k2}
    std::vector<int> free_cols;
    std::vector<int> perm;         // perm[j] = original column at standard position j
    std::vector<Z4Vector> upper;   // k1 rows, original coordinates
    std::vector<Z4Vector> lower;   // k2 rows with entries in {0,2}

    int free_count() const { return n - k1 - k2; }
    int a_at(int i, int j) const { return upper[i].get(two_pivots[j]); }           // in {0,1}
    int b_at(int i, int f) const { return upper[i].get(free_cols[f]); }            // B1+2B2
    int d_at(int j, int f) const { return lower[j].get(free_cols[f]) >> 1; }       // in {0,1}
    Z4Vector upper_row_std(int i) const;  // row i in standard coordinates
    Z4Vector lower_row_std(int j) const;
};

StandardForm standardize(std::vector<Z4Vector> rows, int n);

enum class CodeType { TypeI, TypeII, NotSelfDual, Unknown };

class Z4Code {
public:
    Z4Code(int n, std::vector<Z4Vector> generators);

    int length() const { return n_; }
    const std::vector<Z4Vector>& generators() const { return gens_; }
    const StandardForm& standard_form() const { return sf_; }
    int log2_size() const { return 2 * sf_.k1 + sf_.k2; }

    bool self_dual() const { return self_dual_; }
    CodeType type() const { return type_; }

    Z4Code dual() const;
    BinaryCode residue() const;
    BinaryCode torsion() const;
    bool contains(Z4Vector v) const;
    bool same_span(const Z4Code& other) const;

    Z4Code shorten_sub(int coord) const;  // keep words with coord in {0,2}, drop it
    Z4Code permuted(const std::vector<int>& perm) const;

    // Deterministic codeword stream: coefficient tuples (a in Z4^{k1}, b in
    // F2^{k2}) in lexicographic order, leftmost digit most significant.
    // Intended for small codes; 2^{2k1+k2} visits.
    void for_each_codeword(const std::function<void(const Z4Vector&)>& visit) const;

private:
    int n_ = 0;
    std::vector<Z4Vector> gens_;
    StandardForm sf_;
    bool self_dual_ = false;
    CodeType type_ = CodeType::Unknown;
};

// The unique self-dual code whose standard form has upper block (I_{k1} | M);
// rows of M have width n - k1. Throws NonOrthogonalUpper / ShapeError.
Z4Code complete_from_upper(int n, const std::vector<Z4Vector>& m_rows);

Z4Code direct_sum(const Z4Code& a, const Z4Code& b);

inline bool is_self_dual(const Z4Code& c) { return c.self_dual(); }
inline CodeType classify_type(const Z4Code& c) { return c.type(); }

}  // namespace z4lat
