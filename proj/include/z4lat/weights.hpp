#pragma once

#include <array>
#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "z4lat/z4.hpp"

namespace z4lat {

using Int = boost::multiprecision::cpp_int;

struct WeightTriple {
    long long euclidean = 0;
    long long lee = 0;
    long long hamming = 0;
    bool operator==(const WeightTriple&) const = default;
};

inline WeightTriple weights(const Z4Vector& x) {
    const long long odd = popcount(x.odd_mask());
    const long long twos = popcount(x.two_mask());
    return {odd + 4 * twos, odd + 2 * twos, odd + twos};
}

struct MinWeights {
    WeightTriple min;
    Int euclid_count;  // codewords attaining the minimum Euclidean weight
};

// Exact minimum Euclidean/Lee/Hamming weights of a self-dual code via the
// residue-class structured search; d_H comes from the torsion code.
MinWeights min_weights(const Z4Code& code, int jobs = 1);

// Sparse symmetrized weight enumerator: coefficient of a^i b^j c^k counts
// codewords with i zeros, j units (+-1) and k twos. With a truncation cap W
// the terms are complete exactly for monomials of Euclidean weight j+4k <= W.
struct SWE {
    int n = 0;
    std::optional<int> truncation;
    std::map<std::array<int, 3>, Int> terms;

    Int coeff(int i, int j, int k) const {
        auto it = terms.find({i, j, k});
        return it == terms.end() ? Int(0) : it->second;
    }
    Int total() const {
        Int t = 0;
        for (const auto& [k, v] : terms) t += v;
        return t;
    }
    bool operator==(const SWE&) const = default;
};

SWE swe(const Z4Code& code, std::optional<int> cap = std::nullopt, int jobs = 1);

// Full-enumeration cross-checks (2^n codeword walks, n <= 30).
MinWeights min_weights_full_enumeration(const Z4Code& code, int jobs = 1);

// Upper bounds on the minimum Euclidean weight of self-dual codes.
int typeI_upper_bound(int n);
int typeII_upper_bound(int n);

// Upper bound on d_E implied by the largest odd unimodular minimum norms,
// 25 <= n <= 47.
int improved_upper_bound(int n);

struct DmaxEntry {
    int lo = 0, hi = 0;
    bool exact() const { return lo == hi; }
    bool operator==(const DmaxEntry&) const = default;
};

// Largest minimum Euclidean weight among Type I codes, 25 <= n <= 47; n = 37
// is the open interval {12,16}. OutOfRange outside the table.
DmaxEntry dmaxE_table(int n);

// True iff the Type I code attains dmaxE_table(n); Undetermined when the
// table has no exact entry for n.
bool is_optimal(const Z4Code& code);

}  // namespace z4lat
