#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "z4lat/qseries.hpp"
#include "z4lat/weights.hpp"

namespace z4lat {

// An exact lattice with basis rows m[i]/2; m is the doubled integer basis.
// For a self-dual code the half-scaled basis is unimodular and the Gram
// matrix (m m^T)/4 is integral.
struct LatticeBasis {
    int n = 0;
    std::vector<std::vector<long long>> m;
    std::string provenance;
};

enum class Parity { Odd, Even };

LatticeBasis construction_a(const Z4Code& code, std::string provenance = {});

// Integral Gram matrix (m m^T)/4; NotUnimodular on a non-integral entry.
std::vector<std::vector<Int>> gram(const LatticeBasis& basis);
Int gram_determinant(const LatticeBasis& basis);

// Checks Gram integrality and |det| = 1 exactly; classifies odd/even from
// the Gram diagonal (norm parity is additive over a basis).
Parity verify_unimodular(const LatticeBasis& basis);

struct Kissing {
    int min_norm = 0;
    Int count;
};

// mu = min(4, d_E/4); the count sums, over the Euclidean-truncated SWE, the
// number of integer lifts per codeword with squared length 4*mu (exact
// per-coordinate square-value DP over the budget).
Kissing min_norm_and_kissing(const Z4Code& code, int jobs = 1);

// Exact lattice theta through q^{max_norm}: the truncated SWE composed with
// the three one-dimensional residue-class thetas.
QuarterSeries theta_prefix(const Z4Code& code, int max_norm, int jobs = 1);

// Exact short-vector census: counts (and optionally antipodal representative
// vectors, doubled) for every squared-doubled-norm x G x^T = 4*norm up to
// 4*max_norm. LLL-reduces a copy of the basis and runs an exact rational
// Schnorr-Euchner walk.
struct ShortVectorSet {
    int max_norm = 0;
    std::map<int, Int> count_by_norm;                          // norm -> #vectors (both signs)
    std::vector<std::vector<long long>> vectors_doubled;       // one per +-pair, doubled coords
    std::vector<int> vector_norms;
};

ShortVectorSet enumerate_short_vectors(const LatticeBasis& basis, int max_norm,
                                       bool keep_vectors = false);

// Membership of v (given doubled, so 2v integer) via exact linear solve.
bool lattice_contains_doubled(const LatticeBasis& basis, const std::vector<long long>& doubled);

// The 2n vectors +-2e_i always lie in a Construction A lattice.
bool standard_frame_check(const LatticeBasis& basis);

struct FrameResult {
    enum class Status { Found, None, BudgetExhausted } status = Status::None;
    std::vector<std::vector<long long>> frame;  // doubled vectors when found
    unsigned long long nodes = 0;
};

unsigned long long default_frame_budget();  // Z4LAT_FRAME_BUDGET or 10^9

FrameResult find_k_frame(const LatticeBasis& basis, int k,
                         unsigned long long node_budget = default_frame_budget());

namespace detail {
// #integer lifts of a codeword class (n0 zeros, npm units, n2 twos) with
// squared length exactly `budget`; the per-coordinate square-value DP.
Int lift_ways(int n0, int npm, int n2, int budget);
}  // namespace detail

}  // namespace z4lat
