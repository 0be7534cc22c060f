#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "z4lat/bits.hpp"

namespace z4lat {

// A binary linear code of length n <= 64 with rows packed into machine words
// (bit j = coordinate j). The generator is kept in reduced row echelon form
// with full row rank; the parity-check rows are the dual basis over the
// non-pivot columns.
class BinaryCode {
public:
    BinaryCode(int n, std::vector<uint64_t> rows);

    static BinaryCode zero(int n) { return BinaryCode(n, {}); }
    static BinaryCode full(int n);

    int length() const { return n_; }
    int dim() const { return k_; }

    const std::vector<uint64_t>& generator() const { return gen_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<uint64_t>& parity() const { return parity_; }

    uint64_t encode(uint64_t message) const;
    bool contains(uint64_t word) const;

    BinaryCode dual() const { return BinaryCode(n_, parity_); }

    // All codeword weights divisible by four, decided from the generator:
    // every row weight = 0 (mod 4) and pairwise intersections even.
    bool is_doubly_even() const;

    bool same_span(const BinaryCode& other) const;

private:
    int n_ = 0, k_ = 0;
    std::vector<uint64_t> gen_;
    std::vector<int> pivots_;
    std::vector<uint64_t> parity_;
};

enum class MinWeightStrategy { Auto, LowWeightScan, FullEnumeration };

// Exact minimum Hamming weight. `Auto` runs a full Gray-code enumeration of
// the 2^k messages when k <= 28 and otherwise an ascending-weight candidate
// scan filtered by the parity checks. The scan cap comes from the caller;
// without one the Singleton bound n-k+1 is used, which always terminates with
// the exact answer. A caller cap that is passed without finding a codeword
// raises BudgetExceeded.
int min_weight(const BinaryCode& code, MinWeightStrategy strategy = MinWeightStrategy::Auto,
               std::optional<int> weight_cap = std::nullopt, int jobs = 1);

// Visits every codeword of weight <= w_max exactly once (including the zero
// word), in weight order for high-rate codes, message order for low-rate.
void low_weight_words(const BinaryCode& code, int w_max,
                      const std::function<void(uint64_t)>& visit);
std::vector<uint64_t> low_weight_words(const BinaryCode& code, int w_max);

// #{s in B : (shift + s) restricted to mask == pattern}; 0 or a power of two.
uint64_t coset_count_with_projection(const BinaryCode& code, uint64_t shift, uint64_t mask,
                                     uint64_t pattern);

}  // namespace z4lat
