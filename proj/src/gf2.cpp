#include "z4lat/gf2.hpp"

#include <cassert>
#include <stdexcept>

#include "z4lat/errors.hpp"

namespace z4lat {

BinaryCode::BinaryCode(int n, std::vector<uint64_t> rows) : n_(n) {
    if (n < 0 || n > 64) throw std::invalid_argument("BinaryCode length must be in [0,64]");
    const uint64_t live = mask_n(n);
    for (auto& r : rows) r &= live;
    // RREF
    for (int c = 0; c < n_; ++c) {
        const uint64_t bit = uint64_t{1} << c;
        size_t src = rows.size();
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i] & bit) { src = i; break; }
        if (src == rows.size()) continue;
        const uint64_t p = rows[src];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(src));
        for (auto& r : rows)
            if (r & bit) r ^= p;
        for (auto& g : gen_)
            if (g & bit) g ^= p;
        gen_.push_back(p);
        pivots_.push_back(c);
    }
    k_ = static_cast<int>(gen_.size());
    // dual basis: one row per non-pivot column
    std::vector<bool> is_pivot(n_, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        uint64_t v = uint64_t{1} << f;
        for (int i = 0; i < k_; ++i)
            if (gen_[i] & (uint64_t{1} << f)) v |= uint64_t{1} << pivots_[i];
        parity_.push_back(v);
    }
}

BinaryCode BinaryCode::full(int n) {
    std::vector<uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = uint64_t{1} << i;
    return BinaryCode(n, rows);
}

uint64_t BinaryCode::encode(uint64_t message) const {
    uint64_t w = 0;
    while (message) {
        int i = ctz(message);
        message &= message - 1;
        w ^= gen_[i];
    }
    return w;
}

bool BinaryCode::contains(uint64_t word) const {
    for (uint64_t h : parity_)
        if (parity64(h & word)) return false;
    return true;
}

bool BinaryCode::is_doubly_even() const {
    for (int i = 0; i < k_; ++i) {
        if (popcount(gen_[i]) % 4 != 0) return false;
        for (int j = i + 1; j < k_; ++j)
            if (parity64(gen_[i] & gen_[j])) return false;
    }
    return true;
}

bool BinaryCode::same_span(const BinaryCode& other) const {
    if (n_ != other.n_ || k_ != other.k_) return false;
    for (uint64_t g : gen_)
        if (!other.contains(g)) return false;
    return true;
}

namespace {

int min_weight_full(const BinaryCode& code, int jobs) {
    const int k = code.dim();
    if (k == 0) throw std::domain_error("minimum weight of the zero code is undefined");
    const uint64_t total = uint64_t{1} << k;
    // Gray walk over messages; chunks restart from their own offset.
    auto chunk_min = [&](uint64_t begin, uint64_t end) -> int {
        uint64_t word = code.encode(begin ^ (begin >> 1));
        int best = begin == 0 ? 64 + 1 : popcount(word);
        for (uint64_t i = begin + 1; i < end; ++i) {
            word ^= code.generator()[ctz(i)];
            int w = popcount(word);
            if (w < best) best = w;
        }
        return best;
    };
    return run_chunked<int>(
        total, uint64_t{1} << 22, jobs, 64 + 1, chunk_min,
        [](int a, int b) { return a < b ? a : b; });
}

}  // namespace

int min_weight(const BinaryCode& code, MinWeightStrategy strategy, std::optional<int> weight_cap,
               int jobs) {
    const int n = code.length(), k = code.dim();
    if (k == 0) throw std::domain_error("minimum weight of the zero code is undefined");
    if (strategy == MinWeightStrategy::Auto)
        strategy = (k <= 28) ? MinWeightStrategy::FullEnumeration : MinWeightStrategy::LowWeightScan;
    if (strategy == MinWeightStrategy::FullEnumeration) return min_weight_full(code, jobs);

    const bool capped = weight_cap.has_value();
    const int cap = capped ? *weight_cap : n - k + 1;  // Singleton bound is always exact
    const uint64_t live = mask_n(n);
    for (int w = 1; w <= cap; ++w) {
        uint64_t x = mask_n(w);
        while (x && (x & live) == x) {
            if (code.contains(x)) return w;
            x = next_same_weight(x);
        }
    }
    if (capped && k > 28)
        throw BudgetExceeded("no codeword of weight <= " + std::to_string(cap) + " found");
    throw BudgetExceeded("ascending scan exhausted the weight cap");
}

void low_weight_words(const BinaryCode& code, int w_max,
                      const std::function<void(uint64_t)>& visit) {
    const int n = code.length(), k = code.dim();
    if (w_max < 0) return;
    // candidate count for the syndrome-filtered scan vs full message space
    double scan_cost = 0;
    {
        double c = 1;
        for (int w = 0; w <= std::min(w_max, n); ++w) {
            scan_cost += c;
            c = c * (n - w) / (w + 1);
            if (scan_cost > 1e18) break;
        }
    }
    const double enum_cost = (k < 60) ? static_cast<double>(uint64_t{1} << std::min(k, 59)) : 1e18;
    if (enum_cost <= scan_cost) {
        uint64_t word = 0;
        if (popcount(word) <= w_max) visit(0);
        for (uint64_t i = 1; i < (uint64_t{1} << k); ++i) {
            word ^= code.generator()[ctz(i)];
            if (popcount(word) <= w_max) visit(word);
        }
        return;
    }
    const uint64_t live = mask_n(n);
    visit(0);
    for (int w = 1; w <= std::min(w_max, n); ++w) {
        uint64_t x = mask_n(w);
        while (x && (x & live) == x) {
            if (code.contains(x)) visit(x);
            x = next_same_weight(x);
        }
    }
}

std::vector<uint64_t> low_weight_words(const BinaryCode& code, int w_max) {
    std::vector<uint64_t> out;
    low_weight_words(code, w_max, [&](uint64_t w) { out.push_back(w); });
    return out;
}

uint64_t coset_count_with_projection(const BinaryCode& code, uint64_t shift, uint64_t mask,
                                     uint64_t pattern) {
    if (pattern & ~mask) throw std::invalid_argument("pattern must be supported inside mask");
    // Count s in B with s|mask == target, via elimination on the masked columns.
    const uint64_t target0 = (shift ^ pattern) & mask;
    std::vector<uint64_t> rows(code.generator());
    uint64_t target = target0;
    uint64_t cols = mask;
    size_t head = 0;
    while (cols) {
        int c = ctz(cols);
        cols &= cols - 1;
        const uint64_t bit = uint64_t{1} << c;
        size_t src = rows.size();
        for (size_t i = head; i < rows.size(); ++i)
            if (rows[i] & bit) { src = i; break; }
        if (src == rows.size()) {
            if (target & bit) return 0;  // unreachable coordinate
            continue;
        }
        std::swap(rows[head], rows[src]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != head && (rows[i] & bit)) rows[i] ^= rows[head];
        if (target & bit) target ^= rows[head] & mask;  // note below
        ++head;
    }
    // The masked system either has no solution (handled above) or a solution
    // space of dimension k - rank.
    if (target & mask) return 0;
    return uint64_t{1} << (rows.size() - head);
}

}  // namespace z4lat
