#include "z4lat/weights.hpp"

#include <algorithm>
#include <cassert>

#include "z4lat/errors.hpp"

namespace z4lat {

namespace {

// ---------------------------------------------------------------------------
// Structured residue-class machinery.
//
// Codewords over a fixed residue word r (= odd support) are u_r + 2t with t in
// the torsion code; the number of 2s off supp(r) is the Hamming distance from
// the lift's 2-pattern to the punctured torsion code. Its weight profile is
// counted by a syndrome DP against the residue code shortened at supp(r).
// ---------------------------------------------------------------------------

struct StructuredContext {
    int n = 0, k1 = 0;
    std::vector<uint64_t> res_rows;                     // residue generator (I A B1)
    std::vector<std::pair<uint64_t, uint64_t>> upper;   // lift rows as (lo,hi) planes
};

StructuredContext make_context(const Z4Code& code) {
    StructuredContext ctx;
    ctx.n = code.length();
    ctx.k1 = code.standard_form().k1;
    for (const auto& u : code.standard_form().upper) {
        ctx.res_rows.push_back(u.lo());
        ctx.upper.emplace_back(u.lo(), u.hi());
    }
    return ctx;
}

struct TwoProfile {
    int wt_r = 0;
    std::vector<uint64_t> counts;  // counts[w] = #torsion words giving w twos off supp(r)
    int mult_exp = 0;              // codeword count per torsion word class: 2^mult_exp
};

// counts[w] * 2^mult_exp = #codewords over residue combo `mask` with w twos.
TwoProfile two_profile(const StructuredContext& ctx, uint32_t mask, int wmax) {
    TwoProfile out;
    uint64_t r = 0;
    uint64_t lo = 0, hi = 0;
    for (int i = 0; i < ctx.k1; ++i) {
        if (!(mask >> i & 1)) continue;
        r ^= ctx.res_rows[i];
        const uint64_t l2 = lo ^ ctx.upper[i].first;
        hi ^= ctx.upper[i].second ^ (lo & ctx.upper[i].first);
        lo = l2;
    }
    out.wt_r = popcount(r);
    const uint64_t v = hi & ~lo;  // the chosen lift's 2-pattern (off supp(r))

    // shortened residue = parity checks of the punctured torsion code
    std::vector<uint64_t> h(ctx.res_rows);
    uint64_t cols = r;
    while (cols) {
        const uint64_t bit = cols & (~cols + 1);
        cols &= cols - 1;
        size_t src = h.size();
        for (size_t i = 0; i < h.size(); ++i)
            if (h[i] & bit) { src = i; break; }
        if (src == h.size()) continue;
        const uint64_t p = h[src];
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(src));
        for (auto& q : h)
            if (q & bit) q ^= p;
    }
    const int mprime = static_cast<int>(h.size());
    out.mult_exp = out.wt_r - ctx.k1 + mprime;

    uint32_t sigma0 = 0;
    for (int idx = 0; idx < mprime; ++idx)
        if (parity64(h[idx] & v)) sigma0 |= uint32_t{1} << idx;

    const size_t size = size_t{1} << mprime;
    std::vector<uint64_t> cnt(size * (wmax + 1), 0);
    cnt[0] = 1;
    auto row = [&](size_t s) { return cnt.data() + s * (wmax + 1); };
    uint64_t off = mask_n(ctx.n) & ~r;
    std::vector<char> done(size);
    while (off) {
        const int j = ctz(off);
        off &= off - 1;
        uint32_t kap = 0;
        for (int idx = 0; idx < mprime; ++idx)
            if (h[idx] >> j & 1) kap |= uint32_t{1} << idx;
        if (kap == 0) {
            for (size_t s = 0; s < size; ++s) {
                uint64_t* rs = row(s);
                for (int w = wmax; w >= 1; --w) rs[w] += rs[w - 1];
            }
        } else {
            std::fill(done.begin(), done.end(), 0);
            for (size_t s = 0; s < size; ++s) {
                if (done[s]) continue;
                const size_t t = s ^ kap;
                uint64_t* rs = row(s);
                uint64_t* rt = row(t);
                for (int w = wmax; w >= 1; --w) {
                    const uint64_t a = rs[w] + rt[w - 1];
                    const uint64_t b = rt[w] + rs[w - 1];
                    rs[w] = a;
                    rt[w] = b;
                }
                done[s] = done[t] = 1;
            }
        }
    }
    out.counts.assign(row(sigma0), row(sigma0) + wmax + 1);
    return out;
}

// d_H = d(torsion); for k <= 28 the full Gray enumeration applies, otherwise
// the ascending scan with the Singleton cap k1+1, which is always exact.
int torsion_min_weight(const Z4Code& code, int jobs) {
    const BinaryCode tor = code.torsion();
    return min_weight(tor, MinWeightStrategy::Auto, std::nullopt, jobs);
}

// ---------------------------------------------------------------------------
// Full Z4 enumeration: coefficient tuples (a in Z4^{k1}, b in F2^{k2}) in
// lexicographic order, leftmost digit most significant. Chunks enumerate
// disjoint index ranges, so any worker count visits the same words.
// ---------------------------------------------------------------------------

struct EnumPlan {
    int n = 0, k1 = 0, k2 = 0;
    std::vector<std::pair<uint64_t, uint64_t>> rows;  // per digit: row added on increment
    uint64_t total = 0;

    std::pair<uint64_t, uint64_t> word_at(uint64_t index) const {
        // decompose index into digits (most significant first) and sum rows
        uint64_t lo = 0, hi = 0;
        for (int pos = k1 + k2 - 1; pos >= 0; --pos) {
            const int base = pos < k1 ? 4 : 2;
            const int digit = static_cast<int>(index % base);
            index /= base;
            for (int rep = 0; rep < digit; ++rep) {
                const uint64_t l2 = lo ^ rows[pos].first;
                hi ^= rows[pos].second ^ (lo & rows[pos].first);
                lo = l2;
            }
        }
        return {lo, hi};
    }
};

EnumPlan make_plan(const Z4Code& code) {
    EnumPlan plan;
    const auto& sf = code.standard_form();
    plan.n = code.length();
    plan.k1 = sf.k1;
    plan.k2 = sf.k2;
    for (const auto& u : sf.upper) plan.rows.emplace_back(u.lo(), u.hi());
    for (const auto& l : sf.lower) plan.rows.emplace_back(l.lo(), l.hi());
    plan.total = uint64_t{1} << (2 * sf.k1 + sf.k2);
    return plan;
}

template <class Visit>
void enumerate_range(const EnumPlan& plan, uint64_t begin, uint64_t end, Visit&& visit) {
    if (begin >= end) return;
    auto [lo, hi] = plan.word_at(begin);
    visit(lo, hi);
    const int digits = plan.k1 + plan.k2;
    std::vector<int> digit(digits, 0);
    {
        uint64_t idx = begin;
        for (int pos = digits - 1; pos >= 0; --pos) {
            const int base = pos < plan.k1 ? 4 : 2;
            digit[pos] = static_cast<int>(idx % base);
            idx /= base;
        }
    }
    for (uint64_t i = begin + 1; i < end; ++i) {
        int pos = digits - 1;
        for (;;) {
            const auto& row = plan.rows[pos];
            const uint64_t l2 = lo ^ row.first;
            hi ^= row.second ^ (lo & row.first);
            lo = l2;
            const int base = pos < plan.k1 ? 4 : 2;
            if (++digit[pos] < base) break;
            digit[pos] = 0;
            --pos;
        }
        visit(lo, hi);
    }
}

struct FullProfile {
    // counts[j][k]: codewords with j odd coordinates and k twos
    std::vector<uint64_t> counts;
    int n = 0;
    uint64_t& at(int j, int k) { return counts[static_cast<size_t>(j) * (n + 1) + k]; }
    uint64_t at(int j, int k) const { return counts[static_cast<size_t>(j) * (n + 1) + k]; }
};

FullProfile full_profile(const Z4Code& code, int jobs) {
    const EnumPlan plan = make_plan(code);
    const int n = plan.n;
    FullProfile init;
    init.n = n;
    init.counts.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    auto chunk = [&](uint64_t b, uint64_t e) {
        FullProfile local;
        local.n = n;
        local.counts.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
        enumerate_range(plan, b, e, [&](uint64_t lo, uint64_t hi) {
            local.at(popcount(lo), popcount(hi & ~lo))++;
        });
        return local;
    };
    auto merge = [](FullProfile a, FullProfile b) {
        for (size_t i = 0; i < a.counts.size(); ++i) a.counts[i] += b.counts[i];
        return a;
    };
    return run_chunked<FullProfile>(plan.total, uint64_t{1} << 22, jobs, std::move(init), chunk,
                                    merge);
}

}  // namespace

MinWeights min_weights(const Z4Code& code, int jobs) {
    if (!code.self_dual()) throw NotSelfDual();
    const int dH = torsion_min_weight(code, jobs);
    long long boundE = 4LL * dH;
    long long boundL = 2LL * dH;
    const StructuredContext ctx = make_context(code);
    for (uint32_t mask = 1; mask < (uint32_t{1} << ctx.k1); ++mask) {
        uint64_t r = 0;
        for (int i = 0; i < ctx.k1; ++i)
            if (mask >> i & 1) r ^= ctx.res_rows[i];
        const int wt_r = popcount(r);
        if (wt_r >= boundE && wt_r >= boundL) continue;
        const long long we = std::max<long long>(0, boundE - 1 - wt_r) / 4;
        const long long wl = std::max<long long>(0, boundL - 1 - wt_r) / 2;
        const int wmax = static_cast<int>(std::max(we, wl));
        const TwoProfile prof = two_profile(ctx, mask, wmax);
        for (int w = 0; w <= wmax; ++w) {
            if (prof.counts[w] == 0) continue;
            boundE = std::min(boundE, wt_r + 4LL * w);
            boundL = std::min(boundL, wt_r + 2LL * w);
            break;
        }
    }
    MinWeights out;
    out.min = {boundE, boundL, dH};
    // codeword count at the minimum Euclidean weight, for kissing-number reuse
    const SWE trunc = swe(code, static_cast<int>(boundE), jobs);
    Int cnt = 0;
    for (const auto& [key, coeff] : trunc.terms)
        if (key[1] + 4LL * key[2] == boundE) cnt += coeff;
    out.euclid_count = cnt;
    return out;
}

SWE swe(const Z4Code& code, std::optional<int> cap, int jobs) {
    if (!code.self_dual()) throw NotSelfDual();
    const int n = code.length();
    SWE out;
    out.n = n;
    out.truncation = cap;
    if (!cap) {
        if (n > 30) throw TooLarge("untruncated swe needs n <= 30");
        const FullProfile prof = full_profile(code, jobs);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k + j <= n; ++k)
                if (prof.at(j, k)) out.terms[{n - j - k, j, k}] = prof.at(j, k);
        return out;
    }
    const int W = *cap;
    const StructuredContext ctx = make_context(code);
    for (uint32_t mask = 0; mask < (uint32_t{1} << ctx.k1); ++mask) {
        uint64_t r = 0;
        for (int i = 0; i < ctx.k1; ++i)
            if (mask >> i & 1) r ^= ctx.res_rows[i];
        const int wt_r = popcount(r);
        if (wt_r > W) continue;
        const int wmax = (W - wt_r) / 4;
        const TwoProfile prof = two_profile(ctx, mask, wmax);
        for (int w = 0; w <= wmax; ++w) {
            if (prof.counts[w] == 0) continue;
            Int c = prof.counts[w];
            c <<= prof.mult_exp;
            out.terms[{n - wt_r - w, wt_r, w}] += c;
        }
    }
    return out;
}

MinWeights min_weights_full_enumeration(const Z4Code& code, int jobs) {
    if (!code.self_dual()) throw NotSelfDual();
    if (code.length() > 30) throw TooLarge("full enumeration needs n <= 30");
    const FullProfile prof = full_profile(code, jobs);
    const int n = prof.n;
    MinWeights out;
    long long bestE = -1, bestL = -1, bestH = -1;
    Int cntE = 0;
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k + j <= n; ++k) {
            if (j == 0 && k == 0) continue;
            const uint64_t c = prof.at(j, k);
            if (!c) continue;
            const long long e = j + 4LL * k, l = j + 2LL * k, h = j + k;
            if (bestE < 0 || e < bestE) { bestE = e; cntE = 0; }
            if (e == bestE) cntE += c;
            if (bestL < 0 || l < bestL) bestL = l;
            if (bestH < 0 || h < bestH) bestH = h;
        }
    out.min = {bestE, bestL, bestH};
    out.euclid_count = cntE;
    return out;
}

int typeI_upper_bound(int n) {
    if (n < 1) throw OutOfRange("length must be positive");
    return 8 * (n / 24) + (n % 24 == 23 ? 12 : 8);
}

int typeII_upper_bound(int n) {
    if (n < 1) throw OutOfRange("length must be positive");
    return 8 * (n / 24) + 8;
}

int improved_upper_bound(int n) {
    if (n < 25 || n > 47) throw OutOfRange("improved bound table covers 25 <= n <= 47");
    if (n == 25) return 8;
    if (n == 32 || n >= 36) return 16;
    return 12;
}

DmaxEntry dmaxE_table(int n) {
    if (n < 25 || n > 47) throw OutOfRange("dmaxE table covers 25 <= n <= 47");
    if (n == 37) return {12, 16};
    const int b = improved_upper_bound(n);
    return {b, b};
}

bool is_optimal(const Z4Code& code) {
    if (code.type() != CodeType::TypeI) throw std::invalid_argument("is_optimal needs a Type I code");
    const int n = code.length();
    if (n < 25 || n > 47 || n == 37)
        throw Undetermined("no exact dmaxE entry for n = " + std::to_string(n));
    return min_weights(code).min.euclidean == dmaxE_table(n).lo;
}

}  // namespace z4lat
