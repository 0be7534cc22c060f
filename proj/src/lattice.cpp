#include "z4lat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#include "z4lat/errors.hpp"

namespace z4lat {

namespace {

using IntMat = std::vector<std::vector<Int>>;
using RatVec = std::vector<Rat>;

IntMat gram4(const LatticeBasis& b) {
    const int n = b.n;
    IntMat g(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long acc = 0;
            for (int t = 0; t < n; ++t) acc += b.m[i][t] * b.m[j][t];
            g[i][j] = g[j][i] = acc;
        }
    return g;
}

// Bareiss fraction-free determinant.
Int bareiss_det(IntMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

LatticeBasis construction_a(const Z4Code& code, std::string provenance) {
    if (!code.self_dual()) throw NotSelfDual();
    const auto& sf = code.standard_form();
    const int n = code.length();
    LatticeBasis b;
    b.n = n;
    b.provenance = std::move(provenance);
    for (const auto& u : sf.upper) {
        std::vector<long long> row(n);
        for (int t = 0; t < n; ++t) row[t] = u.get(t);
        b.m.push_back(std::move(row));
    }
    for (const auto& l : sf.lower) {
        std::vector<long long> row(n);
        for (int t = 0; t < n; ++t) row[t] = l.get(t);
        b.m.push_back(std::move(row));
    }
    for (int f : sf.free_cols) {
        std::vector<long long> row(n, 0);
        row[f] = 4;
        b.m.push_back(std::move(row));
    }
    return b;
}

std::vector<std::vector<Int>> gram(const LatticeBasis& basis) {
    IntMat g4 = gram4(basis);
    for (auto& row : g4)
        for (auto& e : row) {
            if (e % 4 != 0)
                throw NotUnimodular("Gram entry " + e.str() + "/4 is not integral");
            e /= 4;
        }
    return g4;
}

Int gram_determinant(const LatticeBasis& basis) { return bareiss_det(gram(basis)); }

Parity verify_unimodular(const LatticeBasis& basis) {
    const auto g = gram(basis);
    const Int det = bareiss_det(g);
    if (det != 1 && det != -1)
        throw NotUnimodular("Gram determinant is " + det.str());
    for (int i = 0; i < basis.n; ++i)
        if (g[i][i] % 2 != 0) return Parity::Odd;
    return Parity::Even;
}

namespace detail {

// Coordinates congruent to 0 admit squares {0,16,...}, to 2 admit {4,36,...}
// twice each, odd ones admit {1,9,25,...} once each.
Int lift_ways(int n0, int npm, int n2, int budget) {
    const int B = budget;
    auto mul = [B](const std::vector<Int>& f, const std::vector<Int>& g) {
        std::vector<Int> out(B + 1);
        for (int i = 0; i <= B; ++i) {
            if (f[i] == 0) continue;
            for (int j = 0; i + j <= B; ++j)
                if (g[j] != 0) out[i + j] += f[i] * g[j];
        }
        return out;
    };
    auto pw = [&](std::vector<Int> base, int e) {
        std::vector<Int> out(B + 1);
        out[0] = 1;
        while (e) {
            if (e & 1) out = mul(out, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return out;
    };
    std::vector<Int> f0(B + 1), f1(B + 1), f2(B + 1);
    for (long long t = 0; 16 * t * t <= B; ++t) f0[static_cast<size_t>(16 * t * t)] = t == 0 ? 1 : 2;
    for (long long x = 1; x * x <= B; x += 2) f1[static_cast<size_t>(x * x)] = 1;
    for (long long x = 2; x * x <= B; x += 4) f2[static_cast<size_t>(x * x)] = 2;
    const auto a = pw(f0, n0), bb = pw(f1, npm), c = pw(f2, n2);
    Int total = 0;
    for (int i = 0; i <= B; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= B; ++j) {
            if (bb[j] == 0) continue;
            total += a[i] * bb[j] * c[B - i - j];
        }
    }
    return total;
}

}  // namespace detail

Kissing min_norm_and_kissing(const Z4Code& code, int jobs) {
    if (!code.self_dual()) throw NotSelfDual();
    const MinWeights mw = min_weights(code, jobs);
    const int mu = static_cast<int>(std::min<long long>(4, mw.min.euclidean / 4));
    const int budget = 4 * mu;
    const SWE trunc = swe(code, budget, jobs);
    Kissing out;
    out.min_norm = mu;
    out.count = 0;
    for (const auto& [key, coeff] : trunc.terms) {
        const Int ways = detail::lift_ways(key[0], key[1], key[2], budget);
        if (ways != 0) out.count += coeff * ways;
    }
    return out;
}

QuarterSeries theta_prefix(const Z4Code& code, int max_norm, int jobs) {
    if (max_norm < 1) throw std::invalid_argument("max_norm must be >= 1");
    const int order = 4 * max_norm + 1;
    const SWE trunc = swe(code, 4 * max_norm, jobs);
    // one-dimensional residue-class thetas, exponents in quarter-steps x^2
    QuarterSeries t0(order), t1(order), t2(order);
    t0.set(0, 1);
    for (long long x = 4; x * x < order; x += 4) t0.set(static_cast<int>(x * x), 2);
    for (long long x = 1; x * x < order; x += 2) t1.set(static_cast<int>(x * x), 1);
    for (long long x = 2; x * x < order; x += 4) t2.set(static_cast<int>(x * x), 2);
    QuarterSeries out(order);
    for (const auto& [key, coeff] : trunc.terms) {
        const auto term = t0.pow(key[0]) * t1.pow(key[1]) * t2.pow(key[2]);
        out = out + term.truncated(order).scaled(Rat(coeff));
    }
    return out.truncated(order);
}

// ---------------------------------------------------------------------------
// Exact LLL + Schnorr-Euchner enumeration on the doubled basis.
// ---------------------------------------------------------------------------

namespace {

struct GSO {
    int n = 0;
    std::vector<RatVec> mu;  // mu[i][j], j < i
    RatVec B;                // squared GSO norms (doubled metric)
};

GSO compute_gso(const IntMat& g) {
    const int n = static_cast<int>(g.size());
    GSO s;
    s.n = n;
    s.mu.assign(n, RatVec(n, 0));
    s.B.assign(n, 0);
    std::vector<RatVec> r(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat acc = Rat(g[i][j]);
            for (int t = 0; t < j; ++t) acc -= s.mu[i][t] * r[j][t];
            r[i][j] = acc;
            if (j < i) s.mu[i][j] = acc / s.B[j];
        }
        s.B[i] = r[i][i];
    }
    return s;
}

Int round_nearest(const Rat& m) {
    Int q = boost::multiprecision::numerator(m) / boost::multiprecision::denominator(m);
    const Rat frac = m - Rat(q);
    if (frac > Rat(1, 2)) ++q;
    if (frac < Rat(-1, 2)) --q;
    return q;
}

// Gram-based LLL (delta = 99/100) over exact rationals; transforms the basis
// rows and the Gram matrix in place. Dimensions here stay <= 64, so the
// recompute-on-swap GSO is affordable.
void lll_reduce(std::vector<std::vector<long long>>& basis, IntMat& g) {
    const int n = static_cast<int>(g.size());
    if (n <= 1) return;
    const Rat delta(99, 100);
    GSO s = compute_gso(g);
    auto row_op = [&](int i, const Int& q, int j) {
        if (q == 0) return;
        const long long ql = static_cast<long long>(q);
        for (int t = 0; t < n; ++t) basis[i][t] -= ql * basis[j][t];
        std::vector<Int> row(n);
        for (int t = 0; t < n; ++t) row[t] = g[i][t] - q * g[j][t];
        row[i] = g[i][i] - 2 * q * g[i][j] + q * q * g[j][j];
        for (int t = 0; t < n; ++t) {
            g[i][t] = row[t];
            g[t][i] = row[t];
        }
    };
    auto size_reduce = [&](int i, int j) {
        const Int q = round_nearest(s.mu[i][j]);
        if (q == 0) return;
        row_op(i, q, j);
        for (int t = 0; t < j; ++t) s.mu[i][t] -= Rat(q) * s.mu[j][t];
        s.mu[i][j] -= Rat(q);
    };
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) size_reduce(k, j);
        if (s.B[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.B[k - 1]) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            std::swap(g[k], g[k - 1]);
            for (int t = 0; t < n; ++t) std::swap(g[t][k], g[t][k - 1]);
            s = compute_gso(g);
            k = std::max(1, k - 1);
        }
    }
}

}  // namespace

ShortVectorSet enumerate_short_vectors(const LatticeBasis& basis, int max_norm,
                                       bool keep_vectors) {
    ShortVectorSet out;
    out.max_norm = max_norm;
    const int n = basis.n;
    if (n == 0) return out;
    auto rows = basis.m;
    IntMat g = gram4(basis);
    lll_reduce(rows, g);
    const GSO s = compute_gso(g);
    const Rat bound = 4 * max_norm;  // doubled metric

    // Schnorr-Euchner walk, exact rationals; only the canonical half-space is
    // visited (highest nonzero coefficient positive), each hit counts 2.
    std::vector<long long> x(n, 0);
    std::vector<Rat> center(n, 0);
    std::vector<Rat> partial(n + 1, 0);
    std::vector<char> zero_above(n + 1, 1);  // zero_above[l]: x[t]==0 for all t>l

    auto first_x = [&](int lvl) -> long long {
        if (zero_above[lvl]) return 0;  // center is 0; symmetric interval halved
        const Rat budget = bound - partial[lvl + 1];
        const Rat rad2 = budget / s.B[lvl];
        const double c_apx = boost::multiprecision::numerator(center[lvl]).convert_to<double>() /
                             boost::multiprecision::denominator(center[lvl]).convert_to<double>();
        const double r_apx = std::sqrt(std::max(0.0, rad2.convert_to<double>()));
        long long x0 = static_cast<long long>(std::ceil(c_apx - r_apx)) - 2;
        // exact adjust: smallest x0 with (center - x0)^2 <= rad2 or x0 >= center
        auto ok = [&](long long v) {
            const Rat d = center[lvl] - v;
            return d <= 0 || d * d <= rad2;
        };
        while (!ok(x0)) ++x0;
        return x0;
    };

    int level = n - 1;
    x[level] = first_x(level) - 1;
    while (level < n) {
        ++x[level];
        const Rat d = Rat(x[level]) - center[level];
        const Rat cost = partial[level + 1] + d * d * s.B[level];
        if (cost > bound) {
            ++level;
            continue;
        }
        if (level == 0) {
            bool zero = zero_above[0] && x[0] == 0;
            if (!zero) {
                assert(boost::multiprecision::denominator(cost) == 1);
                const Int norm4 = boost::multiprecision::numerator(cost);
                assert(norm4 % 4 == 0);
                const int nrm = static_cast<int>(norm4 / 4);
                out.count_by_norm[nrm] += 2;
                if (keep_vectors) {
                    std::vector<long long> w(n, 0);
                    for (int i = 0; i < n; ++i) {
                        if (!x[i]) continue;
                        for (int t = 0; t < n; ++t) w[t] += x[i] * rows[i][t];
                    }
                    out.vectors_doubled.push_back(std::move(w));
                    out.vector_norms.push_back(nrm);
                }
            }
            continue;
        }
        partial[level] = cost;
        zero_above[level - 1] = zero_above[level] && x[level] == 0;
        --level;
        Rat c = 0;
        for (int t = level + 1; t < n; ++t)
            if (x[t]) c += s.mu[t][level] * x[t];
        center[level] = -c;
        x[level] = first_x(level) - 1;
    }
    return out;
}

bool lattice_contains_doubled(const LatticeBasis& basis, const std::vector<long long>& doubled) {
    const int n = basis.n;
    // solve y * M = doubled over the rationals, then check integrality
    std::vector<RatVec> a(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[j][i] = Rat(basis.m[i][j]);
        a[i][n] = Rat(doubled[i]);
    }
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const Rat inv = a[rank][c];
        for (auto& e : a[rank]) e /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (int j = c; j <= n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    if (rank < n) return false;
    for (int i = 0; i < n; ++i)
        if (boost::multiprecision::denominator(a[i][n]) != 1) return false;
    return true;
}

bool standard_frame_check(const LatticeBasis& basis) {
    for (int i = 0; i < basis.n; ++i) {
        std::vector<long long> w(basis.n, 0);
        w[i] = 4;  // doubled form of 2 e_i
        if (!lattice_contains_doubled(basis, w)) return false;
    }
    return true;
}

unsigned long long default_frame_budget() {
    if (const char* env = std::getenv("Z4LAT_FRAME_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000ULL;
}

namespace {

// A k-frame of n vectors forms a matrix F with F F^T = k I, hence also
// F^T F = k I: every coordinate carries a squared-entry budget of k (4k in
// doubled units). The search branches exact-cover style on the open
// coordinate with the tightest remaining mass margin; pairwise orthogonality
// is the candidate compatibility relation. Candidate squared entries are
// grouped by value so per-coordinate masses come from popcounts.
struct FrameSearch {
    int n = 0, words = 0;
    unsigned long long budget = 0, nodes = 0;
    bool exhausted = false;
    std::vector<std::vector<uint64_t>> adj;
    std::vector<int> sq_values;                         // distinct squared entries
    std::vector<uint64_t> cover;                        // [(cls*n + coord)*words + w]
    std::vector<std::vector<std::pair<int, int>>> support;  // per candidate: (coord, sq)
    std::vector<long long> col_budget;
    std::vector<int> chosen;
    std::vector<std::vector<uint64_t>> depth_buf;       // preallocated allowed sets

    const uint64_t* cover_row(size_t cls, int t) const {
        return cover.data() + (cls * n + t) * words;
    }

    bool fits(int v) const {
        for (const auto& [t, s] : support[v])
            if (s > col_budget[t]) return false;
        return true;
    }

    bool dfs(int depth) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (depth == n) return true;
        const std::vector<uint64_t>& allowed = depth_buf[depth];
        int remaining = 0;
        for (int w = 0; w < words; ++w) remaining += popcount(allowed[w]);
        if (depth + remaining < n) return false;
        // feasibility + tightest-margin coordinate in one pass
        int best_t = -1;
        long long best_margin = 1LL << 60;
        for (int t = 0; t < n; ++t) {
            if (col_budget[t] == 0) continue;
            long long mass = 0;
            for (size_t cls = 0; cls < sq_values.size(); ++cls) {
                const uint64_t* row = cover_row(cls, t);
                int c = 0;
                for (int w = 0; w < words; ++w) c += popcount(allowed[w] & row[w]);
                mass += static_cast<long long>(sq_values[cls]) * c;
            }
            const long long margin = mass - col_budget[t];
            if (margin < 0) return false;  // coordinate can no longer be filled
            if (margin < best_margin) {
                best_margin = margin;
                best_t = t;
                if (margin == 0) break;  // nothing is tighter
            }
        }
        if (best_t < 0) return false;  // budgets spent but depth < n
        // consumed in place; the parent rewrites this buffer before its next call
        std::vector<uint64_t>& live = depth_buf[depth];
        bool found = false;
        for (size_t cls = 0; cls < sq_values.size() && !found; ++cls) {
            const uint64_t* crow = cover_row(cls, best_t);
            for (int w = 0; w < words && !found; ++w) {
                uint64_t bits = live[w] & crow[w];
                while (bits) {
                    const int v = (w << 6) + ctz(bits);
                    bits &= bits - 1;
                    live[w] &= ~(uint64_t{1} << (v & 63));  // consumed either way
                    if (!fits(v)) continue;
                    for (const auto& [t, s] : support[v]) col_budget[t] -= s;
                    auto& next = depth_buf[depth + 1];
                    for (int u = 0; u < words; ++u) next[u] = live[u] & adj[v][u];
                    chosen.push_back(v);
                    if (dfs(depth + 1)) {
                        found = true;
                        break;
                    }
                    chosen.pop_back();
                    for (const auto& [t, s] : support[v]) col_budget[t] += s;
                    if (exhausted) break;
                }
                if (exhausted) break;
            }
            if (exhausted) break;
        }
        return found;
    }
};

}  // namespace

FrameResult find_k_frame(const LatticeBasis& basis, int k, unsigned long long node_budget) {
    FrameResult out;
    const ShortVectorSet sv = enumerate_short_vectors(basis, k, true);
    std::vector<std::vector<long long>> cand;
    for (size_t i = 0; i < sv.vectors_doubled.size(); ++i)
        if (sv.vector_norms[i] == k) cand.push_back(sv.vectors_doubled[i]);
    const int n = basis.n;
    if (static_cast<int>(cand.size()) < n) {
        out.status = FrameResult::Status::None;
        return out;
    }
    // order by support size, then lexicographically
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (auto v : a) sa += v != 0;
        for (auto v : b) sb += v != 0;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    const int m = static_cast<int>(cand.size());
    const int words = (m + 63) / 64;
    FrameSearch fs;
    fs.n = n;
    fs.words = words;
    fs.budget = node_budget;
    fs.adj.assign(m, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            long long dot = 0;
            for (int t = 0; t < n; ++t) dot += cand[i][t] * cand[j][t];
            if (dot == 0) {
                fs.adj[i][j >> 6] |= uint64_t{1} << (j & 63);
                fs.adj[j][i >> 6] |= uint64_t{1} << (i & 63);
            }
        }
    fs.support.resize(m);
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < n; ++t)
            if (cand[i][t]) {
                const int s = static_cast<int>(cand[i][t] * cand[i][t]);
                fs.support[i].emplace_back(t, s);
                if (std::find(fs.sq_values.begin(), fs.sq_values.end(), s) == fs.sq_values.end())
                    fs.sq_values.push_back(s);
            }
    std::sort(fs.sq_values.rbegin(), fs.sq_values.rend());  // heavier entries branch first
    fs.cover.assign(fs.sq_values.size() * n * words, 0);
    for (int i = 0; i < m; ++i)
        for (const auto& [t, s] : fs.support[i]) {
            const size_t cls = std::find(fs.sq_values.begin(), fs.sq_values.end(), s) -
                               fs.sq_values.begin();
            fs.cover[(cls * n + t) * words + (i >> 6)] |= uint64_t{1} << (i & 63);
        }
    fs.col_budget.assign(n, 4LL * k);
    fs.depth_buf.assign(n + 1, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < m; ++i) fs.depth_buf[0][i >> 6] |= uint64_t{1} << (i & 63);
    const bool found = fs.dfs(0);
    out.nodes = fs.nodes;
    if (found) {
        out.status = FrameResult::Status::Found;
        for (int idx : fs.chosen) out.frame.push_back(cand[idx]);
    } else if (fs.exhausted) {
        out.status = FrameResult::Status::BudgetExhausted;
    } else {
        out.status = FrameResult::Status::None;
    }
    return out;
}

}  // namespace z4lat
