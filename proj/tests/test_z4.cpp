#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "z4lat/errors.hpp"
#include "z4lat/weights.hpp"
#include "z4lat/z4.hpp"

using namespace z4lat;

namespace {

std::mt19937_64 rng(0xa11ce);

// Small verified self-dual building blocks for randomized suites.
Z4Code code_02() { return Z4Code(1, {Z4Vector::from_digits("2")}); }

Z4Code code_c4() {
    return Z4Code(4, {Z4Vector::from_digits("1111"), Z4Vector::from_digits("0202"),
                      Z4Vector::from_digits("0022")});
}

// Type II length-8 lift of the extended Hamming code (verified exhaustively
// in the tests below).
Z4Code octacode() {
    return Z4Code(8, {Z4Vector::from_digits("11101200"), Z4Vector::from_digits("11010120"),
                      Z4Vector::from_digits("10112010"), Z4Vector::from_digits("01112221")});
}

Z4Code random_self_dual(int max_n) {
    std::vector<Z4Code> pool;
    int n = 0;
    while (true) {
        const int pick = static_cast<int>(rng() % 3);
        const Z4Code blk = pick == 0 ? code_02() : pick == 1 ? code_c4() : octacode();
        if (n + blk.length() > max_n) break;
        n += blk.length();
        pool.push_back(blk);
        if (rng() % 3 == 0 && n >= 4) break;
    }
    if (pool.empty()) pool.push_back(code_02());
    Z4Code acc = pool.front();
    for (size_t i = 1; i < pool.size(); ++i) acc = direct_sum(acc, pool[i]);
    // random coordinate permutation
    std::vector<int> perm(acc.length());
    for (int i = 0; i < acc.length(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Z4Code shuffled = acc.permuted(perm);
    // remix generators with random row operations (span preserved)
    std::vector<Z4Vector> gens = shuffled.generators();
    for (int t = 0; t < 3 * static_cast<int>(gens.size()); ++t) {
        const size_t i = rng() % gens.size(), j = rng() % gens.size();
        if (i == j) continue;
        gens[i] = gens[i] + gens[j].times(1 + static_cast<int>(rng() % 3));
    }
    return Z4Code(shuffled.length(), gens);
}

std::set<std::string> span_words(const Z4Code& c) {
    std::set<std::string> out;
    c.for_each_codeword([&](const Z4Vector& w) { out.insert(w.to_string()); });
    return out;
}

}  // namespace

TEST_CASE("Z4Vector arithmetic against digitwise reference") {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        Z4Vector a(n), b(n);
        std::vector<int> ra(n), rb(n);
        for (int i = 0; i < n; ++i) {
            ra[i] = static_cast<int>(rng() % 4);
            rb[i] = static_cast<int>(rng() % 4);
            a.set(i, ra[i]);
            b.set(i, rb[i]);
        }
        const Z4Vector sum = a + b;
        const Z4Vector neg = -a;
        long long dot = 0;
        for (int i = 0; i < n; ++i) {
            CHECK(sum.get(i) == (ra[i] + rb[i]) % 4);
            CHECK(neg.get(i) == (4 - ra[i]) % 4);
            dot += ra[i] * rb[i];
        }
        CHECK(a.dot(b) == dot % 4);
        const int s = static_cast<int>(rng() % 4);
        const Z4Vector scaled = a.times(s);
        for (int i = 0; i < n; ++i) CHECK(scaled.get(i) == (s * ra[i]) % 4);
    }
}

TEST_CASE("standardize: order-2 single generator") {
    const StandardForm sf = standardize({Z4Vector::from_digits("2")}, 1);
    CHECK(sf.k1 == 0);
    CHECK(sf.k2 == 1);
    CHECK(sf.free_count() == 0);
}

TEST_CASE("standardize: mixed rows, span preserved") {
    const std::vector<Z4Vector> rows = {Z4Vector::from_digits("103"), Z4Vector::from_digits("022")};
    const StandardForm sf = standardize(rows, 3);
    CHECK(sf.k1 == 1);
    CHECK(sf.k2 == 1);
    // spans agree: enumerate both (<= 16 words)
    const Z4Code original(3, rows);
    std::vector<Z4Vector> std_rows = sf.upper;
    std_rows.insert(std_rows.end(), sf.lower.begin(), sf.lower.end());
    const Z4Code reduced(3, std_rows);
    CHECK(span_words(original) == span_words(reduced));
}

TEST_CASE("standardize: zero matrix and idempotence") {
    CHECK(standardize({Z4Vector(4)}, 4).k1 == 0);
    CHECK(standardize({Z4Vector(4)}, 4).k2 == 0);
    for (int trial = 0; trial < 20; ++trial) {
        const Z4Code c = random_self_dual(16);
        const auto& sf = c.standard_form();
        // reconstruct the standard-coordinate matrix and standardize again
        std::vector<Z4Vector> rows;
        for (int i = 0; i < sf.k1; ++i) rows.push_back(sf.upper_row_std(i));
        for (int j = 0; j < sf.k2; ++j) rows.push_back(sf.lower_row_std(j));
        const StandardForm again = standardize(rows, c.length());
        CHECK(again.k1 == sf.k1);
        CHECK(again.k2 == sf.k2);
    }
}

TEST_CASE("standard form blocks have the Eq-2 shape") {
    for (int trial = 0; trial < 10; ++trial) {
        const Z4Code c = random_self_dual(16);
        const auto& sf = c.standard_form();
        for (int i = 0; i < sf.k1; ++i) {
            const Z4Vector row = sf.upper_row_std(i);
            for (int j = 0; j < sf.k1; ++j) CHECK(row.get(j) == (i == j ? 1 : 0));
            for (int j = 0; j < sf.k2; ++j) CHECK(row.get(sf.k1 + j) <= 1);
        }
        for (int i = 0; i < sf.k2; ++i) {
            const Z4Vector row = sf.lower_row_std(i);
            for (int j = 0; j < sf.k1; ++j) CHECK(row.get(j) == 0);
            for (int j = 0; j < sf.k2; ++j) CHECK(row.get(sf.k1 + j) == (i == j ? 2 : 0));
            for (int f = 0; f < sf.free_count(); ++f) CHECK(row.get(sf.k1 + sf.k2 + f) % 2 == 0);
        }
    }
}

TEST_CASE("dual: trivial cases") {
    const Z4Code c02 = code_02();
    CHECK(c02.dual().same_span(c02));  // {0,2} is self-dual
    const Z4Code all(1, {Z4Vector::from_digits("1")});
    const Z4Code trivial = all.dual();
    CHECK(trivial.log2_size() == 0);
    const Z4Code back = trivial.dual();
    CHECK(back.same_span(all));
}

TEST_CASE("dual involution on random small codes") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<Z4Vector> gens;
        const int g = 1 + static_cast<int>(rng() % n);
        for (int i = 0; i < g; ++i) {
            Z4Vector v(n);
            for (int t = 0; t < n; ++t) v.set(t, static_cast<int>(rng() % 4));
            gens.push_back(v);
        }
        const Z4Code c(n, gens);
        const Z4Code dd = c.dual().dual();
        CHECK(dd.same_span(c));
        // size identity |C| * |C-dual| = 4^n
        CHECK(c.log2_size() + c.dual().log2_size() == 2 * n);
    }
}

TEST_CASE("complete_from_upper: smallest torsion-only case") {
    const Z4Code c = complete_from_upper(2, {});
    CHECK(c.self_dual());
    CHECK(span_words(c) == std::set<std::string>{"00", "02", "20", "22"});
}

TEST_CASE("complete_from_upper rejects non-orthogonal rows") {
    // single row (1 1 0): self inner product 2 mod 4
    CHECK_THROWS_AS(complete_from_upper(3, {Z4Vector::from_digits("10")}), NonOrthogonalUpper);
    CHECK_THROWS_AS(complete_from_upper(3, {Z4Vector::from_digits("1"), Z4Vector::from_digits("3")}),
                    ShapeError);  // 2 k1 > n
}

TEST_CASE("self-duality and type classification") {
    CHECK(code_02().self_dual());
    CHECK(code_02().type() == CodeType::TypeI);  // ew(2) = 4
    CHECK(code_c4().self_dual());
    CHECK(code_c4().type() == CodeType::TypeI);
    CHECK(octacode().self_dual());
    CHECK(octacode().type() == CodeType::TypeII);
    CHECK(Z4Code(2, {Z4Vector::from_digits("10")}).type() == CodeType::NotSelfDual);
}

TEST_CASE("Type II generator criterion equals exhaustive scan (n <= 16)") {
    for (int trial = 0; trial < 12; ++trial) {
        const Z4Code c = random_self_dual(16);
        bool all_mod8 = true;
        c.for_each_codeword([&](const Z4Vector& w) {
            const auto wt = weights(w);
            if (wt.euclidean % 8 != 0) all_mod8 = false;
        });
        CHECK((c.type() == CodeType::TypeII) == all_mod8);
        if (c.type() == CodeType::TypeII) CHECK(c.length() % 8 == 0);
    }
    // direct sums covering length 12 can never be Type II
    const Z4Code len12 = direct_sum(octacode(), code_c4());
    CHECK(len12.length() == 12);
    CHECK(len12.type() == CodeType::TypeI);
}

TEST_CASE("every self-dual codeword has Euclidean weight divisible by 4") {
    for (int trial = 0; trial < 10; ++trial) {
        const Z4Code c = random_self_dual(16);
        c.for_each_codeword([&](const Z4Vector& w) { CHECK(weights(w).euclidean % 4 == 0); });
    }
}

TEST_CASE("residue and torsion") {
    const Z4Code c02 = code_02();
    CHECK(c02.residue().dim() == 0);
    CHECK(c02.torsion().same_span(BinaryCode::full(1)));
    for (int trial = 0; trial < 15; ++trial) {
        const Z4Code c = random_self_dual(16);
        CHECK(c.residue().is_doubly_even());
        CHECK(c.torsion().same_span(c.residue().dual()));
        CHECK(2 * c.standard_form().k1 + c.standard_form().k2 == c.length());
    }
}

TEST_CASE("membership") {
    const Z4Code c = code_c4();
    c.for_each_codeword([&](const Z4Vector& w) { CHECK(c.contains(w)); });
    CHECK(!c.contains(Z4Vector::from_digits("1000")));
}

TEST_CASE("shorten_sub") {
    // sub({0,2} + {0,2}) at the first coordinate is {0,2}
    const Z4Code two = direct_sum(code_02(), code_02());
    const Z4Code sub = two.shorten_sub(0);
    CHECK(sub.length() == 1);
    CHECK(sub.same_span(code_02()));
    for (int trial = 0; trial < 10; ++trial) {
        const Z4Code c = random_self_dual(12);
        if (c.length() < 2) continue;
        const int coord = static_cast<int>(rng() % c.length());
        const Z4Code s = c.shorten_sub(coord);
        CHECK(s.length() == c.length() - 1);
        CHECK(s.self_dual());
        // brute-force reference
        std::set<std::string> expect;
        c.for_each_codeword([&](const Z4Vector& w) {
            if (w.get(coord) % 2 == 0) expect.insert(w.erased(coord).to_string());
        });
        CHECK(span_words(s) == expect);
    }
}

TEST_CASE("direct_sum spans the product") {
    const Z4Code s = direct_sum(code_02(), code_c4());
    CHECK(s.length() == 5);
    CHECK(s.self_dual());
    CHECK(s.log2_size() == code_02().log2_size() + code_c4().log2_size());
}

TEST_CASE("codeword iteration is lexicographic and complete") {
    const Z4Code c = code_c4();
    std::vector<std::string> seen;
    c.for_each_codeword([&](const Z4Vector& w) { seen.push_back(w.to_string()); });
    CHECK(seen.size() == size_t{1} << c.log2_size());
    CHECK(seen.front() == "0000");
    std::set<std::string> uniq(seen.begin(), seen.end());
    CHECK(uniq.size() == seen.size());
}
