#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "z4lat/errors.hpp"
#include "z4lat/lattice.hpp"
#include "z4lat/paperdata.hpp"

using namespace z4lat;

namespace {

std::mt19937_64 rng(0x1a771ce);

Z4Code code_02() { return Z4Code(1, {Z4Vector::from_digits("2")}); }
Z4Code code_c4() {
    return Z4Code(4, {Z4Vector::from_digits("1111"), Z4Vector::from_digits("0202"),
                      Z4Vector::from_digits("0022")});
}
Z4Code octacode() {
    return Z4Code(8, {Z4Vector::from_digits("11101200"), Z4Vector::from_digits("11010120"),
                      Z4Vector::from_digits("10112010"), Z4Vector::from_digits("01112221")});
}

Z4Code random_self_dual(int max_n) {
    Z4Code acc = (rng() % 2) ? code_c4() : code_02();
    while (acc.length() + 8 <= max_n && rng() % 2) acc = direct_sum(acc, octacode());
    while (acc.length() + 4 <= max_n && rng() % 2) acc = direct_sum(acc, code_c4());
    while (acc.length() + 1 <= max_n && rng() % 3 == 0) acc = direct_sum(acc, code_02());
    std::vector<int> perm(acc.length());
    for (int i = 0; i < acc.length(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return acc.permuted(perm);
}

}  // namespace

TEST_CASE("construction_a of {0,2} is Z") {
    const LatticeBasis b = construction_a(code_02());
    REQUIRE(b.n == 1);
    CHECK(b.m == std::vector<std::vector<long long>>{{2}});
    CHECK(verify_unimodular(b) == Parity::Odd);
    const Kissing k = min_norm_and_kissing(code_02());
    CHECK(k.min_norm == 1);
    CHECK(k.count == 2);  // +-1 in Z
}

TEST_CASE("construction_a requires self-duality") {
    CHECK_THROWS_AS(static_cast<void>(construction_a(Z4Code(2, {Z4Vector::from_digits("10")}))),
                    NotSelfDual);
}

TEST_CASE("scaled basis is rejected") {
    LatticeBasis b;
    b.n = 2;
    b.m = {{4, 0}, {0, 4}};  // doubled rows of 2I
    CHECK_THROWS_AS(static_cast<void>(verify_unimodular(b)), NotUnimodular);
}

TEST_CASE("octacode gives the even 8-dimensional lattice") {
    const Z4Code oct = octacode();
    const LatticeBasis b = construction_a(oct, "octacode");
    CHECK(verify_unimodular(b) == Parity::Even);
    CHECK(gram_determinant(b) == 1);
    const Kissing k = min_norm_and_kissing(oct);
    CHECK(k.min_norm == 2);
    CHECK(k.count == 240);
    // theta coefficients 240*sigma3(m) at even norms, zero at odd norms
    const QuarterSeries theta = theta_prefix(oct, 8);
    static const long long expect[] = {240, 2160, 6720, 17520};
    for (int m = 1; m <= 4; ++m) {
        CHECK(theta.coeff_int(2 * m) == expect[m - 1]);
        CHECK(theta.coeff_int(2 * m - 1) == 0);
    }
    // direct enumeration agrees coefficient by coefficient
    const ShortVectorSet sv = enumerate_short_vectors(b, 8);
    for (int m = 1; m <= 8; ++m) {
        auto it = sv.count_by_norm.find(m);
        const Int direct = it == sv.count_by_norm.end() ? Int(0) : it->second;
        CHECK(direct == Int(theta.coeff_int(m)));
    }
}

TEST_CASE("theta prefix of {0,2} is the theta of Z") {
    const QuarterSeries t = theta_prefix(code_02(), 4);
    CHECK(t.coeff_int(0) == 1);
    CHECK(t.coeff_int(1) == 2);
    CHECK(t.coeff_int(2) == 0);
    CHECK(t.coeff_int(3) == 0);
    CHECK(t.coeff_int(4) == 2);
}

TEST_CASE("random self-dual codes: unimodularity and norm identities") {
    for (int trial = 0; trial < 12; ++trial) {
        const Z4Code c = random_self_dual(14);
        const LatticeBasis b = construction_a(c);
        CHECK(gram_determinant(b) == 1);
        static_cast<void>(verify_unimodular(b));
        const MinWeights mw = min_weights(c);
        const Kissing k = min_norm_and_kissing(c);
        CHECK(k.min_norm == std::min<long long>(4, mw.min.euclidean / 4));
        // theta coefficient at the minimum norm equals the kissing count
        const QuarterSeries theta = theta_prefix(c, k.min_norm);
        CHECK(Int(theta.coeff_int(k.min_norm)) == k.count);
        for (int m = 1; m < k.min_norm; ++m) CHECK(theta.coeff_int(m) == 0);
        // Type I direct sums give odd lattices
        if (c.type() == CodeType::TypeI) CHECK(verify_unimodular(b) == Parity::Odd);
        // direct short-vector enumeration confirms the kissing number
        const ShortVectorSet sv = enumerate_short_vectors(b, k.min_norm);
        auto it = sv.count_by_norm.find(k.min_norm);
        REQUIRE(it != sv.count_by_norm.end());
        CHECK(it->second == k.count);
        for (int m = 1; m < k.min_norm; ++m) CHECK(sv.count_by_norm.find(m) == sv.count_by_norm.end());
    }
}

TEST_CASE("lift-count DP over the zero codeword reproduces the theta of 2Z^n") {
    // reference: number of y in 2Z^n with |y|^2 = m, by direct n-fold loops
    for (int n : {1, 2, 3}) {
        for (int m = 0; m <= 20; ++m) {
            long long direct = 0;
            const int lim = 5;
            for (int a = -lim; a <= lim; ++a)
                for (int b = -lim; b <= (n >= 2 ? lim : -lim); ++b)
                    for (int c = -lim; c <= (n >= 3 ? lim : -lim); ++c) {
                        const long long nn2 = 4LL * a * a + (n >= 2 ? 4LL * b * b : 0) +
                                              (n >= 3 ? 4LL * c * c : 0);
                        if (nn2 == m) ++direct;
                    }
            CHECK(detail::lift_ways(n, 0, 0, 4 * m) == direct);
        }
    }
}

TEST_CASE("zero-codeword theta contribution inside a full lattice") {
    // over the zero codeword the lattice restricted to 4Z^n scaled by 1/2 is
    // 2Z^n, whose theta is sum over integer vectors of q^{4 |x|^2}
    const Z4Code c = direct_sum(code_02(), code_02());  // n = 2, codeword 00 present
    const QuarterSeries theta = theta_prefix(c, 8);
    // contributions with all coordinates congruent to 0: norms 4 (4 vectors
    // +-2 e_i) and 8 (4 vectors (+-2,+-2))
    const ShortVectorSet sv = enumerate_short_vectors(construction_a(c), 8);
    CHECK(Int(theta.coeff_int(4)) >= 4);
    CHECK(sv.count_by_norm.at(1) == Int(theta.coeff_int(1)));
    CHECK(sv.count_by_norm.at(4) == Int(theta.coeff_int(4)));
}

TEST_CASE("lattice membership and the standard frame") {
    const LatticeBasis b = construction_a(code_c4());
    CHECK(standard_frame_check(b));
    // 2 e_0 is in the lattice, e_0 is not
    CHECK(lattice_contains_doubled(b, {4, 0, 0, 0}));
    CHECK(!lattice_contains_doubled(b, {2, 0, 0, 0}));
    // a generator lift is in the lattice
    CHECK(lattice_contains_doubled(b, {1, 1, 1, 1}));
}

TEST_CASE("frames") {
    // Z^1: a 1-frame exists ({1} itself)
    const FrameResult f1 = find_k_frame(construction_a(code_02()), 1);
    CHECK(f1.status == FrameResult::Status::Found);
    REQUIRE(f1.frame.size() == 1);
    CHECK((f1.frame[0] == std::vector<long long>{2} || f1.frame[0] == std::vector<long long>{-2}));

    // every Construction A lattice holds a 4-frame; the search finds one fast
    const FrameResult f4 = find_k_frame(construction_a(code_c4()), 4);
    CHECK(f4.status == FrameResult::Status::Found);
    CHECK(f4.frame.size() == 4);

    // E8 is even: no vectors of norm 3 at all
    const FrameResult f3 = find_k_frame(construction_a(octacode()), 3);
    CHECK(f3.status == FrameResult::Status::None);

    // 2-frame of Z^2: the two unit vectors
    const FrameResult f2 = find_k_frame(construction_a(direct_sum(code_02(), code_02())), 1);
    CHECK(f2.status == FrameResult::Status::Found);
}

TEST_CASE("budget exhaustion reports node count") {
    const FrameResult f = find_k_frame(construction_a(octacode()), 4, 2);
    CHECK(f.status == FrameResult::Status::BudgetExhausted);
    CHECK(f.nodes >= 2);
}
