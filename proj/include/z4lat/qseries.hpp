#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "z4lat/errors.hpp"

namespace z4lat {

using Rat = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

// Truncated formal q-series with exponents in (1/4)Z. The internal exponent
// unit is the quarter-step k (exponent k/4), so integer-graded lattice thetas
// and the quarter-graded shadow share one representation. `order` bounds the
// known range: coefficients are exact for every exponent k/4 with k < order.
class QuarterSeries {
public:
    static constexpr int kDefaultOrder = 48;  // q^12

    explicit QuarterSeries(int order) : order_(order) {}
    static QuarterSeries zero(int order) { return QuarterSeries(order); }
    static QuarterSeries one(int order) {
        QuarterSeries s(order);
        s.set(0, 1);
        return s;
    }

    int order() const { return order_; }
    const std::map<int, Rat>& coeffs() const { return c_; }

    Rat coeff_q4(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }
    Rat coeff_int(int e) const { return coeff_q4(4 * e); }

    void set(int k, Rat v);
    void add(int k, const Rat& v);

    // smallest stored exponent; order() when the series is zero
    int valuation() const { return c_.empty() ? order_ : c_.begin()->first; }
    bool integer_exponents() const;
    bool is_zero() const { return c_.empty(); }

    QuarterSeries operator+(const QuarterSeries& o) const;
    QuarterSeries operator-(const QuarterSeries& o) const;
    QuarterSeries operator-() const;
    QuarterSeries operator*(const QuarterSeries& o) const;
    QuarterSeries scaled(const Rat& f) const;
    QuarterSeries pow(unsigned e) const;
    QuarterSeries truncated(int order) const;

    bool operator==(const QuarterSeries&) const = default;

private:
    int order_ = 0;
    std::map<int, Rat> c_;
};

QuarterSeries theta2(int order = QuarterSeries::kDefaultOrder);
QuarterSeries theta3(int order = QuarterSeries::kDefaultOrder);
QuarterSeries theta4(int order = QuarterSeries::kDefaultOrder);
QuarterSeries theta4_of_q2(int order = QuarterSeries::kDefaultOrder);
QuarterSeries delta8(int order = QuarterSeries::kDefaultOrder);

// theta_L = sum_j a_j theta3^{n-8j} delta8^j, solved triangularly (basis
// element j leads with q^j).
struct ThetaDecomposition {
    int n = 0;
    std::vector<Rat> a;  // a_0 .. a_{floor(n/8)}
};

ThetaDecomposition decompose(const QuarterSeries& theta_L, int n);
QuarterSeries reconstruct(const ThetaDecomposition& dec, int order = QuarterSeries::kDefaultOrder);

// theta_S = sum_j (-1)^j/16^j a_j theta2^{n-8j} theta4(q^2)^{8j}
QuarterSeries shadow(const ThetaDecomposition& dec, int order = QuarterSeries::kDefaultOrder);

struct ShadowConstraintReport {
    bool at_most_one_nonzero = true;  // for r < (mu+2)/2
    bool zero_below_quarter_mu = true;  // B_r = 0 for r < mu/4
    bool at_most_two_below_half_mu = true;  // B_r <= 2 for r < mu/2
    bool integral_nonnegative = true;
    std::vector<std::string> witnesses;
    bool all_pass() const {
        return at_most_one_nonzero && zero_below_quarter_mu && at_most_two_below_half_mu &&
               integral_nonnegative;
    }
};

ShadowConstraintReport shadow_constraints(const QuarterSeries& s, int mu);

// Dimension-41 resolution: N4 = 15170 + 128*alpha pins alpha; beta follows
// the dichotomy (zero unless alpha = 79*beta is admissible and the shadow
// carries a norm-1/4 vector).
struct Dim41Result {
    long long alpha = 0;
    long long beta = 0;
    ThetaDecomposition dec;
    QuarterSeries theta;

    Dim41Result() : theta(0) {}
};

Dim41Result dim41_analysis(const cpp_int& n4, bool shadow_has_quarter_vector,
                           int order = QuarterSeries::kDefaultOrder);

}  // namespace z4lat
