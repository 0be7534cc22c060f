#include "z4lat/qseries.hpp"

#include <algorithm>

namespace z4lat {

void QuarterSeries::set(int k, Rat v) {
    if (k >= order_) return;
    if (v == 0)
        c_.erase(k);
    else
        c_[k] = std::move(v);
}

void QuarterSeries::add(int k, const Rat& v) {
    if (k >= order_ || v == 0) return;
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

bool QuarterSeries::integer_exponents() const {
    for (const auto& [k, v] : c_)
        if (k % 4 != 0) return false;
    return true;
}

QuarterSeries QuarterSeries::operator+(const QuarterSeries& o) const {
    QuarterSeries out(std::min(order_, o.order_));
    for (const auto& [k, v] : c_) out.add(k, v);
    for (const auto& [k, v] : o.c_) out.add(k, v);
    return out;
}

QuarterSeries QuarterSeries::operator-(const QuarterSeries& o) const { return *this + (-o); }

QuarterSeries QuarterSeries::operator-() const {
    QuarterSeries out(order_);
    for (const auto& [k, v] : c_) out.c_[k] = -v;
    return out;
}

QuarterSeries QuarterSeries::operator*(const QuarterSeries& o) const {
    // the unknown tail of each factor shifts by the other's valuation
    const long long ord =
        std::min<long long>(static_cast<long long>(order_) + o.valuation(),
                            static_cast<long long>(o.order_) + valuation());
    QuarterSeries out(static_cast<int>(std::min<long long>(ord, 1 << 28)));
    for (const auto& [ka, va] : c_) {
        if (ka >= out.order()) break;
        for (const auto& [kb, vb] : o.c_) {
            if (ka + kb >= out.order()) break;
            out.add(ka + kb, va * vb);
        }
    }
    return out;
}

QuarterSeries QuarterSeries::scaled(const Rat& f) const {
    QuarterSeries out(order_);
    if (f == 0) return out;
    for (const auto& [k, v] : c_) out.c_[k] = v * f;
    return out;
}

QuarterSeries QuarterSeries::pow(unsigned e) const {
    QuarterSeries out = QuarterSeries::one(order_);
    QuarterSeries base = *this;
    while (e) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

QuarterSeries QuarterSeries::truncated(int order) const {
    QuarterSeries out(std::min(order, order_));
    for (const auto& [k, v] : c_) out.add(k, v);
    return out;
}

QuarterSeries theta2(int order) {
    QuarterSeries s(order);
    for (long long m = 1; m * m < order; m += 2) s.set(static_cast<int>(m * m), 2);
    return s;
}

QuarterSeries theta3(int order) {
    QuarterSeries s(order);
    s.set(0, 1);
    for (long long m = 1; 4 * m * m < order; ++m) s.set(static_cast<int>(4 * m * m), 2);
    return s;
}

QuarterSeries theta4(int order) {
    QuarterSeries s(order);
    s.set(0, 1);
    for (long long m = 1; 4 * m * m < order; ++m)
        s.set(static_cast<int>(4 * m * m), (m & 1) ? -2 : 2);
    return s;
}

QuarterSeries theta4_of_q2(int order) {
    QuarterSeries s(order);
    s.set(0, 1);
    for (long long m = 1; 8 * m * m < order; ++m)
        s.set(static_cast<int>(8 * m * m), (m & 1) ? -2 : 2);
    return s;
}

QuarterSeries delta8(int order) {
    QuarterSeries f(order);
    f.set(4, 1);  // q
    static constexpr long long kBinom[9] = {1, -8, 28, -56, 70, -56, 28, -8, 1};
    for (long long m = 1; 4 * (2 * m - 1) < order; ++m) {
        for (const long long e : {4 * (2 * m - 1), 16 * m}) {
            if (e >= order) continue;
            QuarterSeries factor(order);  // (1 - q^{e/4})^8
            for (int j = 0; j < 9 && j * e < order; ++j)
                factor.set(static_cast<int>(j * e), kBinom[j]);
            f = f * factor;
        }
    }
    return f;
}

ThetaDecomposition decompose(const QuarterSeries& theta_L, int n) {
    if (!theta_L.integer_exponents())
        throw std::invalid_argument("decompose needs integer exponents");
    if (theta_L.coeff_q4(0) != 1) throw std::invalid_argument("decompose needs constant term 1");
    const int J = n / 8;
    if (theta_L.order() <= 4 * J)
        throw InsufficientOrder("need coefficients through q^" + std::to_string(J));
    const int order = theta_L.order();
    const QuarterSeries t3 = theta3(order);
    const QuarterSeries d8 = delta8(order);
    ThetaDecomposition dec;
    dec.n = n;
    QuarterSeries resid = theta_L;
    for (int j = 0; j <= J; ++j) {
        const Rat aj = resid.coeff_int(j);
        dec.a.push_back(aj);
        if (aj != 0) resid = resid - (t3.pow(n - 8 * j) * d8.pow(j)).scaled(aj);
    }
    return dec;
}

QuarterSeries reconstruct(const ThetaDecomposition& dec, int order) {
    const QuarterSeries t3 = theta3(order);
    const QuarterSeries d8 = delta8(order);
    QuarterSeries out(order);
    for (size_t j = 0; j < dec.a.size(); ++j) {
        if (dec.a[j] == 0) continue;
        out = out + (t3.pow(dec.n - 8 * static_cast<int>(j)) * d8.pow(static_cast<unsigned>(j)))
                        .scaled(dec.a[j]);
    }
    return out.truncated(order);
}

QuarterSeries shadow(const ThetaDecomposition& dec, int order) {
    const QuarterSeries t2 = theta2(order);
    const QuarterSeries t4q2 = theta4_of_q2(order);
    QuarterSeries out(order);
    Rat scale = 1;
    for (size_t j = 0; j < dec.a.size(); ++j) {
        if (dec.a[j] != 0) {
            out = out +
                  (t2.pow(dec.n - 8 * static_cast<int>(j)) * t4q2.pow(8 * static_cast<unsigned>(j)))
                      .scaled(dec.a[j] * scale);
        }
        scale /= -16;
    }
    return out.truncated(order);
}

ShadowConstraintReport shadow_constraints(const QuarterSeries& s, int mu) {
    ShadowConstraintReport rep;
    int nonzero_below = 0;
    for (const auto& [k, v] : s.coeffs()) {
        const std::string label = "B_{" + std::to_string(k) + "/4} = " + v.str();
        if (boost::multiprecision::denominator(v) != 1 || v < 0) {
            rep.integral_nonnegative = false;
            rep.witnesses.push_back(label + " (not a nonnegative integer)");
        }
        if (k < 2 * (mu + 2) && v != 0) {
            if (++nonzero_below > 1) {
                rep.at_most_one_nonzero = false;
                rep.witnesses.push_back(label + " (second nonzero below (mu+2)/2)");
            }
        }
        if (k < mu && v != 0) {
            rep.zero_below_quarter_mu = false;
            rep.witnesses.push_back(label + " (nonzero below mu/4)");
        }
        if (k < 2 * mu && v > 2) {
            rep.at_most_two_below_half_mu = false;
            rep.witnesses.push_back(label + " (exceeds 2 below mu/2)");
        }
    }
    return rep;
}

Dim41Result dim41_analysis(const cpp_int& n4, bool shadow_has_quarter_vector, int order) {
    const cpp_int num = n4 - 15170;
    if (num % 128 != 0)
        throw NonIntegralAlpha("N4 - 15170 = " + num.str() + " is not divisible by 128");
    Dim41Result out;
    out.alpha = static_cast<long long>(num / 128);
    out.beta = (out.alpha != 0 && out.alpha % 79 == 0 && shadow_has_quarter_vector)
                   ? out.alpha / 79
                   : 0;
    out.dec.n = 41;
    out.dec.a = {Rat(1), Rat(-82), Rat(1476), Rat(-3280), Rat(128) * out.alpha,
                 Rat(-(int64_t{1} << 19)) * out.beta};
    out.theta = reconstruct(out.dec, order);
    return out;
}

}  // namespace z4lat
