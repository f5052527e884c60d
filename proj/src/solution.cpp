#include "sakiadis/solution.hpp"

#include <limits>
#include <utility>

namespace sakiadis {

Real farfield_limit(const Real& gamma, const std::vector<Real>& gauge_coeffs, int count) {
    if (!(gamma < 0)) throw std::invalid_argument("wall gauge value must be negative");
    Real slope(0);  // g'(0) = sum n b_n (-1)^{n-1}
    for (int n = 1; n <= count; ++n) {
        const Real term = Real(n) * gauge_coeffs[static_cast<std::size_t>(n)];
        slope += (n % 2 == 0) ? -term : term;
    }
    const Real radicand = Real(-2) / gamma * slope;
    if (!(radicand > 0)) {
        throw NegativeRadicand("far-field limit radicand is not positive; too few terms?");
    }
    return sqrt(radicand);
}

Real wall_shear(const Real& gamma, const Real& c, const std::vector<Real>& gauge_coeffs,
                int count) {
    if (!(gamma < 0)) throw std::invalid_argument("wall gauge value must be negative");
    if (!(c > 0)) throw std::invalid_argument("far-field limit must be positive");
    Real curvature(0);  // g''(0) = sum n(n-1) b_n (-1)^n
    for (int n = 2; n <= count; ++n) {
        const Real term = Real(n) * Real(n - 1) * gauge_coeffs[static_cast<std::size_t>(n)];
        curvature += (n % 2 == 0) ? term : -term;
    }
    return -c / 2 + Real(2) / (gamma * c * c * c) * curvature;
}

Solution::Solution(std::vector<Real> stream_coeffs, std::vector<Real> gauge_coeffs, Real gamma,
                   Real c, Real kappa, int terms, unsigned digits)
    : stream_coeffs_(std::move(stream_coeffs)),
      gauge_coeffs_(std::move(gauge_coeffs)),
      gamma_(std::move(gamma)),
      c_(std::move(c)),
      kappa_(std::move(kappa)),
      terms_(terms),
      digits_(digits),
      radius_g_(std::numeric_limits<double>::quiet_NaN()),
      radius_f_(std::numeric_limits<double>::quiet_NaN()) {
    PrecisionGuard guard(digits_);
    constexpr int kRadiusTail = 5;
    if (terms_ >= kRadiusTail + 1) {
        radius_g_ = radius_root_test(TruncatedSeries<Real>(Real(0), stream_coeffs_), kRadiusTail);
        radius_f_ = radius_root_test(TruncatedSeries<Real>(Real(1), gauge_coeffs_), kRadiusTail);
        if (!(abs(gamma_) < radius_g_)) {
            throw Error("wall gauge value exceeds the estimated convergence radius");
        }
    }
}

Real Solution::gauge(const Real& eta) const {
    if (eta < 0) throw DomainError("eta must be nonnegative");
    PrecisionGuard guard(digits_);
    return gamma_ * exp(-c_ * eta / 2);
}

Real Solution::weighted_sum(const Real& q, int k) const {
    Real acc(0);
    if (k == 0) {
        for (int n = terms_; n >= 0; --n) {
            acc = acc * q + stream_coeffs_[static_cast<std::size_t>(n)];
        }
        return acc;
    }
    for (int n = terms_; n >= 1; --n) {
        Real w = stream_coeffs_[static_cast<std::size_t>(n)];
        for (int i = 0; i < k; ++i) w *= n;
        acc = acc * q + w;
    }
    return acc * q;
}

Real Solution::f(const Real& eta) const {
    const Real q = gauge(eta);
    PrecisionGuard guard(digits_);
    return c_ * weighted_sum(q, 0);
}

Real Solution::fp(const Real& eta) const {
    const Real q = gauge(eta);
    PrecisionGuard guard(digits_);
    return -c_ * c_ / 2 * weighted_sum(q, 1);
}

Real Solution::fpp(const Real& eta) const {
    const Real q = gauge(eta);
    PrecisionGuard guard(digits_);
    return c_ * c_ * c_ / 4 * weighted_sum(q, 2);
}

Real Solution::fppp(const Real& eta) const {
    const Real q = gauge(eta);
    PrecisionGuard guard(digits_);
    return -c_ * c_ * c_ * c_ / 8 * weighted_sum(q, 3);
}

double Solution::f(double eta) const { return f(Real(eta)).convert_to<double>(); }
double Solution::fp(double eta) const { return fp(Real(eta)).convert_to<double>(); }
double Solution::fpp(double eta) const { return fpp(Real(eta)).convert_to<double>(); }
double Solution::fppp(double eta) const { return fppp(Real(eta)).convert_to<double>(); }

Solution solve(int terms, unsigned digits) {
    if (terms < 2) throw std::invalid_argument("solution needs at least 2 terms");
    PrecisionGuard guard(digits);
    std::vector<Real> a = stream_series_coefficients<Real>(terms);
    std::vector<Real> b = gauge_series_coefficients<Real>(a, terms);
    Real gamma = wall_gauge(b, terms);
    if (!(gamma < 0)) throw Error("wall gauge value failed to come out negative");
    Real c = farfield_limit(gamma, b, terms);
    Real kappa = wall_shear(gamma, c, b, terms);
    if (!(kappa < 0)) throw Error("wall shear failed to come out negative");
    return Solution(std::move(a), std::move(b), std::move(gamma), std::move(c), std::move(kappa),
                    terms, digits);
}

}  // namespace sakiadis
