#pragma once

#include <vector>

#include "sakiadis/errors.hpp"
#include "sakiadis/scalar.hpp"
#include "sakiadis/series.hpp"

namespace sakiadis {

/// Coefficients A_0..A_count of the stream-function series
/// f/C = sum A_n q^n in the gauge q = gamma * exp(-C eta / 2):
///   A_0 = A_1 = 1,  A_{n+1} = 1/(n (n+1)^2) * sum_{j=1..n} j^2 A_j A_{n-j+1}.
/// Every A_n is a positive rational; in exact mode the values are exact.
template <class T>
std::vector<T> stream_series_coefficients(int count) {
    if (count < 1) throw std::invalid_argument("need at least A_0..A_1");
    std::vector<T> a{T(1), T(1)};
    a.reserve(static_cast<std::size_t>(count) + 1);
    for (int n = 1; n < count; ++n) {
        T sum(0);
        for (int j = 1; j <= n; ++j) {
            sum += T(j * j) * a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j + 1)];
        }
        a.push_back(sum / (T(n) * T(n + 1) * T(n + 1)));
    }
    return a;
}

/// Coefficients b_1..b_count of the inverse series g = sum b_n (F - 1)^n,
/// obtained by reverting F = sum A_n g^n. Slot 0 of the result is unused
/// (kept zero) so that index n holds b_n.
template <class T>
std::vector<T> gauge_series_coefficients(const std::vector<T>& stream_coeffs, int count) {
    TruncatedSeries<T> f_series(T(0), stream_coeffs);
    TruncatedSeries<T> inverse = revert(f_series, count);
    // inverse.coeffs = [0, b_1, ..., b_count]
    return inverse.coeffs;
}

/// gamma = g at the wall = sum_{n=1..count} b_n (-1)^n, the unique real root
/// of F(g) = 0. Negative for this problem.
template <class T>
T wall_gauge(const std::vector<T>& gauge_coeffs, int count) {
    T sum(0);
    for (int n = 1; n <= count; ++n) {
        const T& bn = gauge_coeffs[static_cast<std::size_t>(n)];
        sum += (n % 2 == 0) ? bn : -bn;
    }
    return sum;
}

/// C = [(-2/gamma) sum n b_n (-1)^{n-1}]^{1/2}, the far-field limit of f.
/// The positive root is taken; a negative radicand signals truncation too
/// coarse to be consistent.
Real farfield_limit(const Real& gamma, const std::vector<Real>& gauge_coeffs, int count);

/// kappa = f''(0) = -C/2 + 2/(gamma C^3) * sum n(n-1) b_n (-1)^n.
Real wall_shear(const Real& gamma, const Real& c, const std::vector<Real>& gauge_coeffs,
                int count);

/// Immutable bundle of everything needed to evaluate the closed-form
/// solution: both coefficient families, the three constants, and the
/// root-test radius diagnostics (NaN when too few terms to estimate).
class Solution {
public:
    Solution(std::vector<Real> stream_coeffs, std::vector<Real> gauge_coeffs, Real gamma, Real c,
             Real kappa, int terms, unsigned digits);

    const std::vector<Real>& stream_coeffs() const { return stream_coeffs_; }
    const std::vector<Real>& gauge_coeffs() const { return gauge_coeffs_; }
    const Real& gamma() const { return gamma_; }
    const Real& C() const { return c_; }
    const Real& kappa() const { return kappa_; }
    int terms() const { return terms_; }
    unsigned digits() const { return digits_; }
    const Real& radius_g() const { return radius_g_; }
    const Real& radius_f() const { return radius_f_; }

    /// Gauge value q(eta) = gamma * exp(-C eta / 2); eta must be >= 0.
    Real gauge(const Real& eta) const;

    Real f(const Real& eta) const;
    Real fp(const Real& eta) const;
    Real fpp(const Real& eta) const;
    Real fppp(const Real& eta) const;

    double f(double eta) const;
    double fp(double eta) const;
    double fpp(double eta) const;
    double fppp(double eta) const;

private:
    // sum n^k A_n q^n via Horner; the chain rule on the exponential gauge
    // turns eta-derivatives into these coefficient-scaled sums.
    Real weighted_sum(const Real& q, int k) const;

    std::vector<Real> stream_coeffs_;
    std::vector<Real> gauge_coeffs_;
    Real gamma_;
    Real c_;
    Real kappa_;
    int terms_;
    unsigned digits_;
    Real radius_g_;
    Real radius_f_;
};

/// Computes the full solution bundle at the requested truncation and
/// precision. terms >= 2. The working precision is switched to `digits`
/// for the duration of the call.
Solution solve(int terms, unsigned digits);

}  // namespace sakiadis
