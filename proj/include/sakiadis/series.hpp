#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sakiadis/errors.hpp"
#include "sakiadis/scalar.hpp"

namespace sakiadis {

namespace detail {

template <class T>
unsigned precision_tag() {
    return 0;  // exact arithmetic
}

template <>
inline unsigned precision_tag<Real>() {
    return working_digits();
}

template <class T>
T int_pow(const T& base, int exponent) {
    T acc(1);
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace detail

/// Power series truncated at order N = coeffs.size() - 1; coeffs[n]
/// multiplies (x - center)^n. Immutable by convention: operations return
/// fresh series. precision_digits records the working precision the
/// coefficients were produced under (0 for exact rational mode).
template <class T>
struct TruncatedSeries {
    T center{};
    std::vector<T> coeffs;
    unsigned precision_digits = 0;

    TruncatedSeries() = default;
    TruncatedSeries(T c, std::vector<T> a)
        : center(std::move(c)),
          coeffs(std::move(a)),
          precision_digits(detail::precision_tag<T>()) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

// One column of the inverse-power table: coefficients D[0..rows] of
// (sum_j a_{j+1} x^j)^{-m}, where shifted[j] = a_{j+1}. Rows within a
// column depend only on earlier rows of the same column:
//   D[0] = a1^{-m}
//   D[n] = -1/(n a1) * sum_{j=1..n} (j m + n - j) a_{j+1} D[n-j]
// Coefficients beyond the stored truncation are treated as zero.
template <class T>
std::vector<T> inverse_power_column(const std::vector<T>& shifted, int m, int rows) {
    const T& a1 = shifted.front();
    std::vector<T> col;
    col.reserve(static_cast<std::size_t>(rows) + 1);
    col.push_back(T(1) / int_pow(a1, m));
    for (int n = 1; n <= rows; ++n) {
        T sum(0);
        const int j_max = std::min<int>(n, static_cast<int>(shifted.size()) - 1);
        for (int j = 1; j <= j_max; ++j) {
            sum += T(j * m + n - j) * shifted[static_cast<std::size_t>(j)] *
                   col[static_cast<std::size_t>(n - j)];
        }
        col.push_back(-sum / (T(n) * a1));
    }
    return col;
}

template <class T>
void require_leading(const std::vector<T>& shifted) {
    if (shifted.empty() || shifted.front() == 0) {
        throw ZeroLeadingCoefficient("linear coefficient a1 must be nonzero");
    }
}

}  // namespace detail

/// Triangular table of inverse-power coefficients built from a full series
/// a0 + a1 x + ...: column m holds D[0..m-1] of (a1 + a2 x + ...)^{-m}.
/// Each column is filled from row 0 upward, so the diagonal entry
/// D_{n, n+1} needed for reversion is always backed by the earlier rows of
/// its own column rather than by a naive diagonal walk.
template <class T>
class ReversionTable {
public:
    ReversionTable(const TruncatedSeries<T>& source, int order) : source_(source) {
        if (order < 1) throw std::invalid_argument("reversion table needs order >= 1");
        std::vector<T> shifted(source.coeffs.begin() + 1, source.coeffs.end());
        detail::require_leading(shifted);
        columns_.reserve(static_cast<std::size_t>(order) + 1);
        for (int m = 1; m <= order + 1; ++m) {
            columns_.push_back(detail::inverse_power_column(shifted, m, m - 1));
        }
    }

    /// D_{n,m}; stored for 0 <= n < m <= order + 1.
    const T& at(int n, int m) const {
        return columns_.at(static_cast<std::size_t>(m) - 1).at(static_cast<std::size_t>(n));
    }

    /// Diagonal entry D_{n, n+1} feeding the (n+1)-th reversion coefficient.
    const T& diagonal(int n) const { return at(n, n + 1); }

    const TruncatedSeries<T>& source() const { return source_; }

private:
    TruncatedSeries<T> source_;
    std::vector<std::vector<T>> columns_;
};

/// Coefficients D_{0..order} of s^{-m}, where s is read as
/// a1 + a2 x + a3 x^2 + ... (i.e. s.coeffs[j] = a_{j+1}).
template <class T>
TruncatedSeries<T> power_neg(const TruncatedSeries<T>& s, int m, int order) {
    if (m < 1) throw std::invalid_argument("power_neg needs m >= 1");
    if (order < 0) throw std::invalid_argument("power_neg needs order >= 0");
    detail::require_leading(s.coeffs);
    return TruncatedSeries<T>(s.center, detail::inverse_power_column(s.coeffs, m, order));
}

/// Compositional inverse of y = a0 + a1 x + ... about y = a0:
///   x = c + b1 (y - a0) + b2 (y - a0)^2 + ...
/// where c is the center of the input. Returned series has center a0 and
/// coefficients [c, b1, ..., b_order] with b1 = 1/a1 and
/// b_{n+1} = D_{n, n+1} / (n + 1).
template <class T>
TruncatedSeries<T> revert(const TruncatedSeries<T>& a, int order) {
    if (order < 1) throw std::invalid_argument("revert needs order >= 1");
    if (a.coeffs.size() < 2 || a.coeffs[1] == 0) {
        throw ZeroLeadingCoefficient("series with a1 = 0 has no power-series inverse");
    }
    ReversionTable<T> table(a, order);
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    out.push_back(a.center);
    out.push_back(T(1) / a.coeffs[1]);
    for (int n = 1; n < order; ++n) {
        out.push_back(table.diagonal(n) / T(n + 1));
    }
    return TruncatedSeries<T>(a.coeffs[0], std::move(out));
}

/// Horner evaluation of the truncated series at x.
template <class T>
T eval(const TruncatedSeries<T>& s, const T& x) {
    const T u = x - s.center;
    T acc = s.coeffs.back();
    for (auto it = s.coeffs.rbegin() + 1; it != s.coeffs.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

/// First or second derivative of the truncated series at x.
template <class T>
T eval_derivative(const TruncatedSeries<T>& s, const T& x, int k) {
    if (k < 1 || k > 2) throw UnsupportedOrder("derivative order must be 1 or 2");
    const int n_max = s.order();
    if (n_max < k) return T(0);
    const T u = x - s.center;
    T acc(0);
    for (int n = n_max; n >= k; --n) {
        T w = T(n) * s.coeffs[static_cast<std::size_t>(n)];
        if (k == 2) w *= T(n - 1);
        acc = acc * u + w;
    }
    return acc;
}

/// Root-test radius estimate: the mean of |c_n|^{-1/n} over the last `tail`
/// indices with nonzero coefficients (constant term excluded). A
/// diagnostic, not a guarantee; slowly varying prefactors bias it at low n.
inline Real radius_root_test(const TruncatedSeries<Real>& s, int tail) {
    if (tail < 1) throw std::invalid_argument("tail window must be positive");
    Real sum(0);
    int used = 0;
    for (int n = s.order(); n >= 1 && used < tail; --n) {
        const Real& c = s.coeffs[static_cast<std::size_t>(n)];
        if (c == 0) continue;
        sum += pow(abs(c), Real(-1) / n);
        ++used;
    }
    if (used < tail) throw InsufficientTerms("fewer nonzero coefficients than the tail window");
    return sum / tail;
}

}  // namespace sakiadis
