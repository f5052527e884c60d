#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace sakiadis {

/// Variable-precision floating point scalar. Precision is the thread's
/// current default (decimal digits), set via PrecisionGuard or
/// set_working_digits before values are constructed.
using Real = boost::multiprecision::mpfr_float;

/// Exact rational scalar for the coefficient recursions and ground-truth
/// tests. All recursions in this library are rational, so results in this
/// mode carry no roundoff at all.
using Rational = boost::multiprecision::mpq_rational;

inline void set_working_digits(unsigned digits) { Real::default_precision(digits); }
inline unsigned working_digits() { return Real::default_precision(); }

/// Scoped precision switch: restores the previous working precision on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(working_digits()) {
        set_working_digits(digits);
    }
    ~PrecisionGuard() { set_working_digits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rational& q) { return Real(q); }
inline Real to_real(const Real& x) { return x; }

/// Deterministic scientific digit string with `digits` significant digits.
/// Identical value, precision and digit count always yield identical bytes.
inline std::string digit_string(const Real& v, unsigned digits) {
    return v.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace sakiadis
