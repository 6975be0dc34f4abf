#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "zetatab/errors.hpp"

namespace zetatab {

// Universal value type: complex double.  Parameters, integrand values and
// closed-form values are all CNum.
using CNum = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(const CNum& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Branch normalization: values that land exactly on the negative real axis
// are treated as approached from above, so arg = +pi throughout the library.
// std::log would give -pi for a negative real with -0.0 imaginary part.
inline CNum upper_branch(CNum z) {
    if (z.imag() == 0.0) return CNum(z.real(), +0.0);
    return z;
}

// Principal-branch complex logarithm with arg in (-pi, pi], arg = +pi on the
// negative real axis regardless of the sign of a zero imaginary part.
inline CNum log_principal(const CNum& z) { return std::log(upper_branch(z)); }

// Principal-branch power base^expo = exp(expo * log(base)).  base = 0 is
// defined for Re(expo) > 0 (-> 0) and expo = 0 (-> 1); otherwise the power
// has no finite principal value.
inline CNum pow_principal(const CNum& base, const CNum& expo) {
    if (base == CNum(0.0, 0.0)) {
        if (expo == CNum(0.0, 0.0)) return CNum(1.0, 0.0);
        if (expo.real() > 0.0) return CNum(0.0, 0.0);
        throw DomainError("pow_principal: zero base with non-positive real exponent");
    }
    return std::exp(expo * log_principal(base));
}

// exp(w) - 1 without cancellation for small |w|.
inline CNum expm1_c(const CNum& w) {
    const double a = w.real();
    const double b = w.imag();
    const double em = std::expm1(a);
    const double sb = std::sin(b);
    const double cb = std::cos(b);
    const double half = std::sin(0.5 * b);
    // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2)
    return CNum(em * cb - 2.0 * half * half, (em + 1.0) * sb);
}

}  // namespace zetatab
