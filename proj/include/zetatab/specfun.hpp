#pragma once

#include "zetatab/complex_ops.hpp"
#include "zetatab/errors.hpp"

namespace zetatab::specfun {

// Tuning knobs for the Euler-Maclaurin evaluations.  The defaults keep the
// smallest retained tail term below 1e-15 for |s| <= 10, Re(q) >= 0.1.
struct SpecFunConfig {
    int em_shift_terms = 32;      // direct-sum length N, >= 8
    int em_bernoulli_terms = 12;  // tail correction order M, in [4, 30]
    double target_abs_tol = 1e-13;
};

// Hurwitz zeta zeta(s, q) = sum_{n>=0} (q+n)^(-s), continued to all complex
// s != 1 by Euler-Maclaurin summation:
//
//   zeta(s,q) = sum_{n<N} (q+n)^(-s) + (q+N)^(1-s)/(s-1) + (q+N)^(-s)/2
//             + sum_{j=1..M} B_{2j}/(2j)! (s)_{2j-1} (q+N)^(-s-2j+1)
//
// cf. DLMF 25.11.  Requires Re(q) > 0.
CNum hurwitz_zeta(const CNum& s, const CNum& q, const SpecFunConfig& cfg = {});

// zeta(s) = zeta(s, 1).
CNum riemann_zeta(const CNum& s, const SpecFunConfig& cfg = {});

// zeta'(s), by term-by-term analytic differentiation of the Euler-Maclaurin
// formula above (valid for complex s, no finite-difference step involved).
CNum zeta_derivative(const CNum& s, const SpecFunConfig& cfg = {});

// Principal-branch log Gamma(z), continuous for Re(z) > 0 and matching the
// standard log-gamma there (not merely some log of Gamma(z)).  For
// Re(z) <= 0 the reflection formula is used; exp(log_gamma(z)) is always
// Gamma(z), but the imaginary part may then differ from the continued
// log-gamma by a multiple of 2*pi.
CNum log_gamma(const CNum& z);

// Gamma(z) = exp(log_gamma(z)).
CNum gamma_fn(const CNum& z);

// psi(z) = Gamma'(z)/Gamma(z); upward recurrence to Re(z) > 10, then the
// B_{2j} asymptotic series.
CNum digamma(const CNum& z);

enum class Constant { euler_gamma, catalan, glaisher_log, pi };

// Classical constants, accurate to >= 1e-14 absolute.  catalan is summed by
// Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^n/(2n+1)^2;
// glaisher_log is ln A = 1/12 - zeta'(-1).
double constant(Constant name);

// log^k(x) for x in (0, 1): the principal-branch power of the (negative
// real) logarithm, exp(k * (ln|ln x| + i pi)).
CNum log_pow(double x, const CNum& k);

// log(log(x)) for x in (0, 1): ln|ln x| + i pi.
CNum log_log(double x);

// Shared core of log_pow for callers that already hold |ln x| (possibly
// computed from 1-x to avoid cancellation near x = 1).
CNum log_pow_from_abs(double abs_ln_x, const CNum& k);

namespace detail {
// B_{2j} / (2j)! for j = 1..30; used by the Euler-Maclaurin tails.
double bernoulli_over_factorial(int j);
long double bernoulli_over_factorial_ld(int j);
// B_{2j} for j = 1..30.
double bernoulli_2j(int j);
void validate(const SpecFunConfig& cfg);
}  // namespace detail

}  // namespace zetatab::specfun
