#pragma once

// Test-side oracles.  These stay independent of the library's evaluation
// paths: brute-force summation with integral tail bounds, exact Bernoulli
// polynomials, and libm where it is trustworthy.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Kahan-compensated accumulator; the brute-force sums below run over 1e5+
// terms and plain summation would cost several digits.
struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Bernoulli polynomials B_1..B_4, evaluated from their exact coefficients.
inline double bernoulli_poly(int n, double q) {
    switch (n) {
        case 1: return q - 0.5;
        case 2: return (q - 1.0) * q + 1.0 / 6.0;
        case 3: return ((q - 1.5) * q + 0.5) * q;
        case 4: return (((q - 2.0) * q + 1.0) * q) * q - 1.0 / 30.0;
        default: throw std::out_of_range("bernoulli_poly: only n = 1..4 supported");
    }
}

// zeta(s) for real s > 1 by direct summation plus an Euler-Maclaurin tail:
//   sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2 + s N^(-s-1)/12
// Remaining error ~ s(s+1)(s+2) N^(-s-3)/720.
inline double zeta_direct(double s, long cutoff = 200000) {
    Kahan acc;
    for (long n = cutoff; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -s));
    const double nn = static_cast<double>(cutoff);
    acc.add(std::pow(nn, 1.0 - s) / (s - 1.0));
    acc.add(-0.5 * std::pow(nn, -s));
    acc.add(s * std::pow(nn, -s - 1.0) / 12.0);
    return acc.sum;
}

// zeta'(s) = -sum ln(n) n^-s for real s > 1, same tail treatment with
// g(x) = ln(x) x^-s:
//   int_N^inf g = N^(1-s) (ln N/(s-1) + 1/(s-1)^2)
//   g'(x) = x^(-s-1) (1 - s ln x)
inline double zeta_deriv_direct(double s, long cutoff = 200000) {
    Kahan acc;
    for (long n = cutoff; n >= 2; --n) {
        const double x = static_cast<double>(n);
        acc.add(std::log(x) * std::pow(x, -s));
    }
    const double nn = static_cast<double>(cutoff);
    const double ln_n = std::log(nn);
    acc.add(std::pow(nn, 1.0 - s) * (ln_n / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))));
    acc.add(-0.5 * ln_n * std::pow(nn, -s));
    acc.add(-std::pow(nn, -s - 1.0) * (1.0 - s * ln_n) / 12.0);
    return -acc.sum;
}

// Euler's constant from H_n - ln n with Euler-Maclaurin corrections.
inline double euler_gamma() {
    const long n = 100000;
    Kahan h;
    for (long j = n; j >= 1; --j) h.add(1.0 / static_cast<double>(j));
    const double x = static_cast<double>(n);
    return h.sum - std::log(x) - 0.5 / x + 1.0 / (12.0 * x * x) - 1.0 / (120.0 * x * x * x * x);
}

// Catalan's constant: the midpoint of consecutive partial sums of the
// alternating series halves the alternating-series error bound to
// ~(a_N - a_{N+1})/2 ~ 1/(2N)^3.
inline double catalan() {
    const long n = 400000;
    Kahan s;
    for (long j = n; j >= 0; --j) {
        const double odd = 2.0 * static_cast<double>(j) + 1.0;
        const double term = 1.0 / (odd * odd);
        s.add((j % 2 == 0) ? term : -term);
    }
    const double odd = 2.0 * static_cast<double>(n + 1) + 1.0;
    const double a_next = 1.0 / (odd * odd);
    return s.sum + ((n + 1) % 2 == 0 ? a_next : -a_next) * 0.5;
}

// ln A from the zeta'(2) route: ln A = (gamma + ln 2 pi)/12 - zeta'(2)/(2 pi^2).
inline double glaisher_log() {
    return (euler_gamma() + std::log(2.0 * kPi)) / 12.0 - zeta_deriv_direct(2.0) / (2.0 * kPi * kPi);
}

}  // namespace oracles
