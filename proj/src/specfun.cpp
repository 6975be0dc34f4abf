#include "zetatab/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace zetatab::specfun {

namespace {

// Bernoulli numbers B_2, B_4, ..., B_60 from their exact rationals.
const std::array<long double, 30> kBernoulli = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
    -7709321041217.0L / 510.0L,
    2577687858367.0L / 6.0L,
    -26315271553053477373.0L / 1919190.0L,
    2929993913841559.0L / 6.0L,
    -261082718496449122051.0L / 13530.0L,
    1520097643918070802691.0L / 1806.0L,
    -27833269579301024235023.0L / 690.0L,
    596451111593912163277961.0L / 282.0L,
    -5609403368997817686249127547.0L / 46410.0L,
    495057205241079648212477525.0L / 66.0L,
    -801165718135489957347924991853.0L / 1590.0L,
    29149963634884862421418123812691.0L / 798.0L,
    -2479392929313226753685415739663229.0L / 870.0L,
    84483613348880041862046775994036021.0L / 354.0L,
    -1215233140483755572040304994079820246041491.0L / 56786730.0L,
};

const std::array<long double, 30>& bern_over_fact_table() {
    static const std::array<long double, 30> table = [] {
        std::array<long double, 30> t{};
        long double fact = 1.0L;  // (2j)!
        for (int j = 1; j <= 30; ++j) {
            fact *= (2.0L * j - 1.0L) * (2.0L * j);
            t[static_cast<std::size_t>(j - 1)] = kBernoulli[static_cast<std::size_t>(j - 1)] / fact;
        }
        return t;
    }();
    return table;
}

bool near_nonpositive_integer(const CNum& z) {
    if (z.real() > 0.5 || std::abs(z.imag()) > 1e-12) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

// Euler-Maclaurin core: returns zeta(s, q) and, when want_derivative,
// d/ds zeta(s, q) accumulated alongside by the product rule.
struct ZetaEM {
    CNum value;
    CNum deriv;
};

using CLD = std::complex<long double>;

ZetaEM hurwitz_em(const CNum& s_in, const CNum& q_in, const SpecFunConfig& cfg,
                  bool want_derivative) {
    detail::validate(cfg);
    if (!is_finite(s_in) || !is_finite(q_in)) throw DomainError("hurwitz_zeta: non-finite argument");
    if (s_in == CNum(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (q_in.real() <= 0.0) throw DomainError("hurwitz_zeta: Re(q) must be positive");

    const int tail_order = cfg.em_bernoulli_terms;
    int shift = cfg.em_shift_terms;
    if (s_in.real() < 0.5) {
        // For Re(s) < 0 the summands grow like |q+n|^(-Re s) and the final
        // value is small against them, so every extra shift term feeds the
        // cancellation.  Shift only as far as the Bernoulli tail needs:
        // its terms decay once 2 pi |q+N| clears |s| + 2M.
        const double w_target =
            std::max(6.0, 1.34 * (std::abs(s_in) + 2.0 * tail_order + 2.0) / (2.0 * kPi));
        shift = std::clamp(static_cast<int>(std::ceil(w_target - q_in.real())), 0,
                           cfg.em_shift_terms);
    }

    // Accumulate in extended precision; the cancellation above still costs
    // |q+N|^(1-Re s) * eps of the working type.
    const CLD s(s_in.real(), s_in.imag());
    const CLD q(q_in.real(), q_in.imag());

    CLD sum(0.0L, 0.0L);
    CLD dsum(0.0L, 0.0L);
    for (int n = 0; n < shift; ++n) {
        const CLD lg = std::log(q + static_cast<long double>(n));
        const CLD term = std::exp(-s * lg);
        sum += term;
        if (want_derivative) dsum -= lg * term;
    }

    const CLD w = q + static_cast<long double>(shift);
    const CLD logw = std::log(w);
    const CLD sm1 = s - 1.0L;

    // (q+N)^(1-s)/(s-1)
    const CLD head = std::exp((1.0L - s) * logw) / sm1;
    sum += head;
    if (want_derivative) dsum += -head * logw - head / sm1;

    // (q+N)^(-s)/2
    const CLD mid = 0.5L * std::exp(-s * logw);
    sum += mid;
    if (want_derivative) dsum -= logw * mid;

    // Bernoulli tail.  poch carries (s)_{2j-1} = s(s+1)...(s+2j-2) and
    // dpoch its s-derivative, updated by the product rule so zeros of the
    // product do not poison the derivative.
    CLD poch = s;
    CLD dpoch(1.0L, 0.0L);
    CLD wpow = std::exp((-s - 1.0L) * logw);  // w^(-s-2j+1) at j = 1
    const CLD winv2 = 1.0L / (w * w);

    long double prev_mag = std::numeric_limits<long double>::infinity();
    long double last_mag = 0.0L;
    bool grew = false;
    for (int j = 1; j <= tail_order; ++j) {
        const long double c = detail::bernoulli_over_factorial_ld(j);
        const CLD term = c * poch * wpow;
        sum += term;
        if (want_derivative) dsum += c * (dpoch - poch * logw) * wpow;

        last_mag = std::abs(term);
        grew = (j > 1 && last_mag > prev_mag);
        prev_mag = last_mag;

        const CLD f1 = s + (2.0L * j - 1.0L);
        const CLD f2 = s + (2.0L * j);
        if (want_derivative) dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        wpow *= winv2;
    }
    if (grew && last_mag > cfg.target_abs_tol * (1.0L + std::abs(sum))) {
        throw ConvergenceError("hurwitz_zeta: Bernoulli tail stopped decreasing before target accuracy");
    }
    const ZetaEM out{CNum(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
                     CNum(static_cast<double>(dsum.real()), static_cast<double>(dsum.imag()))};
    if (!is_finite(out.value) || (want_derivative && !is_finite(out.deriv))) {
        throw OverflowError("hurwitz_zeta: result overflowed double precision");
    }
    return out;
}

// 15-term Lanczos approximation, g = 607/128, valid for Re(z) >= 0.5.
const double kLanczosG = 4.7421875;
const std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

CNum lanczos_log_gamma(const CNum& z) {
    const CNum zm1 = z - 1.0;
    CNum series(kLanczos[0], 0.0);
    for (int i = 1; i < 15; ++i) series += kLanczos[static_cast<std::size_t>(i)] / (zm1 + static_cast<double>(i));
    const CNum t = zm1 + (kLanczosG + 0.5);
    return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

double catalan_accelerated() {
    // Cohen-Rodriguez Villegas-Zagier acceleration of the alternating series
    // sum (-1)^n / (2n+1)^2; error ~ (3+sqrt(8))^(-n).
    const int n = 36;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        const double odd = 2.0 * k + 1.0;
        s += c / (odd * odd);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

}  // namespace

namespace detail {

double bernoulli_over_factorial(int j) {
    return static_cast<double>(bernoulli_over_factorial_ld(j));
}

long double bernoulli_over_factorial_ld(int j) {
    if (j < 1 || j > 30) throw DomainError("bernoulli_over_factorial: order out of range");
    return bern_over_fact_table()[static_cast<std::size_t>(j - 1)];
}

double bernoulli_2j(int j) {
    if (j < 1 || j > 30) throw DomainError("bernoulli_2j: order out of range");
    return static_cast<double>(kBernoulli[static_cast<std::size_t>(j - 1)]);
}

void validate(const SpecFunConfig& cfg) {
    if (cfg.em_shift_terms < 8) throw DomainError("SpecFunConfig: em_shift_terms must be >= 8");
    if (cfg.em_bernoulli_terms < 4 || cfg.em_bernoulli_terms > 30) {
        throw DomainError("SpecFunConfig: em_bernoulli_terms must lie in [4, 30]");
    }
    if (!(cfg.target_abs_tol > 0.0)) throw DomainError("SpecFunConfig: target_abs_tol must be positive");
}

}  // namespace detail

CNum hurwitz_zeta(const CNum& s, const CNum& q, const SpecFunConfig& cfg) {
    return hurwitz_em(s, q, cfg, false).value;
}

CNum riemann_zeta(const CNum& s, const SpecFunConfig& cfg) {
    return hurwitz_zeta(s, CNum(1.0, 0.0), cfg);
}

CNum zeta_derivative(const CNum& s, const SpecFunConfig& cfg) {
    return hurwitz_em(s, CNum(1.0, 0.0), cfg, true).deriv;
}

CNum log_gamma(const CNum& z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    CNum result;
    if (z.real() >= 0.5) {
        result = lanczos_log_gamma(z);
    } else if (z.real() > 0.0) {
        // log Gamma(z) = log Gamma(z+1) - Log z keeps the principal branch
        // on the right half-plane.
        result = lanczos_log_gamma(z + 1.0) - log_principal(z);
    } else {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        const CNum s = std::sin(kPi * z);
        result = std::log(CNum(kPi, 0.0)) - log_principal(s) - log_gamma(1.0 - z);
    }
    if (!is_finite(result)) throw OverflowError("log_gamma: result overflowed double precision");
    return result;
}

CNum gamma_fn(const CNum& z) {
    const CNum g = std::exp(log_gamma(z));
    if (!is_finite(g)) throw OverflowError("gamma_fn: result overflowed double precision");
    return g;
}

CNum digamma(const CNum& z) {
    if (!is_finite(z)) throw DomainError("digamma: non-finite argument");
    if (near_nonpositive_integer(z)) throw PoleError("digamma: pole at non-positive integer");

    CNum acc(0.0, 0.0);
    CNum w = z;
    while (w.real() < 10.0) {
        acc -= 1.0 / w;
        w += 1.0;
    }
    // psi(w) = ln w - 1/(2w) - sum_j B_{2j} / (2j w^{2j}), DLMF 5.11.2.
    const CNum inv = 1.0 / w;
    const CNum inv2 = inv * inv;
    CNum r = std::log(w) - 0.5 * inv;
    CNum zp = inv2;
    for (int j = 1; j <= 8; ++j) {
        r -= detail::bernoulli_2j(j) / (2.0 * j) * zp;
        zp *= inv2;
    }
    const CNum result = acc + r;
    if (!is_finite(result)) throw OverflowError("digamma: result overflowed double precision");
    return result;
}

double constant(Constant name) {
    switch (name) {
        case Constant::pi:
            return kPi;
        case Constant::euler_gamma: {
            static const double g = -digamma(CNum(1.0, 0.0)).real();
            return g;
        }
        case Constant::catalan: {
            static const double c = catalan_accelerated();
            return c;
        }
        case Constant::glaisher_log: {
            static const double a = 1.0 / 12.0 - zeta_derivative(CNum(-1.0, 0.0)).real();
            return a;
        }
    }
    throw DomainError("constant: unknown constant name");
}

CNum log_pow_from_abs(double abs_ln_x, const CNum& k) {
    if (!(abs_ln_x > 0.0)) throw DomainError("log_pow: |ln x| must be positive");
    const CNum r = std::exp(k * CNum(std::log(abs_ln_x), kPi));
    if (!is_finite(r)) throw OverflowError("log_pow: result overflowed double precision");
    return r;
}

CNum log_pow(double x, const CNum& k) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("log_pow: x must lie in (0, 1)");
    return log_pow_from_abs(-std::log(x), k);
}

CNum log_log(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("log_log: x must lie in (0, 1)");
    return CNum(std::log(-std::log(x)), kPi);
}

}  // namespace zetatab::specfun
