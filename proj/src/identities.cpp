#include "zetatab/identities.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "zetatab/specfun.hpp"

namespace zetatab::identities {

namespace {

using quad::Integrand;
using quad::LimitFill;

const CNum kImag(0.0, 1.0);
const CNum kTwoPi(2.0 * kPi, 0.0);

// ---------------------------------------------------------------------------
// Stable integrand building blocks.  Every builder receives (x, xc) from the
// quadrature; xc carries the exact distance to the nearest endpoint, so all
// logarithms stay accurate arbitrarily close to x = 1.
// ---------------------------------------------------------------------------

inline double ln_x(double x, double xc) { return xc < 0.0 ? std::log1p(xc) : std::log(x); }

inline double atanh_real(double x, double xc) {
    if (xc < 0.0) return 0.5 * (std::log(2.0 + xc) - std::log(-xc));
    return std::atanh(x);
}

// log(1 + z) without cancellation for small |z| (Kahan's trick).
inline CNum log1p_c(const CNum& z) {
    const CNum u = 1.0 + z;
    if (u == CNum(1.0, 0.0)) return z;
    const CNum d = u - 1.0;
    if (d == z) return log_principal(u);
    return log_principal(u) * (z / d);
}

inline CNum pow_x(double lx, const CNum& w) { return std::exp(w * lx); }

// 1 - x^w
inline CNum one_minus_pow(double lx, const CNum& w) { return -expm1_c(w * lx); }

// log(x^w + 1)
inline CNum log_one_plus_pow(double lx, const CNum& w) { return log1p_c(pow_x(lx, w)); }

// log(1 - x^w)
inline CNum log_one_minus_pow(double lx, const CNum& w) {
    return log_principal(one_minus_pow(lx, w));
}

// x^u - x^v = x^v (x^(u-v) - 1), factoring out whichever power decays
// slower so the expm1 argument keeps a non-positive real part.
inline CNum pow_diff(double lx, const CNum& u, const CNum& v) {
    if (u.real() >= v.real()) return pow_x(lx, v) * expm1_c((u - v) * lx);
    return -pow_x(lx, u) * expm1_c((v - u) * lx);
}

// atanh(x^w) = (log(1 + x^w) - log(1 - x^w)) / 2
inline CNum atanh_pow(double lx, const CNum& w) {
    const CNum omz = one_minus_pow(lx, w);
    return 0.5 * (std::log(2.0 - omz) - log_principal(omz));
}

// log^k(a/x) + log^k(a x)
inline CNum kernel_logk(double lx, const CNum& log_a, const CNum& k) {
    return pow_principal(log_a - lx, k) + pow_principal(log_a + lx, k);
}

// log^w(x), principal branch with arg(ln x) = +pi
inline CNum lpow(double lx, const CNum& w) { return specfun::log_pow_from_abs(-lx, w); }

// log(log(x)) = ln|ln x| + i pi
inline CNum llog(double lx) { return CNum(std::log(-lx), kPi); }

// ---------------------------------------------------------------------------
// Closed-form shortcuts (special-function kernel only; the quadrature module
// is never touched from these paths).
// ---------------------------------------------------------------------------

CNum zeta(const CNum& s) { return specfun::riemann_zeta(s); }
CNum zetad(const CNum& s) { return specfun::zeta_derivative(s); }
CNum gam(const CNum& z) { return specfun::gamma_fn(z); }
CNum lgam(const CNum& z) { return specfun::log_gamma(z); }
CNum psi0(const CNum& z) { return specfun::digamma(z); }
double euler_gamma() { return specfun::constant(specfun::Constant::euler_gamma); }
double catalan() { return specfun::constant(specfun::Constant::catalan); }
double glaisher_log() { return specfun::constant(specfun::Constant::glaisher_log); }

// e^{i pi w}
CNum eip(const CNum& w) { return std::exp(kImag * kPi * w); }

// Hurwitz-zeta arguments of the (4a)/(4b) family.
CNum q_plus(const CNum& par, const CNum& log_a) {
    return (kPi - kImag * par * log_a) / (2.0 * kPi);
}
CNum q_minus(const CNum& par, const CNum& log_a) {
    return 1.0 - kImag * par * log_a / (2.0 * kPi);
}

CNum log_a_of(const ParamPoint& pp) { return log_principal(pp.a); }

// ---------------------------------------------------------------------------
// Domain predicates
// ---------------------------------------------------------------------------

using DomainResult = std::optional<std::string>;

DomainResult need_re_pos(const CNum& v, const char* name) {
    if (!(v.real() > 0.0)) return std::string(name) + " must have positive real part";
    return std::nullopt;
}

DomainResult need_re_nonneg(const CNum& v, const char* name) {
    if (v.real() < 0.0) return std::string(name) + " must have non-negative real part";
    return std::nullopt;
}

DomainResult need_real_pos(const CNum& v, const char* name) {
    if (std::abs(v.imag()) > 1e-12 || !(v.real() > 0.0)) {
        return std::string(name) + " must be real and positive";
    }
    return std::nullopt;
}

// k domain for rows whose closed form carries Gamma(k+1) zeta(k+2).
DomainResult k_after_gamma(const CNum& k) {
    if (std::abs(k + 1.0) < 1e-9) return std::string("Gamma pole at k+1=0");
    if (!(k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
    return std::nullopt;
}

// k domain for rows carrying Gamma(k+2) zeta(k+2): the binding constraint at
// k = -1 is the zeta pole.
DomainResult k_after_gamma2(const CNum& k) {
    if (std::abs(k + 1.0) < 1e-9) return std::string("zeta pole at k+2=1");
    if (!(k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
    return std::nullopt;
}

// a domain for the (4a)-(5b) family: unit circle, principal sector.
DomainResult need_unit_circle(const CNum& a) {
    if (std::abs(std::abs(a) - 1.0) > 1e-9 || std::abs(std::arg(a)) >= kPi - 1e-9) {
        return std::string("a must lie on the unit circle with |arg a| < pi");
    }
    return std::nullopt;
}

DomainResult need_hurwitz_arg(const CNum& q, const char* what) {
    if (!(q.real() > 0.0)) {
        return std::string("Hurwitz argument ") + what + " must have positive real part";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Grid helpers
// ---------------------------------------------------------------------------

const std::vector<CNum> kDefK{CNum(0.5, 0.0), CNum(1.0, 0.0), CNum(2.0, 0.0)};
const std::vector<CNum> kDefMN{CNum(1.0, 0.0), CNum(2.0, 0.0)};
const std::vector<CNum> kDefP{CNum(0.0, 0.0), CNum(1.0, 0.0)};

std::vector<LimitFill> no_fills(const ParamPoint&) { return {}; }

// ---------------------------------------------------------------------------
// Identity definitions
// ---------------------------------------------------------------------------

Identity make_I_4A() {
    Identity id;
    id.id = "I_4A";
    id.description = "log(x^m+1) against the symmetric log-power kernel";
    id.integrand_text = "log(x^m+1) (log^k(a/x) + log^k(a x)) / x";
    id.closed_form_text =
        "-m log^(k+2)(a)/((k+1)(k+2)) - i (2 pi)^(k+2) (i/m)^(k+1) zeta(-k-1, (pi - i m log a)/(2 pi))/(k+1)";
    id.anchor = "family (4a)";
    id.uses = {true, true, true, false, false};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_unit_circle(pp.a)) return r;
        if (std::abs(pp.k + 1.0) < 1e-9) return std::string("pole at k = -1");
        if (!(pp.k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
        if (auto r = need_hurwitz_arg(q_plus(pp.m, log_a_of(pp)), "(pi - i m log a)/(2 pi)")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum m = pp.m, k = pp.k, la = log_a_of(pp);
        return [m, k, la](double x, double xc) {
            const double lx = ln_x(x, xc);
            return log_one_plus_pow(lx, m) * kernel_logk(lx, la, k) / x;
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k, m = pp.m, la = log_a_of(pp);
        const CNum zt = specfun::hurwitz_zeta(-k - 1.0, q_plus(m, la));
        return -m * pow_principal(la, k + 2.0) / ((k + 1.0) * (k + 2.0)) -
               kImag * pow_principal(kTwoPi, k + 2.0) * pow_principal(kImag / m, k + 1.0) * zt /
                   (k + 1.0);
    };
    id.grid_defaults.k = kDefK;
    id.grid_defaults.m = kDefMN;
    return id;
}

Identity make_I_4B() {
    Identity id;
    id.id = "I_4B";
    id.description = "log(1-x^n) against the symmetric log-power kernel";
    id.integrand_text = "log(1-x^n) (log^k(a/x) + log^k(a x)) / x";
    id.closed_form_text =
        "-i (2 pi)^(k+2) (i/n)^(k+1) zeta(-k-1, 1 - i n log a/(2 pi))/(k+1) - n log^(k+2)(a)/((k+1)(k+2)) - i pi log^(k+1)(a)/(k+1)";
    id.anchor = "family (4b)";
    id.uses = {true, true, false, true, false};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.n, "n")) return r;
        if (auto r = need_unit_circle(pp.a)) return r;
        if (std::abs(pp.k + 1.0) < 1e-9) return std::string("pole at k = -1");
        if (!(pp.k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
        if (auto r = need_hurwitz_arg(q_minus(pp.n, log_a_of(pp)), "1 - i n log a/(2 pi)")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum n = pp.n, k = pp.k, la = log_a_of(pp);
        return [n, k, la](double x, double xc) {
            const double lx = ln_x(x, xc);
            return log_one_minus_pow(lx, n) * kernel_logk(lx, la, k) / x;
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k, n = pp.n, la = log_a_of(pp);
        const CNum zt = specfun::hurwitz_zeta(-k - 1.0, q_minus(n, la));
        return -kImag * pow_principal(kTwoPi, k + 2.0) * pow_principal(kImag / n, k + 1.0) * zt /
                   (k + 1.0) -
               n * pow_principal(la, k + 2.0) / ((k + 1.0) * (k + 2.0)) -
               kImag * kPi * pow_principal(la, k + 1.0) / (k + 1.0);
    };
    id.grid_defaults.k = kDefK;
    id.grid_defaults.n = kDefMN;
    return id;
}

Identity make_I_5A() {
    Identity id;
    id.id = "I_5A";
    id.description = "atanh(x^m) against the symmetric log-power kernel";
    id.integrand_text = "atanh(x^m) (log^k(a/x) + log^k(a x)) / x";
    id.closed_form_text =
        "(2 pi)^(k+2) (i/m)^k/(2 (k+1) m) (zeta(-k-1, (pi - i m log a)/(2 pi)) - zeta(-k-1, 1 - i m log a/(2 pi))) + i pi m log^(k+1)(a)";
    id.anchor = "family (5a): difference of (4a) and (4b)";
    id.uses = {true, true, true, false, false};
    id.status_hint = StatusHint::suspected_typo;  // bracket placement of the trailing term
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_unit_circle(pp.a)) return r;
        if (std::abs(pp.k + 1.0) < 1e-9) return std::string("pole at k = -1");
        if (!(pp.k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
        const CNum la = log_a_of(pp);
        if (auto r = need_hurwitz_arg(q_plus(pp.m, la), "(pi - i m log a)/(2 pi)")) return r;
        if (auto r = need_hurwitz_arg(q_minus(pp.m, la), "1 - i m log a/(2 pi)")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum m = pp.m, k = pp.k, la = log_a_of(pp);
        return [m, k, la](double x, double xc) {
            const double lx = ln_x(x, xc);
            return atanh_pow(lx, m) * kernel_logk(lx, la, k) / x;
        };
    };
    id.fills = no_fills;
    const auto zeta_diff = [](const ParamPoint& pp) {
        const CNum la = log_a_of(pp);
        return specfun::hurwitz_zeta(-pp.k - 1.0, q_plus(pp.m, la)) -
               specfun::hurwitz_zeta(-pp.k - 1.0, q_minus(pp.m, la));
    };
    const auto prefactor = [](const ParamPoint& pp) {
        return pow_principal(kTwoPi, pp.k + 2.0) * pow_principal(kImag / pp.m, pp.k) /
               (2.0 * (pp.k + 1.0) * pp.m);
    };
    id.rhs = [zeta_diff, prefactor](const ParamPoint& pp) {
        const CNum extra = kImag * kPi * pp.m * pow_principal(log_a_of(pp), pp.k + 1.0);
        return prefactor(pp) * zeta_diff(pp) + extra;
    };
    id.alt = AltReading{
        "trailing term inside the zeta bracket",
        [zeta_diff, prefactor](const ParamPoint& pp) {
            const CNum extra = kImag * kPi * pp.m * pow_principal(log_a_of(pp), pp.k + 1.0);
            return prefactor(pp) * (zeta_diff(pp) + extra);
        }};
    id.grid_defaults.a = {std::polar(1.0, kPi / 4.0)};
    id.grid_defaults.k = kDefK;
    id.grid_defaults.m = kDefMN;
    return id;
}

Identity make_I_5B() {
    Identity id;
    id.id = "I_5B";
    id.description = "log((x^m+1)(1-x^n)) against the symmetric log-power kernel";
    id.integrand_text = "(log^k(a/x) + log^k(a x)) log((x^m+1)(1-x^n)) / x";
    id.closed_form_text =
        "4 pi^2/((k+1)(k+2) m n) ((2 pi)^k k + 2^(k+1) pi^k) (n (i/m)^k zeta(-k-1, (pi - i m log a)/(2 pi)) + m (i/n)^k zeta(-k-1, 1 - i n log a/(2 pi))) - m n log^(k+1)(a)(log(a)(m+n) + i pi (k+2))";
    id.anchor = "family (5b): sum of (4a) and (4b)";
    id.uses = {true, true, true, true, false};
    id.status_hint = StatusHint::suspected_typo;  // anomalous scaling of the printed factors
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_re_pos(pp.n, "n")) return r;
        if (auto r = need_unit_circle(pp.a)) return r;
        if (std::abs(pp.k + 1.0) < 1e-9) return std::string("pole at k = -1");
        if (std::abs(pp.k + 2.0) < 1e-9) return std::string("pole at k = -2");
        if (!(pp.k.real() > -1.0)) return std::string("k must satisfy Re(k) > -1");
        const CNum la = log_a_of(pp);
        if (auto r = need_hurwitz_arg(q_plus(pp.m, la), "(pi - i m log a)/(2 pi)")) return r;
        if (auto r = need_hurwitz_arg(q_minus(pp.n, la), "1 - i n log a/(2 pi)")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum m = pp.m, n = pp.n, k = pp.k, la = log_a_of(pp);
        return [m, n, k, la](double x, double xc) {
            const double lx = ln_x(x, xc);
            // log((x^m+1)(1-x^n)) split into a sum; both factors are
            // positive reals on (0,1) for the admissible parameter range.
            return (log_one_plus_pow(lx, m) + log_one_minus_pow(lx, n)) *
                   kernel_logk(lx, la, k) / x;
        };
    };
    id.fills = no_fills;
    const auto zeta_part = [](const ParamPoint& pp) {
        const CNum la = log_a_of(pp);
        return pp.n * pow_principal(kImag / pp.m, pp.k) *
                   specfun::hurwitz_zeta(-pp.k - 1.0, q_plus(pp.m, la)) +
               pp.m * pow_principal(kImag / pp.n, pp.k) *
                   specfun::hurwitz_zeta(-pp.k - 1.0, q_minus(pp.n, la));
    };
    const auto front = [](const ParamPoint& pp) {
        return 4.0 * kPi * kPi / ((pp.k + 1.0) * (pp.k + 2.0) * pp.m * pp.n);
    };
    const auto odd_factor = [](const ParamPoint& pp) {
        return pow_principal(kTwoPi, pp.k) * pp.k +
               pow_principal(CNum(2.0, 0.0), pp.k + 1.0) * pow_principal(CNum(kPi, 0.0), pp.k);
    };
    const auto trailing = [](const ParamPoint& pp) {
        const CNum la = log_a_of(pp);
        return pp.m * pp.n * pow_principal(la, pp.k + 1.0) *
               (la * (pp.m + pp.n) + kImag * kPi * (pp.k + 2.0));
    };
    id.rhs = [=](const ParamPoint& pp) {
        return front(pp) * odd_factor(pp) * zeta_part(pp) - trailing(pp);
    };
    id.alt = AltReading{"trailing term inside the overall prefactor",
                        [=](const ParamPoint& pp) {
                            return front(pp) * (odd_factor(pp) * zeta_part(pp) - trailing(pp));
                        }};
    id.grid_defaults.a = {std::polar(1.0, kPi / 4.0)};
    id.grid_defaults.k = kDefK;
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.n = kDefMN;
    return id;
}

Identity make_I_6A() {
    Identity id;
    id.id = "I_6A";
    id.description = "atanh(x) log^k(x) / x";
    id.integrand_text = "atanh(x) log^k(x) / x";
    id.closed_form_text = "2^(-k-2) (2^(k+2)-1) e^(i pi k) zeta(k+2) Gamma(k+1)";
    id.anchor = "family (6a): (5a) at a = 1, m = 1";
    id.uses.k = true;
    id.domain = [](const ParamPoint& pp) -> DomainResult { return k_after_gamma(pp.k); };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum k = pp.k;
        return [k](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lpow(lx, k) * atanh_real(x, xc) / x;
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k;
        const CNum two(2.0, 0.0);
        return pow_principal(two, -k - 2.0) * (pow_principal(two, k + 2.0) - 1.0) * eip(k) *
               zeta(k + 2.0) * gam(k + 1.0);
    };
    id.grid_defaults.k = kDefK;
    return id;
}

Identity make_I_6B() {
    Identity id;
    id.id = "I_6B";
    id.description = "log^k(x) log((x^m+1)(1-x^n)) / x";
    id.integrand_text = "log^k(x) log((x^m+1)(1-x^n)) / x";
    id.closed_form_text =
        "1/2 e^(i pi k) zeta(k+2) Gamma(k+1) ((2-2^(-k)) m^(-k-1) - 2 n^(-k-1))";
    id.anchor = "family (6b): (5b) at a = 1";
    id.uses = {false, true, true, true, false};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = k_after_gamma(pp.k)) return r;
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_re_pos(pp.n, "n")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum k = pp.k, m = pp.m, n = pp.n;
        return [k, m, n](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lpow(lx, k) * (log_one_plus_pow(lx, m) + log_one_minus_pow(lx, n)) / x;
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k, m = pp.m, n = pp.n;
        const CNum two(2.0, 0.0);
        return 0.5 * eip(k) * zeta(k + 2.0) * gam(k + 1.0) *
               ((2.0 - pow_principal(two, -k)) * pow_principal(m, -k - 1.0) -
                2.0 * pow_principal(n, -k - 1.0));
    };
    id.grid_defaults.k = kDefK;
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.n = kDefMN;
    return id;
}

Identity make_I_LG_ATANH() {
    Identity id;
    id.id = "I_LG_ATANH";
    id.description = "atanh(x^m) with Lorentzian log kernel, log-gamma closed form";
    id.integrand_text = "atanh(x^m) / (x (a^2 + log^2 x))";
    id.closed_form_text =
        "pi/(4 a) log(a m Gamma(a m/(2 pi))^2 / (2 pi Gamma((a m + pi)/(2 pi))^2))";
    id.anchor = "limit form k -> -1 of (5a)";
    id.uses = {true, false, true, false, false};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_real_pos(pp.a, "a")) return r;
        if (auto r = need_real_pos(pp.m, "m")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const double a = pp.a.real();
        const CNum m = pp.m;
        return [a, m](double x, double xc) {
            const double lx = ln_x(x, xc);
            return atanh_pow(lx, m) / (x * (a * a + lx * lx));
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const double a = pp.a.real();
        const CNum am = a * pp.m;
        // Composed through log-gamma so the value is the analytic limit,
        // not some other branch of the printed single logarithm.
        const CNum inner = log_principal(am / (2.0 * kPi)) + 2.0 * lgam(am / (2.0 * kPi)) -
                           2.0 * lgam((am + kPi) / (2.0 * kPi));
        return kPi / (4.0 * a) * inner;
    };
    id.grid_defaults.a = {CNum(kPi, 0.0)};
    id.grid_defaults.m = kDefMN;
    return id;
}

Identity make_I_LG_LOG() {
    Identity id;
    id.id = "I_LG_LOG";
    id.description = "log((x^m+1)(1-x^n)) with Lorentzian log kernel, log-gamma closed form";
    id.integrand_text = "log((x^m+1)(1-x^n)) / (x (a^2 + log^2 x))";
    id.closed_form_text =
        "1/(2 a) (-2 pi log(Gamma((a m + pi)/(2 pi)) Gamma(a n/(2 pi) + 1)) - a m + a m log(i a) - a m log(2 i pi/m) - a n + a n log(i a) - a n log(2 i pi/n) + pi log(i pi a) - pi log(i/(2 n)))";
    id.anchor = "limit form k -> -1 of (5b)";
    id.uses = {true, false, true, true, false};
    id.status_hint = StatusHint::suspected_typo;  // mixed log(i a), log(i/(2n)) branches
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_real_pos(pp.a, "a")) return r;
        if (auto r = need_real_pos(pp.m, "m")) return r;
        if (auto r = need_real_pos(pp.n, "n")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const double a = pp.a.real();
        const CNum m = pp.m, n = pp.n;
        return [a, m, n](double x, double xc) {
            const double lx = ln_x(x, xc);
            return (log_one_plus_pow(lx, m) + log_one_minus_pow(lx, n)) /
                   (x * (a * a + lx * lx));
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const double a = pp.a.real();
        const CNum m = pp.m, n = pp.n;
        const CNum am = a * m, an = a * n;
        const CNum lg = lgam((am + kPi) / (2.0 * kPi)) + lgam(an / (2.0 * kPi) + 1.0);
        const CNum ia(0.0, a);
        const CNum r = -2.0 * kPi * lg - am + am * log_principal(ia) -
                       am * log_principal(2.0 * kImag * kPi / m) - an + an * log_principal(ia) -
                       an * log_principal(2.0 * kImag * kPi / n) +
                       kPi * log_principal(kImag * kPi * a) -
                       kPi * log_principal(kImag / (2.0 * n));
        return r / (2.0 * a);
    };
    id.grid_defaults.a = {CNum(kPi, 0.0)};
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.n = kDefMN;
    return id;
}

Identity make_I_DG_ATANH() {
    Identity id;
    id.id = "I_DG_ATANH";
    id.description = "atanh(x^m) with squared Lorentzian kernel, digamma closed form";
    id.integrand_text = "(a^2 - log^2 x) atanh(x^m) / (x (a^2 + log^2 x)^2)";
    id.closed_form_text =
        "1/4 (-m psi(a m/(2 pi) + 1) + m psi((a m + pi)/(2 pi)) + pi/a)";
    id.anchor = "limit form k -> -2 of (5a)";
    id.uses = {true, false, true, false, false};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_real_pos(pp.a, "a")) return r;
        if (auto r = need_real_pos(pp.m, "m")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const double a = pp.a.real();
        const CNum m = pp.m;
        return [a, m](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double den = a * a + lx * lx;
            return (a * a - lx * lx) * atanh_pow(lx, m) / (x * den * den);
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const double a = pp.a.real();
        const CNum am = a * pp.m;
        return 0.25 * (-pp.m * psi0(am / (2.0 * kPi) + 1.0) +
                       pp.m * psi0((am + kPi) / (2.0 * kPi)) + CNum(kPi / a, 0.0));
    };
    id.grid_defaults.a = {CNum(kPi, 0.0)};
    id.grid_defaults.m = kDefMN;
    return id;
}

Identity make_I_DG_LOG() {
    Identity id;
    id.id = "I_DG_LOG";
    id.description = "log((x^m+1)(1-x^n)) with squared Lorentzian kernel, digamma closed form";
    id.integrand_text = "(a^2 - log^2 x) log((x^m+1)(1-x^n)) / (x (a^2 + log^2 x)^2)";
    id.closed_form_text =
        "1/(2 a) (-a m log(i a) + a m log(i/m) + a m log(2 pi) + a m psi((a m + pi)/(2 pi)) - a n log(i a) + a n log(i/n) + a n log(2 pi) + a n psi(a n/(2 pi) + 1) - pi)";
    id.anchor = "limit form k -> -2 of (5b)";
    id.uses = {true, false, true, true, false};
    id.status_hint = StatusHint::suspected_typo;  // same unresolved branch mixture
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_real_pos(pp.a, "a")) return r;
        if (auto r = need_real_pos(pp.m, "m")) return r;
        if (auto r = need_real_pos(pp.n, "n")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const double a = pp.a.real();
        const CNum m = pp.m, n = pp.n;
        return [a, m, n](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double den = a * a + lx * lx;
            return (a * a - lx * lx) * (log_one_plus_pow(lx, m) + log_one_minus_pow(lx, n)) /
                   (x * den * den);
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const double a = pp.a.real();
        const CNum m = pp.m, n = pp.n;
        const CNum am = a * m, an = a * n;
        const CNum ia(0.0, a);
        const double l2pi = std::log(2.0 * kPi);
        const CNum r = -am * log_principal(ia) + am * log_principal(kImag / m) + am * l2pi +
                       am * psi0((am + kPi) / (2.0 * kPi)) - an * log_principal(ia) +
                       an * log_principal(kImag / n) + an * l2pi +
                       an * psi0(an / (2.0 * kPi) + 1.0) - kPi;
        return r / (2.0 * a);
    };
    id.grid_defaults.a = {CNum(kPi, 0.0)};
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.n = kDefMN;
    return id;
}

// Worked examples with baked-in parameters.  pp is ignored by design.
Identity make_fixed(std::string idname, std::string integrand_text, std::string closed_form_text,
                    std::string description, std::string anchor, Integrand f,
                    std::function<CNum()> rhs, double tol) {
    Identity id;
    id.id = std::move(idname);
    id.description = std::move(description);
    id.integrand_text = std::move(integrand_text);
    id.closed_form_text = std::move(closed_form_text);
    id.anchor = std::move(anchor);
    id.fixed_params = true;
    id.domain = [](const ParamPoint&) -> DomainResult { return std::nullopt; };
    id.lhs = [f](const ParamPoint&) { return f; };
    id.fills = no_fills;
    id.rhs = [rhs](const ParamPoint&) { return rhs(); };
    id.default_tol = tol;
    return id;
}

Identity make_E1() {
    return make_fixed(
        "E1", "(pi^3 - 12 pi log^2 x) atanh(x) / (x (4 log^2 x + pi^2)^3)", "(2 C - 1)/(16 pi)",
        "rational log kernel against atanh; Catalan closed form", "(5a) at a = -i, k = -3, m = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double l2 = lx * lx;
            double den = 4.0 * l2 + kPi * kPi;
            den = den * den * den;
            return CNum((kPi * kPi * kPi - 12.0 * kPi * l2) * atanh_real(x, xc) / (x * den), 0.0);
        },
        [] { return CNum((2.0 * catalan() - 1.0) / (16.0 * kPi), 0.0); }, 1e-8);
}

Identity make_E2() {
    return make_fixed(
        "E2", "log(log x) atanh(x) / x", "pi^2/24 (log(16 pi^3 / A^36) + 3 i pi)",
        "log-log weight against atanh; Glaisher closed form", "d/dk of (6a) at k = 0",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            return llog(lx) * (atanh_real(x, xc) / x);
        },
        [] {
            const double re = std::log(16.0) + 3.0 * std::log(kPi) - 36.0 * glaisher_log();
            return kPi * kPi / 24.0 * CNum(re, 3.0 * kPi);
        },
        1e-6);
}

Identity make_E3() {
    return make_fixed(
        "E3", "sqrt(log x) atanh(x) / x", "-1/16 i (sqrt(2) - 8) sqrt(pi) zeta(5/2)",
        "half-power log weight against atanh", "(6a) at k = 1/2",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lpow(lx, CNum(0.5, 0.0)) * (atanh_real(x, xc) / x);
        },
        [] {
            return CNum(0.0, -1.0 / 16.0) * (std::sqrt(2.0) - 8.0) * std::sqrt(kPi) *
                   zeta(CNum(2.5, 0.0));
        },
        1e-8);
}

Identity make_E4() {
    return make_fixed(
        "E4", "atanh(x) / (x sqrt(log x))", "1/4 i (sqrt(2) - 4) sqrt(pi) zeta(3/2)",
        "inverse half-power log weight against atanh", "(6a) at k = -1/2",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lpow(lx, CNum(-0.5, 0.0)) * (atanh_real(x, xc) / x);
        },
        [] {
            return CNum(0.0, 0.25) * (std::sqrt(2.0) - 4.0) * std::sqrt(kPi) * zeta(CNum(1.5, 0.0));
        },
        1e-6);
}

Identity make_E5() {
    return make_fixed(
        "E5", "log(x) log(log x) atanh(x) / x",
        "1/8 (-7 zeta'(3) + zeta(3) (-7 + 7 gamma - 7 i pi - log 2))",
        "log and log-log weights against atanh", "d/dk of (6a) at k = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lx * llog(lx) * (atanh_real(x, xc) / x);
        },
        [] {
            const CNum z3 = zeta(CNum(3.0, 0.0));
            return (-7.0 * zetad(CNum(3.0, 0.0)) +
                    z3 * CNum(-7.0 + 7.0 * euler_gamma() - std::log(2.0), -7.0 * kPi)) /
                   8.0;
        },
        1e-6);
}

Identity make_E6() {
    return make_fixed(
        "E6", "log^2(x) log(log x) atanh(x) / x",
        "15 zeta'(4)/8 + pi^4 (45 - 30 gamma + 30 i pi + log 4)/1440",
        "squared log and log-log weights against atanh", "d/dk of (6a) at k = 2",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            return lx * lx * llog(lx) * (atanh_real(x, xc) / x);
        },
        [] {
            const double pi4 = kPi * kPi * kPi * kPi;
            return 15.0 * zetad(CNum(4.0, 0.0)) / 8.0 +
                   pi4 * CNum(45.0 - 30.0 * euler_gamma() + std::log(4.0), 30.0 * kPi) / 1440.0;
        },
        1e-6);
}

Identity make_E7() {
    return make_fixed(
        "E7", "log((1-x)(x^2+1)) log(log x) / x", "1/8 (-6 zeta'(2) + (gamma - i pi) pi^2)",
        "mixed cubic factor under log-log weight", "d/dk of (6b) at k = 0, m = 2, n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx = (xc < 0.0) ? std::log(-xc) : std::log1p(-x);
            return CNum(log_1mx + std::log1p(x * x), 0.0) * llog(lx) / x;
        },
        [] {
            return (-6.0 * zetad(CNum(2.0, 0.0)) + CNum(euler_gamma(), -kPi) * kPi * kPi) / 8.0;
        },
        1e-6);
}

Identity make_E8() {
    return make_fixed(
        "E8", "log(1-x^2) log(log x) / x", "pi^2/12 (log(A^12/pi) - i pi)",
        "log(1-x^2) under log-log weight; Glaisher closed form", "d/dk of (6b) at k = 0, m = n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx2 =
                ((xc < 0.0) ? std::log(-xc) : std::log1p(-x)) + std::log1p(x);
            return CNum(log_1mx2, 0.0) * llog(lx) / x;
        },
        [] {
            const double re = 12.0 * glaisher_log() - std::log(kPi);
            return kPi * kPi / 12.0 * CNum(re, -kPi);
        },
        1e-6);
}

Identity make_E9() {
    return make_fixed(
        "E9", "sqrt(log x) log(1-x^2) / x", "-1/4 i sqrt(pi/2) zeta(5/2)",
        "half-power log weight against log(1-x^2)", "(6b) at k = 1/2, m = n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx2 =
                ((xc < 0.0) ? std::log(-xc) : std::log1p(-x)) + std::log1p(x);
            return lpow(lx, CNum(0.5, 0.0)) * (log_1mx2 / x);
        },
        [] { return CNum(0.0, -0.25) * std::sqrt(kPi / 2.0) * zeta(CNum(2.5, 0.0)); }, 1e-8);
}

Identity make_E10() {
    return make_fixed(
        "E10", "log(1-x^2) / (x sqrt(log x))", "i sqrt(pi/2) zeta(3/2)",
        "inverse half-power log weight against log(1-x^2)", "(6b) at k = -1/2, m = n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx2 =
                ((xc < 0.0) ? std::log(-xc) : std::log1p(-x)) + std::log1p(x);
            return lpow(lx, CNum(-0.5, 0.0)) * (log_1mx2 / x);
        },
        [] { return CNum(0.0, 1.0) * std::sqrt(kPi / 2.0) * zeta(CNum(1.5, 0.0)); }, 1e-6);
}

Identity make_E11() {
    return make_fixed(
        "E11", "log(x) log(1-x^2) log(log x) / x",
        "1/4 (zeta'(3) + zeta(3) (1 - gamma + i pi - log 2))",
        "log and log-log weights against log(1-x^2)", "d/dk of (6b) at k = m = n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx2 =
                ((xc < 0.0) ? std::log(-xc) : std::log1p(-x)) + std::log1p(x);
            return lx * log_1mx2 * llog(lx) / x;
        },
        [] {
            const CNum z3 = zeta(CNum(3.0, 0.0));
            return (zetad(CNum(3.0, 0.0)) +
                    z3 * CNum(1.0 - euler_gamma() - std::log(2.0), kPi)) /
                   4.0;
        },
        1e-6);
}

Identity make_E12() {
    return make_fixed(
        "E12", "log(1-x^2) log(log x) / (x sqrt(log x))",
        "sqrt(pi/2) (i zeta'(3/2) - i zeta(3/2) (gamma - i pi + log 8))",
        "log-log and inverse half-power log weights against log(1-x^2)",
        "d/dk of (6b) at k = -1/2, m = n = 1",
        [](double x, double xc) {
            const double lx = ln_x(x, xc);
            const double log_1mx2 =
                ((xc < 0.0) ? std::log(-xc) : std::log1p(-x)) + std::log1p(x);
            return log_1mx2 * llog(lx) * lpow(lx, CNum(-0.5, 0.0)) / x;
        },
        [] {
            const CNum z = zeta(CNum(1.5, 0.0));
            const CNum zd = zetad(CNum(1.5, 0.0));
            return std::sqrt(kPi / 2.0) *
                   (kImag * zd - kImag * z * CNum(euler_gamma() + std::log(8.0), -kPi));
        },
        1e-6);
}

Identity make_I_DD1() {
    Identity id;
    id.id = "I_DD1";
    id.description = "m-derivative family over (x^(m+1)+1)(x^(p+1)+1)";
    id.integrand_text = "log^(k+1)(x) (x^m - x^p) / ((x^(m+1)+1)(x^(p+1)+1))";
    id.closed_form_text =
        "-2^(-k-1) (2^(k+1)-1) e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(m+1))^k/(m+1)^2 - (i/(p+1))^k/(p+1)^2)";
    id.anchor = "family (d1): d/dm of (4a)";
    id.uses = {false, true, true, false, true};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = k_after_gamma2(pp.k)) return r;
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_re_nonneg(pp.p, "p")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum k = pp.k, m = pp.m, p = pp.p;
        return [k, m, p](double x, double xc) {
            const double lx = ln_x(x, xc);
            const CNum num = pow_diff(lx, m, p);  // x^m - x^p
            const CNum d1 = 2.0 - one_minus_pow(lx, m + 1.0);       // x^(m+1) + 1
            const CNum d2 = 2.0 - one_minus_pow(lx, p + 1.0);
            return lpow(lx, k + 1.0) * ((num / d1) / d2);
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k, m = pp.m, p = pp.p;
        const CNum two(2.0, 0.0);
        const CNum m1 = m + 1.0, p1 = p + 1.0;
        return -pow_principal(two, -k - 1.0) * (pow_principal(two, k + 1.0) - 1.0) *
               std::exp(kImag * kPi * k / 2.0) * zeta(k + 2.0) * gam(k + 2.0) *
               (pow_principal(kImag / m1, k) / (m1 * m1) - pow_principal(kImag / p1, k) / (p1 * p1));
    };
    id.grid_defaults.k = kDefK;
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.p = kDefP;
    return id;
}

Identity make_E13() {
    Identity id;
    id.id = "E13";
    id.description = "limit form k -> -2 of the m-derivative family";
    id.integrand_text = "(x^m - x^p) / ((x^(m+1)+1)(x^(p+1)+1) log x)";
    id.closed_form_text = "1/2 log((m+1)/(p+1))";
    id.anchor = "limit form k -> -2 of (d1)";
    id.uses = {false, false, true, false, true};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.m, "m")) return r;
        if (auto r = need_re_nonneg(pp.p, "p")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum m = pp.m, p = pp.p;
        return [m, p](double x, double xc) {
            const double lx = ln_x(x, xc);
            const CNum num = pow_diff(lx, m, p);
            const CNum d1 = 2.0 - one_minus_pow(lx, m + 1.0);
            const CNum d2 = 2.0 - one_minus_pow(lx, p + 1.0);
            return ((num / d1) / d2) / lx;
        };
    };
    id.fills = [](const ParamPoint& pp) {
        return std::vector<LimitFill>{{1.0, (pp.m - pp.p) / 4.0}};
    };
    id.rhs = [](const ParamPoint& pp) {
        return 0.5 * log_principal((pp.m + 1.0) / (pp.p + 1.0));
    };
    id.grid_defaults.m = kDefMN;
    id.grid_defaults.p = kDefP;
    return id;
}

Identity make_I_DD2() {
    Identity id;
    id.id = "I_DD2";
    id.description = "n-derivative family over (x^(n+1)-1)(x^(p+1)-1)";
    id.integrand_text = "log^(k+1)(x) (x^n - x^p) / ((x^(n+1)-1)(x^(p+1)-1))";
    id.closed_form_text =
        "e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(p+1))^k/(p+1)^2 - (i/(n+1))^k/(n+1)^2)";
    id.anchor = "family (d2): d/dn of (4b)";
    id.uses = {false, true, false, true, true};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = k_after_gamma2(pp.k)) return r;
        if (auto r = need_re_pos(pp.n, "n")) return r;
        if (auto r = need_re_nonneg(pp.p, "p")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum k = pp.k, n = pp.n, p = pp.p;
        return [k, n, p](double x, double xc) {
            const double lx = ln_x(x, xc);
            const CNum num = pow_diff(lx, n, p);  // x^n - x^p
            const CNum d1 = expm1_c((n + 1.0) * lx);                // x^(n+1) - 1
            const CNum d2 = expm1_c((p + 1.0) * lx);
            return lpow(lx, k + 1.0) * ((num / d1) / d2);
        };
    };
    id.fills = no_fills;
    id.rhs = [](const ParamPoint& pp) {
        const CNum k = pp.k, n = pp.n, p = pp.p;
        const CNum n1 = n + 1.0, p1 = p + 1.0;
        return std::exp(kImag * kPi * k / 2.0) * zeta(k + 2.0) * gam(k + 2.0) *
               (pow_principal(kImag / p1, k) / (p1 * p1) - pow_principal(kImag / n1, k) / (n1 * n1));
    };
    id.grid_defaults.k = kDefK;
    id.grid_defaults.n = kDefMN;
    id.grid_defaults.p = kDefP;
    return id;
}

Identity make_E14() {
    Identity id;
    id.id = "E14";
    id.description = "n-derivative family at k = 1";
    id.integrand_text = "log^2(x) (x^n - x^p) / ((x^(n+1)-1)(x^(p+1)-1))";
    id.closed_form_text = "2 zeta(3) (1/(n+1)^3 - 1/(p+1)^3)";
    id.anchor = "(d2) at k = 1";
    id.uses = {false, false, false, true, true};
    id.domain = [](const ParamPoint& pp) -> DomainResult {
        if (auto r = need_re_pos(pp.n, "n")) return r;
        if (auto r = need_re_nonneg(pp.p, "p")) return r;
        return std::nullopt;
    };
    id.lhs = [](const ParamPoint& pp) -> Integrand {
        const CNum n = pp.n, p = pp.p;
        return [n, p](double x, double xc) {
            const double lx = ln_x(x, xc);
            const CNum num = pow_diff(lx, n, p);
            const CNum d1 = expm1_c((n + 1.0) * lx);
            const CNum d2 = expm1_c((p + 1.0) * lx);
            return (lx * lx) * ((num / d1) / d2);
        };
    };
    id.fills = [](const ParamPoint&) { return std::vector<LimitFill>{{1.0, CNum(0.0, 0.0)}}; };
    id.rhs = [](const ParamPoint& pp) {
        const CNum n1 = pp.n + 1.0, p1 = pp.p + 1.0;
        return 2.0 * zeta(CNum(3.0, 0.0)) * (1.0 / (n1 * n1 * n1) - 1.0 / (p1 * p1 * p1));
    };
    id.grid_defaults.n = kDefMN;
    id.grid_defaults.p = kDefP;
    return id;
}

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;
    reg.push_back(make_I_4A());
    reg.push_back(make_I_4B());
    reg.push_back(make_I_5A());
    reg.push_back(make_I_5B());
    reg.push_back(make_I_6A());
    reg.push_back(make_I_6B());
    reg.push_back(make_I_LG_ATANH());
    reg.push_back(make_I_LG_LOG());
    reg.push_back(make_I_DG_ATANH());
    reg.push_back(make_I_DG_LOG());
    reg.push_back(make_E1());
    reg.push_back(make_E2());
    reg.push_back(make_E3());
    reg.push_back(make_E4());
    reg.push_back(make_E5());
    reg.push_back(make_E6());
    reg.push_back(make_E7());
    reg.push_back(make_E8());
    reg.push_back(make_E9());
    reg.push_back(make_E10());
    reg.push_back(make_E11());
    reg.push_back(make_E12());
    reg.push_back(make_I_DD1());
    reg.push_back(make_E13());
    reg.push_back(make_I_DD2());
    reg.push_back(make_E14());
    return reg;
}

}  // namespace

std::vector<ParamPoint> product_grid(const GridDefaults& g) {
    std::vector<ParamPoint> grid;
    for (const CNum& a : g.a)
        for (const CNum& k : g.k)
            for (const CNum& m : g.m)
                for (const CNum& n : g.n)
                    for (const CNum& p : g.p) grid.push_back(ParamPoint{a, k, m, n, p});
    return grid;
}

std::vector<ParamPoint> default_grid(const Identity& ident) {
    return product_grid(ident.grid_defaults);
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

const Identity& find(const std::string& id) {
    static const std::map<std::string, std::size_t>& index = [] {
        static std::map<std::string, std::size_t> idx;
        const auto& reg = registry();
        for (std::size_t i = 0; i < reg.size(); ++i) idx[reg[i].id] = i;
        return idx;
    }();
    const auto it = index.find(id);
    if (it == index.end()) throw UnknownIdentity("unknown identity: " + id);
    return registry()[it->second];
}

std::optional<std::string> check_domain(const std::string& id, const ParamPoint& pp) {
    return find(id).domain(pp);
}

namespace {
void require_in_domain(const Identity& ident, const ParamPoint& pp) {
    if (auto violation = ident.domain(pp)) {
        throw DomainViolation(ident.id + ": " + *violation);
    }
}
}  // namespace

CNum eval_rhs(const std::string& id, const ParamPoint& pp) {
    const Identity& ident = find(id);
    require_in_domain(ident, pp);
    const CNum v = ident.rhs(pp);
    if (!is_finite(v)) throw OverflowError(id + ": closed form overflowed double precision");
    return v;
}

CNum eval_rhs_alt(const std::string& id, const ParamPoint& pp) {
    const Identity& ident = find(id);
    if (!ident.alt) throw DomainError(id + " has no alternative reading");
    require_in_domain(ident, pp);
    const CNum v = ident.alt->rhs(pp);
    if (!is_finite(v)) throw OverflowError(id + ": closed form overflowed double precision");
    return v;
}

quad::QuadResult eval_lhs(const std::string& id, const ParamPoint& pp, const quad::QuadConfig& qcfg) {
    const Identity& ident = find(id);
    require_in_domain(ident, pp);
    const auto fills = ident.fills(pp);
    return quad::integrate_with_limit_fill(ident.lhs(pp), fills, qcfg);
}

}  // namespace zetatab::identities
