#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "zetatab/quad.hpp"

using namespace zetatab;
using namespace zetatab::quad;

namespace {

// |ln x| computed through the endpoint distance.
double abs_ln(double x, double xc) { return xc < 0.0 ? -std::log1p(xc) : -std::log(x); }

void check_invariants(const QuadResult& r, const QuadConfig& cfg) {
    CHECK(r.evaluations > 0);
    CHECK(r.levels_used >= 1);
    if (r.converged) CHECK(r.err_estimate <= cfg.abs_tol);
}

}  // namespace

TEST_SUITE_BEGIN("quad");

TEST_CASE("log-squared integrates to 2") {
    QuadConfig cfg;
    const auto r = integrate_unit([](double x) { return CNum(std::log(x) * std::log(x), 0); }, cfg);
    check_invariants(r, cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value - CNum(2, 0)) < 1e-12);
}

TEST_CASE("inverse square root integrates to 2") {
    QuadConfig cfg;
    const auto r = integrate_unit([](double x) { return CNum(1.0 / std::sqrt(x), 0); }, cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value - CNum(2, 0)) < 1e-12);
}

TEST_CASE("|ln x|^p integrates to Gamma(p+1)") {
    QuadConfig cfg;
    for (double p : {-0.5, 0.5, 2.0}) {
        const auto r = integrate_unit(
            Integrand([p](double x, double xc) { return CNum(std::pow(abs_ln(x, xc), p), 0); }), cfg);
        CHECK(r.converged);
        CHECK(std::abs(r.value.real() - std::tgamma(p + 1.0)) < 1e-9);
        CHECK(std::abs(r.value.imag()) < 1e-12);
    }
}

TEST_CASE("log(1 - x^2)/x integrates to -pi^2/12") {
    // termwise oracle: -sum x^(2n)/n integrates to -(1/2) zeta(2)
    QuadConfig cfg;
    const auto r = integrate_unit(
        Integrand([](double x, double xc) {
            const double l1mx = (xc < 0.0) ? std::log(-xc) : std::log1p(-x);
            return CNum((l1mx + std::log1p(x)) / x, 0);
        }),
        cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() + kPi * kPi / 12.0) < 1e-10);
}

TEST_CASE("limit fill handles the removable singularity of (x-1)/ln x") {
    QuadConfig cfg;
    const std::array<LimitFill, 1> fills{{{1.0, CNum(1, 0)}}};
    const auto r = integrate_with_limit_fill(
        [](double x) { return CNum((x - 1.0) / std::log(x), 0); }, fills, cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - std::log(2.0)) < 1e-9);
}

TEST_CASE("limit fill: (x^2 - x)/ln x integrates to log(3/2)") {
    QuadConfig cfg;
    const std::array<LimitFill, 1> fills{{{1.0, CNum(1, 0)}}};
    const auto r = integrate_with_limit_fill(
        [](double x) { return CNum((x * x - x) / std::log(x), 0); }, fills, cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - std::log(1.5)) < 1e-9);
}

TEST_CASE("constant integrand, no fills") {
    QuadConfig cfg;
    const auto r = integrate_with_limit_fill([](double) { return CNum(1, 0); },
                                             std::span<const LimitFill>{}, cfg);
    CHECK(r.converged);
    CHECK(std::abs(r.value - CNum(1, 0)) < 1e-13);
}

TEST_CASE("property: linearity on random polynomials") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    QuadConfig cfg;
    for (int trial = 0; trial < 5; ++trial) {
        std::array<CNum, 6> cf{}, cg{};
        for (auto& c : cf) c = CNum(coeff(rng), coeff(rng));
        for (auto& c : cg) c = CNum(coeff(rng), coeff(rng));
        const auto poly = [](const std::array<CNum, 6>& c, double x) {
            CNum v(0, 0);
            for (int i = 5; i >= 0; --i) v = v * x + c[static_cast<std::size_t>(i)];
            return v;
        };
        const CNum alpha(2.0, -1.0), beta(0.5, 0.25);
        const auto rf = integrate_unit([&](double x) { return poly(cf, x); }, cfg);
        const auto rg = integrate_unit([&](double x) { return poly(cg, x); }, cfg);
        const auto rfg = integrate_unit(
            [&](double x) { return alpha * poly(cf, x) + beta * poly(cg, x); }, cfg);
        const double budget = std::abs(alpha) * rf.err_estimate + std::abs(beta) * rg.err_estimate +
                              rfg.err_estimate + 1e-12;
        CHECK(std::abs(rfg.value - alpha * rf.value - beta * rg.value) <= budget);
    }
}

TEST_CASE("property: complex integration equals componentwise integration") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-30;  // force a fixed number of levels on all three runs
    cfg.max_level = 4;    // stop before any level-to-level difference hits exactly zero
    const auto u = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    const auto v = [](double x) { return 1.0 / (1.0 + x * x); };
    const auto rc = integrate_unit([&](double x) { return CNum(u(x), v(x)); }, cfg);
    const auto ru = integrate_unit([&](double x) { return CNum(u(x), 0); }, cfg);
    const auto rv = integrate_unit([&](double x) { return CNum(v(x), 0); }, cfg);
    CHECK(rc.value.real() == ru.value.real());
    CHECK(rc.value.imag() == rv.value.real());
}

TEST_CASE("property: level-to-level error is non-increasing on analytic integrands") {
    double prev = std::numeric_limits<double>::infinity();
    for (int level = 3; level <= 8; ++level) {
        QuadConfig cfg;
        cfg.abs_tol = 1e-300;  // never converges, runs all levels
        cfg.max_level = level;
        const auto r = integrate_unit([](double x) { return CNum(1.0 / (1.0 + x), 0); }, cfg);
        CHECK(r.err_estimate <= prev + 1e-15);
        prev = r.err_estimate;
    }
}

TEST_CASE("accumulated overflow surfaces as an error, never as inf") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-300;  // keep refining until the running sum overflows
    CHECK_THROWS_AS((void)integrate_unit([](double) { return CNum(1e308, 0); }, cfg),
                    OverflowError);
}

TEST_CASE("non-finite integrand raises") {
    QuadConfig cfg;
    CHECK_THROWS_AS((void)integrate_unit(
                        [](double x) {
                            if (x > 0.4 && x < 0.6)
                                return CNum(std::numeric_limits<double>::quiet_NaN(), 0);
                            return CNum(1, 0);
                        },
                        cfg),
                    NonFiniteIntegrand);
}

TEST_CASE("config validation") {
    QuadConfig bad;
    bad.max_level = 2;
    CHECK_THROWS_AS((void)integrate_unit([](double) { return CNum(1, 0); }, bad), DomainError);
    bad = QuadConfig{};
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS((void)integrate_unit([](double) { return CNum(1, 0); }, bad), DomainError);
    const std::array<LimitFill, 1> bad_fill{{{1.5, CNum(0, 0)}}};
    CHECK_THROWS_AS((void)integrate_with_limit_fill([](double) { return CNum(1, 0); }, bad_fill,
                                                    QuadConfig{}),
                    DomainError);
}

TEST_CASE("non-convergence is reported, not thrown") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-300;
    cfg.max_level = 4;
    const auto r = integrate_unit([](double x) { return CNum(std::cos(20.0 * x), 0); }, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.levels_used == 5);
}

TEST_CASE("instrumentation counter advances") {
    const long long before = integration_count();
    (void)integrate_unit([](double) { return CNum(1, 0); }, QuadConfig{});
    CHECK(integration_count() == before + 1);
}

TEST_SUITE_END();
