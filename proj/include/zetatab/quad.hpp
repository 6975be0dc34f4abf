#pragma once

#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "zetatab/complex_ops.hpp"
#include "zetatab/errors.hpp"

namespace zetatab::quad {

// Integrands receive the node position x in (0, 1) together with xc, the
// exact signed distance to the nearest endpoint: xc = x on the left half,
// xc = x - 1 (negative) on the right half.  xc resolves positions far closer
// to 1 than the double x itself can represent, which is what makes
// integrands with x -> 1 singularities evaluable to full accuracy.
using Integrand = std::function<CNum(double x, double xc)>;

// A removable singularity: whenever a node falls within 1e-8 of x0 the
// supplied analytic limit is used instead of evaluating the integrand.
struct LimitFill {
    double x0;
    CNum limit;
};

inline constexpr double kFillRadius = 1e-8;

struct QuadConfig {
    double abs_tol = 1e-10;
    int max_level = 12;        // in [3, 16]
    double clip_eps = 1e-300;  // nodes strictly inside (clip_eps, 1 - clip_eps)
};

struct QuadResult {
    CNum value{0.0, 0.0};
    double err_estimate = 0.0;  // |S_L - S_{L-1}| of the last refinement
    int levels_used = 0;
    long long evaluations = 0;
    bool converged = false;
};

// Tanh-sinh (double-exponential) quadrature of f over (0, 1):
// x(t) = 1/(1 + exp(-pi sinh t)) on dyadically refined trapezoid grids.
// Robust to integrable endpoint singularities on either side.  Returns at
// the first level whose successive-level difference is <= abs_tol;
// non-convergence is reported through converged = false, not an error.
QuadResult integrate_unit(const Integrand& f, const QuadConfig& cfg = {});

// Same rule with removable singularities patched by caller-supplied limits.
QuadResult integrate_with_limit_fill(const Integrand& f, std::span<const LimitFill> fills,
                                     const QuadConfig& cfg = {});

// Convenience adapters for plain f(x) callables.  A position closer to an
// endpoint than one ulp rounds onto it and cannot be communicated through a
// bare double, so such nodes contribute zero here; integrands that are
// singular at an endpoint should use the (x, xc) form instead.
namespace detail {
template <typename F>
Integrand adapt_plain(F&& f) {
    return [fn = std::forward<F>(f)](double x, double) -> CNum {
        if (x <= 0.0 || x >= 1.0) return CNum(0.0, 0.0);
        return fn(x);
    };
}
}  // namespace detail

template <typename F>
    requires std::is_invocable_r_v<CNum, F, double> && (!std::is_invocable_v<F, double, double>)
QuadResult integrate_unit(F&& f, const QuadConfig& cfg = {}) {
    return integrate_unit(detail::adapt_plain(std::forward<F>(f)), cfg);
}

template <typename F>
    requires std::is_invocable_r_v<CNum, F, double> && (!std::is_invocable_v<F, double, double>)
QuadResult integrate_with_limit_fill(F&& f, std::span<const LimitFill> fills, const QuadConfig& cfg = {}) {
    return integrate_with_limit_fill(detail::adapt_plain(std::forward<F>(f)), fills, cfg);
}

// Number of integrations started since process start.  Lets tests assert
// that closed-form evaluation paths never touch the quadrature.
long long integration_count();

}  // namespace zetatab::quad
