#include "zetatab/quad.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace zetatab::quad {

namespace {

constexpr int kMaxLevelHard = 16;

// One abscissa of the rule at t > 0.  u is the distance from the nearer
// endpoint (exact in the transformed domain), w = dx/dt.  By symmetry the
// same entry serves the mirrored node at -t: the pair contributes
// f(u) and f(1 - u), both with weight w.
struct Node {
    double u;
    double w;
};

// t = 0 node: x = 1/2, dx/dt = pi/4.
constexpr double kCenterWeight = kPi / 4.0;

struct NodeTables {
    std::array<std::vector<Node>, kMaxLevelHard + 1> levels;  // levels[L]: new nodes of level L
    std::atomic<int> built{-1};
    std::mutex build_mutex;
};

NodeTables& tables() {
    static NodeTables t;
    return t;
}

// Smallest endpoint distance worth tabulating; chosen so u stays a normal
// double and below any sensible clip_eps.
constexpr double kTableCutoff = 1e-305;

Node make_node(double t) {
    const double z = kPi * std::sinh(t);  // z > 0 for t > 0
    const double e = std::exp(-z);
    const double near_side = e / (1.0 + e);   // sigma(-z) = 1 - x(t), exact to ~1 ulp
    const double far_side = 1.0 / (1.0 + e);  // sigma(z)  = x(t)
    return Node{near_side, kPi * std::cosh(t) * near_side * far_side};
}

void build_levels_up_to(int level) {
    NodeTables& nt = tables();
    if (nt.built.load(std::memory_order_acquire) >= level) return;
    std::scoped_lock lock(nt.build_mutex);
    for (int lv = nt.built.load(std::memory_order_relaxed) + 1; lv <= level; ++lv) {
        std::vector<Node>& out = nt.levels[static_cast<std::size_t>(lv)];
        const double h = std::ldexp(1.0, -lv);  // 2^-lv
        // Level 0 holds all integer abscissae; level L >= 1 only the odd
        // multiples of its step.
        const int stride = (lv == 0) ? 1 : 2;
        for (int j = 1;; j += stride) {
            const Node n = make_node(h * j);
            if (n.u < kTableCutoff) break;
            out.push_back(n);
        }
        nt.built.store(lv, std::memory_order_release);
    }
}

std::atomic<long long> g_integrations{0};

struct Accumulator {
    const Integrand* f;
    const QuadConfig* cfg;
    long long evaluations = 0;

    CNum eval(double x, double xc) {
        ++evaluations;
        const CNum v = (*f)(x, xc);
        if (!is_finite(v)) {
            std::ostringstream msg;
            msg << "integrand returned a non-finite value at x = " << x << " (endpoint distance "
                << std::abs(xc) << ")";
            throw NonFiniteIntegrand(msg.str());
        }
        return v;
    }

    // Contribution of one tabulated node and its mirror.
    CNum node_pair(const Node& n) {
        if (n.u <= cfg->clip_eps) return CNum(0.0, 0.0);
        // Left node: x = u exactly.  Right node: the double 1 - u may round
        // (up to 1.0 itself); xc carries the exact distance.
        return n.w * (eval(n.u, n.u) + eval(1.0 - n.u, -n.u));
    }
};

void validate(const QuadConfig& cfg) {
    if (!(cfg.abs_tol > 0.0)) throw DomainError("QuadConfig: abs_tol must be positive");
    if (cfg.max_level < 3 || cfg.max_level > kMaxLevelHard) {
        throw DomainError("QuadConfig: max_level must lie in [3, 16]");
    }
    if (!(cfg.clip_eps >= 0.0) || cfg.clip_eps >= 0.5) {
        throw DomainError("QuadConfig: clip_eps must lie in [0, 0.5)");
    }
}

}  // namespace

QuadResult integrate_unit(const Integrand& f, const QuadConfig& cfg) {
    validate(cfg);
    g_integrations.fetch_add(1, std::memory_order_relaxed);
    build_levels_up_to(cfg.max_level);

    Accumulator acc{&f, &cfg};
    const auto& levels = tables().levels;

    // Level 0: h = 1, trapezoid over the integer abscissae.
    CNum raw = kCenterWeight * acc.eval(0.5, 0.5);
    for (const Node& n : levels[0]) raw += acc.node_pair(n);

    QuadResult res;
    double h = 1.0;
    CNum prev = raw * h;
    res.levels_used = 1;
    res.err_estimate = std::numeric_limits<double>::infinity();

    for (int lv = 1; lv <= cfg.max_level; ++lv) {
        CNum fresh(0.0, 0.0);
        for (const Node& n : levels[static_cast<std::size_t>(lv)]) fresh += acc.node_pair(n);
        h *= 0.5;
        raw += fresh;  // raw accumulates sum of dx/dt * f over all abscissae seen so far
        const CNum cur = raw * h;
        ++res.levels_used;
        res.err_estimate = std::abs(cur - prev);
        res.value = cur;
        prev = cur;
        // The first two refinements of the coarse h = 1 grid are too rough
        // for the difference heuristic to be trusted.
        if (lv >= 2 && res.err_estimate <= cfg.abs_tol) {
            res.converged = true;
            break;
        }
    }
    res.evaluations = acc.evaluations;
    if (!is_finite(res.value)) {
        throw OverflowError("integrate_unit: accumulated sum overflowed double precision");
    }
    return res;
}

QuadResult integrate_with_limit_fill(const Integrand& f, std::span<const LimitFill> fills,
                                     const QuadConfig& cfg) {
    for (const LimitFill& fill : fills) {
        if (!(fill.x0 > 0.0 && fill.x0 <= 1.0)) {
            throw DomainError("integrate_with_limit_fill: fill point must lie in (0, 1]");
        }
        if (!is_finite(fill.limit)) {
            throw DomainError("integrate_with_limit_fill: fill limit must be finite");
        }
    }
    std::vector<LimitFill> owned(fills.begin(), fills.end());
    Integrand wrapped = [g = f, owned](double x, double xc) -> CNum {
        for (const LimitFill& fill : owned) {
            const double dist =
                (fill.x0 == 1.0 && xc < 0.0) ? -xc : std::abs(x - fill.x0);
            if (dist <= kFillRadius) return fill.limit;
        }
        return g(x, xc);
    };
    return integrate_unit(wrapped, cfg);
}

long long integration_count() { return g_integrations.load(std::memory_order_relaxed); }

}  // namespace zetatab::quad
