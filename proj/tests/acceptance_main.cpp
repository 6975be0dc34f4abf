// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zetatab/cli.hpp"
#include "zetatab/identities.hpp"
#include "zetatab/quad.hpp"
#include "zetatab/specfun.hpp"
#include "zetatab/verify.hpp"

using namespace zetatab;
using identities::ParamPoint;
using verify::Verdict;

namespace {

int g_failures = 0;
std::vector<std::string> g_details;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct Criterion {
    int number;
    const char* title;
    bool ok = true;
    double started = 0.0;

    Criterion(int num, const char* t) : number(num), title(t) { started = now_seconds(); }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            g_details.push_back("  criterion " + std::to_string(number) + ": " + what);
        }
    }
    double elapsed() const { return now_seconds() - started; }
    void finish() {
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, title,
                    elapsed());
        if (!ok) ++g_failures;
    }
};

ParamPoint pt(CNum a, CNum k, CNum m, CNum n, CNum p) { return ParamPoint{a, k, m, n, p}; }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void criterion_1() {
    Criterion c(1, "E13 grid m in {1,2,5}, p in {0,1,3} confirmed at 1e-8");
    std::vector<ParamPoint> grid;
    for (double m : {1.0, 2.0, 5.0})
        for (double p : {0.0, 1.0, 3.0}) grid.push_back(pt({1, 0}, {1, 0}, {m, 0}, {1, 0}, {p, 0}));
    const auto v = verify::sweep("E13", grid, 1e-8);
    c.require(v.verdict == Verdict::CONFIRMED, "verdict not CONFIRMED");
    c.require(v.records.size() == 9, "expected 9 records");
    for (const auto& r : v.records) {
        c.require(r.rel_err <= 1e-8, "rel_err " + fmt(r.rel_err) + " above 1e-8");
        const double target =
            0.5 * std::log((r.params.m.real() + 1.0) / (r.params.p.real() + 1.0));
        c.require(std::abs(r.rhs - CNum(target, 0)) < 1e-12, "closed form drifted from target");
    }
    c.require(c.elapsed() < 5.0, "runtime above 5 s");
    c.finish();
}

void criterion_2() {
    Criterion c(2, "E14 grid n in {1,2}, p in {0,1} confirmed at 1e-8");
    std::vector<ParamPoint> grid;
    for (double n : {1.0, 2.0})
        for (double p : {0.0, 1.0}) grid.push_back(pt({1, 0}, {1, 0}, {1, 0}, {n, 0}, {p, 0}));
    const auto v = verify::sweep("E14", grid, 1e-8);
    c.require(v.verdict == Verdict::CONFIRMED, "verdict not CONFIRMED");
    const double z3 = oracles::zeta_direct(3.0);
    for (const auto& r : v.records) {
        c.require(r.rel_err <= 1e-8, "rel_err " + fmt(r.rel_err) + " above 1e-8");
        const double n1 = r.params.n.real() + 1.0, p1 = r.params.p.real() + 1.0;
        const double target = 2.0 * z3 * (1.0 / (n1 * n1 * n1) - 1.0 / (p1 * p1 * p1));
        c.require(std::abs(r.rhs - CNum(target, 0)) < 1e-10, "closed form drifted from target");
    }
    c.finish();
}

void criterion_3() {
    Criterion c(3, "E1 passes against the in-house Catalan constant at 1e-8");
    const auto rec = verify::verify_point("E1", ParamPoint{}, 1e-8);
    c.require(rec.status == verify::Status::PASS, "record not PASS");
    const double target = (2.0 * specfun::constant(specfun::Constant::catalan) - 1.0) / (16.0 * kPi);
    c.require(std::abs(rec.lhs - CNum(target, 0)) <= 1e-8,
              "|lhs - (2C-1)/(16 pi)| = " + fmt(std::abs(rec.lhs - CNum(target, 0))));
    c.finish();
}

void criterion_4() {
    Criterion c(4, "(6a) grid k in {0.5,1,2,3} confirmed at 1e-8; k=2 value is pi^4/48");
    std::vector<ParamPoint> grid;
    for (double k : {0.5, 1.0, 2.0, 3.0}) grid.push_back(pt({1, 0}, {k, 0}, {1, 0}, {1, 0}, {0, 0}));
    const auto v = verify::sweep("I_6A", grid, 1e-8);
    c.require(v.verdict == Verdict::CONFIRMED, "verdict not CONFIRMED");
    for (const auto& r : v.records) c.require(r.rel_err <= 1e-8, "rel_err above 1e-8");
    const double pi4 = kPi * kPi * kPi * kPi;
    c.require(std::abs(v.records[2].rhs - CNum(pi4 / 48.0, 0)) < 1e-12, "k=2 value is not pi^4/48");
    // complex agreement at k = 0.5: real and imaginary parts separately
    const auto& half = v.records[0];
    c.require(std::abs(half.lhs.real() - half.rhs.real()) <= 1e-8, "Re mismatch at k=0.5");
    c.require(std::abs(half.lhs.imag() - half.rhs.imag()) <= 1e-8, "Im mismatch at k=0.5");
    c.finish();
}

void criterion_5() {
    Criterion c(5, "(6b) grid k in {0.5,1,2} x m,n in {1,2} confirmed at 1e-8");
    std::vector<ParamPoint> grid;
    for (double k : {0.5, 1.0, 2.0})
        for (double m : {1.0, 2.0})
            for (double n : {1.0, 2.0}) grid.push_back(pt({1, 0}, {k, 0}, {m, 0}, {n, 0}, {0, 0}));
    const auto v = verify::sweep("I_6B", grid, 1e-8);
    c.require(v.verdict == Verdict::CONFIRMED, "verdict not CONFIRMED");
    c.require(v.records.size() == 12, "expected 12 records");
    for (const auto& r : v.records) c.require(r.rel_err <= 1e-8, "rel_err above 1e-8");
    c.finish();
}

void criterion_6() {
    Criterion c(6, "Hurwitz-zeta property suite at 1e-12 in under 2 s");
    using specfun::hurwitz_zeta;
    using specfun::riemann_zeta;
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> re_q(0.1, 10.0);
    std::uniform_real_distribution<double> im_q(-3.0, 3.0);
    std::uniform_real_distribution<double> mag_s(0.0, 8.0);
    std::uniform_real_distribution<double> arg_s(-kPi, kPi);
    int checked = 0;
    while (checked < 100) {
        const CNum s = std::polar(mag_s(rng), arg_s(rng));
        if (std::abs(s - 1.0) <= 0.1) continue;
        const CNum q(re_q(rng), im_q(rng));
        const CNum diff = hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1.0);
        const CNum direct = std::exp(-s * std::log(q));
        const double rel = std::abs(diff - direct) / std::max(1.0, std::abs(direct));
        c.require(rel < 1e-12, "recurrence rel err " + fmt(rel));
        ++checked;
    }
    for (int n = 0; n <= 3; ++n) {
        for (double q : {0.25, 0.5, 1.0, 2.5}) {
            const double want = -oracles::bernoulli_poly(n + 1, q) / (n + 1.0);
            const double got = hurwitz_zeta(CNum(-n, 0), CNum(q, 0)).real();
            c.require(std::abs(got - want) < 1e-12, "Bernoulli value mismatch");
        }
    }
    for (double s : {-1.5, 2.0, 3.0, 4.5}) {
        const CNum lhs = hurwitz_zeta({s, 0}, {0.5, 0});
        const CNum rhs = (std::pow(2.0, s) - 1.0) * riemann_zeta({s, 0});
        c.require(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12, "multiplication theorem mismatch");
    }
    c.require(c.elapsed() < 2.0, "runtime above 2 s");
    c.finish();
}

void criterion_7() {
    Criterion c(7, "quadrature oracle suite within 1e-9 in under 1 s");
    quad::QuadConfig cfg;
    const auto r1 =
        quad::integrate_unit([](double x) { return CNum(std::log(x) * std::log(x), 0); }, cfg);
    c.require(std::abs(r1.value - CNum(2, 0)) < 1e-9, "ln^2 x integral off");
    const auto r2 = quad::integrate_unit([](double x) { return CNum(1.0 / std::sqrt(x), 0); }, cfg);
    c.require(std::abs(r2.value - CNum(2, 0)) < 1e-9, "x^-1/2 integral off");
    for (double p : {-0.5, 0.5, 2.0}) {
        const auto r = quad::integrate_unit(
            quad::Integrand([p](double x, double xc) {
                const double al = xc < 0.0 ? -std::log1p(xc) : -std::log(x);
                return CNum(std::pow(al, p), 0);
            }),
            cfg);
        const double err = std::abs(r.value.real() - std::tgamma(p + 1.0));
        c.require(err < 1e-9, "|ln x|^" + std::to_string(p) + " err " + fmt(err));
    }
    c.require(c.elapsed() < 1.0, "runtime above 1 s");
    c.finish();
}

void criterion_8() {
    Criterion c(8, "integrand-level sum/difference structure at 1e-7");
    quad::QuadConfig cfg;
    const ParamPoint pts[] = {pt({1, 0}, {0.5, 0}, {1, 0}, {1, 0}, {0, 0}),
                              pt(std::polar(1.0, kPi / 4.0), {1, 0}, {2, 0}, {2, 0}, {0, 0}),
                              pt(std::polar(1.0, -kPi / 3.0), {2, 0}, {1.5, 0}, {1.5, 0}, {0, 0})};
    for (const auto& pp : pts) {
        // atanh decomposition: LHS(5a, m) = (LHS(4a, m) - LHS(4b, n=m))/2
        const CNum l5a = identities::eval_lhs("I_5A", pp, cfg).value;
        const CNum l4a = identities::eval_lhs("I_4A", pp, cfg).value;
        const CNum l4b = identities::eval_lhs("I_4B", pp, cfg).value;
        c.require(std::abs(l5a - 0.5 * (l4a - l4b)) < 1e-7,
                  "atanh decomposition off by " + fmt(std::abs(l5a - 0.5 * (l4a - l4b))));
    }
    const ParamPoint pts_sum[] = {pt({1, 0}, {0.5, 0}, {1, 0}, {2, 0}, {0, 0}),
                                  pt(std::polar(1.0, kPi / 4.0), {1, 0}, {2, 0}, {1, 0}, {0, 0}),
                                  pt(std::polar(1.0, -kPi / 3.0), {2, 0}, {1, 0}, {1, 0}, {0, 0})};
    for (const auto& pp : pts_sum) {
        // log((x^m+1)(1-x^n)) splits: LHS(5b) = LHS(4a) + LHS(4b)
        const CNum l5b = identities::eval_lhs("I_5B", pp, cfg).value;
        const CNum l4a = identities::eval_lhs("I_4A", pp, cfg).value;
        const CNum l4b = identities::eval_lhs("I_4B", pp, cfg).value;
        c.require(std::abs(l5b - l4a - l4b) < 1e-7,
                  "sum structure off by " + fmt(std::abs(l5b - l4a - l4b)));
    }
    c.finish();
}

void criterion_9() {
    Criterion c(9, "full-table audit: 18 rows, required rows confirmed, flagged rows decisive");
    // through the command line first: must complete and stay decisive
    const int cli_exit = cli::run({"table", "--output", "acceptance_table.tmp"});
    std::remove("acceptance_table.tmp");
    c.require(cli_exit == 0 || cli_exit == 1, "table command exited with a usage error");
    const auto rows = verify::reproduce_table();
    c.require(rows.size() == 18, "table does not have 18 rows");
    // rows that must confirm: (6a), (6b), E1, E3, E4, E9, E10, E13, E14-family
    const int must_confirm[] = {1, 2, 3, 6, 7, 12, 13, 17, 18};
    for (int rownum : must_confirm) {
        const auto& [label, verdict] = rows[static_cast<std::size_t>(rownum - 1)];
        c.require(verdict.verdict == Verdict::CONFIRMED,
                  label + " is " + verify::to_string(verdict.verdict) + ", expected CONFIRMED");
    }
    // every table row must be decisive
    for (const auto& [label, verdict] : rows) {
        c.require(verdict.verdict == Verdict::CONFIRMED || verdict.verdict == Verdict::FAILED,
                  label + " verdict " + verify::to_string(verdict.verdict) + " is not decisive");
    }
    // identities flagged suspected_typo that live outside the printed table
    // rows: the audit must still be decisive about each printed reading.
    for (const char* id : {"I_5A", "I_5B", "I_LG_LOG", "I_DG_LOG"}) {
        const auto& ident = identities::find(id);
        const auto grid = identities::default_grid(ident);
        const auto v = verify::sweep(id, grid, ident.default_tol);
        c.require(v.verdict == Verdict::CONFIRMED || v.verdict == Verdict::FAILED,
                  std::string(id) + " (as printed) verdict " + verify::to_string(v.verdict) +
                      " is not decisive");
        std::printf("       flagged %-12s as printed          -> %s\n", id,
                    verify::to_string(v.verdict));
        if (ident.alt) {
            const auto av = verify::sweep_alt(id, grid, ident.default_tol);
            c.require(av.verdict == Verdict::CONFIRMED || av.verdict == Verdict::FAILED,
                      std::string(id) + " (alt reading) verdict is not decisive");
            std::printf("       flagged %-12s alternative reading -> %s\n", id,
                        verify::to_string(av.verdict));
        }
    }
    c.require(c.elapsed() < 60.0, "runtime above 60 s");
    c.finish();
}

void criterion_10() {
    Criterion c(10, "E2 imaginary part equals pi^3/8 to 1e-7");
    const auto lhs = identities::eval_lhs("E2", ParamPoint{});
    c.require(lhs.converged, "quadrature did not converge");
    const double want = kPi * kPi * kPi / 8.0;
    c.require(std::abs(lhs.value.imag() - want) <= 1e-7,
              "Im deviates by " + fmt(std::abs(lhs.value.imag() - want)));
    c.finish();
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    for (const auto& d : g_details) std::printf("%s\n", d.c_str());
    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
    return 1;
}
