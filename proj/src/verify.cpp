#include "zetatab/verify.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace zetatab::verify {

namespace {

// The emitted table's rows in order.  Rows with free parameters sweep the
// identity's default grid; worked examples are single points.
constexpr std::array<TableLayoutRow, 18> kTable = {{
    {1, "I_6A"},
    {2, "I_6B"},
    {3, "E1"},
    {4, "I_LG_ATANH"},
    {5, "E2"},
    {6, "E3"},
    {7, "E4"},
    {8, "E5"},
    {9, "E6"},
    {10, "E7"},
    {11, "E8"},
    {12, "E9"},
    {13, "E10"},
    {14, "E11"},
    {15, "E12"},
    {16, "I_DD1"},
    {17, "E13"},
    {18, "I_DD2"},
}};

VerificationRecord make_record(const std::string& id, const identities::ParamPoint& pp,
                               const CNum& rhs, double tol, const quad::QuadConfig& qcfg) {
    VerificationRecord rec;
    rec.identity_id = id;
    rec.params = pp;
    rec.tol = tol;
    rec.rhs = rhs;
    const quad::QuadResult qr = identities::eval_lhs(id, pp, qcfg);
    rec.lhs = qr.value;
    rec.quad_converged = qr.converged;
    rec.abs_err = std::abs(rec.lhs - rec.rhs);
    rec.rel_err = rec.abs_err / std::max(1.0, std::abs(rec.rhs));
    rec.status = classify(rec.rel_err, tol, rec.quad_converged);
    return rec;
}

IdentityVerdict sweep_impl(const std::string& id, std::span<const identities::ParamPoint> grid,
                           double tol, const quad::QuadConfig& qcfg, bool alt_reading) {
    if (grid.empty()) throw EmptyGridAfterDomainFilter(id + ": sweep grid is empty");
    IdentityVerdict out;
    out.identity_id = id;
    std::size_t index = 0;
    for (const identities::ParamPoint& pp : grid) {
        ++index;
        if (auto violation = identities::check_domain(id, pp)) {
            std::ostringstream note;
            note << "grid point " << index << " skipped: " << *violation;
            out.notes.push_back(note.str());
            continue;
        }
        const CNum rhs = alt_reading ? identities::eval_rhs_alt(id, pp)
                                     : identities::eval_rhs(id, pp);
        out.records.push_back(make_record(id, pp, rhs, tol, qcfg));
    }
    if (out.records.empty()) {
        throw EmptyGridAfterDomainFilter(id + ": every grid point was out of domain");
    }
    out.verdict = classify(out.records);
    return out;
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CONFIRMED: return "CONFIRMED";
        case Verdict::FAILED: return "FAILED";
        case Verdict::MIXED: return "MIXED";
        case Verdict::UNDETERMINED: return "UNDETERMINED";
    }
    return "?";
}

Status classify(double rel_err, double tol, bool quad_converged) {
    if (!quad_converged) return Status::INCONCLUSIVE;
    return rel_err <= tol ? Status::PASS : Status::FAIL;
}

Verdict classify(std::span<const VerificationRecord> records) {
    if (records.empty()) return Verdict::UNDETERMINED;
    bool all_pass = true, all_fail = true, all_inconclusive = true;
    for (const VerificationRecord& r : records) {
        all_pass &= (r.status == Status::PASS);
        all_fail &= (r.status == Status::FAIL);
        all_inconclusive &= (r.status == Status::INCONCLUSIVE);
    }
    if (all_pass) return Verdict::CONFIRMED;
    if (all_fail) return Verdict::FAILED;
    if (all_inconclusive) return Verdict::UNDETERMINED;
    return Verdict::MIXED;
}

VerificationRecord verify_point(const std::string& id, const identities::ParamPoint& pp,
                                double tol, const quad::QuadConfig& qcfg) {
    return make_record(id, pp, identities::eval_rhs(id, pp), tol, qcfg);
}

VerificationRecord verify_point_alt(const std::string& id, const identities::ParamPoint& pp,
                                    double tol, const quad::QuadConfig& qcfg) {
    return make_record(id, pp, identities::eval_rhs_alt(id, pp), tol, qcfg);
}

IdentityVerdict sweep(const std::string& id, std::span<const identities::ParamPoint> grid,
                      double tol, const quad::QuadConfig& qcfg) {
    return sweep_impl(id, grid, tol, qcfg, false);
}

IdentityVerdict sweep_alt(const std::string& id, std::span<const identities::ParamPoint> grid,
                          double tol, const quad::QuadConfig& qcfg) {
    return sweep_impl(id, grid, tol, qcfg, true);
}

std::span<const TableLayoutRow> table_layout() { return kTable; }

std::vector<std::pair<std::string, IdentityVerdict>> reproduce_table(
    const quad::QuadConfig& qcfg, std::optional<double> tol_override) {
    std::vector<std::pair<std::string, IdentityVerdict>> rows;
    rows.reserve(kTable.size());
    for (const TableLayoutRow& row : kTable) {
        const identities::Identity& ident = identities::find(row.identity_id);
        const double tol = tol_override.value_or(ident.default_tol);
        IdentityVerdict v = sweep(ident.id, identities::default_grid(ident), tol, qcfg);
        std::ostringstream label;
        label << "row " << (row.number < 10 ? "0" : "") << row.number << ": "
              << ident.integrand_text;
        rows.emplace_back(label.str(), std::move(v));
    }
    return rows;
}

}  // namespace zetatab::verify
