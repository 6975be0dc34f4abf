#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zetatab/identities.hpp"
#include "zetatab/quad.hpp"

namespace zetatab::verify {

enum class Status { PASS, FAIL, INCONCLUSIVE };
enum class Verdict { CONFIRMED, FAILED, MIXED, UNDETERMINED };

const char* to_string(Status s);
const char* to_string(Verdict v);

// One (identity, parameter point) comparison.  rel_err scales by
// max(1, |rhs|) so near-zero closed forms do not inflate failures.
struct VerificationRecord {
    std::string identity_id;
    identities::ParamPoint params;
    CNum lhs{0.0, 0.0};
    CNum rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool quad_converged = false;
    Status status = Status::INCONCLUSIVE;
};

struct IdentityVerdict {
    std::string identity_id;
    std::vector<VerificationRecord> records;
    Verdict verdict = Verdict::UNDETERMINED;
    std::vector<std::string> notes;  // e.g. skipped out-of-domain grid points
};

// Classification helpers, exposed for property tests.
Status classify(double rel_err, double tol, bool quad_converged);
Verdict classify(std::span<const VerificationRecord> records);

// Evaluate both sides independently at one point.  The closed form goes
// through the special-function kernel only; the integrand uses elementary
// functions only.  Quadrature non-convergence surfaces as INCONCLUSIVE.
VerificationRecord verify_point(const std::string& id, const identities::ParamPoint& pp,
                                double tol, const quad::QuadConfig& qcfg = {});

// Like verify_point but against the identity's alternative printed reading.
VerificationRecord verify_point_alt(const std::string& id, const identities::ParamPoint& pp,
                                    double tol, const quad::QuadConfig& qcfg = {});

// One record per in-domain grid point, in grid order; out-of-domain points
// are skipped with a note.  Throws EmptyGridAfterDomainFilter when nothing
// survives the domain predicate.
IdentityVerdict sweep(const std::string& id, std::span<const identities::ParamPoint> grid,
                      double tol, const quad::QuadConfig& qcfg = {});

// Sweep against the alternative reading.
IdentityVerdict sweep_alt(const std::string& id, std::span<const identities::ParamPoint> grid,
                          double tol, const quad::QuadConfig& qcfg = {});

// The emitted integral table: one (row label, verdict) per table row, in row
// order, each swept over the identity's default grid.  tol_override replaces
// the per-identity default tolerance when set.
std::vector<std::pair<std::string, IdentityVerdict>> reproduce_table(
    const quad::QuadConfig& qcfg = {}, std::optional<double> tol_override = std::nullopt);

// Table metadata in row order: (row number, identity id, row label).
struct TableLayoutRow {
    int number;
    const char* identity_id;
};
std::span<const TableLayoutRow> table_layout();

}  // namespace zetatab::verify
