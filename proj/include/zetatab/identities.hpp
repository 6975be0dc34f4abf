#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetatab/complex_ops.hpp"
#include "zetatab/errors.hpp"
#include "zetatab/quad.hpp"

namespace zetatab::identities {

// A concrete assignment of the table parameters.  Fields an identity does
// not use are ignored by its evaluators.
struct ParamPoint {
    CNum a{1.0, 0.0};
    CNum k{1.0, 0.0};
    CNum m{1.0, 0.0};
    CNum n{1.0, 0.0};
    CNum p{0.0, 0.0};
};

struct ParamUse {
    bool a = false;
    bool k = false;
    bool m = false;
    bool n = false;
    bool p = false;
};

enum class StatusHint { expected_confirmed, suspected_typo };

// A second, bracketing-ambiguous reading of a printed closed form.  Carried
// only by identities whose source formula can be parsed two ways.
struct AltReading {
    std::string label;
    std::function<CNum(const ParamPoint&)> rhs;
};

// Per-parameter default sweep values; the default grid is their Cartesian
// product.  Unused parameters keep their singleton defaults.
struct GridDefaults {
    std::vector<CNum> a{CNum(1.0, 0.0)};
    std::vector<CNum> k{CNum(1.0, 0.0)};
    std::vector<CNum> m{CNum(1.0, 0.0)};
    std::vector<CNum> n{CNum(1.0, 0.0)};
    std::vector<CNum> p{CNum(0.0, 0.0)};
};

// One table identity: integrand builder (left side), closed form evaluator
// (right side), parameter domain and removable-singularity data.
struct Identity {
    std::string id;
    std::string description;
    std::string integrand_text;     // f(x) column of the emitted table
    std::string closed_form_text;   // closed-form column of the emitted table
    std::string anchor;             // derivation anchor within the table's own numbering
    ParamUse uses;
    StatusHint status_hint = StatusHint::expected_confirmed;
    bool fixed_params = false;      // true for the worked examples with baked-in parameters

    std::function<std::optional<std::string>(const ParamPoint&)> domain;
    std::function<quad::Integrand(const ParamPoint&)> lhs;
    std::function<std::vector<quad::LimitFill>(const ParamPoint&)> fills;
    std::function<CNum(const ParamPoint&)> rhs;
    std::optional<AltReading> alt;

    double default_tol = 1e-8;
    GridDefaults grid_defaults;
};

// Cartesian product of per-parameter value lists.
std::vector<ParamPoint> product_grid(const GridDefaults& g);

// The identity's default sweep grid (a single point for the worked examples).
std::vector<ParamPoint> default_grid(const Identity& ident);

// The full identity registry, built once, immutable afterwards.
const std::vector<Identity>& registry();

// Lookup by id; throws UnknownIdentity.
const Identity& find(const std::string& id);

// Domain predicate: std::nullopt means the point is admissible, otherwise
// the violation message.
std::optional<std::string> check_domain(const std::string& id, const ParamPoint& pp);

// Closed form evaluated through the special-function kernel only.
CNum eval_rhs(const std::string& id, const ParamPoint& pp);

// Alternative printed reading, for identities that carry one.
CNum eval_rhs_alt(const std::string& id, const ParamPoint& pp);

// Left side: builds the integrand, attaches removable-singularity fills and
// integrates over (0, 1).
quad::QuadResult eval_lhs(const std::string& id, const ParamPoint& pp,
                          const quad::QuadConfig& qcfg = {});

}  // namespace zetatab::identities
