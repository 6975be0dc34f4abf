#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetatab/verify.hpp"

namespace zetatab::report {

enum class Format { json, csv, markdown };

Format parse_format(const std::string& name);  // throws DomainError on unknown names
const char* to_string(Format f);

// A verdict entry of a report.  `reading` distinguishes the printed reading
// from an alternative one; `informational` entries do not affect exit codes.
struct VerdictEntry {
    std::string label;
    verify::IdentityVerdict verdict;
    std::optional<std::string> reading;
    std::optional<std::string> status_hint;
    bool informational = false;
};

struct ReportData {
    std::string command;
    std::optional<std::string> identity;
    double tol = 0.0;
    quad::QuadConfig qcfg;
    Format format = Format::markdown;
    std::vector<verify::VerificationRecord> records;
    std::vector<VerdictEntry> verdicts;
};

// Complex values serialize as two-element [re, im] arrays; nlohmann's dump
// emits shortest round-trip decimals, so parsing the output reproduces every
// double bit-exactly.
nlohmann::json to_json(const CNum& z);
nlohmann::json to_json(const identities::ParamPoint& pp);
nlohmann::json to_json(const verify::VerificationRecord& rec);
nlohmann::json to_json(const ReportData& data);

std::string render(const ReportData& data);

}  // namespace zetatab::report
