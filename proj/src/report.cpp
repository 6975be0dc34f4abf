#include "zetatab/report.hpp"

#include <iomanip>
#include <sstream>

namespace zetatab::report {

namespace {

using nlohmann::json;

std::string fmt_complex(const CNum& z) {
    std::ostringstream os;
    os << std::setprecision(15) << z.real();
    if (z.imag() != 0.0) {
        os << (z.imag() < 0.0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

std::string fmt_params(const identities::ParamPoint& pp, const identities::ParamUse& uses) {
    std::ostringstream os;
    bool first = true;
    const auto put = [&](const char* name, const CNum& v, bool used) {
        if (!used) return;
        if (!first) os << ", ";
        first = false;
        os << name << " = " << fmt_complex(v);
    };
    put("a", pp.a, uses.a);
    put("k", pp.k, uses.k);
    put("m", pp.m, uses.m);
    put("n", pp.n, uses.n);
    put("p", pp.p, uses.p);
    if (first) os << "(fixed)";
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void render_records_markdown(std::ostream& os, const std::vector<verify::VerificationRecord>& recs) {
    if (recs.empty()) return;
    os << "| identity | parameters | lhs (quadrature) | rhs (closed form) | rel err | status |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : recs) {
        const auto& ident = identities::find(r.identity_id);
        os << "| " << r.identity_id << " | " << fmt_params(r.params, ident.uses) << " | "
           << fmt_complex(r.lhs) << " | " << fmt_complex(r.rhs) << " | " << std::scientific
           << std::setprecision(2) << r.rel_err << std::defaultfloat << " | "
           << verify::to_string(r.status) << " |\n";
    }
}

void render_verdicts_markdown(std::ostream& os, const std::vector<VerdictEntry>& verdicts,
                              bool table_style) {
    if (verdicts.empty()) return;
    if (table_style) {
        os << "| row | f(x) | integral over (0,1) | status |\n";
        os << "|---|---|---|---|\n";
        for (const auto& v : verdicts) {
            const auto& ident = identities::find(v.verdict.identity_id);
            std::string status = verify::to_string(v.verdict.verdict);
            if (v.status_hint) status += " (" + *v.status_hint + ")";
            os << "| " << v.label.substr(0, v.label.find(':')) << " | " << ident.integrand_text
               << " | " << ident.closed_form_text << " | " << status << " |\n";
        }
        return;
    }
    for (const auto& v : verdicts) {
        os << "- " << v.label;
        if (v.reading) os << " [" << *v.reading << "]";
        os << ": " << verify::to_string(v.verdict.verdict) << " (" << v.verdict.records.size()
           << " point" << (v.verdict.records.size() == 1 ? "" : "s") << ")";
        if (v.status_hint) os << " [" << *v.status_hint << "]";
        os << "\n";
        for (const auto& note : v.verdict.notes) os << "  - " << note << "\n";
    }
}

std::string render_markdown(const ReportData& d) {
    std::ostringstream os;
    render_records_markdown(os, d.records);
    if (!d.records.empty() && !d.verdicts.empty()) os << "\n";
    render_verdicts_markdown(os, d.verdicts, d.command == "table");
    return os.str();
}

std::string render_csv(const ReportData& d) {
    std::ostringstream os;
    os << std::setprecision(17);
    if (d.command == "table") {
        os << "row,identity_id,verdict,points,max_rel_err,status_hint\n";
        for (const auto& v : d.verdicts) {
            double max_rel = 0.0;
            for (const auto& r : v.verdict.records) max_rel = std::max(max_rel, r.rel_err);
            os << csv_escape(v.label) << "," << v.verdict.identity_id << ","
               << verify::to_string(v.verdict.verdict) << "," << v.verdict.records.size() << ","
               << max_rel << "," << v.status_hint.value_or("") << "\n";
        }
        return os.str();
    }
    os << "identity_id,a_re,a_im,k_re,k_im,m_re,m_im,n_re,n_im,p_re,p_im,"
          "lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,quad_converged,status\n";
    for (const auto& r : d.records) {
        const auto& pp = r.params;
        os << r.identity_id << "," << pp.a.real() << "," << pp.a.imag() << "," << pp.k.real()
           << "," << pp.k.imag() << "," << pp.m.real() << "," << pp.m.imag() << "," << pp.n.real()
           << "," << pp.n.imag() << "," << pp.p.real() << "," << pp.p.imag() << ","
           << r.lhs.real() << "," << r.lhs.imag() << "," << r.rhs.real() << "," << r.rhs.imag()
           << "," << r.abs_err << "," << r.rel_err << "," << r.tol << ","
           << (r.quad_converged ? "true" : "false") << "," << verify::to_string(r.status) << "\n";
    }
    return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "markdown" || name == "md") return Format::markdown;
    throw DomainError("unknown format: " + name);
}

const char* to_string(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::markdown: return "markdown";
    }
    return "?";
}

json to_json(const CNum& z) { return json::array({z.real(), z.imag()}); }

json to_json(const identities::ParamPoint& pp) {
    return json{{"a", to_json(pp.a)},
                {"k", to_json(pp.k)},
                {"m", to_json(pp.m)},
                {"n", to_json(pp.n)},
                {"p", to_json(pp.p)}};
}

json to_json(const verify::VerificationRecord& rec) {
    return json{{"identity_id", rec.identity_id},
                {"params", to_json(rec.params)},
                {"lhs", to_json(rec.lhs)},
                {"rhs", to_json(rec.rhs)},
                {"abs_err", rec.abs_err},
                {"rel_err", rec.rel_err},
                {"tol", rec.tol},
                {"quad_converged", rec.quad_converged},
                {"status", verify::to_string(rec.status)}};
}

json to_json(const ReportData& d) {
    json records = json::array();
    for (const auto& r : d.records) records.push_back(to_json(r));
    json verdicts = json::array();
    for (const auto& v : d.verdicts) {
        json entry{{"identity_id", v.verdict.identity_id},
                   {"label", v.label},
                   {"verdict", verify::to_string(v.verdict.verdict)},
                   {"points", v.verdict.records.size()}};
        if (v.reading) entry["reading"] = *v.reading;
        if (v.status_hint) entry["status_hint"] = *v.status_hint;
        if (!v.verdict.notes.empty()) entry["notes"] = v.verdict.notes;
        json recs = json::array();
        for (const auto& r : v.verdict.records) recs.push_back(to_json(r));
        entry["records"] = recs;
        verdicts.push_back(std::move(entry));
    }
    json config{{"tol", d.tol},
                {"format", to_string(d.format)},
                {"quad", json{{"abs_tol", d.qcfg.abs_tol}, {"max_level", d.qcfg.max_level}}}};
    if (d.identity) config["identity"] = *d.identity;
    return json{{"command", d.command},
                {"config", std::move(config)},
                {"records", std::move(records)},
                {"verdicts", std::move(verdicts)}};
}

std::string render(const ReportData& d) {
    switch (d.format) {
        case Format::json: return to_json(d).dump(2) + "\n";
        case Format::csv: return render_csv(d);
        case Format::markdown: return render_markdown(d);
    }
    return {};
}

}  // namespace zetatab::report
