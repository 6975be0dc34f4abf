#include "zetatab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zetatab/identities.hpp"
#include "zetatab/report.hpp"
#include "zetatab/specfun.hpp"
#include "zetatab/verify.hpp"

namespace zetatab::cli {

namespace {

using identities::Identity;
using identities::ParamPoint;
using report::Format;
using report::ReportData;
using report::VerdictEntry;

struct Options {
    std::string identity;
    std::vector<std::string> a, k, m, n, p;
    double tol = 0.0;  // 0 = per-identity default
    std::string format = "markdown";
    std::string output;
};

double parse_real(const std::string& text) {
    double value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (begin != end && *begin == '+') ++begin;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw DomainError("invalid number: '" + text + "'");
    }
    return value;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);  // LF line endings as produced
    if (!out) throw DomainError("cannot open output file: " + output_path);
    out << text;
}

quad::QuadConfig quad_config_from_env() {
    quad::QuadConfig qcfg;
    if (const char* env = std::getenv("ZETATAB_MAX_LEVEL")) {
        int level{};
        const std::string text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), level);
        if (ec != std::errc{} || ptr != text.data() + text.size() || level < 3 || level > 16) {
            throw DomainError("ZETATAB_MAX_LEVEL must be an integer in [3, 16], got '" + text + "'");
        }
        qcfg.max_level = level;
    }
    return qcfg;
}

// Reject overrides of parameters the identity does not use.
void check_overrides(const Identity& ident, const Options& opt) {
    const auto reject = [&](const std::vector<std::string>& vals, bool used, const char* name) {
        if (vals.empty()) return;
        if (ident.fixed_params) {
            throw DomainError(ident.id + " has fixed parameters; --" + name + " is not accepted");
        }
        if (!used) {
            throw DomainError("parameter '" + std::string(name) + "' is not used by " + ident.id);
        }
    };
    reject(opt.a, ident.uses.a, "a");
    reject(opt.k, ident.uses.k, "k");
    reject(opt.m, ident.uses.m, "m");
    reject(opt.n, ident.uses.n, "n");
    reject(opt.p, ident.uses.p, "p");
}

std::vector<CNum> parse_values(const std::vector<std::string>& raw) {
    std::vector<CNum> out;
    out.reserve(raw.size());
    for (const std::string& s : raw) out.push_back(parse_complex(s));
    return out;
}

ParamPoint single_point(const Identity& ident, const Options& opt) {
    check_overrides(ident, opt);
    const auto one = [](const std::vector<std::string>& vals, const char* name) -> std::optional<CNum> {
        if (vals.empty()) return std::nullopt;
        if (vals.size() > 1) {
            throw DomainError(std::string("verify accepts a single value for --") + name);
        }
        return parse_complex(vals.front());
    };
    ParamPoint pp;
    if (auto v = one(opt.a, "a")) pp.a = *v;
    if (auto v = one(opt.k, "k")) pp.k = *v;
    if (auto v = one(opt.m, "m")) pp.m = *v;
    if (auto v = one(opt.n, "n")) pp.n = *v;
    if (auto v = one(opt.p, "p")) pp.p = *v;
    return pp;
}

std::vector<ParamPoint> sweep_grid(const Identity& ident, const Options& opt) {
    check_overrides(ident, opt);
    identities::GridDefaults g = ident.grid_defaults;
    if (!opt.a.empty()) g.a = parse_values(opt.a);
    if (!opt.k.empty()) g.k = parse_values(opt.k);
    if (!opt.m.empty()) g.m = parse_values(opt.m);
    if (!opt.n.empty()) g.n = parse_values(opt.n);
    if (!opt.p.empty()) g.p = parse_values(opt.p);
    return identities::product_grid(g);
}

int exit_code_from(const std::vector<VerdictEntry>& verdicts) {
    bool all_confirmed = true;
    for (const VerdictEntry& v : verdicts) {
        if (v.informational) continue;
        all_confirmed &= (v.verdict.verdict == verify::Verdict::CONFIRMED);
    }
    return all_confirmed ? 0 : 1;
}

std::optional<std::string> hint_of(const Identity& ident) {
    if (ident.status_hint == identities::StatusHint::suspected_typo) {
        return std::string("suspected_typo");
    }
    return std::nullopt;
}

int cmd_verify(const Options& opt) {
    const Identity& ident = identities::find(opt.identity);
    const ParamPoint pp = single_point(ident, opt);
    const double tol = opt.tol > 0.0 ? opt.tol : ident.default_tol;
    const quad::QuadConfig qcfg = quad_config_from_env();

    ReportData data;
    data.command = "verify";
    data.identity = ident.id;
    data.tol = tol;
    data.qcfg = qcfg;
    data.format = report::parse_format(opt.format);

    const verify::VerificationRecord rec = verify::verify_point(ident.id, pp, tol, qcfg);
    data.records.push_back(rec);
    VerdictEntry primary;
    primary.label = ident.id;
    primary.verdict = verify::IdentityVerdict{ident.id, {rec}, verify::classify(data.records), {}};
    if (ident.alt) primary.reading = "as printed";
    primary.status_hint = hint_of(ident);
    data.verdicts.push_back(primary);
    if (ident.alt) {
        const verify::VerificationRecord alt = verify::verify_point_alt(ident.id, pp, tol, qcfg);
        data.records.push_back(alt);
        VerdictEntry entry;
        entry.label = ident.id;
        entry.verdict =
            verify::IdentityVerdict{ident.id, {alt}, verify::classify(std::vector{alt}), {}};
        entry.reading = ident.alt->label;
        entry.status_hint = hint_of(ident);
        entry.informational = true;
        data.verdicts.push_back(entry);
    }
    emit(report::render(data), opt.output);
    return exit_code_from(data.verdicts);
}

int cmd_sweep(const Options& opt) {
    const Identity& ident = identities::find(opt.identity);
    const std::vector<ParamPoint> grid = sweep_grid(ident, opt);
    const double tol = opt.tol > 0.0 ? opt.tol : ident.default_tol;
    const quad::QuadConfig qcfg = quad_config_from_env();

    ReportData data;
    data.command = "sweep";
    data.identity = ident.id;
    data.tol = tol;
    data.qcfg = qcfg;
    data.format = report::parse_format(opt.format);

    verify::IdentityVerdict v = verify::sweep(ident.id, grid, tol, qcfg);
    data.records = v.records;
    VerdictEntry primary;
    primary.label = ident.id;
    primary.verdict = std::move(v);
    if (ident.alt) primary.reading = "as printed";
    primary.status_hint = hint_of(ident);
    data.verdicts.push_back(std::move(primary));
    if (ident.alt) {
        VerdictEntry entry;
        entry.label = ident.id;
        entry.verdict = verify::sweep_alt(ident.id, grid, tol, qcfg);
        entry.reading = ident.alt->label;
        entry.status_hint = hint_of(ident);
        entry.informational = true;
        data.verdicts.push_back(std::move(entry));
    }
    emit(report::render(data), opt.output);
    return exit_code_from(data.verdicts);
}

int cmd_table(const Options& opt) {
    const quad::QuadConfig qcfg = quad_config_from_env();
    ReportData data;
    data.command = "table";
    data.tol = opt.tol;
    data.qcfg = qcfg;
    data.format = report::parse_format(opt.format);

    const std::optional<double> tol_override =
        opt.tol > 0.0 ? std::optional<double>(opt.tol) : std::nullopt;
    for (auto& [label, verdict] : verify::reproduce_table(qcfg, tol_override)) {
        const Identity& ident = identities::find(verdict.identity_id);
        VerdictEntry entry;
        entry.label = label;
        entry.verdict = std::move(verdict);
        entry.status_hint = hint_of(ident);
        data.verdicts.push_back(std::move(entry));
    }
    emit(report::render(data), opt.output);
    return exit_code_from(data.verdicts);
}

int cmd_constants(const Options& opt) {
    using specfun::Constant;
    struct Row {
        const char* name;
        const char* symbol;
        double value;
    };
    const Row rows[] = {
        {"euler_gamma", "gamma", specfun::constant(Constant::euler_gamma)},
        {"catalan", "C", specfun::constant(Constant::catalan)},
        {"glaisher_log", "ln A", specfun::constant(Constant::glaisher_log)},
        {"pi", "pi", specfun::constant(Constant::pi)},
    };
    std::ostringstream os;
    const Format format = report::parse_format(opt.format);
    if (format == Format::json) {
        nlohmann::json j;
        for (const Row& r : rows) j[r.name] = r.value;
        os << nlohmann::json{{"command", "constants"}, {"values", j}}.dump(2) << "\n";
    } else if (format == Format::csv) {
        os << "name,symbol,value\n" << std::setprecision(15);
        for (const Row& r : rows) os << r.name << "," << r.symbol << "," << r.value << "\n";
    } else {
        os << "| constant | symbol | value |\n|---|---|---|\n" << std::setprecision(15);
        for (const Row& r : rows) os << "| " << r.name << " | " << r.symbol << " | " << r.value << " |\n";
    }
    emit(os.str(), opt.output);
    return 0;
}

int cmd_list(const Options& opt) {
    std::ostringstream os;
    const Format format = report::parse_format(opt.format);
    if (format == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Identity& ident : identities::registry()) {
            nlohmann::json uses = nlohmann::json::array();
            if (ident.uses.a) uses.push_back("a");
            if (ident.uses.k) uses.push_back("k");
            if (ident.uses.m) uses.push_back("m");
            if (ident.uses.n) uses.push_back("n");
            if (ident.uses.p) uses.push_back("p");
            nlohmann::json entry{{"id", ident.id},
                                 {"integrand", ident.integrand_text},
                                 {"closed_form", ident.closed_form_text},
                                 {"uses", uses},
                                 {"anchor", ident.anchor}};
            if (auto h = hint_of(ident)) entry["status_hint"] = *h;
            if (ident.alt) entry["alt_reading"] = ident.alt->label;
            arr.push_back(std::move(entry));
        }
        os << nlohmann::json{{"command", "list"}, {"identities", arr}}.dump(2) << "\n";
    } else if (format == Format::csv) {
        os << "id,uses,status_hint,integrand\n";
        for (const Identity& ident : identities::registry()) {
            std::string uses;
            if (ident.uses.a) uses += 'a';
            if (ident.uses.k) uses += 'k';
            if (ident.uses.m) uses += 'm';
            if (ident.uses.n) uses += 'n';
            if (ident.uses.p) uses += 'p';
            os << ident.id << "," << uses << "," << hint_of(ident).value_or("") << ",\""
               << ident.integrand_text << "\"\n";
        }
    } else {
        os << "| id | uses | hint | f(x) |\n|---|---|---|---|\n";
        for (const Identity& ident : identities::registry()) {
            std::string uses;
            if (ident.uses.a) uses += "a ";
            if (ident.uses.k) uses += "k ";
            if (ident.uses.m) uses += "m ";
            if (ident.uses.n) uses += "n ";
            if (ident.uses.p) uses += "p ";
            if (uses.empty()) uses = "(fixed)";
            os << "| " << ident.id << " | " << uses << " | " << hint_of(ident).value_or("") << " | "
               << ident.integrand_text << " |\n";
        }
    }
    emit(os.str(), opt.output);
    return 0;
}

void add_common(CLI::App* sub, Options& opt, bool with_params) {
    if (with_params) {
        sub->add_option("--a", opt.a, "parameter a (complex, e.g. 1 or 0.7+0.7i)");
        sub->add_option("--k", opt.k, "parameter k");
        sub->add_option("--m", opt.m, "parameter m");
        sub->add_option("--n", opt.n, "parameter n");
        sub->add_option("--p", opt.p, "parameter p");
    }
    sub->add_option("--tol", opt.tol, "relative tolerance (default: per-identity)");
    sub->add_option("--format", opt.format, "output format: markdown|json|csv")
        ->check(CLI::IsMember({"markdown", "md", "json", "csv"}));
    sub->add_option("--output", opt.output, "write the report to this file instead of stdout");
}

}  // namespace

CNum parse_complex(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    if (s.empty()) throw DomainError("empty complex value");

    if (s.back() != 'i' && s.back() != 'I') return CNum(parse_real(s), 0.0);

    s.pop_back();  // imaginary part present
    // locate the sign separating re and im (skip a leading sign and
    // exponent signs)
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary: "i", "-i", "2i", ...
        if (s.empty() || s == "+") return CNum(0.0, 1.0);
        if (s == "-") return CNum(0.0, -1.0);
        return CNum(0.0, parse_real(s));
    }
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return CNum(parse_real(re), parse_real(im));
}

int run(int argc, const char* const* argv) {
    CLI::App app{"zetatab: numerical audit of a table of definite integrals\n"
                 "evaluated against Hurwitz-zeta / gamma / digamma closed forms"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* c_list = app.add_subcommand("list", "list the registered identities");
    add_common(c_list, opt, false);
    CLI::App* c_verify = app.add_subcommand("verify", "verify one identity at one parameter point");
    c_verify->add_option("--identity", opt.identity, "identity id, e.g. E13")->required();
    add_common(c_verify, opt, true);
    CLI::App* c_sweep = app.add_subcommand("sweep", "verify one identity over a parameter grid");
    c_sweep->add_option("--identity", opt.identity, "identity id")->required();
    add_common(c_sweep, opt, true);
    CLI::App* c_table = app.add_subcommand("table", "audit the full 18-row integral table");
    add_common(c_table, opt, false);
    CLI::App* c_constants = app.add_subcommand("constants", "print the classical constants");
    add_common(c_constants, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, returns 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_list->parsed()) return cmd_list(opt);
        if (c_verify->parsed()) return cmd_verify(opt);
        if (c_sweep->parsed()) return cmd_sweep(opt);
        if (c_table->parsed()) return cmd_table(opt);
        if (c_constants->parsed()) return cmd_constants(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("zetatab");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace zetatab::cli
