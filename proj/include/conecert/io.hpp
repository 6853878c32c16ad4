#ifndef CONECERT_IO_HPP
#define CONECERT_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "conecert/certify.hpp"
#include "conecert/homform.hpp"
#include "conecert/remark.hpp"

namespace conecert {

using ordered_json = nlohmann::ordered_json;

// ---- polynomial text format ---------------------------------------------------
// Header `vars k deg d`, then one term per line: `c  e1 e2 ... ek` with c a
// rational p/q or integer.  `#` starts a comment.  Canonical term order on
// write; reads are strict (duplicate or non-homogeneous terms are rejected),
// so write-then-read is bit-exact.

inline std::string format_form(const HomForm& f) {
    std::ostringstream os;
    os << "vars " << (f.is_zero() ? 2 : f.nvars()) << " deg " << f.degree() << "\n";
    for (const auto& [e, c] : f.terms()) {
        os << to_string(c);
        for (int i = 0; i < f.nvars(); ++i) os << " " << e[static_cast<size_t>(i)];
        os << "\n";
    }
    return os.str();
}

inline HomForm parse_form(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int nvars = -1, deg = 0;
    std::vector<std::pair<Exp, Rational>> terms;
    std::map<Exp, int, ExpBefore> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (nvars < 0) {
            if (tok != "vars") throw parse_error("expected header `vars k deg d`", lineno);
            std::string degkw;
            if (!(ls >> nvars >> degkw >> deg) || degkw != "deg")
                throw parse_error("malformed header", lineno);
            if (nvars < 2 || nvars > kMaxVars)
                throw parse_error("variable count must be between 2 and 5", lineno);
            continue;
        }
        Rational c = parse_rational(tok);
        if (is_zero(c)) throw parse_error("zero coefficient term", lineno);
        Exp e{};
        for (int i = 0; i < nvars; ++i) {
            long v;
            if (!(ls >> v) || v < 0) throw parse_error("missing or negative exponent", lineno);
            if (v > 0xffff) throw parse_error("exponent too large", lineno);
            e[static_cast<size_t>(i)] = static_cast<std::uint16_t>(v);
        }
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens after exponents", lineno);
        if (exp_total(e) != deg) {
            std::ostringstream why;
            why << "term of degree " << exp_total(e) << " in a declared degree-" << deg
                << " form: `" << line << "`";
            throw parse_error(why.str(), lineno);
        }
        if (seen.count(e)) throw parse_error("duplicate exponent vector", lineno);
        seen.emplace(e, lineno);
        terms.emplace_back(e, c);
    }
    if (nvars < 0) throw parse_error("missing header", lineno);
    return HomForm::from_terms(nvars, terms);
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw error("write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void io_write_form(const HomForm& f, const std::filesystem::path& path) {
    write_text_file(path, format_form(f));
}

inline HomForm io_read_form(const std::filesystem::path& path) {
    return parse_form(read_text_file(path));
}

// ---- certificate JSON (schema 1) ------------------------------------------------

inline std::string format_ld(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9Lg", v);
    return buf;
}

inline ordered_json sweep_to_json(const SweepReport& r) {
    ordered_json j;
    j["samples"] = r.samples;
    j["targeted"] = r.targeted;
    j["converged"] = r.converged;
    j["skipped"] = r.skipped;
    j["min_distinct"] = r.min_distinct;
    j["cluster_eps"] = format_ld(r.cluster_eps);
    return j;
}

inline SweepReport sweep_from_json(const ordered_json& j) {
    SweepReport r;
    r.samples = j.at("samples").get<int>();
    r.targeted = j.at("targeted").get<int>();
    r.converged = j.at("converged").get<int>();
    r.skipped = j.at("skipped").get<int>();
    r.min_distinct = j.at("min_distinct").get<int>();
    r.cluster_eps = std::strtold(j.at("cluster_eps").get<std::string>().c_str(), nullptr);
    return r;
}

inline ordered_json line_to_json(const LineReport& r) {
    ordered_json j;
    j["fibers"] = r.fibers;
    j["targeted"] = r.targeted;
    j["lines_checked"] = r.lines_checked;
    j["skipped"] = r.skipped;
    j["min_count"] = r.min_count;
    j["generic_count"] = r.generic_count;
    j["eps"] = format_ld(r.eps);
    return j;
}

inline LineReport line_from_json(const ordered_json& j) {
    LineReport r;
    r.fibers = j.at("fibers").get<int>();
    r.targeted = j.at("targeted").get<int>();
    r.lines_checked = j.at("lines_checked").get<int>();
    r.skipped = j.at("skipped").get<int>();
    r.min_count = j.at("min_count").get<int>();
    r.generic_count = j.at("generic_count").get<int>();
    r.eps = std::strtold(j.at("eps").get<std::string>().c_str(), nullptr);
    return r;
}

inline ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["schema"] = cert.schema;
    ordered_json inputs;
    inputs["m"] = cert.inputs.m;
    inputs["n"] = cert.inputs.n;
    inputs["seed"] = cert.inputs.seed ? ordered_json(std::to_string(*cert.inputs.seed))
                                      : ordered_json(nullptr);
    inputs["coeff_bound"] =
        cert.inputs.coeff_bound ? ordered_json(*cert.inputs.coeff_bound) : ordered_json(nullptr);
    inputs["f1_hash"] = cert.inputs.f1_hash;
    inputs["f2_hash"] = cert.inputs.f2_hash;
    inputs["finf_hash"] = cert.inputs.finf_hash;
    inputs["t"] = cert.inputs.t ? ordered_json(*cert.inputs.t) : ordered_json(nullptr);
    if (cert.inputs.t) inputs["t_note"] = "uncertified sample parameter";
    inputs["resamples_used"] = cert.inputs.resamples_used;
    j["inputs"] = inputs;
    ordered_json checks = ordered_json::array();
    for (const auto& c : cert.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["verdict"] = verdict_name(c.verdict);
        cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    ordered_json num;
    num["fiber_sweep_f1"] = cert.sweep_f1 ? sweep_to_json(*cert.sweep_f1) : ordered_json(nullptr);
    num["fiber_sweep_f2"] = cert.sweep_f2 ? sweep_to_json(*cert.sweep_f2) : ordered_json(nullptr);
    num["line_gamma"] = cert.line_f1 ? line_to_json(*cert.line_f1) : ordered_json(nullptr);
    j["numeric"] = num;
    j["overall"] = verdict_name(cert.overall);
    return j;
}

inline Verdict verdict_from_name(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw error("unknown verdict `" + s + "`");
}

inline Certificate certificate_from_json(const ordered_json& j) {
    Certificate cert;
    cert.schema = j.at("schema").get<int>();
    if (cert.schema != 1) throw error("unsupported certificate schema");
    const auto& inputs = j.at("inputs");
    cert.inputs.m = inputs.at("m").get<int>();
    cert.inputs.n = inputs.at("n").get<int>();
    if (!inputs.at("seed").is_null())
        cert.inputs.seed = std::stoull(inputs.at("seed").get<std::string>());
    if (!inputs.at("coeff_bound").is_null())
        cert.inputs.coeff_bound = inputs.at("coeff_bound").get<long>();
    cert.inputs.f1_hash = inputs.at("f1_hash").get<std::string>();
    cert.inputs.f2_hash = inputs.at("f2_hash").get<std::string>();
    cert.inputs.finf_hash = inputs.at("finf_hash").get<std::string>();
    if (!inputs.at("t").is_null()) cert.inputs.t = inputs.at("t").get<std::string>();
    cert.inputs.resamples_used = inputs.at("resamples_used").get<int>();
    for (const auto& cj : j.at("checks")) {
        CheckRecord c;
        c.name = cj.at("name").get<std::string>();
        c.verdict = verdict_from_name(cj.at("verdict").get<std::string>());
        c.witness = cj.at("witness").get<std::string>();
        cert.checks.push_back(c);
    }
    const auto& num = j.at("numeric");
    if (!num.at("fiber_sweep_f1").is_null()) cert.sweep_f1 = sweep_from_json(num.at("fiber_sweep_f1"));
    if (!num.at("fiber_sweep_f2").is_null()) cert.sweep_f2 = sweep_from_json(num.at("fiber_sweep_f2"));
    if (!num.at("line_gamma").is_null()) cert.line_f1 = line_from_json(num.at("line_gamma"));
    cert.overall = verdict_from_name(j.at("overall").get<std::string>());
    return cert;
}

inline std::string certificate_to_string(const Certificate& cert) {
    return certificate_to_json(cert).dump(2) + "\n";
}

inline void io_write_certificate(const Certificate& cert, const std::filesystem::path& path) {
    write_text_file(path, certificate_to_string(cert));
}

inline Certificate io_read_certificate(const std::filesystem::path& path) {
    return certificate_from_json(ordered_json::parse(read_text_file(path)));
}

// ---- remark report JSON ---------------------------------------------------------

inline ordered_json remark_report_to_json(const RemarkSurface& s, const RemarkStructureReport& rep) {
    ordered_json j;
    j["m"] = s.m;
    j["n"] = s.n;
    j["deg_r"] = s.r.degree();
    ordered_json pts = ordered_json::array();
    for (const auto& p : rep.points) {
        ordered_json pj;
        pj["label"] = p.label;
        pj["exact"] = p.exact;
        pj["expected_multiplicity"] = p.expected_multiplicity;
        pj["low_order_vanish"] = p.low_order_vanish;
        pj["order_nonzero"] = p.order_nonzero;
        pj["max_low_order_residual"] = format_ld(p.max_low_order_residual);
        pts.push_back(pj);
    }
    j["singular_points"] = pts;
    j["confirmed_singular_points"] = rep.confirmed_singular_points;
    ordered_json lines = ordered_json::array();
    for (const auto& l : rep.lines) {
        ordered_json lj;
        lj["j"] = l.j;
        lj["k"] = l.k;
        lj["max_residual"] = format_ld(l.max_residual);
        lines.push_back(lj);
    }
    j["lines"] = lines;
    j["max_line_residual"] = format_ld(rep.max_line_residual);
    j["scan_starts"] = rep.scan_starts;
    j["extra_singular_clusters"] = rep.extra_singular_clusters;
    j["non_isolated_flag"] = rep.non_isolated_flag;
    j["tolerance"] = format_ld(rep.tolerance);
    return j;
}

inline ordered_json sample_report_to_json(const SweepReport& s1, const SweepReport& s2,
                                          const LineReport& line) {
    ordered_json j;
    j["fiber_sweep_f1"] = sweep_to_json(s1);
    j["fiber_sweep_f2"] = sweep_to_json(s2);
    j["line_gamma"] = line_to_json(line);
    return j;
}

}  // namespace conecert

#endif
