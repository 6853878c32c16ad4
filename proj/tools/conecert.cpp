// Command-line front end: construct/verify deformation families of cone
// unions, build the Remark's resultant projection, and run the numeric
// samplers.  Exit codes: 0 certificate pass, 2 certified fail, 3 resample
// budget exhausted or inconclusive, 1 usage or I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conecert/conecert.hpp"

namespace fs = std::filesystem;
using namespace conecert;

namespace {

int exit_code_for(const Certificate& cert, bool budget_exhausted = false) {
    if (cert.overall == Verdict::Pass) return 0;
    if (budget_exhausted || cert.overall == Verdict::Inconclusive) return 3;
    return 2;
}

void print_cert_summary(const Certificate& cert) {
    for (const auto& c : cert.checks)
        std::printf("  %-14s %-13s %s\n", c.name.c_str(), verdict_name(c.verdict),
                    c.witness.c_str());
    std::printf("overall: %s\n", verdict_name(cert.overall));
}

std::vector<Rational> parse_point(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of hyperbolic deformation families of cone unions"};
    app.require_subcommand(1);

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "sample a family until its certificate passes");
    int c_m = 4, c_n = 4, c_max = 64, c_threads = 1, c_sweep = 2000, c_line = 200;
    std::uint64_t c_seed = 0;
    long c_bound = 10;
    std::string c_t, c_out;
    construct->add_option("--m", c_m, "degree of the first cone")->capture_default_str();
    construct->add_option("--n", c_n, "degree of the second cone")->capture_default_str();
    construct->add_option("--seed", c_seed, "generator seed")->required();
    construct->add_option("--coeff-bound", c_bound, "coefficient bound B")->capture_default_str();
    construct->add_option("--t", c_t, "emit the surface at this t (default 1/1000; uncertified)")
        ->expected(0, 1);
    construct->add_option("--max-resamples", c_max, "resample budget")->capture_default_str();
    construct->add_option("--out", c_out, "output directory")->required();
    construct->add_option("--threads", c_threads, "threads for the numeric samplers")
        ->capture_default_str();
    construct->add_option("--sweep-samples", c_sweep, "fiber sweep sample count")
        ->capture_default_str();
    construct->add_option("--line-samples", c_line, "line check fiber count")->capture_default_str();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "certify a given (f1, f2, finf) triple");
    std::string v_f1, v_f2, v_finf, v_out;
    int v_threads = 1, v_sweep = 2000, v_line = 200;
    verify->add_option("--f1", v_f1, "f1 file (vars z1 z2 z3)")->required();
    verify->add_option("--f2", v_f2, "f2 file (vars z1 z2 z4)")->required();
    verify->add_option("--finf", v_finf, "finf file (4 variables)")->required();
    verify->add_option("--out", v_out, "certificate JSON path")->required();
    verify->add_option("--threads", v_threads)->capture_default_str();
    verify->add_option("--sweep-samples", v_sweep)->capture_default_str();
    verify->add_option("--line-samples", v_line)->capture_default_str();

    // ---- remark ----
    auto* remark = app.add_subcommand("remark", "resultant projection of two cones in P^4");
    std::string r_f, r_g, r_out;
    remark->add_option("--f", r_f, "f file (vars z0 z1 z2), degree m >= 4")->required();
    remark->add_option("--g", r_g, "g file (vars z0 z3 z4), degree n >= 2")->required();
    remark->add_option("--out", r_out, "output directory")->required();

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "numeric cross-checks for a stored family");
    std::string s_family, s_out;
    int s_samples = 200, s_threads = 1, s_sweep = 2000;
    double s_eps = 1e-8;
    sample->add_option("--family", s_family, "family directory from `construct`")->required();
    sample->add_option("--samples", s_samples, "line check fiber count")->capture_default_str();
    sample->add_option("--eps", s_eps, "|finf| threshold after unit normalization")
        ->capture_default_str();
    sample->add_option("--sweep-samples", s_sweep)->capture_default_str();
    sample->add_option("--threads", s_threads)->capture_default_str();
    sample->add_option("--out", s_out, "report path (default: family dir / sample_report.json)");

    // ---- poly utilities ----
    auto* poly = app.add_subcommand("poly", "polynomial utilities");
    poly->require_subcommand(1);
    auto* peval = poly->add_subcommand("eval", "evaluate a form at an exact point");
    std::string pe_in, pe_point;
    peval->add_option("--in", pe_in, "form file")->required();
    peval->add_option("--point", pe_point, "comma-separated rational coordinates")->required();
    auto* pres = poly->add_subcommand("res", "Sylvester resultant of two forms");
    std::string pr_f, pr_g, pr_out;
    int pr_var = 0;
    pres->add_option("--f", pr_f)->required();
    pres->add_option("--g", pr_g)->required();
    pres->add_option("--var", pr_var, "eliminated variable index (0-based)")->required();
    pres->add_option("--out", pr_out, "output file (stdout if omitted)");
    auto* pdisc = poly->add_subcommand("disc", "discriminant in one variable");
    std::string pd_in, pd_out;
    int pd_var = 0;
    pdisc->add_option("--in", pd_in)->required();
    pdisc->add_option("--var", pd_var, "variable index (0-based)")->required();
    pdisc->add_option("--out", pd_out, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            GenConfig cfg;
            cfg.m = c_m;
            cfg.n = c_n;
            cfg.seed = c_seed;
            cfg.coeff_bound = c_bound;
            cfg.max_resamples = c_max;
            bool emit_surface = construct->count("--t") > 0;
            if (emit_surface) cfg.t = parse_rational(c_t.empty() ? "1/1000" : c_t);
            CertifyOptions nopts;
            nopts.run_numeric = true;
            nopts.threads = c_threads;
            nopts.sweep_samples = c_sweep;
            nopts.line_samples = c_line;

            BuildResult res = build_family(cfg, nopts);
            fs::create_directories(c_out);
            const DeformationFamily& fam = *res.family;
            io_write_form(fam.cones.f1, fs::path(c_out) / "f1.txt");
            io_write_form(fam.cones.f2, fs::path(c_out) / "f2.txt");
            io_write_form(fam.f_inf, fs::path(c_out) / "finf.txt");
            if (res.gamma && !res.gamma->degenerate())
                io_write_form(res.gamma->R, fs::path(c_out) / "R.txt");
            if (emit_surface)
                io_write_form(fam.surface_at(*cfg.t), fs::path(c_out) / "surface.txt");
            io_write_certificate(res.certificate, fs::path(c_out) / "certificate.json");
            for (const auto& l : res.log) std::printf("%s\n", l.c_str());
            print_cert_summary(res.certificate);
            if (res.budget_exhausted)
                std::printf("resample budget exhausted after %d resamples\n", res.resamples);
            return exit_code_for(res.certificate, res.budget_exhausted);
        }

        if (*verify) {
            HomForm f1 = io_read_form(v_f1);
            HomForm f2 = io_read_form(v_f2);
            HomForm finf = io_read_form(v_finf);
            DeformationFamily fam(ConePair(f1, f2), finf);
            CertifyOptions opts;
            opts.run_numeric = true;
            opts.threads = v_threads;
            opts.sweep_samples = v_sweep;
            opts.line_samples = v_line;
            Certificate cert = assemble_certificate(fam, opts);
            io_write_certificate(cert, v_out);
            print_cert_summary(cert);
            return exit_code_for(cert);
        }

        if (*remark) {
            HomForm f = io_read_form(r_f);
            HomForm g = io_read_form(r_g);
            RemarkSurface s = remark_surface(f, g);
            RemarkStructureReport rep = remark_structure_report(s);
            fs::create_directories(r_out);
            io_write_form(s.r, fs::path(r_out) / "r.txt");
            write_text_file(fs::path(r_out) / "remark_report.json",
                            remark_report_to_json(s, rep).dump(2) + "\n");
            std::printf("deg r = %d (expected %d)\n", s.r.degree(), s.m * s.n);
            std::printf("confirmed singular points: %d of %d expected\n",
                        rep.confirmed_singular_points, s.m + s.n);
            std::printf("max line residual: %s\n", format_ld(rep.max_line_residual).c_str());
            std::printf("extra singular clusters from scan: %d\n", rep.extra_singular_clusters);
            return 0;
        }

        if (*sample) {
            fs::path dir(s_family);
            HomForm f1 = io_read_form(dir / "f1.txt");
            HomForm f2 = io_read_form(dir / "f2.txt");
            HomForm finf = io_read_form(dir / "finf.txt");
            DeformationFamily fam(ConePair(f1, f2), finf);
            GammaForm gamma = gamma_eliminate_forms(f1, f2, finf);
            SweepReport s1 = numeric_fiber_sweep(f1, 2, s_sweep, 1e-6L, s_threads);
            SweepReport s2 = numeric_fiber_sweep(f2, 2, s_sweep, 1e-6L, s_threads);
            LineReport line = numeric_line_gamma_check(fam, gamma, s_samples,
                                                       static_cast<long double>(s_eps), 1e-6L,
                                                       s_threads, 0);
            fs::path out = s_out.empty() ? dir / "sample_report.json" : fs::path(s_out);
            write_text_file(out, sample_report_to_json(s1, s2, line).dump(2) + "\n");
            std::printf("fiber sweep minima: f1 = %d, f2 = %d\n", s1.min_distinct, s2.min_distinct);
            std::printf("line check: min = %d, generic = %d over %d lines\n", line.min_count,
                        line.generic_count, line.lines_checked);
            return 0;
        }

        if (*peval) {
            HomForm f = io_read_form(pe_in);
            std::vector<Rational> pt = parse_point(pe_point);
            std::printf("%s\n", to_string(eval(f, pt)).c_str());
            return 0;
        }
        if (*pres) {
            HomForm f = io_read_form(pr_f);
            HomForm g = io_read_form(pr_g);
            HomForm r = sylvester_resultant(f, g, pr_var);
            std::string text = format_form(r);
            if (pr_out.empty())
                std::fputs(text.c_str(), stdout);
            else
                write_text_file(pr_out, text);
            return 0;
        }
        if (*pdisc) {
            HomForm f = io_read_form(pd_in);
            HomForm d = discriminant(f, pd_var);
            std::string text = format_form(d);
            if (pd_out.empty())
                std::fputs(text.c_str(), stdout);
            else
                write_text_file(pd_out, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
