#ifndef CONECERT_FORGE_HPP
#define CONECERT_FORGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "conecert/certify.hpp"
#include "conecert/rng.hpp"

namespace conecert {

struct GenConfig {
    int m = 4, n = 4;
    long coeff_bound = 10;
    std::uint64_t seed = 0;
    int max_resamples = 64;
    std::optional<Rational> t;

    void validate_theorem_mode() const {
        if (m < 4 || n < 4) throw error("theorem mode requires m, n >= 4");
        if (coeff_bound < 1) throw error("coefficient bound must be >= 1");
        if (max_resamples < 0) throw error("max_resamples must be >= 0");
    }
};

namespace detail {

constexpr std::uint64_t kTagF1 = 1, kTagF2 = 2, kTagFinf = 3;

inline HomForm sample_f1(const GenConfig& cfg, std::uint64_t attempt) {
    SplitMix64 st = substream(cfg.seed, kTagF1, attempt);
    Exp slot{};
    slot[2] = static_cast<std::uint16_t>(cfg.m);
    return random_form_forced(3, cfg.m, cfg.coeff_bound, st, slot);
}

inline HomForm sample_f2(const GenConfig& cfg, std::uint64_t attempt) {
    SplitMix64 st = substream(cfg.seed, kTagF2, attempt);
    Exp slot{};
    slot[2] = static_cast<std::uint16_t>(cfg.n);
    return random_form_forced(3, cfg.n, cfg.coeff_bound, st, slot);
}

// finf additionally avoids both cone vertices (pure z3 and z4 coefficients
// nonzero).  That is an open dense condition on "general" surfaces and it is
// what lets the elimination run on the interpolated fast path.
inline HomForm sample_finf(const GenConfig& cfg, std::uint64_t attempt) {
    SplitMix64 st = substream(cfg.seed, kTagFinf, attempt);
    int d = cfg.m + cfg.n;
    Exp z3{}, z4{};
    z3[2] = static_cast<std::uint16_t>(d);
    z4[3] = static_cast<std::uint16_t>(d);
    HomForm f = random_form_forced(4, d, cfg.coeff_bound, st, z3);
    if (is_zero(f.coeff(z4))) {
        long c = 0;
        while (c == 0) c = st.uniform_int(-cfg.coeff_bound, cfg.coeff_bound);
        f = add(f, HomForm::monomial(4, z4, Rational(c)));
    }
    return f;
}

}  // namespace detail

struct BuildResult {
    std::optional<DeformationFamily> family;
    Certificate certificate;
    std::optional<GammaForm> gamma;
    bool passed = false;
    bool budget_exhausted = false;
    int resamples = 0;
    std::uint64_t f1_attempts = 0, f2_attempts = 0, finf_attempts = 0;  // final stream indices
    std::vector<std::string> log;
};

// Samples (f1, f2, finf), certifies, and on failure resamples only the
// failing ingredients: curve-level failures redraw the curve, condition
// (i)/(ii) failures redraw finf.  Stops at pass or when the resample budget
// is exhausted (the last certificate is reported either way).
inline BuildResult build_family(const GenConfig& cfg, const CertifyOptions& numeric_opts = {}) {
    cfg.validate_theorem_mode();
    BuildResult out;
    std::uint64_t a1 = 0, a2 = 0, ai = 0;
    HomForm f1 = detail::sample_f1(cfg, a1);
    HomForm f2 = detail::sample_f2(cfg, a2);
    HomForm finf = detail::sample_finf(cfg, ai);

    CertifyOptions exact_opts;  // numeric summaries only on the final pass
    exact_opts.run_numeric = false;

    while (true) {
        DeformationFamily fam(ConePair(f1, f2), finf, cfg.t);
        CertifyOutcome oc = certify_family(fam, exact_opts);
        oc.certificate.inputs.seed = cfg.seed;
        oc.certificate.inputs.coeff_bound = cfg.coeff_bound;
        oc.certificate.inputs.resamples_used = out.resamples;

        out.f1_attempts = a1;
        out.f2_attempts = a2;
        out.finf_attempts = ai;
        if (oc.certificate.overall == Verdict::Pass) {
            if (numeric_opts.run_numeric) {
                CertifyOptions nopts = numeric_opts;
                nopts.numeric_seed = cfg.seed;
                oc.certificate.sweep_f1 =
                    numeric_fiber_sweep(f1, 2, nopts.sweep_samples, nopts.cluster_eps, nopts.threads);
                oc.certificate.sweep_f2 =
                    numeric_fiber_sweep(f2, 2, nopts.sweep_samples, nopts.cluster_eps, nopts.threads);
                oc.certificate.line_f1 =
                    numeric_line_gamma_check(fam, *oc.gamma, nopts.line_samples, nopts.line_eps,
                                             nopts.cluster_eps, nopts.threads, nopts.numeric_seed);
            }
            out.family.emplace(std::move(fam));
            out.certificate = std::move(oc.certificate);
            out.gamma = std::move(oc.gamma);
            out.passed = true;
            return out;
        }

        bool redraw_f1 = false, redraw_f2 = false, redraw_finf = false;
        std::string why;
        for (const auto& c : oc.certificate.checks) {
            if (c.verdict == Verdict::Pass) continue;
            if (c.name == "vertex_a" || c.name == "smooth_F1" || c.name == "fiber_min_F1")
                redraw_f1 = true;
            else if (c.name == "vertex_b" || c.name == "smooth_F2" || c.name == "fiber_min_F2")
                redraw_f2 = true;
            else
                redraw_finf = true;
            if (!why.empty()) why += ", ";
            why += c.name;
        }
        if (out.resamples >= cfg.max_resamples) {
            out.certificate = std::move(oc.certificate);
            out.gamma = std::move(oc.gamma);
            out.family.emplace(std::move(fam));
            out.budget_exhausted = true;
            return out;
        }
        ++out.resamples;
        out.log.push_back("resample " + std::to_string(out.resamples) + ": failing [" + why + "]");
        if (redraw_f1) f1 = detail::sample_f1(cfg, ++a1);
        if (redraw_f2) f2 = detail::sample_f2(cfg, ++a2);
        if (redraw_finf) finf = detail::sample_finf(cfg, ++ai);
    }
}

}  // namespace conecert

#endif
