#ifndef CONECERT_CERTIFY_HPP
#define CONECERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "conecert/binary.hpp"
#include "conecert/gamma.hpp"
#include "conecert/homform.hpp"
#include "conecert/macaulay.hpp"
#include "conecert/rng.hpp"
#include "conecert/roots.hpp"
#include "conecert/subresultant.hpp"

namespace conecert {

// Two cones through a = (0:0:0:1) and b = (0:0:1:0).  f1 lives in (z1,z2,z3),
// f2 in (z1,z2,z4) — the third slot of f2 means z4, so independence of the
// other cone variable is structural, not checked at runtime.
struct ConePair {
    HomForm f1, f2;
    int m = 0, n = 0;

    ConePair(HomForm f1_, HomForm f2_) : f1(std::move(f1_)), f2(std::move(f2_)) {
        if (f1.is_zero() || f2.is_zero()) throw error("cone pair: zero form");
        if (f1.nvars() != 3 || f2.nvars() != 3) throw error("cone pair: trivariate forms required");
        m = f1.degree();
        n = f2.degree();
        if (m < 4 || n < 4) throw error("cone pair: theorem requires m, n >= 4");
    }

    static ProjectivePoint vertex_a() {
        return ProjectivePoint({Rational(0), Rational(0), Rational(0), Rational(1)});
    }
    static ProjectivePoint vertex_b() {
        return ProjectivePoint({Rational(0), Rational(0), Rational(1), Rational(0)});
    }
};

struct DeformationFamily {
    ConePair cones;
    HomForm f_inf;
    std::optional<Rational> t;

    DeformationFamily(ConePair c, HomForm finf, std::optional<Rational> t_ = std::nullopt)
        : cones(std::move(c)), f_inf(std::move(finf)), t(std::move(t_)) {
        if (f_inf.is_zero() || f_inf.nvars() != 4) throw error("family: finf must be a 4-variable form");
        if (f_inf.degree() != cones.m + cones.n) throw error("family: deg finf must equal m+n");
    }

    // f1(z1,z2,z3) * f2(z1,z2,z4) as a 4-variable form.
    HomForm product_surface() const {
        return mul(insert_var(cones.f1, 3), insert_var(cones.f2, 2));
    }

    // f1 f2 + t finf; the deformation parameter is a sample value, never part
    // of what the certificate asserts.
    HomForm surface_at(const Rational& tval) const {
        return add(product_surface(), scale(f_inf, tval));
    }
};

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

// ---- individual checks -------------------------------------------------------

struct VertexCheck {
    bool pass = false;
    Rational value_f1, value_f2;  // f1(0,0,1), f2(0,0,1)
};

inline VertexCheck check_vertices(const ConePair& c) {
    VertexCheck out;
    std::vector<Rational> e3{Rational(0), Rational(0), Rational(1)};
    out.value_f1 = eval(c.f1, e3);
    out.value_f2 = eval(c.f2, e3);
    out.pass = !is_zero(out.value_f1) && !is_zero(out.value_f2);
    return out;
}

struct SmoothCheck {
    Verdict verdict = Verdict::Inconclusive;
    MacaulayResult macaulay;
};

// Smoothness of a plane curve of degree >= 4: the three partials have no
// common projective zero iff their Macaulay resultant is nonzero.
inline SmoothCheck check_smooth(const HomForm& f, std::uint64_t seed = 0x736d6f6f7468ull) {
    if (f.is_zero() || f.nvars() != 3) throw error("check_smooth: trivariate form required");
    if (f.degree() < 4) throw error("check_smooth: degree below the theorem range (m, n >= 4)");
    SmoothCheck out;
    out.macaulay = macaulay_resultant3(diff(f, 0), diff(f, 1), diff(f, 2), seed);
    switch (out.macaulay.verdict) {
        case MacaulayResult::Verdict::Nonzero: out.verdict = Verdict::Pass; break;
        case MacaulayResult::Verdict::Zero: out.verdict = Verdict::Fail; break;
        default: out.verdict = Verdict::Inconclusive; break;
    }
    return out;
}

struct FiberMinResult {
    int min_distinct = 0;
    int max_gcd_degree = 0;        // over all fibers
    BinaryForm achieving_gcd;      // gcd of the psc prefix realizing the max; zero if max is 0
};

// Minimum over (p1:p2) in P^1 of the number of distinct roots of
// f(p1, p2, .): with constant leading coefficient every fiber has
// deg-minus-gcd-degree distinct roots, and the gcd degree at a point is the
// smallest k with psc[k] nonzero there.  So the worst fiber realizes the
// largest k whose psc prefix still has a common projective zero.
inline FiberMinResult fiber_min_distinct_full(const HomForm& f, int fiber_var) {
    if (f.is_zero() || f.nvars() != 3) throw error("fiber_min: trivariate form required");
    const int m = f.degree();
    if (f.degree_in(fiber_var) != m)
        throw error("fiber_min: leading coefficient in the fiber variable must be a nonzero constant");
    FiberMinResult out;
    if (m == 1) {
        out.min_distinct = 1;
        return out;
    }
    SubresultantChain chain = subresultant_chain(f, diff(f, fiber_var), fiber_var);
    int max_k = 0;
    BinaryForm achieving;
    for (int k = 1; k <= m - 1; ++k) {
        std::vector<BinaryForm> members;
        for (int i = 0; i < k; ++i) {
            const HomForm& p = chain.psc[static_cast<size_t>(i)];
            if (!p.is_zero()) members.push_back(contract_var(p, fiber_var));
        }
        if (members.empty()) {
            max_k = k;  // every psc so far vanishes identically
            achieving = BinaryForm();
            continue;
        }
        BinaryForm g = binary_gcd(members);
        if (binary_is_constant(g)) break;
        max_k = k;
        achieving = g;
    }
    out.max_gcd_degree = max_k;
    out.achieving_gcd = achieving;
    out.min_distinct = m - max_k;
    return out;
}

inline int fiber_min_distinct(const HomForm& f, int fiber_var) {
    return fiber_min_distinct_full(f, fiber_var).min_distinct;
}

struct ConditionReport {
    bool condition_i = false;
    bool condition_ii = false;
    int deg_R = -1;
    int expected_deg_R = 0;
    bool squarefree = false;
    BinaryForm gcd_ii;         // gcd(R, D1*D2)
    std::optional<BinaryForm> gcd_i;  // gcd(R, dR/dz1), computed when (i) fails
};

// (i): no two distinct Gamma-cap-X_inf points over one direction, certified as
// "R has full degree mn(m+n) and is squarefree" (full degree also forces
// transversality along Gamma at infinity).  (ii): X_inf avoids the special
// fibers, certified as gcd(R, D1 D2) constant.
inline ConditionReport check_condition_i_ii(const GammaForm& g) {
    if (g.degenerate())
        throw error("gamma degenerate (R == 0): X_infinity contains the double curve; resample finf");
    ConditionReport out;
    out.expected_deg_R = g.expected_degree();
    out.deg_R = g.R.degree();
    // gcd(R, dR/dz1, dR/dz2) strips exactly one power off every repeated
    // factor, so constancy is the squarefree test; the fast path avoids the
    // big remainder sequence when a prime already certifies coprimality
    std::optional<bool> fast = binary_squarefree_fast(g.R);
    if (fast && *fast) {
        out.squarefree = true;
    } else {
        out.gcd_i = binary_gcd(std::vector<BinaryForm>{g.R, diff(g.R, 0), diff(g.R, 1)});
        out.squarefree = binary_is_constant(*out.gcd_i);
    }
    out.condition_i = (out.deg_R == out.expected_deg_R) && out.squarefree;
    out.gcd_ii = binary_gcd(std::vector<BinaryForm>{g.R, mul(g.D1, g.D2)});
    out.condition_ii = binary_is_constant(out.gcd_ii);
    return out;
}

// ---- numeric cross-checks ----------------------------------------------------
// Advisory only: these reports are recorded next to the exact verdicts and
// never influence them.

struct SweepReport {
    int samples = 0;
    int targeted = 0;
    int converged = 0;
    int skipped = 0;
    int min_distinct = -1;
    long double cluster_eps = 0.0L;
};

// Complex root count per fiber along a deterministic low-discrepancy sweep of
// unit-modulus directions (1 : e^{i theta}), plus targeted samples at the
// exact worst fibers (roots of the psc-prefix gcd from the exact analysis).
inline SweepReport numeric_fiber_sweep(const HomForm& f, int fiber_var, int samples,
                                       long double cluster_eps, int threads = 1) {
    if (samples < 1) throw error("numeric_fiber_sweep: samples >= 1 required");
    SweepReport rep;
    rep.samples = samples;
    rep.cluster_eps = cluster_eps;

    std::vector<std::pair<CLD, CLD>> dirs;
    dirs.reserve(static_cast<size_t>(samples));
    const long double golden = 0.6180339887498948482L;
    for (int k = 0; k < samples; ++k) {
        long double frac = std::fmod(static_cast<long double>(k + 1) * golden, 1.0L);
        long double th = 2.0L * std::numbers::pi_v<long double> * frac;
        dirs.emplace_back(CLD(1.0L), CLD(std::cos(th), std::sin(th)));
    }
    // targeted samples at the exact special locus; the squarefree part keeps
    // the numeric root-finding at full accuracy
    FiberMinResult exact = fiber_min_distinct_full(f, fiber_var);
    if (!exact.achieving_gcd.is_zero() && exact.achieving_gcd.degree() > 0) {
        BinaryForm locus = squarefree_part(exact.achieving_gcd);
        for (const auto& r : binary_rational_roots(locus)) {
            dirs.emplace_back(CLD(to_long_double(r.p1)), CLD(to_long_double(r.p2)));
            ++rep.targeted;
        }
        BinaryRootsNumeric nroots = binary_roots_numeric(locus);
        if (nroots.converged)
            for (const auto& pt : nroots.points) {
                dirs.emplace_back(pt.a, pt.b);
                ++rep.targeted;
            }
    } else if (exact.max_gcd_degree > 0) {
        // every psc in the prefix vanished identically: all fibers are equally
        // special, the sweep itself covers them
    }

    std::vector<int> counts(dirs.size(), -1);
    parallel_for_index(dirs.size(), threads, [&](size_t i) {
        auto poly = fiber_poly_cld(f, fiber_var, dirs[i].first, dirs[i].second);
        AberthResult r = aberth_roots(poly);
        if (!r.converged) return;
        std::vector<P1Point> pts;
        for (const CLD& z : r.roots) pts.push_back(p1_from_affine(z));
        for (int k = 0; k < r.zero_roots; ++k) pts.push_back(p1_from_affine(CLD(0.0L)));
        for (int k = 0; k < r.degree_drop; ++k) pts.push_back(p1_infinity());
        counts[i] = cluster_count_p1(pts, cluster_eps);
    });
    rep.min_distinct = -1;
    for (int c : counts) {
        if (c < 0) {
            ++rep.skipped;
            continue;
        }
        ++rep.converged;
        if (rep.min_distinct < 0 || c < rep.min_distinct) rep.min_distinct = c;
    }
    return rep;
}

struct LineReport {
    int fibers = 0;
    int targeted = 0;
    int lines_checked = 0;
    int skipped = 0;
    int min_count = -1;      // min over lines of #(distinct Gamma points off X_inf)
    int generic_count = -1;  // most frequent count (should be n)
    long double eps = 0.0L;
};

// Samples p on F1 and counts, per line <p,a>, the distinct Gamma points with
// normalized |f_inf| above eps, through the bijection with the f2-fiber over
// pi_0(p).  Fibers come from a seeded stream; the exact special fibers of f2
// (roots of D2) are targeted as well, because those lines carry the minimum.
inline LineReport numeric_line_gamma_check(const DeformationFamily& fam, const GammaForm& gamma,
                                           int p_samples, long double eps,
                                           long double cluster_eps = 1e-6L, int threads = 1,
                                           std::uint64_t seed = 0) {
    if (p_samples < 1) throw error("numeric_line_gamma_check: samples >= 1 required");
    LineReport rep;
    rep.eps = eps;
    rep.fibers = p_samples;

    std::vector<std::pair<CLD, CLD>> dirs;
    for (int k = 0; k < p_samples; ++k) {
        SplitMix64 st = substream(seed, 0x4c494e45ull, static_cast<std::uint64_t>(k));
        long double th = 2.0L * std::numbers::pi_v<long double> *
                         (static_cast<long double>(st.below(1u << 30)) / (1u << 30));
        long double lr = (static_cast<long double>(st.below(1u << 30)) / (1u << 30)) * 2.0L - 1.0L;
        long double r = std::exp(lr * 0.69314718055994530942L);  // modulus in [1/2, 2]
        dirs.emplace_back(CLD(1.0L), r * CLD(std::cos(th), std::sin(th)));
    }
    if (!gamma.D2.is_zero() && gamma.D2.degree() > 0) {
        BinaryRootsNumeric nroots = binary_roots_numeric(squarefree_part(gamma.D2));
        if (nroots.converged)
            for (const auto& pt : nroots.points) {
                dirs.emplace_back(pt.a, pt.b);
                ++rep.targeted;
            }
    }

    const HomForm& f1 = fam.cones.f1;
    const HomForm& f2 = fam.cones.f2;
    const HomForm& finf = fam.f_inf;

    struct FiberOutcome {
        bool converged = false;
        int min_count = -1;
        int max_count = -1;
        int lines = 0;
    };
    std::vector<FiberOutcome> outs(dirs.size());
    parallel_for_index(dirs.size(), threads, [&](size_t i) {
        CLD p1 = dirs[i].first, p2 = dirs[i].second;
        AberthResult tr = aberth_roots(fiber_poly_cld(f1, 2, p1, p2));
        AberthResult sr = aberth_roots(fiber_poly_cld(f2, 2, p1, p2));
        if (!tr.converged || !sr.converged) return;
        FiberOutcome& o = outs[i];
        o.converged = true;
        std::vector<CLD> svals = sr.roots;
        for (int k = 0; k < sr.zero_roots; ++k) svals.push_back(CLD(0.0L));
        // distinct s-roots: cluster representatives
        std::vector<P1Point> spts;
        for (const CLD& s : svals) spts.push_back(p1_from_affine(s));
        std::vector<CLD> reps;
        std::vector<bool> used(svals.size(), false);
        for (size_t u = 0; u < svals.size(); ++u) {
            if (used[u]) continue;
            reps.push_back(svals[u]);
            for (size_t v = u + 1; v < svals.size(); ++v)
                if (p1_dist(spts[u], spts[v]) <= cluster_eps) used[v] = true;
        }
        std::vector<CLD> tvals = tr.roots;
        for (int k = 0; k < tr.zero_roots; ++k) tvals.push_back(CLD(0.0L));
        for (const CLD& p3 : tvals) {
            int count = 0;
            for (const CLD& s : reps) {
                std::vector<CLD> q{p1, p2, p3, s};
                long double norm = 0.0L;
                for (const CLD& c : q) norm += std::norm(c);
                norm = std::sqrt(norm);
                for (CLD& c : q) c /= norm;
                if (std::abs(eval_cld(finf, q)) > eps) ++count;
            }
            ++o.lines;
            if (o.min_count < 0 || count < o.min_count) o.min_count = count;
            if (count > o.max_count) o.max_count = count;
        }
    });

    std::map<int, int> histogram;
    for (const auto& o : outs) {
        if (!o.converged) {
            ++rep.skipped;
            continue;
        }
        rep.lines_checked += o.lines;
        if (o.min_count >= 0 && (rep.min_count < 0 || o.min_count < rep.min_count))
            rep.min_count = o.min_count;
        if (o.max_count >= 0) ++histogram[o.max_count];
    }
    int best = 0;
    for (const auto& [count, freq] : histogram)
        if (freq > best) {
            best = freq;
            rep.generic_count = count;
        }
    return rep;
}

// ---- certificate assembly ------------------------------------------------------

struct CheckRecord {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    std::string witness;
};

struct CertificateInputs {
    int m = 0, n = 0;
    std::optional<std::uint64_t> seed;
    std::optional<long> coeff_bound;
    std::string f1_hash, f2_hash, finf_hash;
    std::optional<std::string> t;  // sample parameter, uncertified
    int resamples_used = 0;
};

struct Certificate {
    int schema = 1;
    CertificateInputs inputs;
    std::vector<CheckRecord> checks;
    std::optional<SweepReport> sweep_f1, sweep_f2;
    std::optional<LineReport> line_f1;
    Verdict overall = Verdict::Fail;

    const CheckRecord* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    const CheckRecord* first_failing() const {
        for (const auto& c : checks)
            if (c.verdict != Verdict::Pass) return &c;
        return nullptr;
    }
};

struct CertifyOptions {
    bool run_numeric = false;
    int sweep_samples = 2000;
    long double cluster_eps = 1e-6L;
    int line_samples = 200;
    long double line_eps = 1e-8L;
    int threads = 1;
    std::uint64_t numeric_seed = 0;
};

struct CertifyOutcome {
    Certificate certificate;
    std::optional<GammaForm> gamma;  // available when the vertex checks passed
};

// Runs every hypothesis check in fixed order and records verdicts with
// witnesses.  Overall verdict is pass iff every exact check passes; numeric
// summaries are attached afterwards and never feed back.
inline CertifyOutcome certify_family(const DeformationFamily& fam,
                                     const CertifyOptions& opts = {}) {
    CertifyOutcome outcome;
    Certificate& cert = outcome.certificate;
    cert.inputs.m = fam.cones.m;
    cert.inputs.n = fam.cones.n;
    cert.inputs.f1_hash = fnv1a64_hex(fam.cones.f1.to_string());
    cert.inputs.f2_hash = fnv1a64_hex(fam.cones.f2.to_string());
    cert.inputs.finf_hash = fnv1a64_hex(fam.f_inf.to_string());
    if (fam.t) cert.inputs.t = to_string(*fam.t);

    auto push = [&](std::string name, Verdict v, std::string witness) {
        cert.checks.push_back({std::move(name), v, std::move(witness)});
    };

    VertexCheck vc = check_vertices(fam.cones);
    push("vertex_a", is_zero(vc.value_f1) ? Verdict::Fail : Verdict::Pass, to_string(vc.value_f1));
    push("vertex_b", is_zero(vc.value_f2) ? Verdict::Fail : Verdict::Pass, to_string(vc.value_f2));

    SmoothCheck s1 = check_smooth(fam.cones.f1);
    push("smooth_F1", s1.verdict,
         s1.macaulay.value ? to_string(*s1.macaulay.value)
                           : ("coordinate changes: " + std::to_string(s1.macaulay.coordinate_changes)));
    SmoothCheck s2 = check_smooth(fam.cones.f2);
    push("smooth_F2", s2.verdict,
         s2.macaulay.value ? to_string(*s2.macaulay.value)
                           : ("coordinate changes: " + std::to_string(s2.macaulay.coordinate_changes)));

    bool fibers_ok[2] = {false, false};
    std::optional<GammaForm> gamma;
    if (vc.pass) {
        FiberMinResult fm1 = fiber_min_distinct_full(fam.cones.f1, 2);
        fibers_ok[0] = fm1.min_distinct >= 3;
        push("fiber_min_F1", fibers_ok[0] ? Verdict::Pass : Verdict::Fail,
             std::to_string(fm1.min_distinct));
        FiberMinResult fm2 = fiber_min_distinct_full(fam.cones.f2, 2);
        fibers_ok[1] = fm2.min_distinct >= 3;
        push("fiber_min_F2", fibers_ok[1] ? Verdict::Pass : Verdict::Fail,
             std::to_string(fm2.min_distinct));

        gamma = gamma_eliminate_forms(fam.cones.f1, fam.cones.f2, fam.f_inf);
        if (gamma->degenerate()) {
            push("R_full_degree", Verdict::Fail, "R == 0 (Gamma contained in X_infinity)");
            push("R_squarefree", Verdict::Fail, "R == 0");
            push("R_coprime_disc", Verdict::Fail, "R == 0");
        } else {
            ConditionReport cr = check_condition_i_ii(*gamma);
            push("R_full_degree", cr.deg_R == cr.expected_deg_R ? Verdict::Pass : Verdict::Fail,
                 "deg R = " + std::to_string(cr.deg_R) + ", expected " +
                     std::to_string(cr.expected_deg_R));
            push("R_squarefree", cr.squarefree ? Verdict::Pass : Verdict::Fail,
                 cr.squarefree ? "gcd(R, R') = 1"
                               : ("gcd degree " + std::to_string(cr.gcd_i ? cr.gcd_i->degree() : -1)));
            push("R_coprime_disc", cr.condition_ii ? Verdict::Pass : Verdict::Fail,
                 cr.condition_ii ? "gcd(R, D1 D2) = 1"
                                 : ("gcd degree " + std::to_string(cr.gcd_ii.degree())));
        }
    } else {
        push("fiber_min_F1", Verdict::Inconclusive, "skipped: vertex condition failed");
        push("fiber_min_F2", Verdict::Inconclusive, "skipped: vertex condition failed");
        push("R_full_degree", Verdict::Inconclusive, "skipped: vertex condition failed");
        push("R_squarefree", Verdict::Inconclusive, "skipped: vertex condition failed");
        push("R_coprime_disc", Verdict::Inconclusive, "skipped: vertex condition failed");
    }

    bool any_fail = false, any_inconclusive = false;
    for (const auto& c : cert.checks) {
        any_fail = any_fail || c.verdict == Verdict::Fail;
        any_inconclusive = any_inconclusive || c.verdict == Verdict::Inconclusive;
    }
    cert.overall = any_fail ? Verdict::Fail
                            : (any_inconclusive ? Verdict::Inconclusive : Verdict::Pass);

    if (opts.run_numeric && vc.pass) {
        cert.sweep_f1 = numeric_fiber_sweep(fam.cones.f1, 2, opts.sweep_samples, opts.cluster_eps,
                                            opts.threads);
        cert.sweep_f2 = numeric_fiber_sweep(fam.cones.f2, 2, opts.sweep_samples, opts.cluster_eps,
                                            opts.threads);
        if (gamma && !gamma->degenerate())
            cert.line_f1 = numeric_line_gamma_check(fam, *gamma, opts.line_samples, opts.line_eps,
                                                    opts.cluster_eps, opts.threads, opts.numeric_seed);
    }
    outcome.gamma = std::move(gamma);
    return outcome;
}

inline Certificate assemble_certificate(const DeformationFamily& fam,
                                        const CertifyOptions& opts = {}) {
    return certify_family(fam, opts).certificate;
}

}  // namespace conecert

#endif

