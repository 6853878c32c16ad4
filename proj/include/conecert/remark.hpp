#ifndef CONECERT_REMARK_HPP
#define CONECERT_REMARK_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "conecert/binary.hpp"
#include "conecert/homform.hpp"
#include "conecert/rng.hpp"
#include "conecert/roots.hpp"
#include "conecert/sylvester.hpp"

namespace conecert {

// One singular point of the projected surface Z = {r = 0} in P^3.  A-points
// come from the slice roots of f (shape (a1 : a2 : 0 : 0)), B-points from g
// (shape (0 : 0 : b1 : b2)).  Exact coordinates are kept when the slice root
// is rational; a numeric representative is always attached.
struct RemarkPoint {
    bool exact = false;
    std::optional<ProjectivePoint> exact_point;  // 4 coordinates, P^3
    std::array<CLD, 4> approx{};
    int expected_multiplicity = 0;
};

struct RemarkSurface {
    HomForm f;  // (z0, z1, z2), degree m
    HomForm g;  // (z0, z3, z4), degree n
    HomForm r;  // res_z0(f, g) in (z1..z4), degree mn
    int m = 0, n = 0;
    std::vector<RemarkPoint> A;  // m points, multiplicity n
    std::vector<RemarkPoint> B;  // n points, multiplicity m
    bool points_resolved = true;  // numeric root-finding converged
};

namespace detail {

// Slice z0 = 0 of a trivariate form in (z0, x, y) as a binary form in (x, y).
inline BinaryForm z0_slice(const HomForm& f) {
    std::vector<std::pair<Exp, Rational>> acc;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] != 0) continue;
        Exp r{};
        r[0] = e[1];
        r[1] = e[2];
        acc.emplace_back(r, c);
    }
    return HomForm::from_terms(2, acc);
}

inline std::vector<RemarkPoint> slice_points(const BinaryForm& slice, bool front_pair,
                                             int expected_mult, bool& resolved) {
    std::vector<RemarkPoint> out;
    auto put = [&](const std::optional<std::pair<Rational, Rational>>& exact, CLD a, CLD b) {
        RemarkPoint p;
        p.expected_multiplicity = expected_mult;
        if (exact) {
            p.exact = true;
            std::vector<Rational> coords(4, Rational(0));
            if (front_pair) {
                coords[0] = exact->first;
                coords[1] = exact->second;
            } else {
                coords[2] = exact->first;
                coords[3] = exact->second;
            }
            p.exact_point = ProjectivePoint(coords);
            for (size_t i = 0; i < 4; ++i) p.approx[i] = CLD(to_long_double((*p.exact_point)[i]));
        } else {
            P1Point np = p1_normalize(a, b);
            if (front_pair) {
                p.approx = {np.a, np.b, CLD(0.0L), CLD(0.0L)};
            } else {
                p.approx = {CLD(0.0L), CLD(0.0L), np.a, np.b};
            }
        }
        out.push_back(p);
    };

    std::vector<P1Point> exact_as_p1;
    for (const auto& rr : binary_rational_roots(slice)) {
        for (int k = 0; k < rr.multiplicity; ++k)
            put(std::make_pair(rr.p1, rr.p2), CLD(0.0L), CLD(0.0L));
        exact_as_p1.push_back(p1_normalize(CLD(to_long_double(rr.p1)), CLD(to_long_double(rr.p2))));
    }
    BinaryRootsNumeric nroots = binary_roots_numeric(slice);
    if (!nroots.converged) resolved = false;
    for (const auto& pt : nroots.points) {
        bool matched = false;
        for (const auto& ep : exact_as_p1)
            if (p1_dist(pt, ep) < 1e-9L) matched = true;
        if (!matched) put(std::nullopt, pt.a, pt.b);
    }
    return out;
}

}  // namespace detail

// The Remark's construction: two cones in P^4 over plane curves F = {f = 0},
// G = {g = 0} with skew vertex lines, projected from P0 = (1:0:0:0:0) to the
// hyperplane z0 = 0.  The image surface is cut out by r = res_z0(f, g).
inline RemarkSurface remark_surface(const HomForm& f, const HomForm& g) {
    if (f.is_zero() || g.is_zero()) throw error("remark_surface: zero input form");
    if (f.nvars() != 3 || g.nvars() != 3) throw error("remark_surface: trivariate forms required");
    RemarkSurface s;
    s.f = f;
    s.g = g;
    s.m = f.degree();
    s.n = g.degree();
    if (s.m < 4 || s.n < 2) throw error("remark_surface: degrees m >= 4, n >= 2 required");

    Exp z0f{}, z0g{};
    z0f[0] = static_cast<std::uint16_t>(s.m);
    z0g[0] = static_cast<std::uint16_t>(s.n);
    if (is_zero(f.coeff(z0f)))
        throw error("remark_surface: projection center lies on the first cone (f(1,0,0) = 0)");
    if (is_zero(g.coeff(z0g)))
        throw error("remark_surface: projection center lies on the second cone (g(1,0,0) = 0)");

    BinaryForm f0 = detail::z0_slice(f);
    BinaryForm g0 = detail::z0_slice(g);
    if (f0.is_zero() || f0.degree() != s.m)
        throw error("remark_surface: z0 = 0 slice of f degenerates");
    if (g0.is_zero() || g0.degree() != s.n)
        throw error("remark_surface: z0 = 0 slice of g degenerates");
    if (!binary_squarefree(f0))
        throw error("remark_surface: z0 = 0 does not meet F transversally (slice not squarefree)");
    if (!binary_squarefree(g0))
        throw error("remark_surface: z0 = 0 does not meet G transversally (slice not squarefree)");

    // embed into (z0, z1, z2, z3, z4) and eliminate z0
    HomForm f5 = insert_var(insert_var(f, 3), 4);
    HomForm g5 = insert_var(insert_var(g, 1), 2);
    HomForm r5 = sylvester_resultant(f5, g5, 0);
    s.r = contract_var(r5, 0);
    if (s.r.is_zero() || s.r.degree() != s.m * s.n)
        throw error("remark_surface: resultant degenerated (shared component)");

    s.A = detail::slice_points(f0, true, s.n, s.points_resolved);
    s.B = detail::slice_points(g0, false, s.m, s.points_resolved);
    return s;
}

// ---- structure report ----------------------------------------------------------

struct PointVerification {
    std::string label;
    bool exact = false;
    int expected_multiplicity = 0;
    bool low_order_vanish = false;  // all partials of order < mult vanish
    bool order_nonzero = false;     // some order-mult partial does not
    long double max_low_order_residual = 0.0L;
    long double best_order_magnitude = 0.0L;
};

struct RemarkLineCheck {
    int j = 0, k = 0;
    long double max_residual = 0.0L;
};

struct RemarkStructureReport {
    std::vector<PointVerification> points;
    int confirmed_singular_points = 0;
    std::vector<RemarkLineCheck> lines;
    long double max_line_residual = 0.0L;
    // numeric Gauss-Newton scan for singular points away from A and B
    int scan_starts = 0;
    int extra_singular_clusters = 0;
    bool non_isolated_flag = false;  // extras found: singular locus not the expected finite set
    long double tolerance = 0.0L;
};

namespace detail {

// all partial derivative forms of each order up to `max_order`
inline std::vector<std::vector<HomForm>> derivative_levels(const HomForm& r, int max_order) {
    std::vector<std::vector<HomForm>> levels(static_cast<size_t>(max_order) + 1);
    levels[0] = {r};
    std::vector<std::vector<Exp>> idx(static_cast<size_t>(max_order) + 1);
    idx[0] = {Exp{}};
    for (int k = 1; k <= max_order; ++k) {
        std::map<Exp, HomForm, ExpBefore> uniq;
        for (size_t t = 0; t < levels[static_cast<size_t>(k - 1)].size(); ++t)
            for (int v = 0; v < 4; ++v) {
                Exp a = idx[static_cast<size_t>(k - 1)][t];
                a[static_cast<size_t>(v)] = static_cast<std::uint16_t>(a[static_cast<size_t>(v)] + 1);
                if (uniq.count(a)) continue;
                uniq.emplace(a, diff(levels[static_cast<size_t>(k - 1)][t], v));
            }
        for (auto& [e, form] : uniq) {
            idx[static_cast<size_t>(k)].push_back(e);
            levels[static_cast<size_t>(k)].push_back(form);
        }
    }
    return levels;
}

inline long double coeff_scale(const HomForm& f) {
    long double s = 0.0L;
    for (const auto& [e, c] : f.terms()) s += std::abs(to_long_double(c));
    return s > 0.0L ? s : 1.0L;
}

inline std::vector<CLD> unit_point(const std::array<CLD, 4>& p) {
    long double n = 0.0L;
    for (const CLD& c : p) n += std::norm(c);
    n = std::sqrt(n);
    std::vector<CLD> out(p.begin(), p.end());
    for (CLD& c : out) c /= n;
    return out;
}

inline long double p3_dist(const std::vector<CLD>& u, const std::vector<CLD>& v) {
    // unit inputs: chordal distance sqrt(1 - |<u, v>|^2)
    CLD ip = 0.0L;
    for (size_t i = 0; i < 4; ++i) ip += u[i] * std::conj(v[i]);
    long double c = std::min(1.0L, std::abs(ip));
    return std::sqrt(std::max(0.0L, 1.0L - c * c));
}

}  // namespace detail

// Verifies the multiplicity table (order < mult partials vanish, some
// order-mult partial does not, exactly at rational points and numerically to
// the tolerance otherwise), checks r on the m*n lines joining A and B points,
// and runs a seeded Gauss-Newton scan for singular points beyond the expected
// set.  Unverifiable points are reported, not fatal.
inline RemarkStructureReport remark_structure_report(const RemarkSurface& s,
                                                     long double tol = 1e-8L,
                                                     int scan_starts = 160,
                                                     std::uint64_t seed = 0x72656d61726bull) {
    RemarkStructureReport rep;
    rep.tolerance = tol;
    const int max_order = std::max(s.m, s.n);
    auto levels = detail::derivative_levels(s.r, max_order);
    std::vector<std::vector<long double>> scales(levels.size());
    for (size_t k = 0; k < levels.size(); ++k)
        for (const auto& form : levels[k]) scales[k].push_back(detail::coeff_scale(form));

    auto verify_point = [&](const RemarkPoint& p, const std::string& label) {
        PointVerification v;
        v.label = label;
        v.exact = p.exact;
        v.expected_multiplicity = p.expected_multiplicity;
        const int mult = p.expected_multiplicity;
        bool vanish = true;
        long double worst = 0.0L;
        if (p.exact) {
            for (int k = 0; k < mult && vanish; ++k)
                for (const auto& form : levels[static_cast<size_t>(k)])
                    if (!form.is_zero() && !is_zero(eval(form, *p.exact_point))) vanish = false;
        } else {
            std::vector<CLD> q = detail::unit_point(p.approx);
            for (int k = 0; k < mult; ++k)
                for (size_t t = 0; t < levels[static_cast<size_t>(k)].size(); ++t) {
                    const auto& form = levels[static_cast<size_t>(k)][t];
                    if (form.is_zero()) continue;
                    long double resid =
                        std::abs(eval_cld(form, q)) / scales[static_cast<size_t>(k)][t];
                    worst = std::max(worst, resid);
                }
            vanish = worst < tol;
        }
        v.low_order_vanish = vanish;
        v.max_low_order_residual = worst;
        long double best = 0.0L;
        bool nonzero = false;
        if (p.exact) {
            for (const auto& form : levels[static_cast<size_t>(mult)])
                if (!form.is_zero() && !is_zero(eval(form, *p.exact_point))) nonzero = true;
            best = nonzero ? 1.0L : 0.0L;
        } else {
            std::vector<CLD> q = detail::unit_point(p.approx);
            for (size_t t = 0; t < levels[static_cast<size_t>(mult)].size(); ++t) {
                const auto& form = levels[static_cast<size_t>(mult)][t];
                if (form.is_zero()) continue;
                best = std::max(best, std::abs(eval_cld(form, q)) /
                                          scales[static_cast<size_t>(mult)][t]);
            }
            nonzero = best > tol;
        }
        v.order_nonzero = nonzero;
        v.best_order_magnitude = best;
        rep.points.push_back(v);
        if (v.low_order_vanish && v.order_nonzero) ++rep.confirmed_singular_points;
    };

    for (size_t j = 0; j < s.A.size(); ++j) verify_point(s.A[j], "A" + std::to_string(j + 1));
    for (size_t k = 0; k < s.B.size(); ++k) verify_point(s.B[k], "B" + std::to_string(k + 1));

    // r vanishes on every line <A_j, B_k>: sample 20 deterministic points per line
    long double rscale = detail::coeff_scale(s.r);
    for (size_t j = 0; j < s.A.size(); ++j)
        for (size_t k = 0; k < s.B.size(); ++k) {
            RemarkLineCheck lc;
            lc.j = static_cast<int>(j + 1);
            lc.k = static_cast<int>(k + 1);
            for (int t = 0; t < 20; ++t) {
                long double th = 2.0L * std::numbers::pi_v<long double> *
                                 std::fmod(0.6180339887498948482L * (t + 1), 1.0L);
                CLD u = CLD(std::cos(th), std::sin(th)) * (1.0L + 0.05L * t);
                std::array<CLD, 4> q{};
                for (size_t c = 0; c < 4; ++c)
                    q[c] = s.A[j].approx[c] + u * s.B[k].approx[c];
                std::vector<CLD> qu = detail::unit_point(q);
                lc.max_residual =
                    std::max(lc.max_residual, std::abs(eval_cld(s.r, qu)) / rscale);
            }
            rep.lines.push_back(lc);
            rep.max_line_residual = std::max(rep.max_line_residual, lc.max_residual);
        }

    // Gauss-Newton scan of grad r = 0 for singular points not in A or B
    rep.scan_starts = scan_starts;
    std::vector<HomForm> grad(4);
    for (int v = 0; v < 4; ++v) grad[static_cast<size_t>(v)] = diff(s.r, v);
    std::vector<std::vector<HomForm>> hess(4, std::vector<HomForm>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) hess[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            diff(grad[static_cast<size_t>(a)], b);
    long double gscale = 0.0L;
    for (const auto& gform : grad) gscale = std::max(gscale, detail::coeff_scale(gform));

    std::vector<std::vector<CLD>> known;
    for (const auto& p : s.A) known.push_back(detail::unit_point(p.approx));
    for (const auto& p : s.B) known.push_back(detail::unit_point(p.approx));

    std::vector<std::vector<CLD>> extras;
    for (int start = 0; start < scan_starts; ++start) {
        SplitMix64 st = substream(seed, 0x7363616eull, static_cast<std::uint64_t>(start));
        std::vector<CLD> z(4);
        for (int i = 0; i < 4; ++i) {
            long double re = (static_cast<long double>(st.below(1u << 30)) / (1u << 29)) - 1.0L;
            long double im = (static_cast<long double>(st.below(1u << 30)) / (1u << 29)) - 1.0L;
            z[static_cast<size_t>(i)] = CLD(re, im);
        }
        bool ok = false;
        for (int iter = 0; iter < 60; ++iter) {
            long double nz = 0.0L;
            for (const CLD& c : z) nz += std::norm(c);
            nz = std::sqrt(nz);
            for (CLD& c : z) c /= nz;
            std::vector<CLD> F(4);
            long double fn = 0.0L;
            for (int i = 0; i < 4; ++i) {
                F[static_cast<size_t>(i)] = eval_cld(grad[static_cast<size_t>(i)], z);
                fn += std::norm(F[static_cast<size_t>(i)]);
            }
            fn = std::sqrt(fn) / gscale;
            if (fn < 1e-12L) {
                ok = true;
                break;
            }
            // fix the largest coordinate, Gauss-Newton on the other three
            size_t fixed = 0;
            long double best = 0.0L;
            for (size_t i = 0; i < 4; ++i)
                if (std::abs(z[i]) > best) {
                    best = std::abs(z[i]);
                    fixed = i;
                }
            std::vector<size_t> vars;
            for (size_t i = 0; i < 4; ++i)
                if (i != fixed) vars.push_back(i);
            CLD J[4][3];
            for (int i = 0; i < 4; ++i)
                for (int c = 0; c < 3; ++c)
                    J[i][c] = eval_cld(hess[static_cast<size_t>(i)][vars[static_cast<size_t>(c)]], z);
            // normal equations  (J^H J) d = -J^H F
            CLD Ae[3][4];
            for (int rI = 0; rI < 3; ++rI) {
                for (int cI = 0; cI < 3; ++cI) {
                    CLD sum = 0.0L;
                    for (int i = 0; i < 4; ++i) sum += std::conj(J[i][rI]) * J[i][cI];
                    Ae[rI][cI] = sum;
                }
                CLD rhs = 0.0L;
                for (int i = 0; i < 4; ++i) rhs += std::conj(J[i][rI]) * F[static_cast<size_t>(i)];
                Ae[rI][3] = -rhs;
            }
            // 3x3 complex Gaussian elimination with partial pivoting
            bool singular = false;
            for (int col = 0; col < 3 && !singular; ++col) {
                int piv = col;
                for (int rI = col + 1; rI < 3; ++rI)
                    if (std::abs(Ae[rI][col]) > std::abs(Ae[piv][col])) piv = rI;
                if (std::abs(Ae[piv][col]) < 1e-30L) {
                    singular = true;
                    break;
                }
                std::swap(Ae[piv], Ae[col]);
                for (int rI = col + 1; rI < 3; ++rI) {
                    CLD fr = Ae[rI][col] / Ae[col][col];
                    for (int cI = col; cI < 4; ++cI) Ae[rI][cI] -= fr * Ae[col][cI];
                }
            }
            if (singular) break;
            CLD d[3];
            for (int rI = 2; rI >= 0; --rI) {
                CLD sum = Ae[rI][3];
                for (int cI = rI + 1; cI < 3; ++cI) sum -= Ae[rI][cI] * d[cI];
                d[rI] = sum / Ae[rI][rI];
            }
            long double step = 0.0L;
            for (int c = 0; c < 3; ++c) {
                z[vars[static_cast<size_t>(c)]] += d[c];
                step += std::norm(d[c]);
            }
            if (std::sqrt(step) < 1e-17L) break;
        }
        if (!ok) continue;
        std::vector<CLD> zu = detail::unit_point({z[0], z[1], z[2], z[3]});
        bool matches_known = false;
        for (const auto& kp : known)
            if (detail::p3_dist(zu, kp) < 1e-6L) matches_known = true;
        if (matches_known) continue;
        bool dup = false;
        for (const auto& ep : extras)
            if (detail::p3_dist(zu, ep) < 1e-6L) dup = true;
        if (!dup) extras.push_back(zu);
    }
    rep.extra_singular_clusters = static_cast<int>(extras.size());
    rep.non_isolated_flag = !extras.empty();
    return rep;
}

}  // namespace conecert

#endif
