#ifndef CONECERT_ROOTS_HPP
#define CONECERT_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "conecert/binary.hpp"
#include "conecert/homform.hpp"

namespace conecert {

using CLD = std::complex<long double>;

// Long double everywhere: the 15-bit exponent absorbs the huge dynamic range
// of coefficients coming out of exact elimination after one uniform scaling.
inline std::vector<CLD> to_cld_coeffs(const QPoly& p) {
    long emax = std::numeric_limits<long>::min();
    for (int i = 0; i <= p.degree(); ++i)
        if (!is_zero(p.coeff(i))) emax = std::max(emax, exponent2(p.coeff(i)));
    std::vector<CLD> out(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i)
        out[static_cast<size_t>(i)] = CLD(to_long_double(p.coeff(i), -emax), 0.0L);
    return out;
}

struct AberthResult {
    std::vector<CLD> roots;      // finite roots of the dense input
    int zero_roots = 0;          // multiplicity of the root 0 stripped up front
    int degree_drop = 0;         // leading zero coefficients stripped (roots at infinity)
    bool converged = true;
    int iterations = 0;
};

// Aberth-Ehrlich simultaneous iteration with a backward-error acceptance
// test (|p(z)| small against sum |c_k||z|^k); multiple roots settle into a
// cluster of radius ~ eps^(1/mult) which downstream clustering absorbs.
inline AberthResult aberth_roots(std::vector<CLD> c, int max_iter = 400) {
    AberthResult res;
    while (!c.empty() && std::abs(c.back()) == 0.0L) {
        c.pop_back();
        ++res.degree_drop;
    }
    while (!c.empty() && std::abs(c.front()) == 0.0L) {
        c.erase(c.begin());
        ++res.zero_roots;
    }
    if (c.size() <= 1) return res;
    const int d = static_cast<int>(c.size()) - 1;
    // scale coefficients to tame the exponent range
    long double cmax = 0.0L;
    for (const CLD& x : c) cmax = std::max(cmax, std::abs(x));
    for (CLD& x : c) x /= cmax;

    long double radius = 0.0L;
    for (int k = 0; k < d; ++k) {
        long double r = std::pow(std::abs(c[static_cast<size_t>(k)] / c.back()),
                                 1.0L / static_cast<long double>(d - k));
        radius = std::max(radius, r);
    }
    radius = 1.0L + radius;

    std::vector<CLD> z(static_cast<size_t>(d));
    const long double golden = 0.3819660112501051518L;
    for (int i = 0; i < d; ++i) {
        long double th = 2.0L * std::numbers::pi_v<long double> *
                         (static_cast<long double>(i) / d + golden);
        z[static_cast<size_t>(i)] = radius * CLD(std::cos(th), std::sin(th)) + CLD(0.2L, 0.1L);
    }

    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<bool> done(static_cast<size_t>(d), false);
    int it = 0;
    for (; it < max_iter; ++it) {
        int moved = 0;
        for (int i = 0; i < d; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            CLD zi = z[static_cast<size_t>(i)];
            CLD p = 0.0L, dp = 0.0L;
            long double s = 0.0L;
            long double az = std::abs(zi);
            for (int k = d; k >= 0; --k) {
                dp = dp * zi + p;
                p = p * zi + c[static_cast<size_t>(k)];
                s = s * az + std::abs(c[static_cast<size_t>(k)]);
            }
            if (std::abs(p) <= 16.0L * eps * static_cast<long double>(d) * s) {
                done[static_cast<size_t>(i)] = true;
                continue;
            }
            CLD newton = (dp == CLD(0.0L)) ? CLD(1.0L) : p / dp;
            CLD sum = 0.0L;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                CLD diff = zi - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300L) diff = CLD(1e-300L);
                sum += CLD(1.0L) / diff;
            }
            CLD denom = CLD(1.0L) - newton * sum;
            CLD w = (std::abs(denom) < 1e-300L) ? newton : newton / denom;
            z[static_cast<size_t>(i)] = zi - w;
            if (std::abs(w) > eps * (1.0L + std::abs(zi))) ++moved;
        }
        if (moved == 0) break;
    }
    res.iterations = it;
    for (int i = 0; i < d; ++i)
        if (!done[static_cast<size_t>(i)]) {
            // re-test acceptance after the last sweep
            CLD zi = z[static_cast<size_t>(i)];
            CLD p = 0.0L;
            long double s = 0.0L, az = std::abs(zi);
            for (int k = d; k >= 0; --k) {
                p = p * zi + c[static_cast<size_t>(k)];
                s = s * az + std::abs(c[static_cast<size_t>(k)]);
            }
            if (std::abs(p) > 1e6L * eps * static_cast<long double>(d) * s) res.converged = false;
        }
    res.roots = std::move(z);
    return res;
}

// ---- P^1 geometry -----------------------------------------------------------

struct P1Point {
    CLD a, b;  // (a : b), not both ~0
};

inline P1Point p1_normalize(CLD a, CLD b) {
    long double n = std::hypot(std::abs(a), std::abs(b));
    if (n == 0.0L) return {CLD(1.0L), CLD(0.0L)};
    return {a / n, b / n};
}

// Chordal (Fubini-Study) distance on P^1: |a1 b2 - a2 b1| for unit
// representatives; scale free, finite at infinity.
inline long double p1_dist(const P1Point& u, const P1Point& v) {
    return std::abs(u.a * v.b - u.b * v.a);
}

inline P1Point p1_from_affine(CLD t) { return p1_normalize(t, CLD(1.0L)); }
inline P1Point p1_infinity() { return {CLD(1.0L), CLD(0.0L)}; }

// Roots of a binary form as P^1 points (roots at (1:0) come from the z2
// power), via Aberth on the dehomogenized core.
struct BinaryRootsNumeric {
    std::vector<P1Point> points;  // one entry per root with multiplicity
    bool converged = true;
};

inline BinaryRootsNumeric binary_roots_numeric(const BinaryForm& f) {
    BinaryRootsNumeric out;
    auto s = detail::binary_split(f);
    for (int i = 0; i < s.e2; ++i) out.points.push_back(p1_infinity());
    for (int i = 0; i < s.e1; ++i) out.points.push_back(p1_normalize(CLD(0.0L), CLD(1.0L)));
    if (s.core.degree() >= 1) {
        AberthResult r = aberth_roots(to_cld_coeffs(s.core));
        out.converged = r.converged;
        for (const CLD& z : r.roots) out.points.push_back(p1_from_affine(z));
        for (int i = 0; i < r.zero_roots; ++i) out.points.push_back(p1_from_affine(CLD(0.0L)));
        // degree_drop cannot occur: the split has a nonzero leading coefficient
    }
    return out;
}

// Single-linkage clustering under a point metric; returns cluster count.
template <class PointT, class Metric>
int cluster_count(const std::vector<PointT>& pts, long double eps, Metric dist) {
    const size_t n = pts.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (dist(pts[i], pts[j]) <= eps) parent[find(i)] = find(j);
    int count = 0;
    for (size_t i = 0; i < n; ++i)
        if (find(i) == i) ++count;
    return count;
}

inline int cluster_count_p1(const std::vector<P1Point>& pts, long double eps) {
    return cluster_count(pts, eps, p1_dist);
}

// ---- complex evaluation of forms --------------------------------------------

inline CLD eval_cld(const HomForm& f, const std::vector<CLD>& p) {
    if (f.is_zero()) return CLD(0.0L);
    if (static_cast<int>(p.size()) != f.nvars()) throw error("eval_cld: dimension mismatch");
    std::vector<std::vector<CLD>> pw(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        int dmax = f.degree_in(static_cast<int>(i));
        pw[i].resize(static_cast<size_t>(dmax) + 1, CLD(1.0L));
        for (int d = 1; d <= dmax; ++d) pw[i][static_cast<size_t>(d)] = pw[i][static_cast<size_t>(d - 1)] * p[i];
    }
    CLD acc = 0.0L;
    for (const auto& [e, c] : f.terms()) {
        CLD t = CLD(to_long_double(c), 0.0L);
        for (size_t i = 0; i < p.size(); ++i)
            if (e[i] != 0) t *= pw[i][e[i]];
        acc += t;
    }
    return acc;
}

// Specialize one variable slot of a trivariate form at (a, b) and return the
// dense univariate polynomial in the remaining slot.
inline std::vector<CLD> fiber_poly_cld(const HomForm& f, int fiber_var, CLD a, CLD b) {
    if (f.nvars() != 3) throw error("fiber_poly_cld: trivariate form required");
    int others[2];
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != fiber_var) others[k++] = i;
    int d = f.degree_in(fiber_var);
    std::vector<CLD> out(static_cast<size_t>(d) + 1, CLD(0.0L));
    int dmax = f.degree();
    std::vector<CLD> pa(static_cast<size_t>(dmax) + 1, CLD(1.0L)), pb = pa;
    for (int i = 1; i <= dmax; ++i) {
        pa[static_cast<size_t>(i)] = pa[static_cast<size_t>(i - 1)] * a;
        pb[static_cast<size_t>(i)] = pb[static_cast<size_t>(i - 1)] * b;
    }
    for (const auto& [e, c] : f.terms()) {
        CLD t = CLD(to_long_double(c), 0.0L) * pa[e[static_cast<size_t>(others[0])]] *
                pb[e[static_cast<size_t>(others[1])]];
        out[e[static_cast<size_t>(fiber_var)]] += t;
    }
    return out;
}

// Deterministic index-parallel map: results depend only on the index, so the
// output is identical for every thread count.
inline void parallel_for_index(size_t n, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t]() {
            for (size_t i = t; i < n; i += nthreads) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace conecert

#endif
