#ifndef CONECERT_SYLVESTER_HPP
#define CONECERT_SYLVESTER_HPP

#include <utility>
#include <vector>

#include "conecert/homform.hpp"
#include "conecert/unipoly.hpp"

namespace conecert {

template <class R>
struct RMatrix {
    int n = 0;
    std::vector<R> a;

    explicit RMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_), RingTraits<R>::zero()) {}

    R& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
    const R& at(int i, int j) const {
        return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    }
};

// Fraction-free Bareiss determinant over an integral domain; every
// intermediate entry is a minor of the input, so divisions are exact.
// Pivot policy is fixed (first row with nonzero pivot) to keep results
// reproducible.
template <class R>
R bareiss_det(RMatrix<R> m) {
    const int n = m.n;
    if (n == 0) throw error("determinant of empty matrix");
    bool negate = false;
    R prev = RingTraits<R>::zero();
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!RingTraits<R>::is_zero(m.at(i, k))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return RingTraits<R>::zero();
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = (k == 0) ? std::move(t) : RingTraits<R>::divexact(t, prev);
            }
            m.at(i, k) = RingTraits<R>::zero();
        }
        prev = m.at(k, k);
    }
    R det = m.at(n - 1, n - 1);
    if (negate) det = RingTraits<R>::zero() - det;
    return det;
}

// Sylvester matrix of (f, g) in the eliminated variable, rows of f first.
template <class R>
RMatrix<R> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw error("sylvester matrix needs positive degrees");
    RMatrix<R> s(m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g.coeff(n - j);
    return s;
}

// Scalar resultant via the Sylvester determinant; reference path, also used
// as the oracle pinning the sign convention of resultant_q.
inline Rational resultant_sylvester_q(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (f.degree() == 0) return rat_pow(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return rat_pow(g.lc(), static_cast<unsigned long>(f.degree()));
    return bareiss_det(sylvester_matrix(f, g));
}

// res_var(f, g) for homogeneous forms.  Content is pulled off and the Bareiss
// elimination runs on the integer-primitive parts; the rational content is
// reattached through the multilinearity of the determinant rows.
inline HomForm sylvester_resultant(const HomForm& f, const HomForm& g, int var) {
    if (f.is_zero() || g.is_zero()) return HomForm();
    if (f.nvars() != g.nvars()) throw error("resultant: mixed variable counts");
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df < 1 || dg < 1) throw error("resultant: input constant in the eliminated variable");
    auto [cf, fp] = content_primitive(f);
    auto [cg, gp] = content_primitive(g);
    Poly<HomForm> pf = coeffs_in_var(fp, var);
    Poly<HomForm> pg = coeffs_in_var(gp, var);
    HomForm det = bareiss_det(sylvester_matrix(pf, pg));
    Rational c = rat_pow(cf, static_cast<unsigned long>(dg)) * rat_pow(cg, static_cast<unsigned long>(df));
    return scale(det, c);
}

}  // namespace conecert

#endif
