#ifndef CONECERT_SUBRESULTANT_HPP
#define CONECERT_SUBRESULTANT_HPP

#include <vector>

#include "conecert/homform.hpp"
#include "conecert/sylvester.hpp"
#include "conecert/unipoly.hpp"

namespace conecert {

// Principal subresultant coefficients of (f, g) in an eliminated variable.
//
// psc[k] is the determinant of the order-k subresultant matrix: the rows are
// the coefficient vectors of x^(n-k-1)f ... f, x^(m-k-1)g ... g and the
// columns are the monomial degrees m+n-k-1 down to k.  psc[0] is the full
// Sylvester determinant.  At any specialization where the leading
// coefficients do not both vanish, deg gcd of the specialized pair is the
// smallest k with psc[k] nonzero there; that is what turns the "for all
// fibers" quantifier into finitely many binary-form gcd tests.
struct SubresultantChain {
    HomForm f, g;
    int var = 0;
    int deg_f = 0, deg_g = 0;
    std::vector<HomForm> psc;  // indices 0 .. min(deg_f, deg_g)-1
};

namespace detail {

template <class R>
R psc_det(const Poly<R>& f, const Poly<R>& g, int k) {
    const int m = f.degree(), n = g.degree();
    const int rows = m + n - 2 * k;
    RMatrix<R> s(rows);
    // row r (r < n-k): coefficients of x^(n-k-1-r) * f; columns carry degrees
    // m+n-k-1-j, so entry (r, j) is coeff of f at degree (m+n-k-1-j)-(n-k-1-r).
    for (int r = 0; r < n - k; ++r)
        for (int j = 0; j < rows; ++j)
            s.at(r, j) = f.coeff((m + n - k - 1 - j) - (n - k - 1 - r));
    for (int r = 0; r < m - k; ++r)
        for (int j = 0; j < rows; ++j)
            s.at(n - k + r, j) = g.coeff((m + n - k - 1 - j) - (m - k - 1 - r));
    return bareiss_det(std::move(s));
}

}  // namespace detail

inline SubresultantChain subresultant_chain(const HomForm& f, const HomForm& g, int var) {
    if (f.is_zero() || g.is_zero()) throw error("subresultant chain of zero form");
    if (f.nvars() != g.nvars()) throw error("subresultant chain: mixed variable counts");
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m < 1 || n < 1) throw error("subresultant chain: input constant in the eliminated variable");
    auto [cf, fp] = content_primitive(f);
    auto [cg, gp] = content_primitive(g);
    Poly<HomForm> pf = coeffs_in_var(fp, var);
    Poly<HomForm> pg = coeffs_in_var(gp, var);
    SubresultantChain chain;
    chain.f = f;
    chain.g = g;
    chain.var = var;
    chain.deg_f = m;
    chain.deg_g = n;
    int kmax = std::min(m, n);
    chain.psc.resize(static_cast<size_t>(kmax));
    for (int k = 0; k < kmax; ++k) {
        HomForm d = detail::psc_det(pf, pg, k);
        Rational c = rat_pow(cf, static_cast<unsigned long>(n - k)) *
                     rat_pow(cg, static_cast<unsigned long>(m - k));
        chain.psc[static_cast<size_t>(k)] = scale(d, c);
    }
    return chain;
}

// disc_var(f) = (-1)^(d(d-1)/2) res_var(f, df/dvar) / lc_var(f), the sign being
// the classical normalization (b^2-4ac for the quadratic).  Vanishes at a
// specialization iff the specialized polynomial has a repeated root, provided
// the leading coefficient survives the specialization.
inline HomForm discriminant(const HomForm& f, int var) {
    if (f.is_zero()) throw error("discriminant of zero form");
    int d = f.degree_in(var);
    if (d < 2) throw error("discriminant needs degree >= 2 in the variable");
    HomForm res = sylvester_resultant(f, diff(f, var), var);
    if (res.is_zero()) return HomForm();
    Poly<HomForm> pf = coeffs_in_var(f, var);
    HomForm out = divexact(res, pf.lc());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = neg(out);
    return out;
}

}  // namespace conecert

#endif
