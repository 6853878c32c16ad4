#ifndef CONECERT_GAMMA_HPP
#define CONECERT_GAMMA_HPP

#include <vector>

#include "conecert/binary.hpp"
#include "conecert/homform.hpp"
#include "conecert/subresultant.hpp"
#include "conecert/sylvester.hpp"
#include "conecert/unipoly.hpp"

namespace conecert {

// Double-curve elimination data.  R(z1,z2) is res_z4(res_z3(f1, finf), f2):
// it vanishes at (p1:p2) exactly when some point of Gamma over that direction
// lies on X_infinity.  Nondegenerate degree is mn(m+n); R == 0 means
// Gamma is contained in X_infinity (degenerate input).
struct GammaForm {
    BinaryForm R;
    BinaryForm D1, D2;  // disc_z3 f1, disc_z4 f2
    int m = 0, n = 0;
    bool degenerate() const { return R.is_zero(); }
    int expected_degree() const { return m * n * (m + n); }
};

namespace detail {

// Newton interpolation over Q at pairwise-distinct nodes.
inline QPoly newton_interpolate(const std::vector<Rational>& xs, std::vector<Rational> vals) {
    const size_t n = xs.size();
    if (vals.size() != n || n == 0) throw error("interpolation: node/value mismatch");
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            vals[i] = (vals[i] - vals[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    QPoly p;
    for (size_t i = n; i-- > 0;) {
        p = add(shift_up(p, 1), scale(p, Rational(-xs[i])));
        p = add(p, QPoly(vals[i]));
    }
    return p;
}

// Binary coefficient layers of a form with respect to one variable:
// layer[k] = coefficient form of var^k, as a (z1,z2) binary form.
// Requires every non-var exponent to sit in slots {0,1}.
inline std::vector<BinaryForm> binary_layers(const HomForm& f, int var) {
    std::vector<BinaryForm> out(static_cast<size_t>(f.degree_in(var)) + 1);
    std::vector<std::vector<std::pair<Exp, Rational>>> buckets(out.size());
    for (const auto& [e, c] : f.terms()) {
        Exp r{};
        r[0] = e[0];
        r[1] = e[1];
        buckets[e[static_cast<size_t>(var)]].emplace_back(r, c);
    }
    for (size_t k = 0; k < out.size(); ++k) out[k] = HomForm::from_terms(2, buckets[k]);
    return out;
}

inline Rational eval_binary_at(const BinaryForm& b, const std::vector<Rational>& xpow) {
    if (b.is_zero()) return Rational(0);
    Rational acc = 0;
    for (const auto& [e, c] : b.terms()) acc += c * xpow[e[0]];
    return acc;
}

// Interpolation path.  All leading coefficients in the eliminated variables
// are nonzero constants (callers check), so the Sylvester determinant
// commutes with every specialization (z1,z2) -> (x,1) and (z4) -> y, and the
// scalar resultants recompose R exactly.
//
// f1: (z1,z2,z3) degree m;  f2: (z1,z2,z4) degree n;  finf: 4 vars, degree m+n.
inline BinaryForm gamma_resultant_interpolated(const HomForm& f1, const HomForm& finf,
                                               const HomForm& f2) {
    const int m = f1.degree(), n = f2.degree();
    const int M = m * (m + n);      // z4-degree of G = res_z3(f1, finf)
    const int N = m * n * (m + n);  // degree of R

    std::vector<BinaryForm> a_layers = binary_layers(f1, 2);
    std::vector<BinaryForm> b_layers = binary_layers(f2, 2);
    // finf split by (z3, z4) powers into binary coefficient forms
    std::vector<std::vector<BinaryForm>> t_layers(
        static_cast<size_t>(m + n) + 1,
        std::vector<BinaryForm>(static_cast<size_t>(m + n) + 1));
    {
        std::vector<std::vector<std::vector<std::pair<Exp, Rational>>>> buckets(
            t_layers.size(), std::vector<std::vector<std::pair<Exp, Rational>>>(t_layers.size()));
        for (const auto& [e, c] : finf.terms()) {
            Exp r{};
            r[0] = e[0];
            r[1] = e[1];
            buckets[e[2]][e[3]].emplace_back(r, c);
        }
        for (size_t i = 0; i < t_layers.size(); ++i)
            for (size_t j = 0; j < t_layers.size(); ++j)
                t_layers[i][j] = HomForm::from_terms(2, buckets[i][j]);
    }

    std::vector<Rational> xnodes(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) xnodes[static_cast<size_t>(i)] = Rational(i - N / 2);
    std::vector<Rational> ynodes(static_cast<size_t>(M) + 1);
    for (int j = 0; j <= M; ++j) ynodes[static_cast<size_t>(j)] = Rational(j - M / 2);

    const int dtot = m + n;
    std::vector<Rational> rvals(xnodes.size());
    for (size_t xi = 0; xi < xnodes.size(); ++xi) {
        const Rational& x = xnodes[xi];
        std::vector<Rational> xpow(static_cast<size_t>(std::max({m, n, dtot, 1})) + 1);
        xpow[0] = 1;
        for (size_t k = 1; k < xpow.size(); ++k) xpow[k] = xpow[k - 1] * x;

        std::vector<Rational> acoef(a_layers.size());
        for (size_t k = 0; k < a_layers.size(); ++k) acoef[k] = eval_binary_at(a_layers[k], xpow);
        QPoly A(acoef);
        std::vector<Rational> bcoef(b_layers.size());
        for (size_t k = 0; k < b_layers.size(); ++k) bcoef[k] = eval_binary_at(b_layers[k], xpow);
        QPoly F2x(bcoef);

        // finf at (x,1,z3,z4): table over (z3-power, z4-power)
        std::vector<std::vector<Rational>> T(t_layers.size(), std::vector<Rational>(t_layers.size(), Rational(0)));
        for (size_t i = 0; i < t_layers.size(); ++i)
            for (size_t j = 0; j < t_layers.size(); ++j)
                if (!t_layers[i][j].is_zero()) T[i][j] = eval_binary_at(t_layers[i][j], xpow);

        std::vector<Rational> gvals(ynodes.size());
        for (size_t yi = 0; yi < ynodes.size(); ++yi) {
            const Rational& y = ynodes[yi];
            std::vector<Rational> ypow(static_cast<size_t>(dtot) + 1);
            ypow[0] = 1;
            for (int k = 1; k <= dtot; ++k) ypow[static_cast<size_t>(k)] = ypow[static_cast<size_t>(k - 1)] * y;
            std::vector<Rational> ccoef(static_cast<size_t>(dtot) + 1, Rational(0));
            for (int i = 0; i <= dtot; ++i)
                for (int j = 0; j <= dtot - i; ++j)
                    if (!is_zero(T[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                        ccoef[static_cast<size_t>(i)] +=
                            T[static_cast<size_t>(i)][static_cast<size_t>(j)] * ypow[static_cast<size_t>(j)];
            QPoly C(ccoef);
            gvals[yi] = resultant_q(A, C);
        }
        QPoly Gx = newton_interpolate(ynodes, std::move(gvals));
        rvals[xi] = resultant_q(Gx, F2x);
    }
    QPoly Rpoly = newton_interpolate(xnodes, std::move(rvals));
    return homogenize_binary(Rpoly, N);
}

// Reference path: two form-level Sylvester determinants in 4 variables.
inline BinaryForm gamma_resultant_direct(const HomForm& f1, const HomForm& finf,
                                         const HomForm& f2) {
    HomForm f1_4 = insert_var(f1, 3);         // (z1,z2,z3) -> (z1,z2,z3,z4)
    HomForm f2_4 = insert_var(f2, 2);         // (z1,z2,z4) -> (z1,z2,z3,z4)
    const int m = f1.degree(), n = f2.degree();
    HomForm G;
    if (finf.depends_on(2)) {
        G = sylvester_resultant(f1_4, finf, 2);
    } else {
        G = pow_form(finf, static_cast<unsigned>(m));  // res with a z3-constant form
    }
    if (G.is_zero()) return BinaryForm();
    HomForm R4;
    if (G.depends_on(3)) {
        R4 = sylvester_resultant(G, f2_4, 3);
    } else {
        R4 = pow_form(G, static_cast<unsigned>(n));
    }
    if (R4.is_zero()) return BinaryForm();
    return contract_var(contract_var(R4, 3), 2);
}

}  // namespace detail

// Exact elimination of the double curve against X_infinity.  Requires the
// vertex conditions (constant leading coefficients of f1, f2 in their cone
// variables).  Uses the interpolated path whenever finf has nonzero pure
// z3^(m+n) and z4^(m+n) coefficients (equivalently: X_infinity avoids both
// vertices), and the direct determinant path otherwise.
inline GammaForm gamma_eliminate_forms(const HomForm& f1, const HomForm& f2, const HomForm& finf) {
    if (f1.nvars() != 3 || f2.nvars() != 3 || finf.nvars() != 4)
        throw error("gamma elimination: expected two trivariate cones and a 4-variable form");
    const int m = f1.degree(), n = f2.degree();
    if (finf.degree() != m + n) throw error("gamma elimination: deg finf must be m+n");
    if (f1.degree_in(2) != m || f2.degree_in(2) != n)
        throw error("gamma elimination: vertex condition violated (nonconstant leading coefficient)");

    GammaForm out;
    out.m = m;
    out.n = n;
    out.D1 = contract_var(discriminant(f1, 2), 2);
    out.D2 = contract_var(discriminant(f2, 2), 2);

    Exp z3pure{}, z4pure{};
    z3pure[2] = static_cast<std::uint16_t>(m + n);
    z4pure[3] = static_cast<std::uint16_t>(m + n);
    bool fast = !is_zero(finf.coeff(z3pure)) && !is_zero(finf.coeff(z4pure));
    out.R = fast ? detail::gamma_resultant_interpolated(f1, finf, f2)
                 : detail::gamma_resultant_direct(f1, finf, f2);
    return out;
}

}  // namespace conecert

#endif
