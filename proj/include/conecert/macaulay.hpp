#ifndef CONECERT_MACAULAY_HPP
#define CONECERT_MACAULAY_HPP

#include <optional>
#include <vector>

#include "conecert/binary.hpp"
#include "conecert/homform.hpp"
#include "conecert/rng.hpp"
#include "conecert/sylvester.hpp"

namespace conecert {

// Classical Macaulay resultant of three ternary forms of one degree e:
// det(M) / det(M') on monomials of degree D = 3e - 2, where row mu uses
// (mu / z_i^e) * g_i for the first i with z_i^e | mu, and M' keeps exactly
// the rows and columns whose monomial is divisible by z_j^e for at least two
// j.  Zero iff the forms share a projective zero.  When the denominator
// minor degenerates the value is recovered only up to zero/nonzero status,
// through seeded random coordinate changes.
struct MacaulayResult {
    enum class Verdict { Nonzero, Zero, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Rational> value;  // set when the direct quotient existed
    int coordinate_changes = 0;
};

namespace detail {

inline std::vector<Exp> monomials_deg3(int degree) {
    std::vector<Exp> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) {
            Exp e{};
            e[0] = static_cast<std::uint16_t>(a);
            e[1] = static_cast<std::uint16_t>(b);
            e[2] = static_cast<std::uint16_t>(degree - a - b);
            out.push_back(e);
        }
    return out;
}

struct MacaulayDets {
    Rational det_full;
    Rational det_minor;
    bool minor_trivial = false;  // no non-reduced monomials at all
};

inline MacaulayDets macaulay_determinants(const HomForm& g1, const HomForm& g2, const HomForm& g3,
                                          int e) {
    const HomForm* gs[3] = {&g1, &g2, &g3};
    const int D = 3 * e - 2;
    std::vector<Exp> mons = monomials_deg3(D);
    const int N = static_cast<int>(mons.size());
    std::map<Exp, int, ExpBefore> col;
    for (int j = 0; j < N; ++j) col[mons[static_cast<size_t>(j)]] = j;

    auto divisible_count = [&](const Exp& mu) {
        int cnt = 0;
        for (int i = 0; i < 3; ++i)
            if (mu[static_cast<size_t>(i)] >= e) ++cnt;
        return cnt;
    };

    RMatrix<Rational> M(N);
    std::vector<int> nonreduced;
    for (int r = 0; r < N; ++r) {
        const Exp& mu = mons[static_cast<size_t>(r)];
        int owner = -1;
        for (int i = 0; i < 3; ++i)
            if (mu[static_cast<size_t>(i)] >= e) {
                owner = i;
                break;
            }
        if (owner < 0) throw error("macaulay: monomial without owner");  // impossible at D = 3e-2
        if (divisible_count(mu) >= 2) nonreduced.push_back(r);
        Exp q = mu;
        q[static_cast<size_t>(owner)] = static_cast<std::uint16_t>(q[static_cast<size_t>(owner)] - e);
        for (const auto& [ex, c] : gs[owner]->terms()) {
            Exp target{};
            for (size_t i = 0; i < kMaxVars; ++i) target[i] = static_cast<std::uint16_t>(ex[i] + q[i]);
            M.at(r, col.at(target)) = c;
        }
    }

    MacaulayDets out;
    out.det_full = bareiss_det(M);
    if (nonreduced.empty()) {
        out.det_minor = 1;
        out.minor_trivial = true;
        return out;
    }
    RMatrix<Rational> Mp(static_cast<int>(nonreduced.size()));
    for (size_t i = 0; i < nonreduced.size(); ++i)
        for (size_t j = 0; j < nonreduced.size(); ++j)
            Mp.at(static_cast<int>(i), static_cast<int>(j)) =
                M.at(nonreduced[i], nonreduced[j]);
    out.det_minor = bareiss_det(Mp);
    return out;
}

inline std::vector<HomForm> random_linear_change(SplitMix64& stream) {
    while (true) {
        long a[3][3];
        for (auto& row : a)
            for (long& v : row) v = stream.uniform_int(-9, 9);
        long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        if (det == 0) continue;
        std::vector<HomForm> images(3);
        for (int i = 0; i < 3; ++i) {
            HomForm row;
            for (int j = 0; j < 3; ++j)
                if (a[i][j] != 0)
                    row = add(row, scale(HomForm::variable(3, j), Rational(a[i][j])));
            if (row.is_zero()) break;
            images[static_cast<size_t>(i)] = row;
        }
        bool ok = true;
        for (const auto& im : images) ok = ok && !im.is_zero();
        if (ok) return images;
    }
}

// Decision by pairwise z3-resultants, used when the Macaulay minor stays
// degenerate.  In coordinates where every form has a constant leading
// coefficient in z3: a vanishing pairwise resultant means a shared component,
// which meets the third curve by Bezout, so the system has a common zero.
// Otherwise every common zero projects to a common root of all three binary
// resultants, so a constant gcd certifies that none exists.  The in-between
// case (nonconstant gcd, no shared component) stays undecided.
inline std::optional<MacaulayResult::Verdict> pairwise_resultant_verdict(
    const HomForm& g1, const HomForm& g2, const HomForm& g3, SplitMix64& stream) {
    const int e = g1.degree();
    Exp top{};
    top[2] = static_cast<std::uint16_t>(e);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<HomForm> images = detail::random_linear_change(stream);
        HomForm a = substitute(g1, images);
        HomForm b = substitute(g2, images);
        HomForm c = substitute(g3, images);
        if (is_zero(a.coeff(top)) || is_zero(b.coeff(top)) || is_zero(c.coeff(top))) continue;
        HomForm u = sylvester_resultant(a, b, 2);
        HomForm v = sylvester_resultant(a, c, 2);
        HomForm w = sylvester_resultant(b, c, 2);
        if (u.is_zero() || v.is_zero() || w.is_zero()) return MacaulayResult::Verdict::Zero;
        BinaryForm g = binary_gcd(std::vector<BinaryForm>{
            contract_var(u, 2), contract_var(v, 2), contract_var(w, 2)});
        if (binary_is_constant(g)) return MacaulayResult::Verdict::Nonzero;
    }
    return std::nullopt;
}

}  // namespace detail

inline MacaulayResult macaulay_resultant3(const HomForm& g1, const HomForm& g2, const HomForm& g3,
                                          std::uint64_t seed = 0x6d61636175ull) {
    MacaulayResult res;
    const HomForm* gs[3] = {&g1, &g2, &g3};
    // a vanished form shares zeros with anything: resultant is zero
    for (const HomForm* g : gs)
        if (g->is_zero()) {
            res.verdict = MacaulayResult::Verdict::Zero;
            res.value = Rational(0);
            return res;
        }
    int e = g1.degree();
    for (const HomForm* g : gs) {
        if (g->nvars() != 3) throw error("macaulay_resultant3: ternary forms required");
        if (g->degree() != e) throw error("macaulay_resultant3: unequal degrees");
    }
    if (e < 1) throw error("macaulay_resultant3: positive degree required");

    HomForm a = g1, b = g2, c = g3;
    SplitMix64 stream = substream(seed, 0x4d414341ull, 0);
    for (int attempt = 0; attempt <= 5; ++attempt) {
        auto dets = detail::macaulay_determinants(a, b, c, e);
        if (!is_zero(dets.det_minor)) {
            Rational value = dets.det_full / dets.det_minor;
            if (attempt == 0) res.value = value;
            res.verdict = is_zero(value) ? MacaulayResult::Verdict::Zero
                                         : MacaulayResult::Verdict::Nonzero;
            res.coordinate_changes = attempt;
            return res;
        }
        // denominator minor degenerate: change coordinates and retry; the
        // zero locus is invariant under invertible substitutions
        auto images = detail::random_linear_change(stream);
        a = substitute(g1, images);
        b = substitute(g2, images);
        c = substitute(g3, images);
        res.coordinate_changes = attempt + 1;
    }
    if (auto v = detail::pairwise_resultant_verdict(g1, g2, g3, stream)) {
        res.verdict = *v;
        return res;
    }
    res.verdict = MacaulayResult::Verdict::Inconclusive;
    return res;
}

}  // namespace conecert

#endif
