#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "conecert/binary.hpp"
#include "conecert/roots.hpp"
#include "conecert/subresultant.hpp"
#include "conecert/sylvester.hpp"
#include "oracles.hpp"

using namespace conecert;

namespace {

// random trivariate form with constant nonzero leading coefficient in var 2
HomForm random_cone_form(int degree, long bound, SplitMix64& st) {
    Exp slot{};
    slot[2] = static_cast<std::uint16_t>(degree);
    return random_form_forced(3, degree, bound, st, slot);
}

// f(p1, p2, t) as a dense univariate polynomial in the slot-2 variable
QPoly specialize(const HomForm& f, const Rational& p1, const Rational& p2) {
    Poly<HomForm> layers = coeffs_in_var(f, 2);
    std::vector<Rational> c(static_cast<size_t>(layers.degree()) + 1, Rational(0));
    std::vector<Rational> pt{p1, p2, Rational(0)};
    for (int i = 0; i <= layers.degree(); ++i) {
        const HomForm& layer = layers.coeff(i);
        if (!layer.is_zero()) c[static_cast<size_t>(i)] = eval(layer, pt);
    }
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("scalar resultant: evaluate at the root") {
    QPoly f = qpoly_from({-1, 0, 1});  // t^2 - 1
    QPoly g = qpoly_from({-2, 1});     // t - 2
    CHECK(resultant_q(f, g) == Rational(3));
    CHECK(resultant_sylvester_q(f, g) == Rational(3));
}

TEST_CASE("scalar resultant agrees with the Sylvester determinant") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        SplitMix64 st = substream(211, 10, trial);
        QPoly f = oracles::random_qpoly(static_cast<int>(st.below(5)) + 1, 9, st);
        QPoly g = oracles::random_qpoly(static_cast<int>(st.below(5)) + 1, 9, st);
        CHECK(resultant_q(f, g) == resultant_sylvester_q(f, g));
    }
}

TEST_CASE("degenerate-case identity: res(f, (z0-z3)(z0-z4)) = f(z3)*f(z4)") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 st = substream(223, 11, trial);
        Exp z0slot{};
        int m = 4 + static_cast<int>(trial % 3);  // degrees 4..6
        z0slot[0] = static_cast<std::uint16_t>(m);
        HomForm f = random_form_forced(3, m, 10, st, z0slot);
        HomForm f5 = insert_var(insert_var(f, 3), 4);
        // g = (z0 - z3)(z0 - z4) in 5 variables
        HomForm z0 = HomForm::variable(5, 0), z3 = HomForm::variable(5, 3),
                z4 = HomForm::variable(5, 4);
        HomForm g = mul(sub(z0, z3), sub(z0, z4));
        HomForm res = sylvester_resultant(f5, g, 0);
        HomForm z1 = HomForm::variable(5, 1), z2 = HomForm::variable(5, 2);
        HomForm f_at_z3 = substitute(f, {z3, z1, z2});
        HomForm f_at_z4 = substitute(f, {z4, z1, z2});
        CHECK(res == mul(f_at_z3, f_at_z4));
    }
}

TEST_CASE("resultant degree law for cone forms") {
    SplitMix64 st(227);
    HomForm f = random_cone_form(4, 10, st);
    HomForm g = random_cone_form(4, 10, st);
    HomForm r = sylvester_resultant(f, g, 2);
    REQUIRE(!r.is_zero());
    CHECK(r.degree() == 16);
    CHECK(!r.depends_on(2));
}

TEST_CASE("numeric product-of-roots oracle") {
    int checked = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        SplitMix64 st = substream(229, 12, trial);
        QPoly f = oracles::random_qpoly(static_cast<int>(st.below(4)) + 1, 9, st);
        QPoly g = oracles::random_qpoly(static_cast<int>(st.below(4)) + 1, 9, st);
        Rational res = resultant_q(f, g);
        AberthResult ar = aberth_roots(to_cld_coeffs(f));
        if (!ar.converged) continue;
        std::vector<CLD> roots = ar.roots;
        for (int i = 0; i < ar.zero_roots; ++i) roots.push_back(CLD(0.0L));
        CLD prod = 1.0L;
        for (const CLD& a : roots) {
            CLD gv = 0.0L;
            for (int i = g.degree(); i >= 0; --i) gv = gv * a + CLD(to_long_double(g.coeff(i)));
            prod *= gv;
        }
        long double lcf = to_long_double(f.lc());
        CLD expect = std::pow(CLD(lcf), g.degree()) * prod;
        long double got = to_long_double(res);
        long double denom = std::max(std::abs(expect), 1e-30L);
        CHECK(std::abs(CLD(got) - expect) / denom < 1e-8L);
        ++checked;
    }
    CHECK(checked >= 90);
}

TEST_CASE("resultant multiplicativity, exactly") {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        SplitMix64 st = substream(233, 13, trial);
        HomForm f = random_cone_form(3, 6, st);
        HomForm g = random_cone_form(2, 6, st);
        HomForm h = random_cone_form(2, 6, st);
        HomForm lhs = sylvester_resultant(f, mul(g, h), 2);
        HomForm rhs = mul(sylvester_resultant(f, g, 2), sylvester_resultant(f, h, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant swap sign rule") {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        SplitMix64 st = substream(239, 14, trial);
        int df = static_cast<int>(st.below(3)) + 1, dg = static_cast<int>(st.below(3)) + 1;
        HomForm f = random_cone_form(df, 6, st);
        HomForm g = random_cone_form(dg, 6, st);
        HomForm rfg = sylvester_resultant(f, g, 2);
        HomForm rgf = sylvester_resultant(g, f, 2);
        if ((df * dg) % 2 != 0) rgf = neg(rgf);
        CHECK(rfg == rgf);
    }
}

TEST_CASE("specialization compatibility at points where leading coefficients survive") {
    int checked = 0;
    for (std::uint64_t trial = 0; trial < 80; ++trial) {
        SplitMix64 st = substream(241, 15, trial);
        HomForm f = oracles::random_nonzero_form(3, 3, 8, st);
        HomForm g = oracles::random_nonzero_form(3, 2, 8, st);
        if (f.degree_in(2) < 1 || g.degree_in(2) < 1) continue;
        HomForm r = sylvester_resultant(f, g, 2);
        Rational p1(st.uniform_int(-9, 9)), p2(st.uniform_int(-9, 9));
        if (is_zero(p1) && is_zero(p2)) p1 = 1;
        QPoly fs = specialize(f, p1, p2);
        QPoly gs = specialize(g, p1, p2);
        if (fs.degree() != f.degree_in(2) || gs.degree() != g.degree_in(2)) continue;
        std::vector<Rational> pt{p1, p2, Rational(0)};
        Rational lhs = r.is_zero() ? Rational(0) : eval(r, pt);
        CHECK(lhs == resultant_q(fs, gs));
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("psc[0] equals the Sylvester resultant") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 st = substream(251, 16, trial);
        HomForm f = random_cone_form(static_cast<int>(st.below(3)) + 2, 8, st);
        HomForm g = random_cone_form(static_cast<int>(st.below(3)) + 1, 8, st);
        SubresultantChain chain = subresultant_chain(f, g, 2);
        CHECK(chain.psc[0] == sylvester_resultant(f, g, 2));
    }
}

TEST_CASE("defective chain: (t-1)^2(t-2) against its derivative") {
    // binary forms in (t, s)
    HomForm t = HomForm::variable(2, 0), s = HomForm::variable(2, 1);
    HomForm f = mul(mul(sub(t, s), sub(t, s)), sub(t, scale(s, Rational(2))));
    HomForm fp = diff(f, 0);
    SubresultantChain chain = subresultant_chain(f, fp, 0);
    REQUIRE(chain.psc.size() == 2);
    CHECK(chain.psc[0].is_zero());   // repeated factor kills the resultant
    CHECK(!chain.psc[1].is_zero());  // gcd degree is exactly 1
}

TEST_CASE("smallest nonvanishing psc index equals the specialized gcd degree") {
    int checked = 0;
    for (std::uint64_t trial = 0; trial < 220; ++trial) {
        SplitMix64 st = substream(257, 17, trial);
        int m = static_cast<int>(st.below(3)) + 2;
        int n = static_cast<int>(st.below(2)) + 1;
        HomForm f = random_cone_form(m, 7, st);
        HomForm g = trial % 3 == 0 ? diff(f, 2) : random_cone_form(n, 7, st);
        if (g.is_zero() || g.degree_in(2) < 1) continue;
        SubresultantChain chain = subresultant_chain(f, g, 2);
        Rational p1(st.uniform_int(-6, 6)), p2(st.uniform_int(-6, 6));
        if (is_zero(p1) && is_zero(p2)) p2 = 1;
        QPoly fs = specialize(f, p1, p2);
        QPoly gs = specialize(g, p1, p2);
        int gcd_deg = uni_gcd(fs, gs).degree();
        int smallest = -1;
        std::vector<Rational> pt{p1, p2, Rational(0)};
        for (size_t k = 0; k < chain.psc.size(); ++k) {
            const HomForm& p = chain.psc[k];
            if (!p.is_zero() && !is_zero(eval(p, pt))) {
                smallest = static_cast<int>(k);
                break;
            }
        }
        if (smallest < 0) smallest = static_cast<int>(chain.psc.size());
        CHECK(smallest == gcd_deg);
        ++checked;
    }
    CHECK(checked >= 150);
}

TEST_CASE("discriminant closed forms") {
    HomForm t = HomForm::variable(2, 0), s = HomForm::variable(2, 1);
    SplitMix64 st(263);
    for (int trial = 0; trial < 10; ++trial) {
        Rational a(st.uniform_int(1, 9)), b(st.uniform_int(-9, 9)), c(st.uniform_int(-9, 9));
        HomForm quad = add(add(scale(mul(t, t), a), scale(mul(t, s), b)), scale(mul(s, s), c));
        HomForm d = discriminant(quad, 0);
        HomForm expect = scale(mul(s, s), Rational(b * b - Rational(4) * a * c));
        CHECK(d == expect);
    }
    for (int trial = 0; trial < 10; ++trial) {
        Rational p(st.uniform_int(-9, 9)), q(st.uniform_int(-9, 9));
        // t^3 + p t s^2 + q s^3
        HomForm cubic = add(add(pow_form(t, 3), scale(mul(t, pow_form(s, 2)), p)),
                            scale(pow_form(s, 3), q));
        HomForm d = discriminant(cubic, 0);
        Rational expect = Rational(-4) * p * p * p - Rational(27) * q * q;
        CHECK(d == scale(pow_form(s, 6), Rational(expect)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        Rational c(st.uniform_int(-9, 9));
        if (is_zero(c)) continue;
        HomForm quartic = add(pow_form(t, 4), scale(pow_form(s, 4), c));
        HomForm d = discriminant(quartic, 0);
        // resultant oracle: res(f, f') = 256 c^3 with unit leading coefficient
        // and sign (+1) = (-1)^(4*3/2)
        CHECK(d == scale(pow_form(s, 12), Rational(Rational(256) * c * c * c)));
    }
}

TEST_CASE("discriminant vanishes exactly when gcd(f, f') is nonconstant") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        SplitMix64 st = substream(269, 18, trial);
        QPoly f = oracles::random_qpoly(static_cast<int>(st.below(4)) + 2, 6, st);
        if (trial % 3 == 0) {
            QPoly lin = qpoly_from({st.uniform_int(-4, 4), 1});
            f = mul(mul(lin, lin), oracles::random_qpoly(1, 6, st));
        }
        Rational res = resultant_q(f, derivative(f));
        bool repeated = uni_gcd(f, derivative(f)).degree() > 0;
        CHECK(is_zero(res) == repeated);
    }
}

TEST_CASE("binary gcd cases") {
    HomForm z1 = HomForm::variable(2, 0), z2 = HomForm::variable(2, 1);
    CHECK(binary_gcd(std::vector<BinaryForm>{mul(z1, z2), mul(z1, z1)}) == z1);
    HomForm d = sub(z1, z2);
    HomForm a = mul(mul(d, d), z2);
    HomForm b = mul(d, z1);
    CHECK(binary_gcd(std::vector<BinaryForm>{a, b}) == d);
    CHECK_THROWS_AS(binary_gcd(std::vector<BinaryForm>{HomForm(), HomForm()}), error);

    // coprime forms built from disjoint root sets
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 st = substream(271, 19, trial);
        HomForm f = HomForm::monomial(2, Exp{}, Rational(1));
        HomForm g = f;
        for (int i = 0; i < 3; ++i) {
            long r = st.uniform_int(1, 20);
            f = mul(f, sub(z1, scale(z2, Rational(r))));
            g = mul(g, sub(z1, scale(z2, Rational(-r))));
        }
        CHECK(binary_is_constant(binary_gcd(std::vector<BinaryForm>{f, g})));
    }
}

TEST_CASE("binary squarefree") {
    HomForm z1 = HomForm::variable(2, 0), z2 = HomForm::variable(2, 1);
    CHECK(binary_squarefree(mul(mul(z1, z2), sub(z1, z2))));
    CHECK(!binary_squarefree(mul(mul(z1, z1), z2)));
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        SplitMix64 st = substream(277, 20, trial);
        HomForm f = HomForm::monomial(2, Exp{}, Rational(st.uniform_int(1, 5)));
        long used[6] = {};
        int nfac = static_cast<int>(st.below(4)) + 2;
        for (int i = 0; i < nfac; ++i) {
            long r;
            bool fresh;
            do {
                r = st.uniform_int(-10, 10);
                fresh = true;
                for (int j = 0; j < i; ++j) fresh = fresh && used[j] != r;
            } while (!fresh);
            used[i] = r;
            f = mul(f, sub(z1, scale(z2, Rational(r))));
        }
        CHECK(binary_squarefree(f));
        HomForm sq = mul(f, sub(z1, scale(z2, Rational(used[0]))));
        CHECK(!binary_squarefree(sq));
        CHECK(squarefree_part(sq) == content_primitive(f).second);
    }
}

TEST_CASE("squarefree part of binary forms is idempotent and divides") {
    HomForm z1 = HomForm::variable(2, 0), z2 = HomForm::variable(2, 1);
    HomForm f = mul(mul(z1, z1), mul(sub(z1, z2), add(z1, z2)));
    BinaryForm sf = squarefree_part(f);
    CHECK(binary_squarefree(sf));
    CHECK(sf == squarefree_part(sf));
    CHECK(sf.degree() == 3);  // z1 (z1 - z2)(z1 + z2)
}

TEST_CASE("rational roots of binary forms") {
    HomForm z1 = HomForm::variable(2, 0), z2 = HomForm::variable(2, 1);
    // z1 * z2^2 * (2 z1 - 3 z2) * (z1 + z2)^2
    HomForm f = mul(mul(z1, mul(z2, z2)),
                    mul(sub(scale(z1, Rational(2)), scale(z2, Rational(3))),
                        pow_form(add(z1, z2), 2)));
    auto roots = binary_rational_roots(f);
    bool saw_inf = false, saw_zero = false, saw_32 = false, saw_m1 = false;
    for (const auto& r : roots) {
        if (is_zero(r.p2)) saw_inf = r.multiplicity == 2;          // (1:0) from z2^2
        else if (is_zero(r.p1)) saw_zero = r.multiplicity == 1;    // (0:1) from z1
        else if (r.p1 * 2 == r.p2 * 3) saw_32 = r.multiplicity == 1;
        else if (r.p1 == -r.p2) saw_m1 = r.multiplicity == 2;
    }
    CHECK(saw_inf);
    CHECK(saw_zero);
    CHECK(saw_32);
    CHECK(saw_m1);
}
