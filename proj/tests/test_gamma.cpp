#include <catch2/catch_amalgamated.hpp>

#include "conecert/certify.hpp"
#include "conecert/gamma.hpp"
#include "oracles.hpp"

using namespace conecert;

namespace {

HomForm cone_form(int degree, long bound, SplitMix64& st) {
    Exp slot{};
    slot[2] = static_cast<std::uint16_t>(degree);
    return random_form_forced(3, degree, bound, st, slot);
}

// 4-variable form with nonzero pure z3^d and z4^d coefficients
HomForm guarded_inf(int degree, long bound, SplitMix64& st) {
    Exp z3{}, z4{};
    z3[2] = static_cast<std::uint16_t>(degree);
    z4[3] = static_cast<std::uint16_t>(degree);
    HomForm f = random_form_forced(4, degree, bound, st, z3);
    if (is_zero(f.coeff(z4)))
        f = add(f, HomForm::monomial(4, z4, Rational(1)));
    return f;
}

}  // namespace

TEST_CASE("interpolated elimination equals the direct determinant path") {
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        SplitMix64 st = substream(401, 30, trial);
        int m = 2 + static_cast<int>(trial % 2);
        int n = 2 + static_cast<int>((trial / 2) % 2);
        HomForm f1 = cone_form(m, 5, st);
        HomForm f2 = cone_form(n, 5, st);
        HomForm finf = guarded_inf(m + n, 5, st);
        BinaryForm fast = detail::gamma_resultant_interpolated(f1, finf, f2);
        BinaryForm direct = detail::gamma_resultant_direct(f1, finf, f2);
        CHECK(fast == direct);
        if (!fast.is_zero()) CHECK(fast.degree() == m * n * (m + n));
    }
}

TEST_CASE("gamma_eliminate: degenerate when X_inf contains the double curve") {
    SplitMix64 st(409);
    HomForm f1 = cone_form(2, 5, st);
    HomForm f2 = cone_form(2, 5, st);
    HomForm finf = mul(insert_var(f1, 3), insert_var(f2, 2));
    GammaForm g = gamma_eliminate_forms(f1, f2, finf);
    CHECK(g.degenerate());
    CHECK_THROWS_AS(check_condition_i_ii(g), error);
}

TEST_CASE("gamma_eliminate: discriminant layers and degrees") {
    SplitMix64 st(419);
    HomForm f1 = cone_form(4, 8, st);
    HomForm f2 = cone_form(4, 8, st);
    HomForm finf = guarded_inf(8, 8, st);
    GammaForm g = gamma_eliminate_forms(f1, f2, finf);
    CHECK(g.D1.degree() == 12);
    CHECK(g.D2.degree() == 12);
    CHECK(g.D1 == contract_var(discriminant(f1, 2), 2));
    REQUIRE(!g.degenerate());
    CHECK(g.R.degree() == 128);
    CHECK(g.expected_degree() == 128);
}

TEST_CASE("vertex condition is required") {
    SplitMix64 st(421);
    HomForm f1 = cone_form(4, 5, st);
    // drop the pure z3 term
    Exp slot{};
    slot[2] = 4;
    HomForm bad = sub(f1, HomForm::monomial(3, slot, f1.coeff(slot)));
    HomForm f2 = cone_form(4, 5, st);
    HomForm finf = guarded_inf(8, 5, st);
    CHECK_THROWS_AS(gamma_eliminate_forms(bad, f2, finf), error);
}

TEST_CASE("guard coefficients route to the direct path and agree") {
    // finf without the pure z3 power: fast guards fail, direct path runs
    SplitMix64 st(431);
    HomForm f1 = cone_form(2, 4, st);
    HomForm f2 = cone_form(2, 4, st);
    HomForm finf = random_form(4, 4, 4, st);
    Exp z3{}, z4{};
    z3[2] = 4;
    z4[3] = 4;
    finf = sub(finf, HomForm::monomial(4, z3, finf.coeff(z3)));  // kill the guard
    if (finf.is_zero()) finf = HomForm::monomial(4, z4, Rational(1));
    GammaForm g = gamma_eliminate_forms(f1, f2, finf);
    // direct path result must still match the defining iterated resultant
    HomForm f1_4 = insert_var(f1, 3);
    HomForm f2_4 = insert_var(f2, 2);
    HomForm G = finf.depends_on(2) ? sylvester_resultant(f1_4, finf, 2)
                                   : pow_form(finf, 2);
    HomForm R4;
    if (G.is_zero())
        R4 = HomForm();
    else if (G.depends_on(3))
        R4 = sylvester_resultant(G, f2_4, 3);
    else
        R4 = pow_form(G, 2);
    if (R4.is_zero())
        CHECK(g.R.is_zero());
    else
        CHECK(g.R == contract_var(contract_var(R4, 3), 2));
}
