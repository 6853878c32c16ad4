#include <catch2/catch_amalgamated.hpp>

#include "conecert/certify.hpp"
#include "conecert/forge.hpp"
#include "oracles.hpp"

using namespace conecert;

namespace {

HomForm mono3(std::initializer_list<int> exps, long num) {
    Exp e{};
    size_t i = 0;
    for (int v : exps) e[i++] = static_cast<std::uint16_t>(v);
    return HomForm::monomial(3, e, Rational(num));
}

HomForm fermat_quartic() {
    return add(add(mono3({4, 0, 0}, 1), mono3({0, 4, 0}, 1)), mono3({0, 0, 4}, 1));
}

HomForm cone_form(int degree, long bound, SplitMix64& st) {
    Exp slot{};
    slot[2] = static_cast<std::uint16_t>(degree);
    return random_form_forced(3, degree, bound, st, slot);
}

HomForm guarded_inf(int degree, long bound, SplitMix64& st) {
    Exp z3{}, z4{};
    z3[2] = static_cast<std::uint16_t>(degree);
    z4[3] = static_cast<std::uint16_t>(degree);
    HomForm f = random_form_forced(4, degree, bound, st, z3);
    if (is_zero(f.coeff(z4))) f = add(f, HomForm::monomial(4, z4, Rational(1)));
    return f;
}

}  // namespace

TEST_CASE("check_vertices") {
    SplitMix64 st(501);
    ConePair good(fermat_quartic(), fermat_quartic());
    VertexCheck v = check_vertices(good);
    CHECK(v.pass);
    CHECK(v.value_f1 == Rational(1));
    CHECK(v.value_f2 == Rational(1));

    HomForm no_z3 = add(mono3({4, 0, 0}, 1), mono3({0, 4, 0}, 1));
    ConePair bad(no_z3, fermat_quartic());
    CHECK(!check_vertices(bad).pass);

    ConePair forced(cone_form(4, 10, st), cone_form(4, 10, st));
    CHECK(check_vertices(forced).pass);
}

TEST_CASE("check_smooth") {
    CHECK(check_smooth(fermat_quartic()).verdict == Verdict::Pass);

    HomForm conic = add(add(mono3({2, 0, 0}, 1), mono3({0, 2, 0}, 1)), mono3({0, 0, 2}, 1));
    CHECK(check_smooth(mul(conic, conic)).verdict == Verdict::Fail);

    HomForm cubic = add(mono3({3, 0, 0}, 1), mono3({0, 3, 0}, 1));
    CHECK_THROWS_AS(check_smooth(cubic), error);
}

TEST_CASE("fiber_min_distinct: Fermat worst fiber is a 4-fold root") {
    FiberMinResult r = fiber_min_distinct_full(fermat_quartic(), 2);
    CHECK(r.min_distinct == 1);
    CHECK(r.max_gcd_degree == 3);
    // the special locus is z1^4 + z2^4 (up to powers); check via squarefree part
    BinaryForm locus = squarefree_part(r.achieving_gcd);
    BinaryForm expect = add(HomForm::monomial(2, Exp{4, 0}, Rational(1)),
                            HomForm::monomial(2, Exp{0, 4}, Rational(1)));
    CHECK(locus == expect);
}

TEST_CASE("fiber_min_distinct: generic-looking quartic stays above 3") {
    // z3^4 + z3 z1^3 + z1^4 + z2^4
    HomForm f = add(add(mono3({0, 0, 4}, 1), mono3({3, 0, 1}, 1)),
                    add(mono3({4, 0, 0}, 1), mono3({0, 4, 0}, 1)));
    CHECK(fiber_min_distinct(f, 2) >= 3);
}

TEST_CASE("fiber_min_distinct preconditions and edge degrees") {
    // nonconstant leading coefficient in the fiber variable
    HomForm f = add(mono3({1, 0, 3}, 1), mono3({0, 4, 0}, 1));
    CHECK_THROWS_AS(fiber_min_distinct(f, 2), error);
    // linear fibers
    HomForm lin = add(mono3({0, 0, 1}, 2), mono3({1, 0, 0}, 3));
    CHECK(fiber_min_distinct(lin, 2) == 1);
}

TEST_CASE("condition (i) fails for X_inf through two Gamma points in one fiber") {
    HomForm z1 = HomForm::variable(3, 0), z3 = HomForm::variable(3, 2);
    // f1 = z3^4 - z1^3 z3: fiber over (1:1) has roots {0, 1, w, wbar}
    HomForm f1 = sub(pow_form(z3, 4), mul(pow_form(z1, 3), z3));
    // f2 = z4^4 - 5 z1^2 z4^2 + 4 z1^4: fiber over (1:1) has roots {1,-1,2,-2}
    HomForm f2 = add(sub(pow_form(z3, 4), scale(mul(mul(z1, z1), mul(z3, z3)), Rational(5))),
                     scale(pow_form(z1, 4), Rational(4)));
    // q1 = (1:1:0:1), q2 = (1:1:1:-1) both lie on Gamma over (1:1)
    SplitMix64 st(509);
    HomForm h = guarded_inf(8, 10, st);
    Exp z3p{}, z4p{};
    z3p[2] = 8;
    z4p[3] = 8;
    std::vector<Rational> q1{Rational(1), Rational(1), Rational(0), Rational(1)};
    std::vector<Rational> q2{Rational(1), Rational(1), Rational(1), Rational(-1)};
    HomForm finf = sub(h, HomForm::monomial(4, z4p, eval(h, q1)));
    finf = sub(finf, HomForm::monomial(4, z3p, eval(finf, q2)));
    REQUIRE(is_zero(eval(finf, q1)));
    REQUIRE(is_zero(eval(finf, q2)));

    GammaForm g = gamma_eliminate_forms(f1, f2, finf);
    REQUIRE(!g.degenerate());
    CHECK(g.R.degree() == 128);
    // the double image over (1:1) shows up as a repeated (z1 - z2) factor
    std::vector<Rational> dir{Rational(1), Rational(1)};
    CHECK(is_zero(eval(g.R, dir)));
    ConditionReport cr = check_condition_i_ii(g);
    CHECK(!cr.squarefree);
    CHECK(!cr.condition_i);
    REQUIRE(cr.gcd_i.has_value());
    CHECK(cr.gcd_i->degree() > 0);
    CHECK(is_zero(eval(*cr.gcd_i, dir)));
}

TEST_CASE("assemble: Fermat pair fails first at fiber_min_F1 with witness 1") {
    SplitMix64 st(521);
    DeformationFamily fam(ConePair(fermat_quartic(), fermat_quartic()), guarded_inf(8, 10, st));
    Certificate cert = assemble_certificate(fam);
    CHECK(cert.overall == Verdict::Fail);
    const CheckRecord* first = cert.first_failing();
    REQUIRE(first != nullptr);
    CHECK(first->name == "fiber_min_F1");
    CHECK(first->witness == "1");
}

TEST_CASE("assemble: missing pure z3 term fails at vertex_a") {
    SplitMix64 st(523);
    HomForm no_z3 = add(mono3({4, 0, 0}, 1), mono3({0, 4, 0}, 1));
    DeformationFamily fam(ConePair(no_z3, fermat_quartic()), guarded_inf(8, 10, st));
    Certificate cert = assemble_certificate(fam);
    CHECK(cert.overall == Verdict::Fail);
    const CheckRecord* first = cert.first_failing();
    REQUIRE(first != nullptr);
    CHECK(first->name == "vertex_a");
    // dependent checks are recorded, not silently dropped
    CHECK(cert.find("fiber_min_F1")->verdict == Verdict::Inconclusive);
    CHECK(cert.find("R_squarefree")->verdict == Verdict::Inconclusive);
}

TEST_CASE("scaling invariance: nonzero rational rescaling changes no verdict") {
    GenConfig cfg;
    cfg.seed = 42;
    BuildResult base = build_family(cfg);
    REQUIRE(base.passed);
    const DeformationFamily& fam = *base.family;
    DeformationFamily scaled(
        ConePair(scale(fam.cones.f1, Rational(-3, 7)), scale(fam.cones.f2, Rational(5))),
        scale(fam.f_inf, Rational(-11, 2)));
    Certificate a = assemble_certificate(fam);
    Certificate b = assemble_certificate(scaled);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].verdict == b.checks[i].verdict);
    }
    CHECK(a.overall == b.overall);
}

TEST_CASE("assemble is deterministic") {
    GenConfig cfg;
    cfg.seed = 42;
    BuildResult r = build_family(cfg);
    REQUIRE(r.passed);
    Certificate a = assemble_certificate(*r.family);
    Certificate b = assemble_certificate(*r.family);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].verdict == b.checks[i].verdict);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
}
