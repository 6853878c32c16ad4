#include <catch2/catch_amalgamated.hpp>

#include "conecert/macaulay.hpp"
#include "conecert/roots.hpp"
#include "oracles.hpp"

using namespace conecert;

namespace {

HomForm mono(std::initializer_list<int> exps, long num) {
    Exp e{};
    size_t i = 0;
    for (int v : exps) e[i++] = static_cast<std::uint16_t>(v);
    return HomForm::monomial(3, e, Rational(num));
}

// random ternary form vanishing at a given exact point
HomForm planted_form(int degree, const std::vector<Rational>& p, SplitMix64& st) {
    while (true) {
        HomForm f = random_form(3, degree, 6, st);
        if (f.is_zero()) continue;
        // pick a monomial nonvanishing at p to absorb the value
        int slot = -1;
        for (int i = 0; i < 3; ++i)
            if (!is_zero(p[static_cast<size_t>(i)])) slot = i;
        Exp e{};
        e[static_cast<size_t>(slot)] = static_cast<std::uint16_t>(degree);
        Rational mu = rat_pow(p[static_cast<size_t>(slot)], static_cast<unsigned long>(degree));
        Rational v = eval(f, p);
        HomForm g = sub(f, HomForm::monomial(3, e, Rational(v / mu)));
        if (!g.is_zero()) return g;
    }
}

// dense-start Gauss-Newton search for a common projective zero of three forms
bool numeric_common_zero(const HomForm& g1, const HomForm& g2, const HomForm& g3, int starts,
                         std::uint64_t seed) {
    const HomForm* gs[3] = {&g1, &g2, &g3};
    long double scale = 0.0L;
    for (const HomForm* g : gs) {
        long double s = 0.0L;
        for (const auto& [e, c] : g->terms()) s += std::abs(to_long_double(c));
        scale = std::max(scale, s);
    }
    std::vector<std::vector<HomForm>> jac(3, std::vector<HomForm>(3));
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 3; ++v) jac[static_cast<size_t>(i)][static_cast<size_t>(v)] = diff(*gs[i], v);
    for (int start = 0; start < starts; ++start) {
        SplitMix64 st = substream(seed, 0x6f7261636cull, static_cast<std::uint64_t>(start));
        std::vector<CLD> z(3);
        for (auto& c : z)
            c = CLD((static_cast<long double>(st.below(1 << 20)) / (1 << 19)) - 1.0L,
                    (static_cast<long double>(st.below(1 << 20)) / (1 << 19)) - 1.0L);
        for (int iter = 0; iter < 80; ++iter) {
            long double nz = 0.0L;
            for (const CLD& c : z) nz += std::norm(c);
            nz = std::sqrt(nz);
            if (nz == 0.0L) break;
            for (CLD& c : z) c /= nz;
            CLD F[3];
            long double fn = 0.0L;
            for (int i = 0; i < 3; ++i) {
                F[i] = eval_cld(*gs[i], z);
                fn += std::norm(F[i]);
            }
            if (std::sqrt(fn) / scale < 1e-11L) return true;
            CLD J[3][3];
            for (int i = 0; i < 3; ++i)
                for (int v = 0; v < 3; ++v)
                    J[i][v] = eval_cld(jac[static_cast<size_t>(i)][static_cast<size_t>(v)], z);
            CLD A[3][4];
            for (int i = 0; i < 3; ++i) {
                for (int v = 0; v < 3; ++v) A[i][v] = J[i][v];
                A[i][3] = -F[i];
            }
            bool singular = false;
            for (int col = 0; col < 3 && !singular; ++col) {
                int piv = col;
                for (int r = col + 1; r < 3; ++r)
                    if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
                if (std::abs(A[piv][col]) < 1e-25L) {
                    singular = true;
                    break;
                }
                std::swap(A[piv], A[col]);
                for (int r = col + 1; r < 3; ++r) {
                    CLD f = A[r][col] / A[col][col];
                    for (int c = col; c < 4; ++c) A[r][c] -= f * A[col][c];
                }
            }
            if (singular) break;
            CLD d[3];
            for (int r = 2; r >= 0; --r) {
                CLD s = A[r][3];
                for (int c = r + 1; c < 3; ++c) s -= A[r][c] * d[c];
                d[r] = s / A[r][r];
            }
            long double step = 0.0L;
            for (int v = 0; v < 3; ++v) {
                z[static_cast<size_t>(v)] += d[v];
                step += std::norm(d[v]);
            }
            if (std::sqrt(step) < 1e-18L) break;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("degree-1 Macaulay resultant is the coefficient determinant") {
    SplitMix64 st(307);
    for (int trial = 0; trial < 20; ++trial) {
        HomForm l1 = random_form(3, 1, 9, st);
        HomForm l2 = random_form(3, 1, 9, st);
        HomForm l3 = random_form(3, 1, 9, st);
        if (l1.is_zero() || l2.is_zero() || l3.is_zero()) continue;
        RMatrix<Rational> m(3);
        const HomForm* ls[3] = {&l1, &l2, &l3};
        for (int i = 0; i < 3; ++i)
            for (int v = 0; v < 3; ++v) {
                Exp e{};
                e[static_cast<size_t>(v)] = 1;
                m.at(i, v) = ls[i]->coeff(e);
            }
        Rational det = bareiss_det(m);
        MacaulayResult r = macaulay_resultant3(l1, l2, l3);
        REQUIRE(r.value.has_value());
        CHECK(*r.value == det);
        CHECK((r.verdict == MacaulayResult::Verdict::Zero) == is_zero(det));
    }
}

TEST_CASE("Fermat quartic partials have no common zero") {
    HomForm f = add(add(mono({4, 0, 0}, 1), mono({0, 4, 0}, 1)), mono({0, 0, 4}, 1));
    MacaulayResult r = macaulay_resultant3(diff(f, 0), diff(f, 1), diff(f, 2));
    CHECK(r.verdict == MacaulayResult::Verdict::Nonzero);
    CHECK(!numeric_common_zero(diff(f, 0), diff(f, 1), diff(f, 2), 60, 1));
}

TEST_CASE("double conic: partials share the conic") {
    HomForm conic = add(add(mono({2, 0, 0}, 1), mono({0, 2, 0}, 1)), mono({0, 0, 2}, 1));
    HomForm f = mul(conic, conic);
    MacaulayResult r = macaulay_resultant3(diff(f, 0), diff(f, 1), diff(f, 2));
    CHECK(r.verdict == MacaulayResult::Verdict::Zero);
}

TEST_CASE("nodal cubic: node kills all partials") {
    // z2^2 z3 - z1^2 (z1 + z3), node at (0:0:1)
    HomForm f = sub(mono({0, 2, 1}, 1), add(mono({3, 0, 0}, 1), mono({2, 0, 1}, 1)));
    HomForm g1 = diff(f, 0), g2 = diff(f, 1), g3 = diff(f, 2);
    std::vector<Rational> node{Rational(0), Rational(0), Rational(1)};
    REQUIRE(is_zero(eval(g1, node)));
    REQUIRE(is_zero(eval(g2, node)));
    REQUIRE(is_zero(eval(g3, node)));
    MacaulayResult r = macaulay_resultant3(g1, g2, g3);
    CHECK(r.verdict == MacaulayResult::Verdict::Zero);
}

TEST_CASE("zero/nonzero agrees with the numeric common-zero oracle on 50 systems") {
    int zero_cases = 0, nonzero_cases = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        SplitMix64 st = substream(311, 21, trial);
        int e = static_cast<int>(st.below(3)) + 1;
        HomForm g1, g2, g3;
        bool planted = trial % 2 == 0;
        if (planted) {
            std::vector<Rational> p{Rational(st.uniform_int(-3, 3)), Rational(st.uniform_int(-3, 3)),
                                    Rational(1)};
            g1 = planted_form(e, p, st);
            g2 = planted_form(e, p, st);
            g3 = planted_form(e, p, st);
        } else {
            g1 = oracles::random_nonzero_form(3, e, 6, st);
            g2 = oracles::random_nonzero_form(3, e, 6, st);
            g3 = oracles::random_nonzero_form(3, e, 6, st);
        }
        MacaulayResult r = macaulay_resultant3(g1, g2, g3);
        if (planted) {
            CHECK(r.verdict == MacaulayResult::Verdict::Zero);
            ++zero_cases;
        } else if (r.verdict == MacaulayResult::Verdict::Nonzero) {
            CHECK(!numeric_common_zero(g1, g2, g3, 40, trial));
            ++nonzero_cases;
        } else if (r.verdict == MacaulayResult::Verdict::Zero) {
            CHECK(numeric_common_zero(g1, g2, g3, 400, trial));
        }
    }
    CHECK(zero_cases == 25);
    CHECK(nonzero_cases >= 20);
}

TEST_CASE("unequal degrees are rejected") {
    HomForm a = mono({2, 0, 0}, 1);
    HomForm b = mono({0, 1, 0}, 1);
    CHECK_THROWS_AS(macaulay_resultant3(a, b, b), error);
}
