#ifndef CONECERT_BINARY_HPP
#define CONECERT_BINARY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conecert/homform.hpp"
#include "conecert/unipoly.hpp"

namespace conecert {

// Binary forms are HomForm values with nvars == 2 (variables z1, z2).
using BinaryForm = HomForm;

namespace detail {

struct BinarySplit {
    int e1 = 0, e2 = 0;  // powers of z1, z2 dividing the form
    QPoly core;          // dehomogenized remainder, nonzero ends
};

inline BinarySplit binary_split(const BinaryForm& f) {
    if (f.is_zero()) throw error("binary_split of zero form");
    if (f.nvars() != 2) throw error("binary form required");
    int e1 = f.degree(), e2 = f.degree();
    for (const auto& [e, c] : f.terms()) {
        e1 = std::min(e1, static_cast<int>(e[0]));
        e2 = std::min(e2, static_cast<int>(e[1]));
    }
    std::vector<Rational> coeffs(static_cast<size_t>(f.degree() - e1 - e2) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) coeffs[static_cast<size_t>(e[0] - e1)] = c;
    BinarySplit s;
    s.e1 = e1;
    s.e2 = e2;
    s.core = QPoly(std::move(coeffs));
    return s;
}

inline BinaryForm binary_join(int e1, int e2, const QPoly& core) {
    if (core.is_zero()) return BinaryForm();
    std::vector<std::pair<Exp, Rational>> acc;
    for (int i = 0; i <= core.degree(); ++i) {
        if (is_zero(core.coeff(i))) continue;
        Exp e{};
        e[0] = static_cast<std::uint16_t>(i + e1);
        e[1] = static_cast<std::uint16_t>(core.degree() - i + e2);
        acc.emplace_back(e, core.coeff(i));
    }
    return HomForm::from_terms(2, acc);
}

// ---- gcd-degree bound mod p -------------------------------------------------
// For p not dividing either leading coefficient, deg gcd mod p bounds
// deg gcd over Q from above; a constant modular gcd therefore certifies a
// constant rational gcd without running the big-integer remainder sequence.

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
}

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a, p - 2, p); }

// Reduce a primitive integer polynomial mod p; nullopt when the leading
// coefficient dies (bad prime).
inline std::optional<std::vector<std::uint64_t>> reduce_mod(const QPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> out(static_cast<size_t>(f.degree()) + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rational& q = f.coeff(i);
        if (q.get_den() != 1) return std::nullopt;  // caller passes integer polys
        std::uint64_t m = mpz_fdiv_ui(q.get_num_mpz_t(), p);
        out[static_cast<size_t>(i)] = m;
    }
    if (out.back() == 0) return std::nullopt;
    return out;
}

inline int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto deg = [](const std::vector<std::uint64_t>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    int da = deg(a), db = deg(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db >= 0) {
        // a <- a mod b
        std::uint64_t inv = invm(b[static_cast<size_t>(db)], p);
        for (int k = da; k >= db; --k) {
            std::uint64_t c = mulm(a[static_cast<size_t>(k)], inv, p);
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) {
                std::uint64_t t = mulm(c, b[static_cast<size_t>(j)], p);
                a[static_cast<size_t>(k - db + j)] = addm(a[static_cast<size_t>(k - db + j)], p - t, p);
            }
        }
        da = deg(a);
        std::swap(a, b);
        std::swap(da, db);
    }
    return da;  // degree of the last nonzero remainder
}

constexpr std::uint64_t kGcdPrimes[3] = {2305843009213693951ull,  // 2^61 - 1
                                         2147483647ull,           // 2^31 - 1
                                         1000000007ull};

// True when some good prime certifies gcd(f, g) constant.
inline bool certify_coprime_mod(const QPoly& f, const QPoly& g) {
    if (f.degree() < 1 || g.degree() < 1) return true;
    QPoly fp = qpoly_content_primitive(f).second;
    QPoly gp = qpoly_content_primitive(g).second;
    for (std::uint64_t p : kGcdPrimes) {
        auto ra = reduce_mod(fp, p);
        auto rb = reduce_mod(gp, p);
        if (!ra || !rb) continue;
        if (gcd_degree_mod(*ra, *rb, p) == 0) return true;
    }
    return false;
}

}  // namespace detail

// gcd of binary forms: shared powers of z1, z2 are tracked separately and the
// cores are reduced through the univariate gcd machinery.  Result is
// integer-primitive with positive leading coefficient.
inline BinaryForm binary_gcd(std::span<const BinaryForm> fs) {
    int e1 = -1, e2 = -1;
    QPoly acc;
    bool have = false;
    for (const BinaryForm& f : fs) {
        if (f.is_zero()) continue;
        auto s = detail::binary_split(f);
        e1 = e1 < 0 ? s.e1 : std::min(e1, s.e1);
        e2 = e2 < 0 ? s.e2 : std::min(e2, s.e2);
        acc = have ? uni_gcd(acc, s.core) : s.core;
        have = true;
        if (acc.degree() == 0 && e1 == 0 && e2 == 0) break;
    }
    if (!have) throw error("binary_gcd: all inputs zero");
    BinaryForm g = detail::binary_join(e1, e2, acc);
    return content_primitive(g).second;
}

inline BinaryForm binary_gcd(const std::vector<BinaryForm>& fs) {
    return binary_gcd(std::span<const BinaryForm>(fs.data(), fs.size()));
}

inline bool binary_is_constant(const BinaryForm& f) { return !f.is_zero() && f.degree() == 0; }

// Cheap certified answers only: shared z-powers, tiny cores, or a good prime
// certifying gcd(core, core') constant.  nullopt means "run the exact
// remainder sequence".
inline std::optional<bool> binary_squarefree_fast(const BinaryForm& f) {
    if (f.is_zero()) throw error("binary_squarefree of zero form");
    if (f.degree() == 0) return true;
    auto s = detail::binary_split(f);
    if (s.e1 >= 2 || s.e2 >= 2) return false;
    if (s.core.degree() <= 1) return true;
    if (detail::certify_coprime_mod(s.core, derivative(s.core))) return true;
    return std::nullopt;
}

// All roots in P^1 simple, i.e. gcd(f, d f/d z1) constant.  A modular
// certificate short-circuits the common squarefree case; the exact remainder
// sequence settles the rest.
inline bool binary_squarefree(const BinaryForm& f) {
    if (auto fast = binary_squarefree_fast(f)) return *fast;
    auto s = detail::binary_split(f);
    return uni_gcd(s.core, derivative(s.core)).degree() == 0;
}

// Product of the distinct irreducible factors, up to a constant.
inline BinaryForm squarefree_part(const BinaryForm& f) {
    if (f.is_zero()) throw error("squarefree part of zero form");
    if (f.nvars() != 2) throw error("binary form required");
    if (f.degree() == 0) return content_primitive(f).second;
    auto s = detail::binary_split(f);
    QPoly core_sf = s.core.degree() >= 1 ? squarefree_part(s.core) : QPoly(Rational(1));
    BinaryForm g = detail::binary_join(std::min(s.e1, 1), std::min(s.e2, 1), core_sf);
    return content_primitive(g).second;
}

// Exact rational roots (p1:p2) of a binary form together with multiplicities;
// divisor enumeration is capped, so large-coefficient cores may simply yield
// no exact roots (callers fall back to numeric representatives).
struct BinaryRationalRoot {
    Rational p1, p2;  // projective pair, normalized
    int multiplicity = 0;
};

namespace detail {

inline std::vector<Int> bounded_divisors(const Int& n0, unsigned long cap = 4096) {
    Int n = abs(n0);
    std::vector<Int> out;
    if (n == 0) return out;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40) {
        out.emplace_back(1);  // too big to enumerate; still try +/-1
        return out;
    }
    unsigned long v = n.get_ui();
    for (unsigned long d = 1; d * d <= v && out.size() < cap; ++d) {
        if (v % d) continue;
        out.emplace_back(d);
        if (d != v / d) out.emplace_back(v / d);
    }
    return out;
}

}  // namespace detail

inline std::vector<BinaryRationalRoot> binary_rational_roots(const BinaryForm& f) {
    std::vector<BinaryRationalRoot> out;
    if (f.is_zero()) throw error("roots of zero form");
    auto s = detail::binary_split(f);
    if (s.e2 > 0) out.push_back({Rational(1), Rational(0), s.e2});  // (1:0)
    if (s.e1 > 0) out.push_back({Rational(0), Rational(1), s.e1});  // (0:1)
    QPoly core = qpoly_content_primitive(s.core).second;
    if (core.degree() < 1) return out;
    std::vector<Int> ps = detail::bounded_divisors(core.coeff(0).get_num());
    std::vector<Int> qs = detail::bounded_divisors(core.lc().get_num());
    for (const Int& p : ps)
        for (const Int& q : qs)
            for (int sign = 0; sign < 2; ++sign) {
                Rational r(sign ? -p : p, q);
                r.canonicalize();
                if (!is_zero(eval_q(core, r))) continue;
                int mult = 0;
                QPoly lin(std::vector<Rational>{-r, Rational(1)});
                while (true) {
                    auto [quo, rem] = divmod(core, lin);
                    if (!rem.is_zero()) break;
                    core = quo;
                    ++mult;
                }
                if (mult > 0) out.push_back({r, Rational(1), mult});
                if (core.degree() < 1) return out;
            }
    return out;
}

}  // namespace conecert

#endif
