#ifndef CONECERT_UNIPOLY_HPP
#define CONECERT_UNIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "conecert/rational.hpp"

namespace conecert {

// Coefficient-ring hooks for Poly<R>.  The default covers field-like types
// with arithmetic operators and comparison against 0; HomForm specializes.
template <class R>
struct RingTraits {
    static R zero() { return R(0); }
    static bool is_zero(const R& a) { return a == 0; }
    static R divexact(const R& a, const R& b) { return a / b; }
    static R mul_int(const R& a, long k) { return a * R(k); }
};

// Dense univariate polynomial, ascending coefficients, no stored zero lead.
// The zero polynomial has degree -1.
template <class R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Poly(const R& c0) : c_{c0} { normalize(); }

    static Poly monomial(const R& coeff, int deg) {
        std::vector<R> c(static_cast<size_t>(deg) + 1, RingTraits<R>::zero());
        c.back() = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const R& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    // Coefficient of x^i; zero beyond the degree.
    const R& coeff(int i) const {
        static const R z = RingTraits<R>::zero();
        if (i < 0 || i >= static_cast<int>(c_.size())) return z;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& coeffs_mut() { return c_; }

    void normalize() {
        while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

  private:
    std::vector<R> c_;
};

template <class R>
Poly<R> add(const Poly<R>& a, const Poly<R>& b) {
    std::vector<R> c(std::max(a.coeffs().size(), b.coeffs().size()), RingTraits<R>::zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs().size()) c[i] = c[i] + a.coeffs()[i];
        if (i < b.coeffs().size()) c[i] = c[i] + b.coeffs()[i];
    }
    return Poly<R>(std::move(c));
}

template <class R>
Poly<R> neg(const Poly<R>& a) {
    std::vector<R> c = a.coeffs();
    for (auto& x : c) x = RingTraits<R>::zero() - x;
    return Poly<R>(std::move(c));
}

template <class R>
Poly<R> sub(const Poly<R>& a, const Poly<R>& b) {
    return add(a, neg(b));
}

template <class R>
Poly<R> mul(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<R>();
    std::vector<R> c(a.coeffs().size() + b.coeffs().size() - 1, RingTraits<R>::zero());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (RingTraits<R>::is_zero(a.coeffs()[i])) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
    return Poly<R>(std::move(c));
}

template <class R, class S>
Poly<R> scale(const Poly<R>& a, const S& s_in) {
    R s(s_in);  // materialize (gmpxx hands out expression templates)
    if (RingTraits<R>::is_zero(s)) return Poly<R>();
    std::vector<R> c = a.coeffs();
    for (auto& x : c) x = x * s;
    return Poly<R>(std::move(c));
}

// a * x^k
template <class R>
Poly<R> shift_up(const Poly<R>& a, int k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<R> c(a.coeffs().size() + static_cast<size_t>(k), RingTraits<R>::zero());
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + k);
    return Poly<R>(std::move(c));
}

template <class R>
Poly<R> derivative(const Poly<R>& a) {
    if (a.degree() < 1) return Poly<R>();
    std::vector<R> c(a.coeffs().size() - 1, RingTraits<R>::zero());
    for (size_t i = 1; i < a.coeffs().size(); ++i)
        c[i - 1] = RingTraits<R>::mul_int(a.coeffs()[i], static_cast<long>(i));
    return Poly<R>(std::move(c));
}

// Horner evaluation in a possibly different scalar type.
template <class R, class S>
S eval_poly(const Poly<R>& a, const S& x, S (*conv)(const R&)) {
    S acc{};
    for (int i = a.degree(); i >= 0; --i) acc = acc * x + conv(a.coeff(i));
    return acc;
}

using QPoly = Poly<Rational>;

inline QPoly qpoly_from(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

inline Rational eval_q(const QPoly& a, const Rational& x) {
    Rational acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = acc * x + a.coeff(i);
    return acc;
}

// Quotient/remainder over the rationals.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& l = b.lc();
    for (int k = a.degree(); k >= b.degree(); --k) {
        Rational q = rem[static_cast<size_t>(k)] / l;
        if (is_zero(q)) continue;
        quo[static_cast<size_t>(k - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k - b.degree() + j)] -= q * b.coeff(j);
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

// Pseudo-remainder: prem(a,b) = lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
    assert(!b.is_zero());
    Poly<R> r = a;
    int d = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<R> t = shift_up(scale(b, r.lc()), r.degree() - b.degree());
        r = sub(scale(r, b.lc()), t);
        --d;
    }
    for (; d > 0; --d) r = scale(r, b.lc());
    return r;
}

// Exact division (asserts divisibility); valid over any integral domain via
// RingTraits::divexact on coefficients.
template <class R>
Poly<R> divexact_poly(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw error("exact division by zero polynomial");
    if (a.is_zero()) return Poly<R>();
    if (a.degree() < b.degree()) throw error("inexact polynomial division");
    Poly<R> r = a;
    std::vector<R> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, RingTraits<R>::zero());
    while (!r.is_zero()) {
        if (r.degree() < b.degree()) throw error("inexact polynomial division");
        R q = RingTraits<R>::divexact(r.lc(), b.lc());
        int sh = r.degree() - b.degree();
        quo[static_cast<size_t>(sh)] = q;
        r = sub(r, shift_up(scale(b, q), sh));
    }
    return Poly<R>(std::move(quo));
}

// content/primitive over Q: a = content * primitive with primitive having
// coprime integer coefficients and positive leading coefficient.
inline Rational qpoly_content(const QPoly& a) {
    if (a.is_zero()) throw error("content of zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const Rational& q : a.coeffs()) {
        if (is_zero(q)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(a.lc()) < 0) c = -c;
    return c;
}

inline std::pair<Rational, QPoly> qpoly_content_primitive(const QPoly& a) {
    Rational c = qpoly_content(a);
    std::vector<Rational> prim = a.coeffs();
    for (auto& x : prim) x /= c;
    return {c, QPoly(std::move(prim))};
}

// Subresultant polynomial remainder sequence on primitive integer parts
// (Collins/Brown); keeps coefficient growth polynomial instead of the
// exponential blowup of the naive Euclidean remainders.
inline QPoly gcd_subresultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) throw error("gcd(0,0) undefined");
    auto monic = [](const QPoly& p) {
        return p.is_zero() ? p : scale(p, Rational(1) / p.lc());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    QPoly f = qpoly_content_primitive(a).second;
    QPoly g = qpoly_content_primitive(b).second;
    if (f.degree() < g.degree()) std::swap(f, g);
    Rational gg = 1, h = 1;
    while (true) {
        int delta = f.degree() - g.degree();
        QPoly r = prem(f, g);
        if (r.is_zero()) break;
        if (r.degree() == 0) return QPoly(Rational(1));
        Rational div = gg * rat_pow(h, static_cast<unsigned long>(delta));
        QPoly next = scale(r, Rational(1) / div);
        f = g;
        g = next;
        gg = f.lc();
        if (delta > 0) {
            Rational hp = rat_pow(h, static_cast<unsigned long>(delta - 1));
            h = rat_pow(gg, static_cast<unsigned long>(delta)) / hp;
        }
    }
    return monic(qpoly_content_primitive(g).second);
}

// Monic gcd over Q; deg gcd(f, f') = deg f - #(distinct complex roots of f).
inline QPoly uni_gcd(const QPoly& a, const QPoly& b) { return gcd_subresultant(a, b); }

inline QPoly squarefree_part(const QPoly& a) {
    if (a.is_zero()) throw error("squarefree part of zero polynomial");
    if (a.degree() == 0) return QPoly(Rational(1));
    QPoly g = uni_gcd(a, derivative(a));
    auto [q, r] = divmod(a, g);
    assert(r.is_zero());
    (void)r;
    return q;
}

// Sylvester-convention resultant over Q (rows of `a` first), computed by the
// Euclidean similarity res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b, a mod b).
inline Rational resultant_q(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    QPoly f = a, g = b;
    Rational acc = 1;
    while (g.degree() > 0) {
        QPoly r = divmod(f, g).second;
        if ((f.degree() & 1) && (g.degree() & 1)) acc = -acc;
        int dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return Rational(0);
        acc *= rat_pow(g.lc(), static_cast<unsigned long>(f.degree() - dr));
        f = g;
        g = r;
    }
    // g is a nonzero constant
    acc *= rat_pow(g.lc(), static_cast<unsigned long>(f.degree()));
    return acc;
}

}  // namespace conecert

#endif
