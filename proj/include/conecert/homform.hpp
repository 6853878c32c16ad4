#ifndef CONECERT_HOMFORM_HPP
#define CONECERT_HOMFORM_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "conecert/rational.hpp"
#include "conecert/unipoly.hpp"

namespace conecert {

constexpr int kMaxVars = 5;

using Exp = std::array<std::uint16_t, kMaxVars>;

inline int exp_total(const Exp& e) {
    int s = 0;
    for (auto v : e) s += v;
    return s;
}

// Graded-lex, leading term first: higher total degree wins, then lex with
// the first variable heaviest.
struct ExpBefore {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = exp_total(a), db = exp_total(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse homogeneous form with exact rational coefficients.  Every stored
// coefficient is nonzero and every exponent vector sums to degree(); term
// order is canonical, so operator== is polynomial equality.
//
// The zero form is a single universal value (no variables, no terms); its
// degree is undefined and reported as -1.  It is compatible with any operand,
// which is what makes forms usable as matrix/polynomial coefficients in the
// elimination kernels, where minors legitimately vanish.
class HomForm {
  public:
    using TermMap = std::map<Exp, Rational, ExpBefore>;

    HomForm() = default;

    static HomForm zero() { return HomForm(); }

    static HomForm monomial(int nvars, const Exp& e, const Rational& c) {
        HomForm f;
        if (conecert::is_zero(c)) return f;
        check_nvars(nvars);
        for (int i = nvars; i < kMaxVars; ++i)
            if (e[static_cast<size_t>(i)] != 0) throw error("exponent beyond variable count");
        f.nvars_ = nvars;
        f.degree_ = exp_total(e);
        f.terms_.emplace(e, c);
        return f;
    }

    static HomForm from_terms(int nvars, const std::vector<std::pair<Exp, Rational>>& terms) {
        check_nvars(nvars);
        HomForm f;
        int deg = -1;
        for (const auto& [e, c] : terms) {
            if (conecert::is_zero(c)) continue;
            for (int i = nvars; i < kMaxVars; ++i)
                if (e[static_cast<size_t>(i)] != 0) throw error("exponent beyond variable count");
            int d = exp_total(e);
            if (deg < 0) deg = d;
            if (d != deg) throw error("non-homogeneous term set");
            auto [it, fresh] = f.terms_.emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (conecert::is_zero(it->second)) f.terms_.erase(it);
            }
        }
        if (f.terms_.empty()) return HomForm();
        f.nvars_ = nvars;
        f.degree_ = deg;
        return f;
    }

    static HomForm variable(int nvars, int v) {
        Exp e{};
        e[static_cast<size_t>(v)] = 1;
        return monomial(nvars, e, Rational(1));
    }

    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return nvars_; }
    int degree() const { return is_zero() ? -1 : degree_; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rational& leading_coeff() const {
        if (is_zero()) throw error("leading coefficient of zero form");
        return terms_.begin()->second;
    }

    const Exp& leading_exp() const {
        if (is_zero()) throw error("leading exponent of zero form");
        return terms_.begin()->first;
    }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(v)]));
        return d;
    }

    bool depends_on(int v) const { return degree_in(v) > 0; }

    bool operator==(const HomForm& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Canonical text (leading term first); also the hashing preimage.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << conecert::to_string(c) << ")";
            for (int i = 0; i < nvars_; ++i)
                if (e[static_cast<size_t>(i)] != 0) os << "*z" << (i + 1) << "^" << e[static_cast<size_t>(i)];
        }
        return os.str();
    }

    friend HomForm hf_add_impl(const HomForm& a, const HomForm& b, bool negate_b);

  private:
    static void check_nvars(int nvars) {
        if (nvars < 1 || nvars > kMaxVars) throw error("variable count out of range");
    }

    int nvars_ = 0;
    int degree_ = 0;
    TermMap terms_;
};

inline HomForm hf_add_impl(const HomForm& a, const HomForm& b, bool negate_b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) {
        if (!negate_b) return b;
        HomForm r = b;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    if (a.nvars() != b.nvars()) throw error("add: mixed variable counts");
    if (a.degree() != b.degree()) throw error("add: unequal degrees breaks homogeneity");
    HomForm r = a;
    for (const auto& [e, c] : b.terms()) {
        Rational v = negate_b ? -c : c;
        auto [it, fresh] = r.terms_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (is_zero(it->second)) r.terms_.erase(it);
        }
    }
    if (r.terms_.empty()) return HomForm();
    return r;
}

inline HomForm add(const HomForm& a, const HomForm& b) { return hf_add_impl(a, b, false); }
inline HomForm sub(const HomForm& a, const HomForm& b) { return hf_add_impl(a, b, true); }

inline HomForm mul(const HomForm& a, const HomForm& b) {
    if (a.is_zero() || b.is_zero()) return HomForm();
    if (a.nvars() != b.nvars()) throw error("mul: mixed variable counts");
    std::vector<std::pair<Exp, Rational>> acc;
    acc.reserve(a.term_count() * b.term_count());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exp e{};
            for (size_t i = 0; i < kMaxVars; ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            acc.emplace_back(e, ca * cb);
        }
    return HomForm::from_terms(a.nvars(), acc);
}

inline HomForm scale(const HomForm& a, const Rational& s) {
    if (a.is_zero() || is_zero(s)) return HomForm();
    std::vector<std::pair<Exp, Rational>> acc;
    for (const auto& [e, c] : a.terms()) acc.emplace_back(e, c * s);
    return HomForm::from_terms(a.nvars(), acc);
}

inline HomForm neg(const HomForm& a) { return scale(a, Rational(-1)); }

inline HomForm pow_form(const HomForm& a, unsigned k) {
    if (k == 0) {
        if (a.is_zero()) throw error("0^0 form");
        Exp e{};
        return HomForm::monomial(a.nvars(), e, Rational(1));
    }
    HomForm acc = a, r;
    bool have = false;
    while (k) {
        if (k & 1) {
            r = have ? mul(r, acc) : acc;
            have = true;
        }
        k >>= 1;
        if (k) acc = mul(acc, acc);
    }
    return r;
}

inline HomForm operator+(const HomForm& a, const HomForm& b) { return add(a, b); }
inline HomForm operator-(const HomForm& a, const HomForm& b) { return sub(a, b); }
inline HomForm operator*(const HomForm& a, const HomForm& b) { return mul(a, b); }
inline HomForm operator-(const HomForm& a) { return neg(a); }

// Exact value at an affine representative; scaling the point by s scales the
// value by s^deg.
inline Rational eval(const HomForm& f, std::span<const Rational> p) {
    if (f.is_zero()) return Rational(0);
    if (static_cast<int>(p.size()) != f.nvars()) throw error("eval: dimension mismatch");
    // power tables per coordinate
    std::vector<std::vector<Rational>> pw(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        int dmax = f.degree_in(static_cast<int>(i));
        pw[i].resize(static_cast<size_t>(dmax) + 1);
        pw[i][0] = 1;
        for (int d = 1; d <= dmax; ++d) pw[i][static_cast<size_t>(d)] = pw[i][static_cast<size_t>(d - 1)] * p[i];
    }
    Rational acc = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (size_t i = 0; i < p.size(); ++i)
            if (e[i] != 0) t *= pw[i][e[i]];
        acc += t;
    }
    return acc;
}

inline Rational eval(const HomForm& f, const std::vector<Rational>& p) {
    return eval(f, std::span<const Rational>(p.data(), p.size()));
}

// Formal partial derivative; homogeneous of degree d-1 (or zero).
inline HomForm diff(const HomForm& f, int var) {
    if (f.is_zero()) return HomForm();
    if (var < 0 || var >= f.nvars()) throw error("diff: variable index out of range");
    std::vector<std::pair<Exp, Rational>> acc;
    for (const auto& [e, c] : f.terms()) {
        std::uint16_t k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exp d = e;
        d[static_cast<size_t>(var)] = static_cast<std::uint16_t>(k - 1);
        acc.emplace_back(d, c * Rational(static_cast<long>(k)));
    }
    return HomForm::from_terms(f.nvars(), acc);
}

// f(images...): one homogeneous image of a common degree per variable of f,
// all in a fresh variable set.  Result is homogeneous of degree deg(f)*e.
inline HomForm substitute(const HomForm& f, const std::vector<HomForm>& images) {
    if (f.is_zero()) return HomForm();
    if (static_cast<int>(images.size()) != f.nvars())
        throw error("substitute: one image per variable required");
    int e = -1, out_nvars = -1;
    for (const auto& im : images) {
        if (im.is_zero()) continue;
        if (e < 0) {
            e = im.degree();
            out_nvars = im.nvars();
        }
        if (im.degree() != e) throw error("substitute: images of unequal degrees");
        if (im.nvars() != out_nvars) throw error("substitute: images in mixed variable sets");
    }
    if (e < 0) return HomForm();  // all images zero
    // power cache per image
    std::vector<std::vector<HomForm>> pw(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
        int dmax = 0;
        for (const auto& [ex, c] : f.terms()) dmax = std::max(dmax, static_cast<int>(ex[i]));
        pw[i].resize(static_cast<size_t>(dmax) + 1);
        for (int d = 1; d <= dmax; ++d)
            pw[i][static_cast<size_t>(d)] =
                d == 1 ? images[i] : mul(pw[i][static_cast<size_t>(d - 1)], images[i]);
    }
    HomForm acc;
    for (const auto& [ex, c] : f.terms()) {
        HomForm t;
        bool dead = false;
        bool started = false;
        for (size_t i = 0; i < images.size() && !dead; ++i) {
            if (ex[i] == 0) continue;
            const HomForm& piece = pw[i][ex[i]];
            if (piece.is_zero()) {
                dead = true;
                break;
            }
            t = started ? mul(t, piece) : piece;
            started = true;
        }
        if (dead) continue;
        if (!started) {
            // constant exponent vector cannot occur for positive-degree f;
            // for degree-0 monomial forms fall back to scalar embedding
            Exp z{};
            t = HomForm::monomial(out_nvars, z, Rational(1));
        }
        acc = add(acc, scale(t, c));
    }
    return acc;
}

// f = content * primitive with coprime integer coefficients and positive
// leading coefficient in canonical order.
inline std::pair<Rational, HomForm> content_primitive(const HomForm& f) {
    if (f.is_zero()) throw error("content of zero form");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(f.leading_coeff()) < 0) content = -content;
    return {content, scale(f, Rational(1) / content)};
}

// Multivariate exact division; throws if not divisible (such a failure inside
// an elimination is an implementation bug, not an input condition).
inline HomForm divexact(const HomForm& a, const HomForm& b) {
    if (b.is_zero()) throw error("exact division by zero form");
    if (a.is_zero()) return HomForm();
    if (a.nvars() != b.nvars()) throw error("divexact: mixed variable counts");
    HomForm r = a;
    std::vector<std::pair<Exp, Rational>> quo;
    const Exp& lb = b.leading_exp();
    while (!r.is_zero()) {
        const Exp& lr = r.leading_exp();
        Exp q{};
        for (size_t i = 0; i < kMaxVars; ++i) {
            if (lr[i] < lb[i]) throw error("inexact form division");
            q[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
        }
        Rational qc = r.leading_coeff() / b.leading_coeff();
        quo.emplace_back(q, qc);
        r = sub(r, mul(HomForm::monomial(a.nvars(), q, qc), b));
    }
    return HomForm::from_terms(a.nvars(), quo);
}

template <>
struct RingTraits<HomForm> {
    static HomForm zero() { return HomForm(); }
    static bool is_zero(const HomForm& a) { return a.is_zero(); }
    static HomForm divexact(const HomForm& a, const HomForm& b) { return conecert::divexact(a, b); }
    static HomForm mul_int(const HomForm& a, long k) { return scale(a, Rational(k)); }
};

// ---- variable plumbing ----------------------------------------------------

// View f as a polynomial in variable v whose coefficients are forms in the
// same ambient variables with the v-exponent zeroed.
inline Poly<HomForm> coeffs_in_var(const HomForm& f, int v) {
    if (f.is_zero()) return Poly<HomForm>();
    if (v < 0 || v >= f.nvars()) throw error("coeffs_in_var: variable index out of range");
    int d = f.degree_in(v);
    std::vector<std::vector<std::pair<Exp, Rational>>> buckets(static_cast<size_t>(d) + 1);
    for (const auto& [e, c] : f.terms()) {
        Exp r = e;
        int k = r[static_cast<size_t>(v)];
        r[static_cast<size_t>(v)] = 0;
        buckets[static_cast<size_t>(k)].emplace_back(r, c);
    }
    std::vector<HomForm> out(static_cast<size_t>(d) + 1);
    for (size_t k = 0; k < buckets.size(); ++k)
        out[k] = HomForm::from_terms(f.nvars(), buckets[k]);
    return Poly<HomForm>(std::move(out));
}

inline HomForm from_coeffs_in_var(const Poly<HomForm>& p, int nvars, int v) {
    std::vector<std::pair<Exp, Rational>> acc;
    for (int k = 0; k <= p.degree(); ++k) {
        const HomForm& c = p.coeff(k);
        if (c.is_zero()) continue;
        for (const auto& [e, q] : c.terms()) {
            Exp r = e;
            r[static_cast<size_t>(v)] = static_cast<std::uint16_t>(r[static_cast<size_t>(v)] + k);
            acc.emplace_back(r, q);
        }
    }
    return HomForm::from_terms(nvars, acc);
}

// Drop a variable the form does not use (decrement the ambient count).
inline HomForm contract_var(const HomForm& f, int v) {
    if (f.is_zero()) return f;
    if (f.depends_on(v)) throw error("contract_var: form depends on the variable");
    std::vector<std::pair<Exp, Rational>> acc;
    for (const auto& [e, c] : f.terms()) {
        Exp r{};
        size_t j = 0;
        for (int i = 0; i < f.nvars(); ++i) {
            if (i == v) continue;
            r[j++] = e[static_cast<size_t>(i)];
        }
        acc.emplace_back(r, c);
    }
    return HomForm::from_terms(f.nvars() - 1, acc);
}

// Insert a fresh unused variable slot at position v (increment the count).
inline HomForm insert_var(const HomForm& f, int v) {
    if (f.is_zero()) return f;
    if (f.nvars() + 1 > kMaxVars) throw error("insert_var: too many variables");
    std::vector<std::pair<Exp, Rational>> acc;
    for (const auto& [e, c] : f.terms()) {
        Exp r{};
        size_t j = 0;
        for (int i = 0; i <= f.nvars(); ++i) {
            if (i == v) continue;
            r[static_cast<size_t>(i)] = e[j++];
        }
        acc.emplace_back(r, c);
    }
    return HomForm::from_terms(f.nvars() + 1, acc);
}

// Binary forms (nvars == 2) <-> dense univariate by z2 -> 1.  Re-homogenizing
// to the original degree recovers the form only when z2 does not divide it.
inline QPoly dehomogenize(const HomForm& f) {
    if (f.is_zero()) return QPoly();
    if (f.nvars() != 2) throw error("dehomogenize: binary form required");
    std::vector<Rational> c(static_cast<size_t>(f.degree()) + 1, Rational(0));
    for (const auto& [e, q] : f.terms()) c[e[0]] = q;
    return QPoly(std::move(c));
}

inline HomForm homogenize_binary(const QPoly& p, int degree) {
    if (p.is_zero()) return HomForm();
    if (p.degree() > degree) throw error("homogenize_binary: degree too small");
    std::vector<std::pair<Exp, Rational>> acc;
    for (int i = 0; i <= p.degree(); ++i) {
        if (conecert::is_zero(p.coeff(i))) continue;
        Exp e{};
        e[0] = static_cast<std::uint16_t>(i);
        e[1] = static_cast<std::uint16_t>(degree - i);
        acc.emplace_back(e, p.coeff(i));
    }
    return HomForm::from_terms(2, acc);
}

// ---- projective points ------------------------------------------------------

// Exact projective point; normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
  public:
    explicit ProjectivePoint(std::vector<Rational> coords) : c_(std::move(coords)) {
        size_t first = c_.size();
        for (size_t i = 0; i < c_.size(); ++i)
            if (!conecert::is_zero(c_[i])) {
                first = i;
                break;
            }
        if (first == c_.size()) throw error("projective point with all coordinates zero");
        Rational s = c_[first];
        for (auto& x : c_) x /= s;
    }

    size_t dim() const { return c_.size(); }
    const std::vector<Rational>& coords() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;
};

inline Rational eval(const HomForm& f, const ProjectivePoint& p) { return eval(f, p.coords()); }

}  // namespace conecert

#endif
