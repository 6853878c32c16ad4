#ifndef CONECERT_RATIONAL_HPP
#define CONECERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace conecert {

using Int = mpz_class;

// Exact rational coefficient type.  mpq_class keeps values canonical:
// lowest terms, positive denominator.
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    int line = 0;
    parse_error(const std::string& msg, int line_)
        : error("parse error (line " + std::to_string(line_) + "): " + msg), line(line_) {}
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // already canonical: powers of coprime pairs stay coprime
}

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw error("bad character in rational literal '" + s + "'");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw error("unparsable rational literal '" + s + "'");
    if (q.get_den() == 0) throw error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Rounded conversion carrying the full long double mantissa; exponent applied
// last so values far outside double range survive intermediate scaling.
// `bias` shifts the result by 2^bias (used to normalize whole coefficient
// vectors by their largest entry).
inline long double to_long_double(const Rational& q, long bias = 0) {
    int s = sgn(q);
    if (s == 0) return 0.0L;
    mpz_class a = abs(q.get_num());
    mpz_class b = q.get_den();
    long ea = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    long eb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    long shift = 96 - (ea - eb);
    if (shift >= 0)
        mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_class t = a / b;
    long double v = 0.0L;
    const long double limb_base = std::ldexp(1.0L, mp_bits_per_limb);
    for (size_t i = mpz_size(t.get_mpz_t()); i-- > 0;)
        v = v * limb_base + static_cast<long double>(mpz_getlimbn(t.get_mpz_t(), i));
    long e = -shift + bias;
    if (e > 1000000) e = 1000000;
    if (e < -1000000) e = -1000000;
    v = std::ldexp(v, static_cast<int>(e));
    return s < 0 ? -v : v;
}

// Approximate base-2 exponent of |q| (within 1), used for scaling decisions.
inline long exponent2(const Rational& q) {
    if (sgn(q) == 0) return 0;
    long ea = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
    long eb = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    return ea - eb;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace conecert

#endif
