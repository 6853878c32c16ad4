#ifndef CONECERT_RNG_HPP
#define CONECERT_RNG_HPP

#include <cstdint>
#include <vector>

#include "conecert/homform.hpp"

namespace conecert {

// SplitMix64; fixed algorithm so streams are reproducible across platforms
// and standard-library versions (std distributions are not pinned by the
// standard, so we never use them).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;  // largest multiple of n, minus 1
        std::uint64_t v;
        do {
            v = next();
        } while (v > limit);
        return v % n;
    }

    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// Deterministic substream derivation: results depend only on (seed, tag,
// index), never on scheduling order.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0xa0761d6478bd642full * (tag + 1)));
    std::uint64_t s = mixer.next() ^ (0xe7037ed1a0b428dbull * (index + 1));
    SplitMix64 mixer2(s);
    return SplitMix64(mixer2.next());
}

// Every monomial of the given degree draws an independent uniform integer in
// [-B, B]; monomials are visited in canonical order so one stream yields one
// form regardless of context.
inline HomForm random_form(int nvars, int degree, long coeff_bound, SplitMix64& stream) {
    if (coeff_bound < 1) throw error("random_form: coefficient bound must be >= 1");
    std::vector<std::pair<Exp, Rational>> acc;
    // enumerate exponent vectors of total `degree` in canonical (descending
    // graded-lex) order
    std::vector<Exp> exps;
    Exp cur{};
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(rem);
            exps.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(k);
            self(self, var + 1, rem - k);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    for (const Exp& e : exps) {
        long c = stream.uniform_int(-coeff_bound, coeff_bound);
        if (c != 0) acc.emplace_back(e, Rational(c));
    }
    return HomForm::from_terms(nvars, acc);
}

// Same draw with one chosen slot redrawn until nonzero (vertex-style
// constraints on generated forms).
inline HomForm random_form_forced(int nvars, int degree, long coeff_bound, SplitMix64& stream,
                                  const Exp& forced_slot) {
    HomForm f = random_form(nvars, degree, coeff_bound, stream);
    if (!is_zero(f.coeff(forced_slot))) return f;
    long c = 0;
    while (c == 0) c = stream.uniform_int(-coeff_bound, coeff_bound);
    return add(f, HomForm::monomial(nvars, forced_slot, Rational(c)));
}

inline int monomial_count(int nvars, int degree) {
    // C(degree + nvars - 1, nvars - 1)
    long long num = 1, den = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= degree + i;
        den *= i;
    }
    return static_cast<int>(num / den);
}

}  // namespace conecert

#endif
