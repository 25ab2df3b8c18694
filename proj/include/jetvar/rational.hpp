#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jetvar {

// Exact rational coefficients. All engine arithmetic is over Q; equality of
// any two engine values is structural equality of canonical forms, so the
// coefficient type must never round.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// q^e for e >= 0.
inline Rational rational_pow(const Rational& q, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Rational acc(1), base = q;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// C(n, k) as an exact integer value.
inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace jetvar
