#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "salem/errors.hpp"

namespace salem {

using Int = mpz_class;
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

/// Parse an exact rational from "p", "p/q", or a finite decimal like "2.5"
/// (converted exactly, 2.5 -> 5/2). Throws DomainError on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(errc::DomainError, "empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            fail(errc::DomainError, "rational literal mixes '.' and '/': " + s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            fail(errc::DomainError, "malformed decimal literal: " + s);
        Int num;
        if (num.set_str(digits, 10) != 0)
            fail(errc::DomainError, "malformed decimal literal: " + s);
        Int den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    Rat q;
    if (q.set_str(s, 10) != 0) fail(errc::DomainError, "malformed rational literal: " + s);
    if (q.get_den() == 0) fail(errc::DomainError, "zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Canonical display form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Reduced fraction num/den. The raw two-argument mpq constructor does not
/// canonicalize, which breaks exact comparison; always build ratios here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::ZeroDivisor, "rational with zero denominator");
    Rat v(num, den);
    v.canonicalize();
    return v;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (e < 0) {
        if (r == 0) fail(errc::DomainError, "0 raised to a negative power");
        r = 1 / r;
    }
    return r;
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

/// Euler's totient, by trial-division factorization (arguments stay tiny).
inline long euler_phi(long d) {
    if (d <= 0) fail(errc::DomainError, "euler_phi requires d >= 1");
    long result = d, n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace salem
