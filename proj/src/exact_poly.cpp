#include "salem/exact_poly.hpp"

#include <utility>

namespace salem {

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) fail(errc::ZeroDivisor, "polynomial division by zero");
    RatPoly q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat& lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long k = r.degree() - b.degree();
        Rat f = r.leading() / lead;
        q.c[static_cast<std::size_t>(k)] = f;
        // r -= f * t^k * b
        for (long i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    Rat inv = 1 / f.leading();
    return f * inv;
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) fail(errc::ZeroPolynomial, "squarefree part of zero polynomial");
    if (f.degree() == 0) return RatPoly::constant(Rat(1));
    RatPoly g = poly_gcd(f, f.derivative());
    RatPoly q = divrem(f, g).first;
    Rat inv = 1 / q.leading();
    return q * inv;
}

IntPoly squarefree_part(const IntPoly& f) {
    RatPoly s = squarefree_part(to_rat(f));
    // Clear denominators and make the content 1 with positive leading coefficient.
    Int den(1);
    for (const auto& q : s.c) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> c(s.c.size());
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        Rat v = s.c[i] * Rat(den);
        c[i] = v.get_num();
    }
    Int content(0);
    for (const auto& v : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content != 0)
        for (auto& v : c) v /= content;
    IntPoly out(std::move(c));
    if (!out.is_zero() && out.leading() < 0)
        for (auto& v : out.c) v = -v;
    return out;
}

namespace {

/// Sturm chain of a squarefree polynomial: f, f', then negated remainders.
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    RatPoly d = f.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.back().degree() > 0) {
        RatPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

/// Sign variations of the chain at x, skipping exact zeros. With zeros
/// skipped this equals the variation count at x + epsilon, so
/// V(a) - V(b) counts distinct roots in the half-open interval (a, b].
long variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

long sturm_root_count(const RatPoly& f, const RootInterval& iv) {
    if (f.is_zero()) fail(errc::ZeroPolynomial, "root count of zero polynomial");
    if (iv.lo > iv.hi) fail(errc::DomainError, "interval has lo > hi");
    if (f.degree() == 0) return 0;
    RatPoly s = squarefree_part(f);
    if (s.degree() == 0) return 0;
    if (iv.lo == iv.hi) {
        if (!iv.lo_open && !iv.hi_open && s(iv.lo) == 0) return 1;
        return 0;
    }
    std::vector<RatPoly> chain = sturm_chain(s);
    long count = variations_at(chain, iv.lo) - variations_at(chain, iv.hi);
    if (!iv.lo_open && s(iv.lo) == 0) ++count;
    if (iv.hi_open && s(iv.hi) == 0) --count;
    return count;
}

long sturm_root_count(const IntPoly& f, const RootInterval& iv) {
    return sturm_root_count(to_rat(f), iv);
}

long root_count_with_multiplicity(const RatPoly& f, const RootInterval& iv) {
    if (f.is_zero()) fail(errc::ZeroPolynomial, "root count of zero polynomial");
    // A root of multiplicity k survives the first k-1 gcd-with-derivative
    // steps, so summing distinct counts down the chain weights it k times.
    long total = 0;
    RatPoly g = f;
    while (g.degree() > 0) {
        total += sturm_root_count(g, iv);
        g = poly_gcd(g, g.derivative());
    }
    return total;
}

long root_count_with_multiplicity(const IntPoly& f, const RootInterval& iv) {
    return root_count_with_multiplicity(to_rat(f), iv);
}

IntPoly trace_transform(const IntPoly& P) {
    if (P.is_zero()) fail(errc::ZeroPolynomial, "trace transform of zero polynomial");
    if (!P.is_monic()) fail(errc::NotMonic, "trace transform requires a monic polynomial");
    long deg = P.degree();
    if (deg % 2 != 0 || deg == 0) fail(errc::OddDegree, "trace transform requires even degree >= 2");
    if (!P.is_self_reciprocal())
        fail(errc::NotSelfReciprocal, "trace transform requires a self-reciprocal polynomial");
    long n = deg / 2;
    // Write P/t^n = a_n + sum_{k>=1} a_{n+k} (t^k + t^{-k}) and use the
    // Chebyshev-like basis p_k(z) = t^k + t^{-k}: p_0 = 2, p_1 = z,
    // p_k = z p_{k-1} - p_{k-2}.
    std::vector<IntPoly> p(static_cast<std::size_t>(n) + 1);
    p[0] = IntPoly::constant(Int(2));
    if (n >= 1) p[1] = IntPoly::identity();
    for (long k = 2; k <= n; ++k)
        p[static_cast<std::size_t>(k)] =
            IntPoly::identity() * p[static_cast<std::size_t>(k - 1)] - p[static_cast<std::size_t>(k - 2)];
    IntPoly Q = IntPoly::constant(P.c[static_cast<std::size_t>(n)]);
    for (long k = 1; k <= n; ++k)
        Q = Q + p[static_cast<std::size_t>(k)] * P.c[static_cast<std::size_t>(n + k)];
    return Q;
}

IntPoly inverse_trace_transform(const IntPoly& Q) {
    if (Q.is_zero()) fail(errc::ZeroPolynomial, "inverse trace transform of zero polynomial");
    if (!Q.is_monic()) fail(errc::NotMonic, "inverse trace transform requires a monic polynomial");
    long n = Q.degree();
    // P(t) = t^n Q(t + 1/t) = sum_k q_k t^{n-k} (t^2 + 1)^k.
    std::vector<Int> acc(static_cast<std::size_t>(2 * n) + 1, Int(0));
    for (long k = 0; k <= n; ++k) {
        const Int& qk = Q.c[static_cast<std::size_t>(k)];
        if (qk == 0) continue;
        for (long j = 0; j <= k; ++j) {
            // t^{n-k} * C(k,j) t^{2j} contributes at exponent n - k + 2j.
            acc[static_cast<std::size_t>(n - k + 2 * j)] +=
                qk * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
        }
    }
    return IntPoly(std::move(acc));
}

namespace {

int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

/// Exact division by a monic integer polynomial (remainder must vanish).
IntPoly div_exact_monic(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a, q;
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long k = r.degree() - b.degree();
        Int f = r.leading();
        q.c[static_cast<std::size_t>(k)] = f;
        for (long i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
        r.normalize();
    }
    if (!r.is_zero()) fail(errc::DomainError, "inexact division in cyclotomic construction");
    q.normalize();
    return q;
}

} // namespace

IntPoly cyclotomic_poly(long d) {
    if (d <= 0) fail(errc::DomainError, "cyclotomic index must be >= 1");
    // Phi_d(t) = prod_{e | d} (t^{d/e} - 1)^{mu(e)}.
    IntPoly num = IntPoly::constant(Int(1));
    std::vector<long> negative;
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = moebius(e);
        if (mu == 0) continue;
        long k = d / e;
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c[0] = -1;
        c[static_cast<std::size_t>(k)] = 1;
        if (mu == 1)
            num = num * IntPoly(std::move(c));
        else
            negative.push_back(k);
    }
    for (long k : negative) {
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c[0] = -1;
        c[static_cast<std::size_t>(k)] = 1;
        num = div_exact_monic(num, IntPoly(std::move(c)));
    }
    return num;
}

bool exact_divides(const IntPoly& D, const IntPoly& P) {
    if (D.is_zero()) fail(errc::ZeroDivisor, "divisibility test by zero polynomial");
    if (P.is_zero()) return true;
    if (P.degree() < D.degree()) return false;
    auto [q, r] = divrem(to_rat(P), to_rat(D));
    if (!r.is_zero()) return false;
    for (const auto& v : q.c)
        if (v.get_den() != 1) return false;
    return true;
}

} // namespace salem
