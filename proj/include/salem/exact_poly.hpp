#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "salem/errors.hpp"
#include "salem/rational.hpp"

namespace salem {

/// Dense univariate polynomial with exact coefficients, stored ascending
/// (c[k] multiplies t^k). The zero polynomial is the empty vector; every
/// operation strips trailing zero coefficients.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly identity() { return Poly(std::vector<T>{T(0), T(1)}); }

    /// Build from highest-degree-first coefficients (how papers print them).
    static Poly from_descending(std::vector<T> coeffs) {
        std::reverse(coeffs.begin(), coeffs.end());
        return Poly(std::move(coeffs));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }

    const T& leading() const {
        if (c.empty()) fail(errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return c.back();
    }

    bool is_monic() const { return !c.empty() && c.back() == 1; }

    /// True iff coefficients read the same in both directions (a_j = a_{n-j}).
    bool is_self_reciprocal() const {
        if (c.empty()) return false;
        std::size_t n = c.size();
        for (std::size_t j = 0; j < n / 2; ++j)
            if (c[j] != c[n - 1 - j]) return false;
        return true;
    }

    T operator()(const T& x) const {
        T acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + to_double(c[i]);
        return acc;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly{};
        std::vector<T> d(c.size() - 1);
        for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<long>(k);
        return Poly(std::move(d));
    }

    /// Antiderivative with zero constant term. Only meaningful over a field.
    Poly antiderivative() const {
        if (c.empty()) return Poly{};
        std::vector<T> a(c.size() + 1, T(0));
        for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<long>(k + 1);
        return Poly(std::move(a));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        Poly r = a;
        for (auto& v : r.c) v *= s;
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    /// Multiply by t^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly{};
        std::vector<T> r(c.size() + k, T(0));
        std::copy(c.begin(), c.end(), r.begin() + static_cast<long>(k));
        return Poly(std::move(r));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            T a = c[i];
            bool neg = a < 0;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (neg) a = -a;
            bool unit = (a == 1);
            if (i == 0) {
                out += coeff_str(a);
            } else {
                if (!unit) out += coeff_str(a) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    static std::string coeff_str(const Int& v) { return v.get_str(); }
    static std::string coeff_str(const Rat& v) { return rat_to_string(v); }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = Rat(p.c[i]);
    return RatPoly(std::move(c));
}

/// Interval with rational endpoints and per-endpoint openness flags, used
/// for exact root counting. Invariant: lo <= hi.
struct RootInterval {
    Rat lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    static RootInterval closed(const Rat& a, const Rat& b) { return {a, b, false, false}; }
    static RootInterval open_closed(const Rat& a, const Rat& b) { return {a, b, true, false}; }
    static RootInterval open(const Rat& a, const Rat& b) { return {a, b, true, true}; }
};

/// Quotient and remainder of a/b over the rationals (b nonzero).
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

/// Monic gcd over the rationals (zero if both inputs are zero).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// f / gcd(f, f'), normalized monic. Same distinct roots as f, all simple.
RatPoly squarefree_part(const RatPoly& f);

/// Integer-coefficient squarefree part: primitive, positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// Number of distinct real roots of f in the interval (multiplicity ignored).
long sturm_root_count(const RatPoly& f, const RootInterval& iv);
long sturm_root_count(const IntPoly& f, const RootInterval& iv);

/// Number of real roots counted with multiplicity.
long root_count_with_multiplicity(const RatPoly& f, const RootInterval& iv);
long root_count_with_multiplicity(const IntPoly& f, const RootInterval& iv);

/// For monic self-reciprocal P of even degree 2n, the unique monic Q of degree
/// n with P(t) = t^n Q(t + 1/t).
IntPoly trace_transform(const IntPoly& P);

/// Inverse of trace_transform: P(t) = t^n Q(t + 1/t) for monic Q of degree n.
IntPoly inverse_trace_transform(const IntPoly& Q);

/// The d-th cyclotomic polynomial (d >= 1), by Moebius product and exact division.
IntPoly cyclotomic_poly(long d);

/// True iff P = D * R for some integer polynomial R.
bool exact_divides(const IntPoly& D, const IntPoly& P);

} // namespace salem
