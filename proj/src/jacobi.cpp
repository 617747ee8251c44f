#include "salem/jacobi.hpp"

namespace salem {

JacobiPoly jacobi_poly(int n, int a, int b) {
    if (a < 0 || b < 0) fail(errc::UnsupportedParams, "jacobi parameters must be nonnegative");
    if (n < 0) fail(errc::DomainError, "jacobi degree must be nonnegative");
    auto ul = [](int v) { return static_cast<unsigned long>(v); };
    // Prefactor (a+n)! / (n! (a+b+n)!) and per-term (a+b+n+j)!/(a+j)!.
    Rat pref = make_rat(factorial(ul(a + n)), factorial(ul(n)) * factorial(ul(a + b + n)));
    RatPoly half(std::vector<Rat>{Rat(-1, 2), Rat(1, 2)}); // (t-1)/2
    RatPoly acc;
    RatPoly power = RatPoly::constant(Rat(1));
    for (int j = 0; j <= n; ++j) {
        Rat term = make_rat(binomial(ul(n), ul(j)) * factorial(ul(a + b + n + j)), factorial(ul(a + j)));
        acc = acc + power * term;
        power = power * half;
    }
    JacobiPoly out;
    out.n = n;
    out.a = a;
    out.b = b;
    out.poly = acc * pref;
    return out;
}

Rat jacobi_norm(int n, int a, int b) {
    if (a < 0 || b < 0) fail(errc::UnsupportedParams, "jacobi parameters must be nonnegative");
    if (n < 0) fail(errc::DomainError, "jacobi degree must be nonnegative");
    auto ul = [](int v) { return static_cast<unsigned long>(v); };
    Rat out = make_rat(pow_int(Int(2), ul(a + b + 1)), Int(2 * n + a + b + 1));
    out *= make_rat(factorial(ul(n + a)) * factorial(ul(n + b)),
                    factorial(ul(n)) * factorial(ul(n + a + b)));
    return out;
}

Rat integrate_unit(const RatPoly& f) {
    if (f.is_zero()) return Rat(0);
    RatPoly F = f.antiderivative();
    return F(Rat(1)) - F(Rat(-1));
}

} // namespace salem
