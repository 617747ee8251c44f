#include "salem/selberg.hpp"

#include <cmath>

namespace salem {

namespace {

/// Exact value r * pi^{e/2}: products of Gamma at positive integer and
/// half-integer arguments live in this set.
struct HalfGamma {
    Rat r{1};
    long e = 0;

    void mul(const HalfGamma& o) {
        r *= o.r;
        e += o.e;
    }
    void div(const HalfGamma& o) {
        r /= o.r;
        e -= o.e;
    }
};

/// Gamma(x) for x = k or k + 1/2 with x > 0:
/// Gamma(k) = (k-1)!, Gamma(k + 1/2) = (2k)!/(4^k k!) sqrt(pi).
HalfGamma gamma_exact(const Rat& x) {
    if (sign_of(x) <= 0) fail(errc::DomainError, "gamma argument must be positive");
    Rat two_x = x * 2;
    if (two_x.get_den() != 1)
        fail(errc::DomainError, "exact gamma needs an integer or half-integer argument");
    Int t = two_x.get_num(); // 2x
    HalfGamma out;
    if (t % 2 == 0) {
        unsigned long k = Int(t / 2).get_ui();
        out.r = Rat(factorial(k - 1));
        out.e = 0;
    } else {
        unsigned long k = Int((t - 1) / 2).get_ui(); // x = k + 1/2
        out.r = make_rat(factorial(2 * k), pow_int(Int(4), k) * factorial(k));
        out.e = 1;
    }
    return out;
}

} // namespace

double selberg_closed(int n, double alpha, double beta, double gamma) {
    if (n < 1) fail(errc::DomainError, "selberg needs n >= 1");
    if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma >= 0.0))
        fail(errc::DomainError, "selberg requires alpha, beta > 0 and gamma >= 0");
    double log_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        log_sum += std::lgamma(alpha + j * gamma);
        log_sum += std::lgamma(beta + j * gamma);
        log_sum += std::lgamma(1.0 + (j + 1) * gamma);
        log_sum -= std::lgamma(alpha + beta + (n + j - 1) * gamma);
        log_sum -= std::lgamma(1.0 + gamma);
    }
    return std::exp(log_sum);
}

Rat selberg_exact(int n, const Rat& alpha, const Rat& beta, const Rat& gamma) {
    if (n < 1) fail(errc::DomainError, "selberg needs n >= 1");
    if (alpha.get_den() != 1 || beta.get_den() != 1 || sign_of(alpha) <= 0 || sign_of(beta) <= 0)
        fail(errc::DomainError, "exact selberg needs positive integer alpha, beta");
    Rat two_gamma = gamma * 2;
    if (two_gamma.get_den() != 1 || sign_of(gamma) < 0)
        fail(errc::DomainError, "exact selberg needs gamma a nonnegative integer or half-integer");
    HalfGamma acc;
    for (int j = 0; j < n; ++j) {
        acc.mul(gamma_exact(alpha + gamma * j));
        acc.mul(gamma_exact(beta + gamma * j));
        acc.mul(gamma_exact(gamma * (j + 1) + 1));
        acc.div(gamma_exact(alpha + beta + gamma * (n + j - 1)));
        acc.div(gamma_exact(gamma + 1));
    }
    if (acc.e != 0)
        fail(errc::DomainError, "exact selberg value is irrational for these parameters");
    return acc.r;
}

Rat omega_leading(int m) {
    if (m < 1) fail(errc::DomainError, "omega needs m >= 1");
    Rat out = make_rat(pow_int(Int(2), static_cast<unsigned long>(m) * (m + 1)), Int(m + 1));
    for (int k = 0; k < m; ++k) {
        Int f = factorial(static_cast<unsigned long>(k));
        out *= make_rat(f * f, factorial(static_cast<unsigned long>(2 * k + 1)));
    }
    return out;
}

Rat ensemble_normalization(int N) {
    if (N < 1) fail(errc::DomainError, "normalization needs N >= 1");
    Rat scale(pow_int(Int(2), static_cast<unsigned long>(N) * (N + 1) / 2));
    return scale * selberg_exact(N, Rat(1), Rat(1), Rat(1, 2));
}

} // namespace salem
