// Jacobi polynomials, the skew-orthogonal system, the Pfaffian, and the
// correlation kernel. Every frozen value is derived in-file from an
// independent oracle: the three-term recurrence, hand-integrated monomial
// skew products, cofactor-expansion Pfaffians, and LU determinants.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "salem/errors.hpp"
#include "salem/jacobi.hpp"
#include "salem/kernel.hpp"
#include "salem/selberg.hpp"

using namespace salem;

namespace {

/// Canonicalized rational (mpq_class(p, q) alone is not normalized).
Rat rat(long p, long q) {
    Rat v(p, q);
    v.canonicalize();
    return v;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Independent Jacobi oracle: the classical three-term recurrence with exact
/// rational coefficients.
RatPoly jacobi_recurrence(int n, int a, int b) {
    RatPoly p0 = RatPoly::constant(Rat(1));
    if (n == 0) return p0;
    RatPoly p1({rat(a - b, 2), rat(a + b + 2, 2)});
    for (int i = 2; i <= n; ++i) {
        // 2i(i+a+b)(2i+a+b-2) P_i =
        //   (2i+a+b-1)[(2i+a+b)(2i+a+b-2) t + a^2-b^2] P_{i-1}
        //   - 2(i+a-1)(i+b-1)(2i+a+b) P_{i-2}
        long s = 2L * i + a + b;
        Rat c0(2L * i * (i + a + b) * (s - 2));
        RatPoly t_term({Rat(static_cast<long>(a) * a - static_cast<long>(b) * b),
                        Rat(s * (s - 2))});
        RatPoly next = (t_term * p1) * Rat(s - 1) - p0 * Rat(2L * (i + a - 1) * (i + b - 1) * s);
        next = next * (Rat(1) / c0);
        p0 = p1;
        p1 = next;
    }
    return p1;
}

/// Exact weighted integral  int_{-1}^{1} (1-t)^a (1+t)^b f(t) dt.
Rat weighted_unit_integral(const RatPoly& f, int a, int b) {
    RatPoly w = RatPoly::constant(Rat(1));
    for (int i = 0; i < a; ++i) w = w * RatPoly({Rat(1), Rat(-1)});
    for (int i = 0; i < b; ++i) w = w * RatPoly({Rat(1), Rat(1)});
    return integrate_unit(w * f);
}

/// Cofactor-expansion Pfaffian over the active index set (definition).
double pfaffian_definition(const std::vector<std::vector<double>>& a, std::vector<int> idx) {
    if (idx.empty()) return 1.0;
    int i0 = idx[0];
    double acc = 0.0;
    double sgn = 1.0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != j) rest.push_back(idx[t]);
        acc += sgn * a[static_cast<std::size_t>(i0)][static_cast<std::size_t>(idx[j])] *
               pfaffian_definition(a, rest);
        sgn = -sgn;
    }
    return acc;
}

/// Plain LU |determinant| with partial pivoting (independent of the library).
double lu_det(std::vector<std::vector<double>> a) {
    std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    return det;
}

std::vector<std::vector<double>> random_skew(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            a[i][j] = u(rng);
            a[j][i] = -a[i][j];
        }
    return a;
}

SkewMatrix to_skew(const std::vector<std::vector<double>>& a) {
    SkewMatrix A(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) A.upper(i, j) = a[i][j];
    return A;
}

/// Diagonal S_N(x,x) as an exact univariate polynomial.
RatPoly kernel_diag(const BivarPoly& S) {
    RatPoly out;
    for (std::size_t i = 0; i < S.cx.size(); ++i) out = out + S.cx[i].shifted(static_cast<long>(i));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Jacobi polynomials
// ---------------------------------------------------------------------------

TEST_CASE("jacobi_poly matches the three-term recurrence exactly") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int n = 0; n <= 10; ++n) CHECK(jacobi_poly(n, a, b).poly == jacobi_recurrence(n, a, b));
}

TEST_CASE("integrate_unit on monomials") {
    for (long k = 0; k <= 12; ++k) {
        RatPoly mono = RatPoly::constant(Rat(1)).shifted(static_cast<std::size_t>(k));
        Rat expect = (k % 2 == 0) ? Rat(2, k + 1) : Rat(0);
        expect.canonicalize();
        CHECK(integrate_unit(mono) == expect);
    }
}

TEST_CASE("jacobi value at t = 1 is C(n+a, n)") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(jacobi_poly(n, 0, 0).poly(Rat(1)) == Rat(1));
        CHECK(jacobi_poly(n, 1, 1).poly(Rat(1)) == Rat(n + 1));
        CHECK(jacobi_poly(n, 2, 1).poly(Rat(1)) == rat((n + 1L) * (n + 2), 2));
    }
}

TEST_CASE("jacobi orthogonality and norms, exact, degrees <= 8") {
    for (auto [a, b] : {std::pair<int, int>{0, 0}, std::pair<int, int>{1, 1}}) {
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= i; ++j) {
                Rat val = weighted_unit_integral(jacobi_poly(i, a, b).poly * jacobi_poly(j, a, b).poly,
                                                 a, b);
                if (i == j)
                    CHECK(val == jacobi_norm(i, a, b));
                else
                    CHECK(val == Rat(0));
            }
    }
}

// ---------------------------------------------------------------------------
// Skew product and skew-orthogonal system
// ---------------------------------------------------------------------------

TEST_CASE("skew product reproduces hand-computed monomial values") {
    RatPoly one = RatPoly::constant(Rat(1));
    RatPoly x({Rat(0), Rat(1)});
    RatPoly x2 = x * x, x3 = x2 * x;
    // <1,x> = (1/2) int int sign(y-x) y = 2/3, and the rest by direct
    // iterated integration by hand.
    CHECK(skew_product(one, x) == Rat(2, 3));
    CHECK(skew_product(x, one) == Rat(-2, 3));
    CHECK(skew_product(one, one) == Rat(0));
    CHECK(skew_product(x, x2) == Rat(-2, 15));
    CHECK(skew_product(one, x3) == Rat(2, 5));
    CHECK(skew_product(x2, x3) == Rat(2, 21));
    CHECK(skew_product(x, x) == Rat(0));
}

TEST_CASE("skew product is antisymmetric and bilinear on random polynomials") {
    std::mt19937_64 rng(0xB001);
    std::uniform_int_distribution<long> cf(-6, 6), deg(0, 5);
    for (int iter = 0; iter < 100; ++iter) {
        auto rand_poly = [&] {
            std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = cf(rng);
            return RatPoly(std::move(c));
        };
        RatPoly f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK(skew_product(f, g) == -skew_product(g, f));
        CHECK(skew_product(f + h, g) == skew_product(f, g) + skew_product(h, g));
    }
}

TEST_CASE("skew-orthogonality of the basis, exact, N <= 10, both parities") {
    for (int N = 1; N <= 10; ++N) {
        SkewSystem sys = skew_system(N);
        std::vector<RatPoly> R = skew_basis_polys(N);
        REQUIRE(static_cast<int>(R.size()) == N);
        std::size_t pairs = sys.r.size();
        for (std::size_t i = 0; i < pairs; ++i)
            for (std::size_t j = 0; j < pairs; ++j) {
                Rat val = skew_product(R[2 * j], R[2 * i + 1]);
                CHECK(val == (i == j ? sys.r[j] : Rat(0)));
            }
        // vanishing same-parity products, including any unpaired tail member
        for (std::size_t i = 0; i < R.size(); ++i)
            for (std::size_t j = 0; j < R.size(); ++j) {
                if (i % 2 == 0 && j % 2 == 0) CHECK(skew_product(R[i], R[j]) == Rat(0));
                if (i % 2 == 1 && j % 2 == 1) CHECK(skew_product(R[i], R[j]) == Rat(0));
            }
        for (const Rat& r : sys.r) CHECK(r > 0);
    }
}

// ---------------------------------------------------------------------------
// Kernel blocks
// ---------------------------------------------------------------------------

TEST_CASE("hand-frozen kernel blocks for N = 1 and N = 2") {
    auto k1 = kernel_for(1);
    // S_1 = 1/2, D_1 = 0, I_1smooth = 0 (single eigenvalue, flat density)
    CHECK(k1->S == BivarPoly::product(RatPoly::constant(Rat(1, 2)), RatPoly::constant(Rat(1))));
    CHECK(k1->D.is_zero());
    CHECK(k1->I_smooth.is_zero());

    auto k2 = kernel_for(2);
    // S_2(x,y) = (3/4)(2xy - y^2 + 1)
    RatPoly one = RatPoly::constant(Rat(1));
    RatPoly y({Rat(0), Rat(1)});
    BivarPoly S2 = BivarPoly::product(one, (one - y * y) * Rat(3, 4)) +
                   BivarPoly::product(RatPoly({Rat(0), Rat(3, 2)}), y);
    CHECK(k2->S == S2);
    // D_2(x,y) = (3/2)(y - x)
    BivarPoly D2 = BivarPoly::product(one, y * Rat(3, 2)) -
                   BivarPoly::product(RatPoly({Rat(0), Rat(3, 2)}), one);
    CHECK(k2->D == D2);
    // I_2smooth(x,y) = (3/4)(x - y)(xy + 1) = (3/4)(x^2 y + x - x y^2 - y)
    BivarPoly I2 = BivarPoly::product(RatPoly({Rat(0), Rat(0), Rat(3, 4)}), y) +
                   BivarPoly::product(RatPoly({Rat(0), Rat(3, 4)}), one) -
                   BivarPoly::product(RatPoly({Rat(0), Rat(3, 4)}), y * y) -
                   BivarPoly::product(one, y * Rat(3, 4));
    CHECK(k2->I_smooth == I2);
}

TEST_CASE("kernel structure identities for N <= 8") {
    for (int N = 1; N <= 8; ++N) {
        auto ker = kernel_for(N);
        // D = -dS/dy exactly
        CHECK(ker->D == -ker->S.deriv_y());
        // the smooth part of I is skew
        CHECK(ker->I_smooth == -ker->I_smooth.transpose());
        // one-point normalization: int S_N(x,x) dx = N
        CHECK(integrate_unit(kernel_diag(ker->S)) == Rat(N));
    }
}

TEST_CASE("frozen diagonal S_N(x,x) for N = 2, 3, 4") {
    auto d2 = kernel_diag(kernel_for(2)->S);
    CHECK(d2 == RatPoly({Rat(3, 4), Rat(0), Rat(3, 4)}));
    auto d3 = kernel_diag(kernel_for(3)->S);
    CHECK(d3 == RatPoly({Rat(9, 8), Rat(0), Rat(0), Rat(0), Rat(15, 8)}));
    auto d4 = kernel_diag(kernel_for(4)->S);
    CHECK(d4 == RatPoly({Rat(45, 32), Rat(0), Rat(45, 32), Rat(0), Rat(-105, 32), Rat(0),
                         Rat(175, 32)}));
}

TEST_CASE("double-precision tables agree with exact evaluation") {
    std::mt19937_64 rng(0xB002);
    std::uniform_int_distribution<long> num(-7, 7);
    for (int N = 1; N <= 6; ++N) {
        auto ker = kernel_for(N);
        for (int iter = 0; iter < 50; ++iter) {
            Rat x(num(rng), 8), yv(num(rng), 8);
            x.canonicalize();
            yv.canonicalize();
            double xd = to_double(x), yd = to_double(yv);
            CHECK(ker->S_eval(xd, yd) == doctest::Approx(to_double(ker->S.eval(x, yv))).epsilon(1e-12));
            CHECK(ker->D_eval(xd, yd) == doctest::Approx(to_double(ker->D.eval(x, yv))).epsilon(1e-12));
            double iexact = to_double(ker->I_smooth.eval(x, yv)) -
                            0.5 * ((xd > yd) ? 1.0 : (xd < yd) ? -1.0 : 0.0);
            CHECK(ker->I_eval(xd, yd) == doctest::Approx(iexact).epsilon(1e-12));
        }
    }
}

// ---------------------------------------------------------------------------
// Pfaffian
// ---------------------------------------------------------------------------

TEST_CASE("pfaffian equals cofactor expansion up to 8x8") {
    std::mt19937_64 rng(0xB003);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int iter = 0; iter < 20; ++iter) {
            auto a = random_skew(rng, n);
            std::vector<int> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
            double expect = pfaffian_definition(a, idx);
            CHECK(pfaffian(to_skew(a)) == doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("pfaffian squared equals the determinant, 200 random matrices <= 12x12") {
    std::mt19937_64 rng(0xB004);
    std::uniform_int_distribution<int> half(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 2 * static_cast<std::size_t>(half(rng));
        auto a = random_skew(rng, n);
        double pf = pfaffian(to_skew(a));
        double det = lu_det(a);
        CHECK(std::fabs(pf * pf - det) <= 1e-9 * std::max(std::fabs(det), 1.0));
    }
}

TEST_CASE("pfaffian pinned small cases") {
    SkewMatrix A(2);
    A.upper(0, 1) = 7.0;
    CHECK(pfaffian(A) == doctest::Approx(7.0));
    SkewMatrix B(4);
    B.upper(0, 1) = 1.0;
    B.upper(0, 2) = 2.0;
    B.upper(0, 3) = 3.0;
    B.upper(1, 2) = 4.0;
    B.upper(1, 3) = 5.0;
    B.upper(2, 3) = 6.0;
    // a01 a23 - a02 a13 + a03 a12
    CHECK(pfaffian(B) == doctest::Approx(1.0 * 6.0 - 2.0 * 5.0 + 3.0 * 4.0));
}

// ---------------------------------------------------------------------------
// Correlation functions
// ---------------------------------------------------------------------------

TEST_CASE("one-point correlation is the kernel diagonal") {
    std::mt19937_64 rng(0xB005);
    std::uniform_real_distribution<double> u(-0.99, 0.99);
    for (int N = 1; N <= 6; ++N) {
        auto ker = kernel_for(N);
        for (int iter = 0; iter < 25; ++iter) {
            double x = u(rng);
            CHECK(correlation_k(N, {x}) == doctest::Approx(ker->S_eval(x, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("two-point correlation for N = 2 is (3/4)|x - y|") {
    std::mt19937_64 rng(0xB006);
    std::uniform_real_distribution<double> u(-0.99, 0.99);
    for (int iter = 0; iter < 50; ++iter) {
        double x = u(rng), y = u(rng);
        if (x == y) continue;
        CHECK(correlation_k(2, {x, y}) ==
              doctest::Approx(0.75 * std::fabs(x - y)).epsilon(1e-11));
    }
}

TEST_CASE("correlation is symmetric under point permutation") {
    std::mt19937_64 rng(0xB007);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int N = 2; N <= 5; ++N)
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<double> pts = {u(rng), u(rng), u(rng)};
            if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) continue;
            int k = 2 + (N % 2); // exercise both k=2 and k=3
            std::vector<double> p1(pts.begin(), pts.begin() + k), p2 = p1;
            std::reverse(p2.begin(), p2.end());
            CHECK(correlation_k(N, p1) == doctest::Approx(correlation_k(N, p2)).epsilon(1e-10));
        }
}

TEST_CASE("correlation validation errors") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return errc::DomainError;
    };
    CHECK(code([] { correlation_k(3, {0.5, 0.5}) ; }) == errc::DuplicatePoints);
    CHECK(code([] { correlation_k(3, {1.5}); }) == errc::OutOfDomain);
    CHECK(code([] { correlation_k(0, {0.5}); }) == errc::DomainError);
}

// ---------------------------------------------------------------------------
// Angle density
// ---------------------------------------------------------------------------

TEST_CASE("rho_density matches printed closed forms for m = 2, 3, 4") {
    const double pi = 4.0 * std::atan(1.0);
    for (int m : {2, 3, 4}) {
        for (int i = 1; i <= 100; ++i) {
            double t = pi * (2.0 * i - 1.0) / 200.0;
            CHECK(rho_density(m, 1, {t}) == doctest::Approx(rho_closed_form(m, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("rho_density is symmetric about pi/2 for one angle") {
    const double pi = 4.0 * std::atan(1.0);
    for (int m = 1; m <= 5; ++m)
        for (int i = 1; i <= 20; ++i) {
            double t = pi * i / 50.0;
            CHECK(rho_density(m, 1, {t}) ==
                  doctest::Approx(rho_density(m, 1, {pi - t})).epsilon(1e-10));
        }
}

TEST_CASE("rho_density k = m equals the flat-ensemble product form times m!/Z_m") {
    // R_m for the beta=1 ensemble is the normalized density itself:
    //   R_m(x_1..x_m) = (m!/Z_m) prod_{i<j} |x_i - x_j|.
    // In angle variables that multiplies prod sin(theta_l).
    std::mt19937_64 rng(0xB008);
    const double pi = 4.0 * std::atan(1.0);
    std::uniform_real_distribution<double> u(0.05, pi - 0.05);
    for (int m = 2; m <= 5; ++m) {
        double norm = to_double(Rat(factorial(static_cast<unsigned long>(m))) /
                                ensemble_normalization(m));
        for (int iter = 0; iter < 25; ++iter) {
            // A relative comparison needs the target bounded away from zero;
            // resample away from the measure-zero set where cosines collide
            // and both sides vanish.
            std::vector<double> th(static_cast<std::size_t>(m));
            double prod = 0.0;
            while (std::fabs(prod) < 1e-4) {
                for (auto& t : th) t = u(rng);
                prod = 1.0;
                for (int i = 0; i < m; ++i) {
                    prod *= std::sin(th[static_cast<std::size_t>(i)]);
                    for (int j = i + 1; j < m; ++j)
                        prod *= std::fabs(std::cos(th[static_cast<std::size_t>(i)]) -
                                          std::cos(th[static_cast<std::size_t>(j)]));
                }
            }
            double lhs = rho_density(m, m, th);
            double rhs = norm * prod;
            CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::fabs(rhs));
        }
    }
}
