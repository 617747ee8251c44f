#include "salem/kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace salem {

BivarTable BivarTable::from(const BivarPoly& p) {
    BivarTable t;
    t.nx = p.cx.size();
    t.ny = 0;
    for (const auto& row : p.cx) t.ny = std::max(t.ny, row.c.size());
    if (t.nx == 0 || t.ny == 0) {
        t.nx = t.ny = 1;
        t.c.assign(1, 0.0);
        return t;
    }
    t.c.assign(t.nx * t.ny, 0.0);
    for (std::size_t i = 0; i < p.cx.size(); ++i)
        for (std::size_t j = 0; j < p.cx[i].c.size(); ++j) t.c[i * t.ny + j] = to_double(p.cx[i].c[j]);
    return t;
}

SkewSystem skew_system(int N) {
    if (N < 1) fail(errc::DomainError, "skew system needs N >= 1");
    SkewSystem sys;
    sys.N = N;
    sys.c = N % 2;
    int pairs = (N - sys.c) / 2;
    for (int j = 0; j < pairs; ++j) {
        // psi_{2j}(t) = 2/(2j+2+c) (P^{(0,0)}_{2j+1+c}(t) - c)
        RatPoly leg = jacobi_poly(2 * j + 1 + sys.c, 0, 0).poly;
        leg = leg - RatPoly::constant(Rat(sys.c));
        sys.psi_even.push_back(leg * make_rat(2, 2 * j + 2 + sys.c));
        // psi_{2j+1}(t) = (t^2 - 1) P^{(1,1)}_{2j+c}(t)
        RatPoly t2m1(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
        sys.psi_odd.push_back(t2m1 * jacobi_poly(2 * j + sys.c, 1, 1).poly);
        // r_j = 8(2j+1+c) / ((4j+3+2c)(2j+2+c))
        sys.r.push_back(make_rat(8 * (2 * j + 1 + sys.c),
                                 (4 * j + 3 + 2 * sys.c) * (2 * j + 2 + sys.c)));
    }
    return sys;
}

KernelSet build_kernel(int N) {
    if (N < 1) fail(errc::DomainError, "kernel needs N >= 1");
    SkewSystem sys = skew_system(N);
    KernelSet ker;
    ker.N = N;

    // S_N(x,y) = sum_j (1/r_j)(psi'_{2j+1}(x) psi_{2j}(y) - psi'_{2j}(x) psi_{2j+1}(y))
    //            + c (N+1)/4 * P^{(1,1)}_{N-1}(x).
    BivarPoly S;
    for (std::size_t j = 0; j < sys.r.size(); ++j) {
        Rat inv = 1 / sys.r[j];
        BivarPoly term = BivarPoly::product(sys.psi_odd[j].derivative(), sys.psi_even[j]) -
                         BivarPoly::product(sys.psi_even[j].derivative(), sys.psi_odd[j]);
        for (auto& row : term.cx) row = row * inv;
        S = S + term;
    }
    if (sys.c == 1) {
        RatPoly anchor = jacobi_poly(N - 1, 1, 1).poly * make_rat(N + 1, 4);
        S = S + BivarPoly::product(anchor, RatPoly::constant(Rat(1)));
    }
    ker.S = S;

    ker.D = -S.deriv_y();

    // Smooth part of I_N: integrating sign(x-xi) S(xi,y) over xi in [-1,1]
    // gives A(x,y) - (A(1,y)+A(-1,y))/2 with A the antiderivative of S in its
    // first argument; odd N subtracts (c/2) P^{(0,0)}_N(x). The remaining
    // -(1/2) sign(x-y) lives in KernelSet::I_eval.
    BivarPoly A = S.antideriv_x();
    RatPoly edge = (A.at_x(Rat(1)) + A.at_x(Rat(-1))) * Rat(1, 2);
    BivarPoly I = A - BivarPoly::product(RatPoly::constant(Rat(1)), edge);
    if (sys.c == 1) {
        RatPoly legN = jacobi_poly(N, 0, 0).poly * Rat(1, 2);
        I = I - BivarPoly::product(legN, RatPoly::constant(Rat(1)));
    }
    ker.I_smooth = I;

    ker.S_tab = BivarTable::from(ker.S);
    ker.D_tab = BivarTable::from(ker.D);
    ker.I_tab = BivarTable::from(ker.I_smooth);
    return ker;
}

std::shared_ptr<const KernelSet> kernel_for(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const KernelSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto ker = std::make_shared<const KernelSet>(build_kernel(N));
    cache.emplace(N, ker);
    return ker;
}

double pfaffian(const SkewMatrix& A) {
    std::size_t n = A.dim();
    if (n == 0) return 1.0;
    // Work on a dense copy; congruence transforms with unit determinant
    // preserve the Pfaffian, row/col swaps flip its sign.
    std::vector<double> M(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i * n + j] = A.at(i, j);

    double pf = 1.0;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        double best = std::fabs(M[(k + 1) * n + k]);
        for (std::size_t i = k + 2; i < n; ++i) {
            double v = std::fabs(M[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M[(k + 1) * n + j], M[piv * n + j]);
            for (std::size_t i = 0; i < n; ++i) std::swap(M[i * n + (k + 1)], M[i * n + piv]);
            pf = -pf;
        }
        double d = M[k * n + (k + 1)];
        pf *= d;
        for (std::size_t i = k + 2; i < n; ++i) {
            double f = M[i * n + k] / M[(k + 1) * n + k];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) M[i * n + j] -= f * M[(k + 1) * n + j];
            for (std::size_t j = 0; j < n; ++j) M[j * n + i] -= f * M[j * n + (k + 1)];
        }
    }
    return pf;
}

double correlation_k(int N, const std::vector<double>& points) {
    if (N < 1) fail(errc::DomainError, "correlation needs N >= 1");
    if (points.empty()) fail(errc::DomainError, "correlation needs at least one point");
    for (double x : points)
        if (!(x > -1.0 && x < 1.0)) fail(errc::OutOfDomain, "correlation points must lie in (-1,1)");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) fail(errc::DuplicatePoints, "correlation points must be distinct");

    return correlation_eval(*kernel_for(N), points);
}

double correlation_eval(const KernelSet& ker, const std::vector<double>& points) {
    std::size_t k = points.size();
    SkewMatrix A(2 * k);
    for (std::size_t a = 0; a < k; ++a) {
        double xa = points[a];
        // Diagonal block: I(x,x) = 0 (sign(0):=0 and the smooth part is
        // skew), D(x,x) = 0; only S(x,x) survives.
        A.upper(2 * a, 2 * a + 1) = ker.S_eval(xa, xa);
        for (std::size_t b = a + 1; b < k; ++b) {
            double xb = points[b];
            A.upper(2 * a, 2 * b) = ker.I_eval(xa, xb);
            A.upper(2 * a, 2 * b + 1) = ker.S_eval(xb, xa);
            A.upper(2 * a + 1, 2 * b) = -ker.S_eval(xa, xb);
            A.upper(2 * a + 1, 2 * b + 1) = -ker.D_eval(xa, xb);
        }
    }
    return pfaffian(A);
}

double rho_density(int m, int k, const std::vector<double>& thetas) {
    if (m < 1) fail(errc::DomainError, "rho density needs m >= 1");
    if (k < 1 || k > m) fail(errc::DomainError, "rho density needs 1 <= k <= m");
    if (static_cast<int>(thetas.size()) != k)
        fail(errc::DomainError, "rho density expects exactly k angles");
    std::vector<double> xs(thetas.size());
    double prod = 1.0;
    const double pi = 4.0 * std::atan(1.0);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (!(thetas[i] > 0.0 && thetas[i] < pi))
            fail(errc::OutOfDomain, "angles must lie in (0, pi)");
        xs[i] = -std::cos(thetas[i]);
        prod *= std::sin(thetas[i]);
    }
    return prod * correlation_k(m, xs);
}

double rho_closed_form(int m, double theta) {
    double s = std::sin(theta), c = std::cos(theta), c2 = c * c;
    switch (m) {
        case 2: return 0.75 * s * (c2 + 1.0);
        case 3: return (3.0 / 8.0) * s * (5.0 * c2 * c2 + 3.0);
        case 4: return (5.0 / 32.0) * s * (35.0 * c2 * c2 * c2 - 21.0 * c2 * c2 + 9.0 * c2 + 9.0);
        default: fail(errc::UnsupportedM, "closed form available for m in {2,3,4}");
    }
}

std::vector<RatPoly> skew_basis_polys(int N) {
    SkewSystem sys = skew_system(N);
    std::vector<RatPoly> R;
    for (std::size_t j = 0; j < sys.r.size(); ++j) {
        R.push_back(sys.psi_even[j].derivative());
        R.push_back(sys.psi_odd[j].derivative());
    }
    if (sys.c == 1) {
        // Odd N leaves one unpaired polynomial, ((s+1)/2) P^{(1,1)}_{2s} with
        // N = 2s+1; it is skew-orthogonal to the whole family.
        int s = (N - 1) / 2;
        R.push_back(jacobi_poly(2 * s, 1, 1).poly * make_rat(s + 1, 2));
    }
    return R;
}

Rat skew_product(const RatPoly& f, const RatPoly& g) {
    // <f,g> = int g F - (1/2)(F(1)+F(-1)) int g over [-1,1], F' = f.
    RatPoly F = f.antiderivative();
    Rat edge = (F(Rat(1)) + F(Rat(-1))) / 2;
    return integrate_unit(g * F) - edge * integrate_unit(g);
}

} // namespace salem
