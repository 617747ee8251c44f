#pragma once

#include <memory>
#include <vector>

#include "salem/jacobi.hpp"

namespace salem {

/// Exact bivariate polynomial sum_i x^i * cx[i](y).
struct BivarPoly {
    std::vector<RatPoly> cx;

    static BivarPoly product(const RatPoly& fx, const RatPoly& gy) {
        BivarPoly out;
        out.cx.resize(fx.c.size());
        for (std::size_t i = 0; i < fx.c.size(); ++i) out.cx[i] = gy * fx.c[i];
        return out;
    }

    void normalize() {
        while (!cx.empty() && cx.back().is_zero()) cx.pop_back();
    }

    bool is_zero() const { return cx.empty(); }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly out;
        out.cx.resize(std::max(a.cx.size(), b.cx.size()));
        for (std::size_t i = 0; i < out.cx.size(); ++i) {
            if (i < a.cx.size()) out.cx[i] = out.cx[i] + a.cx[i];
            if (i < b.cx.size()) out.cx[i] = out.cx[i] + b.cx[i];
        }
        out.normalize();
        return out;
    }

    friend BivarPoly operator-(const BivarPoly& a) {
        BivarPoly out = a;
        for (auto& p : out.cx) p = -p;
        return out;
    }

    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly d = a - b;
        return d.is_zero();
    }

    BivarPoly deriv_y() const {
        BivarPoly out;
        out.cx.resize(cx.size());
        for (std::size_t i = 0; i < cx.size(); ++i) out.cx[i] = cx[i].derivative();
        out.normalize();
        return out;
    }

    /// Antiderivative in x with zero constant term.
    BivarPoly antideriv_x() const {
        BivarPoly out;
        out.cx.resize(cx.size() + 1);
        for (std::size_t i = 0; i < cx.size(); ++i)
            out.cx[i + 1] = cx[i] * Rat(1, static_cast<long>(i + 1));
        out.normalize();
        return out;
    }

    /// Swap the roles of x and y.
    BivarPoly transpose() const {
        BivarPoly out;
        for (std::size_t i = 0; i < cx.size(); ++i)
            for (std::size_t j = 0; j < cx[i].c.size(); ++j) {
                if (cx[i].c[j] == 0) continue;
                if (out.cx.size() <= j) out.cx.resize(j + 1);
                auto& row = out.cx[j];
                if (row.c.size() <= i) row.c.resize(i + 1, Rat(0));
                row.c[i] += cx[i].c[j];
            }
        for (auto& p : out.cx) p.normalize();
        out.normalize();
        return out;
    }

    /// Substitute a fixed x, leaving a polynomial in y (Horner in x).
    RatPoly at_x(const Rat& x) const {
        RatPoly out;
        for (std::size_t i = cx.size(); i-- > 0;) out = out * x + cx[i];
        return out;
    }

    Rat eval(const Rat& x, const Rat& y) const { return at_x(x)(y); }
};

/// Double-precision evaluation cache for one BivarPoly (row-major, c[i][j]
/// multiplies x^i y^j).
struct BivarTable {
    std::size_t nx = 0, ny = 0;
    std::vector<double> c;

    static BivarTable from(const BivarPoly& p);
    double eval(double x, double y) const {
        double acc = 0.0;
        for (std::size_t i = nx; i-- > 0;) {
            double row = 0.0;
            const double* base = c.data() + i * ny;
            for (std::size_t j = ny; j-- > 0;) row = row * y + base[j];
            acc = acc * x + row;
        }
        return acc;
    }
};

/// Skew-orthogonal system underlying the kernel of size N: the psi
/// half-integrals and normalization constants r_j, one triple per j.
struct SkewSystem {
    int N = 0;
    int c = 0; // N mod 2
    std::vector<RatPoly> psi_even;
    std::vector<RatPoly> psi_odd;
    std::vector<Rat> r;
};

SkewSystem skew_system(int N);

/// Kernel blocks for size N, kept exact. I_N(x,y) at evaluation time is
/// I_smooth(x,y) - (1/2) sign(x-y), with sign(0) := 0.
struct KernelSet {
    int N = 0;
    BivarPoly S;
    BivarPoly D;
    BivarPoly I_smooth;

    BivarTable S_tab, D_tab, I_tab;

    double S_eval(double x, double y) const { return S_tab.eval(x, y); }
    double D_eval(double x, double y) const { return D_tab.eval(x, y); }
    double I_eval(double x, double y) const {
        double s = (x > y) ? 1.0 : (x < y) ? -1.0 : 0.0;
        return I_tab.eval(x, y) - 0.5 * s;
    }
};

KernelSet build_kernel(int N);

/// Shared immutable kernel cache keyed by N.
std::shared_ptr<const KernelSet> kernel_for(int N);

/// Skew-symmetric matrix of even dimension; only the strict upper triangle
/// is stored, so A = -A^T holds structurally.
class SkewMatrix {
  public:
    explicit SkewMatrix(std::size_t dim) : n_(dim), a_((dim * (dim - 1)) / 2, 0.0) {
        if (dim % 2 != 0) fail(errc::OddDimension, "skew matrix dimension must be even");
    }

    std::size_t dim() const { return n_; }

    double& upper(std::size_t i, std::size_t j) { return a_[index(i, j)]; }

    double at(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        return (i < j) ? a_[index(i, j)] : -a_[index(j, i)];
    }

  private:
    std::size_t index(std::size_t i, std::size_t j) const {
        // i < j required; row-major over the strict upper triangle.
        return i * n_ - (i * (i + 1)) / 2 + (j - i - 1);
    }

    std::size_t n_;
    std::vector<double> a_;
};

/// Pfaffian by skew-symmetric elimination with partial pivoting, O(n^3).
double pfaffian(const SkewMatrix& A);

/// k-point correlation R_k at distinct points inside (-1,1): the Pfaffian of
/// the 2k x 2k block matrix with blocks [[I(x,y), S(y,x)], [-S(x,y), -D(x,y)]].
double correlation_k(int N, const std::vector<double>& points);

/// Unchecked fast path of correlation_k on a prebuilt kernel (quadrature
/// inner loops); callers guarantee distinct in-domain points.
double correlation_eval(const KernelSet& ker, const std::vector<double>& points);

/// Angle density: rho_{m,k}(theta) = prod sin(theta_l) *
/// correlation_k(m, (-cos theta_1, ..., -cos theta_k)).
double rho_density(int m, int k, const std::vector<double>& thetas);

/// Printed closed forms for rho_{m,1}, m in {2,3,4} (test oracle).
double rho_closed_form(int m, double theta);

/// The skew-orthogonal polynomial family R_0..R_{N-1} itself (R_j is the
/// derivative of psi_j; odd N carries one extra unpaired even-index member).
std::vector<RatPoly> skew_basis_polys(int N);

/// beta=1 skew product <f,g> = (1/2) int int sign(y-x) f(x) g(y) dx dy over
/// [-1,1]^2, computed exactly.
Rat skew_product(const RatPoly& f, const RatPoly& g);

} // namespace salem
