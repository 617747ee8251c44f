#pragma once

#include <cstdint>
#include <vector>

#include "salem/intervals.hpp"
#include "salem/selberg.hpp"

namespace salem {

enum class QuadScheme { GaussLegendre, TanhSinh };

/// Deterministic quadrature configuration. `nodes` caps the per-dimension
/// node count; the default is exact (up to roundoff) for every density
/// integral with m <= 5.
struct QuadratureSpec {
    int nodes = 64;
    QuadScheme scheme = QuadScheme::GaussLegendre;
    double abs_tol = 1e-8;
};

/// Deterministic Monte-Carlo configuration.
struct McSpec {
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
};

struct McResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Gauss-Legendre nodes/weights on [-1,1] (Newton on the Legendre
/// recurrence; cached per n).
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const QuadRule& gauss_legendre(int n);

/// Tanh-sinh rule truncated to ~n points on [-1,1].
QuadRule tanh_sinh(int n);

/// Closed-form change-of-variables Jacobian for the coefficient map:
///   2^{m(m+1)/2} (1 - 1/y²) prod_l (y + 1/y - 2cos t_l) prod_l sin t_l
///   * prod_{i<j} |cos t_i - cos t_j|,
/// with m = thetas.size(). Requires y > 1 and every angle in (0, pi).
double jacobian_closed(double y, const std::vector<double>& thetas);

/// |det| of the central finite-difference Jacobian of the coefficient map
/// at (y, thetas), step h. Throws SingularStencil if the step underflows at
/// the evaluation point.
double jacobian_numeric(double y, const std::vector<double>& thetas, double h = 1e-4);

/// Numeric integral of rho_{m,k} over the box iv (k intervals). k = 1 uses
/// the exact antiderivative in x = -cos(theta); k >= 2 decomposes the box
/// into coordinate orderings (where the kernel's sign terms are constant)
/// and applies per-level Gauss-Legendre that is exact for the polynomial
/// degree in play. Intervals must be pairwise interior-disjoint or
/// identical.
double integrate_rho(int m, int k, const IntervalSpec& iv, const QuadratureSpec& q = {});

/// Monte-Carlo estimate of the coefficient-domain volume
///   v_m = int_{(1,H] x {0 <= t_1 <= ... <= t_m <= pi}} J(y, t) dy dt.
/// Counter-based RNG: a fixed seed gives a bit-identical estimate at any
/// thread count.
McResult mc_volume(int m, const Rat& H, const McSpec& mc);

} // namespace salem
