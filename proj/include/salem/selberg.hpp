#pragma once

#include "salem/rational.hpp"

namespace salem {

/// Selberg's integral S_n(alpha, beta, gamma) via the Gamma-product closed
/// form, evaluated through log-Gamma (safe for large n). Requires
/// alpha, beta > 0 and gamma >= 0 (the region used here).
double selberg_closed(int n, double alpha, double beta, double gamma);

/// Exact rational evaluation of S_n(alpha, beta, gamma) when alpha and beta
/// are positive integers and gamma is a nonnegative integer or half-integer
/// (all Gamma factors then reduce to factorials times powers of sqrt(pi),
/// and the sqrt(pi) powers cancel exactly).
Rat selberg_exact(int n, const Rat& alpha, const Rat& beta, const Rat& gamma);

/// Leading constant of the degree-2(m+1) Salem count:
///   omega_m = 2^{m(m+1)}/(m+1) * prod_{k=0}^{m-1} (k!)^2/(2k+1)!.
Rat omega_leading(int m);

/// Normalization of the beta=1 flat ensemble on [-1,1]^N:
///   Z_N = int prod_{i<j} |x_i - x_j| dx = 2^{N(N+1)/2} S_N(1,1,1/2).
Rat ensemble_normalization(int N);

} // namespace salem
