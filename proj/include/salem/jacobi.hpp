#pragma once

#include "salem/exact_poly.hpp"

namespace salem {

/// Classical Jacobi polynomial with integer parameters, held exactly.
struct JacobiPoly {
    int n = 0;
    int a = 0;
    int b = 0;
    RatPoly poly;
};

/// P_n^{(a,b)} with exact rational coefficients,
///   P_n^{(a,b)}(t) = (a+n)! / (n! (a+b+n)!) *
///                    sum_j C(n,j) (a+b+n+j)!/(a+j)! ((t-1)/2)^j,
/// all gamma factors at integer arguments. a, b >= 0 required.
JacobiPoly jacobi_poly(int n, int a, int b);

/// Squared L^2 norm of P_n^{(a,b)} under the weight (1-t)^a (1+t)^b on [-1,1]:
///   h_n = 2^{a+b+1}/(2n+a+b+1) * (n+a)!(n+b)! / (n!(n+a+b)!).
Rat jacobi_norm(int n, int a, int b);

/// Exact integral of f over [-1,1].
Rat integrate_unit(const RatPoly& f);

} // namespace salem
