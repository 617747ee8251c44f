#pragma once

#include <cstdint>
#include <vector>

#include <salem/exact_poly.hpp>
#include <salem/intervals.hpp>

namespace salem {

/// One Salem number of degree 2(m+1): the exact minimal-polynomial data plus
/// a certified floating enclosure of alpha and its conjugate angles.
struct SalemRecord {
    int m = 0;
    std::vector<Int> coeffs;        ///< a_1..a_{m+1} of the palindromic P
    std::vector<Int> trace_coeffs;  ///< b_1..b_{m+1} of Q = trace_transform(P)
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    std::vector<double> angles;     ///< theta_1..theta_m, ascending

    IntPoly reconstruct_p() const;  ///< monic self-reciprocal, degree 2(m+1)
    IntPoly reconstruct_q() const;  ///< monic trace polynomial, degree m+1
    bool operator==(const SalemRecord&) const = default;
};

/// Why a polynomial fell out of the class or failed irreducibility.
enum class RejectKind { None, NotSelfReciprocal, RootLayout, Multiplicity, CyclotomicFactor };

struct RejectReason {
    RejectKind kind = RejectKind::None;
    int d = 0;  ///< cyclotomic index when kind == CyclotomicFactor
    bool operator==(const RejectReason&) const = default;
};

const char* reject_kind_name(RejectKind k);

struct ClassVerdict {
    bool in_class = false;
    bool irreducible = false;
    RejectReason reject_reason;
};

/// Exact census of the class at bound H: counts plus one record per
/// irreducible member, in lexicographic trace_coeffs order.
struct CensusSummary {
    int m = 0;
    Rat H = 0;
    std::uint64_t class_count = 0;
    std::uint64_t irreducible_count = 0;
    std::uint64_t reducible_count = 0;
    std::vector<SalemRecord> records;
    bool operator==(const CensusSummary&) const = default;
};

struct CensusConfig {
    int jobs = 0;        ///< enumeration workers; 0 = available parallelism
    double tol = 1e-12;  ///< alpha enclosure width bound per record
};

/// Coefficients a_1..a_{m+1} of the self-reciprocal polynomial with root
/// multiset {y, 1/y, e^{+-i theta_1}, ..., e^{+-i theta_m}}, computed from
/// the explicit binomial/elementary-symmetric formulas in the trace
/// variables z_0 = y + 1/y, z_l = 2 cos theta_l.
std::vector<double> coefficient_map(double y, const std::vector<double>& thetas);

/// Same formulas over any scalar field, on trace variables given directly
/// (z[0] = y + 1/y, z[1..m] = 2 cos theta_l); exact for T = Rat.
template <class T>
std::vector<T> coefficient_map_z(const std::vector<T>& z);

extern template std::vector<double> coefficient_map_z<double>(const std::vector<double>&);
extern template std::vector<Rat> coefficient_map_z<Rat>(const std::vector<Rat>&);

/// Class membership and irreducibility of a degree-2(m+1) integer polynomial
/// at bound H: in the class iff monic, self-reciprocal, and the trace
/// polynomial has m roots in [-2,2] and one in (2, H+1/H] counted with
/// multiplicity; irreducible iff additionally squarefree away from the
/// boundary and free of cyclotomic factors.
ClassVerdict classify(const IntPoly& P, int m, const Rat& H);

/// Exact enumeration of the whole class at bound H (parallel over the
/// leading trace coefficient when OpenMP is available).
CensusSummary enumerate_census(int m, const Rat& H, const CensusConfig& cfg = {});

/// Single-threaded reference enumerator over the same candidate box; skips
/// the fast integer prescreens so it cross-checks them.
CensusSummary enumerate_census_serial(int m, const Rat& H, const CensusConfig& cfg = {});

struct SalemValue {
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    std::vector<double> angles;
};

/// Certified alpha enclosure and conjugate angles of a trace polynomial with
/// the class root layout (bisection driven by Sturm counts).
SalemValue salem_value_and_angles(const IntPoly& Q, double tol);

/// Sum over records of the product, across the k intervals, of how many of
/// the record's angles land in each interval.
std::uint64_t empirical_tuple_count(const std::vector<SalemRecord>& records,
                                    const IntervalSpec& iv);

}  // namespace salem
