#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "salem/asymptotics.hpp"
#include "salem/enumeration.hpp"

namespace salem {

/// One empirical-vs-predicted count comparison at bound H.
struct CountRow {
    Rat H;
    std::uint64_t empirical = 0;
    double predicted = 0.0;        // omega_m H^{m+1} (times the box integral for tuples)
    double residual = 0.0;         // empirical - predicted
    double residual_over_Hm = 0.0; // residual / H^m, the expected error-term scale
};

/// One angle-histogram bin; masses are fractions of the total.
struct HistogramRow {
    double bin_lo = 0.0;
    double bin_hi = 0.0;
    double empirical_mass = 0.0;
    double predicted_mass = 0.0; // integral of rho_{m,1}/m over the bin
};

/// Census counts against the leading term omega_m H^{m+1} over an ascending
/// grid of bounds (> 1 each). cache_dir may be empty (no caching).
std::vector<CountRow> census_table(int m, const std::vector<Rat>& H_grid,
                                   const std::string& cache_dir);

/// Tuple counts over the angle box iv against
/// omega_m H^{m+1} * integral of rho_{m,k} over iv.
std::vector<CountRow> tuple_table(int m, int k, const IntervalSpec& iv,
                                  const std::vector<Rat>& H_grid, const QuadratureSpec& q = {});

/// Pooled conjugate-angle histogram over equal-width bins of [0, pi],
/// left-closed (last bin closed), against the normalized density rho_{m,1}/m.
std::vector<HistogramRow> angle_histogram(int m, const Rat& H, int bins,
                                          const std::string& cache_dir);

/// CSV/JSON table serialization: header row, columns exactly as the struct
/// fields, doubles at full round-trip precision.
void write_count_csv(const std::vector<CountRow>& rows, std::ostream& os);
void write_count_json(const std::vector<CountRow>& rows, std::ostream& os);
void write_histogram_csv(const std::vector<HistogramRow>& rows, std::ostream& os);
void write_histogram_json(const std::vector<HistogramRow>& rows, std::ostream& os);

} // namespace salem
