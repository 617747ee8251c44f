#include "salem/harness.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"
#include "salem/census_io.hpp"
#include "salem/errors.hpp"

namespace salem {

namespace {

using ordered_json = nlohmann::ordered_json;
const double kPi = 4.0 * std::atan(1.0);

void validate_grid(const std::vector<Rat>& H_grid) {
    for (std::size_t i = 0; i < H_grid.size(); ++i) {
        if (H_grid[i] <= 1) fail(errc::BoundTooSmall, "every bound in the grid must exceed 1");
        if (i > 0 && H_grid[i] <= H_grid[i - 1])
            fail(errc::DomainError, "bound grid must be strictly ascending");
    }
}

CountRow make_row(const Rat& H, int m, std::uint64_t empirical, double leading_factor) {
    CountRow row;
    row.H = H;
    row.empirical = empirical;
    row.predicted = to_double(omega_leading(m) * pow_rat(H, m + 1)) * leading_factor;
    row.residual = static_cast<double>(empirical) - row.predicted;
    row.residual_over_Hm = row.residual / to_double(pow_rat(H, m));
    return row;
}

} // namespace

std::vector<CountRow> census_table(int m, const std::vector<Rat>& H_grid,
                                   const std::string& cache_dir) {
    validate_grid(H_grid);
    std::vector<CountRow> rows;
    rows.reserve(H_grid.size());
    for (const Rat& H : H_grid) {
        CensusSummary sum = load_or_build_census(m, H, cache_dir);
        rows.push_back(make_row(H, m, sum.irreducible_count, 1.0));
    }
    return rows;
}

std::vector<CountRow> tuple_table(int m, int k, const IntervalSpec& iv,
                                  const std::vector<Rat>& H_grid, const QuadratureSpec& q) {
    if (m < 1) fail(errc::DomainError, "tuple table needs m >= 1");
    if (k < 1 || k > m) fail(errc::DomainError, "tuple table needs 1 <= k <= m");
    validate_grid(H_grid);
    double box_integral = integrate_rho(m, k, iv, q);
    std::vector<CountRow> rows;
    rows.reserve(H_grid.size());
    for (const Rat& H : H_grid) {
        CensusSummary sum = enumerate_census(m, H);
        std::uint64_t empirical = empirical_tuple_count(sum.records, iv);
        rows.push_back(make_row(H, m, empirical, box_integral));
    }
    return rows;
}

std::vector<HistogramRow> angle_histogram(int m, const Rat& H, int bins,
                                          const std::string& cache_dir) {
    if (bins < 1) fail(errc::DomainError, "histogram needs at least one bin");
    CensusSummary sum = load_or_build_census(m, H, cache_dir);
    if (sum.records.empty()) fail(errc::EmptyCensus, "census holds no records to bin");

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    std::uint64_t total = 0;
    for (const SalemRecord& rec : sum.records)
        for (double t : rec.angles) {
            // Left-closed bins [i pi/B, (i+1) pi/B); the last bin also takes
            // its right endpoint.
            long idx = static_cast<long>(std::floor(t / kPi * bins));
            if (idx < 0) idx = 0;
            if (idx >= bins) idx = bins - 1;
            ++counts[static_cast<std::size_t>(idx)];
            ++total;
        }

    std::vector<HistogramRow> rows;
    rows.reserve(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i) {
        HistogramRow row;
        row.bin_lo = kPi * i / bins;
        row.bin_hi = kPi * (i + 1) / bins;
        row.empirical_mass =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / static_cast<double>(total);
        Rat lo(i, bins), hi(i + 1, bins);
        lo.canonicalize();
        hi.canonicalize();
        IntervalSpec bin;
        bin.intervals.push_back(
            AngleInterval::closed(AnglePoint::pi_times(lo), AnglePoint::pi_times(hi)));
        row.predicted_mass = integrate_rho(m, 1, bin, QuadratureSpec{}) / m;
        rows.push_back(row);
    }
    return rows;
}

void write_count_csv(const std::vector<CountRow>& rows, std::ostream& os) {
    os << "H,empirical,predicted,residual,residual_over_Hm\n" << std::setprecision(17);
    for (const CountRow& r : rows)
        os << rat_to_string(r.H) << ',' << r.empirical << ',' << r.predicted << ',' << r.residual
           << ',' << r.residual_over_Hm << '\n';
}

void write_count_json(const std::vector<CountRow>& rows, std::ostream& os) {
    ordered_json arr = ordered_json::array();
    for (const CountRow& r : rows) {
        ordered_json row;
        row["H"] = rat_to_string(r.H);
        row["empirical"] = r.empirical;
        row["predicted"] = r.predicted;
        row["residual"] = r.residual;
        row["residual_over_Hm"] = r.residual_over_Hm;
        arr.push_back(std::move(row));
    }
    os << arr.dump(2) << '\n';
}

void write_histogram_csv(const std::vector<HistogramRow>& rows, std::ostream& os) {
    os << "bin_lo,bin_hi,empirical_mass,predicted_mass\n" << std::setprecision(17);
    for (const HistogramRow& r : rows)
        os << r.bin_lo << ',' << r.bin_hi << ',' << r.empirical_mass << ',' << r.predicted_mass
           << '\n';
}

void write_histogram_json(const std::vector<HistogramRow>& rows, std::ostream& os) {
    ordered_json arr = ordered_json::array();
    for (const HistogramRow& r : rows) {
        ordered_json row;
        row["bin_lo"] = r.bin_lo;
        row["bin_hi"] = r.bin_hi;
        row["empirical_mass"] = r.empirical_mass;
        row["predicted_mass"] = r.predicted_mass;
        arr.push_back(std::move(row));
    }
    os << arr.dump(2) << '\n';
}

} // namespace salem
