#include "salem/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "salem/asymptotics.hpp"
#include "salem/census_io.hpp"
#include "salem/errors.hpp"
#include "salem/harness.hpp"
#include "salem/kernel.hpp"
#include "salem/selberg.hpp"

namespace salem {

namespace {

/// Grammar lines echoed on usage errors.
const char* grammar_line(const std::string& sub) {
    if (sub == "census")
        return "census --m <int> --bound <rat> [--jobs <int>] [--cache <dir>] [--format "
               "csv|jsonl] [--out <path>]";
    if (sub == "density")
        return "density --m <int> --k <int> [--intervals \"a:b[,a:b...]\"] --grid <int> [--out "
               "<path>]";
    if (sub == "compare-counts")
        return "compare-counts --m <int> --bounds <rat,rat,...> [--cache <dir>] [--format "
               "csv|json] [--out <path>]";
    if (sub == "compare-angles")
        return "compare-angles --m <int> --bound <rat> --bins <int> [--cache <dir>] [--format "
               "csv|json] [--out <path>]";
    if (sub == "compare-tuples")
        return "compare-tuples --m <int> --k <int> --intervals \"a:b,...\" --bounds <rat,...> "
               "[--format csv|json] [--out <path>]";
    if (sub == "volume")
        return "volume --m <int> --bound <rat> --samples <int> --seed <u64> [--out <path>]";
    if (sub == "selberg") return "selberg --n <int> --alpha <real> --beta <real> --gamma <real>";
    return "";
}

/// Usage-stage failure: offending flag + message + grammar line, exit 2.
struct UsageError {
    std::string message;
    std::string sub;
};

Rat parse_rat_flag(const std::string& text, const char* flag, const std::string& sub) {
    try {
        return rat_from_string(text);
    } catch (const Error& e) {
        throw UsageError{std::string(flag) + ": " + e.what(), sub};
    }
}

std::vector<Rat> parse_rat_list_flag(const std::string& text, const char* flag,
                                     const std::string& sub) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rat_flag(item, flag, sub));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw UsageError{std::string(flag) + ": empty list", sub};
    return out;
}

IntervalSpec parse_intervals_flag(const std::string& text, int k, const std::string& sub) {
    IntervalSpec iv;
    try {
        iv = parse_intervals(text);
        check_intervals_in_range(iv);
    } catch (const Error& e) {
        throw UsageError{std::string("--intervals: ") + e.what(), sub};
    }
    if (static_cast<int>(iv.k()) != k)
        throw UsageError{"--intervals: expected " + std::to_string(k) + " interval(s), got " +
                             std::to_string(iv.k()),
                         sub};
    return iv;
}

/// Run fn with an ostream on --out (or stdout when empty).
template <class Fn>
void with_output(const std::string& out_path, Fn&& fn) {
    if (out_path.empty()) {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) fail(errc::IoError, "cannot open output file: " + out_path);
    fn(os);
    if (!os) fail(errc::IoError, "write failed for output file: " + out_path);
}

struct Args {
    // shared
    int m = 0, k = 0, grid = 0, bins = 0, n = 0, jobs = 0;
    std::string bound, bounds, intervals, cache, format, out;
    long long samples = 0;
    std::uint64_t seed = 0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

int run_census(const Args& a) {
    Rat H = parse_rat_flag(a.bound, "--bound", "census");
    CensusConfig cfg;
    cfg.jobs = a.jobs;
    CensusSummary sum = a.cache.empty() ? enumerate_census(a.m, H, cfg)
                                        : load_or_build_census(a.m, H, a.cache, cfg);
    with_output(a.out, [&](std::ostream& os) {
        if (a.format == "jsonl")
            write_census_jsonl(sum, os);
        else
            write_census_csv(sum, os);
    });
    std::cerr << "census m=" << sum.m << " H=" << rat_to_string(sum.H)
              << ": class=" << sum.class_count << " irreducible=" << sum.irreducible_count
              << " reducible=" << sum.reducible_count << '\n';
    return 0;
}

int run_density(const Args& a) {
    IntervalSpec iv;
    if (!a.intervals.empty())
        iv = parse_intervals_flag(a.intervals, a.k, "density");
    else
        iv = IntervalSpec::full_box(static_cast<std::size_t>(a.k));
    if (a.grid < 1) throw UsageError{"--grid: must be >= 1", "density"};

    std::vector<std::vector<double>> axes;
    for (const AngleInterval& box : iv.intervals) {
        double lo = box.lo.value(), hi = box.hi.value();
        std::vector<double> mids;
        for (int j = 1; j <= a.grid; ++j)
            mids.push_back(lo + (hi - lo) * (2.0 * j - 1.0) / (2.0 * a.grid));
        axes.push_back(std::move(mids));
    }

    with_output(a.out, [&](std::ostream& os) {
        os << std::setprecision(17);
        if (a.k == 1)
            os << "theta,rho\n";
        else {
            for (int i = 1; i <= a.k; ++i) os << "theta_" << i << ',';
            os << "rho\n";
        }
        std::vector<int> idx(static_cast<std::size_t>(a.k), 0);
        std::vector<double> point(static_cast<std::size_t>(a.k));
        while (true) {
            bool dup = false;
            for (int i = 0; i < a.k; ++i) {
                point[static_cast<std::size_t>(i)] =
                    axes[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[i])];
                for (int j = 0; j < i; ++j)
                    if (point[static_cast<std::size_t>(j)] == point[static_cast<std::size_t>(i)])
                        dup = true;
            }
            // Coincident coordinates sit on the density's zero set; write the
            // continuous limit instead of evaluating the Pfaffian there.
            double rho = dup ? 0.0 : rho_density(a.m, a.k, point);
            for (double t : point) os << t << ',';
            os << rho << '\n';
            int d = a.k - 1;
            while (d >= 0 && ++idx[d] == a.grid) idx[d--] = 0;
            if (d < 0) break;
        }
    });
    return 0;
}

int run_compare_counts(const Args& a) {
    std::vector<Rat> grid = parse_rat_list_flag(a.bounds, "--bounds", "compare-counts");
    auto rows = census_table(a.m, grid, a.cache);
    with_output(a.out, [&](std::ostream& os) {
        a.format == "json" ? write_count_json(rows, os) : write_count_csv(rows, os);
    });
    return 0;
}

int run_compare_angles(const Args& a) {
    Rat H = parse_rat_flag(a.bound, "--bound", "compare-angles");
    auto rows = angle_histogram(a.m, H, a.bins, a.cache);
    with_output(a.out, [&](std::ostream& os) {
        a.format == "json" ? write_histogram_json(rows, os) : write_histogram_csv(rows, os);
    });
    return 0;
}

int run_compare_tuples(const Args& a) {
    IntervalSpec iv = parse_intervals_flag(a.intervals, a.k, "compare-tuples");
    std::vector<Rat> grid = parse_rat_list_flag(a.bounds, "--bounds", "compare-tuples");
    auto rows = tuple_table(a.m, a.k, iv, grid);
    with_output(a.out, [&](std::ostream& os) {
        a.format == "json" ? write_count_json(rows, os) : write_count_csv(rows, os);
    });
    return 0;
}

int run_volume(const Args& a) {
    Rat H = parse_rat_flag(a.bound, "--bound", "volume");
    McSpec mc;
    mc.samples = a.samples;
    mc.seed = a.seed;
    McResult res = mc_volume(a.m, H, mc);
    with_output(a.out, [&](std::ostream& os) {
        os << std::setprecision(17) << "m,H,samples,seed,estimate,stderr\n"
           << a.m << ',' << rat_to_string(H) << ',' << a.samples << ',' << a.seed << ','
           << res.estimate << ',' << res.stderr_ << '\n';
    });
    return 0;
}

int run_selberg(const Args& a) {
    double value = selberg_closed(a.n, a.alpha, a.beta, a.gamma);
    std::cout << std::setprecision(17) << value << '\n';
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Salem number census and limiting angle-distribution toolkit"};
    app.require_subcommand(1);
    Args a;

    CLI::App* census = app.add_subcommand("census", "Enumerate the degree-2(m+1) census up to H");
    census->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    census->add_option("--bound", a.bound, "Bound H as p/q or decimal")->required();
    census->add_option("--jobs", a.jobs, "Max enumeration workers (default: all cores)");
    census->add_option("--cache", a.cache, "Census cache directory");
    census->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->default_val("csv");
    census->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* density = app.add_subcommand("density", "Evaluate the angle density on a grid");
    density->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    density->add_option("--k", a.k, "Number of angle arguments")->required();
    density->add_option("--intervals", a.intervals, "Angle box a:b[,a:b...] (default [0,pi]^k)");
    density->add_option("--grid", a.grid, "Midpoints per axis")->required();
    density->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* cc = app.add_subcommand("compare-counts", "Census counts vs the leading term");
    cc->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    cc->add_option("--bounds", a.bounds, "Comma list of bounds")->required();
    cc->add_option("--cache", a.cache, "Census cache directory");
    cc->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    cc->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* ca = app.add_subcommand("compare-angles", "Angle histogram vs the density");
    ca->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    ca->add_option("--bound", a.bound, "Bound H as p/q or decimal")->required();
    ca->add_option("--bins", a.bins, "Number of equal-width bins")->required();
    ca->add_option("--cache", a.cache, "Census cache directory");
    ca->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    ca->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* ct = app.add_subcommand("compare-tuples", "Tuple counts vs the density integral");
    ct->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    ct->add_option("--k", a.k, "Tuple size")->required();
    ct->add_option("--intervals", a.intervals, "Disjoint angle intervals a:b,...")->required();
    ct->add_option("--bounds", a.bounds, "Comma list of bounds")->required();
    ct->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    ct->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* vol = app.add_subcommand("volume", "Monte-Carlo volume of the coefficient body");
    vol->add_option("--m", a.m, "Half-degree parameter m >= 1")->required();
    vol->add_option("--bound", a.bound, "Bound H as p/q or decimal")->required();
    vol->add_option("--samples", a.samples, "Sample count")->required();
    vol->add_option("--seed", a.seed, "RNG seed")->required();
    vol->add_option("--out", a.out, "Output path (default: stdout)");

    CLI::App* sel = app.add_subcommand("selberg", "Evaluate the Selberg integral closed form");
    sel->add_option("--n", a.n, "Dimension n >= 0")->required();
    sel->add_option("--alpha", a.alpha, "alpha > 0")->required();
    sel->add_option("--beta", a.beta, "beta > 0")->required();
    sel->add_option("--gamma", a.gamma, "gamma >= 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (census->parsed()) return run_census(a);
        if (density->parsed()) return run_density(a);
        if (cc->parsed()) return run_compare_counts(a);
        if (ca->parsed()) return run_compare_angles(a);
        if (ct->parsed()) return run_compare_tuples(a);
        if (vol->parsed()) return run_volume(a);
        return run_selberg(a);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n  " << grammar_line(e.sub) << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace salem
