// Benchmark: OpenMP census enumeration (with integer prescreens) against the
// serial reference implementation, verifying they produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "salem/enumeration.hpp"
#include "salem/errors.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int m = 2;
    std::string bound = "5";
    if (argc > 1) {
        try {
            m = std::stoi(argv[1]);
        } catch (const std::exception&) {
            std::fprintf(stderr, "usage: %s [m] [bound]   (defaults: 2 5)\n", argv[0]);
            return 2;
        }
    }
    if (argc > 2) bound = argv[2];

    try {
        salem::Rat H = salem::rat_from_string(bound);

        auto t0 = std::chrono::steady_clock::now();
        salem::CensusSummary fast = salem::enumerate_census(m, H);
        double t_fast = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        salem::CensusSummary ref = salem::enumerate_census_serial(m, H);
        double t_ref = seconds_since(t0);

        bool identical = fast.class_count == ref.class_count &&
                         fast.irreducible_count == ref.irreducible_count &&
                         fast.records == ref.records;

        std::printf("census m=%d H=%s\n", m, bound.c_str());
        std::printf("  parallel+prescreen: %8.3f s  (class=%llu irreducible=%llu)\n", t_fast,
                    static_cast<unsigned long long>(fast.class_count),
                    static_cast<unsigned long long>(fast.irreducible_count));
        std::printf("  serial reference:   %8.3f s\n", t_ref);
        std::printf("  speedup: %.2fx   results identical: %s\n",
                    t_fast > 0 ? t_ref / t_fast : 0.0, identical ? "yes" : "NO");
        return identical ? 0 : 1;
    } catch (const salem::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
