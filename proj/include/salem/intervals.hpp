#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "salem/rational.hpp"

namespace salem {

/// Angle endpoint a + b*pi with exact rational a, b. Lets boxes like
/// [0, pi]^k and [0, pi/2] be stated exactly (needed by the exact k=1
/// integration path); plain rational endpoints are the b = 0 case.
struct AnglePoint {
    Rat plain{0};
    Rat pi_mult{0};

    static AnglePoint rational(const Rat& a) { return {a, Rat(0)}; }
    static AnglePoint pi_times(const Rat& b) { return {Rat(0), b}; }

    double value() const {
        static const double pi = 4.0 * std::atan(1.0);
        return to_double(plain) + to_double(pi_mult) * pi;
    }

    /// Exact -cos(angle) when available: the angles 0, pi/3, pi/2, 2pi/3, pi
    /// (the pure pi-multiples with rational cosine).
    std::optional<Rat> exact_minus_cos() const {
        if (plain != 0) return std::nullopt;
        if (pi_mult == 0) return Rat(-1);
        if (pi_mult == Rat(1, 3)) return Rat(-1, 2);
        if (pi_mult == Rat(1, 2)) return Rat(0);
        if (pi_mult == Rat(2, 3)) return Rat(1, 2);
        if (pi_mult == 1) return Rat(1);
        return std::nullopt;
    }

    friend bool operator==(const AnglePoint& a, const AnglePoint& b) {
        return a.plain == b.plain && a.pi_mult == b.pi_mult;
    }

    std::string str() const;
};

/// One angle interval inside [0, pi].
struct AngleInterval {
    AnglePoint lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    static AngleInterval closed(AnglePoint a, AnglePoint b) { return {a, b, false, false}; }

    bool contains(double theta) const {
        double a = lo.value(), b = hi.value();
        if (lo_open ? !(theta > a) : !(theta >= a)) return false;
        if (hi_open ? !(theta < b) : !(theta <= b)) return false;
        return true;
    }
};

/// Conjunction of k angle intervals (the box I_1 x ... x I_k).
struct IntervalSpec {
    std::vector<AngleInterval> intervals;

    std::size_t k() const { return intervals.size(); }

    static IntervalSpec full_box(std::size_t k) {
        IntervalSpec spec;
        spec.intervals.assign(k, AngleInterval::closed(AnglePoint::rational(Rat(0)),
                                                       AnglePoint::pi_times(Rat(1))));
        return spec;
    }
};

/// Parse an angle endpoint: "pi", "pi/2", "3pi/4", "0.5pi", or a plain
/// rational/decimal string.
AnglePoint parse_angle_point(const std::string& text);

/// Parse "a:b[,a:b...]" into an IntervalSpec (closed intervals).
IntervalSpec parse_intervals(const std::string& text);

/// Validate every interval sits inside [0, pi] with lo <= hi; throws
/// DomainError otherwise.
void check_intervals_in_range(const IntervalSpec& spec);

/// True if the two intervals share interior measure.
bool intervals_overlap(const AngleInterval& a, const AngleInterval& b);

/// True if the two intervals have identical endpoints and flags.
bool intervals_equal(const AngleInterval& a, const AngleInterval& b);

} // namespace salem
