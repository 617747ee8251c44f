#include "salem/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "salem/enumeration.hpp"
#include "salem/errors.hpp"
#include "salem/kernel.hpp"

namespace salem {

namespace {

const double kPi = 4.0 * std::atan(1.0);

/// Legendre P_n(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre_and_deriv(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1) fail(errc::DomainError, "gauss_legendre needs n >= 1");
    static std::map<int, QuadRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // i-th root counted from +1 downward; Newton from the Chebyshev guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 64; ++iter) {
            auto [p, dp] = legendre_and_deriv(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre_and_deriv(n, x);
        (void)p;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return cache.emplace(n, std::move(rule)).first->second;
}

QuadRule tanh_sinh(int n) {
    if (n < 2) fail(errc::DomainError, "tanh_sinh needs n >= 2");
    // Trapezoid in u over [-a,a] of the tanh((pi/2)sinh u) substitution; at
    // a = 3 the endpoint nodes sit ~3e-14 inside the interval ends.
    const double a = 3.0;
    const double h = 2.0 * a / (n - 1);
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double u = -a + i * h;
        double s = 0.5 * kPi * std::sinh(u);
        double c = std::cosh(s);
        rule.nodes[i] = std::tanh(s);
        rule.weights[i] = h * 0.5 * kPi * std::cosh(u) / (c * c);
    }
    return rule;
}

namespace {

/// Unchecked closed-form Jacobian; vanishes naturally on the boundary
/// (theta in {0,pi}, equal angles, y = 1), so Monte-Carlo can call it on
/// raw samples.
double jacobian_closed_raw(double y, const std::vector<double>& thetas) {
    std::size_t m = thetas.size();
    double j = std::pow(2.0, 0.5 * static_cast<double>(m) * static_cast<double>(m + 1));
    j *= 1.0 - 1.0 / (y * y);
    double z0 = y + 1.0 / y;
    for (double t : thetas) {
        j *= z0 - 2.0 * std::cos(t);
        j *= std::sin(t);
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = p + 1; r < m; ++r)
            j *= std::fabs(std::cos(thetas[p]) - std::cos(thetas[r]));
    return j;
}

} // namespace

double jacobian_closed(double y, const std::vector<double>& thetas) {
    if (!(y > 1.0)) fail(errc::DomainError, "jacobian needs y > 1");
    for (double t : thetas)
        if (!(t > 0.0 && t < kPi)) fail(errc::DomainError, "jacobian angles must lie in (0, pi)");
    return jacobian_closed_raw(y, thetas);
}

double jacobian_numeric(double y, const std::vector<double>& thetas, double h) {
    if (!(h > 0.0)) fail(errc::SingularStencil, "finite-difference step must be positive");
    std::size_t n = thetas.size() + 1;
    std::vector<double> v(n);
    v[0] = y;
    std::copy(thetas.begin(), thetas.end(), v.begin() + 1);
    for (double c : v)
        if (c + h == c || c - h == c)
            fail(errc::SingularStencil, "finite-difference step underflows at this point");

    auto eval = [&](const std::vector<double>& w) {
        return coefficient_map(w[0], std::vector<double>(w.begin() + 1, w.end()));
    };

    // Column j = d(a_1..a_{m+1})/d v_j by central differences.
    std::vector<double> jac(n * n);
    std::vector<double> w = v;
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = v[j] + h;
        std::vector<double> fp = eval(w);
        w[j] = v[j] - h;
        std::vector<double> fm = eval(w);
        w[j] = v[j];
        for (std::size_t i = 0; i < n; ++i) jac[i * n + j] = (fp[i] - fm[i]) / (2.0 * h);
    }

    // |det| by LU with partial pivoting.
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::fabs(jac[r * n + k]) > std::fabs(jac[piv * n + k])) piv = r;
        if (jac[piv * n + k] == 0.0) return 0.0;
        if (piv != k)
            for (std::size_t c = 0; c < n; ++c) std::swap(jac[k * n + c], jac[piv * n + c]);
        det *= jac[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            double f = jac[r * n + k] / jac[k * n + k];
            for (std::size_t c = k; c < n; ++c) jac[r * n + c] -= f * jac[k * n + c];
        }
    }
    return std::fabs(det);
}

namespace {

/// The exact diagonal S_N(x,x) as a univariate polynomial.
RatPoly kernel_diagonal(const BivarPoly& s) {
    RatPoly out;
    for (std::size_t i = 0; i < s.cx.size(); ++i)
        for (std::size_t j = 0; j < s.cx[i].c.size(); ++j) {
            if (out.c.size() <= i + j) out.c.resize(i + j + 1, Rat(0));
            out.c[i + j] += s.cx[i].c[j];
        }
    out.normalize();
    return out;
}

} // namespace

double integrate_rho(int m, int k, const IntervalSpec& iv, const QuadratureSpec& q) {
    if (m < 1) fail(errc::DomainError, "integrate_rho needs m >= 1");
    if (k < 1 || k > m) fail(errc::DomainError, "integrate_rho needs 1 <= k <= m");
    if (static_cast<int>(iv.k()) != k) fail(errc::DomainError, "interval count must equal k");
    if (q.nodes < 2) fail(errc::DomainError, "quadrature needs nodes >= 2");
    check_intervals_in_range(iv);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!intervals_equal(iv.intervals[i], iv.intervals[j]) &&
                intervals_overlap(iv.intervals[i], iv.intervals[j]))
                fail(errc::OverlappingIntervals,
                     "density-integral intervals must be pairwise disjoint or identical");

    auto ker = kernel_for(m);

    if (k == 1) {
        // Substituting x = -cos(theta) turns sin(theta) R_1(-cos theta) into
        // the plain polynomial S(x,x); integrate its antiderivative exactly.
        RatPoly f = kernel_diagonal(ker->S).antiderivative();
        const AngleInterval& iv0 = iv.intervals[0];
        auto xlo = iv0.lo.exact_minus_cos();
        auto xhi = iv0.hi.exact_minus_cos();
        if (xlo && xhi) return to_double(f(*xhi) - f(*xlo));
        double a = xlo ? to_double(*xlo) : -std::cos(iv0.lo.value());
        double b = xhi ? to_double(*xhi) : -std::cos(iv0.hi.value());
        return f.eval_double(b) - f.eval_double(a);
    }

    // Map intervals to x = -cos(theta) space (orientation preserving).
    std::vector<double> lo_x(k), hi_x(k);
    for (int i = 0; i < k; ++i) {
        auto xa = iv.intervals[i].lo.exact_minus_cos();
        auto xb = iv.intervals[i].hi.exact_minus_cos();
        lo_x[i] = xa ? to_double(*xa) : -std::cos(iv.intervals[i].lo.value());
        hi_x[i] = xb ? to_double(*xb) : -std::cos(iv.intervals[i].hi.value());
    }

    // Per-variable degree of R_k is at most 2d: each variable enters exactly
    // two Pfaffian factors, each polynomial of degree <= d in it.
    std::size_t dmax = 1;
    for (const BivarTable* t : {&ker->S_tab, &ker->D_tab, &ker->I_tab}) {
        if (t->nx > 0) dmax = std::max(dmax, t->nx - 1);
        if (t->ny > 0) dmax = std::max(dmax, t->ny - 1);
    }
    // Integrating the chain inside-out, level t sees degree D_t = 2d at the
    // innermost level and D_t = 2d + D_{t+1} + 1 above it (the inner
    // antiderivative is evaluated at this level's variable).
    std::vector<int> level_nodes(k);
    {
        long deg = 0;
        for (int t = k - 1; t >= 0; --t) {
            deg = (t == k - 1) ? long(2 * dmax) : long(2 * dmax) + deg + 1;
            int need = static_cast<int>(deg / 2 + 1); // exact for degree 2n-1
            if (q.scheme == QuadScheme::GaussLegendre && need > q.nodes)
                fail(errc::ToleranceNotMet,
                     "quadrature budget too small: level needs " + std::to_string(need) +
                         " nodes, budget " + std::to_string(q.nodes));
            level_nodes[t] = (q.scheme == QuadScheme::GaussLegendre) ? need : q.nodes;
        }
    }
    std::vector<QuadRule> rules(k);
    for (int t = 0; t < k; ++t)
        rules[t] = (q.scheme == QuadScheme::GaussLegendre) ? gauss_legendre(level_nodes[t])
                                                           : tanh_sinh(level_nodes[t]);

    bool all_equal = true;
    for (int i = 1; i < k; ++i)
        if (!intervals_equal(iv.intervals[0], iv.intervals[i])) all_equal = false;

    // Box integral of the symmetric R_k = sum over orderings sigma of the
    // ascending-chain integral with level t constrained to interval
    // sigma(t); on each chain the kernel's sign terms are constant, so the
    // integrand is piecewise polynomial (split at interior interval
    // endpoints).
    struct Chain {
        int k;
        const std::vector<double>&lo, &hi;
        const std::vector<QuadRule>& rules;
        const KernelSet& ker;
        const std::vector<int>& ord;

        double run(int t, double prev, std::vector<double>& pts) const {
            double a = std::max(lo[ord[t]], prev);
            double b = hi[ord[t]];
            if (!(a < b)) return 0.0;
            std::vector<double> cuts{a, b};
            for (int s = t + 1; s < k; ++s) {
                if (lo[ord[s]] > a && lo[ord[s]] < b) cuts.push_back(lo[ord[s]]);
                if (hi[ord[s]] > a && hi[ord[s]] < b) cuts.push_back(hi[ord[s]]);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            const QuadRule& rule = rules[t];
            double total = 0.0;
            for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
                double half = 0.5 * (cuts[seg + 1] - cuts[seg]);
                double mid = 0.5 * (cuts[seg + 1] + cuts[seg]);
                for (std::size_t idx = 0; idx < rule.nodes.size(); ++idx) {
                    double y = mid + half * rule.nodes[idx];
                    pts[t] = y;
                    double inner = (t + 1 == k) ? correlation_eval(ker, pts)
                                                : run(t + 1, y, pts);
                    total += half * rule.weights[idx] * inner;
                }
            }
            return total;
        }
    };

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> ord(k);
        for (int i = 0; i < k; ++i) ord[i] = i;
        if (all_equal) {
            perms.push_back(ord);
        } else {
            do perms.push_back(ord);
            while (std::next_permutation(ord.begin(), ord.end()));
        }
    }

    // Flatten level-0 work into independent tasks; per-task results are
    // reduced in index order so the value is thread-count independent.
    struct Task {
        const std::vector<int>* ord;
        double y, w;
    };
    std::vector<Task> tasks;
    for (const auto& ord : perms) {
        double a = lo_x[ord[0]], b = hi_x[ord[0]];
        if (!(a < b)) continue;
        std::vector<double> cuts{a, b};
        for (int s = 1; s < k; ++s) {
            if (lo_x[ord[s]] > a && lo_x[ord[s]] < b) cuts.push_back(lo_x[ord[s]]);
            if (hi_x[ord[s]] > a && hi_x[ord[s]] < b) cuts.push_back(hi_x[ord[s]]);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        const QuadRule& rule = rules[0];
        for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
            double half = 0.5 * (cuts[seg + 1] - cuts[seg]);
            double mid = 0.5 * (cuts[seg + 1] + cuts[seg]);
            for (std::size_t idx = 0; idx < rule.nodes.size(); ++idx)
                tasks.push_back({&ord, mid + half * rule.nodes[idx], half * rule.weights[idx]});
        }
    }

    std::vector<double> partial(tasks.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long long ti = 0; ti < static_cast<long long>(tasks.size()); ++ti) {
        const Task& task = tasks[ti];
        Chain chain{k, lo_x, hi_x, rules, *ker, *task.ord};
        std::vector<double> pts(k);
        pts[0] = task.y;
        partial[ti] = task.w * chain.run(1, task.y, pts);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    if (all_equal) {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        total *= fact;
    }
    return total;
}

namespace {

/// splitmix64 finalizer; v(key, t) = mix64(key + t * golden) is the
/// splitmix64 output stream, usable as a pure counter-based generator.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline double unit_double(std::uint64_t v) {
    return static_cast<double>(v >> 11) * 0x1.0p-53; // [0,1)
}

} // namespace

McResult mc_volume(int m, const Rat& H, const McSpec& mc) {
    if (m < 1) fail(errc::DomainError, "mc_volume needs m >= 1");
    if (H <= 1) fail(errc::BoundTooSmall, "mc_volume needs H > 1");
    if (mc.samples < 1) fail(errc::DomainError, "mc_volume needs at least one sample");

    const double hd = to_double(H);
    double measure = (hd - 1.0); // (1,H] x {0 <= t_1 <= ... <= t_m <= pi}
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) fact *= i;
    measure *= std::pow(kPi, m) / fact;

    // Fixed-size blocks accumulated in block order: estimates are
    // bit-identical for a given seed at any thread count.
    const long long block = 4096;
    const long long nblocks = (mc.samples + block - 1) / block;
    std::vector<double> bsum(nblocks, 0.0), bsq(nblocks, 0.0);

#pragma omp parallel for schedule(dynamic)
    for (long long bi = 0; bi < nblocks; ++bi) {
        double s = 0.0, s2 = 0.0;
        std::vector<double> thetas(m);
        long long lo = bi * block, hi = std::min(mc.samples, (bi + 1) * block);
        for (long long i = lo; i < hi; ++i) {
            std::uint64_t key = mix64(mc.seed + static_cast<std::uint64_t>(i + 1) * kGolden);
            double u0 = unit_double(mix64(key + kGolden));
            double y = 1.0 + (1.0 - u0) * (hd - 1.0); // (1, H]
            for (int t = 0; t < m; ++t)
                thetas[t] = kPi * unit_double(mix64(key + static_cast<std::uint64_t>(t + 2) * kGolden));
            std::sort(thetas.begin(), thetas.end());
            double j = jacobian_closed_raw(y, thetas);
            s += j;
            s2 += j * j;
        }
        bsum[bi] = s;
        bsq[bi] = s2;
    }

    double sum = 0.0, sq = 0.0;
    for (long long bi = 0; bi < nblocks; ++bi) {
        sum += bsum[bi];
        sq += bsq[bi];
    }
    const double n = static_cast<double>(mc.samples);
    double mean = sum / n;
    McResult out;
    out.estimate = mean * measure;
    if (mc.samples > 1) {
        double var = (sq - n * mean * mean) / (n - 1.0);
        if (var < 0.0) var = 0.0;
        out.stderr_ = std::sqrt(var / n) * measure;
    }
    return out;
}

} // namespace salem
