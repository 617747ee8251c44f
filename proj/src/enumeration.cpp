#include "salem/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "salem/errors.hpp"

namespace salem {

// ---------------------------------------------------------------------------
// Angle points and interval specs
// ---------------------------------------------------------------------------

namespace {

// Rational enclosure of pi tight enough to decide the sign of a + b*pi for
// any endpoints this tool meets (exact zero happens only at a = b = 0).
const Rat& pi_lower() {
    static const Rat v = rat_from_string("3.141592653589793238462643383");
    return v;
}
const Rat& pi_upper() {
    static const Rat v = rat_from_string("3.141592653589793238462643384");
    return v;
}

/// Exact sign of a + b*pi.
int sign_of_combo(const Rat& a, const Rat& b) {
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    int slo = sign_of(a + b * (b > 0 ? pi_lower() : pi_upper()));
    int shi = sign_of(a + b * (b > 0 ? pi_upper() : pi_lower()));
    if (slo == shi) return slo;
    fail(errc::DomainError, "angle comparison too close to pi-enclosure resolution");
}

/// Exact three-way comparison of two angle endpoints.
int cmp_points(const AnglePoint& x, const AnglePoint& y) {
    return sign_of_combo(x.plain - y.plain, x.pi_mult - y.pi_mult);
}

bool point_in_interval_exact(const AnglePoint& p, const AngleInterval& iv) {
    int cl = cmp_points(p, iv.lo);
    if (cl < 0 || (cl == 0 && iv.lo_open)) return false;
    int ch = cmp_points(p, iv.hi);
    if (ch > 0 || (ch == 0 && iv.hi_open)) return false;
    return true;
}

/// Set-level (not just interior) intersection test; a shared closed endpoint
/// counts as overlap.
bool sets_overlap(const AngleInterval& a, const AngleInterval& b) {
    const AnglePoint& lo = cmp_points(a.lo, b.lo) >= 0 ? a.lo : b.lo;
    const AnglePoint& hi = cmp_points(a.hi, b.hi) <= 0 ? a.hi : b.hi;
    int c = cmp_points(lo, hi);
    if (c > 0) return false;
    if (c < 0) return true;
    return point_in_interval_exact(lo, a) && point_in_interval_exact(lo, b);
}

} // namespace

std::string AnglePoint::str() const {
    if (pi_mult == 0) return rat_to_string(plain);
    Rat b = pi_mult;
    b.canonicalize();
    std::string part;
    if (b.get_num() == 1)
        part = "pi";
    else if (b.get_num() == -1)
        part = "-pi";
    else
        part = b.get_num().get_str() + "pi";
    if (b.get_den() != 1) part += "/" + b.get_den().get_str();
    if (plain == 0) return part;
    if (sign_of(pi_mult) >= 0) return rat_to_string(plain) + "+" + part;
    return rat_to_string(plain) + part;
}

AnglePoint parse_angle_point(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(errc::DomainError, "empty angle literal");
    auto pos = s.find("pi");
    if (pos == std::string::npos) return AnglePoint::rational(rat_from_string(s));

    std::string pre = s.substr(0, pos), post = s.substr(pos + 2);
    Rat b(1);
    if (pre == "-")
        b = -1;
    else if (!pre.empty() && pre != "+") {
        if (pre.back() == '*') pre.pop_back();
        b = rat_from_string(pre);
    }
    if (!post.empty()) {
        if (post[0] != '/') fail(errc::DomainError, "malformed angle literal: " + text);
        Rat den = rat_from_string(post.substr(1));
        if (den == 0) fail(errc::DomainError, "zero denominator in angle literal: " + text);
        b /= den;
    }
    return AnglePoint::pi_times(b);
}

IntervalSpec parse_intervals(const std::string& text) {
    if (text.empty()) fail(errc::DomainError, "empty interval list");
    IntervalSpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto colon = item.find(':');
        if (colon == std::string::npos)
            fail(errc::DomainError, "interval must look like lo:hi, got '" + item + "'");
        AnglePoint lo = parse_angle_point(item.substr(0, colon));
        AnglePoint hi = parse_angle_point(item.substr(colon + 1));
        spec.intervals.push_back(AngleInterval::closed(lo, hi));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return spec;
}

void check_intervals_in_range(const IntervalSpec& spec) {
    if (spec.intervals.empty()) fail(errc::DomainError, "interval list is empty");
    for (const auto& iv : spec.intervals) {
        if (sign_of_combo(iv.lo.plain, iv.lo.pi_mult) < 0)
            fail(errc::DomainError, "interval endpoint below 0");
        if (sign_of_combo(iv.hi.plain, iv.hi.pi_mult - 1) > 0)
            fail(errc::DomainError, "interval endpoint above pi");
        if (cmp_points(iv.lo, iv.hi) > 0) fail(errc::DomainError, "interval has lo > hi");
    }
}

bool intervals_overlap(const AngleInterval& a, const AngleInterval& b) {
    const AnglePoint& lo = cmp_points(a.lo, b.lo) >= 0 ? a.lo : b.lo;
    const AnglePoint& hi = cmp_points(a.hi, b.hi) <= 0 ? a.hi : b.hi;
    return cmp_points(lo, hi) < 0;
}

bool intervals_equal(const AngleInterval& a, const AngleInterval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_open == b.lo_open && a.hi_open == b.hi_open;
}

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

IntPoly SalemRecord::reconstruct_p() const {
    std::size_t n = coeffs.size(); // m + 1
    std::vector<Int> c(2 * n + 1, Int(0));
    c[2 * n] = 1;
    c[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        c[2 * n - i] = coeffs[i - 1];
        c[i] = coeffs[i - 1];
    }
    return IntPoly(std::move(c));
}

IntPoly SalemRecord::reconstruct_q() const {
    std::size_t n = trace_coeffs.size(); // m + 1
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    for (std::size_t j = 1; j <= n; ++j) c[n - j] = trace_coeffs[j - 1];
    return IntPoly(std::move(c));
}

const char* reject_kind_name(RejectKind k) {
    switch (k) {
        case RejectKind::None: return "None";
        case RejectKind::NotSelfReciprocal: return "NotSelfReciprocal";
        case RejectKind::RootLayout: return "RootLayout";
        case RejectKind::Multiplicity: return "Multiplicity";
        case RejectKind::CyclotomicFactor: return "CyclotomicFactor";
    }
    return "None";
}

// ---------------------------------------------------------------------------
// Coefficient map
// ---------------------------------------------------------------------------

namespace {

template <class T>
T scalar_from_int(const Int& v);
template <>
double scalar_from_int<double>(const Int& v) {
    return v.get_d();
}
template <>
Rat scalar_from_int<Rat>(const Int& v) {
    return Rat(v);
}

} // namespace

template <class T>
std::vector<T> coefficient_map_z(const std::vector<T>& z) {
    std::size_t n = z.size(); // m + 1 trace variables
    if (n == 0) fail(errc::DomainError, "coefficient map needs at least one trace variable");

    // Elementary symmetric functions e_0..e_n of the trace variables.
    std::vector<T> e(n + 1, T(0));
    e[0] = T(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + z[i] * e[k - 1];

    // Expanding prod_i (t^2 - z_i t + 1), the coefficient of t^{2n-j} picks s
    // linear factors and u constant factors with s + 2u = j:
    //   a_j = (-1)^j sum_u C(n-j+2u, u) e_{j-2u}.
    std::vector<T> a(n, T(0));
    for (std::size_t j = 1; j <= n; ++j) {
        T acc(0);
        for (std::size_t u = 0; 2 * u <= j; ++u) {
            std::size_t s = j - 2 * u;
            acc = acc + scalar_from_int<T>(binomial(static_cast<unsigned long>(n - s),
                                                    static_cast<unsigned long>(u))) *
                            e[s];
        }
        if (j % 2 == 1) acc = -acc;
        a[j - 1] = acc;
    }
    return a;
}

template std::vector<double> coefficient_map_z<double>(const std::vector<double>&);
template std::vector<Rat> coefficient_map_z<Rat>(const std::vector<Rat>&);

std::vector<double> coefficient_map(double y, const std::vector<double>& thetas) {
    if (!(y > 1.0)) fail(errc::DomainError, "coefficient map needs y > 1");
    static const double pi = 4.0 * std::atan(1.0);
    std::vector<double> z;
    z.reserve(thetas.size() + 1);
    z.push_back(y + 1.0 / y);
    for (double t : thetas) {
        if (!(t >= 0.0 && t <= pi)) fail(errc::DomainError, "angles must lie in [0, pi]");
        z.push_back(2.0 * std::cos(t));
    }
    return coefficient_map_z<double>(z);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

/// Trace-domain cyclotomic divisors: psi_d = trace_transform(Phi_d) for
/// d >= 3 with phi(d) <= 2m (Phi_d is self-reciprocal of even degree there);
/// Phi_d | P iff psi_d | Q. The boundary cases d = 1, 2 are the roots
/// z = +-2 of Q.
struct CycloTable {
    std::vector<std::pair<long, IntPoly>> psi; // ascending d
};

const CycloTable& cyclo_table(int m) {
    static std::map<int, CycloTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    CycloTable table;
    long bound = 2L * m;
    // phi(d) >= sqrt(d/2), so phi(d) <= bound forces d <= 2 bound^2 + 1.
    for (long d = 3; d <= 2 * bound * bound + 1; ++d)
        if (euler_phi(d) <= bound)
            table.psi.emplace_back(d, trace_transform(cyclotomic_poly(d)));
    return cache.emplace(m, std::move(table)).first->second;
}

/// Multiplicity precedence: a repeated root disqualifies before any
/// cyclotomic divisor is reported.
RejectReason irreducibility_reason(const IntPoly& Q, const CycloTable& table) {
    RatPoly qr = to_rat(Q);
    if (poly_gcd(qr, qr.derivative()).degree() > 0) return {RejectKind::Multiplicity, 0};
    if (Q(Int(2)) == 0) return {RejectKind::CyclotomicFactor, 1};
    if (Q(Int(-2)) == 0) return {RejectKind::CyclotomicFactor, 2};
    for (const auto& [d, psi] : table.psi)
        if (psi.degree() <= Q.degree() && exact_divides(psi, Q))
            return {RejectKind::CyclotomicFactor, static_cast<int>(d)};
    return {};
}

/// m roots in [-2,2] plus exactly one in (2,B], counted with multiplicity.
bool has_class_layout(const IntPoly& Q, int m, const Rat& B) {
    long circle = 0, outside = 0;
    RatPoly g = to_rat(Q);
    static const RootInterval circle_iv = RootInterval::closed(Rat(-2), Rat(2));
    RootInterval top_iv = RootInterval::open_closed(Rat(2), B);
    while (g.degree() > 0) {
        circle += sturm_root_count(g, circle_iv);
        outside += sturm_root_count(g, top_iv);
        if (circle > m || outside > 1) return false;
        g = poly_gcd(g, g.derivative());
    }
    return circle == m && outside == 1;
}

} // namespace

ClassVerdict classify(const IntPoly& P, int m, const Rat& H) {
    if (m < 1) fail(errc::DomainError, "classify needs m >= 1");
    if (P.degree() != 2L * (m + 1))
        fail(errc::DegreeMismatch, "classify needs degree exactly 2(m+1)");
    if (H <= 1) fail(errc::BoundTooSmall, "classify needs bound H > 1");

    ClassVerdict v;
    if (!P.is_monic() || !P.is_self_reciprocal()) {
        v.reject_reason = {RejectKind::NotSelfReciprocal, 0};
        return v;
    }
    IntPoly Q = trace_transform(P);
    Rat B = H + Rat(1) / H;
    if (!has_class_layout(Q, m, B)) {
        v.reject_reason = {RejectKind::RootLayout, 0};
        return v;
    }
    v.in_class = true;
    v.reject_reason = irreducibility_reason(Q, cyclo_table(m));
    v.irreducible = v.reject_reason.kind == RejectKind::None;
    return v;
}

// ---------------------------------------------------------------------------
// Root extraction
// ---------------------------------------------------------------------------

namespace {

double nudge(double x, int ulps) {
    double inf = ulps > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    for (int i = std::abs(ulps); i > 0; --i) x = std::nextafter(x, inf);
    return x;
}

double alpha_of(double z) { return 0.5 * (z + std::sqrt(std::max(z * z - 4.0, 0.0))); }

} // namespace

SalemValue salem_value_and_angles(const IntPoly& Q, double tol) {
    if (Q.is_zero() || !Q.is_monic()) fail(errc::DomainError, "trace polynomial must be monic");
    if (!(tol > 0.0)) fail(errc::DomainError, "tolerance must be positive");
    long n = Q.degree();
    if (n < 2) fail(errc::DomainError, "trace polynomial needs degree >= 2");
    int m = static_cast<int>(n - 1);

    // Cauchy bound: every root satisfies |z| < 1 + max|coeff|.
    Int maxc(1);
    for (const Int& c : Q.c)
        if (abs(c) > maxc) maxc = abs(c);
    Rat top = Rat(maxc + 2);

    if (root_count_with_multiplicity(Q, RootInterval::closed(Rat(-2), Rat(2))) != m ||
        root_count_with_multiplicity(Q, RootInterval::open_closed(Rat(2), top)) != 1)
        fail(errc::LayoutViolation, "trace polynomial lacks the class root layout");

    RatPoly qr = to_rat(Q);

    // z0 bisection: Q < 0 strictly on (2, z0) and >= 0 on [z0, top] (every
    // other factor is positive past 2), so a plain sign bracket suffices.
    Rat a(2), b = top;
    double alo = 0.0, ahi = 0.0;
    for (int iter = 0;; ++iter) {
        alo = nudge(alpha_of(to_double(a)), -4);
        ahi = nudge(alpha_of(to_double(b)), 4);
        if (a == b) break; // exact rational root
        if (ahi - alo <= tol && alo > 1.0) break;
        if (iter > 4000) fail(errc::ToleranceNotMet, "alpha enclosure refinement stalled");
        Rat mid = (a + b) / 2;
        int s = sign_of(qr(mid));
        if (s == 0) {
            a = b = mid;
            continue;
        }
        (s < 0 ? a : b) = mid;
    }
    if (!(alo > 1.0)) alo = nudge(1.0, 1); // z0 > 2 guarantees alpha > 1

    // Circle roots: isolate the distinct roots of the squarefree part on
    // [-2,2], then read multiplicities back off Q.
    IntPoly qsf = squarefree_part(Q);
    RatPoly sr = to_rat(qsf);
    std::vector<std::pair<Rat, Rat>> enclosures;
    if (sr(Rat(-2)) == 0) enclosures.emplace_back(Rat(-2), Rat(-2));

    // Width target in z for circle-root enclosures, floored near double
    // resolution; only the enclosure midpoint feeds the reported angle.
    double zwidth_target = std::max(tol * 1e-2, 1e-15);

    // Shrink an isolating interval (one distinct root, open at lo) to width
    // <= zwidth_target.  Either endpoint may itself be a *different* root of
    // sr; clear that first so a plain sign bracket applies.
    auto refine_simple = [&](Rat lo, Rat hi, bool hi_open) -> std::pair<Rat, Rat> {
        if (!hi_open && sr(hi) == 0) return {hi, hi};
        while (sr(lo) == 0 || sr(hi) == 0) {
            Rat mid = (lo + hi) / 2;
            if (sr(mid) == 0) return {mid, mid}; // interior root is the root
            // The counted root r is strictly interior, so r > mid exactly
            // when the open interval (mid, hi) holds one root.
            if (sturm_root_count(qsf, RootInterval::open(mid, hi)) == 1)
                lo = mid;
            else
                hi = mid;
        }
        int slo = sign_of(sr(lo));
        while (to_double(hi) - to_double(lo) > zwidth_target) {
            Rat mid = (lo + hi) / 2;
            int s = sign_of(sr(mid));
            if (s == 0) return {mid, mid};
            if (s == slo)
                lo = mid;
            else
                hi = mid;
        }
        return {lo, hi};
    };

    std::vector<RootInterval> pending;
    pending.push_back(RootInterval::open_closed(Rat(-2), Rat(2)));
    while (!pending.empty()) {
        RootInterval iv = pending.back();
        pending.pop_back();
        long cnt = sturm_root_count(qsf, iv);
        if (cnt == 0) continue;
        if (cnt == 1) {
            enclosures.push_back(refine_simple(iv.lo, iv.hi, iv.hi_open));
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sr(mid) == 0) {
            enclosures.emplace_back(mid, mid);
            pending.push_back(RootInterval::open(iv.lo, mid));
            pending.push_back(RootInterval::open_closed(mid, iv.hi));
        } else {
            pending.push_back({iv.lo, mid, iv.lo_open, false});
            pending.push_back(RootInterval::open_closed(mid, iv.hi));
        }
    }

    SalemValue out;
    out.alpha_lo = alo;
    out.alpha_hi = ahi;
    for (const auto& [rlo, rhi] : enclosures) {
        long mult = root_count_with_multiplicity(Q, RootInterval::closed(rlo, rhi));
        double z = 0.5 * (to_double(rlo) + to_double(rhi));
        double t = std::acos(std::clamp(z / 2.0, -1.0, 1.0));
        for (long i = 0; i < mult; ++i) out.angles.push_back(t);
    }
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct CandidateBox {
    int m = 0;
    Rat H, B;
    std::vector<long> bound; // |b_j| <= bound[j-1], j = 1..m+1

    long b1_values() const { return 2 * bound[0] + 1; }
};

CandidateBox make_box(int m, const Rat& H) {
    CandidateBox box;
    box.m = m;
    box.H = H;
    box.B = H + Rat(1) / H;
    double size = 1.0;
    for (long j = 1; j <= m + 1; ++j) {
        // Elementary-symmetric bound over m roots in [-2,2] and one in (2,B].
        Rat bd = Rat(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
                     pow_rat(Rat(2), j) +
                 box.B *
                     Rat(binomial(static_cast<unsigned long>(m),
                                  static_cast<unsigned long>(j - 1))) *
                     pow_rat(Rat(2), j - 1);
        Int f = floor_rat(bd);
        if (!f.fits_slong_p()) fail(errc::DomainError, "enumeration bound overflows");
        box.bound.push_back(f.get_si());
        size *= 2.0 * static_cast<double>(f.get_si()) + 1.0;
    }
    if (size > 8.6e9) fail(errc::DomainError, "enumeration box too large for a desk-scale census");
    return box;
}

/// Integer prescreen data for the three necessary sign conditions
/// Q(2) <= 0, (-1)^{m+1} Q(-2) >= 0, Q(B) >= 0 (B scaled to an integer
/// evaluation); only used when the extremes provably fit in int64.
struct Prescreen {
    bool usable = false;
    int m = 0;
    std::vector<long long> vpow_scaled; // (pq)^j (p^2+q^2)^{n-j}, j = 0..n

    static Prescreen make(const CandidateBox& box) {
        Prescreen ps;
        ps.m = box.m;
        long n = box.m + 1;
        // B = num/den in lowest terms.  den^{2n} * Q(B) is the integer
        //   sum_j b_j (num*den)^j * den^{2(n-j)} ... but a tighter scaling
        // uses B = (H^2+1)/H: with H = num/den, B = (num^2+den^2)/(num*den),
        // so (num*den)^n Q(B) = sum_j b_j (num*den)^j (num^2+den^2)^{n-j}
        // with b_0 = 1, and num*den > 0 keeps the sign.
        Int num = box.H.get_num(), den = box.H.get_den();
        Int pq = num * den;
        Int s = num * num + den * den;
        std::vector<Int> script(n + 1);
        for (long j = 0; j <= n; ++j) script[j] = pow_int(pq, j) * pow_int(s, n - j);
        // overflow check with the box bounds
        Int worst = script[0];
        for (long j = 1; j <= n; ++j) worst += Int(box.bound[j - 1]) * script[j];
        if (worst < Int("4611686018427387904")) { // 2^62
            ps.usable = true;
            for (long j = 0; j <= n; ++j) ps.vpow_scaled.push_back(script[j].get_si());
        }
        return ps;
    }

    /// d = (b_1..b_{m+1}); true if the candidate survives all three signs.
    bool pass(const std::vector<long>& d) const {
        long n = m + 1;
        long long q2 = 1, qm2 = 1;
        for (long j = 1; j <= n; ++j) {
            q2 = q2 * 2 + d[j - 1];
            qm2 = qm2 * -2 + d[j - 1];
        }
        if (q2 > 0) return false;
        if ((n % 2 == 0) ? (qm2 < 0) : (qm2 > 0)) return false;
        long long qb = vpow_scaled[0];
        for (long j = 1; j <= n; ++j) qb += d[j - 1] * vpow_scaled[j];
        return qb >= 0;
    }
};

IntPoly q_from_digits(const std::vector<long>& d) {
    long n = static_cast<long>(d.size());
    std::vector<Int> c(n + 1);
    c[n] = 1;
    for (long j = 1; j <= n; ++j) c[n - j] = d[j - 1];
    return IntPoly(std::move(c));
}

struct SliceResult {
    std::uint64_t in_class = 0;
    std::uint64_t irreducible = 0;
    std::vector<SalemRecord> records;
};

/// Classify every candidate with first trace coefficient b1; tail
/// coefficients iterate in ascending lexicographic order.
void run_slice(long b1, const CandidateBox& box, const CycloTable& table,
               const Prescreen* prescreen, double tol, SliceResult& out) {
    int m = box.m;
    std::vector<long> d(m + 1);
    d[0] = b1;
    for (int i = 1; i <= m; ++i) d[i] = -box.bound[i];
    while (true) {
        if (prescreen == nullptr || prescreen->pass(d)) {
            IntPoly Q = q_from_digits(d);
            if (has_class_layout(Q, m, box.B)) {
                ++out.in_class;
                RejectReason reason = irreducibility_reason(Q, table);
                if (reason.kind == RejectKind::None) {
                    ++out.irreducible;
                    SalemRecord rec;
                    rec.m = m;
                    IntPoly P = inverse_trace_transform(Q);
                    for (long i = 1; i <= m + 1; ++i)
                        rec.coeffs.push_back(P.c[static_cast<std::size_t>(2 * (m + 1) - i)]);
                    for (long j = 1; j <= m + 1; ++j)
                        rec.trace_coeffs.push_back(Q.c[static_cast<std::size_t>(m + 1 - j)]);
                    SalemValue sv = salem_value_and_angles(Q, tol);
                    rec.alpha_lo = sv.alpha_lo;
                    rec.alpha_hi = sv.alpha_hi;
                    rec.angles = std::move(sv.angles);
                    out.records.push_back(std::move(rec));
                }
            }
        }
        int i = m;
        while (i >= 1 && d[i] == box.bound[i]) {
            d[i] = -box.bound[i];
            --i;
        }
        if (i == 0) break;
        ++d[i];
    }
}

CensusSummary census_impl(int m, const Rat& H, const CensusConfig& cfg, bool prescreen_on,
                          bool parallel) {
    if (m < 1) fail(errc::DomainError, "census needs m >= 1");
    if (H <= 1) fail(errc::BoundTooSmall, "census needs bound H > 1");
    if (!(cfg.tol > 0.0)) fail(errc::DomainError, "census tolerance must be positive");

    CandidateBox box = make_box(m, H);
    const CycloTable& table = cyclo_table(m);
    Prescreen ps = Prescreen::make(box);
    const Prescreen* psp = (prescreen_on && ps.usable) ? &ps : nullptr;

    long nb1 = box.b1_values();
    std::vector<SliceResult> slices(static_cast<std::size_t>(nb1));

    if (parallel) {
        int threads = cfg.jobs;
#ifdef _OPENMP
        if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
        for (long s = 0; s < nb1; ++s)
            run_slice(-box.bound[0] + s, box, table, psp, cfg.tol,
                      slices[static_cast<std::size_t>(s)]);
#ifndef _OPENMP
        (void)threads;
#endif
    } else {
        for (long s = 0; s < nb1; ++s)
            run_slice(-box.bound[0] + s, box, table, psp, cfg.tol,
                      slices[static_cast<std::size_t>(s)]);
    }

    CensusSummary sum;
    sum.m = m;
    sum.H = H;
    for (auto& sl : slices) {
        sum.class_count += sl.in_class;
        sum.irreducible_count += sl.irreducible;
        for (auto& r : sl.records) sum.records.push_back(std::move(r));
    }
    sum.reducible_count = sum.class_count - sum.irreducible_count;
    return sum;
}

} // namespace

CensusSummary enumerate_census(int m, const Rat& H, const CensusConfig& cfg) {
    return census_impl(m, H, cfg, /*prescreen_on=*/true, /*parallel=*/true);
}

CensusSummary enumerate_census_serial(int m, const Rat& H, const CensusConfig& cfg) {
    return census_impl(m, H, cfg, /*prescreen_on=*/false, /*parallel=*/false);
}

// ---------------------------------------------------------------------------
// Tuple counting
// ---------------------------------------------------------------------------

std::uint64_t empirical_tuple_count(const std::vector<SalemRecord>& records,
                                    const IntervalSpec& iv) {
    check_intervals_in_range(iv);
    for (std::size_t i = 0; i < iv.k(); ++i)
        for (std::size_t j = i + 1; j < iv.k(); ++j)
            if (sets_overlap(iv.intervals[i], iv.intervals[j]))
                fail(errc::OverlappingIntervals, "tuple-count intervals must be pairwise disjoint");
    if (!records.empty() && iv.k() > static_cast<std::size_t>(records.front().m))
        fail(errc::DomainError, "tuple-count needs k <= m");

    std::uint64_t total = 0;
    for (const SalemRecord& rec : records) {
        std::uint64_t prod = 1;
        for (const AngleInterval& box : iv.intervals) {
            std::uint64_t c = 0;
            for (double t : rec.angles)
                if (box.contains(t)) ++c;
            prod *= c;
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

} // namespace salem
