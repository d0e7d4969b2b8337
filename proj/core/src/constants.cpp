#include "closedlab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "closedlab/closed.hpp"
#include "closedlab/parallel.hpp"

namespace closedlab {

namespace {

constexpr double kPhi = 1.6180339887498948482;

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

}  // namespace

double regime2_bound(double xi, double alpha) {
    require(xi > 0, "extension ratio must be positive");
    require(alpha >= 1.4 && alpha <= 2.0, "regime 2 covers exponents in [1.4, 2]");
    double one_plus = 1.0 + xi;
    return (1.0 / 6.0 + xi * (alpha - 1.0) / (alpha * alpha) + xi * xi / 2.0) / (one_plus * one_plus);
}

double regime2_optimal_xi(double alpha) {
    require(alpha >= 1.4 && alpha <= 2.0, "regime 2 covers exponents in [1.4, 2]");
    return (alpha * alpha + 3.0 - 3.0 * alpha) / (3.0 * (alpha * alpha + 1.0 - alpha));
}

double regime3_bound(double t, double z) {
    require(t >= 0.4 && t <= 0.5, "regime 3 uses t = 1/alpha in [0.4, 0.5]");
    require(z > 0, "z must be positive");
    double zm = z - 1.0;
    double tm = 3.0 * t - 1.0;
    return (1.0 / 6.0 + zm * (1.0 - 2.0 * t) + zm * zm + 9.0 * tm * tm / 80.0) / (z * z);
}

double regime3_optimal_z(double t) {
    require(t >= 0.4 && t <= 0.5, "regime 3 uses t = 1/alpha in [0.4, 0.5]");
    return (67.0 + 318.0 * t + 243.0 * t * t) / (120.0 * (1.0 + 2.0 * t));
}

double regime4_bound(double beta) {
    require(beta >= 0.25 && beta <= 2.0 / 7.0, "regime 4 uses beta = 1/(alpha+1) in [1/4, 2/7]");
    return 1.0 / 6.0 + 13.0 / 24.0 * beta * beta - beta / 6.0;
}

double regime_bound(double alpha) {
    require(alpha > 1.0, "exponent must exceed 1");
    if (alpha <= 1.4) return 1.0 / 7.0;
    if (alpha <= 2.0) return 13.0 / 80.0;
    if (alpha <= 2.5) return 967.0 / 5827.0;
    return 8.0 / 49.0;
}

BoundPoint bound_point(double alpha, double xi) {
    require(alpha > 1.0, "exponent must exceed 1");
    require(xi > 0, "extension ratio must be positive");
    BoundPoint p;
    p.alpha = alpha;
    p.xi = xi;
    p.t = 1.0 / alpha;
    p.z = 1.0 + xi;
    p.beta = 1.0 / (alpha + 1.0);
    if (alpha <= 1.4)
        p.value = 1.0 / 7.0;
    else if (alpha <= 2.0)
        p.value = regime2_bound(xi, alpha);
    else if (alpha <= 2.5)
        p.value = regime3_bound(p.t, p.z);
    else
        p.value = regime4_bound(std::clamp(p.beta, 0.25, 2.0 / 7.0));
    return p;
}

std::pair<double, double> fibonacci_constant_bounds() {
    double phi3 = kPhi * kPhi * kPhi;
    double phi9 = phi3 * phi3 * phi3;
    double lower = (phi3 + 3.0) / phi9;
    double upper = (5.0 * kPhi + 3.0) / (kPhi * kPhi * (phi3 + 2.0) * (phi3 + 2.0));
    return {lower, upper};
}

SupremumBounds supremum_constant_bounds() {
    return {fibonacci_constant_bounds().first, Rational(967, 5827)};
}

namespace {

struct ScanBest {
    long long cl = 0;
    std::size_t length = 0;
    std::size_t offset = 0;
    bool valid = false;

    // ratio cl/length^2; ties prefer the shorter, then the earlier window
    bool better_than(const ScanBest& other) const {
        if (!valid) return false;
        if (!other.valid) return true;
        __int128 lhs = static_cast<__int128>(cl) * other.length * other.length;
        __int128 rhs = static_cast<__int128>(other.cl) * length * length;
        if (lhs != rhs) return lhs < rhs;
        if (length != other.length) return length < other.length;
        return offset < other.offset;
    }
};

}  // namespace

ConstantReport empirical_constant(const FamilySpec& spec, std::size_t max_len,
                                  const ConstantScanOptions& opts) {
    if (max_len < 1) throw DomainError("scan length must be >= 1");
    if (max_len > opts.scan_cap) throw ResourceError("scan length exceeds the scan cap");
    const std::size_t cover = 4 * max_len;
    Word prefix = generate_prefix(spec, cover, opts.max_len);
    const int alphabet = prefix.alphabet_size();

    unsigned chunks = detail::effective_jobs(opts.jobs);
    struct Local {
        ScanBest best;
        std::vector<long long> min_cl;
    };
    std::vector<Local> locals(chunks);
    detail::parallel_chunks(cover, opts.jobs, [&](unsigned c, std::size_t lo, std::size_t hi) {
        Local& loc = locals[c];
        if (opts.per_length_minima)
            loc.min_cl.assign(max_len + 1, std::numeric_limits<long long>::max());
        for (std::size_t s = lo; s < hi; ++s) {
            std::size_t run = std::min(max_len, cover - s);
            if (run == 0) continue;
            ClosedFactorCounter counter(alphabet, run);
            for (std::size_t i = 0; i < run; ++i) {
                counter.push(prefix[s + i]);
                ScanBest cand{counter.current().total, i + 1, s, true};
                if (cand.better_than(loc.best)) loc.best = cand;
                if (opts.per_length_minima && cand.cl < loc.min_cl[i + 1])
                    loc.min_cl[i + 1] = cand.cl;
            }
        }
    });

    ScanBest best;
    for (const Local& loc : locals)
        if (loc.best.better_than(best)) best = loc.best;

    ConstantReport report;
    report.family = spec.name();
    report.scan_max_len = max_len;
    report.empirical_inf = Rational(best.cl, static_cast<long long>(best.length) *
                                                 static_cast<long long>(best.length));
    report.witness = {best.offset, best.length};
    report.unverified = spec.unverified();
    if (opts.per_length_minima) {
        auto distinct = detail::distinct_factor_counts(prefix, max_len);
        report.per_length.reserve(max_len);
        for (std::size_t l = 1; l <= max_len; ++l) {
            long long m = std::numeric_limits<long long>::max();
            for (const Local& loc : locals)
                if (!loc.min_cl.empty()) m = std::min(m, loc.min_cl[l]);
            report.per_length.push_back({l, m, distinct[l]});
        }
    }
    auto [fib_lower, fib_upper] = fibonacci_constant_bounds();
    report.bounds.emplace_back("fib_lower", fib_lower);
    report.bounds.emplace_back("fib_upper", fib_upper);
    report.bounds.emplace_back("csup_upper", Rational(967, 5827).to_double());
    return report;
}

PaddedConstantResult padded_constant(unsigned m, const FamilySpec& base, std::size_t scan_len,
                                     const ConstantScanOptions& opts) {
    if (m < 1) throw DomainError("pad count must be >= 1");
    if (scan_len < m) throw DomainError("scan length must reach the pad block");
    FamilySpec spec = FamilySpec::padded(m, base);
    PaddedConstantResult result;
    result.report = empirical_constant(spec, scan_len, opts);
    result.padding_ratio = Rational(m + 1, static_cast<long long>(m) * m);

    Symbol pad = static_cast<Symbol>(base.alphabet_size());
    Word pad_block(std::vector<Symbol>(m, pad), spec.alphabet_size());
    if (count_closed_factors(pad_block, m).total != static_cast<long long>(m) + 1)
        throw InternalError("pad block does not have m+1 closed factors");
    if (!(result.report.empirical_inf <= result.padding_ratio))
        throw InternalError("scan minimum exceeds the pad-block ratio");
    result.report.bounds.emplace_back("padding_witness", result.padding_ratio.to_double());
    return result;
}

ExponentProfile exponent_profile(const FamilySpec& spec, std::size_t len, std::size_t cap) {
    if (len < 1) throw DomainError("prefix length must be >= 1");
    if (len > cap) throw ResourceError("prefix length exceeds the exponent cap");
    Word prefix = generate_prefix(spec, len);
    auto sp = prefix.symbols();

    ExponentProfile profile;
    profile.prefix_len = len;
    // dyadic factor-length classes; every class holds factors, so its
    // maximum starts at exponent 1
    for (std::size_t lo = 1; lo <= len; lo *= 2)
        profile.rows.push_back({lo, std::min(2 * lo - 1, len), Rational(1)});

    // For each period, the longest match run bounds every bucket's best
    // exponent reachable with that period.
    for (std::size_t p = 1; p < len; ++p) {
        long long max_run = 0, run_next = 0;
        for (std::size_t i = len - p; i-- > 0;) {
            long long run = (sp[i] == sp[i + p]) ? run_next + 1 : 0;
            max_run = std::max(max_run, run);
            run_next = run;
        }
        if (max_run == 0) continue;
        long long reach = static_cast<long long>(p) + max_run;
        for (auto& row : profile.rows) {
            long long hi = static_cast<long long>(row.len_hi);
            long long lo = std::max<long long>(row.len_lo, static_cast<long long>(p) + 1);
            if (reach < lo || lo > hi) continue;
            Rational cand(std::min(reach, hi), static_cast<long long>(p));
            if (row.max_exp < cand) row.max_exp = cand;
        }
    }
    profile.overall = Rational(1);
    for (const auto& row : profile.rows)
        if (profile.overall < row.max_exp) profile.overall = row.max_exp;
    return profile;
}

}  // namespace closedlab
