#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "closedlab/rational.hpp"
#include "closedlab/words.hpp"

namespace closedlab {

/// Factor-scan length cap for empirical constants.
inline constexpr std::size_t kDefaultScanCap = 3000;

/// One point of a bound-function evaluation; t = 1/alpha and z = 1 + xi
/// whenever both parameterizations are populated.
struct BoundPoint {
    double alpha = 0;
    double xi = 0;
    double t = 0;
    double z = 0;
    double beta = 0;
    double value = 0;
};

/// Populates every parameterization for one (alpha, xi) pair and evaluates
/// the bound function of alpha's regime at it.
BoundPoint bound_point(double alpha, double xi);

// Upper-bound functions for the closed-rich constant, by asymptotic-exponent
// regime. Regime 1 covers exponents in (1, 1.4] with the constant 1/7;
// regime 2 covers (1.4, 2], regime 3 covers (2, 2.5], regime 4 covers > 2.5.

/// Regime-2 bound as a function of the extension ratio xi > 0 and the
/// exponent alpha; minimized at regime2_optimal_xi.
double regime2_bound(double xi, double alpha);
double regime2_optimal_xi(double alpha);

/// Regime-3 bound in the substituted coordinates t = 1/alpha in [0.4, 0.5]
/// and z = 1 + xi > 0; minimized at regime3_optimal_z.
double regime3_bound(double t, double z);
double regime3_optimal_z(double t);

/// Regime-4 bound as a function of beta = 1/(alpha+1) in [1/4, 2/7];
/// increasing on the interval, hence at most its value at 2/7 = 8/49.
double regime4_bound(double beta);

/// The applicable regime bound for a given exponent alpha > 1.
double regime_bound(double alpha);

/// Lower and upper bound for the Fibonacci word's constant, from the golden
/// ratio closed forms (phi^3+3)/phi^9 and (5 phi+3)/(phi^2 (phi^3+2)^2).
std::pair<double, double> fibonacci_constant_bounds();

struct SupremumBounds {
    double lower = 0;       // the Fibonacci lower bound
    Rational upper{0, 1};   // 967/5827 exactly
};
SupremumBounds supremum_constant_bounds();

struct ScanWitness {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct LengthMinRow {
    std::size_t length = 0;
    long long min_count = 0;
    std::size_t distinct_windows = 0;  // distinct factors of this length seen
};

/// Empirical scan result: the exact minimum of count/length^2 over all
/// scanned factors, the minimizing window, optional per-length minima, and
/// the named closed-form bounds for comparison.
struct ConstantReport {
    std::string family;
    std::size_t scan_max_len = 0;
    Rational empirical_inf{0, 1};
    ScanWitness witness;
    std::vector<LengthMinRow> per_length;  // filled when requested
    std::vector<std::pair<std::string, double>> bounds;
    bool unverified = false;
};

struct ConstantScanOptions {
    std::size_t scan_cap = kDefaultScanCap;
    std::size_t max_len = kDefaultMaxLen;  // generation cap for the cover prefix
    unsigned jobs = 0;                     // 0 = hardware concurrency
    bool per_length_minima = false;
};

/// Scans every factor of length 1..max_len of the infinite word (windows of
/// a cover prefix of length 4 * max_len) for the minimum of count/length^2.
/// Exact rational comparisons; deterministic regardless of parallelism.
ConstantReport empirical_constant(const FamilySpec& spec, std::size_t max_len,
                                  const ConstantScanOptions& opts = {});

struct PaddedConstantResult {
    ConstantReport report;
    Rational padding_ratio{0, 1};  // (m+1)/m^2, realized by the pad block itself
};

/// Scan of the padded family d^m u; verifies that the pad block d^m has
/// exactly m+1 closed factors and records its ratio as a bound entry.
PaddedConstantResult padded_constant(unsigned m, const FamilySpec& base,
                                     std::size_t scan_len,
                                     const ConstantScanOptions& opts = {});

struct ExponentProfileRow {
    std::size_t len_lo = 0;
    std::size_t len_hi = 0;  // inclusive
    Rational max_exp{0, 1};
};

struct ExponentProfile {
    std::size_t prefix_len = 0;
    Rational overall{0, 1};
    std::vector<ExponentProfileRow> rows;  // dyadic factor-length classes
};

/// Exact factor-exponent maxima of the length-len prefix, bucketed by
/// dyadic factor length.
ExponentProfile exponent_profile(const FamilySpec& spec, std::size_t len,
                                 std::size_t cap = 20000);

}  // namespace closedlab
