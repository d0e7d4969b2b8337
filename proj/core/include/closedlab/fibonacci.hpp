#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "closedlab/closed.hpp"
#include "closedlab/words.hpp"

namespace closedlab {

/// Window-scan length cap for per-length minima.
inline constexpr std::size_t kDefaultWindowCap = 3000;

/// One row of the per-prefix count table: length, count, first difference.
struct PrefixCountRecord {
    std::size_t n = 0;
    long long pcl = 0;  // closed factors in the length-n prefix
    long long s = 0;    // pcl(n) - pcl(n-1)
};

/// Per-length minimum over all factors of the infinite Fibonacci word.
struct LengthMinRecord {
    std::size_t n = 0;
    long long m = 0;                 // min closed-factor count at this length
    long long r = 0;                 // m(n) - m(n-1)
    std::size_t witness_offset = 0;  // 0-indexed start of a minimizing factor
};

struct ConjugateRow {
    std::size_t index = 0;  // rotation amount; ignored for the singular row
    bool singular = false;
    long long cl = 0;
    long long s_minus_r = 0;
    long long p_minus_q = 0;
};

/// Closed-factor count of the length-l prefix of the Fibonacci word, in
/// closed form: tabulated for l <= 7, otherwise split l between consecutive
/// Fibonacci lengths and apply the two-branch product formula.
long long prefix_closed_count(long long l);

/// n-th term of the first difference sequence of prefix_closed_count: the
/// run-length walk where each Fibonacci number F appears in a block of 2F
/// consecutive positions.
long long prefix_closed_count_delta(long long n);

/// Largest n with fib_number(n) <= l, and k = l - fib_number(n). l >= 1.
std::pair<int, long long> zeckendorf_split(long long l);

struct PrefixVerifyReport {
    std::size_t limit = 0;
    std::optional<std::size_t> first_mismatch;     // engine total vs formula
    std::optional<std::size_t> first_delta_mismatch;
    bool block_identity_ok = false;  // 2*(F_{-1}+..+F_{n-4}) + F_{n-3} + 2 == F_n
    std::vector<PrefixCountRecord> rows;
};

/// Runs the incremental counter over the Fibonacci prefix and compares every
/// total and difference against the closed forms. Mismatches are reported,
/// not thrown.
PrefixVerifyReport verify_prefix_counts(std::size_t limit,
                                        std::size_t max_len = kDefaultMaxLen);

struct ScanOptions {
    std::size_t window_cap = kDefaultWindowCap;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

/// Minimum closed-factor count over all distinct length-n factors of the
/// Fibonacci word. Scans the prefix of length 4n, deduplicates windows and
/// insists on exactly n+1 of them (the Sturmian factor count); ties resolve
/// to the smallest witness offset.
LengthMinRecord min_closed_for_length(std::size_t n, const ScanOptions& opts = {});

/// min_closed_for_length for every length in [1, limit] with shared prefix
/// generation; r is filled against m(0) = 1.
std::vector<LengthMinRecord> min_closed_run(std::size_t limit, const ScanOptions& opts = {});

/// True when the measured minimum at length fib_number(n) equals the
/// prefix count at that length minus twice fib_number(n-5). n >= 7.
bool check_min_at_fib_length(int n, const ScanOptions& opts = {});

/// Closed-form lower bound on the count of any length-l Fibonacci factor,
/// valid from l = fib_number(7) on; tight exactly at Fibonacci lengths.
long long factor_count_lower_bound(long long l);

/// Measured rows for every rotation of fibonacci_word(n) plus the singular
/// word: counts by brute-force enumeration, gaps by repeated-affix queries.
std::vector<ConjugateRow> conjugate_count_table(int n, const ScanOptions& opts = {});

/// The piecewise-constant expectations for the same rows (15 cases).
std::vector<ConjugateRow> conjugate_count_expected(int n);

struct AffixGapRow {
    std::size_t index = 0;
    bool singular = false;
    long long s_minus_r = 0;
    long long p_minus_q = 0;
};

struct AffixGapMismatch {
    AffixGapRow got;
    AffixGapRow expected;
};

/// Verifies the repeated-affix gap table over every length-fib_number(n)
/// factor against the nine case groups; empty result means full agreement.
/// 7 <= n <= 11.
std::vector<AffixGapMismatch> check_affix_gaps(int n);

/// Smallest 0-indexed start of singular_word(n) in the Fibonacci word.
std::size_t singular_first_occurrence(int n, std::size_t max_len = kDefaultMaxLen);

struct WitnessCount {
    long long measured = 0;
    long long closed_form = 0;  // 1 + fib_number(n-3) * fib_number(n)
    std::size_t length = 0;
};

/// Builds the extremal factor (the n-3rd word, the n-th word, then the n-3rd
/// word without its last two letters), confirms it is a Fibonacci factor and
/// measures its closed-factor count against the product identity.
WitnessCount bound_witness_count(int n, std::size_t max_len = kDefaultMaxLen);

/// Conjectured first-difference sequence of the per-length minima:
/// 1,1,1,1 then blocks F_m^{F_m}, F_{m+2}^{F_{m-1}} repeated twice per m.
std::vector<long long> conjectured_min_deltas(std::size_t limit);

struct ConjectureReport {
    std::size_t limit = 0;
    std::optional<std::size_t> first_disagreement;
    std::vector<LengthMinRecord> records;
};

/// Measures r(n) for n = 1..limit and compares with conjectured_min_deltas.
ConjectureReport check_min_delta_conjecture(std::size_t limit, const ScanOptions& opts = {});

}  // namespace closedlab
