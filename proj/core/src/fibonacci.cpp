#include "closedlab/fibonacci.hpp"

#include <algorithm>
#include <limits>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "closedlab/parallel.hpp"

namespace closedlab {

long long prefix_closed_count(long long l) {
    if (l < 1) throw DomainError("prefix length must be >= 1");
    static constexpr long long initial[] = {0, 2, 3, 4, 5, 7, 9, 11};
    if (l <= 7) return initial[l];
    auto [n, k] = zeckendorf_split(l);
    if (k <= fib_number(n - 3) - 2)
        return 1 + fib_number(n - 3) * (fib_number(n - 2) + fib_number(n - 4) + k + 2);
    return 1 + fib_number(n - 2) * (fib_number(n - 3) + k + 2);
}

long long prefix_closed_count_delta(long long n) {
    if (n < 1) throw DomainError("index must be >= 1");
    long long pos = 0;
    for (int i = -1;; ++i) {
        long long f = fib_number(i);
        if (n <= pos + 2 * f) return f;
        pos += 2 * f;
    }
}

std::pair<int, long long> zeckendorf_split(long long l) {
    if (l < 1) throw DomainError("length must be >= 1");
    int n = 0;
    while (fib_number(n + 1) <= l) ++n;
    return {n, l - fib_number(n)};
}

PrefixVerifyReport verify_prefix_counts(std::size_t limit, std::size_t max_len) {
    PrefixVerifyReport report;
    report.limit = limit;
    Word prefix = generate_prefix(FamilySpec::fibonacci(), limit, max_len);
    ClosedFactorCounter counter(2, std::max<std::size_t>(limit, 1));
    report.rows.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i) {
        counter.push(prefix[i]);
        std::size_t n = i + 1;
        long long pcl = counter.history()[n].total;
        long long s = pcl - counter.history()[n - 1].total;
        report.rows.push_back({n, pcl, s});
        if (!report.first_mismatch && pcl != prefix_closed_count(static_cast<long long>(n)))
            report.first_mismatch = n;
        if (!report.first_delta_mismatch &&
            s != prefix_closed_count_delta(static_cast<long long>(n)))
            report.first_delta_mismatch = n;
    }
    report.block_identity_ok = true;
    for (int n = 3; n <= 40; ++n) {
        long long sum = 0;
        for (int i = -1; i <= n - 4; ++i) sum += fib_number(i);
        if (2 * sum + fib_number(n - 3) + 2 != fib_number(n)) report.block_identity_ok = false;
    }
    return report;
}

namespace {

std::string_view window_view(const Word& w, std::size_t pos, std::size_t len) {
    return {reinterpret_cast<const char*>(w.symbols().data()) + pos, len};
}

long long window_closed_count(const Word& prefix, std::size_t pos, std::size_t len) {
    ClosedFactorCounter counter(prefix.alphabet_size(), len);
    for (std::size_t i = 0; i < len; ++i) counter.push(prefix[pos + i]);
    return counter.current().total;
}

// Minimum over the distinct length-n windows of the Fibonacci prefix, with
// the window-count self check. The prefix must have length >= 4n.
std::pair<long long, std::size_t> scan_length(const Word& prefix, std::size_t n, unsigned jobs) {
    std::unordered_set<std::string_view> seen;
    std::vector<std::size_t> offsets;
    for (std::size_t s = 0; s + n <= std::min(prefix.size(), 4 * n); ++s)
        if (seen.insert(window_view(prefix, s, n)).second) offsets.push_back(s);
    if (offsets.size() != n + 1)
        throw InternalError("distinct window count is not n+1 at length " + std::to_string(n));
    unsigned chunks = detail::effective_jobs(jobs);
    std::vector<std::pair<long long, std::size_t>> best(
        std::min<std::size_t>(chunks, offsets.size()),
        {std::numeric_limits<long long>::max(), 0});
    detail::parallel_chunks(offsets.size(), jobs, [&](unsigned c, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            long long cl = window_closed_count(prefix, offsets[i], n);
            if (cl < best[c].first) best[c] = {cl, offsets[i]};
        }
    });
    std::pair<long long, std::size_t> result{std::numeric_limits<long long>::max(), 0};
    for (const auto& b : best)
        if (b.first < result.first) result = b;
    return result;
}

}  // namespace

LengthMinRecord min_closed_for_length(std::size_t n, const ScanOptions& opts) {
    if (n < 1) throw DomainError("length must be >= 1");
    if (n > opts.window_cap) throw ResourceError("length exceeds the window cap");
    Word prefix = generate_prefix(FamilySpec::fibonacci(), 4 * n);
    auto [m, offset] = scan_length(prefix, n, opts.jobs);
    long long prev = n == 1 ? 1 : scan_length(prefix, n - 1, opts.jobs).first;
    return {n, m, m - prev, offset};
}

std::vector<LengthMinRecord> min_closed_run(std::size_t limit, const ScanOptions& opts) {
    if (limit < 1) throw DomainError("limit must be >= 1");
    if (limit > opts.window_cap) throw ResourceError("limit exceeds the window cap");
    const std::size_t cover = 4 * limit;
    Word prefix = generate_prefix(FamilySpec::fibonacci(), cover);
    auto counts = detail::distinct_factor_counts(prefix, limit);
    for (std::size_t l = 1; l <= limit; ++l)
        if (counts[l] != l + 1)
            throw InternalError("distinct window count is not n+1 at length " + std::to_string(l));

    unsigned chunks = detail::effective_jobs(opts.jobs);
    struct Local {
        std::vector<long long> min_cl;
        std::vector<std::size_t> offset;
    };
    std::vector<Local> locals(chunks);
    detail::parallel_chunks(cover, opts.jobs, [&](unsigned c, std::size_t lo, std::size_t hi) {
        Local& loc = locals[c];
        loc.min_cl.assign(limit + 1, std::numeric_limits<long long>::max());
        loc.offset.assign(limit + 1, 0);
        for (std::size_t s = lo; s < hi; ++s) {
            std::size_t run = std::min(limit, cover - s);
            if (run == 0) continue;
            ClosedFactorCounter counter(2, run);
            for (std::size_t i = 0; i < run; ++i) {
                counter.push(prefix[s + i]);
                long long cl = counter.current().total;
                if (cl < loc.min_cl[i + 1]) {
                    loc.min_cl[i + 1] = cl;
                    loc.offset[i + 1] = s;
                }
            }
        }
    });
    std::vector<LengthMinRecord> records(limit);
    long long prev = 1;  // empty factor
    for (std::size_t l = 1; l <= limit; ++l) {
        long long m = std::numeric_limits<long long>::max();
        std::size_t off = 0;
        for (const Local& loc : locals) {
            if (loc.min_cl.empty()) continue;
            if (loc.min_cl[l] < m) {
                m = loc.min_cl[l];
                off = loc.offset[l];
            }
        }
        records[l - 1] = {l, m, m - prev, off};
        prev = m;
    }
    return records;
}

bool check_min_at_fib_length(int n, const ScanOptions& opts) {
    if (n < 7) throw DomainError("check applies from index 7 on");
    long long fn = fib_number(n);
    LengthMinRecord rec = min_closed_for_length(static_cast<std::size_t>(fn), opts);
    return rec.m == prefix_closed_count(fn) - 2 * fib_number(n - 5);
}

long long factor_count_lower_bound(long long l) {
    auto [n, k] = zeckendorf_split(l);
    if (n < 7) throw DomainError("lower bound applies from the 7th Fibonacci length on");
    long long base = prefix_closed_count(fib_number(n)) - 2 * fib_number(n - 5);
    if (k <= fib_number(n - 3) - 1) return base + k * fib_number(n - 4);
    return base + (fib_number(n - 3) - 1) * fib_number(n - 4) +
           (k - fib_number(n - 3) + 1) * fib_number(n - 3);
}

std::vector<ConjugateRow> conjugate_count_table(int n, const ScanOptions& opts) {
    if (n < 7 || n > 12) throw DomainError("conjugate table supports 7 <= n <= 12");
    Word fn = fibonacci_word(n);
    const std::size_t size = fn.size();
    std::vector<ConjugateRow> rows(size + 1);
    detail::parallel_chunks(size, opts.jobs, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            Word rot = conjugate(fn, i);
            AffixGap g = affix_gaps(rot);
            rows[i] = {i, false, count_closed_factors(rot, size).total,
                       static_cast<long long>(g.t_len) - static_cast<long long>(g.z_len),
                       static_cast<long long>(g.p_len) - static_cast<long long>(g.q_len)};
        }
    });
    Word sing = singular_word(n);
    AffixGap g = affix_gaps(sing);
    rows[size] = {0, true, count_closed_factors(sing, size).total,
                  static_cast<long long>(g.t_len) - static_cast<long long>(g.z_len),
                  static_cast<long long>(g.p_len) - static_cast<long long>(g.q_len)};
    return rows;
}

namespace {

// The piecewise affix-gap expectations for rotations of the n-th Fibonacci
// word (nine case groups plus the singular word).
std::pair<long long, long long> expected_gaps(int n, std::size_t i, bool singular) {
    auto F = [](int k) { return fib_number(k); };
    long long u = static_cast<long long>(i);
    if (singular) return {F(n - 3), F(n - 3)};
    if (u <= F(n - 3) - 2) return {F(n - 3), F(n - 3)};
    if (u == F(n - 3) - 1) return {F(n - 4) + 1, F(n - 3) + 1};
    if (u <= F(n - 2) - 1) {
        long long a = u - F(n - 3);
        if (a <= F(n - 4) - 2) return {F(n - 4), F(n - 4)};
        return {F(n - 3) + 1, F(n - 4) + 1};  // a == F(n-4) - 1
    }
    if (u <= F(n - 1) - 2) return {F(n - 3), F(n - 3)};
    if (u == F(n - 1) - 1) return {F(n - 2), F(n - 3)};
    if (u == F(n - 1)) return {F(n - 2), F(n - 3) + 2};
    if (u <= F(n) - 2) {
        long long a = u - F(n - 1);
        if (a <= F(n - 4) - 2) return {F(n - 2) - a, F(n - 3) + a + 2};
        if (a <= F(n - 3) - 1) return {F(n - 2), F(n - 2)};
        if (a == F(n - 3)) return {F(n - 2), F(n - 3) + 2};
        return {F(n - 1) - a, a + 2};
    }
    return {F(n - 3), F(n - 2)};  // u == F(n) - 1
}

// Row counts predicted for the rotations of the n-th Fibonacci word (15 cases;
// the last is the singular word). Inside the two sliding ranges the value is
// the case-8/11 base plus the accumulated per-step differences
// F(n-4) - 2j - 1 resp. F(n-1) - 2j - 1; the steps vary with j, so the
// interior is quadratic and matches the plateau values at both range ends.
long long expected_conjugate_count(int n, std::size_t i, bool singular, long long m) {
    auto F = [](int k) { return fib_number(k); };
    long long u = static_cast<long long>(i);
    if (singular) return m;
    if (u <= F(n - 3) - 2) return m;
    if (u == F(n - 3) - 1) return m + 1 - F(n - 5);
    if (u <= F(n - 2) - 2) return m - 2 * F(n - 5);
    if (u == F(n - 2) - 1) return m - F(n - 5) + 1;
    if (u <= F(n - 1) - 2) return m;
    if (u == F(n - 1) - 1) return m + F(n - 4);
    if (u == F(n - 1)) return m + 2 * F(n - 4);
    if (u == F(n - 1) + 1) return m + 3 * F(n - 4) - 3;
    if (u <= F(n - 1) + F(n - 4) - 2) {
        long long a = u - F(n - 1);
        long long value = m + 3 * F(n - 4) - 3;
        for (long long j = 2; j <= a; ++j) value += F(n - 4) - 2 * j - 1;
        return value;
    }
    if (u <= F(n - 1) + F(n - 3)) return m + 2 * F(n - 4);
    if (u == F(n - 1) + F(n - 3) + 1) return m + 3 * F(n - 4) - 3;
    if (u <= F(n) - 2) {
        long long a = u - F(n - 1);
        long long value = m + 3 * F(n - 4) - 3;
        for (long long j = F(n - 3) + 2; j <= a; ++j) value += F(n - 1) - 2 * j - 1;
        return value;
    }
    return m + 2 * F(n - 4) + F(n - 1) - 2 * F(n - 2);  // u == F(n) - 1
}

}  // namespace

std::vector<ConjugateRow> conjugate_count_expected(int n) {
    if (n < 7 || n > 12) throw DomainError("conjugate table supports 7 <= n <= 12");
    long long m = prefix_closed_count(fib_number(n));
    std::size_t size = static_cast<std::size_t>(fib_number(n));
    std::vector<ConjugateRow> rows(size + 1);
    for (std::size_t i = 0; i < size; ++i) {
        auto [sr, pq] = expected_gaps(n, i, false);
        rows[i] = {i, false, expected_conjugate_count(n, i, false, m), sr, pq};
    }
    auto [sr, pq] = expected_gaps(n, 0, true);
    rows[size] = {0, true, m, sr, pq};
    return rows;
}

std::vector<AffixGapMismatch> check_affix_gaps(int n) {
    if (n < 7 || n > 11) throw DomainError("affix gap check supports 7 <= n <= 11");
    const std::size_t size = static_cast<std::size_t>(fib_number(n));
    Word fn = fibonacci_word(n);
    Word doubled = fn.concat(fn);
    std::unordered_map<std::string_view, std::size_t> rotation_at;
    for (std::size_t i = 0; i < size; ++i)
        rotation_at.emplace(window_view(doubled, i, size), i);
    Word sing = singular_word(n);

    Word prefix = generate_prefix(FamilySpec::fibonacci(), 4 * size);
    std::unordered_set<std::string_view> seen;
    std::vector<AffixGapMismatch> mismatches;
    std::size_t windows = 0;
    bool singular_seen = false;
    for (std::size_t s = 0; s + size <= prefix.size(); ++s) {
        if (!seen.insert(window_view(prefix, s, size)).second) continue;
        ++windows;
        Word factor = prefix.subword(s, size);
        bool singular = false;
        std::size_t index = 0;
        auto it = rotation_at.find(window_view(prefix, s, size));
        if (it != rotation_at.end()) {
            index = it->second;
        } else {
            if (factor != sing) throw InternalError("factor is neither a rotation nor singular");
            singular = true;
            singular_seen = true;
        }
        AffixGap g = affix_gaps(factor);
        AffixGapRow got{index, singular,
                        static_cast<long long>(g.t_len) - static_cast<long long>(g.z_len),
                        static_cast<long long>(g.p_len) - static_cast<long long>(g.q_len)};
        auto [sr, pq] = expected_gaps(n, index, singular);
        if (got.s_minus_r != sr || got.p_minus_q != pq)
            mismatches.push_back({got, {index, singular, sr, pq}});
    }
    if (windows != size + 1 || !singular_seen)
        throw InternalError("length-F_n factor enumeration is incomplete");
    return mismatches;
}

std::size_t singular_first_occurrence(int n, std::size_t max_len) {
    Word target = singular_word(n, max_len);
    Word prefix = generate_prefix(FamilySpec::fibonacci(),
                                  static_cast<std::size_t>(fib_number(n + 2)), max_len);
    auto sp = prefix.symbols();
    auto ts = target.symbols();
    auto it = std::search(sp.begin(), sp.end(), ts.begin(), ts.end());
    if (it == sp.end()) throw InternalError("singular word not found in the prefix");
    return static_cast<std::size_t>(it - sp.begin());
}

WitnessCount bound_witness_count(int n, std::size_t max_len) {
    if (n < 7) throw DomainError("witness identity applies from index 7 on");
    Word left = fibonacci_word(n - 3, max_len);
    Word mid = fibonacci_word(n, max_len);
    Word witness = left.concat(mid).concat(left.subword(0, left.size() - 2));
    // occurs inside the (n+3)rd Fibonacci word
    Word prefix = generate_prefix(FamilySpec::fibonacci(),
                                  static_cast<std::size_t>(fib_number(n + 3)), max_len);
    auto sp = prefix.symbols();
    auto ws = witness.symbols();
    if (std::search(sp.begin(), sp.end(), ws.begin(), ws.end()) == sp.end())
        throw InternalError("witness is not a Fibonacci factor");
    ClosedFactorCounter counter(2, witness.size());
    counter.push_all(witness);
    return {counter.current().total, 1 + fib_number(n - 3) * fib_number(n), witness.size()};
}

std::vector<long long> conjectured_min_deltas(std::size_t limit) {
    std::vector<long long> out{1, 1, 1, 1};
    for (int m = 0; out.size() < limit; ++m) {
        long long fm = fib_number(m), fm2 = fib_number(m + 2), reps = fib_number(m - 1);
        for (int twice = 0; twice < 2 && out.size() < limit; ++twice) {
            for (long long i = 0; i < fm && out.size() < limit; ++i) out.push_back(fm);
            for (long long i = 0; i < reps && out.size() < limit; ++i) out.push_back(fm2);
        }
    }
    out.resize(limit);
    return out;
}

ConjectureReport check_min_delta_conjecture(std::size_t limit, const ScanOptions& opts) {
    ConjectureReport report;
    report.limit = limit;
    report.records = min_closed_run(limit, opts);
    std::vector<long long> expected = conjectured_min_deltas(limit);
    for (std::size_t i = 0; i < limit; ++i) {
        if (report.records[i].r != expected[i]) {
            report.first_disagreement = i + 1;
            break;
        }
    }
    return report;
}

}  // namespace closedlab
