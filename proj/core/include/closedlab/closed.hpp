#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "closedlab/rational.hpp"
#include "closedlab/words.hpp"

namespace closedlab {

/// Size cap for the brute-force factor enumeration.
inline constexpr std::size_t kDefaultOracleCap = 2000;
/// Size cap for exact exponent computation.
inline constexpr std::size_t kDefaultExponentCap = 20000;

/// Distinct closed-factor counts of one word: total, factors of length >= 2,
/// and factors of length <= 1 (the empty word plus each distinct letter).
struct CountBreakdown {
    long long total = 0;
    long long long_count = 0;
    long long short_count = 0;

    friend bool operator==(const CountBreakdown&, const CountBreakdown&) = default;
};

struct BorderInfo {
    std::size_t border_length = 0;
    std::size_t occurrence_count = 0;
};

/// Repeated-affix lengths: t = largest repeated suffix of w, z = largest
/// repeated suffix of t taken standalone; p/q mirror them with prefixes.
struct AffixGap {
    std::size_t t_len = 0;
    std::size_t z_len = 0;
    std::size_t p_len = 0;
    std::size_t q_len = 0;
};

/// A word is closed when it has length <= 1 or one of its borders occurs
/// exactly twice in it (necessarily the longest border).
bool is_closed(const Word& w);

/// The two-occurrence border of a closed word of length >= 2; absent when
/// the word is not closed. Throws DomainError for |w| < 2.
std::optional<BorderInfo> two_occurrence_border(const Word& w);

/// Longest L such that the length-L suffix occurs at least twice in w,
/// counting the suffix occurrence itself. 0 when the last symbol is unique.
std::size_t longest_repeated_suffix(const Word& w);
std::size_t longest_repeated_prefix(const Word& w);

/// t/z/p/q of one word in a single call.
AffixGap affix_gaps(const Word& w);

/// Closed-count increment when appending x to u. Equals 1 when x is a fresh
/// letter, otherwise |t| - |z| for the repeated suffixes of ux.
long long append_delta(const Word& u, Symbol x);
/// Mirror of append_delta for prepending, via largest repeated prefixes.
long long prepend_delta(const Word& u, Symbol x);

/// All distinct closed factors, the empty word included. Brute force;
/// throws ResourceError above cap.
std::set<Word> closed_factor_set(const Word& w, std::size_t cap = kDefaultOracleCap);

/// Exact counts by factor enumeration (independent of the incremental path).
CountBreakdown count_closed_factors(const Word& w, std::size_t cap = kDefaultOracleCap);

/// counts[i] = counts of the length-i prefix, for i = 0..|w|, from one
/// enumeration pass keyed by first-occurrence end positions.
std::vector<CountBreakdown> count_closed_factors_per_prefix(
    const Word& w, std::size_t cap = kDefaultOracleCap);

namespace detail {

/// Online suffix automaton; after each extend, repeated_suffix_len() is the
/// length of the longest suffix occurring at least twice so far.
class SuffixAutomaton {
  public:
    void reset(int alphabet_size, std::size_t expected_len);
    void extend(Symbol c);
    std::size_t repeated_suffix_len() const { return static_cast<std::size_t>(len_[link_[last_]]); }

  private:
    int new_state(int len, int link, int copy_from);

    int sigma_ = 0;
    int last_ = 0;
    std::vector<std::int32_t> next_;  // states x sigma, flat
    std::vector<std::int32_t> link_;
    std::vector<std::int32_t> len_;
};

}  // namespace detail

/// Incremental closed-factor counter. Pushing symbols w1..wn yields
/// history()[i].total = number of distinct closed factors of the length-i
/// prefix; history()[0] covers the empty word. Single-owner mutable;
/// distinct counters may run in parallel.
class ClosedFactorCounter {
  public:
    explicit ClosedFactorCounter(int alphabet_size, std::size_t cap = kDefaultMaxLen);

    void push(Symbol x);
    void push_all(const Word& w);

    std::size_t size() const { return buffer_.size(); }
    const std::vector<CountBreakdown>& history() const { return history_; }
    const CountBreakdown& current() const { return history_.back(); }
    /// Repeated-suffix length after the most recent push (0 before any push).
    std::size_t last_repeated_suffix_len() const { return last_t_len_; }

  private:
    int alphabet_size_;
    std::size_t cap_;
    std::vector<Symbol> buffer_;
    std::vector<bool> seen_letter_;
    int distinct_letters_ = 0;
    std::size_t last_t_len_ = 0;
    detail::SuffixAutomaton sam_;
    std::vector<CountBreakdown> history_;
    // scratch for the standalone repeated-suffix query
    std::vector<Symbol> rev_scratch_;
    std::vector<std::int32_t> z_scratch_;
};

/// Max over non-empty factors of length/minimal-period, as an exact rational.
/// |w| >= 1; throws ResourceError above cap.
Rational max_exponent(const Word& w, std::size_t cap = kDefaultExponentCap);

/// True when w is not a proper integer power. Throws DomainError on empty w.
bool is_primitive(const Word& w);

/// Shortest u with w = u^k (w itself when primitive).
Word primitive_root(const Word& w);

namespace detail {

/// Z-array: z[i] = longest common prefix of w and w[i..]; z[0] = |w|.
void z_function(std::span<const Symbol> w, std::vector<std::int32_t>& out);

/// max z[i] over i >= 1 (longest repeated prefix of the span).
std::size_t repeated_prefix_len(std::span<const Symbol> w, std::vector<std::int32_t>& scratch);

/// counts[l] = number of distinct factors of w of length l, for l = 1..max_len,
/// via suffix array + LCP.
std::vector<std::size_t> distinct_factor_counts(const Word& w, std::size_t max_len);

}  // namespace detail

}  // namespace closedlab
