#include "closedlab/closed.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

namespace closedlab {

namespace detail {

void z_function(std::span<const Symbol> w, std::vector<std::int32_t>& out) {
    const std::size_t n = w.size();
    out.assign(n, 0);
    if (n == 0) return;
    out[0] = static_cast<std::int32_t>(n);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t zi = 0;
        if (i < r) zi = std::min(r - i, static_cast<std::size_t>(out[i - l]));
        while (i + zi < n && w[zi] == w[i + zi]) ++zi;
        out[i] = static_cast<std::int32_t>(zi);
        if (i + zi > r) { l = i; r = i + zi; }
    }
}

std::size_t repeated_prefix_len(std::span<const Symbol> w, std::vector<std::int32_t>& scratch) {
    z_function(w, scratch);
    std::int32_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i) best = std::max(best, scratch[i]);
    return static_cast<std::size_t>(best);
}

void SuffixAutomaton::reset(int alphabet_size, std::size_t expected_len) {
    sigma_ = alphabet_size;
    next_.clear();
    link_.clear();
    len_.clear();
    std::size_t cap = 2 * expected_len + 8;
    next_.reserve(cap * sigma_);
    link_.reserve(cap);
    len_.reserve(cap);
    last_ = new_state(0, -1, -1);
}

int SuffixAutomaton::new_state(int len, int link, int copy_from) {
    int id = static_cast<int>(len_.size());
    len_.push_back(len);
    link_.push_back(link);
    std::size_t base = next_.size();
    next_.resize(base + sigma_, -1);
    if (copy_from >= 0)
        std::copy_n(next_.begin() + static_cast<std::size_t>(copy_from) * sigma_, sigma_,
                    next_.begin() + base);
    return id;
}

void SuffixAutomaton::extend(Symbol c) {
    auto tr = [&](int state, Symbol ch) -> std::int32_t& {
        return next_[static_cast<std::size_t>(state) * sigma_ + ch];
    };
    int cur = new_state(len_[last_] + 1, -1, -1);
    int p = last_;
    while (p != -1 && tr(p, c) == -1) {
        tr(p, c) = cur;
        p = link_[p];
    }
    if (p == -1) {
        link_[cur] = 0;
    } else {
        int q = tr(p, c);
        if (len_[p] + 1 == len_[q]) {
            link_[cur] = q;
        } else {
            int clone = new_state(len_[p] + 1, link_[q], q);
            while (p != -1 && tr(p, c) == q) {
                tr(p, c) = clone;
                p = link_[p];
            }
            link_[q] = clone;
            link_[cur] = clone;
        }
    }
    last_ = cur;
}

std::vector<std::size_t> distinct_factor_counts(const Word& w, std::size_t max_len) {
    const std::size_t n = w.size();
    auto sp = w.symbols();
    // doubling suffix array
    std::vector<int> sa(n), rank(n), tmp(n);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = static_cast<int>(i);
        rank[i] = sp[i];
    }
    for (std::size_t k = 1;; k *= 2) {
        auto cmp = [&](int a, int b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            int ra = a + static_cast<int>(k) < static_cast<int>(n) ? rank[a + k] : -1;
            int rb = b + static_cast<int>(k) < static_cast<int>(n) ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = tmp;
        if (n == 0 || rank[sa[n - 1]] == static_cast<int>(n) - 1) break;
    }
    // Kasai LCP of adjacent suffixes
    std::vector<int> lcp(n == 0 ? 0 : n - 1, 0), inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[sa[i]] = static_cast<int>(i);
    int h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (inv[i] + 1 < static_cast<int>(n)) {
            int j = sa[inv[i] + 1];
            while (i + h < n && static_cast<std::size_t>(j) + h < n && sp[i + h] == sp[j + h]) ++h;
            lcp[inv[i]] = h;
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    // distinct factors of length l = windows of length l minus duplicated ones
    std::vector<std::size_t> dup_ge(max_len + 2, 0);
    for (int v : lcp) {
        std::size_t capped = std::min<std::size_t>(static_cast<std::size_t>(v), max_len);
        if (capped > 0) ++dup_ge[capped];
    }
    for (std::size_t l = max_len; l-- > 1;) dup_ge[l] += dup_ge[l + 1];
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (std::size_t l = 1; l <= max_len && l <= n; ++l)
        counts[l] = (n - l + 1) - dup_ge[l];
    return counts;
}

}  // namespace detail

namespace {

// Longest border length, or 0. A border of length L exists iff z[n-L] == L.
std::size_t longest_border(std::span<const Symbol> w, const std::vector<std::int32_t>& z) {
    const std::size_t n = w.size();
    for (std::size_t i = 1; i < n; ++i)
        if (static_cast<std::size_t>(z[i]) == n - i) return n - i;
    return 0;
}

bool is_closed_span(std::span<const Symbol> w, std::vector<std::int32_t>& z) {
    const std::size_t n = w.size();
    if (n <= 1) return true;
    detail::z_function(w, z);
    std::size_t border = longest_border(w, z);
    if (border == 0) return false;
    std::size_t occ = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (static_cast<std::size_t>(z[i]) >= border) ++occ;
    return occ == 2;
}

}  // namespace

bool is_closed(const Word& w) {
    std::vector<std::int32_t> z;
    return is_closed_span(w.symbols(), z);
}

std::optional<BorderInfo> two_occurrence_border(const Word& w) {
    const std::size_t n = w.size();
    if (n < 2) throw DomainError("two_occurrence_border needs |w| >= 2");
    std::vector<std::int32_t> z;
    detail::z_function(w.symbols(), z);
    // occ_ge[L] = occurrences of the length-L prefix inside w
    std::vector<std::size_t> occ_ge(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) ++occ_ge[z[i]];
    for (std::size_t L = n; L-- > 0;) occ_ge[L] += occ_ge[L + 1];
    std::optional<BorderInfo> result;
    std::size_t longest = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (static_cast<std::size_t>(z[i]) != n - i) continue;
        std::size_t len = n - i;
        longest = std::max(longest, len);
        if (occ_ge[len] == 2) {
            if (result)  // two distinct two-occurrence borders cannot coexist
                throw InternalError("multiple two-occurrence borders");
            result = BorderInfo{len, 2};
        }
    }
    if (result && result->border_length != longest)
        throw InternalError("two-occurrence border is not the longest border");
    return result;
}

std::size_t longest_repeated_suffix(const Word& w) {
    std::vector<Symbol> rev(w.symbols().rbegin(), w.symbols().rend());
    std::vector<std::int32_t> z;
    return detail::repeated_prefix_len(rev, z);
}

std::size_t longest_repeated_prefix(const Word& w) {
    std::vector<std::int32_t> z;
    return detail::repeated_prefix_len(w.symbols(), z);
}

AffixGap affix_gaps(const Word& w) {
    AffixGap g;
    std::vector<std::int32_t> z;
    std::vector<Symbol> rev(w.symbols().rbegin(), w.symbols().rend());
    g.t_len = detail::repeated_prefix_len(rev, z);
    if (g.t_len > 0)
        g.z_len = detail::repeated_prefix_len(std::span(rev).subspan(0, g.t_len), z);
    g.p_len = detail::repeated_prefix_len(w.symbols(), z);
    if (g.p_len > 0)
        g.q_len = detail::repeated_prefix_len(w.symbols().subspan(0, g.p_len), z);
    return g;
}

long long append_delta(const Word& u, Symbol x) {
    bool fresh = std::find(u.symbols().begin(), u.symbols().end(), x) == u.symbols().end();
    if (fresh) return 1;
    std::vector<Symbol> rev;
    rev.reserve(u.size() + 1);
    rev.push_back(x);
    rev.insert(rev.end(), u.symbols().rbegin(), u.symbols().rend());
    std::vector<std::int32_t> z;
    std::size_t t = detail::repeated_prefix_len(rev, z);
    std::size_t zl = t ? detail::repeated_prefix_len(std::span(rev).subspan(0, t), z) : 0;
    return static_cast<long long>(t) - static_cast<long long>(zl);
}

long long prepend_delta(const Word& u, Symbol x) {
    bool fresh = std::find(u.symbols().begin(), u.symbols().end(), x) == u.symbols().end();
    if (fresh) return 1;
    std::vector<Symbol> fwd;
    fwd.reserve(u.size() + 1);
    fwd.push_back(x);
    fwd.insert(fwd.end(), u.symbols().begin(), u.symbols().end());
    std::vector<std::int32_t> z;
    std::size_t p = detail::repeated_prefix_len(fwd, z);
    std::size_t q = p ? detail::repeated_prefix_len(std::span(fwd).subspan(0, p), z) : 0;
    return static_cast<long long>(p) - static_cast<long long>(q);
}

namespace {

std::string_view view_of(std::span<const Symbol> w, std::size_t pos, std::size_t len) {
    return {reinterpret_cast<const char*>(w.data()) + pos, len};
}

}  // namespace

std::vector<CountBreakdown> count_closed_factors_per_prefix(const Word& w, std::size_t cap) {
    const std::size_t n = w.size();
    if (n > cap)
        throw ResourceError("word exceeds the oracle cap; use the incremental counter");
    auto sp = w.symbols();
    std::unordered_set<std::string_view> seen;
    seen.reserve(n * 8);
    std::vector<long long> new_closed(n + 1, 0);
    std::vector<std::int32_t> z;
    std::vector<bool> letter_seen(w.alphabet_size(), false);
    std::vector<int> letters_at(n + 1, 0);
    int letters = 0;
    for (std::size_t e = 1; e <= n; ++e) {
        for (std::size_t s = 0; s < e; ++s) {
            if (!seen.insert(view_of(sp, s, e - s)).second) continue;
            if (is_closed_span(sp.subspan(s, e - s), z)) ++new_closed[e];
        }
        if (!letter_seen[sp[e - 1]]) {
            letter_seen[sp[e - 1]] = true;
            ++letters;
        }
        letters_at[e] = letters;
    }
    std::vector<CountBreakdown> out(n + 1);
    out[0] = {1, 0, 1};
    for (std::size_t i = 1; i <= n; ++i) {
        long long total = out[i - 1].total + new_closed[i];
        long long short_count = 1 + letters_at[i];
        out[i] = {total, total - short_count, short_count};
    }
    return out;
}

CountBreakdown count_closed_factors(const Word& w, std::size_t cap) {
    return count_closed_factors_per_prefix(w, cap).back();
}

std::set<Word> closed_factor_set(const Word& w, std::size_t cap) {
    const std::size_t n = w.size();
    if (n > cap)
        throw ResourceError("word exceeds the oracle cap; use the incremental counter");
    auto sp = w.symbols();
    std::unordered_set<std::string_view> seen;
    std::vector<std::int32_t> z;
    std::set<Word> out;
    out.insert(Word({}, w.alphabet_size()));
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t e = s + 1; e <= n; ++e) {
            if (!seen.insert(view_of(sp, s, e - s)).second) continue;
            if (is_closed_span(sp.subspan(s, e - s), z)) out.insert(w.subword(s, e - s));
        }
    }
    return out;
}

ClosedFactorCounter::ClosedFactorCounter(int alphabet_size, std::size_t cap)
    : alphabet_size_(alphabet_size), cap_(cap), seen_letter_(alphabet_size, false) {
    if (alphabet_size_ < 1 || alphabet_size_ > kMaxAlphabet)
        throw ValidationError("alphabet size must be in [1, 26]");
    sam_.reset(alphabet_size_, std::min<std::size_t>(cap_, 4096));
    history_.push_back({1, 0, 1});
}

void ClosedFactorCounter::push(Symbol x) {
    if (x >= alphabet_size_) throw DomainError("symbol code outside the counter alphabet");
    if (buffer_.size() >= cap_) throw ResourceError("counter buffer cap exceeded");
    buffer_.push_back(x);
    sam_.extend(x);
    std::size_t t = sam_.repeated_suffix_len();
    long long delta;
    if (!seen_letter_[x]) {
        seen_letter_[x] = true;
        ++distinct_letters_;
        if (t != 0) throw InternalError("fresh letter with a repeated suffix");
        delta = 1;
    } else {
        if (t == 0) throw InternalError("repeated letter without a repeated suffix");
        rev_scratch_.assign(buffer_.rbegin(), buffer_.rbegin() + t);
        std::size_t zl = detail::repeated_prefix_len(rev_scratch_, z_scratch_);
        delta = static_cast<long long>(t) - static_cast<long long>(zl);
    }
    last_t_len_ = t;
    long long total = history_.back().total + delta;
    long long short_count = 1 + distinct_letters_;
    history_.push_back({total, total - short_count, short_count});
}

void ClosedFactorCounter::push_all(const Word& w) {
    for (Symbol s : w.symbols()) push(s);
}

Rational max_exponent(const Word& w, std::size_t cap) {
    const std::size_t n = w.size();
    if (n < 1) throw DomainError("max_exponent needs a non-empty word");
    if (n > cap) throw ResourceError("word exceeds the exponent cap");
    auto sp = w.symbols();
    long long best_num = 1, best_den = 1;
    for (std::size_t p = 1; p < n; ++p) {
        long long run_next = 0;
        for (std::size_t i = n - p; i-- > 0;) {
            long long run = (sp[i] == sp[i + p]) ? run_next + 1 : 0;
            if (run > 0) {
                long long len = static_cast<long long>(p) + run;
                if (len * best_den > best_num * static_cast<long long>(p)) {
                    best_num = len;
                    best_den = static_cast<long long>(p);
                }
            }
            run_next = run;
        }
    }
    return Rational(best_num, best_den);
}

bool is_primitive(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw DomainError("is_primitive needs a non-empty word");
    std::vector<std::int32_t> z;
    detail::z_function(w.symbols(), z);
    std::size_t period = n - longest_border(w.symbols(), z);
    return period == n || n % period != 0;
}

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw DomainError("primitive_root needs a non-empty word");
    std::vector<std::int32_t> z;
    detail::z_function(w.symbols(), z);
    std::size_t period = n - longest_border(w.symbols(), z);
    if (period < n && n % period == 0) return w.subword(0, period);
    return w;
}

}  // namespace closedlab
