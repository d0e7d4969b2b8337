// Deliberately naive reference implementations, kept independent of the
// library's algorithms (no Z-arrays, no automata). Small inputs only.
#pragma once

#include <random>
#include <set>
#include <string>

#include "closedlab/rational.hpp"

namespace testoracle {

inline std::size_t occurrences(const std::string& w, const std::string& p) {
    if (p.empty()) return w.size() + 1;
    std::size_t count = 0;
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i)
        if (w.compare(i, p.size(), p) == 0) ++count;
    return count;
}

inline bool is_closed(const std::string& w) {
    if (w.size() <= 1) return true;
    for (std::size_t len = w.size() - 1; len >= 1; --len) {
        if (w.compare(0, len, w, w.size() - len, len) != 0) continue;
        return occurrences(w, w.substr(0, len)) == 2;
    }
    return false;
}

inline std::set<std::string> factors(const std::string& w) {
    std::set<std::string> out;
    out.insert("");
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j) out.insert(w.substr(i, j - i));
    return out;
}

inline long long closed_count(const std::string& w) {
    long long total = 0;
    for (const std::string& f : factors(w))
        if (is_closed(f)) ++total;
    return total;
}

inline std::size_t minimal_period(const std::string& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return w.size();
}

inline closedlab::Rational max_exponent(const std::string& w) {
    closedlab::Rational best(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
            std::string f = w.substr(i, j - i);
            closedlab::Rational e(static_cast<long long>(f.size()),
                                  static_cast<long long>(minimal_period(f)));
            if (best < e) best = e;
        }
    }
    return best;
}

inline std::string random_word(std::mt19937& rng, std::size_t len, int alphabet) {
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<char>('a' + dist(rng)));
    return out;
}

}  // namespace testoracle
