#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "closedlab/errors.hpp"

namespace closedlab {

/// Symbol code; rendered as letters a, b, c, ... only at I/O boundaries.
using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 26;

/// Default cap on generated word length; guards runaway morphism unfolding.
inline constexpr std::size_t kDefaultMaxLen = std::size_t{1} << 20;

/// Immutable finite word over a small alphabet. Symbol codes are stored as
/// bytes; every code is < alphabet_size(). The empty word is allowed.
class Word {
  public:
    Word() = default;
    Word(std::vector<Symbol> symbols, int alphabet_size);

    /// Parses letters a-z. Alphabet size is the largest letter used + 1
    /// (at least 1 so the empty word is well-formed).
    static Word from_letters(std::string_view letters);
    std::string to_letters() const;

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    int alphabet_size() const { return alphabet_size_; }
    std::span<const Symbol> symbols() const { return symbols_; }

    Word subword(std::size_t pos, std::size_t len) const;
    Word reversed() const;
    Word concat(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

  private:
    std::vector<Symbol> symbols_;
    int alphabet_size_ = 1;
};

/// Fibonacci numbers with the two-seed convention fib_number(-1) = fib_number(0) = 1.
/// Exact 64-bit; throws ResourceError past the last representable index.
long long fib_number(int n);

/// n-th Fibonacci word over {a,b}: index -1 gives "b", 0 gives "a",
/// and each later word is the previous one followed by the one before it.
Word fibonacci_word(int n, std::size_t max_len = kDefaultMaxLen);

/// The two Fibonacci predecessors concatenated in swapped order; differs
/// from fibonacci_word(n) exactly in the last two positions (n >= 1).
Word fibonacci_companion(int n, std::size_t max_len = kDefaultMaxLen);

/// The unique factor of the infinite Fibonacci word of Fibonacci length that
/// is not a rotation of fibonacci_word(n); a palindrome for every n >= 2.
Word singular_word(int n, std::size_t max_len = kDefaultMaxLen);

/// Left rotation by i positions: w[i..] + w[..i], 0 <= i <= |w|.
Word conjugate(const Word& w, std::size_t i);

/// Prefix of the characteristic Sturmian word built by the standard-word
/// recursion; the directive sequence repeats cyclically and every entry
/// must be >= 1. Directive (1,1,1,...) reproduces the Fibonacci word.
Word sturmian_prefix(std::span<const unsigned> directive, std::size_t len,
                     std::size_t max_len = kDefaultMaxLen);

/// Substitution on letters; prolongable on its seed (the seed's image starts
/// with the seed and has length >= 2) with non-empty images throughout.
struct Morphism {
    Symbol seed = 0;
    int alphabet_size = 0;
    std::vector<std::vector<Symbol>> images;  // one per letter

    /// Builds from letter strings, e.g. {{"ab"},{"a"}} with seed 'a'.
    static Morphism from_letters(char seed, const std::vector<std::string>& images);
    void validate() const;  // throws ValidationError
};

enum class FamilyKind {
    Fibonacci,
    ThueMorse,
    TernaryThueMorse,
    PeriodDoubling,
    MephistoWaltz,
    Leech,
    Dejean,
    FibonacciThueMorse,
    Sturmian,
    Padded,
    CustomMorphic,
};

/// Descriptor of an infinite word; generation is a pure function of
/// (spec, len) and prefixes are nested. Immutable after construction.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Fibonacci;
    std::vector<unsigned> directive;          // Sturmian
    unsigned pad_count = 0;                   // Padded
    std::shared_ptr<const FamilySpec> base;   // Padded
    Morphism morphism;                        // CustomMorphic

    static FamilySpec fibonacci() { return {}; }
    static FamilySpec preset(FamilyKind kind);
    static FamilySpec sturmian(std::vector<unsigned> directive);
    static FamilySpec padded(unsigned m, FamilySpec base);
    static FamilySpec custom(Morphism m);

    /// Parses the CLI/JSON surface form: a preset name ("fibonacci",
    /// "thue-morse", ...), "sturmian:d1,d2,...", "padded:m:<base>", or
    /// "custom:{\"seed\":\"a\",\"rules\":{\"a\":\"ab\",\"b\":\"a\"}}".
    static FamilySpec parse(std::string_view text);

    std::string name() const;
    int alphabet_size() const;

    /// True for presets the source experiments only name without defining;
    /// callers are expected to require an explicit acknowledgment.
    bool unverified() const;
};

/// Length-len prefix of the infinite word described by spec.
Word generate_prefix(const FamilySpec& spec, std::size_t len,
                     std::size_t max_len = kDefaultMaxLen);

/// Morphism table of a built-in preset (those that are morphic).
Morphism preset_morphism(FamilyKind kind);

}  // namespace closedlab
