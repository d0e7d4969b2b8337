#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "closedlab/closed.hpp"
#include "closedlab/words.hpp"

using namespace closedlab;

namespace {

std::string letters(const Word& w) { return w.to_letters(); }

// u occurs internally in w: some occurrence has non-empty text on both sides
bool occurs_internally(const std::string& u, const std::string& w) {
    for (std::size_t i = 1; i + u.size() < w.size(); ++i)
        if (w.compare(i, u.size(), u) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("fibonacci numbers") {
    CHECK(fib_number(-1) == 1);
    CHECK(fib_number(0) == 1);
    CHECK(fib_number(1) == 2);
    CHECK(fib_number(7) == 34);
    CHECK(fib_number(10) == 144);
    for (int n = 1; n <= 40; ++n)
        CHECK(fib_number(n) == fib_number(n - 1) + fib_number(n - 2));
    CHECK_THROWS_AS(fib_number(-2), DomainError);
    CHECK(fib_number(90) > 0);
    CHECK_THROWS_AS(fib_number(91), ResourceError);
}

TEST_CASE("fibonacci number identities") {
    for (int n = 1; n <= 40; ++n) {
        long long sum = 0, sumsq = 0;
        for (int i = -1; i <= n - 2; ++i) {
            sum += fib_number(i);
            sumsq += fib_number(i) * fib_number(i);
        }
        CHECK(sum == fib_number(n) - 1);
        CHECK(sumsq == fib_number(n - 2) * fib_number(n - 1));
    }
}

TEST_CASE("fibonacci words") {
    CHECK(letters(fibonacci_word(-1)) == "b");
    CHECK(letters(fibonacci_word(0)) == "a");
    CHECK(letters(fibonacci_word(1)) == "ab");
    CHECK(letters(fibonacci_word(4)) == "abaababa");
    for (int n = -1; n <= 15; ++n)
        CHECK(fibonacci_word(n).size() == static_cast<std::size_t>(fib_number(n)));
    for (int n = 1; n <= 12; ++n)
        CHECK(fibonacci_word(n) == fibonacci_word(n - 1).concat(fibonacci_word(n - 2)));
    for (int n = 1; n <= 12; ++n) {
        std::string tail = letters(fibonacci_word(n)).substr(fib_number(n) - 2);
        CHECK(tail == (n % 2 == 0 ? "ba" : "ab"));
    }
    for (int n = 1; n <= 15; ++n) CHECK(is_primitive(fibonacci_word(n)));
    CHECK_THROWS_AS(fibonacci_word(30, 1000), ResourceError);
}

TEST_CASE("companion words") {
    CHECK(letters(fibonacci_companion(2)) == "aab");
    CHECK(letters(fibonacci_companion(3)) == "ababa");
    CHECK(letters(fibonacci_companion(4)) == "abaabaab");
    for (int n = 2; n <= 12; ++n) {
        std::string f = letters(fibonacci_word(n)), g = letters(fibonacci_companion(n));
        REQUIRE(f.size() == g.size());
        CHECK(f.substr(0, f.size() - 2) == g.substr(0, g.size() - 2));
        CHECK(f.substr(f.size() - 2) != g.substr(g.size() - 2));
        // f_n f_{n-1} = f_{n-1} g_n
        CHECK(fibonacci_word(n).concat(fibonacci_word(n - 1)) ==
              fibonacci_word(n - 1).concat(fibonacci_companion(n)));
    }
}

TEST_CASE("fibonacci word structural facts") {
    for (int n = 3; n <= 12; ++n) {
        std::string fn = letters(fibonacci_word(n));
        std::string fn1 = letters(fibonacci_word(n - 1));
        std::string suffix3 = fn.substr(fn.size() - 3);
        CHECK((suffix3 == "aab" || suffix3 == "aba"));
        for (std::size_t k = 1; k <= fn1.size(); ++k)
            CHECK(fn1.substr(fn1.size() - k) != fn.substr(fn.size() - k));
        CHECK_FALSE(occurs_internally(fn1, fn));
        CHECK_FALSE(occurs_internally(fn, fn1 + fn));
        std::string fn_minus = fn.substr(0, fn.size() - 1);
        CHECK_FALSE(occurs_internally(fn_minus, fn1 + fn_minus));
        CHECK_FALSE(occurs_internally(fn_minus, fn + fn_minus));
        bool proper_suffix =
            fn1.size() < fn_minus.size() &&
            fn_minus.compare(fn_minus.size() - fn1.size(), fn1.size(), fn1) == 0;
        CHECK_FALSE(proper_suffix);
    }
}

TEST_CASE("singular words") {
    CHECK(letters(singular_word(2)) == "bab");
    CHECK(letters(singular_word(3)) == "aabaa");
    for (int n = 2; n <= 12; ++n) {
        Word w = singular_word(n);
        CHECK(w.size() == static_cast<std::size_t>(fib_number(n)));
        CHECK(w == w.reversed());
    }
    CHECK_THROWS_AS(singular_word(1), DomainError);
}

TEST_CASE("rotations plus the singular word exhaust the factors of Fibonacci length") {
    for (int n = 2; n <= 10; ++n) {
        std::size_t size = static_cast<std::size_t>(fib_number(n));
        Word prefix = generate_prefix(FamilySpec::fibonacci(), 4 * size);
        std::set<std::string> factors;
        std::string p = letters(prefix);
        for (std::size_t i = 0; i + size <= p.size(); ++i) factors.insert(p.substr(i, size));
        std::set<std::string> expected;
        for (std::size_t i = 0; i < size; ++i)
            expected.insert(letters(conjugate(fibonacci_word(n), i)));
        expected.insert(letters(singular_word(n)));
        CHECK(factors == expected);
    }
}

TEST_CASE("conjugate") {
    Word w = Word::from_letters("abaab");
    CHECK(letters(conjugate(w, 0)) == "abaab");
    CHECK(letters(conjugate(w, 2)) == "aabab");
    CHECK(letters(conjugate(w, 5)) == "abaab");
    CHECK(letters(conjugate(Word::from_letters("aba"), 3)) == "aba");
    CHECK_THROWS_AS(conjugate(w, 6), DomainError);
}

TEST_CASE("sturmian prefixes") {
    std::vector<unsigned> ones{1};
    CHECK(letters(sturmian_prefix(ones, 8)) == "abaababa");
    CHECK(letters(sturmian_prefix(ones, 13)) == letters(generate_prefix(FamilySpec::fibonacci(), 13)));
    std::vector<unsigned> twos{2};
    CHECK(letters(sturmian_prefix(twos, 5)) == "aabaa");
    CHECK(letters(sturmian_prefix(twos, 7)) == "aabaaba");
    CHECK(sturmian_prefix(twos, 0).empty());
    std::vector<unsigned> bad{2, 0};
    CHECK_THROWS_AS(sturmian_prefix(bad, 5), ValidationError);
    std::vector<unsigned> empty;
    CHECK_THROWS_AS(sturmian_prefix(empty, 5), ValidationError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<unsigned> directive;
        std::uniform_int_distribution<unsigned> entry(1, 4);
        std::uniform_int_distribution<int> count(1, 4);
        for (int i = count(rng); i > 0; --i) directive.push_back(entry(rng));
        Word longer = sturmian_prefix(directive, 200);
        Word shorter = sturmian_prefix(directive, 77);
        CHECK(longer.subword(0, 77) == shorter);
    }
}

TEST_CASE("preset prefixes") {
    CHECK(letters(generate_prefix(FamilySpec::preset(FamilyKind::ThueMorse), 8)) == "abbabaab");
    CHECK(letters(generate_prefix(FamilySpec::fibonacci(), 13)) == "abaababaabaab");
    CHECK(generate_prefix(FamilySpec::preset(FamilyKind::Leech), 0).empty());
    CHECK(letters(generate_prefix(FamilySpec::preset(FamilyKind::PeriodDoubling), 8)) ==
          "abaaabab");
    CHECK(letters(generate_prefix(FamilySpec::preset(FamilyKind::FibonacciThueMorse), 20)) ==
          "abbbabaabaaabbaaabab");

    for (FamilyKind kind : {FamilyKind::Fibonacci, FamilyKind::ThueMorse,
                            FamilyKind::TernaryThueMorse, FamilyKind::PeriodDoubling,
                            FamilyKind::MephistoWaltz, FamilyKind::Leech, FamilyKind::Dejean,
                            FamilyKind::FibonacciThueMorse}) {
        FamilySpec spec = FamilySpec::preset(kind);
        Word longer = generate_prefix(spec, 300);
        Word shorter = generate_prefix(spec, 120);
        CHECK(longer.subword(0, 120) == shorter);
    }
}

TEST_CASE("square-free and threshold presets") {
    // Leech's word is square-free; the largest factor exponent stays below 2.
    Word leech = generate_prefix(FamilySpec::preset(FamilyKind::Leech), 400);
    CHECK(max_exponent(leech) < Rational(2));
    // Dejean's ternary word attains the repetition threshold 7/4 exactly.
    Word dejean = generate_prefix(FamilySpec::preset(FamilyKind::Dejean), 400);
    CHECK(max_exponent(dejean) == Rational(7, 4));
}

TEST_CASE("padded families") {
    FamilySpec spec = FamilySpec::padded(3, FamilySpec::fibonacci());
    Word w = generate_prefix(spec, 8);
    CHECK(letters(w) == "cccabaab");
    CHECK(w.alphabet_size() == 3);
    CHECK(letters(generate_prefix(spec, 2)) == "cc");
    CHECK(spec.name() == "padded:3:fibonacci");
    CHECK_THROWS_AS(FamilySpec::padded(0, FamilySpec::fibonacci()), ValidationError);
}

TEST_CASE("custom morphisms and parsing") {
    FamilySpec spec =
        FamilySpec::parse(R"(custom:{"seed":"a","rules":{"a":"ab","b":"a"}})");
    CHECK(letters(generate_prefix(spec, 13)) == "abaababaabaab");
    CHECK(spec.alphabet_size() == 2);

    CHECK_THROWS_AS(FamilySpec::parse(R"(custom:{"seed":"a","rules":{"a":"ba","b":"a"}})"),
                    ValidationError);  // not prolongable
    CHECK_THROWS_AS(FamilySpec::parse(R"(custom:{"seed":"a","rules":{"a":"ab","b":""}})"),
                    ValidationError);  // empty image
    CHECK_THROWS_AS(FamilySpec::parse("custom:{not json"), ValidationError);
    CHECK_THROWS_AS(FamilySpec::parse("no-such-family"), ValidationError);
    CHECK_THROWS_AS(FamilySpec::parse("sturmian:1,x"), ValidationError);
    CHECK_THROWS_AS(FamilySpec::parse("padded:abc"), ValidationError);

    for (const char* name :
         {"fibonacci", "thue-morse", "ternary-thue-morse", "period-doubling", "mephisto-waltz",
          "leech", "dejean", "fibonacci-thue-morse", "sturmian:2,1", "padded:10:fibonacci"}) {
        FamilySpec parsed = FamilySpec::parse(name);
        CHECK(FamilySpec::parse(parsed.name()).name() == parsed.name());
    }

    CHECK(FamilySpec::parse("dejean").unverified());
    CHECK(FamilySpec::parse("ftm").unverified());
    CHECK(FamilySpec::parse("padded:4:dejean").unverified());
    CHECK_FALSE(FamilySpec::parse("leech").unverified());
}

TEST_CASE("word basics") {
    Word w = Word::from_letters("abaab");
    CHECK(w.size() == 5);
    CHECK(w.alphabet_size() == 2);
    CHECK(letters(w.reversed()) == "baaba");
    CHECK(letters(w.subword(1, 3)) == "baa");
    CHECK(Word::from_letters("").empty());
    CHECK_THROWS_AS(Word::from_letters("aB"), ValidationError);
    CHECK_THROWS_AS(w.subword(3, 4), DomainError);
    CHECK_THROWS_AS(Word({2}, 2), ValidationError);
    CHECK(generate_prefix(FamilySpec::fibonacci(), 0).empty());
    CHECK_THROWS_AS(generate_prefix(FamilySpec::fibonacci(), 100, 50), ResourceError);
}
