#include "closedlab/words.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

#include <json.hpp>

namespace closedlab {

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 1 || alphabet_size_ > kMaxAlphabet)
        throw ValidationError("alphabet size must be in [1, 26]");
    for (Symbol s : symbols_)
        if (s >= alphabet_size_) throw ValidationError("symbol code outside alphabet");
}

Word Word::from_letters(std::string_view letters) {
    std::vector<Symbol> syms;
    syms.reserve(letters.size());
    int alpha = 1;
    for (char c : letters) {
        if (c < 'a' || c > 'z') throw ValidationError("words use letters a-z");
        Symbol code = static_cast<Symbol>(c - 'a');
        alpha = std::max(alpha, code + 1);
        syms.push_back(code);
    }
    return Word(std::move(syms), alpha);
}

std::string Word::to_letters() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('a' + s));
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw DomainError("subword out of range");
    return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len),
                alphabet_size_);
}

Word Word::reversed() const {
    std::vector<Symbol> syms(symbols_.rbegin(), symbols_.rend());
    return Word(std::move(syms), alphabet_size_);
}

Word Word::concat(const Word& other) const {
    std::vector<Symbol> syms = symbols_;
    syms.insert(syms.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(syms), std::max(alphabet_size_, other.alphabet_size_));
}

long long fib_number(int n) {
    if (n < -1) throw DomainError("fib_number index must be >= -1");
    long long a = 1, b = 1;  // F(-1), F(0)
    if (n <= 0) return 1;
    for (int i = 1; i <= n; ++i) {
        if (a > std::numeric_limits<long long>::max() - b)
            throw ResourceError("fib_number overflows 64 bits");
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

Word fibonacci_word(int n, std::size_t max_len) {
    if (n < -1) throw DomainError("fibonacci_word index must be >= -1");
    long long target = fib_number(n);
    if (target > static_cast<long long>(max_len))
        throw ResourceError("fibonacci_word longer than the configured cap");
    if (n == -1) return Word({1}, 2);
    if (n == 0) return Word({0}, 2);
    std::vector<Symbol> prev{1}, cur{0};  // f_{-1}, f_0
    for (int i = 1; i <= n; ++i) {
        std::vector<Symbol> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Word(std::move(cur), 2);
}

Word fibonacci_companion(int n, std::size_t max_len) {
    if (n < 1) throw DomainError("fibonacci_companion index must be >= 1");
    return fibonacci_word(n - 2, max_len).concat(fibonacci_word(n - 1, max_len));
}

Word singular_word(int n, std::size_t max_len) {
    if (n < 2) throw DomainError("singular_word index must be >= 2");
    Word fn = fibonacci_word(n, max_len);
    Word core = fn.subword(0, fn.size() - 2);
    Symbol wrap = (n % 2 == 1) ? Symbol{0} : Symbol{1};  // a for odd, b for even
    std::vector<Symbol> syms;
    syms.reserve(fn.size());
    syms.push_back(wrap);
    syms.insert(syms.end(), core.symbols().begin(), core.symbols().end());
    syms.push_back(wrap);
    return Word(std::move(syms), 2);
}

Word conjugate(const Word& w, std::size_t i) {
    if (i > w.size()) throw DomainError("rotation amount exceeds word length");
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    syms.insert(syms.end(), w.symbols().begin() + i, w.symbols().end());
    syms.insert(syms.end(), w.symbols().begin(), w.symbols().begin() + i);
    return Word(std::move(syms), w.alphabet_size());
}

Word sturmian_prefix(std::span<const unsigned> directive, std::size_t len, std::size_t max_len) {
    if (directive.empty()) throw ValidationError("directive sequence must be non-empty");
    for (unsigned d : directive)
        if (d < 1) throw ValidationError("directive entries must be >= 1");
    if (len > max_len) throw ResourceError("sturmian_prefix longer than the configured cap");
    if (len == 0) return Word({}, 2);
    std::vector<Symbol> prev{1}, cur{0};  // seeds "b", "a"
    std::size_t step = 0;
    while (cur.size() < len) {
        unsigned d = directive[step % directive.size()];
        ++step;
        std::vector<Symbol> next;
        next.reserve(std::min(max_len, cur.size() * d + prev.size()));
        for (unsigned rep = 0; rep < d && next.size() < len; ++rep)
            next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        if (next.size() > len) next.resize(len);
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(len);
    return Word(std::move(cur), 2);
}

Morphism Morphism::from_letters(char seed, const std::vector<std::string>& images) {
    Morphism m;
    m.alphabet_size = static_cast<int>(images.size());
    m.seed = static_cast<Symbol>(seed - 'a');
    for (const std::string& img : images) {
        std::vector<Symbol> syms;
        syms.reserve(img.size());
        for (char c : img) syms.push_back(static_cast<Symbol>(c - 'a'));
        m.images.push_back(std::move(syms));
    }
    m.validate();
    return m;
}

void Morphism::validate() const {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw ValidationError("morphism alphabet size must be in [1, 26]");
    if (static_cast<int>(images.size()) != alphabet_size)
        throw ValidationError("morphism needs one image per letter");
    if (seed >= alphabet_size) throw ValidationError("morphism seed outside alphabet");
    for (const auto& img : images) {
        if (img.empty()) throw ValidationError("morphism images must be non-empty");
        for (Symbol s : img)
            if (s >= alphabet_size) throw ValidationError("morphism image uses a foreign letter");
    }
    if (images[seed].size() < 2 || images[seed][0] != seed)
        throw ValidationError("morphism is not prolongable on its seed");
}

namespace {

Word morphic_prefix(const Morphism& m, std::size_t len, std::size_t max_len) {
    if (len > max_len) throw ResourceError("prefix longer than the configured cap");
    m.validate();
    std::vector<Symbol> cur{m.seed};
    while (cur.size() < len) {
        std::vector<Symbol> next;
        next.reserve(std::min(len, cur.size() * 2));
        for (Symbol s : cur) {
            const auto& img = m.images[s];
            next.insert(next.end(), img.begin(), img.end());
            if (next.size() >= len) break;
        }
        if (next.size() > len) next.resize(len);
        cur = std::move(next);
    }
    cur.resize(len);
    return Word(std::move(cur), m.alphabet_size);
}

// Parity of the Zeckendorf digit count of each index, rendered a/b.
Word zeckendorf_parity_prefix(std::size_t len, std::size_t max_len) {
    if (len > max_len) throw ResourceError("prefix longer than the configured cap");
    std::vector<long long> fibs;  // 1, 2, 3, 5, ...
    for (int i = 0; fib_number(i) <= static_cast<long long>(len) + 1; ++i)
        fibs.push_back(fib_number(i));
    std::vector<Symbol> syms;
    syms.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        long long n = static_cast<long long>(i);
        int parity = 0;
        for (auto it = fibs.rbegin(); it != fibs.rend() && n > 0; ++it) {
            if (*it <= n) {
                n -= *it;
                parity ^= 1;
            }
        }
        syms.push_back(static_cast<Symbol>(parity));
    }
    return Word(std::move(syms), 2);
}

std::string rotate_letters(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = (c == 'c') ? 'a' : static_cast<char>(c + 1);
    return out;
}

}  // namespace

Morphism preset_morphism(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Fibonacci:
            return Morphism::from_letters('a', {"ab", "a"});
        case FamilyKind::ThueMorse:
            return Morphism::from_letters('a', {"ab", "ba"});
        case FamilyKind::TernaryThueMorse:
            return Morphism::from_letters('a', {"abc", "ac", "b"});
        case FamilyKind::PeriodDoubling:
            return Morphism::from_letters('a', {"ab", "aa"});
        case FamilyKind::MephistoWaltz:
            return Morphism::from_letters('a', {"aab", "bba"});
        case FamilyKind::Leech: {
            // 13-uniform square-free substitution, letter-rotation symmetric.
            std::string a = "abcbacbcabcba";
            return Morphism::from_letters('a', {a, rotate_letters(a), rotate_letters(rotate_letters(a))});
        }
        case FamilyKind::Dejean: {
            // 19-uniform substitution whose fixed point attains the ternary
            // repetition threshold 7/4.
            std::string a = "abcacbcabcbacbcacba";
            return Morphism::from_letters('a', {a, rotate_letters(a), rotate_letters(rotate_letters(a))});
        }
        default:
            throw DomainError("family preset is not morphic");
    }
}

FamilySpec FamilySpec::preset(FamilyKind kind) {
    FamilySpec spec;
    spec.kind = kind;
    return spec;
}

FamilySpec FamilySpec::sturmian(std::vector<unsigned> directive) {
    FamilySpec spec;
    spec.kind = FamilyKind::Sturmian;
    spec.directive = std::move(directive);
    if (spec.directive.empty()) throw ValidationError("directive sequence must be non-empty");
    for (unsigned d : spec.directive)
        if (d < 1) throw ValidationError("directive entries must be >= 1");
    return spec;
}

FamilySpec FamilySpec::padded(unsigned m, FamilySpec base) {
    if (m < 1) throw ValidationError("pad count must be >= 1");
    FamilySpec spec;
    spec.kind = FamilyKind::Padded;
    spec.pad_count = m;
    spec.base = std::make_shared<const FamilySpec>(std::move(base));
    if (spec.base->alphabet_size() >= kMaxAlphabet)
        throw ValidationError("no fresh letter available for padding");
    return spec;
}

FamilySpec FamilySpec::custom(Morphism m) {
    m.validate();
    FamilySpec spec;
    spec.kind = FamilyKind::CustomMorphic;
    spec.morphism = std::move(m);
    return spec;
}

int FamilySpec::alphabet_size() const {
    switch (kind) {
        case FamilyKind::Fibonacci:
        case FamilyKind::ThueMorse:
        case FamilyKind::PeriodDoubling:
        case FamilyKind::MephistoWaltz:
        case FamilyKind::FibonacciThueMorse:
        case FamilyKind::Sturmian:
            return 2;
        case FamilyKind::TernaryThueMorse:
        case FamilyKind::Leech:
        case FamilyKind::Dejean:
            return 3;
        case FamilyKind::Padded:
            return base->alphabet_size() + 1;
        case FamilyKind::CustomMorphic:
            return morphism.alphabet_size;
    }
    throw InternalError("unhandled family kind");
}

bool FamilySpec::unverified() const {
    if (kind == FamilyKind::Dejean || kind == FamilyKind::FibonacciThueMorse) return true;
    if (kind == FamilyKind::Padded) return base->unverified();
    return false;
}

std::string FamilySpec::name() const {
    switch (kind) {
        case FamilyKind::Fibonacci: return "fibonacci";
        case FamilyKind::ThueMorse: return "thue-morse";
        case FamilyKind::TernaryThueMorse: return "ternary-thue-morse";
        case FamilyKind::PeriodDoubling: return "period-doubling";
        case FamilyKind::MephistoWaltz: return "mephisto-waltz";
        case FamilyKind::Leech: return "leech";
        case FamilyKind::Dejean: return "dejean";
        case FamilyKind::FibonacciThueMorse: return "fibonacci-thue-morse";
        case FamilyKind::Sturmian: {
            std::string out = "sturmian:";
            for (std::size_t i = 0; i < directive.size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(directive[i]);
            }
            return out;
        }
        case FamilyKind::Padded:
            return "padded:" + std::to_string(pad_count) + ":" + base->name();
        case FamilyKind::CustomMorphic: {
            std::string out = "custom:";
            out.push_back(static_cast<char>('a' + morphism.seed));
            for (int c = 0; c < morphism.alphabet_size; ++c) {
                out.push_back(c ? ',' : ':');
                out.push_back(static_cast<char>('a' + c));
                out += "->";
                for (Symbol s : morphism.images[c]) out.push_back(static_cast<char>('a' + s));
            }
            return out;
        }
    }
    throw InternalError("unhandled family kind");
}

FamilySpec FamilySpec::parse(std::string_view text) {
    auto is_name = [&](std::initializer_list<std::string_view> names) {
        for (auto n : names)
            if (text == n) return true;
        return false;
    };
    if (is_name({"fibonacci", "fib", "f"})) return preset(FamilyKind::Fibonacci);
    if (is_name({"thue-morse", "thuemorse", "tm"})) return preset(FamilyKind::ThueMorse);
    if (is_name({"ternary-thue-morse", "ttm"})) return preset(FamilyKind::TernaryThueMorse);
    if (is_name({"period-doubling", "pd"})) return preset(FamilyKind::PeriodDoubling);
    if (is_name({"mephisto-waltz", "mw"})) return preset(FamilyKind::MephistoWaltz);
    if (is_name({"leech"})) return preset(FamilyKind::Leech);
    if (is_name({"dejean"})) return preset(FamilyKind::Dejean);
    if (is_name({"fibonacci-thue-morse", "ftm"})) return preset(FamilyKind::FibonacciThueMorse);

    if (text.starts_with("sturmian:")) {
        std::string_view rest = text.substr(9);
        std::vector<unsigned> directive;
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            unsigned value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw ValidationError("bad sturmian directive entry");
            directive.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return sturmian(std::move(directive));
    }
    if (text.starts_with("padded:")) {
        std::string_view rest = text.substr(7);
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw ValidationError("padded spec needs padded:<m>:<base>");
        std::string_view mtok = rest.substr(0, colon);
        unsigned m = 0;
        auto [p, ec] = std::from_chars(mtok.data(), mtok.data() + mtok.size(), m);
        if (ec != std::errc{} || p != mtok.data() + mtok.size() || m < 1)
            throw ValidationError("bad pad count");
        return padded(m, parse(rest.substr(colon + 1)));
    }
    if (text.starts_with("custom:")) {
        std::string_view body = text.substr(7);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("bad custom morphism JSON: ") + e.what());
        }
        if (!j.contains("seed") || !j.contains("rules"))
            throw ValidationError("custom morphism needs \"seed\" and \"rules\"");
        std::string seed = j["seed"].get<std::string>();
        if (seed.size() != 1 || seed[0] < 'a' || seed[0] > 'z')
            throw ValidationError("seed must be a single letter a-z");
        const auto& rules = j["rules"];
        int alpha = 0;
        for (auto it = rules.begin(); it != rules.end(); ++it) {
            if (it.key().size() != 1 || it.key()[0] < 'a' || it.key()[0] > 'z')
                throw ValidationError("rule keys must be single letters a-z");
            alpha = std::max(alpha, it.key()[0] - 'a' + 1);
        }
        std::vector<std::string> images(alpha);
        std::vector<bool> defined(alpha, false);
        for (auto it = rules.begin(); it != rules.end(); ++it) {
            int c = it.key()[0] - 'a';
            images[c] = it.value().get<std::string>();
            defined[c] = true;
        }
        for (int c = 0; c < alpha; ++c)
            if (!defined[c]) throw ValidationError("every letter up to the largest used needs a rule");
        return custom(Morphism::from_letters(seed[0], images));
    }
    throw ValidationError("unknown family: " + std::string(text));
}

Word generate_prefix(const FamilySpec& spec, std::size_t len, std::size_t max_len) {
    if (len > max_len) throw ResourceError("prefix longer than the configured cap");
    switch (spec.kind) {
        case FamilyKind::Fibonacci:
        case FamilyKind::ThueMorse:
        case FamilyKind::TernaryThueMorse:
        case FamilyKind::PeriodDoubling:
        case FamilyKind::MephistoWaltz:
        case FamilyKind::Leech:
        case FamilyKind::Dejean:
            return morphic_prefix(preset_morphism(spec.kind), len, max_len);
        case FamilyKind::FibonacciThueMorse:
            return zeckendorf_parity_prefix(len, max_len);
        case FamilyKind::Sturmian:
            return sturmian_prefix(spec.directive, len, max_len);
        case FamilyKind::Padded: {
            Symbol pad = static_cast<Symbol>(spec.base->alphabet_size());
            std::size_t pad_len = std::min<std::size_t>(spec.pad_count, len);
            std::vector<Symbol> syms(pad_len, pad);
            if (len > pad_len) {
                Word tail = generate_prefix(*spec.base, len - pad_len, max_len);
                syms.insert(syms.end(), tail.symbols().begin(), tail.symbols().end());
            }
            return Word(std::move(syms), spec.alphabet_size());
        }
        case FamilyKind::CustomMorphic:
            return morphic_prefix(spec.morphism, len, max_len);
    }
    throw InternalError("unhandled family kind");
}

}  // namespace closedlab
