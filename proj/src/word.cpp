#include "cycpres/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cycpres {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
    if (rank_ < 1) throw std::invalid_argument("word rank must be at least 1");
    for (const Letter& a : letters_) {
        if (a.index < 0 || a.index >= rank_) throw std::invalid_argument("letter subscript out of range");
        if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

bool Word::is_reduced() const {
    for (size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i] == inverse(letters_[i - 1])) return false;
    return true;
}

bool Word::is_cyclically_reduced() const {
    if (!is_reduced()) return false;
    if (letters_.size() >= 2 && letters_.front() == inverse(letters_.back())) return false;
    return true;
}

std::string Word::str() const { return format_word(*this); }

std::strong_ordering Word::operator<=>(const Word& other) const {
    size_t n = std::min(letters_.size(), other.letters_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = letter_code(letters_[i]), b = letter_code(other.letters_[i]);
        if (a != b) return a <=> b;
    }
    return letters_.size() <=> other.letters_.size();
}

Word parse_word(std::string_view text, int rank) {
    if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
    std::vector<Letter> out;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad word at position " + std::to_string(i) + ": " + why);
    };
    auto digits = [&]() -> long {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digits");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000L) fail("number too large");
            ++i;
        }
        return v;
    };
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '.') {
            ++i;
            continue;
        }
        if (text[i] != 'x') fail("expected 'x'");
        ++i;
        long sub = digits();
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            long sgn = 1;
            if (i < text.size() && text[i] == '-') {
                sgn = -1;
                ++i;
            }
            exp = sgn * digits();
        }
        Letter a{static_cast<int>(mod(sub, rank)), exp < 0 ? -1 : +1};
        for (long c = 0; c < std::abs(exp); ++c) out.push_back(a);
    }
    return Word(rank, std::move(out));
}

std::string format_word(const Word& w) {
    std::string s;
    for (const Letter& a : w.letters()) {
        if (!s.empty()) s += ' ';
        s += 'x';
        s += std::to_string(a.index);
        if (a.sign < 0) s += "^-1";
    }
    return s;
}

bool is_cyclically_reduced(const Word& w) { return w.is_cyclically_reduced(); }

RootDecomposition root(const Word& w) {
    if (w.empty()) throw std::invalid_argument("root: word must be non-empty");
    if (!w.is_cyclically_reduced()) throw std::invalid_argument("root: word must be cyclically reduced");
    int k = w.length();
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        bool ok = true;
        for (int i = d; i < k && ok; ++i) ok = w.letter(i) == w.letter(i % d);
        if (ok) {
            std::vector<Letter> head(w.letters().begin(), w.letters().begin() + d);
            return {Word(w.rank(), std::move(head)), k / d};
        }
    }
    return {w, 1};  // unreachable: d == k always matches
}

Word shift(const Word& w, long h) {
    std::vector<Letter> out = w.letters();
    for (Letter& a : out) a.index = static_cast<int>(mod(a.index + h, w.rank()));
    return Word(w.rank(), std::move(out));
}

Word cyclic_permute(const Word& w, long s) {
    if (w.empty()) return w;
    long k = w.length();
    long r = mod(s, k);
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) out.push_back(w.letter(static_cast<int>((i + r) % k)));
    return Word(w.rank(), std::move(out));
}

Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& a : out) a.sign = -a.sign;
    return Word(w.rank(), std::move(out));
}

SignClass sign_class(const Word& w) {
    if (w.empty()) throw std::invalid_argument("sign_class: word must be non-empty");
    bool pos = false, neg = false;
    for (const Letter& a : w.letters()) (a.sign > 0 ? pos : neg) = true;
    if (pos && neg) return SignClass::Mixed;
    return pos ? SignClass::Positive : SignClass::Negative;
}

AlternationClass alternation_class(const Word& w) {
    if (w.length() < 2) throw std::invalid_argument("alternation_class: word must have length >= 2");
    int k = w.length();
    for (int i = 0; i + 1 < k; ++i)
        if (w.letter(i).sign == w.letter(i + 1).sign) return AlternationClass::NonAlternating;
    if (w.letter(k - 1).sign == w.letter(0).sign) return AlternationClass::Alternating;
    return AlternationClass::CyclicallyAlternating;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> out;
    for (const Letter& a : w.letters()) {
        if (!out.empty() && out.back() == inverse(a))
            out.pop_back();
        else
            out.push_back(a);
    }
    return Word(w.rank(), std::move(out));
}

}  // namespace cycpres
