#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cycpres {

// One generator occurrence: x_index^sign with sign in {+1, -1}.
struct Letter {
    int index = 0;
    int sign = +1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter a) { return {a.index, -a.sign}; }

// Total order used for canonical forms: x0 < x0^-1 < x1 < x1^-1 < ...
inline int letter_code(Letter a) { return 2 * a.index + (a.sign < 0 ? 1 : 0); }

enum class SignClass { Positive, Negative, Mixed };

enum class AlternationClass { CyclicallyAlternating, Alternating, NonAlternating };

// A word in the free group of the given rank. Letters are stored as written;
// no free reduction is performed implicitly.
class Word {
  public:
    // Empty word of rank 0; a placeholder before assignment.
    Word() = default;
    Word(int rank, std::vector<Letter> letters);

    int rank() const { return rank_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(int i) const { return letters_[static_cast<size_t>(i)]; }

    bool is_reduced() const;
    bool is_cyclically_reduced() const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }
    // Lexicographic on letter codes; shorter words first on ties.
    std::strong_ordering operator<=>(const Word& other) const;

  private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

// Parses the textual word grammar: tokens separated by spaces or '.', each
// token 'x' DIGITS with an optional '^' exponent ('-'? DIGITS). An exponent e
// expands to |e| copies of the letter with the sign of e; subscripts are
// reduced mod rank. Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text, int rank);

// Space-separated tokens, "^-1" for inverse letters, powers never compressed.
std::string format_word(const Word& w);

bool is_cyclically_reduced(const Word& w);

struct RootDecomposition {
    Word root;
    int power;
};

// Maximal p with w = root^p. Requires w non-empty and cyclically reduced.
RootDecomposition root(const Word& w);

// Subscript shift x_i -> x_{i+h mod rank} applied to every letter.
Word shift(const Word& w, long h);

// Left rotation by s letters (phi^s).
Word cyclic_permute(const Word& w, long s);

Word invert(const Word& w);

// Requires w non-empty.
SignClass sign_class(const Word& w);

// Requires length >= 2. CyclicallyAlternating: no two cyclically adjacent
// letters share a sign. Alternating: the only same-sign adjacency is the
// wrap-around pair. NonAlternating otherwise.
AlternationClass alternation_class(const Word& w);

// Free reduction (repeated cancellation of adjacent inverse pairs).
Word free_reduce(const Word& w);

}  // namespace cycpres
