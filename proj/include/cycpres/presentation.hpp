#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cycpres/word.hpp"

namespace cycpres {

// P_n(w): generators x_0..x_{n-1}, relators theta^i(w) for 0 <= i < n,
// where theta is the subscript shift x_i -> x_{i+1}.
class CyclicPresentation {
  public:
    CyclicPresentation(int n, Word w);

    int n() const { return n_; }
    const Word& word() const { return w_; }
    Word relator(int i) const { return shift(w_, i); }
    std::vector<Word> relators() const;

  private:
    int n_;
    Word w_;
};

CyclicPresentation make_presentation(int n, const Word& w);
CyclicPresentation make_presentation(int n, std::string_view word_text);

// P_{n,t}(w): same generators, only the first t relators w, theta(w), ...
struct Truncation {
    int n;
    int t;
    Word w;

    std::vector<Word> relators() const;
    int deficiency() const { return n - t; }
};

// A decomposition w = prod_{i=0}^{n/(n,h)-1} theta^{ih}(u) where u is the
// initial subword of w of length l(w)*(n,h)/n. h = 0 means u = w.
struct PeriodDecomposition {
    Word u;
    int h;
};

// Shortest-u decomposition (ties broken by smallest h). Requires the defining
// word not to be a proper power; pass the root first.
PeriodDecomposition find_period(const CyclicPresentation& p);

enum class RedundancyKind { Concise, OrientableRedundant, NonOrientable };

struct RedundancyReport {
    RedundancyKind kind = RedundancyKind::Concise;
    int n = 0;
    Word word;
    // w = root^root_power with root_power maximal.
    int root_power = 1;
    // Period decomposition of the root.
    PeriodDecomposition period;
    // Non-orientable only: least s >= 0 and u with
    // cyclic_permute(word, s) = u * invert(shift(u, n/2)).
    std::optional<int> rotation;
    std::optional<Word> half_word;
    // Size t of the concise truncation P_{n,t}(w).
    int refinement_size = 0;

    bool redundant() const { return kind != RedundancyKind::Concise; }
};

// Full classification: concise / orientable redundant / non-orientable.
// Non-orientability is detected by exhaustive search over shifts h and
// rotations t of shift(w,h) == cyclic_permute(invert(w), t).
RedundancyReport classify_redundancy(const CyclicPresentation& p);

// Concise truncation P_{n,t}(w) with t = refinement_size of the report.
Truncation concise_refinement(const CyclicPresentation& p);

// Brute-force redundancy detector, independent of the classification above.
// Scans relators in index order and marks one as redundant when it is freely
// trivial or a cyclic permutation of an earlier unmarked relator or of its
// inverse. Requires every relator cyclically reduced. Returns marked indices;
// empty result means the relator set is concise.
std::set<size_t> freely_redundant_oracle(const std::vector<Word>& relators);

// Least s >= 0 and half word u with cyclic_permute(w, s) = u * invert(shift(u, n/2)).
// Throws if the presentation is not non-orientable.
std::pair<int, Word> nonorientable_normal_form(const CyclicPresentation& p);

const char* to_string(RedundancyKind k);

}  // namespace cycpres
