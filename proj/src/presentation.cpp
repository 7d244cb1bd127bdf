#include "cycpres/presentation.hpp"

#include <numeric>
#include <stdexcept>

namespace cycpres {

CyclicPresentation::CyclicPresentation(int n, Word w) : n_(n), w_(std::move(w)) {
    if (n_ < 1) throw std::invalid_argument("presentation needs n >= 1");
    if (w_.rank() != n_) throw std::invalid_argument("word rank does not match n");
    if (w_.empty()) throw std::invalid_argument("defining word must be non-empty");
    if (!w_.is_cyclically_reduced()) throw std::invalid_argument("defining word must be cyclically reduced");
}

std::vector<Word> CyclicPresentation::relators() const {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) out.push_back(relator(i));
    return out;
}

CyclicPresentation make_presentation(int n, const Word& w) { return CyclicPresentation(n, w); }

CyclicPresentation make_presentation(int n, std::string_view word_text) {
    return CyclicPresentation(n, parse_word(word_text, n));
}

std::vector<Word> Truncation::relators() const {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) out.push_back(shift(w, i));
    return out;
}

namespace {

// Does w equal prod_{i} theta^{ih}(u) for u = initial subword of length lu?
bool matches_period(const Word& w, int n, int h, int lu) {
    int k = w.length();
    int parts = k / lu;
    for (int i = 1; i < parts; ++i) {
        for (int j = 0; j < lu; ++j) {
            const Letter& a = w.letter(i * lu + j);
            const Letter& b = w.letter(j);
            if (a.sign != b.sign) return false;
            if (a.index != (b.index + static_cast<long>(i) * h) % n) return false;
        }
    }
    return true;
}

}  // namespace

PeriodDecomposition find_period(const CyclicPresentation& p) {
    const Word& w = p.word();
    if (root(w).power != 1) throw std::invalid_argument("find_period: word is a proper power; pass its root");
    int n = p.n(), k = w.length();
    int best_lu = k, best_h = 0;
    for (int h = 1; h < n; ++h) {
        int g = std::gcd(n, h);
        int parts = n / g;
        if (k % parts != 0) continue;
        int lu = k / parts;
        if (lu >= best_lu) continue;
        if (matches_period(w, n, h, lu)) {
            best_lu = lu;
            best_h = h;
        }
    }
    std::vector<Letter> head(w.letters().begin(), w.letters().begin() + best_lu);
    return {Word(w.rank(), std::move(head)), best_h};
}

RedundancyReport classify_redundancy(const CyclicPresentation& p) {
    const Word& w = p.word();
    int n = p.n(), k = w.length();

    RedundancyReport rep;
    rep.n = n;
    rep.word = w;
    auto rd = root(w);
    rep.root_power = rd.power;

    bool nonorientable = false;
    Word winv = invert(w);
    for (int h = 0; h < n && !nonorientable; ++h) {
        Word sw = shift(w, h);
        for (int t = 0; t < k && !nonorientable; ++t)
            if (sw == cyclic_permute(winv, t)) nonorientable = true;
    }

    CyclicPresentation root_p(n, rd.root);
    rep.period = find_period(root_p);

    if (nonorientable) {
        rep.kind = RedundancyKind::NonOrientable;
        auto [s, u] = nonorientable_normal_form(p);
        rep.rotation = s;
        rep.half_word = u;
        rep.refinement_size = n / 2;
    } else if (rep.period.h != 0) {
        rep.kind = RedundancyKind::OrientableRedundant;
        rep.refinement_size = std::gcd(n, rep.period.h);
    } else {
        rep.kind = RedundancyKind::Concise;
        rep.refinement_size = n;
    }
    return rep;
}

Truncation concise_refinement(const CyclicPresentation& p) {
    RedundancyReport rep = classify_redundancy(p);
    return Truncation{p.n(), rep.refinement_size, p.word()};
}

std::set<size_t> freely_redundant_oracle(const std::vector<Word>& relators) {
    for (const Word& r : relators)
        if (!r.is_cyclically_reduced()) throw std::invalid_argument("oracle: relators must be cyclically reduced");

    auto cyclically_equal = [](const Word& a, const Word& b) {
        if (a.length() != b.length()) return false;
        for (int s = 0; s < std::max(1, a.length()); ++s)
            if (cyclic_permute(b, s) == a) return true;
        return false;
    };

    std::set<size_t> marked;
    for (size_t j = 0; j < relators.size(); ++j) {
        if (free_reduce(relators[j]).empty()) {
            marked.insert(j);
            continue;
        }
        for (size_t i = 0; i < j; ++i) {
            if (marked.count(i)) continue;
            if (cyclically_equal(relators[j], relators[i]) ||
                cyclically_equal(relators[j], invert(relators[i]))) {
                marked.insert(j);
                break;
            }
        }
    }
    return marked;
}

std::pair<int, Word> nonorientable_normal_form(const CyclicPresentation& p) {
    const Word& w = p.word();
    int n = p.n(), k = w.length();
    if (n % 2 == 0 && k % 2 == 0) {
        int half = k / 2;
        for (int s = 0; s < k; ++s) {
            Word rot = cyclic_permute(w, s);
            std::vector<Letter> head(rot.letters().begin(), rot.letters().begin() + half);
            Word u(w.rank(), std::move(head));
            Word expect = invert(shift(u, n / 2));
            bool ok = true;
            for (int j = 0; j < half && ok; ++j) ok = rot.letter(half + j) == expect.letter(j);
            if (ok) return {s, u};
        }
    }
    throw std::invalid_argument("nonorientable_normal_form: presentation is not non-orientable");
}

const char* to_string(RedundancyKind k) {
    switch (k) {
        case RedundancyKind::Concise: return "concise";
        case RedundancyKind::OrientableRedundant: return "orientable_redundant";
        case RedundancyKind::NonOrientable: return "non_orientable";
    }
    return "?";
}

}  // namespace cycpres
