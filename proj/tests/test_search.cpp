#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/search.hpp"
#include "cycpres/selftest.hpp"
#include "cycpres/special.hpp"
#include "cycpres/word.hpp"

using namespace cycpres;

namespace {

EnumSpec grid(int n_lo, int n_hi, int k_lo, int k_hi) {
    EnumSpec s;
    s.n_min = n_lo;
    s.n_max = n_hi;
    s.k_min = k_lo;
    s.k_max = k_hi;
    return s;
}

std::vector<std::string> formatted(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(format_word(w));
    return out;
}

}  // namespace

TEST_CASE("canonical representative is the least orbit member") {
    const Word w = parse_word("x1 x0^-1", 2);
    CHECK(canonical_representative(w) == parse_word("x0 x1^-1", 2));
    CHECK_FALSE(is_canonical(w));
    CHECK(is_canonical(parse_word("x0 x1^-1", 2)));

    // Idempotent, and constant on the whole symmetry orbit.
    const Word v = parse_word("x0 x1 x3", 7);
    const Word canon = canonical_representative(v);
    CHECK(canonical_representative(canon) == canon);
    CHECK(canonical_representative(shift(v, 4)) == canon);
    CHECK(canonical_representative(cyclic_permute(v, 2)) == canon);
    CHECK(canonical_representative(invert(v)) == canon);
    CHECK(canonical_representative(invert(cyclic_permute(shift(v, 5), 1))) == canon);

    // Non-empty canonical words always start with x0.
    CHECK(canon.letter(0) == Letter{0, +1});
}

TEST_CASE("enumeration reproduces the documented small examples") {
    // Default filters keep proper powers.
    CHECK(formatted(enumerate_words(grid(2, 2, 2, 2))) ==
          std::vector<std::string>{"x0 x0", "x0 x1", "x0 x1^-1"});

    EnumSpec no_powers = grid(2, 2, 2, 2);
    no_powers.not_proper_power = true;
    CHECK(formatted(enumerate_words(no_powers)) ==
          std::vector<std::string>{"x0 x1", "x0 x1^-1"});

    CHECK(formatted(enumerate_words(grid(3, 3, 1, 1))) == std::vector<std::string>{"x0"});
}

TEST_CASE("enumeration order is n ascending, then length, then lexicographic") {
    const std::vector<Word> ws = enumerate_words(grid(1, 2, 1, 2));
    REQUIRE(ws.size() == 6);
    CHECK(ws[0] == parse_word("x0", 1));
    CHECK(ws[1] == parse_word("x0 x0", 1));
    CHECK(ws[2] == parse_word("x0", 2));
    CHECK(ws[3] == parse_word("x0 x0", 2));
    CHECK(ws[4] == parse_word("x0 x1", 2));
    CHECK(ws[5] == parse_word("x0 x1^-1", 2));
}

TEST_CASE("enumeration filters: positive-only and irreducible-only") {
    EnumSpec positive = grid(2, 2, 2, 2);
    positive.positive_only = true;
    CHECK(formatted(enumerate_words(positive)) ==
          std::vector<std::string>{"x0 x0", "x0 x1"});

    // x0 x0 x2 has a generator gap, hence a reducible presentation at n = 4.
    EnumSpec irr = grid(4, 4, 3, 3);
    irr.irreducible_only = true;
    const std::vector<std::string> got = formatted(enumerate_words(irr));
    CHECK(std::find(got.begin(), got.end(), "x0 x0 x2") == got.end());
    for (const Word& w : enumerate_words(irr)) CHECK(is_irreducible(make_presentation(4, w)));
}

TEST_CASE("enumeration without symmetry folding covers full orbits") {
    EnumSpec all = grid(2, 2, 2, 2);
    all.up_to_symmetry = false;
    const std::vector<Word> ws = enumerate_words(all);
    // Every word is cyclically reduced, and folding them recovers the three
    // canonical representatives.
    std::vector<std::string> canons;
    for (const Word& w : ws) {
        CHECK(is_cyclically_reduced(w));
        canons.push_back(format_word(canonical_representative(w)));
    }
    std::sort(canons.begin(), canons.end());
    canons.erase(std::unique(canons.begin(), canons.end()), canons.end());
    CHECK(canons == std::vector<std::string>{"x0 x0", "x0 x1", "x0 x1^-1"});
    CHECK(ws.size() > 3);
}

TEST_CASE("enumeration enforces the raw-candidate budget") {
    EnumSpec s = grid(2, 2, 2, 2);  // raw candidate count (2n)^k = 16
    s.budget = 15;
    CHECK_THROWS_WITH_AS(enumerate_words(s), doctest::Contains("budget exceeded"),
                         std::runtime_error);
    s.budget = 16;
    CHECK_NOTHROW(enumerate_words(s));
}

TEST_CASE("find_special locates the positive length-3 certificates at n = 7") {
    EnumSpec s = grid(7, 7, 3, 3);
    s.positive_only = true;
    const std::vector<SpecialHit> hits = find_special(s);
    REQUIRE(hits.size() == 4);
    std::vector<std::string> words;
    for (const SpecialHit& h : hits) {
        words.push_back(format_word(h.word));
        REQUIRE(h.certificate.special);
        CHECK(*h.certificate.m == 3);
        CHECK(h.certificate.k == 3);
        CHECK(h.certificate.nu == 1);
        CHECK(h.verdict.checker == "three_special_positive");
        CHECK(h.verdict.outcome == TheoremOutcome::Special);
        CHECK(h.n == 7);
    }
    CHECK(words == std::vector<std::string>{"x0 x1 x3", "x0 x1 x5", "x0 x3 x1", "x0 x3 x2"});
}

TEST_CASE("find_special at n = 4 finds only the length-4 boundary certificates") {
    CHECK(find_special(grid(4, 4, 1, 3)).empty());

    const std::vector<SpecialHit> hits = find_special(grid(4, 4, 4, 4));
    REQUIRE(hits.size() == 12);
    bool saw_alternating_square = false;
    for (const SpecialHit& h : hits) {
        REQUIRE(h.certificate.special);
        CHECK(*h.certificate.m == 2);
        CHECK(h.certificate.k == 4);
        CHECK(h.certificate.nu == 1);
        // (m, k) = (2, 4) sits on the hyperbolicity boundary 2/k + 1/m = 1.
        const CyclicPresentation p = make_presentation(4, h.word);
        CHECK_FALSE(group_property_flags(p, h.certificate).hyperbolic);
        if (h.word == parse_word("x0 x1 x0 x1^-1", 4)) saw_alternating_square = true;
    }
    CHECK(format_word(hits.front().word) == "x0 x0 x1^-1 x2");
    CHECK(saw_alternating_square);
}

TEST_CASE("cross-validation over small grids finds no counterexamples") {
    const CrossValidationReport rep = crossvalidate(grid(1, 4, 1, 4));
    CHECK(rep.words_checked == 166);
    CHECK(rep.ok());
    CHECK(rep.counterexamples.empty());

    // Every check is reported, even ones with zero eligible words.
    const std::vector<std::string> names = {
        "redundancy_oracle",       "refinement_star_graph",
        "structural_star_graph",   "eq2",
        "girth_bound_orientable",  "girth_bound_nonorientable",
        "girth_iff_end_signs",     "checker_agreement",
        "m_forcing",               "nu_divides_k",
        "hyperbolic_necessity",    "eq2_consequence",
        "large_flag",              "orbit_invariance",
    };
    for (const std::string& name : names) CHECK(rep.checks_run.count(name) == 1);
    CHECK(rep.checks_run.at("redundancy_oracle") == 166);
    CHECK(rep.checks_run.at("refinement_star_graph") == 166);
    CHECK(rep.checks_run.at("orbit_invariance") == 100);
}

TEST_CASE("cross-validation counts eligible words per check") {
    const CrossValidationReport rep = crossvalidate(grid(1, 2, 1, 2));
    CHECK(rep.words_checked == 6);
    CHECK(rep.ok());
    CHECK(rep.checks_run.at("redundancy_oracle") == 6);
    // Multiset identities only apply to words that are not proper powers.
    CHECK(rep.checks_run.at("structural_star_graph") == 4);
    CHECK(rep.checks_run.at("eq2") == 3);
}

TEST_CASE("the fixture corpus cross-validates cleanly at native sizes") {
    std::vector<Word> words;
    for (const Fixture& f : fixtures()) words.push_back(parse_word(f.word, f.n));
    const CrossValidationReport rep = crossvalidate_words(words);
    CHECK(rep.words_checked == static_cast<long long>(words.size()));
    CHECK(rep.ok());
}

TEST_CASE("worker count honours the environment override") {
    setenv("CYCPRES_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("CYCPRES_THREADS", "9999", 1);
    CHECK(worker_count() == 256);
    setenv("CYCPRES_THREADS", "not-a-number", 1);
    CHECK(worker_count() >= 1);
    unsetenv("CYCPRES_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("cross-validation reports are identical across worker counts") {
    const EnumSpec s = grid(1, 3, 1, 4);
    setenv("CYCPRES_THREADS", "1", 1);
    const CrossValidationReport serial = crossvalidate(s);
    setenv("CYCPRES_THREADS", "4", 1);
    const CrossValidationReport parallel = crossvalidate(s);
    unsetenv("CYCPRES_THREADS");

    CHECK(serial.words_checked == 61);
    CHECK(parallel.words_checked == serial.words_checked);
    CHECK(parallel.checks_run == serial.checks_run);
    REQUIRE(parallel.counterexamples.size() == serial.counterexamples.size());
    for (size_t i = 0; i < serial.counterexamples.size(); ++i) {
        CHECK(parallel.counterexamples[i].check == serial.counterexamples[i].check);
        CHECK(parallel.counterexamples[i].word == serial.counterexamples[i].word);
    }
}
