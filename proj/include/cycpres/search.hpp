#ifndef CYCPRES_SEARCH_HPP
#define CYCPRES_SEARCH_HPP

#include <map>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/special.hpp"

namespace cycpres {

// Inclusive enumeration grid plus candidate filters.  The budget caps the raw
// candidate count, i.e. the sum of (2n)^k over the grid cells.
struct EnumSpec {
    int n_min = 1;
    int n_max = 6;
    int k_min = 1;
    int k_max = 6;
    bool cyclically_reduced = true;
    bool not_proper_power = false;
    bool positive_only = false;
    bool irreducible_only = false;
    bool up_to_symmetry = true;
    long long budget = 100'000'000;
};

// Lexicographically least member (letter order x0 < x0^-1 < x1 < ...) of the
// orbit of w under subscript shifts, letter rotations, and inversion.
Word canonical_representative(const Word& w);
bool is_canonical(const Word& w);

// Every word passing the EnumSpec filters, ordered by (n, k, lexicographic).
// Throws std::runtime_error beginning with "budget exceeded" when the raw
// candidate count passes spec.budget.
std::vector<Word> enumerate_words(const EnumSpec& spec);

struct Counterexample {
    std::string check;
    int n = 0;
    std::string word;
    std::string detail;
};

struct CrossValidationReport {
    long long words_checked = 0;
    std::map<std::string, long long> checks_run;  // executions per check
    std::vector<Counterexample> counterexamples;  // deterministic order
    double wall_seconds = 0.0;                    // diagnostic only
    bool ok() const { return counterexamples.empty(); }
};

// Batch validation of the library's invariants over every enumerated word:
//   - redundancy classification against the free-redundancy oracle, and
//     concise refinements that are themselves oracle-clean;
//   - refinement and full presentations sharing one star graph;
//   - direct star graphs equal to the ones predicted from difference
//     multisets, plus the subscript-sum congruence;
//   - girth bounds and the girth-2 end-sign characterization;
//   - direct specialness against the structure-theorem checkers;
//   - the side conditions on special verdicts (component count divides
//     relator data, hyperbolicity inequality, largeness flag);
//   - spot checks that verdicts are constant on symmetry orbits.
CrossValidationReport crossvalidate(const EnumSpec& spec);

// Same battery of checks over an explicit word list (e.g. named fixtures at
// their native sizes).
CrossValidationReport crossvalidate_words(const std::vector<Word>& words);

struct SpecialHit {
    int n = 0;
    Word word;
    SpecialCertificate certificate;
    TheoremVerdict verdict;
};

// All enumerated presentations with a positive direct certificate, ordered by
// (n, k, word).
std::vector<SpecialHit> find_special(const EnumSpec& spec);

// CYCPRES_THREADS when set (>= 1), else the hardware thread count.
int worker_count();

}  // namespace cycpres

#endif  // CYCPRES_SEARCH_HPP
