#ifndef CYCPRES_SPECIAL_HPP
#define CYCPRES_SPECIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/stargraph.hpp"

namespace cycpres {

// True if D is a perfect difference set: writing k = |D| and M = k^2 - k + 1,
// the residues of D mod M are distinct and every nonzero residue mod M arises
// exactly once as a difference d - d' of two elements of D.
// Requires |D| >= 2 (throws std::invalid_argument otherwise).
bool is_perfect_difference_set(const std::vector<int>& differences);

// True if the gcd of n and all cyclic consecutive subscript differences of w
// equals 1.  Equivalently, the subscripts appearing in w generate Z/nZ
// together with the step pattern; presentations failing this decompose into
// disjoint copies of a smaller presentation.
bool is_irreducible(const CyclicPresentation& p);

// ---------------------------------------------------------------------------
// Direct verification of specialness from the star graph.
// ---------------------------------------------------------------------------

struct ComponentReport {
    int vertices = 0;
    int edges = 0;
    std::optional<int> girth;  // null when the component is acyclic
    int diameter = 0;
    int min_degree = 0;
    std::string recognized;  // e.g. "complete_bipartite(3)"
};

struct SpecialCertificate {
    bool special = false;
    std::optional<int> m;  // common component diameter (set when uniform)
    int k = 0;             // relator length
    int nu = 0;            // number of star graph components
    std::vector<ComponentReport> components;
    std::string failure_reason;  // first violated condition when not special
};

// Decide (m,k,nu)-specialness by building the star graph and checking the
// defining conditions: all components pairwise isomorphic, each connected,
// bipartite, of minimum degree >= 3, with girth equal to twice the diameter m,
// where m >= 2, the relator length k >= 3, and k >= 4 whenever m = 2.
SpecialCertificate is_special_direct(const CyclicPresentation& p);

// ---------------------------------------------------------------------------
// Structure-theorem checkers: decide specialness from the difference
// multisets of the period/half word, without building the star graph.
// ---------------------------------------------------------------------------

enum class TheoremOutcome { Special, NotSpecial, NotApplicable };

const char* to_string(TheoremOutcome o);

struct TheoremVerdict {
    std::string checker = "none";  // which structural criterion was applied
    TheoremOutcome outcome = TheoremOutcome::NotApplicable;
    int m = 0;   // 2 or 3 when outcome == Special
    int k = 0;   // relator length
    int nu = 0;  // component count when outcome == Special
    std::string reason;  // failed clause, or why no criterion applies

    // Witness data, present when outcome == Special.
    std::optional<std::vector<int>> pds;  // perfect difference set (m = 3)
    std::optional<std::string> circulant_form;  // component structure (m = 2)
    std::optional<int> q0;  // base point of the arithmetic class of Q
};

// (3,k,nu)-specialness for positive words: n must be nu*(l^2-l+1) for the
// period length l, the multiset Q must be a perfect difference set, and all
// entries of Q must share a residue mod nu.
TheoremVerdict check_3knu(const CyclicPresentation& p);

// (2,k,nu)-specialness via the case analysis on the period/half word: positive
// (or negative, after inverting), cyclically alternating, mixed, and the two
// non-orientable cases.
TheoremVerdict check_2knu(const CyclicPresentation& p);

// Dispatch to the applicable structural criteria and combine their verdicts.
// Returns NotApplicable when the word is a proper power, the presentation is
// reducible, or no criterion covers the word's sign pattern at its length.
TheoremVerdict theorem_verdict(const CyclicPresentation& p);

// ---------------------------------------------------------------------------
// Group-theoretic consequences.
// ---------------------------------------------------------------------------

enum class Largeness { Yes, Unknown };

enum class TitsClass {
    FreeSubgroup,
    SolvableZ,
    SolvableZ2,
    SolvableBS1m1,
    ConjecturalFreeSubgroup,
    Unknown,
};

const char* to_string(Largeness l);
const char* to_string(TitsClass t);

struct GroupFlags {
    Largeness large = Largeness::Unknown;
    TitsClass tits = TitsClass::Unknown;
    bool hyperbolic = false;  // special and 2/k + 1/m < 1
};

GroupFlags group_property_flags(const CyclicPresentation& p,
                                const SpecialCertificate& cert);
GroupFlags group_property_flags(const CyclicPresentation& p);

}  // namespace cycpres

#endif  // CYCPRES_SPECIAL_HPP
