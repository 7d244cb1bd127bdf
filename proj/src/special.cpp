#include "cycpres/special.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cycpres/word.hpp"

namespace cycpres {

namespace {

int mod(long long a, long long m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Largest t such that the letter string of u is a t-th power.  Unlike root(),
// this makes no cyclic-reducedness assumption on u.
int literal_power(const Word& u) {
    const int len = u.length();
    for (int d = 1; d <= len / 2; ++d) {
        if (len % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < len && repeats; ++i)
            repeats = u.letter(i) == u.letter(i % d);
        if (repeats) return len / d;
    }
    return 1;
}

int exponent_sum(const Word& u, int index) {
    int s = 0;
    for (const Letter& l : u.letters())
        if (l.index == index) s += l.sign;
    return s;
}

bool is_cyclic_permutation_of(const Word& w, const Word& target) {
    if (w.length() != target.length()) return false;
    for (int s = 0; s < w.length(); ++s)
        if (cyclic_permute(w, s) == target) return true;
    return false;
}

// x_a x_b x_a ... x_b x_a of odd length >= 3, all letters the same sign.
bool is_odd_unisign_alternating(const Word& u) {
    const int len = u.length();
    if (len < 3 || len % 2 == 0) return false;
    const int sign = u.letter(0).sign;
    const int a = u.letter(0).index;
    const int b = u.letter(1).index;
    if (a == b) return false;
    for (int i = 0; i < len; ++i) {
        if (u.letter(i).sign != sign) return false;
        if (u.letter(i).index != (i % 2 == 0 ? a : b)) return false;
    }
    return true;
}

// Residue target {step*j mod n, (n - step*j) mod n : j odd, step*j <= n/2 - step},
// optionally together with n/2.  Callers guarantee step divides n/2.
std::set<int> odd_family_target(int n, int step, bool with_half) {
    std::set<int> target;
    for (int j = 1; step * j <= n / 2 - step; j += 2) {
        target.insert(mod(step * j, n));
        target.insert(mod(n - step * j, n));
    }
    if (with_half) target.insert(n / 2);
    return target;
}

// Plus-minus set form: entries have no repeated residue mod n, never contain
// both a and n-a unless 2a = 0 mod n, and their closure under negation equals
// the target residue set.
bool pm_set_form(const std::vector<int>& entries, const std::set<int>& target,
                 int n) {
    std::set<int> seen;
    for (int a : entries)
        if (!seen.insert(mod(a, n)).second) return false;
    for (int a : seen)
        if (mod(2 * a, n) != 0 && seen.count(mod(n - a, n))) return false;
    std::set<int> closure;
    for (int a : seen) {
        closure.insert(a);
        closure.insert(mod(n - a, n));
    }
    return closure == target;
}

// True when the entries are exactly one full residue class mod `step` inside
// [0, n); q0_out receives the smallest member.
bool full_residue_class(const std::vector<int>& entries, int n, int step,
                        int& q0_out) {
    if (step <= 0 || n % step != 0) return false;
    std::set<int> seen;
    for (int q : entries)
        if (!seen.insert(mod(q, n)).second) return false;
    if (static_cast<int>(seen.size()) != n / step) return false;
    const int r = *seen.begin() % step;
    for (int q : seen)
        if (q % step != r) return false;
    q0_out = *seen.begin();
    return true;
}

std::string format_residues(const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

TheoremVerdict not_applicable(TheoremVerdict v, std::string why) {
    v.outcome = TheoremOutcome::NotApplicable;
    v.reason = std::move(why);
    return v;
}

TheoremVerdict not_special(TheoremVerdict v, std::string clause) {
    v.outcome = TheoremOutcome::NotSpecial;
    v.reason = std::move(clause);
    return v;
}

}  // namespace

bool is_perfect_difference_set(const std::vector<int>& differences) {
    const int k = static_cast<int>(differences.size());
    if (k < 2)
        throw std::invalid_argument(
            "perfect difference set requires at least 2 elements");
    const int modulus = k * k - k + 1;
    std::set<int> residues;
    for (int d : differences) residues.insert(mod(d, modulus));
    if (static_cast<int>(residues.size()) != k) return false;
    std::vector<int> count(modulus, 0);
    for (int d : residues)
        for (int e : residues)
            if (d != e) ++count[mod(d - e, modulus)];
    for (int r = 1; r < modulus; ++r)
        if (count[r] != 1) return false;
    return true;
}

bool is_irreducible(const CyclicPresentation& p) {
    const Word& w = p.word();
    const int n = p.n();
    const int k = w.length();
    long long g = n;
    for (int i = 0; i < k; ++i) {
        const int d = mod(w.letter((i + 1) % k).index - w.letter(i).index, n);
        g = std::gcd(g, static_cast<long long>(d));
    }
    return g == 1;
}

SpecialCertificate is_special_direct(const CyclicPresentation& p) {
    SpecialCertificate cert;
    cert.k = p.word().length();

    const Multigraph graph = build_star_graph(p.relators(), p.n());
    const std::vector<Multigraph> comps = components(graph);
    cert.nu = static_cast<int>(comps.size());

    std::vector<Metrics> mets;
    mets.reserve(comps.size());
    for (const Multigraph& comp : comps) {
        Metrics met = metrics(comp);
        ComponentReport r;
        r.vertices = comp.vertex_count;
        r.edges = static_cast<int>(comp.edges.size());
        r.girth = met.girth;
        r.diameter =
            met.diameter_per_component.empty() ? 0 : met.diameter_per_component[0];
        r.min_degree =
            met.degree_sequence.empty() ? 0 : met.degree_sequence.front();
        r.recognized = recognize(comp).str();
        cert.components.push_back(std::move(r));
        mets.push_back(std::move(met));
    }

    auto fail = [&cert](std::string why) {
        cert.special = false;
        cert.failure_reason = std::move(why);
        return cert;
    };

    for (const Metrics& met : mets)
        if (!met.bipartite) return fail("component_not_bipartite");
    for (const ComponentReport& r : cert.components)
        if (r.min_degree < 3) return fail("vertex_degree_below_3");
    for (size_t i = 1; i < comps.size(); ++i)
        if (!are_isomorphic(comps[0], comps[i]))
            return fail("components_not_isomorphic");
    for (const ComponentReport& r : cert.components) {
        if (!r.girth) return fail("component_acyclic");
        if (*r.girth != 2 * r.diameter) return fail("not generalized polygon");
    }
    cert.m = cert.components[0].diameter;
    if (*cert.m < 2) return fail("diameter_below_2");
    if (cert.k < 3) return fail("relator_length_below_3");
    if (*cert.m == 2 && cert.k < 4) return fail("short_relators_for_diameter_2");

    cert.special = true;
    return cert;
}

const char* to_string(TheoremOutcome o) {
    switch (o) {
        case TheoremOutcome::Special: return "special";
        case TheoremOutcome::NotSpecial: return "not_special";
        case TheoremOutcome::NotApplicable: return "not_applicable";
    }
    return "?";
}

TheoremVerdict check_3knu(const CyclicPresentation& p) {
    TheoremVerdict v;
    v.checker = "three_special_positive";
    v.k = p.word().length();

    const RedundancyReport rep = classify_redundancy(p);
    if (rep.root_power != 1) return not_applicable(std::move(v), "proper_power");
    if (!is_irreducible(p)) return not_applicable(std::move(v), "reducible");
    const SignClass sc = sign_class(p.word());
    if (sc == SignClass::Mixed)
        return not_applicable(std::move(v), "word_not_unisign");
    if (v.k < 3) return not_applicable(std::move(v), "word_length_below_3");

    const CyclicPresentation q = make_presentation(
        p.n(), sc == SignClass::Negative ? invert(p.word()) : p.word());
    const RedundancyReport repq = classify_redundancy(q);
    if (repq.kind == RedundancyKind::NonOrientable)
        return not_applicable(std::move(v), "not_orientable");

    const DifferenceMultisets ms = difference_multisets(repq);
    const int l = ms.l_u;
    if (l < 3) return not_special(std::move(v), "period_length_below_3");
    const int order = l * l - l + 1;
    if (p.n() % order != 0)
        return not_special(std::move(v), "n_not_multiple_of_incidence_order");
    const int nu = p.n() / order;

    const std::vector<int> q_entries = ms.Q();
    if (!is_perfect_difference_set(q_entries))
        return not_special(std::move(v), "q_not_perfect_difference_set");
    for (int qe : q_entries)
        if (mod(qe, nu) != mod(q_entries[0], nu))
            return not_special(std::move(v), "q_residues_differ_mod_nu");

    v.outcome = TheoremOutcome::Special;
    v.m = 3;
    v.nu = nu;
    // Positive 3-special presentations always have nu dividing the relator
    // length; a violation would mean the classification above is wrong.
    if (v.k % nu != 0)
        throw std::logic_error("check_3knu: component count does not divide relator length");
    std::vector<int> pds;
    pds.reserve(q_entries.size());
    for (int qe : q_entries) pds.push_back(mod(qe, order));
    std::sort(pds.begin(), pds.end());
    v.pds = std::move(pds);
    return v;
}

namespace {

TheoremVerdict check_2knu_orientable(const CyclicPresentation& p,
                                     const RedundancyReport& rep,
                                     TheoremVerdict v) {
    const int n = p.n();
    const SignClass sc = sign_class(p.word());

    if (sc != SignClass::Mixed) {
        v.checker = "two_special_positive";
        if (v.k < 4) return not_applicable(std::move(v), "word_length_below_4");
        const CyclicPresentation q = make_presentation(
            n, sc == SignClass::Negative ? invert(p.word()) : p.word());
        const DifferenceMultisets ms = difference_multisets(classify_redundancy(q));
        const int l = ms.l_u;
        if (n % l != 0)
            return not_special(std::move(v), "n_not_multiple_of_period_length");
        if (l < 3) return not_special(std::move(v), "period_length_below_3");
        const int nu = n / l;
        int q0 = 0;
        if (!full_residue_class(ms.Q(), n, nu, q0))
            return not_special(std::move(v), "q_not_arithmetic_class");
        if (std::gcd(q0, nu) != 1)
            return not_special(std::move(v), "q0_not_coprime_to_nu");
        v.outcome = TheoremOutcome::Special;
        v.m = 2;
        v.nu = nu;
        v.q0 = q0;
        v.circulant_form = "complete_bipartite(" + std::to_string(l) + ")";
        return v;
    }

    const Word& u = rep.period.u;
    const DifferenceMultisets ms = difference_multisets(rep);
    const int l = ms.l_u;

    if (alternation_class(u) == AlternationClass::CyclicallyAlternating) {
        v.checker = "two_special_cyclically_alternating";
        if (v.k < 4) return not_applicable(std::move(v), "word_length_below_4");
        if (n != 2 * l)
            return not_special(std::move(v), "n_not_twice_period_length");
        if (l < 3) return not_special(std::move(v), "period_length_below_3");
        const std::set<int> target = odd_family_target(n, 1, false);
        if (!pm_set_form(ms.A, target, n))
            return not_special(std::move(v), "a_not_full_odd_family");
        if (!pm_set_form(ms.B, target, n))
            return not_special(std::move(v), "b_not_full_odd_family");
        v.outcome = TheoremOutcome::Special;
        v.m = 2;
        v.nu = 2;
        v.circulant_form =
            "circ_" + std::to_string(n) + "(" + format_residues(ms.A) + ")";
        return v;
    }

    v.checker = "two_special_mixed";
    if (v.k < 4) return not_applicable(std::move(v), "word_length_below_4");
    if (n % l != 0)
        return not_special(std::move(v), "n_not_multiple_of_period_length");
    if (l % 4 != 0)
        return not_special(std::move(v), "period_length_not_divisible_by_4");
    const int nu = n / l;
    const std::set<int> target = odd_family_target(n, nu, false);
    if (!pm_set_form(ms.A, target, n))
        return not_special(std::move(v), "a_not_odd_multiples_family");
    if (!pm_set_form(ms.B, target, n))
        return not_special(std::move(v), "b_not_odd_multiples_family");
    const std::set<int> qplus(ms.Qplus.begin(), ms.Qplus.end());
    for (int qm : ms.Qminus)
        if (qplus.count(qm))
            return not_special(std::move(v), "q_plus_minus_not_disjoint");
    int q0 = 0;
    if (!full_residue_class(ms.Q(), n, 2 * nu, q0))
        return not_special(std::move(v), "q_not_arithmetic_class");
    if (std::gcd(q0, nu) != 1)
        return not_special(std::move(v), "q0_not_coprime_to_nu");
    v.outcome = TheoremOutcome::Special;
    v.m = 2;
    v.nu = nu;
    v.q0 = q0;
    v.circulant_form = "complete_bipartite(" + std::to_string(l) + ")";
    return v;
}

TheoremVerdict check_2knu_nonorientable(const CyclicPresentation& p,
                                        const RedundancyReport& rep,
                                        TheoremVerdict v) {
    const int n = p.n();
    const Word& u = *rep.half_word;
    const DifferenceMultisets ms = difference_multisets(rep);
    const int l = ms.l_u;
    const bool alternating =
        u.length() < 2 ||
        alternation_class(u) != AlternationClass::NonAlternating;

    if (alternating) {
        v.checker = "two_special_nonorientable_alternating";
        if (2 * l != n)
            return not_special(std::move(v), "n_not_twice_half_length");
        if (l < 3) return not_special(std::move(v), "half_length_below_3");
        if (l % 2 == 0) return not_special(std::move(v), "half_length_even");
        const std::set<int> target = odd_family_target(n, 1, true);
        if (!pm_set_form(ms.Abar, target, n))
            return not_special(std::move(v), "a_not_full_odd_family_with_half");
        if (!pm_set_form(ms.Bbar, target, n))
            return not_special(std::move(v), "b_not_full_odd_family_with_half");
        v.outcome = TheoremOutcome::Special;
        v.m = 2;
        v.nu = 2;
        v.circulant_form =
            "circ'_" + std::to_string(n) + "(" + format_residues(ms.Abar) + ")";
        return v;
    }

    v.checker = "two_special_nonorientable_nonalternating";
    if (l < 3) return not_applicable(std::move(v), "half_length_below_3");
    if (n % l != 0)
        return not_special(std::move(v), "n_not_multiple_of_half_length");
    if (l % 4 != 2)
        return not_special(std::move(v), "half_length_not_2_mod_4");
    if (l < 6) return not_special(std::move(v), "half_length_below_6");
    const int nu = n / l;
    const std::set<int> target = odd_family_target(n, nu, true);
    if (!pm_set_form(ms.Abar, target, n))
        return not_special(std::move(v), "a_not_odd_multiples_family_with_half");
    if (!pm_set_form(ms.Bbar, target, n))
        return not_special(std::move(v), "b_not_odd_multiples_family_with_half");
    int q0 = 0;
    if (!full_residue_class(ms.Qbar, n, 2 * nu, q0))
        return not_special(std::move(v), "q_not_arithmetic_class");
    if (q0 == 0) return not_special(std::move(v), "q0_zero");
    if (std::gcd(q0, nu) != 1)
        return not_special(std::move(v), "q0_not_coprime_to_nu");
    v.outcome = TheoremOutcome::Special;
    v.m = 2;
    v.nu = nu;
    v.q0 = q0;
    v.circulant_form = "complete_bipartite(" + std::to_string(l) + ")";
    return v;
}

}  // namespace

TheoremVerdict check_2knu(const CyclicPresentation& p) {
    TheoremVerdict v;
    v.k = p.word().length();

    const RedundancyReport rep = classify_redundancy(p);
    if (rep.root_power != 1) return not_applicable(std::move(v), "proper_power");
    if (!is_irreducible(p)) return not_applicable(std::move(v), "reducible");
    if (rep.kind == RedundancyKind::NonOrientable)
        return check_2knu_nonorientable(p, rep, std::move(v));
    return check_2knu_orientable(p, rep, std::move(v));
}

TheoremVerdict theorem_verdict(const CyclicPresentation& p) {
    TheoremVerdict base;
    base.k = p.word().length();

    const RedundancyReport rep = classify_redundancy(p);
    if (rep.root_power != 1)
        return not_applicable(std::move(base), "proper_power");
    if (!is_irreducible(p)) return not_applicable(std::move(base), "reducible");

    if (rep.kind == RedundancyKind::NonOrientable ||
        sign_class(p.word()) == SignClass::Mixed)
        return check_2knu(p);

    TheoremVerdict v3 = check_3knu(p);
    if (v3.outcome == TheoremOutcome::Special) return v3;
    TheoremVerdict v2 = check_2knu(p);
    if (v2.outcome == TheoremOutcome::Special) return v2;

    if (v3.outcome == TheoremOutcome::NotSpecial &&
        v2.outcome == TheoremOutcome::NotSpecial) {
        v2.checker = v3.checker + "+" + v2.checker;
        v2.reason = "m3:" + v3.reason + ";m2:" + v2.reason;
        return v2;
    }
    if (v3.outcome == TheoremOutcome::NotSpecial) return v3;
    if (v2.outcome == TheoremOutcome::NotSpecial) return v2;

    // Neither criterion applies at this word length.
    v2.checker = "none";
    if (v3.reason != v2.reason) v2.reason = "m3:" + v3.reason + ";m2:" + v2.reason;
    return v2;
}

const char* to_string(Largeness l) {
    return l == Largeness::Yes ? "yes" : "unknown";
}

const char* to_string(TitsClass t) {
    switch (t) {
        case TitsClass::FreeSubgroup: return "free_subgroup";
        case TitsClass::SolvableZ: return "solvable_Z";
        case TitsClass::SolvableZ2: return "solvable_Z2";
        case TitsClass::SolvableBS1m1: return "solvable_BS(1,-1)";
        case TitsClass::ConjecturalFreeSubgroup:
            return "conjectural_free_subgroup";
        case TitsClass::Unknown: return "unknown";
    }
    return "?";
}

namespace {

TitsClass tits_orientable_rank2(const Word& w) {
    const int rank = 2;
    const Word z_pos = parse_word("x0 x1", rank);
    const Word z_neg = parse_word("x0^-1 x1^-1", rank);
    if (is_cyclic_permutation_of(w, z_pos) || is_cyclic_permutation_of(w, z_neg))
        return TitsClass::SolvableZ;
    const Word bs_pos = parse_word("x0^2 x1^2", rank);
    const Word bs_neg = parse_word("x0^-2 x1^-2", rank);
    if (is_cyclic_permutation_of(w, bs_pos) || is_cyclic_permutation_of(w, bs_neg))
        return TitsClass::SolvableBS1m1;
    return TitsClass::FreeSubgroup;
}

TitsClass tits_nonorientable_rank2(const Word& u) {
    if (u.length() == 1) return TitsClass::SolvableZ;
    static const char* z2_half_words[] = {
        "x0 x1",    "x1^-1 x0^-1", "x0 x1^-1",
        "x1 x0^-1", "x1 x0",       "x0^-1 x1^-1",
    };
    for (const char* text : z2_half_words)
        if (u == parse_word(text, 2)) return TitsClass::SolvableZ2;
    if (const int t = literal_power(u); t >= 2)
        return (t == 2 && u.length() == 2) ? TitsClass::SolvableBS1m1
                                           : TitsClass::FreeSubgroup;
    if (exponent_sum(u, 0) == exponent_sum(u, 1)) return TitsClass::FreeSubgroup;
    if (is_odd_unisign_alternating(u)) return TitsClass::FreeSubgroup;
    return TitsClass::ConjecturalFreeSubgroup;
}

}  // namespace

GroupFlags group_property_flags(const CyclicPresentation& p,
                                const SpecialCertificate& cert) {
    GroupFlags f;
    const RedundancyReport rep = classify_redundancy(p);
    const int n = p.n();
    const bool proper_power = rep.root_power > 1;

    if (rep.redundant() && (n >= 3 || (n == 2 && proper_power)))
        f.large = Largeness::Yes;

    if (!rep.redundant()) {
        f.tits = TitsClass::Unknown;
    } else if (f.large == Largeness::Yes) {
        f.tits = TitsClass::FreeSubgroup;
    } else if (rep.kind == RedundancyKind::OrientableRedundant) {
        f.tits = tits_orientable_rank2(p.word());
    } else {
        f.tits = tits_nonorientable_rank2(*rep.half_word);
    }

    f.hyperbolic =
        cert.special && cert.m && 2 * *cert.m + cert.k < cert.k * *cert.m;
    return f;
}

GroupFlags group_property_flags(const CyclicPresentation& p) {
    return group_property_flags(p, is_special_direct(p));
}

}  // namespace cycpres
