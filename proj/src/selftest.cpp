#include "cycpres/selftest.hpp"

#include <chrono>
#include <initializer_list>
#include <ostream>
#include <sstream>

#include "cycpres/presentation.hpp"
#include "cycpres/search.hpp"
#include "cycpres/special.hpp"
#include "cycpres/stargraph.hpp"
#include "cycpres/word.hpp"

namespace cycpres {

namespace {

const char* kAI =
    "x0 x0 x1 x4 x4 x5 x1 x1 x2 x5 x5 x6 x2 x2 x3 x6 x6 x0 x3 x3 x4";
const char* kAIII =
    "x0 x2 x7 x3 x5 x10 x6 x8 x13 x9 x11 x16 x12 x14 x19 x15 x17 x1 x18 x20 x4";

std::vector<Fixture> make_fixtures() {
    return {
        {"orientable_3_21_1", 7, kAI, 3, 21, 1, "three_special_positive"},
        {"positive_3_6_2", 14, "x0 x1 x10 x7 x8 x3", 3, 6, 2, "three_special_positive"},
        {"orientable_3_21_3", 21, kAIII, 3, 21, 3, "three_special_positive"},
        {"positive_2_9_3", 9, "x0 x1 x5 x3 x4 x8 x6 x7 x2", 2, 9, 3,
         "two_special_positive"},
        {"positive_2_16_1", 8, "x0 x1 x3 x6 x2 x3 x5 x0 x4 x5 x7 x2 x6 x7 x1 x4", 2, 16,
         1, "two_special_positive"},
        {"cyclically_alternating_2_8_2", 8, "x0 x1^-1 x6 x3^-1 x4 x5^-1 x2 x7^-1", 2, 8,
         2, "two_special_cyclically_alternating"},
        {"mixed_2_16_2", 8, "x0 x2^-1 x4 x7 x6 x0^-1 x2 x5 x4 x6^-1 x0 x3 x2 x4^-1 x6 x1",
         2, 16, 2, "two_special_mixed"},
        {"nonorientable_alternating_2_6_2", 6, "x0 x1^-1 x0 x3^-1 x4 x3^-1", 2, 6, 2,
         "two_special_nonorientable_alternating"},
        {"nonorientable_nonalternating_2_12_2", 12,
         "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1", 2, 12, 2,
         "two_special_nonorientable_nonalternating"},
        {"micro_orientable_redundant", 2, "x0 x1", 0, 0, 0, ""},
        {"micro_concise", 3, "x0 x1", 0, 0, 0, ""},
        {"micro_nonorientable", 2, "x0 x1^-1", 0, 0, 0, ""},
        {"micro_rotated_normal_form", 4, "x0 x2^-1 x3 x1^-1", 0, 0, 0, ""},
    };
}

EnumSpec acceptance_grid() {
    EnumSpec s;
    s.n_min = 1;
    s.n_max = 6;
    s.k_min = 1;
    s.k_max = 6;
    s.cyclically_reduced = true;
    s.not_proper_power = true;
    s.up_to_symmetry = true;
    return s;
}

std::vector<Word> fixture_words() {
    std::vector<Word> out;
    for (const Fixture& f : fixtures()) out.push_back(parse_word(f.word, f.n));
    return out;
}

// Counts counterexamples belonging to the named checks; fills `sample` with
// the first one for the failure message.
long long failures_in(const CrossValidationReport& rep,
                      std::initializer_list<const char*> names, std::string* sample) {
    long long count = 0;
    for (const Counterexample& ce : rep.counterexamples) {
        for (const char* name : names) {
            if (ce.check == name) {
                if (count == 0 && sample)
                    *sample = ce.check + " @ P_" + std::to_string(ce.n) + "(" + ce.word +
                              "): " + ce.detail;
                ++count;
                break;
            }
        }
    }
    return count;
}

CriterionResult from_counts(int number, const std::string& name,
                            const CrossValidationReport& grid,
                            const CrossValidationReport* fixture_rep,
                            std::initializer_list<const char*> checks,
                            const std::string& pass_note) {
    CriterionResult r{number, name, false, ""};
    std::string sample;
    long long bad = failures_in(grid, checks, &sample);
    if (fixture_rep) bad += failures_in(*fixture_rep, checks, sample.empty() ? &sample : nullptr);
    if (bad == 0) {
        r.passed = true;
        r.detail = pass_note;
    } else {
        r.detail = std::to_string(bad) + " counterexample(s); first: " + sample;
    }
    return r;
}

CriterionResult criterion_fixture_classification() {
    CriterionResult r{1, "fixture classification", true, ""};
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    std::ostringstream bad;
    for (const Fixture& f : fixtures()) {
        if (f.m == 0) continue;
        ++checked;
        const CyclicPresentation p = make_presentation(f.n, parse_word(f.word, f.n));
        const SpecialCertificate cert = is_special_direct(p);
        const TheoremVerdict tv = theorem_verdict(p);
        const bool direct_ok =
            cert.special && cert.m && *cert.m == f.m && cert.k == f.k && cert.nu == f.nu;
        const bool checker_ok = tv.outcome == TheoremOutcome::Special && tv.m == f.m &&
                                tv.k == f.k && tv.nu == f.nu && tv.checker == f.checker;
        if (direct_ok && checker_ok) continue;
        r.passed = false;
        bad << (bad.tellp() > 0 ? "; " : "") << f.name << " claimed (" << f.m << ","
            << f.k << "," << f.nu << ") but direct=";
        if (cert.special)
            bad << "(" << (cert.m ? *cert.m : 0) << "," << cert.k << "," << cert.nu
                << ")";
        else
            bad << "not_special[" << cert.failure_reason << "]";
        bad << ", checker " << tv.checker << "=" << to_string(tv.outcome);
        if (tv.outcome == TheoremOutcome::Special)
            bad << "(" << tv.m << "," << tv.k << "," << tv.nu << ")";
        else
            bad << "[" << tv.reason << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream note;
    if (r.passed) {
        note << checked << " fixtures match under both verdicts ("
             << static_cast<int>(secs * 10) / 10.0 << "s)";
        r.detail = note.str();
    } else {
        r.detail = bad.str();
    }
    return r;
}

CriterionResult criterion_micro_fixtures() {
    CriterionResult r{2, "micro-fixture classification", true, ""};
    std::ostringstream bad;
    const auto expect = [&](int n, const char* word, RedundancyKind kind,
                            bool needs_rotation) {
        const CyclicPresentation p = make_presentation(n, parse_word(word, n));
        const RedundancyReport rep = classify_redundancy(p);
        bool okay = rep.kind == kind;
        if (okay && needs_rotation)
            okay = rep.rotation.has_value() && *rep.rotation >= 1;
        if (!okay) {
            r.passed = false;
            bad << (bad.tellp() > 0 ? "; " : "") << "P_" << n << "(" << word << ") got "
                << to_string(rep.kind);
            if (rep.rotation) bad << " rotation=" << *rep.rotation;
        }
    };
    expect(2, "x0 x1", RedundancyKind::OrientableRedundant, false);
    expect(3, "x0 x1", RedundancyKind::Concise, false);
    expect(2, "x0 x1^-1", RedundancyKind::NonOrientable, false);
    expect(4, "x0 x2^-1 x3 x1^-1", RedundancyKind::NonOrientable, true);
    r.detail = r.passed ? "4 micro fixtures match, rotated case has rotation >= 1"
                        : bad.str();
    return r;
}

CriterionResult criterion_pds_suite() {
    CriterionResult r{7, "perfect difference sets", true, ""};
    std::ostringstream bad;
    if (!is_perfect_difference_set({0, 1, 3})) {
        bad << "{0,1,3} not recognized; ";
        r.passed = false;
    }
    if (!is_perfect_difference_set({1, 2, 4})) {
        bad << "{1,2,4} not recognized; ";
        r.passed = false;
    }
    if (is_perfect_difference_set({0, 1, 2})) {
        bad << "{0,1,2} wrongly accepted; ";
        r.passed = false;
    }
    int witnesses = 0;
    for (const Fixture& f : fixtures()) {
        if (f.m != 3) continue;
        const CyclicPresentation p = make_presentation(f.n, parse_word(f.word, f.n));
        const TheoremVerdict tv = theorem_verdict(p);
        const bool okay = tv.outcome == TheoremOutcome::Special && tv.pds.has_value() &&
                          !tv.pds->empty() && tv.nu != 0 && tv.k % tv.nu == 0;
        if (okay) {
            ++witnesses;
        } else {
            r.passed = false;
            bad << f.name << " lacks a pds witness or nu does not divide k; ";
        }
    }
    r.detail = r.passed
                   ? "unit triples exact, " + std::to_string(witnesses) +
                         " fixture pds witnesses with nu | k"
                   : bad.str();
    return r;
}

CriterionResult criterion_heawood() {
    CriterionResult r{8, "incidence-graph recognition", true, ""};
    const CyclicPresentation p = make_presentation(14, parse_word("x0 x1 x10 x7 x8 x3", 14));
    const Multigraph g = build_star_graph(p.relators(), 14);
    const std::vector<Multigraph> comps = components(g);
    std::ostringstream bad;
    if (comps.size() != 2) {
        r.passed = false;
        bad << "expected 2 components, got " << comps.size();
    } else {
        for (size_t i = 0; i < comps.size(); ++i) {
            const Metrics met = metrics(comps[i]);
            const Recognition rec = recognize(comps[i]);
            const bool okay = comps[i].vertex_count == 14 && met.regular_degree &&
                              *met.regular_degree == 3 && met.girth && *met.girth == 6 &&
                              met.diameter_per_component.size() == 1 &&
                              met.diameter_per_component[0] == 3 &&
                              rec.cls == GraphClass::ProjectivePlaneIncidence &&
                              rec.parameter == 2;
            if (!okay) {
                r.passed = false;
                bad << "component " << i << ": " << comps[i].vertex_count
                    << " vertices, girth " << (met.girth ? *met.girth : -1)
                    << ", diameter "
                    << (met.diameter_per_component.empty() ? -1
                                                           : met.diameter_per_component[0])
                    << ", recognized as " << rec.str() << "; ";
            }
        }
        if (!are_isomorphic(comps[0], comps[1])) {
            r.passed = false;
            bad << "components not isomorphic";
        }
    }
    r.detail = r.passed
                   ? "both components: 14 vertices, 3-regular, girth 6, diameter 3, "
                     "projective_plane_incidence(2), isomorphic"
                   : bad.str();
    return r;
}

CriterionResult criterion_group_flags(const CrossValidationReport& grid) {
    CriterionResult r{9, "group flags", true, ""};
    std::ostringstream bad;
    const auto expect_tits = [&](int n, const char* word, TitsClass t) {
        const CyclicPresentation p = make_presentation(n, parse_word(word, n));
        const GroupFlags flags = group_property_flags(p);
        if (flags.tits != t) {
            r.passed = false;
            bad << "P_" << n << "(" << word << ") tits=" << to_string(flags.tits)
                << " expected " << to_string(t) << "; ";
        }
    };
    expect_tits(2, "x0 x1", TitsClass::SolvableZ);
    expect_tits(2, "x0 x1^-1", TitsClass::SolvableZ);
    expect_tits(2, "x0 x1 x0^-1 x1^-1", TitsClass::SolvableZ2);

    std::string sample;
    const long long bad_large = failures_in(grid, {"large_flag"}, &sample);
    if (bad_large > 0) {
        r.passed = false;
        bad << bad_large << " large-flag counterexample(s), first: " << sample << "; ";
    }

    int special_fixtures = 0;
    for (const Fixture& f : fixtures()) {
        if (f.m == 0) continue;
        const CyclicPresentation p = make_presentation(f.n, parse_word(f.word, f.n));
        const RedundancyReport rep = classify_redundancy(p);
        const SpecialCertificate cert = is_special_direct(p);
        if (!(rep.redundant() && cert.special)) continue;
        ++special_fixtures;
        const GroupFlags flags = group_property_flags(p, cert);
        const int m = *cert.m;
        if (flags.large != Largeness::Yes || !(2 * m + cert.k < cert.k * m)) {
            r.passed = false;
            bad << f.name << ": large=" << to_string(flags.large) << ", 2m+k="
                << 2 * m + cert.k << " vs km=" << cert.k * m << "; ";
        }
    }
    r.detail = r.passed ? "rank-2 solvable cases exact; enumeration large-flag clean; " +
                              std::to_string(special_fixtures) +
                              " redundant special fixtures satisfy 2/k + 1/m < 1"
                        : bad.str();
    return r;
}

void emit(std::ostream& out, const CriterionResult& r) {
    out << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.number << " ("
        << r.name << ")";
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    out.flush();
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = make_fixtures();
    return table;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

std::vector<CriterionResult> run_fixture_suite(std::ostream& out) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_fixture_classification());
    emit(out, results.back());
    results.push_back(criterion_micro_fixtures());
    emit(out, results.back());
    return results;
}

std::vector<CriterionResult> run_acceptance_suite(std::ostream& out) {
    std::vector<CriterionResult> results = run_fixture_suite(out);

    const auto t0 = std::chrono::steady_clock::now();
    const CrossValidationReport grid = crossvalidate(acceptance_grid());
    const double grid_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const CrossValidationReport fixrep = crossvalidate_words(fixture_words());
    std::ostringstream gn;
    gn << grid.words_checked << " words, " << static_cast<int>(grid_secs * 10) / 10.0
       << "s";
    const std::string grid_note = gn.str();

    results.push_back(from_counts(3, "star-graph equivalence", grid, nullptr,
                                  {"structural_star_graph", "eq2"},
                                  "direct = structural and subscript-sum congruence over " +
                                      grid_note));
    emit(out, results.back());
    results.push_back(from_counts(4, "refinement soundness", grid, nullptr,
                                  {"redundancy_oracle", "refinement_star_graph"},
                                  "oracle-clean refinements with unchanged star graphs"));
    emit(out, results.back());
    results.push_back(from_counts(
        5, "girth bounds", grid, &fixrep,
        {"girth_bound_orientable", "girth_bound_nonorientable", "girth_iff_end_signs"},
        "girth bounds and end-sign characterization hold"));
    emit(out, results.back());
    results.push_back(from_counts(6, "m forcing", grid, &fixrep, {"m_forcing"},
                                  "all special verdicts satisfy the m constraints"));
    emit(out, results.back());
    results.push_back(criterion_pds_suite());
    emit(out, results.back());
    results.push_back(criterion_heawood());
    emit(out, results.back());
    results.push_back(criterion_group_flags(grid));
    emit(out, results.back());

    int passed = 0;
    for (const CriterionResult& r : results) passed += r.passed ? 1 : 0;
    out << passed << "/" << results.size() << " criteria passed\n";
    return results;
}

}  // namespace cycpres
