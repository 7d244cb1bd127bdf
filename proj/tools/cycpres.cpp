// Command-line front end: redundancy analysis, concise refinement, star-graph
// export, special classification, enumeration search, and the self-test suite.
//
// Exit codes: 0 success, 1 classification-suite failure (self-test criterion
// failed, direct/theorem verdicts disagree, or cross-validation found a
// counterexample), 2 usage error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cycpres/json_io.hpp"
#include "cycpres/presentation.hpp"
#include "cycpres/search.hpp"
#include "cycpres/selftest.hpp"
#include "cycpres/special.hpp"
#include "cycpres/stargraph.hpp"
#include "cycpres/word.hpp"

namespace {

using namespace cycpres;

// "a..b" with a <= b; used by --n-range / --k-range.
std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep != std::string::npos) {
        try {
            const int lo = std::stoi(text.substr(0, sep));
            const int hi = std::stoi(text.substr(sep + 2));
            if (lo >= 1 && lo <= hi) return {lo, hi};
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("range must be 'a..b' with 1 <= a <= b: got '" + text + "'");
}

void print_wall(double seconds) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "wall: " << seconds << " s\n";
    std::cerr << os.str();
}

int run_analyze(int n, const std::string& word, const std::string& output) {
    const RedundancyReport rep = classify_redundancy(make_presentation(n, word));
    std::cout << (output == "json" ? to_json(rep) + "\n" : to_text(rep));
    return 0;
}

int run_refine(int n, const std::string& word, const std::string& output) {
    const Truncation tr = concise_refinement(make_presentation(n, word));
    std::cout << (output == "json" ? to_json(tr) + "\n" : to_text(tr));
    return 0;
}

int run_stargraph(int n, const std::string& word, const std::string& output) {
    const CyclicPresentation p = make_presentation(n, word);
    const Multigraph g = build_star_graph(p.relators(), n);
    if (output == "dot")
        std::cout << to_dot(g);
    else
        std::cout << (output == "json" ? to_json(g) + "\n" : to_text(g));
    return 0;
}

int run_special(int n, const std::string& word, const std::string& output) {
    const CyclicPresentation p = make_presentation(n, word);
    const SpecialCertificate cert = is_special_direct(p);
    const TheoremVerdict tv = theorem_verdict(p);
    const GroupFlags flags = group_property_flags(p, cert);
    std::cout << (output == "json" ? to_json(cert, tv, flags) + "\n"
                                   : to_text(cert, tv, flags));
    // A not_applicable theorem verdict is silence, not disagreement.
    const bool disagree = (cert.special && tv.outcome == TheoremOutcome::NotSpecial) ||
                          (!cert.special && tv.outcome == TheoremOutcome::Special);
    return disagree ? 1 : 0;
}

int run_search(const EnumSpec& spec, bool crossvalidate_mode, const std::string& output) {
    if (crossvalidate_mode) {
        const CrossValidationReport rep = crossvalidate(spec);
        for (const Counterexample& ce : rep.counterexamples) {
            if (output == "json")
                std::cout << to_json_line(ce) << "\n";
            else
                std::cout << "counterexample [" << ce.check << "] P_" << ce.n << "("
                          << ce.word << "): " << ce.detail << "\n";
        }
        if (output == "json")
            std::cout << summary_json_line(rep) << "\n";
        else
            std::cout << "checked " << rep.words_checked << " words, "
                      << rep.counterexamples.size() << " counterexamples\n";
        print_wall(rep.wall_seconds);
        return rep.ok() ? 0 : 1;
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<SpecialHit> hits = find_special(spec);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const SpecialHit& h : hits) {
        if (output == "json") {
            std::cout << to_json_line(h) << "\n";
        } else {
            std::cout << "P_" << h.n << "(" << format_word(h.word) << "): special (m = "
                      << (h.certificate.m ? *h.certificate.m : 0) << ", k = "
                      << h.certificate.k << ", nu = " << h.certificate.nu << ") via "
                      << h.verdict.checker << "\n";
        }
    }
    if (output != "json") std::cout << "found " << hits.size() << " special presentations\n";
    print_wall(wall);
    return 0;
}

int run_selftest(bool fixtures_only) {
    const std::vector<CriterionResult> results =
        fixtures_only ? run_fixture_suite(std::cout) : run_acceptance_suite(std::cout);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic presentation toolkit: redundancy, star graphs, special "
                 "classification, enumeration search"};
    app.require_subcommand(1);

    int n = 0;
    std::string word;
    std::string output = "text";
    std::string n_range = "1..6";
    std::string k_range = "1..6";
    bool positive_only = false;
    bool up_to_symmetry = true;
    bool crossvalidate_mode = false;
    bool fixtures_only = false;
    long long budget = EnumSpec{}.budget;

    const auto add_word_options = [&](CLI::App* cmd, bool with_dot) {
        cmd->add_option("-n", n, "number of generators (>= 1)")->required();
        cmd->add_option("-w", word, "defining word, e.g. \"x0 x2^-1 x3 x1^-1\"")->required();
        cmd->add_option("-o", output, "output format")
            ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"json", "text", "dot"}
                                           : std::vector<std::string>{"json", "text"}));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "classify redundancy/orientability and report the refinement size");
    add_word_options(analyze, false);

    CLI::App* refine =
        app.add_subcommand("refine", "emit the concise truncation's relator list");
    add_word_options(refine, false);

    CLI::App* stargraph =
        app.add_subcommand("stargraph", "build the star graph (text, JSON, or DOT)");
    add_word_options(stargraph, true);

    CLI::App* special = app.add_subcommand(
        "special", "report direct and theorem special verdicts side by side; "
                   "exits 1 when they disagree");
    add_word_options(special, false);

    CLI::App* search = app.add_subcommand(
        "search", "enumerate presentations and report special hits, or cross-validate "
                  "invariants with --crossvalidate");
    search->add_option("--n-range", n_range, "generator counts, inclusive (a..b)");
    search->add_option("--k-range", k_range, "word lengths, inclusive (a..b)");
    search->add_flag("--positive-only", positive_only, "positive words only");
    search->add_flag("--up-to-symmetry,!--no-up-to-symmetry", up_to_symmetry,
                     "fold shift/rotation/inversion orbits (default on)");
    search->add_option("--budget", budget, "raw candidate cap before aborting");
    search->add_flag("--crossvalidate", crossvalidate_mode,
                     "run the invariant battery instead of the special search");
    search->add_option("-o", output, "output format")
        ->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

    CLI::App* selftest = app.add_subcommand(
        "selftest", "run the acceptance suite (all nine criteria); exits 1 on failure");
    selftest->add_flag("--fixtures", fixtures_only,
                       "only the built-in fixture corpus (criteria 1-2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(n, word, output);
        if (*refine) return run_refine(n, word, output);
        if (*stargraph) return run_stargraph(n, word, output);
        if (*special) return run_special(n, word, output);
        if (*search) {
            EnumSpec spec;
            std::tie(spec.n_min, spec.n_max) = parse_range(n_range);
            std::tie(spec.k_min, spec.k_max) = parse_range(k_range);
            spec.positive_only = positive_only;
            spec.up_to_symmetry = up_to_symmetry;
            spec.budget = budget;
            return run_search(spec, crossvalidate_mode, output);
        }
        if (*selftest) return run_selftest(fixtures_only);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
