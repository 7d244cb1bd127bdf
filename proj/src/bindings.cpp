// Python bindings: thin wrappers over the C++ core.  Structured results cross
// the boundary as JSON strings (decoded in the package __init__) or as plain
// tuples/dicts; long-running enumeration calls release the GIL.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "cycpres/json_io.hpp"
#include "cycpres/presentation.hpp"
#include "cycpres/search.hpp"
#include "cycpres/selftest.hpp"
#include "cycpres/special.hpp"
#include "cycpres/stargraph.hpp"
#include "cycpres/word.hpp"

namespace py = pybind11;
using namespace cycpres;

namespace {

EnumSpec make_spec(int n_min, int n_max, int k_min, int k_max, bool cyclically_reduced,
                   bool not_proper_power, bool positive_only, bool irreducible_only,
                   bool up_to_symmetry, long long budget) {
    EnumSpec s;
    s.n_min = n_min;
    s.n_max = n_max;
    s.k_min = k_min;
    s.k_max = k_max;
    s.cyclically_reduced = cyclically_reduced;
    s.not_proper_power = not_proper_power;
    s.positive_only = positive_only;
    s.irreducible_only = irreducible_only;
    s.up_to_symmetry = up_to_symmetry;
    s.budget = budget;
    return s;
}

constexpr const char* kSpecArgsDoc =
    "Grid bounds are inclusive; filters mirror the C++ EnumSpec defaults.";

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cyclic presentation analysis core (redundancy, star graphs, special "
              "structure, enumeration search)";
    m.attr("__version__") = "0.1.0";

    m.def(
        "analyze_json",
        [](int n, const std::string& word) {
            return to_json(classify_redundancy(make_presentation(n, word)));
        },
        py::arg("n"), py::arg("word"),
        "Redundancy/orientability classification as a JSON object string.");

    m.def(
        "analyze_text",
        [](int n, const std::string& word) {
            return to_text(classify_redundancy(make_presentation(n, word)));
        },
        py::arg("n"), py::arg("word"));

    m.def(
        "refine_json",
        [](int n, const std::string& word) {
            return to_json(concise_refinement(make_presentation(n, word)));
        },
        py::arg("n"), py::arg("word"),
        "Concise truncation (relator list) as a JSON object string.");

    m.def(
        "star_graph_json",
        [](int n, const std::string& word) {
            const CyclicPresentation p = make_presentation(n, word);
            return to_json(build_star_graph(p.relators(), n));
        },
        py::arg("n"), py::arg("word"),
        "Star graph with metrics as a JSON object string.");

    m.def(
        "star_graph_dot",
        [](int n, const std::string& word) {
            const CyclicPresentation p = make_presentation(n, word);
            return to_dot(build_star_graph(p.relators(), n));
        },
        py::arg("n"), py::arg("word"), "Star graph in DOT format.");

    m.def(
        "special_json",
        [](int n, const std::string& word) {
            const CyclicPresentation p = make_presentation(n, word);
            const SpecialCertificate cert = is_special_direct(p);
            return to_json(cert, theorem_verdict(p), group_property_flags(p, cert));
        },
        py::arg("n"), py::arg("word"),
        "Direct special certificate, theorem-checker verdict, and group flags as a "
        "JSON object string.");

    m.def(
        "canonical_representative",
        [](int n, const std::string& word) {
            return format_word(canonical_representative(parse_word(word, n)));
        },
        py::arg("n"), py::arg("word"),
        "Least orbit member under subscript shifts, rotations, and inversion.");

    m.def(
        "is_canonical",
        [](int n, const std::string& word) { return is_canonical(parse_word(word, n)); },
        py::arg("n"), py::arg("word"));

    m.def(
        "enumerate_words",
        [](int n_min, int n_max, int k_min, int k_max, bool cyclically_reduced,
           bool not_proper_power, bool positive_only, bool irreducible_only,
           bool up_to_symmetry, long long budget) {
            const EnumSpec spec =
                make_spec(n_min, n_max, k_min, k_max, cyclically_reduced, not_proper_power,
                          positive_only, irreducible_only, up_to_symmetry, budget);
            std::vector<Word> words;
            {
                py::gil_scoped_release release;
                words = enumerate_words(spec);
            }
            std::vector<std::pair<int, std::string>> out;
            out.reserve(words.size());
            for (const Word& w : words) out.emplace_back(w.rank(), format_word(w));
            return out;
        },
        py::arg("n_min") = 1, py::arg("n_max") = 6, py::arg("k_min") = 1,
        py::arg("k_max") = 6, py::arg("cyclically_reduced") = true,
        py::arg("not_proper_power") = false, py::arg("positive_only") = false,
        py::arg("irreducible_only") = false, py::arg("up_to_symmetry") = true,
        py::arg("budget") = EnumSpec{}.budget,
        (std::string("All (n, word) pairs passing the filters. ") + kSpecArgsDoc).c_str());

    m.def(
        "find_special",
        [](int n_min, int n_max, int k_min, int k_max, bool cyclically_reduced,
           bool not_proper_power, bool positive_only, bool irreducible_only,
           bool up_to_symmetry, long long budget) {
            const EnumSpec spec =
                make_spec(n_min, n_max, k_min, k_max, cyclically_reduced, not_proper_power,
                          positive_only, irreducible_only, up_to_symmetry, budget);
            std::vector<SpecialHit> hits;
            {
                py::gil_scoped_release release;
                hits = find_special(spec);
            }
            py::list out;
            for (const SpecialHit& h : hits) {
                py::dict d;
                d["n"] = h.n;
                d["word"] = format_word(h.word);
                d["m"] = h.certificate.m ? py::cast(*h.certificate.m) : py::none();
                d["k"] = h.certificate.k;
                d["nu"] = h.certificate.nu;
                d["checker"] = h.verdict.checker;
                d["checker_verdict"] = std::string(to_string(h.verdict.outcome));
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("n_min") = 1, py::arg("n_max") = 6, py::arg("k_min") = 1,
        py::arg("k_max") = 6, py::arg("cyclically_reduced") = true,
        py::arg("not_proper_power") = false, py::arg("positive_only") = false,
        py::arg("irreducible_only") = false, py::arg("up_to_symmetry") = true,
        py::arg("budget") = EnumSpec{}.budget,
        (std::string("Enumerated presentations with a positive direct certificate. ") +
         kSpecArgsDoc)
            .c_str());

    m.def(
        "crossvalidate",
        [](int n_min, int n_max, int k_min, int k_max, bool cyclically_reduced,
           bool not_proper_power, bool positive_only, bool irreducible_only,
           bool up_to_symmetry, long long budget) {
            const EnumSpec spec =
                make_spec(n_min, n_max, k_min, k_max, cyclically_reduced, not_proper_power,
                          positive_only, irreducible_only, up_to_symmetry, budget);
            CrossValidationReport rep;
            {
                py::gil_scoped_release release;
                rep = crossvalidate(spec);
            }
            py::list ces;
            for (const Counterexample& ce : rep.counterexamples) {
                py::dict d;
                d["check"] = ce.check;
                d["n"] = ce.n;
                d["word"] = ce.word;
                d["detail"] = ce.detail;
                ces.append(std::move(d));
            }
            py::dict out;
            out["words_checked"] = rep.words_checked;
            out["counterexamples"] = std::move(ces);
            out["checks_run"] = rep.checks_run;
            out["wall_seconds"] = rep.wall_seconds;
            return out;
        },
        py::arg("n_min") = 1, py::arg("n_max") = 6, py::arg("k_min") = 1,
        py::arg("k_max") = 6, py::arg("cyclically_reduced") = true,
        py::arg("not_proper_power") = false, py::arg("positive_only") = false,
        py::arg("irreducible_only") = false, py::arg("up_to_symmetry") = true,
        py::arg("budget") = EnumSpec{}.budget,
        (std::string("Invariant battery over the enumeration grid. ") + kSpecArgsDoc)
            .c_str());

    m.def(
        "fixtures",
        []() {
            py::list out;
            for (const Fixture& f : fixtures()) {
                py::dict d;
                d["name"] = f.name;
                d["n"] = f.n;
                d["word"] = f.word;
                d["m"] = f.m;
                d["k"] = f.k;
                d["nu"] = f.nu;
                d["checker"] = f.checker;
                out.append(std::move(d));
            }
            return out;
        },
        "The built-in fixture corpus (classified presentations plus micro fixtures).");

    m.def("worker_count", &worker_count,
          "Effective parallel worker count (CYCPRES_THREADS override, else hardware).");
}
