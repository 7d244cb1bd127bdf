#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/stargraph.hpp"
#include "cycpres/word.hpp"

using namespace cycpres;

namespace {

Multigraph star_of(int n, const char* text) {
    const CyclicPresentation p = make_presentation(n, parse_word(text, n));
    return build_star_graph(p.relators(), n);
}

DifferenceMultisets multisets_of(int n, const char* text) {
    const CyclicPresentation p = make_presentation(n, parse_word(text, n));
    return difference_multisets(classify_redundancy(p));
}

}  // namespace

TEST_CASE("star vertices are generators then inverse generators") {
    const Multigraph g = make_star_vertices(3);
    REQUIRE(g.vertex_count == 6);
    CHECK(g.labels == std::vector<std::string>{"x0", "x1", "x2", "x0-", "x1-", "x2-"});
    CHECK(star_vertex(Letter{1, +1}, 3) == 1);
    CHECK(star_vertex(Letter{1, -1}, 3) == 4);
}

TEST_CASE("star graph of P_3(x0 x1) is a 6-cycle") {
    const Multigraph g = star_of(3, "x0 x1");
    CHECK(g.vertex_count == 6);
    CHECK(g.edges.size() == 6);
    const Metrics met = metrics(g);
    CHECK(met.component_count == 1);
    REQUIRE(met.girth.has_value());
    CHECK(*met.girth == 6);
    CHECK(met.diameter_per_component == std::vector<int>{3});
}

TEST_CASE("star graph of P_2(x0 x1) is two disjoint edges") {
    const Multigraph g = star_of(2, "x0 x1");
    CHECK(g.edges.size() == 2);
    const Metrics met = metrics(g);
    CHECK(met.component_count == 2);
    CHECK_FALSE(met.girth.has_value());  // acyclic
}

TEST_CASE("star graph metrics on a special fixture") {
    // Two components, each the complete bipartite graph K_{3,3}.
    const Multigraph g = star_of(6, "x0 x1^-1 x0 x3^-1 x4 x3^-1");
    const Metrics met = metrics(g);
    CHECK(met.component_count == 2);
    REQUIRE(met.girth.has_value());
    CHECK(*met.girth == 4);
    CHECK(met.diameter_per_component == std::vector<int>{2, 2});
    CHECK(met.bipartite);
    REQUIRE(met.regular_degree.has_value());
    CHECK(*met.regular_degree == 3);

    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(are_isomorphic(comps[0], comps[1]));
    CHECK(recognize(comps[0]).str() == "complete_bipartite(3)");
}

TEST_CASE("girth conventions on raw multigraphs") {
    Multigraph g;
    g.vertex_count = 2;
    g.labels = {"a", "b"};
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.finish();
    const Metrics met = metrics(g);
    REQUIRE(met.girth.has_value());
    CHECK(*met.girth == 2);  // parallel edges form a 2-cycle

    Multigraph loop;
    loop.vertex_count = 1;
    loop.labels = {"a"};
    loop.add_edge(0, 0);
    loop.finish();
    REQUIRE(metrics(loop).girth.has_value());
    CHECK(*metrics(loop).girth == 1);
    CHECK(loop.degrees() == std::vector<int>{2});  // a loop counts twice
}

TEST_CASE("orientable difference multisets") {
    SUBCASE("positive 3-special word") {
        const DifferenceMultisets ms = multisets_of(14, "x0 x1 x10 x7 x8 x3");
        CHECK(ms.flavor == Flavor::Orientable);
        CHECK(ms.l_u == 3);
        CHECK(ms.h == 7);
        CHECK(ms.A.empty());
        CHECK(ms.B.empty());
        CHECK(ms.Qplus == std::vector<int>{1, 9, 11});
        CHECK(ms.Qminus.empty());
        CHECK(ms.Q() == std::vector<int>{1, 9, 11});
    }
    SUBCASE("cyclically alternating word") {
        const DifferenceMultisets ms = multisets_of(8, "x0 x1^-1 x6 x3^-1 x4 x5^-1 x2 x7^-1");
        CHECK(ms.l_u == 4);
        CHECK(ms.h == 4);
        CHECK(ms.A == std::vector<int>{1, 5});
        CHECK(ms.B == std::vector<int>{1, 5});
        CHECK(ms.Qplus.empty());
        CHECK(ms.Qminus.empty());
    }
    SUBCASE("mixed word") {
        const DifferenceMultisets ms =
            multisets_of(8, "x0 x2^-1 x4 x7 x6 x0^-1 x2 x5 x4 x6^-1 x0 x3 x2 x4^-1 x6 x1");
        CHECK(ms.l_u == 4);
        CHECK(ms.h == 6);
        CHECK(ms.A == std::vector<int>{2});
        CHECK(ms.B == std::vector<int>{2});
        CHECK(ms.Qplus == std::vector<int>{3, 7});
        CHECK(ms.Qminus.empty());
    }
}

TEST_CASE("non-orientable difference multisets carry end-sign augmentation") {
    SUBCASE("alternating half word, equal end signs") {
        const DifferenceMultisets ms = multisets_of(6, "x0 x1^-1 x0 x3^-1 x4 x3^-1");
        CHECK(ms.flavor == Flavor::NonOrientable);
        CHECK(ms.l_u == 3);
        CHECK(ms.Aprime == std::vector<int>{1});
        CHECK(ms.Bprime == std::vector<int>{5});
        CHECK(ms.Qbar.empty());
        CHECK(ms.Abar == std::vector<int>{1, 3});  // one n/2 entry added to each
        CHECK(ms.Bbar == std::vector<int>{3, 5});
        CHECK(ms.eps_first == +1);
        CHECK(ms.eps_last == +1);
    }
    SUBCASE("non-alternating half word") {
        const DifferenceMultisets ms =
            multisets_of(12, "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1");
        CHECK(ms.l_u == 6);
        CHECK(ms.Aprime == std::vector<int>{2});
        CHECK(ms.Bprime == std::vector<int>{2});
        CHECK(ms.Qbar == std::vector<int>{3, 7, 11});
        CHECK(ms.Abar == std::vector<int>{2, 6});
        CHECK(ms.Bbar == std::vector<int>{2, 6});
    }
    SUBCASE("opposite end signs put two n/2 entries in one set") {
        const DifferenceMultisets ms = multisets_of(4, "x0 x2^-1 x3 x1^-1");
        CHECK(ms.eps_first == -1);
        CHECK(ms.eps_last == +1);
        CHECK(ms.Abar == std::vector<int>{2, 2});
        CHECK(ms.Bbar == std::vector<int>{1});
    }
}

TEST_CASE("difference multisets reject proper powers") {
    const auto rep = classify_redundancy(make_presentation(2, "x0 x1 x0 x1"));
    CHECK_THROWS_AS(difference_multisets(rep), std::invalid_argument);
}

TEST_CASE("structural star graph equals the direct construction") {
    const char* cases[][2] = {
        {"3", "x0 x1"},
        {"2", "x0 x1^-1"},
        {"4", "x0 x2^-1 x3 x1^-1"},
        {"14", "x0 x1 x10 x7 x8 x3"},
        {"6", "x0 x1^-1 x0 x3^-1 x4 x3^-1"},
        {"12", "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1"},
    };
    for (const auto& c : cases) {
        const int n = std::stoi(c[0]);
        CAPTURE(c[1]);
        CHECK(structural_star_graph(multisets_of(n, c[1])) == star_of(n, c[1]));
    }
}

TEST_CASE("circulant graphs and recognition") {
    const Multigraph k44 = circulant(8, {1, 5});
    CHECK(recognize(k44).str() == "complete_bipartite(4)");

    const Multigraph k33 = circulant_prime(6, {1, 3});
    CHECK(recognize(k33).str() == "complete_bipartite(3)");

    const Multigraph hexagon = circulant(6, {1});
    CHECK(recognize(hexagon).cls == GraphClass::Other);
    const Metrics met = metrics(hexagon);
    CHECK(*met.girth == 6);
    CHECK(met.diameter_per_component == std::vector<int>{3});

    CHECK_FALSE(are_isomorphic(k33, hexagon));
    CHECK_THROWS_AS(circulant_prime(5, {1}), std::invalid_argument);
}

TEST_CASE("heawood components from the projective-plane fixture") {
    const Multigraph g = star_of(14, "x0 x1 x10 x7 x8 x3");
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    for (const Multigraph& c : comps) {
        CHECK(c.vertex_count == 14);
        const Metrics met = metrics(c);
        CHECK(*met.girth == 6);
        CHECK(met.diameter_per_component == std::vector<int>{3});
        CHECK(*met.regular_degree == 3);
        const Recognition rec = recognize(c);
        CHECK(rec.cls == GraphClass::ProjectivePlaneIncidence);
        CHECK(rec.parameter == 2);
        CHECK(rec.str() == "projective_plane_incidence(2)");
    }
    CHECK(are_isomorphic(comps[0], comps[1]));
}

TEST_CASE("dot export lists vertices in label order") {
    const std::string dot = to_dot(star_of(2, "x0 x1"));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"x0\"") != std::string::npos);
    CHECK(dot.find("\"x1-\"") != std::string::npos);
    CHECK(dot.find("\"x0\" -- \"x1-\"") != std::string::npos);
}
