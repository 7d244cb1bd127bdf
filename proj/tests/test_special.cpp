#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/special.hpp"
#include "cycpres/word.hpp"

using namespace cycpres;

namespace {

CyclicPresentation pres(int n, const char* text) {
    return make_presentation(n, parse_word(text, n));
}

}  // namespace

TEST_CASE("perfect difference set recognition") {
    CHECK(is_perfect_difference_set({0, 1, 3}));
    CHECK(is_perfect_difference_set({1, 2, 4}));
    CHECK_FALSE(is_perfect_difference_set({0, 1, 2}));
    CHECK(is_perfect_difference_set({0, 1, 3, 9}));       // order-3 plane, mod 13
    CHECK_FALSE(is_perfect_difference_set({0, 1, 2, 3}));
    CHECK_FALSE(is_perfect_difference_set({0, 3}));       // 0 and 3 collide mod 3
    CHECK(is_perfect_difference_set({0, 7}));             // {0,1} mod 3, trivial plane
    CHECK(is_perfect_difference_set({0, 1}));
    CHECK_THROWS_AS(is_perfect_difference_set({3}), std::invalid_argument);
}

TEST_CASE("irreducibility is gcd of n with subscript steps") {
    CHECK(is_irreducible(pres(3, "x0 x1")));
    CHECK(is_irreducible(pres(7, "x0 x1 x3")));
    CHECK_FALSE(is_irreducible(pres(4, "x0 x2")));   // all steps even
    CHECK_FALSE(is_irreducible(pres(6, "x0 x2 x4")));
    CHECK(is_irreducible(pres(1, "x0")));
}

TEST_CASE("direct certificates for the classified corpus") {
    struct Case {
        int n;
        const char* word;
        int m, k, nu;
        const char* recognized;
    };
    const Case cases[] = {
        {7, "x0 x0 x1 x4 x4 x5 x1 x1 x2 x5 x5 x6 x2 x2 x3 x6 x6 x0 x3 x3 x4", 3, 21, 1,
         "projective_plane_incidence(2)"},
        {14, "x0 x1 x10 x7 x8 x3", 3, 6, 2, "projective_plane_incidence(2)"},
        {9, "x0 x1 x5 x3 x4 x8 x6 x7 x2", 2, 9, 3, "complete_bipartite(3)"},
        {8, "x0 x1^-1 x6 x3^-1 x4 x5^-1 x2 x7^-1", 2, 8, 2, "complete_bipartite(4)"},
        {8, "x0 x2^-1 x4 x7 x6 x0^-1 x2 x5 x4 x6^-1 x0 x3 x2 x4^-1 x6 x1", 2, 16, 2,
         "complete_bipartite(4)"},
        {6, "x0 x1^-1 x0 x3^-1 x4 x3^-1", 2, 6, 2, "complete_bipartite(3)"},
        {12, "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1", 2, 12, 2,
         "complete_bipartite(6)"},
    };
    for (const Case& c : cases) {
        CAPTURE(c.word);
        const SpecialCertificate cert = is_special_direct(pres(c.n, c.word));
        REQUIRE(cert.special);
        REQUIRE(cert.m.has_value());
        CHECK(*cert.m == c.m);
        CHECK(cert.k == c.k);
        CHECK(cert.nu == c.nu);
        REQUIRE(cert.components.size() == static_cast<size_t>(c.nu));
        for (const ComponentReport& comp : cert.components) {
            CHECK(comp.recognized == c.recognized);
            REQUIRE(comp.girth.has_value());
            CHECK(*comp.girth == 2 * comp.diameter);
            CHECK(comp.min_degree >= 3);
        }
    }
}

TEST_CASE("a claimed 16-letter fixture is in fact not special") {
    // The fixture corpus carries this word with a claimed (2,16,1) tuple
    // that does not hold: the star graph has girth 4 with diameter 4, so
    // the certificate is negative.  This test pins the disagreement.
    const CyclicPresentation p =
        pres(8, "x0 x1 x3 x6 x2 x3 x5 x0 x4 x5 x7 x2 x6 x7 x1 x4");
    const SpecialCertificate cert = is_special_direct(p);
    CHECK_FALSE(cert.special);
    CHECK(cert.failure_reason == "not generalized polygon");
    const TheoremVerdict tv = theorem_verdict(p);
    CHECK(tv.outcome == TheoremOutcome::NotSpecial);

    // Swapping the second half into reverse order repairs it: this variant is
    // genuinely (2,16,1)-special with a single K_{8,8} component.
    const CyclicPresentation fixed =
        pres(8, "x0 x1 x3 x6 x2 x7 x5 x4 x4 x5 x7 x2 x6 x3 x1 x0");
    const SpecialCertificate good = is_special_direct(fixed);
    REQUIRE(good.special);
    CHECK(*good.m == 2);
    CHECK(good.k == 16);
    CHECK(good.nu == 1);
    CHECK(good.components[0].recognized == "complete_bipartite(8)");
    const TheoremVerdict tv2 = theorem_verdict(fixed);
    CHECK(tv2.outcome == TheoremOutcome::Special);
    CHECK(tv2.checker == "two_special_positive");
    CHECK(*tv2.q0 == 0);
}

TEST_CASE("theorem checkers report witnesses") {
    SUBCASE("positive 3-special: perfect difference sets") {
        const TheoremVerdict a = theorem_verdict(pres(14, "x0 x1 x10 x7 x8 x3"));
        CHECK(a.checker == "three_special_positive");
        CHECK(a.outcome == TheoremOutcome::Special);
        CHECK(a.m == 3);
        CHECK(a.k == 6);
        CHECK(a.nu == 2);
        REQUIRE(a.pds.has_value());
        CHECK(*a.pds == std::vector<int>{1, 2, 4});

        const TheoremVerdict b = theorem_verdict(
            pres(7, "x0 x0 x1 x4 x4 x5 x1 x1 x2 x5 x5 x6 x2 x2 x3 x6 x6 x0 x3 x3 x4"));
        REQUIRE(b.pds.has_value());
        CHECK(*b.pds == std::vector<int>{0, 1, 3});
    }
    SUBCASE("positive 2-special: arithmetic residue class") {
        const TheoremVerdict v = theorem_verdict(pres(9, "x0 x1 x5 x3 x4 x8 x6 x7 x2"));
        CHECK(v.checker == "two_special_positive");
        CHECK(v.outcome == TheoremOutcome::Special);
        REQUIRE(v.q0.has_value());
        CHECK(*v.q0 == 1);
        REQUIRE(v.circulant_form.has_value());
        CHECK(*v.circulant_form == "complete_bipartite(3)");
    }
    SUBCASE("cyclically alternating: circulant form, no q0") {
        const TheoremVerdict v =
            theorem_verdict(pres(8, "x0 x1^-1 x6 x3^-1 x4 x5^-1 x2 x7^-1"));
        CHECK(v.checker == "two_special_cyclically_alternating");
        CHECK(v.outcome == TheoremOutcome::Special);
        REQUIRE(v.circulant_form.has_value());
        CHECK(*v.circulant_form == "circ_8({1,5})");
        CHECK_FALSE(v.q0.has_value());
    }
    SUBCASE("mixed") {
        const TheoremVerdict v = theorem_verdict(
            pres(8, "x0 x2^-1 x4 x7 x6 x0^-1 x2 x5 x4 x6^-1 x0 x3 x2 x4^-1 x6 x1"));
        CHECK(v.checker == "two_special_mixed");
        CHECK(v.outcome == TheoremOutcome::Special);
        CHECK(*v.q0 == 3);
    }
    SUBCASE("non-orientable alternating: primed circulant") {
        const TheoremVerdict v = theorem_verdict(pres(6, "x0 x1^-1 x0 x3^-1 x4 x3^-1"));
        CHECK(v.checker == "two_special_nonorientable_alternating");
        CHECK(v.outcome == TheoremOutcome::Special);
        CHECK(*v.circulant_form == "circ'_6({1,3})");
    }
    SUBCASE("non-orientable non-alternating") {
        const TheoremVerdict v = theorem_verdict(
            pres(12, "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1"));
        CHECK(v.checker == "two_special_nonorientable_nonalternating");
        CHECK(v.outcome == TheoremOutcome::Special);
        CHECK(*v.q0 == 3);
    }
}

TEST_CASE("checker dispatch on inapplicable inputs") {
    SUBCASE("proper powers") {
        const TheoremVerdict v = theorem_verdict(pres(2, "x0 x1 x0 x1"));
        CHECK(v.outcome == TheoremOutcome::NotApplicable);
        CHECK(v.reason == "proper_power");
        CHECK(v.checker == "none");
    }
    SUBCASE("reducible presentations") {
        const TheoremVerdict v = theorem_verdict(pres(4, "x0 x0 x2"));
        CHECK(v.outcome == TheoremOutcome::NotApplicable);
        CHECK(v.reason == "reducible");
    }
    SUBCASE("length-3 positive words only reach the m = 3 checker") {
        const TheoremVerdict v = theorem_verdict(pres(3, "x0 x0 x1"));
        CHECK(v.outcome == TheoremOutcome::NotSpecial);
        CHECK(v.checker == "three_special_positive");
        CHECK(v.reason == "n_not_multiple_of_incidence_order");
        CHECK_FALSE(is_special_direct(pres(3, "x0 x0 x1")).special);
    }
    SUBCASE("longer positive words combine both checkers when both fail") {
        const TheoremVerdict v = theorem_verdict(pres(3, "x0 x0 x1 x1"));
        CHECK(v.outcome == TheoremOutcome::NotSpecial);
        CHECK(v.checker == "three_special_positive+two_special_positive");
        CHECK(v.reason ==
              "m3:n_not_multiple_of_incidence_order;m2:n_not_multiple_of_period_length");
        CHECK_FALSE(is_special_direct(pres(3, "x0 x0 x1 x1")).special);
    }
    SUBCASE("negative words are classified through inversion") {
        const TheoremVerdict v =
            theorem_verdict(pres(14, "x3^-1 x8^-1 x7^-1 x10^-1 x1^-1 x0^-1"));
        CHECK(v.outcome == TheoremOutcome::Special);
        CHECK(v.m == 3);
        CHECK(v.nu == 2);
    }
}

TEST_CASE("group flags on rank-2 presentations") {
    struct Case {
        const char* word;
        TitsClass tits;
    };
    const Case cases[] = {
        {"x0 x1", TitsClass::SolvableZ},
        {"x0 x1^-1", TitsClass::SolvableZ},
        {"x0 x1 x0^-1 x1^-1", TitsClass::SolvableZ2},
        {"x0 x0 x1 x1", TitsClass::SolvableBS1m1},
        {"x0 x0 x1^-1 x1^-1", TitsClass::SolvableBS1m1},
        {"x0 x1 x0 x1", TitsClass::FreeSubgroup},               // proper power: large
        {"x0 x1 x0 x1^-1 x0^-1 x1^-1", TitsClass::FreeSubgroup},  // odd alternating half
    };
    for (const Case& c : cases) {
        CAPTURE(c.word);
        const GroupFlags flags = group_property_flags(pres(2, c.word));
        CHECK(flags.tits == c.tits);
    }
    CHECK(group_property_flags(pres(2, "x0 x1 x0 x1")).large == Largeness::Yes);
    CHECK(group_property_flags(pres(2, "x0 x1")).large == Largeness::Unknown);
}

TEST_CASE("largeness and hyperbolicity flags") {
    // Redundant with n >= 3: large, free subgroup.
    const GroupFlags redundant = group_property_flags(pres(9, "x0 x1 x5 x3 x4 x8 x6 x7 x2"));
    CHECK(redundant.large == Largeness::Yes);
    CHECK(redundant.tits == TitsClass::FreeSubgroup);
    CHECK(redundant.hyperbolic);

    // Concise: no largeness claim, Tits alternative unknown.
    const GroupFlags concise = group_property_flags(pres(3, "x0 x1"));
    CHECK(concise.large == Largeness::Unknown);
    CHECK(concise.tits == TitsClass::Unknown);
    CHECK_FALSE(concise.hyperbolic);

    // (m,k) = (2,4) sits exactly on the boundary 2/k + 1/m = 1: special but
    // not flagged hyperbolic.
    const SpecialCertificate boundary_cert = is_special_direct(pres(4, "x0 x1 x0 x1^-1"));
    REQUIRE(boundary_cert.special);
    CHECK(*boundary_cert.m == 2);
    CHECK(boundary_cert.k == 4);
    CHECK(boundary_cert.nu == 1);
    CHECK_FALSE(group_property_flags(pres(4, "x0 x1 x0 x1^-1")).hyperbolic);

    // A square relator on two generators is concise (no relator is a free
    // consequence of the other), so neither flag is asserted.
    const GroupFlags square = group_property_flags(pres(2, "x0 x0"));
    CHECK(square.large == Largeness::Unknown);
    CHECK(square.tits == TitsClass::Unknown);

    const char* names[] = {"yes", "unknown"};
    CHECK(std::string(to_string(Largeness::Yes)) == names[0]);
    CHECK(std::string(to_string(Largeness::Unknown)) == names[1]);
    CHECK(std::string(to_string(TitsClass::FreeSubgroup)) == "free_subgroup");
    CHECK(std::string(to_string(TitsClass::ConjecturalFreeSubgroup)) ==
          "conjectural_free_subgroup");
}
