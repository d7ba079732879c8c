#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "cgroups/cgroup_search.hpp"
#include "cgroups/isomorphism.hpp"
#include "cgroups/presentation.hpp"
#include "cgroups/todd_coxeter.hpp"
#include "doctest.h"

using namespace cgroups;

TEST_CASE("parse a single power relator") {
    Presentation p = parse_presentation("<a | a^5>");
    CHECK(p.generator_count == 1);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("parse the order-64 presentation") {
    Presentation p = parse_presentation(order64_presentation_text());
    CHECK(p.generator_count == 2);
    CHECK(p.relators.size() == 5);
}

TEST_CASE("commutator brackets expand") {
    Presentation p = parse_presentation("<a,b | [a,b]>");
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == std::vector<int>{1, 2, -1, -2});

    Presentation nested = parse_presentation("<a,b | [a,[a,b]]>");
    CHECK(nested.relators.size() == 1);
}

TEST_CASE("free reduction and equations") {
    Presentation p = parse_presentation("<a | a a^-1 a a>");
    CHECK(p.relators[0] == std::vector<int>{1, 1});

    Presentation eq = parse_presentation("<a,b | a^2 = b^3>");
    CHECK(eq.relators[0] == std::vector<int>{1, 1, -2, -2, -2});

    Presentation chain = parse_presentation("<a,b | a^2 = b^2 = 1>");
    CHECK(chain.relators.size() == 2);
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_presentation("<a | b>"), ParseError);
    CHECK_THROWS_AS(parse_presentation("<a | 1>"), ParseError);  // empty relator
    CHECK_THROWS_AS(parse_presentation("a^2"), ParseError);
    CHECK_THROWS_AS(parse_presentation("<a,a | a^2>"), ParseError);
    try {
        parse_presentation("<a |\n b>");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("coset enumeration of cyclic and symmetric presentations") {
    EnumerationResult c5 = coset_enumerate(parse_presentation("<a | a^5>"));
    CHECK(c5.group.order() == 5);
    CHECK(is_isomorphic(c5.group, cyclic(5)).isomorphic);

    EnumerationResult s3 = coset_enumerate(parse_presentation("<a,b | a^2, b^2, (ab)^3>"));
    CHECK(s3.group.order() == 6);
    CHECK(s3.group.element_order(s3.generator_elements[0]) == 2);
    CHECK(s3.group.element_order(s3.generator_elements[1]) == 2);
}

TEST_CASE("order-64 presentation enumerates to 64 cosets") {
    EnumerationResult r =
        coset_enumerate(parse_presentation(order64_presentation_text()));
    CHECK(r.group.order() == 64);
    // Generators realize their relator orders.
    CHECK(r.group.element_order(r.generator_elements[0]) == 4);
    CHECK(r.group.element_order(r.generator_elements[1]) == 8);
}

TEST_CASE("enumeration is deterministic") {
    Presentation p = parse_presentation("<a,b | a^4, b^4, [a,b]^2, [a,[a,b]], [b,[a,b]]>");
    EnumerationResult r1 = coset_enumerate(p);
    EnumerationResult r2 = coset_enumerate(p);
    CHECK(r1.group.order() == 32);
    CHECK(r1.group.flat_table() == r2.group.flat_table());
    CHECK(r1.generator_elements == r2.generator_elements);
}

TEST_CASE("overflow on an infinite group") {
    Presentation free_abelian = parse_presentation("<a,b | [a,b]>");
    CHECK_THROWS_AS(coset_enumerate(free_abelian, 200), EnumerationOverflow);
}
