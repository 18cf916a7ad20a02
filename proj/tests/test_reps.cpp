#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "reps.hpp"
#include "support.hpp"

#include <random>

using namespace eulercert;

TEST_CASE("character construction and tensor products") {
    Character a(2, 0b01);  // bit 0 set
    Character b(2, 0b11);
    CHECK(a.tensor(b) == Character(2, 0b10));
    CHECK(a.tensor(a) == Character::trivial(2));
    CHECK(Character(3, 0b001).tensor(Character(3, 0b010)) == Character(3, 0b011));
    CHECK(Character::standard(3, 0).bitstring() == "100");
    CHECK_THROWS_AS(Character(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Character(2, 0b100), std::invalid_argument);
    CHECK_THROWS_AS(a.tensor(Character(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Character::standard(2, 2), std::invalid_argument);
}

TEST_CASE("tensor is an elementary abelian group law") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::uint32_t> bits(0, 15);
    for (int i = 0; i < 100; ++i) {
        Character a(4, bits(rng)), b(4, bits(rng)), c(4, bits(rng));
        CHECK(a.tensor(b) == b.tensor(a));
        CHECK(a.tensor(b).tensor(c) == a.tensor(b.tensor(c)));
        CHECK(a.tensor(Character::trivial(4)) == a);
        CHECK(a.tensor(a).isTrivial());
    }
}

TEST_CASE("first stiefel-whitney forms") {
    CHECK(Character(2, 0b01).sw1LinearForm() == parsePoly("x0", 2));
    CHECK(Character::trivial(2).sw1LinearForm().isZero());
    CHECK(Character(3, 0b011).sw1LinearForm() == parsePoly("x0+x1", 3));

    std::mt19937 rng(32);
    std::uniform_int_distribution<std::uint32_t> bits(0, 15);
    for (int i = 0; i < 100; ++i) {
        Character a(4, bits(rng)), b(4, bits(rng));
        CHECK(a.tensor(b).sw1LinearForm() == a.sw1LinearForm() + b.sw1LinearForm());
    }
}

TEST_CASE("test representation matches the decomposition") {
    RepSpec rep = buildTestRepresentation(3, 1);
    CHECK(rep.rank() == 2);
    CHECK(rep.dimension() == 5);
    CHECK(rep.summands().at(Character(2, 0b01)) == 3);
    CHECK(rep.summands().at(Character(2, 0b11)) == 1);
    CHECK(rep.summands().at(Character(2, 0b10)) == 1);

    // multiplicity n-i-1 = 0 drops the summand entirely
    RepSpec small = buildTestRepresentation(2, 1);
    CHECK(small.dimension() == 3);
    CHECK(small.summands().size() == 2);
    CHECK(small.summands().at(Character(2, 0b01)) == 2);
    CHECK(small.summands().at(Character(2, 0b11)) == 1);
    CHECK_FALSE(small.summands().contains(Character(2, 0b10)));

    CHECK(buildTestRepresentation(4, 2).dimension() == 9);

    CHECK_THROWS_AS(buildTestRepresentation(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(buildTestRepresentation(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(buildTestRepresentation(1, 1), std::invalid_argument);
}

TEST_CASE("test representation dimension formula") {
    for (int n = 2; n <= 12; ++n)
        for (int ell = 1; ell < n; ++ell) {
            RepSpec rep = buildTestRepresentation(n, ell);
            CHECK(static_cast<int>(rep.dimension()) == (ell + 1) * n - ell * (ell + 1) / 2);
            CHECK_FALSE(rep.hasTrivialSummand());
        }
}

TEST_CASE("trivial summand detection and canonical form") {
    CHECK(RepSpec(2, {{Character::trivial(2), 1}}).hasTrivialSummand());
    CHECK_FALSE(RepSpec(2, {{Character(2, 0b01), 2}}).hasTrivialSummand());
    // zero multiplicities are dropped on construction
    RepSpec rep(2, {{Character(2, 0b01), 2}, {Character(2, 0b10), 0}});
    CHECK(rep.summands().size() == 1);
    CHECK(rep.dimension() == 2);
    CHECK_THROWS_AS(RepSpec(2, {{Character(3, 0), 1}}), std::invalid_argument);
}

TEST_CASE("direct sums accumulate multiplicities") {
    RepSpec a(2, {{Character(2, 0b01), 2}});
    RepSpec b(2, {{Character(2, 0b01), 1}, {Character(2, 0b11), 3}});
    RepSpec sum = a.directSum(b);
    CHECK(sum.dimension() == 6);
    CHECK(sum.summands().at(Character(2, 0b01)) == 3);
    CHECK(sum.summands().at(Character(2, 0b11)) == 3);
    CHECK_THROWS_AS(a.directSum(RepSpec(3, {})), std::invalid_argument);
}

TEST_CASE("representation text form") {
    RepSpec rep = parseRepSpec("# the test representation at n=3, ell=1\n10 3\n11 1\n01 1\n");
    CHECK(rep == buildTestRepresentation(3, 1));
    CHECK(parseRepSpec(formatRepSpec(rep)) == rep);

    // repeated characters accumulate; blank and comment lines are skipped
    CHECK(parseRepSpec("10 1\n\n10 2 # more\n") ==
          RepSpec(2, {{Character(2, 0b01), 3}}));

    std::mt19937 rng(33);
    for (int i = 0; i < 100; ++i) {
        RepSpec r = testsupport::randomRepSpec(rng, 1 + i % 4, 12, true);
        REQUIRE(parseRepSpec(formatRepSpec(r)) == r);
    }
}

TEST_CASE("representation parse errors") {
    CHECK_THROWS_AS(parseRepSpec(""), ParseError);
    CHECK_THROWS_AS(parseRepSpec("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("10\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("10 1 extra\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("10 0\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("10 -2\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("12 1\n"), ParseError);
    CHECK_THROWS_AS(parseRepSpec("10 1\n110 1\n"), ParseError);
    try {
        parseRepSpec("10 1\n101 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
