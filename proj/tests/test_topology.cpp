#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "topology.hpp"

#include <numeric>

using namespace eulercert;

namespace {

Poly P(std::string_view text, std::size_t num_vars) {
    return parsePoly(text, num_vars);
}

std::vector<std::size_t> firstVars(std::size_t count) {
    std::vector<std::size_t> vars(count);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    return vars;
}

// Monomials below the per-variable caps at a given degree.
std::uint64_t cappedMonomialCount(const std::vector<Exponent>& caps, Exponent degree) {
    std::uint64_t count = 0;
    for (const Monomial& m : monomialsOfDegree(caps.size(), degree)) {
        bool inside = true;
        for (std::size_t i = 0; i < caps.size(); ++i)
            if (m.exponent(i) > caps[i])
                inside = false;
        if (inside)
            ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("flag spec validation and dimension") {
    CHECK_THROWS_AS(validateFlagSpec(FlagSpec{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validateFlagSpec(FlagSpec{3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validateFlagSpec(FlagSpec{2, -1}), std::invalid_argument);
    CHECK(manifoldDim(FlagSpec{3, 2}) == 3);
    CHECK(manifoldDim(FlagSpec{4, 2}) == 5);
    for (int n = 2; n <= 9; ++n)
        CHECK(manifoldDim(FlagSpec{n, 1}) == n - 1);
}

TEST_CASE("flag presentations") {
    // single line factor: the truncated polynomial ring of projective space
    for (int n = 2; n <= 6; ++n) {
        RingPresentation ring = flagPresentation(FlagSpec{n, 1});
        REQUIRE(ring.numVars() == 1);
        REQUIRE(ring.relations().size() == 1);
        CHECK(ring.relations()[0] == Poly::variable(1, 0, static_cast<Exponent>(n)));
        CHECK(ring.groebnerBasis() == ring.relations());
    }

    RingPresentation ring32 = flagPresentation(FlagSpec{3, 2});
    CHECK(ring32.numVars() == 2);
    CHECK(ring32.relations() ==
          std::vector<Poly>{completeSymmetric(2, 2, firstVars(2)),
                            completeSymmetric(3, 2, firstVars(2))});

    RingPresentation ring42 = flagPresentation(FlagSpec{4, 2});
    CHECK(ring42.relations() ==
          std::vector<Poly>{completeSymmetric(3, 2, firstVars(2)),
                            completeSymmetric(4, 2, firstVars(2))});
    CHECK(ring42.hints().top_degree == Exponent{5});
    CHECK(ring42.hints().standard_monomial_caps == std::vector<Exponent>{3, 2});
}

TEST_CASE("base presentations") {
    RingPresentation base21 = basePresentation(FlagSpec{2, 1});
    CHECK(base21.numVars() == 2);
    CHECK(base21.relations() == std::vector<Poly>{P("x0^3", 2), P("x1^2", 2)});

    RingPresentation base31 = basePresentation(FlagSpec{3, 1});
    CHECK(base31.relations() == std::vector<Poly>{P("x0^4", 2), P("x1^3", 2)});

    RingPresentation base32 = basePresentation(FlagSpec{3, 2});
    CHECK(base32.numVars() == 3);
    CHECK(base32.relations() ==
          std::vector<Poly>{P("x0^4", 3), completeSymmetric(2, 3, {1, 2}),
                            completeSymmetric(3, 3, {1, 2})});
}

TEST_CASE("top classes") {
    CHECK(topClass(FlagSpec{3, 2}) == P("x0^2*x1", 2));
    CHECK(topClass(FlagSpec{5, 3}) == P("x0^4*x1^3*x2^2", 3));
    for (int n = 2; n <= 7; ++n) {
        CHECK(topClass(FlagSpec{n, 1}) == Poly::variable(1, 0, static_cast<Exponent>(n - 1)));
        for (int ell = 1; ell < n; ++ell)
            CHECK(topClass(FlagSpec{n, ell}).degree() == manifoldDim(FlagSpec{n, ell}));
    }
}

TEST_CASE("differential tables") {
    DifferentialTable table32 = serreDifferentialTable(FlagSpec{3, 2});
    REQUIRE(table32.entries.size() == 2);
    CHECK(table32.entries.at(1) == completeSymmetric(2, 2, firstVars(2)));
    CHECK(table32.entries.at(2) == completeSymmetric(3, 2, firstVars(2)));

    for (int n = 2; n <= 6; ++n) {
        DifferentialTable single = serreDifferentialTable(FlagSpec{n, 1});
        REQUIRE(single.entries.size() == 1);
        CHECK(single.entries.at(n - 1) == Poly::variable(1, 0, static_cast<Exponent>(n)));
    }

    CHECK(serreDifferentialTable(FlagSpec{4, 2}).entries.at(2) ==
          P("x0^3+x0^2*x1+x0*x1^2+x1^3", 2));
}

TEST_CASE("differential table is total on the fiber generator degrees") {
    for (int n = 2; n <= 6; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            DifferentialTable table = serreDifferentialTable(FlagSpec{n, ell});
            REQUIRE(static_cast<int>(table.entries.size()) == ell);
            for (int j = n - ell; j <= n - 1; ++j) {
                REQUIRE(table.entries.contains(j));
                const Poly& entry = table.entries.at(j);
                CHECK(entry.isHomogeneous());
                CHECK(entry.degree() == j + 1);
            }
        }
    }
}

TEST_CASE("differentials equal graded slices of the inverse class") {
    for (int n = 2; n <= 6; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            const std::size_t nv = static_cast<std::size_t>(ell);
            Poly prod = Poly::one(nv);
            for (std::size_t i = 0; i < nv; ++i)
                prod = prod * (Poly::one(nv) + Poly::variable(nv, i));
            Poly inverse = seriesInvert(prod, static_cast<Exponent>(n));
            DifferentialTable table = serreDifferentialTable(FlagSpec{n, ell});
            for (const auto& [j, entry] : table.entries)
                REQUIRE(entry == inverse.gradedComponent(static_cast<Exponent>(j) + 1));
        }
    }
}

TEST_CASE("hilbert structure of flag quotients") {
    for (int n = 2; n <= 5; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            const FlagSpec spec{n, ell};
            RingPresentation ring = flagPresentation(spec);
            const int top = manifoldDim(spec);
            HilbertTable table = ring.hilbertFunction(static_cast<Exponent>(top) + 2);

            const std::uint64_t expected_total =
                testsupport::factorial(static_cast<std::uint64_t>(n)) /
                testsupport::factorial(static_cast<std::uint64_t>(n - ell));
            CHECK(table.total() == expected_total);

            CHECK(table.dims[static_cast<std::size_t>(top)] == 1);
            CHECK(table.dims[static_cast<std::size_t>(top) + 1] == 0);
            CHECK(table.dims[static_cast<std::size_t>(top) + 2] == 0);
            for (int d = 0; d <= top; ++d)
                CHECK(table.dims[static_cast<std::size_t>(d)] ==
                      table.dims[static_cast<std::size_t>(top - d)]);
        }
    }
}

TEST_CASE("standard monomial hypothesis validated against hilbert counts") {
    for (int n = 2; n <= 5; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            RingPresentation ring = flagPresentation(FlagSpec{n, ell});
            REQUIRE(ring.hints().standard_monomial_caps.has_value());
            const auto& caps = *ring.hints().standard_monomial_caps;
            const Exponent top = *ring.hints().top_degree;

            std::uint64_t capped_total = 0;
            HilbertTable table = ring.hilbertFunction(top);
            for (Exponent d = 0; d <= top; ++d) {
                const std::uint64_t capped = cappedMonomialCount(caps, d);
                CHECK(capped == table.dims[d]);
                capped_total += capped;
            }
            CHECK(capped_total == table.total());
        }
    }
}

TEST_CASE("top class generates the one-dimensional top degree") {
    for (int n = 2; n <= 5; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            const FlagSpec spec{n, ell};
            RingPresentation ring = flagPresentation(spec);
            const Poly top = topClass(spec);
            REQUIRE(ring.normalForm(top) == top);  // already a standard monomial
            const Exponent d = static_cast<Exponent>(manifoldDim(spec));
            for (const Monomial& m : monomialsOfDegree(ring.numVars(), d)) {
                Poly nf = ring.normalForm(Poly::monomial(m));
                REQUIRE((nf.isZero() || nf == top));
            }
        }
    }
}
