#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "obstruction.hpp"
#include "support.hpp"
#include "topology.hpp"

#include <memory>
#include <random>

using namespace eulercert;

namespace {

Poly P(std::string_view text, std::size_t num_vars) {
    return parsePoly(text, num_vars);
}

Poly closedFormCertificate(int n, int ell) {
    std::vector<Exponent> exps(static_cast<std::size_t>(ell) + 1);
    exps[0] = static_cast<Exponent>(n);
    for (int i = 1; i <= ell; ++i)
        exps[static_cast<std::size_t>(i)] = static_cast<Exponent>(n - i);
    return Poly::monomial(Monomial(std::move(exps)));
}

std::shared_ptr<const RingPresentation> sharedBase(int n, int ell) {
    return std::make_shared<const RingPresentation>(basePresentation(FlagSpec{n, ell}));
}

}  // namespace

TEST_CASE("euler class images of the test representations") {
    auto base31 = basePresentation(FlagSpec{3, 1});
    CHECK(eulerClassImage(buildTestRepresentation(3, 1), base31) == P("x0^3*x1^2", 2));

    auto base21 = basePresentation(FlagSpec{2, 1});
    CHECK(eulerClassImage(buildTestRepresentation(2, 1), base21) == P("x0^2*x1", 2));

    // x0^(n+1) kills the pure sphere power
    RepSpec sphere_only(2, {{Character(2, 0b01), 4}});
    CHECK(eulerClassImage(sphere_only, base31).isZero());
}

TEST_CASE("euler class preconditions") {
    auto base = basePresentation(FlagSpec{3, 1});
    CHECK_THROWS_AS(eulerClassImage(buildTestRepresentation(3, 2), base), std::invalid_argument);
    RepSpec with_trivial(2, {{Character::trivial(2), 1}, {Character(2, 0b01), 1}});
    CHECK_THROWS_AS(eulerClassImage(with_trivial, base), std::invalid_argument);
    CHECK_THROWS_AS(eulerClassProduct(with_trivial, 2), std::invalid_argument);
}

TEST_CASE("euler class product expands the linear forms") {
    RepSpec rep = buildTestRepresentation(2, 1);  // x0^2 * (x0 + x1)
    CHECK(eulerClassProduct(rep, 2) == P("x0^3+x0^2*x1", 2));
    // empty representation: the empty product is 1
    CHECK(eulerClassProduct(RepSpec(2, {}), 2) == Poly::one(2));
}

TEST_CASE("certificates match the closed form for all small instances") {
    for (int n = 2; n <= 6; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            ObstructionVerdict verdict = certifyNoEquivariantMap(n, ell);
            REQUIRE(verdict.obstruction_nonzero);
            REQUIRE_FALSE(verdict.trivial_summand_shortcut);
            REQUIRE(verdict.certificate == closedFormCertificate(n, ell));
            REQUIRE(static_cast<int>(verdict.certificate_degree) ==
                    n + manifoldDim(FlagSpec{n, ell}));
            REQUIRE(verdict.presentation != nullptr);
            // certificate is in normal form
            REQUIRE(verdict.presentation->normalForm(verdict.certificate) ==
                    verdict.certificate);
        }
    }
    CHECK_THROWS_AS(certifyNoEquivariantMap(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(certifyNoEquivariantMap(4, 0), std::invalid_argument);
}

TEST_CASE("engine choices agree and cross-check") {
    for (int n = 2; n <= 4; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            ObstructionVerdict g = certifyNoEquivariantMap(n, ell, Engine::groebner);
            ObstructionVerdict o = certifyNoEquivariantMap(n, ell, Engine::oracle);
            ObstructionVerdict b = certifyNoEquivariantMap(n, ell, Engine::both);
            CHECK(g.obstruction_nonzero == o.obstruction_nonzero);
            CHECK(g.certificate == o.certificate);
            CHECK(b.obstruction_nonzero == g.obstruction_nonzero);
        }
    }
}

TEST_CASE("trivial summand shortcut") {
    auto base = sharedBase(3, 1);
    RepSpec with_trivial(2, {{Character::trivial(2), 2}, {Character(2, 0b11), 1}});
    ObstructionVerdict verdict = evaluateObstruction(with_trivial, base);
    CHECK(verdict.trivial_summand_shortcut);
    CHECK_FALSE(verdict.obstruction_nonzero);
    CHECK(verdict.certificate.isZero());
    CHECK(verdict.certificate_degree == 0);

    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        RepSpec rep = testsupport::randomRepSpec(rng, 2, 10, true);
        if (!rep.hasTrivialSummand())
            rep = rep.directSum(RepSpec(2, {{Character::trivial(2), 1}}));
        ObstructionVerdict v = evaluateObstruction(rep, base);
        REQUIRE(v.trivial_summand_shortcut);
        REQUIRE(v.certificate.isZero());
        REQUIRE_FALSE(v.obstruction_nonzero);
    }
}

TEST_CASE("zero image without a trivial summand is inconclusive, not an error") {
    auto base = sharedBase(3, 1);
    RepSpec sphere_only(2, {{Character(2, 0b01), 4}});
    ObstructionVerdict verdict = evaluateObstruction(sphere_only, base);
    CHECK_FALSE(verdict.obstruction_nonzero);
    CHECK_FALSE(verdict.trivial_summand_shortcut);
    CHECK(verdict.certificate.isZero());
}

TEST_CASE("multiplicativity: product of images equals image of the sum") {
    std::mt19937 rng(42);
    int checked = 0;
    while (checked < 120) {
        const std::uint32_t rank = 2 + static_cast<std::uint32_t>(checked % 3);
        const int ell = static_cast<int>(rank) - 1;
        const int n = ell + 1 + checked % 3;
        auto base = sharedBase(n, ell);
        RepSpec v = testsupport::randomRepSpec(rng, rank, 6, false);
        RepSpec w = testsupport::randomRepSpec(rng, rank, 6, false);
        Poly lhs = eulerClassImage(v.directSum(w), *base);
        Poly rhs = base->normalForm(eulerClassImage(v, *base) * eulerClassImage(w, *base));
        REQUIRE(lhs == rhs);

        // a product with a vanishing factor vanishes
        if (!lhs.isZero()) {
            REQUIRE_FALSE(eulerClassImage(v, *base).isZero());
            REQUIRE_FALSE(eulerClassImage(w, *base).isZero());
        }
        ++checked;
    }
}

TEST_CASE("direct sums with trivial pieces stay zero through the shortcut") {
    std::mt19937 rng(43);
    auto base = sharedBase(4, 2);
    for (int i = 0; i < 40; ++i) {
        RepSpec v = testsupport::randomRepSpec(rng, 3, 8, false);
        RepSpec trivial_piece(3, {{Character::trivial(3), 1 + static_cast<std::uint32_t>(i % 3)}});
        ObstructionVerdict verdict = evaluateObstruction(v.directSum(trivial_piece), base);
        REQUIRE(verdict.trivial_summand_shortcut);
        REQUIRE(verdict.certificate.isZero());
    }
}
