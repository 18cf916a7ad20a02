#pragma once

#include "quotient.hpp"
#include "reps.hpp"

#include <memory>

namespace eulercert {

// Which engine decides whether the reduced class vanishes. groebner uses the
// cached basis, oracle the per-degree linear algebra; both cross-checks them
// and throws EngineMismatchError on disagreement.
enum class Engine { groebner, oracle, both };

struct ObstructionVerdict {
    bool obstruction_nonzero = false;
    Poly certificate;  // reduced Euler class; zero when inconclusive
    Exponent certificate_degree = 0;
    std::shared_ptr<const RingPresentation> presentation;
    bool trivial_summand_shortcut = false;
};

// Product of the degree-one classes of the summands, with multiplicity,
// before any reduction. pre: no trivial summand, rank equal to num_vars.
Poly eulerClassProduct(const RepSpec& rep, std::size_t num_vars);

// Image of the Euler class in the quotient: the normal form of the product.
// pre: as for eulerClassProduct; callers handle the trivial-summand case.
Poly eulerClassImage(const RepSpec& rep, const RingPresentation& base);

// Verdict for an arbitrary representation over an arbitrary base ring. A
// trivial summand short-circuits to the zero class without any reduction.
// A nonzero certificate rules out the equivariant map; zero is inconclusive.
ObstructionVerdict evaluateObstruction(const RepSpec& rep,
                                       std::shared_ptr<const RingPresentation> base,
                                       Engine engine = Engine::groebner);

// Builds the test representation and base ring for (n, ell) and evaluates.
// When the verdict is nonzero, no (C2)^(ell+1)-equivariant map from the
// sphere-times-frames configuration space to the representation sphere
// exists. Requires 1 <= ell < n.
ObstructionVerdict certifyNoEquivariantMap(int n, int ell, Engine engine = Engine::groebner,
                                           std::uint64_t slice_budget_bits = kDefaultSliceBudgetBits);

}  // namespace eulercert
