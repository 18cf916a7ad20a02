#include "obstruction.hpp"

#include "errors.hpp"
#include "topology.hpp"

#include <sstream>
#include <stdexcept>

namespace eulercert {

Poly eulerClassProduct(const RepSpec& rep, std::size_t num_vars) {
    if (rep.rank() != num_vars) {
        std::ostringstream msg;
        msg << "representation rank " << rep.rank() << " does not match the "
            << num_vars << "-variable base ring";
        throw std::invalid_argument(msg.str());
    }
    if (rep.hasTrivialSummand())
        throw std::invalid_argument(
            "representation has a trivial summand; its Euler class is zero by convention");

    Poly product = Poly::one(num_vars);
    for (const auto& [chi, mult] : rep.summands()) {
        const Poly form = chi.sw1LinearForm();
        for (std::uint32_t k = 0; k < mult; ++k)
            product = product * form;
    }
    return product;
}

Poly eulerClassImage(const RepSpec& rep, const RingPresentation& base) {
    return base.normalForm(eulerClassProduct(rep, base.numVars()));
}

ObstructionVerdict evaluateObstruction(const RepSpec& rep,
                                       std::shared_ptr<const RingPresentation> base,
                                       Engine engine) {
    if (!base)
        throw std::invalid_argument("null base presentation");

    ObstructionVerdict verdict;
    verdict.presentation = base;

    if (rep.hasTrivialSummand()) {
        verdict.certificate = Poly::zero(base->numVars());
        verdict.trivial_summand_shortcut = true;
        return verdict;
    }

    const Poly product = eulerClassProduct(rep, base->numVars());
    verdict.certificate = base->normalForm(product);

    const bool groebner_nonzero = !verdict.certificate.isZero();
    bool nonzero = groebner_nonzero;
    if (engine == Engine::oracle || engine == Engine::both) {
        const bool oracle_nonzero = !base->oracleMembership(product);
        if (engine == Engine::both && oracle_nonzero != groebner_nonzero) {
            std::ostringstream msg;
            msg << "normal-form engines disagree on the Euler class "
                << toText(product) << ": groebner says "
                << (groebner_nonzero ? "nonzero" : "zero") << ", oracle says "
                << (oracle_nonzero ? "nonzero" : "zero");
            throw EngineMismatchError(msg.str());
        }
        nonzero = oracle_nonzero;
    }

    verdict.obstruction_nonzero = nonzero;
    if (nonzero)
        verdict.certificate_degree = static_cast<Exponent>(verdict.certificate.degree());
    return verdict;
}

ObstructionVerdict certifyNoEquivariantMap(int n, int ell, Engine engine,
                                           std::uint64_t slice_budget_bits) {
    const FlagSpec spec{n, ell};
    validateFlagSpec(spec);
    auto base = std::make_shared<const RingPresentation>(basePresentation(spec, slice_budget_bits));
    return evaluateObstruction(buildTestRepresentation(n, ell), std::move(base), engine);
}

}  // namespace eulercert
