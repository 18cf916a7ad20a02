#include "topology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eulercert {

void validateFlagSpec(const FlagSpec& spec) {
    if (spec.ell < 1 || spec.ell >= spec.n) {
        std::ostringstream msg;
        msg << "require 1 <= ell < n (got n=" << spec.n << ", ell=" << spec.ell << ")";
        throw std::invalid_argument(msg.str());
    }
}

int manifoldDim(const FlagSpec& spec) {
    validateFlagSpec(spec);
    return spec.n * spec.ell - spec.ell * (spec.ell + 1) / 2;
}

Poly topClass(const FlagSpec& spec) {
    validateFlagSpec(spec);
    std::vector<Exponent> exps(static_cast<std::size_t>(spec.ell));
    for (int k = 0; k < spec.ell; ++k)
        exps[static_cast<std::size_t>(k)] = static_cast<Exponent>(spec.n - 1 - k);
    return Poly::monomial(Monomial(std::move(exps)));
}

RingPresentation flagPresentation(const FlagSpec& spec, std::uint64_t slice_budget_bits) {
    validateFlagSpec(spec);
    const std::size_t num_vars = static_cast<std::size_t>(spec.ell);
    std::vector<std::size_t> vars(num_vars);
    std::iota(vars.begin(), vars.end(), std::size_t{0});

    std::vector<Poly> relations;
    for (int j = spec.n - spec.ell + 1; j <= spec.n; ++j)
        relations.push_back(completeSymmetric(static_cast<Exponent>(j), num_vars, vars));

    PresentationHints hints;
    hints.top_degree = static_cast<Exponent>(manifoldDim(spec));
    std::vector<Exponent> caps(num_vars);
    for (std::size_t k = 0; k < num_vars; ++k)
        caps[k] = static_cast<Exponent>(spec.n - 1) - static_cast<Exponent>(k);
    hints.standard_monomial_caps = std::move(caps);

    return RingPresentation(num_vars, std::move(relations), MonomialOrder::lex,
                            std::move(hints), slice_budget_bits);
}

RingPresentation basePresentation(const FlagSpec& spec, std::uint64_t slice_budget_bits) {
    validateFlagSpec(spec);
    const std::size_t num_vars = static_cast<std::size_t>(spec.ell) + 1;
    std::vector<std::size_t> vars(static_cast<std::size_t>(spec.ell));
    std::iota(vars.begin(), vars.end(), std::size_t{1});  // x1..x_ell

    std::vector<Poly> relations;
    relations.push_back(Poly::variable(num_vars, 0, static_cast<Exponent>(spec.n) + 1));
    for (int j = spec.n - spec.ell + 1; j <= spec.n; ++j)
        relations.push_back(completeSymmetric(static_cast<Exponent>(j), num_vars, vars));

    PresentationHints hints;
    hints.top_degree = static_cast<Exponent>(spec.n + manifoldDim(spec));
    std::vector<Exponent> caps(num_vars);
    for (std::size_t k = 0; k < num_vars; ++k)
        caps[k] = static_cast<Exponent>(spec.n) - static_cast<Exponent>(k);
    hints.standard_monomial_caps = std::move(caps);

    return RingPresentation(num_vars, std::move(relations), MonomialOrder::lex,
                            std::move(hints), slice_budget_bits);
}

DifferentialTable serreDifferentialTable(const FlagSpec& spec) {
    validateFlagSpec(spec);
    const std::size_t num_vars = static_cast<std::size_t>(spec.ell);
    std::vector<std::size_t> vars(num_vars);
    std::iota(vars.begin(), vars.end(), std::size_t{0});

    DifferentialTable table;
    for (int j = spec.n - spec.ell; j <= spec.n - 1; ++j)
        table.entries.emplace(j, completeSymmetric(static_cast<Exponent>(j) + 1, num_vars, vars));
    return table;
}

}  // namespace eulercert
