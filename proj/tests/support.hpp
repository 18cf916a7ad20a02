// Shared helpers for the test suites: deterministic generators and
// independent oracles kept free of the code paths they check.
#pragma once

#include "f2poly.hpp"
#include "quotient.hpp"
#include "reps.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace testsupport {

using eulercert::Exponent;
using eulercert::Monomial;
using eulercert::Poly;

inline Monomial randomMonomial(std::mt19937& rng, std::size_t num_vars, Exponent max_exp) {
    std::uniform_int_distribution<Exponent> pick(0, max_exp);
    std::vector<Exponent> exps(num_vars);
    for (auto& e : exps)
        e = pick(rng);
    return Monomial(std::move(exps));
}

inline Poly randomPoly(std::mt19937& rng, std::size_t num_vars, Exponent max_exp,
                       std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::vector<Monomial> terms;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
        terms.push_back(randomMonomial(rng, num_vars, max_exp));
    return Poly::fromMonomials(num_vars, std::move(terms));
}

inline Poly randomHomogeneous(std::mt19937& rng, std::size_t num_vars, Exponent degree,
                              double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<Monomial> terms;
    for (const Monomial& m : eulercert::monomialsOfDegree(num_vars, degree))
        if (keep(rng))
            terms.push_back(m);
    return Poly::fromMonomials(num_vars, std::move(terms));
}

// Independent multiplication oracle: raw exponent maps with explicit parity
// counting, no reuse of Poly arithmetic.
inline Poly naiveProduct(const Poly& a, const Poly& b) {
    std::map<std::vector<Exponent>, int> parity;
    for (const Monomial& ma : a.terms()) {
        for (const Monomial& mb : b.terms()) {
            std::vector<Exponent> exps(a.numVars());
            for (std::size_t i = 0; i < exps.size(); ++i)
                exps[i] = ma.exponent(i) + mb.exponent(i);
            parity[exps] ^= 1;
        }
    }
    std::vector<Monomial> terms;
    for (const auto& [exps, odd] : parity)
        if (odd)
            terms.emplace_back(exps);
    return Poly::fromMonomials(a.numVars(), std::move(terms));
}

inline eulercert::RepSpec randomRepSpec(std::mt19937& rng, std::uint32_t rank,
                                        std::uint32_t max_dim, bool allow_trivial) {
    std::uniform_int_distribution<std::uint32_t> character(allow_trivial ? 0 : 1,
                                                           (1u << rank) - 1);
    std::uniform_int_distribution<std::uint32_t> dim_pick(1, max_dim);
    std::map<eulercert::Character, std::uint32_t> summands;
    std::uint32_t dim = dim_pick(rng);
    while (dim > 0) {
        std::uniform_int_distribution<std::uint32_t> mult_pick(1, dim);
        std::uint32_t mult = mult_pick(rng);
        summands[eulercert::Character(rank, character(rng))] += mult;
        dim -= mult;
    }
    return eulercert::RepSpec(rank, std::move(summands));
}

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 2; k <= n; ++k)
        out *= k;
    return out;
}

}  // namespace testsupport
