#pragma once

#include "f2poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eulercert {

inline constexpr std::uint64_t kDefaultSliceBudgetBits = std::uint64_t{1} << 30;

// Per-degree dimensions of a graded quotient, indexed 0..cap.
struct HilbertTable {
    std::vector<std::uint32_t> dims;

    std::uint64_t total() const;
    bool operator==(const HilbertTable&) const = default;
};

// Optional metadata attached by presentation builders. These are derived
// hypotheses to be validated by callers, never inputs the engines trust.
struct PresentationHints {
    std::optional<Exponent> top_degree;
    // Conjectured per-variable exponent bounds for the standard monomials.
    std::optional<std::vector<Exponent>> standard_monomial_caps;
};

// Graded quotient ring F2[x0..x_{m-1}] / (relations). Relations must be
// homogeneous and nonzero. The reduced Groebner basis is computed once in
// the constructor; afterwards the value is immutable and every query is
// const and safe to run concurrently.
class RingPresentation {
public:
    RingPresentation(std::size_t num_vars,
                     std::vector<Poly> relations,
                     MonomialOrder order = MonomialOrder::lex,
                     PresentationHints hints = {},
                     std::uint64_t slice_budget_bits = kDefaultSliceBudgetBits);

    std::size_t numVars() const { return num_vars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Poly>& relations() const { return relations_; }
    const std::vector<Poly>& groebnerBasis() const { return groebner_; }
    const PresentationHints& hints() const { return hints_; }
    std::uint64_t sliceBudgetBits() const { return slice_budget_bits_; }

    // Unique reduced representative of p + ideal; idempotent and F2-linear.
    Poly normalForm(const Poly& p) const;

    bool isNonzeroInQuotient(const Poly& p) const { return !normalForm(p).isZero(); }

    // Independent engine: spans the degree slice of the ideal by all monomial
    // multiples of the relations and row-reduces packed bit rows.
    // pre: p homogeneous. Throws BudgetExceededError when the slice matrix
    // would exceed the bit budget.
    bool oracleMembership(const Poly& p) const;

    HilbertTable hilbertFunction(Exponent cap) const;

private:
    std::size_t num_vars_;
    std::vector<Poly> relations_;
    MonomialOrder order_;
    PresentationHints hints_;
    std::uint64_t slice_budget_bits_;
    std::vector<Poly> groebner_;
    std::vector<Monomial> groebner_leads_;
};

// All monomials of the given total degree, in increasing canonical order.
std::vector<Monomial> monomialsOfDegree(std::size_t num_vars, Exponent d);

// Number of monomials of degree d in num_vars variables, capped at 2^63-1.
std::uint64_t monomialCount(std::size_t num_vars, Exponent d);

}  // namespace eulercert
