#pragma once

#include "f2poly.hpp"
#include "quotient.hpp"

#include <map>

namespace eulercert {

// Parameters of the frame space: ordered ell-tuples of orthonormal vectors
// in R^n, and of its quotient by coordinatewise sign changes.
struct FlagSpec {
    int n = 0;
    int ell = 0;
};

void validateFlagSpec(const FlagSpec& spec);  // requires 1 <= ell < n

// Dimension of the frame space and of its finite quotient:
// n*ell - ell*(ell+1)/2.
int manifoldDim(const FlagSpec& spec);

// Top cohomology class of the quotient, the product of x_i^(n-i) over the
// line factors; a polynomial in ell variables of degree manifoldDim(spec).
Poly topClass(const FlagSpec& spec);

// Mod-2 cohomology of the sign-change quotient of the frame space:
// F2[x0..x_{ell-1}] modulo the complete symmetric polynomials of degrees
// n-ell+1..n. Records the conjectured standard-monomial bounds as hints.
RingPresentation flagPresentation(const FlagSpec& spec,
                                  std::uint64_t slice_budget_bits = kDefaultSliceBudgetBits);

// Mod-2 cohomology of the orbit space of the full configuration space
// (projective n-space times the flag quotient): ell+1 variables, with x0
// the sphere class, modulo x0^(n+1) and the shifted symmetric relations.
RingPresentation basePresentation(const FlagSpec& spec,
                                  std::uint64_t slice_budget_bits = kDefaultSliceBudgetBits);

// Images of the fiber generators under the transgression-style differentials
// of the ell-torus fibration: generator degree j maps to the complete
// symmetric polynomial of degree j+1, for j = n-ell..n-1.
struct DifferentialTable {
    std::map<int, Poly> entries;
};

DifferentialTable serreDifferentialTable(const FlagSpec& spec);

}  // namespace eulercert
