#pragma once

#include "f2poly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace eulercert {

// Character of (C2)^r as an r-bit vector. Bit j corresponds to variable x_j;
// by convention bit 0 is the sphere factor and bits 1..r-1 the sign factors
// of the orthonormal frame. The all-zero vector is the trivial character.
class Character {
public:
    Character(std::uint32_t rank, std::uint32_t bits);

    static Character trivial(std::uint32_t rank) { return Character(rank, 0); }
    static Character standard(std::uint32_t rank, std::uint32_t index);

    std::uint32_t rank() const { return rank_; }
    std::uint32_t bits() const { return bits_; }
    bool bit(std::uint32_t j) const { return ((bits_ >> j) & 1u) != 0; }
    bool isTrivial() const { return bits_ == 0; }

    Character tensor(const Character& other) const;  // bitwise XOR

    // First Stiefel-Whitney class of the associated line bundle: the sum of
    // x_j over the set bits, over rank() variables. Trivial character -> 0.
    Poly sw1LinearForm() const;

    std::string bitstring() const;

    auto operator<=>(const Character&) const = default;

private:
    std::uint32_t rank_;
    std::uint32_t bits_;
};

// Real representation of (C2)^rank: a multiset of characters with strictly
// positive multiplicities. Zero multiplicities are dropped on construction.
class RepSpec {
public:
    RepSpec(std::uint32_t rank, std::map<Character, std::uint32_t> summands);

    std::uint32_t rank() const { return rank_; }
    std::uint32_t dimension() const;
    const std::map<Character, std::uint32_t>& summands() const { return summands_; }
    bool hasTrivialSummand() const;

    RepSpec directSum(const RepSpec& other) const;

    bool operator==(const RepSpec&) const = default;

private:
    std::uint32_t rank_;
    std::map<Character, std::uint32_t> summands_;
};

// The representation whose unit sphere the test map targets for a given
// (n, ell): rank ell+1, with summands chi_0^n, chi_0 (x) chi_i, and
// chi_i^(n-i-1) for i = 1..ell. Requires 1 <= ell < n.
RepSpec buildTestRepresentation(int n, int ell);

// Text form: one `<bitstring> <multiplicity>` line per summand, '#' starts a
// comment, rank inferred from the bitstring length and required uniform.
// Repeated characters accumulate. Bit j of the string is the j-th letter.
RepSpec parseRepSpec(std::string_view text);
std::string formatRepSpec(const RepSpec& rep);

}  // namespace eulercert
