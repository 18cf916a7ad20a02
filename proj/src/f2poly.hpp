#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eulercert {

using Exponent = std::uint32_t;

// Monomial with a fixed ambient variable count. Operands of different arity
// never mix; that is an error, not an implicit padding.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

    std::size_t numVars() const { return exps_.size(); }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    Exponent degree() const;

    Monomial times(const Monomial& other) const;
    bool divisibleBy(const Monomial& other) const;
    Monomial dividedBy(const Monomial& other) const;  // pre: divisibleBy(other)
    bool coprimeWith(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

// lex compares the highest-index variable first (x_{m-1} > ... > x_1 > x_0);
// degLex compares total degree first and breaks ties the same way.
enum class MonomialOrder { lex, degLex };

bool monomialLess(const Monomial& a, const Monomial& b, MonomialOrder order);

// Canonical storage comparator; identical to the default lex order.
struct CanonicalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomialLess(a, b, MonomialOrder::lex);
    }
};

// Polynomial over the two-element field: a finite set of monomials, each with
// implicit coefficient 1. Addition is symmetric difference, so p + p = 0.
// Values are immutable in practice; every operation returns a fresh value.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

    static Poly zero(std::size_t num_vars) { return Poly(num_vars); }
    static Poly one(std::size_t num_vars);
    static Poly monomial(Monomial m);
    static Poly variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

    // Sum of the given monomials mod 2: repeated monomials cancel pairwise.
    static Poly fromMonomials(std::size_t num_vars, std::vector<Monomial> monomials);

    std::size_t numVars() const { return num_vars_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    // Terms in strictly increasing canonical order.
    const std::vector<Monomial>& terms() const { return terms_; }

    int degree() const;  // -1 for the zero polynomial
    bool isHomogeneous() const;
    bool containsTerm(const Monomial& m) const;

    Poly operator+(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly operator*(const Poly& other) const;
    Poly timesMonomial(const Monomial& m) const;

    Poly gradedComponent(Exponent d) const;
    Poly truncated(Exponent cap) const;

    const Monomial& leadingMonomial(MonomialOrder order) const;  // pre: !isZero()

    bool operator==(const Poly&) const = default;

private:
    std::size_t num_vars_ = 0;
    std::vector<Monomial> terms_;
};

// Complete homogeneous symmetric polynomial h_d over the given variable
// subset of an ambient ring; h_0 = 1. An empty subset with d > 0 is an error.
Poly completeSymmetric(Exponent d, std::size_t num_vars, const std::vector<std::size_t>& vars);

// Truncated power-series inverse: returns q with p*q = 1 modulo all monomials
// of degree > cap. pre: the constant term of p is 1.
Poly seriesInvert(const Poly& p, Exponent cap);

// Canonical text form: terms in decreasing lex order joined by '+', each
// monomial as '*'-joined factors x<i> (with ^e for e > 1, zero exponents
// omitted), "1" for the empty monomial and "0" for the empty sum.
std::string toText(const Monomial& m);
std::string toText(const Poly& p);

// Inverse of toText; also accepts whitespace, repeated variables within a
// factor list, and repeated terms (which cancel mod 2).
Poly parsePoly(std::string_view text, std::size_t num_vars);

}  // namespace eulercert
