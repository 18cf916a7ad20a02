#include "f2poly.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace eulercert {

namespace {

void requireSameArity(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << "variable-count mismatch in " << what << ": " << a << " vs " << b;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
    if (index >= num_vars)
        throw std::invalid_argument("variable index out of range");
    Monomial m(num_vars);
    m.exps_[index] = power;
    return m;
}

Exponent Monomial::degree() const {
    Exponent d = 0;
    for (Exponent e : exps_)
        d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    requireSameArity(numVars(), other.numVars(), "monomial product");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] += other.exps_[i];
    return out;
}

bool Monomial::divisibleBy(const Monomial& other) const {
    requireSameArity(numVars(), other.numVars(), "divisibility test");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::dividedBy(const Monomial& other) const {
    requireSameArity(numVars(), other.numVars(), "monomial quotient");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (out.exps_[i] < other.exps_[i])
            throw std::invalid_argument("monomial quotient does not exist");
        out.exps_[i] -= other.exps_[i];
    }
    return out;
}

bool Monomial::coprimeWith(const Monomial& other) const {
    requireSameArity(numVars(), other.numVars(), "coprimality test");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0)
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    requireSameArity(a.numVars(), b.numVars(), "monomial lcm");
    Monomial out(a);
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        out.exps_[i] = std::max(out.exps_[i], b.exps_[i]);
    return out;
}

bool monomialLess(const Monomial& a, const Monomial& b, MonomialOrder order) {
    requireSameArity(a.numVars(), b.numVars(), "monomial comparison");
    if (order == MonomialOrder::degLex) {
        Exponent da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
    }
    for (std::size_t i = a.numVars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i);
    }
    return false;
}

Poly Poly::one(std::size_t num_vars) {
    return Poly::monomial(Monomial(num_vars));
}

Poly Poly::monomial(Monomial m) {
    Poly p(m.numVars());
    p.terms_.push_back(std::move(m));
    return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index, Exponent power) {
    return Poly::monomial(Monomial::variable(num_vars, index, power));
}

Poly Poly::fromMonomials(std::size_t num_vars, std::vector<Monomial> monomials) {
    for (const Monomial& m : monomials)
        requireSameArity(num_vars, m.numVars(), "polynomial construction");
    std::sort(monomials.begin(), monomials.end(), CanonicalMonomialLess{});
    Poly out(num_vars);
    for (std::size_t i = 0; i < monomials.size();) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i])
            ++j;
        if ((j - i) & 1)
            out.terms_.push_back(monomials[i]);
        i = j;
    }
    return out;
}

int Poly::degree() const {
    int d = -1;
    for (const Monomial& m : terms_)
        d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

bool Poly::isHomogeneous() const {
    for (const Monomial& m : terms_)
        if (m.degree() != terms_.front().degree())
            return false;
    return true;
}

bool Poly::containsTerm(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, CanonicalMonomialLess{});
}

Poly Poly::operator+(const Poly& other) const {
    requireSameArity(num_vars_, other.num_vars_, "polynomial sum");
    Poly out(num_vars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    CanonicalMonomialLess less;
    auto a = terms_.begin(), b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (*a == *b) {
            ++a;  // coefficients cancel mod 2
            ++b;
        } else if (less(*a, *b)) {
            out.terms_.push_back(*a++);
        } else {
            out.terms_.push_back(*b++);
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, other.terms_.end());
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    *this = *this + other;
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    requireSameArity(num_vars_, other.num_vars_, "polynomial product");
    std::vector<Monomial> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const Monomial& a : terms_)
        for (const Monomial& b : other.terms_)
            acc.push_back(a.times(b));
    return fromMonomials(num_vars_, std::move(acc));
}

Poly Poly::timesMonomial(const Monomial& m) const {
    requireSameArity(num_vars_, m.numVars(), "polynomial product");
    Poly out(num_vars_);
    out.terms_.reserve(terms_.size());
    // multiplication by a fixed monomial preserves the canonical term order
    for (const Monomial& t : terms_)
        out.terms_.push_back(t.times(m));
    return out;
}

Poly Poly::gradedComponent(Exponent d) const {
    Poly out(num_vars_);
    for (const Monomial& t : terms_)
        if (t.degree() == d)
            out.terms_.push_back(t);
    return out;
}

Poly Poly::truncated(Exponent cap) const {
    Poly out(num_vars_);
    for (const Monomial& t : terms_)
        if (t.degree() <= cap)
            out.terms_.push_back(t);
    return out;
}

const Monomial& Poly::leadingMonomial(MonomialOrder order) const {
    if (isZero())
        throw std::invalid_argument("zero polynomial has no leading monomial");
    if (order == MonomialOrder::lex)
        return terms_.back();
    return *std::max_element(terms_.begin(), terms_.end(),
                             [](const Monomial& a, const Monomial& b) {
                                 return monomialLess(a, b, MonomialOrder::degLex);
                             });
}

Poly completeSymmetric(Exponent d, std::size_t num_vars, const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars)
        if (v >= num_vars)
            throw std::invalid_argument("variable index out of range in symmetric polynomial");
    for (std::size_t i = 1; i < vars.size(); ++i)
        if (std::find(vars.begin(), vars.begin() + i, vars[i]) != vars.begin() + i)
            throw std::invalid_argument("duplicate variable in symmetric polynomial");
    if (d == 0)
        return Poly::one(num_vars);
    if (vars.empty())
        throw std::invalid_argument("empty variable subset in symmetric polynomial of positive degree");

    // All monomials of degree d supported on vars.
    std::vector<Monomial> terms;
    std::vector<Exponent> current(num_vars, 0);
    auto recurse = [&](auto&& self, std::size_t pos, Exponent remaining) -> void {
        if (pos + 1 == vars.size()) {
            current[vars[pos]] = remaining;
            terms.emplace_back(current);
            current[vars[pos]] = 0;
            return;
        }
        for (Exponent e = 0; e <= remaining; ++e) {
            current[vars[pos]] = e;
            self(self, pos + 1, remaining - e);
        }
        current[vars[pos]] = 0;
    };
    recurse(recurse, 0, d);
    return Poly::fromMonomials(num_vars, std::move(terms));
}

Poly seriesInvert(const Poly& p, Exponent cap) {
    if (!p.containsTerm(Monomial(p.numVars())))
        throw std::invalid_argument("series inverse requires constant term 1");
    const Poly positive_part = p + Poly::one(p.numVars());  // p = 1 + P
    Poly acc = Poly::one(p.numVars());
    Poly power = Poly::one(p.numVars());
    for (Exponent k = 1; k <= cap; ++k) {
        power = (power * positive_part).truncated(cap);
        if (power.isZero())
            break;
        acc += power;
    }
    return acc;
}

std::string toText(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.numVars(); ++i) {
        if (m.exponent(i) == 0)
            continue;
        if (!first)
            out << '*';
        out << 'x' << i;
        if (m.exponent(i) > 1)
            out << '^' << m.exponent(i);
        first = false;
    }
    if (first)
        out << '1';
    return out.str();
}

std::string toText(const Poly& p) {
    if (p.isZero())
        return "0";
    std::ostringstream out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it != terms.rbegin())
            out << '+';
        out << toText(*it);
    }
    return out.str();
}

namespace {

[[noreturn]] void parseFail(std::string_view text, std::string_view detail) {
    std::ostringstream msg;
    msg << "cannot parse polynomial " << detail << " in \"" << text << "\"";
    throw ParseError(msg.str());
}

std::uint64_t parseNumber(std::string_view text, std::string_view token, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])))
        ++pos;
    if (pos == start)
        parseFail(text, "(expected a number after '" + std::string(token.substr(0, start)) + "')");
    std::uint64_t value = 0;
    auto result = std::from_chars(token.data() + start, token.data() + pos, value);
    if (result.ec != std::errc{} || value > 0x7fffffffull)
        parseFail(text, "(number out of range: '" + std::string(token.substr(start, pos - start)) + "')");
    return value;
}

Monomial parseTerm(std::string_view text, std::string_view token, std::size_t num_vars) {
    if (token.empty())
        parseFail(text, "(empty term)");
    if (token == "1")
        return Monomial(num_vars);
    std::vector<Exponent> exps(num_vars, 0);
    std::size_t pos = 0;
    while (pos < token.size()) {
        if (token[pos] != 'x')
            parseFail(text, "(unexpected token '" + std::string(token.substr(pos)) + "')");
        ++pos;
        std::uint64_t index = parseNumber(text, token, pos);
        if (index >= num_vars) {
            std::ostringstream msg;
            msg << "(variable x" << index << " out of range for " << num_vars << " variables)";
            parseFail(text, msg.str());
        }
        std::uint64_t exponent = 1;
        if (pos < token.size() && token[pos] == '^') {
            ++pos;
            exponent = parseNumber(text, token, pos);
        }
        if (exps[index] + exponent > 0x7fffffffull)
            parseFail(text, "(accumulated exponent out of range)");
        exps[index] += static_cast<Exponent>(exponent);
        if (pos < token.size()) {
            if (token[pos] != '*')
                parseFail(text, "(expected '*' before '" + std::string(token.substr(pos)) + "')");
            ++pos;
            if (pos == token.size())
                parseFail(text, "(dangling '*')");
        }
    }
    return Monomial(std::move(exps));
}

}  // namespace

Poly parsePoly(std::string_view text, std::size_t num_vars) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    if (compact.empty())
        parseFail(text, "(empty input; the zero polynomial is written \"0\")");

    std::vector<Monomial> monomials;
    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t end = compact.find('+', start);
        if (end == std::string::npos)
            end = compact.size();
        std::string_view term(compact.data() + start, end - start);
        if (term != "0")
            monomials.push_back(parseTerm(text, term, num_vars));
        start = end + 1;
    }
    return Poly::fromMonomials(num_vars, std::move(monomials));
}

}  // namespace eulercert
