#include "reps.hpp"

#include "errors.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace eulercert {

namespace {

constexpr std::uint32_t kMaxRank = 32;

void requireSameRank(std::uint32_t a, std::uint32_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << "rank mismatch in " << what << ": " << a << " vs " << b;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Character::Character(std::uint32_t rank, std::uint32_t bits) : rank_(rank), bits_(bits) {
    if (rank_ == 0 || rank_ > kMaxRank)
        throw std::invalid_argument("character rank must be between 1 and 32");
    if (rank_ < kMaxRank && (bits_ >> rank_) != 0)
        throw std::invalid_argument("character bits exceed the rank");
}

Character Character::standard(std::uint32_t rank, std::uint32_t index) {
    if (index >= rank)
        throw std::invalid_argument("standard character index out of range");
    return Character(rank, std::uint32_t{1} << index);
}

Character Character::tensor(const Character& other) const {
    requireSameRank(rank_, other.rank_, "character tensor product");
    return Character(rank_, bits_ ^ other.bits_);
}

Poly Character::sw1LinearForm() const {
    Poly form(rank_);
    for (std::uint32_t j = 0; j < rank_; ++j)
        if (bit(j))
            form += Poly::variable(rank_, j);
    return form;
}

std::string Character::bitstring() const {
    std::string out(rank_, '0');
    for (std::uint32_t j = 0; j < rank_; ++j)
        if (bit(j))
            out[j] = '1';
    return out;
}

RepSpec::RepSpec(std::uint32_t rank, std::map<Character, std::uint32_t> summands)
    : rank_(rank) {
    if (rank_ == 0 || rank_ > kMaxRank)
        throw std::invalid_argument("representation rank must be between 1 and 32");
    for (auto& [chi, mult] : summands) {
        requireSameRank(rank_, chi.rank(), "representation summand");
        if (mult > 0)
            summands_.emplace(chi, mult);
    }
}

std::uint32_t RepSpec::dimension() const {
    std::uint32_t dim = 0;
    for (const auto& [chi, mult] : summands_)
        dim += mult;
    return dim;
}

bool RepSpec::hasTrivialSummand() const {
    return summands_.contains(Character::trivial(rank_));
}

RepSpec RepSpec::directSum(const RepSpec& other) const {
    requireSameRank(rank_, other.rank_, "direct sum");
    std::map<Character, std::uint32_t> merged = summands_;
    for (const auto& [chi, mult] : other.summands_)
        merged[chi] += mult;
    return RepSpec(rank_, std::move(merged));
}

RepSpec buildTestRepresentation(int n, int ell) {
    if (ell < 1 || ell >= n) {
        std::ostringstream msg;
        msg << "require 1 <= ell < n (got n=" << n << ", ell=" << ell << ")";
        throw std::invalid_argument(msg.str());
    }
    const std::uint32_t rank = static_cast<std::uint32_t>(ell) + 1;
    const Character sphere = Character::standard(rank, 0);
    std::map<Character, std::uint32_t> summands;
    summands[sphere] = static_cast<std::uint32_t>(n);
    for (int i = 1; i <= ell; ++i) {
        const Character sign = Character::standard(rank, static_cast<std::uint32_t>(i));
        summands[sphere.tensor(sign)] += 1;
        const int mult = n - i - 1;
        if (mult > 0)
            summands[sign] += static_cast<std::uint32_t>(mult);
    }
    return RepSpec(rank, std::move(summands));
}

RepSpec parseRepSpec(std::string_view text) {
    std::map<Character, std::uint32_t> summands;
    std::uint32_t rank = 0;
    std::size_t line_number = 0;
    std::size_t start = 0;

    auto fail = [&](const std::string& detail) -> void {
        std::ostringstream msg;
        msg << "cannot parse representation at line " << line_number << ": " << detail;
        throw ParseError(msg.str());
    };

    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream fields{std::string(line)};
        std::string bits_token, mult_token, extra;
        if (!(fields >> bits_token))
            continue;  // blank or comment-only line
        if (!(fields >> mult_token))
            fail("expected `<bitstring> <multiplicity>`");
        if (fields >> extra)
            fail("unexpected trailing token '" + extra + "'");

        if (bits_token.size() > kMaxRank)
            fail("bitstring longer than 32 characters");
        std::uint32_t bits = 0;
        for (std::size_t j = 0; j < bits_token.size(); ++j) {
            if (bits_token[j] == '1')
                bits |= std::uint32_t{1} << j;
            else if (bits_token[j] != '0')
                fail("bitstring '" + bits_token + "' contains a character other than 0/1");
        }
        if (rank == 0)
            rank = static_cast<std::uint32_t>(bits_token.size());
        else if (rank != bits_token.size())
            fail("bitstring '" + bits_token + "' does not match rank " + std::to_string(rank));

        std::uint32_t mult = 0;
        auto result = std::from_chars(mult_token.data(), mult_token.data() + mult_token.size(), mult);
        if (result.ec != std::errc{} || result.ptr != mult_token.data() + mult_token.size() || mult == 0)
            fail("multiplicity '" + mult_token + "' is not a positive integer");

        summands[Character(rank, bits)] += mult;
    }

    if (rank == 0)
        throw ParseError("cannot parse representation: no summand lines found");
    return RepSpec(rank, std::move(summands));
}

std::string formatRepSpec(const RepSpec& rep) {
    std::ostringstream out;
    for (const auto& [chi, mult] : rep.summands())
        out << chi.bitstring() << ' ' << mult << '\n';
    return out.str();
}

}  // namespace eulercert
