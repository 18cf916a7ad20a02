#include "quotient.hpp"

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eulercert {

namespace {

// Full multivariate division: returns the remainder of p after every term
// has been either cancelled against a basis lead or moved to the remainder.
Poly reduceModulo(Poly p,
                  const std::vector<Poly>& basis,
                  const std::vector<Monomial>& leads,
                  MonomialOrder order) {
    std::vector<Monomial> remainder;
    while (!p.isZero()) {
        Monomial t = p.leadingMonomial(order);
        bool cancelled = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (t.divisibleBy(leads[i])) {
                p += basis[i].timesMonomial(t.dividedBy(leads[i]));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) {
            remainder.push_back(t);
            p += Poly::monomial(std::move(t));
        }
    }
    return Poly::fromMonomials(p.numVars(), std::move(remainder));
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    Exponent degree;
};

// Normal selection strategy: lowest lcm degree first, with deterministic
// tie-breaking so that presentations always yield the same basis.
bool pairBefore(const SPair& a, const SPair& b) {
    if (a.degree != b.degree)
        return a.degree < b.degree;
    if (a.lcm != b.lcm)
        return monomialLess(a.lcm, b.lcm, MonomialOrder::lex);
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

std::vector<Poly> buchberger(const std::vector<Poly>& relations, MonomialOrder order) {
    std::vector<Poly> basis;
    std::vector<Monomial> leads;
    std::vector<SPair> pairs;

    auto append = [&](Poly g) {
        const std::size_t index = basis.size();
        leads.push_back(g.leadingMonomial(order));
        basis.push_back(std::move(g));
        for (std::size_t k = 0; k < index; ++k) {
            // pairs with coprime leads reduce to zero and are never queued
            if (leads[k].coprimeWith(leads[index]))
                continue;
            Monomial l = Monomial::lcm(leads[k], leads[index]);
            Exponent d = l.degree();
            pairs.push_back(SPair{k, index, std::move(l), d});
        }
    };

    for (const Poly& g : relations)
        append(g);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pairBefore(pairs[k], pairs[best]))
                best = k;
        SPair pair = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        Poly s = basis[pair.i].timesMonomial(pair.lcm.dividedBy(leads[pair.i])) +
                 basis[pair.j].timesMonomial(pair.lcm.dividedBy(leads[pair.j]));
        Poly r = reduceModulo(std::move(s), basis, leads, order);
        if (!r.isZero())
            append(std::move(r));
    }

    // Minimal basis: keep only elements whose lead no other kept lead divides.
    std::vector<std::size_t> by_lead(basis.size());
    std::iota(by_lead.begin(), by_lead.end(), std::size_t{0});
    std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        if (leads[a] != leads[b])
            return monomialLess(leads[a], leads[b], order);
        return a < b;
    });
    std::vector<Poly> minimal;
    std::vector<Monomial> minimal_leads;
    for (std::size_t k : by_lead) {
        bool covered = false;
        for (const Monomial& l : minimal_leads) {
            if (leads[k].divisibleBy(l)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            minimal.push_back(basis[k]);
            minimal_leads.push_back(leads[k]);
        }
    }

    // Reduced basis: tail-reduce every element against the others.
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly> others;
        std::vector<Monomial> other_leads;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == k)
                continue;
            others.push_back(minimal[j]);
            other_leads.push_back(minimal_leads[j]);
        }
        reduced.push_back(reduceModulo(minimal[k], others, other_leads, order));
    }
    return reduced;
}

// Incremental GF(2) elimination over packed 64-bit words. Rows keep distinct
// leading columns, which is all that rank and membership queries need.
class GF2Echelon {
public:
    explicit GF2Echelon(std::size_t cols)
        : words_((cols + 63) / 64), pivot_of_col_(cols, -1) {}

    bool addRow(std::vector<std::uint64_t> v) {
        int lead = reduceInPlace(v);
        if (lead < 0)
            return false;
        pivot_of_col_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool inSpan(std::vector<std::uint64_t> v) const { return reduceInPlace(v) < 0; }

    std::size_t rank() const { return rows_.size(); }

private:
    // Reduces v by the pivot rows; returns its leading column, -1 when zero.
    int reduceInPlace(std::vector<std::uint64_t>& v) const {
        for (;;) {
            int lead = leadingColumn(v);
            if (lead < 0)
                return -1;
            int pivot = pivot_of_col_[static_cast<std::size_t>(lead)];
            if (pivot < 0)
                return lead;
            const std::vector<std::uint64_t>& row = rows_[static_cast<std::size_t>(pivot)];
            for (std::size_t w = 0; w < words_; ++w)
                v[w] ^= row[w];
        }
    }

    int leadingColumn(const std::vector<std::uint64_t>& v) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (v[w] != 0)
                return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(v[w])));
        return -1;
    }

    std::size_t words_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

std::size_t indexIn(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, CanonicalMonomialLess{});
    if (it == basis.end() || !(*it == m))
        throw std::logic_error("monomial missing from degree slice");
    return static_cast<std::size_t>(it - basis.begin());
}

std::vector<std::uint64_t> toBitRow(const Poly& p, const std::vector<Monomial>& basis) {
    std::vector<std::uint64_t> row((basis.size() + 63) / 64, 0);
    for (const Monomial& t : p.terms()) {
        std::size_t idx = indexIn(basis, t);
        row[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    return row;
}

}  // namespace

std::uint64_t monomialCount(std::size_t num_vars, Exponent d) {
    if (num_vars == 0)
        return d == 0 ? 1 : 0;
    const std::uint64_t cap = (std::uint64_t{1} << 63) - 1;
    std::uint64_t n = d + num_vars - 1;
    std::uint64_t k = std::min<std::uint64_t>(num_vars - 1, n - (num_vars - 1));
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap)
            return cap;
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<Monomial> monomialsOfDegree(std::size_t num_vars, Exponent d) {
    std::vector<Monomial> out;
    if (num_vars == 0) {
        if (d == 0)
            out.emplace_back(std::vector<Exponent>{});
        return out;
    }
    std::vector<Exponent> current(num_vars, 0);
    auto recurse = [&](auto&& self, std::size_t pos, Exponent remaining) -> void {
        if (pos + 1 == num_vars) {
            current[pos] = remaining;
            out.emplace_back(current);
            current[pos] = 0;
            return;
        }
        for (Exponent e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    recurse(recurse, 0, d);
    std::sort(out.begin(), out.end(), CanonicalMonomialLess{});
    return out;
}

std::uint64_t HilbertTable::total() const {
    std::uint64_t sum = 0;
    for (std::uint32_t v : dims)
        sum += v;
    return sum;
}

RingPresentation::RingPresentation(std::size_t num_vars,
                                   std::vector<Poly> relations,
                                   MonomialOrder order,
                                   PresentationHints hints,
                                   std::uint64_t slice_budget_bits)
    : num_vars_(num_vars),
      relations_(std::move(relations)),
      order_(order),
      hints_(std::move(hints)),
      slice_budget_bits_(slice_budget_bits) {
    if (num_vars_ == 0)
        throw std::invalid_argument("presentation requires at least one variable");
    if (slice_budget_bits_ == 0)
        throw std::invalid_argument("slice budget must be positive");
    for (const Poly& g : relations_) {
        if (g.numVars() != num_vars_)
            throw std::invalid_argument("relation uses a different variable count than the presentation");
        if (g.isZero())
            throw std::invalid_argument("relations must be nonzero");
        if (!g.isHomogeneous())
            throw std::invalid_argument("relations must be homogeneous");
    }
    if (hints_.standard_monomial_caps && hints_.standard_monomial_caps->size() != num_vars_)
        throw std::invalid_argument("standard monomial caps must list one bound per variable");

    groebner_ = buchberger(relations_, order_);
    groebner_leads_.reserve(groebner_.size());
    for (const Poly& g : groebner_)
        groebner_leads_.push_back(g.leadingMonomial(order_));
}

Poly RingPresentation::normalForm(const Poly& p) const {
    if (p.numVars() != num_vars_)
        throw std::invalid_argument("polynomial uses a different variable count than the presentation");
    return reduceModulo(p, groebner_, groebner_leads_, order_);
}

namespace {

struct SliceShape {
    std::uint64_t cols = 0;
    std::uint64_t rows = 0;
};

SliceShape sliceShape(std::size_t num_vars, const std::vector<Poly>& relations, Exponent d) {
    SliceShape shape;
    shape.cols = monomialCount(num_vars, d);
    for (const Poly& g : relations) {
        Exponent gd = static_cast<Exponent>(g.degree());
        if (gd <= d)
            shape.rows += monomialCount(num_vars, d - gd);
    }
    return shape;
}

// Budget accounting covers the retained echelon rows (at most one per
// column) plus the monomial index; generated rows that reduce to zero are
// never stored.
void ensureSliceWithinBudget(const SliceShape& shape,
                             std::size_t num_vars,
                             Exponent d,
                             std::uint64_t budget_bits) {
    const std::uint64_t stored = std::min(shape.rows, shape.cols);
    unsigned __int128 bits = (unsigned __int128)(stored + 1) * shape.cols;
    bits += (unsigned __int128)shape.cols * num_vars * 32;
    if (bits > budget_bits) {
        std::ostringstream msg;
        msg << "degree-" << d << " slice needs about " << (std::uint64_t)(bits)
            << " bits (" << shape.rows << " rows x " << shape.cols
            << " columns) but the budget is " << budget_bits << " bits";
        throw BudgetExceededError(msg.str());
    }
}

GF2Echelon spanIdealSlice(std::size_t num_vars,
                          const std::vector<Poly>& relations,
                          Exponent d,
                          const std::vector<Monomial>& basis) {
    GF2Echelon echelon(basis.size());
    for (const Poly& g : relations) {
        Exponent gd = static_cast<Exponent>(g.degree());
        if (gd > d)
            continue;
        for (const Monomial& shift : monomialsOfDegree(num_vars, d - gd))
            echelon.addRow(toBitRow(g.timesMonomial(shift), basis));
    }
    return echelon;
}

}  // namespace

bool RingPresentation::oracleMembership(const Poly& p) const {
    if (p.numVars() != num_vars_)
        throw std::invalid_argument("polynomial uses a different variable count than the presentation");
    if (p.isZero())
        return true;
    if (!p.isHomogeneous())
        throw std::invalid_argument("oracle membership requires a homogeneous polynomial");
    const Exponent d = static_cast<Exponent>(p.degree());

    SliceShape shape = sliceShape(num_vars_, relations_, d);
    if (shape.rows == 0)
        return false;  // the slice of the ideal is empty and p is nonzero
    ensureSliceWithinBudget(shape, num_vars_, d, slice_budget_bits_);

    std::vector<Monomial> basis = monomialsOfDegree(num_vars_, d);
    GF2Echelon echelon = spanIdealSlice(num_vars_, relations_, d, basis);
    return echelon.inSpan(toBitRow(p, basis));
}

HilbertTable RingPresentation::hilbertFunction(Exponent cap) const {
    // fail before any slice is computed, not midway through the table
    for (Exponent d = 0; d <= cap; ++d)
        ensureSliceWithinBudget(sliceShape(num_vars_, relations_, d), num_vars_, d,
                                slice_budget_bits_);

    HilbertTable table;
    table.dims.reserve(cap + 1);
    for (Exponent d = 0; d <= cap; ++d) {
        SliceShape shape = sliceShape(num_vars_, relations_, d);
        std::uint64_t dim = shape.cols;
        if (shape.rows > 0) {
            std::vector<Monomial> basis = monomialsOfDegree(num_vars_, d);
            GF2Echelon echelon = spanIdealSlice(num_vars_, relations_, d, basis);
            dim = shape.cols - echelon.rank();
        }
        if (dim > 0xffffffffull)
            throw BudgetExceededError("quotient dimension exceeds the table range");
        table.dims.push_back(static_cast<std::uint32_t>(dim));
    }
    return table;
}

}  // namespace eulercert
