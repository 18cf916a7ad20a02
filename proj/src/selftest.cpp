#include "selftest.hpp"

#include "f2poly.hpp"
#include "obstruction.hpp"
#include "quotient.hpp"
#include "topology.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace eulercert {

namespace {

Monomial randomMonomial(std::mt19937& rng, std::size_t num_vars, Exponent max_exp) {
    std::uniform_int_distribution<Exponent> pick(0, max_exp);
    std::vector<Exponent> exps(num_vars);
    for (auto& e : exps)
        e = pick(rng);
    return Monomial(std::move(exps));
}

Poly randomPoly(std::mt19937& rng, std::size_t num_vars, Exponent max_exp, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::vector<Monomial> terms;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
        terms.push_back(randomMonomial(rng, num_vars, max_exp));
    return Poly::fromMonomials(num_vars, std::move(terms));
}

Poly randomHomogeneous(std::mt19937& rng, std::size_t num_vars, Exponent degree) {
    const std::vector<Monomial> slice = monomialsOfDegree(num_vars, degree);
    std::bernoulli_distribution keep(0.5);
    std::vector<Monomial> terms;
    for (const Monomial& m : slice)
        if (keep(rng))
            terms.push_back(m);
    return Poly::fromMonomials(num_vars, std::move(terms));
}

// Deliberately different data path from Poly::operator*: raw exponent
// vectors with explicit parity counting.
Poly naiveProduct(const Poly& a, const Poly& b) {
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

}  // namespace

SelftestResult runSelftest() {
    std::ostringstream report;
    bool all_ok = true;
    auto check = [&](bool ok, const std::string& line) {
        report << (ok ? "[ok]   " : "[FAIL] ") << line << '\n';
        all_ok = all_ok && ok;
    };

    {
        std::mt19937 rng(2024);
        std::size_t failures = 0;
        const std::size_t cases = 200;
        for (std::size_t i = 0; i < cases; ++i) {
            std::size_t nv = 1 + (i % 4);
            Poly a = randomPoly(rng, nv, 5, 12);
            Poly b = randomPoly(rng, nv, 5, 12);
            if (a * b != naiveProduct(a, b))
                ++failures;
        }
        std::ostringstream line;
        line << "product vs naive convolution: " << cases - failures << "/" << cases << " agree";
        check(failures == 0, line.str());
    }

    {
        bool ok = true;
        const Exponent cap = 8;
        for (std::size_t ell = 1; ell <= 4 && ok; ++ell) {
            std::vector<std::size_t> vars(ell);
            std::iota(vars.begin(), vars.end(), std::size_t{0});
            Poly prod = Poly::one(ell);
            for (std::size_t i = 0; i < ell; ++i)
                prod = prod * (Poly::one(ell) + Poly::variable(ell, i));
            Poly inverse = seriesInvert(prod, cap);
            Poly expected = Poly::zero(ell);
            for (Exponent d = 0; d <= cap; ++d)
                expected += completeSymmetric(d, ell, vars);
            ok = inverse == expected;
            for (Exponent d = 0; d <= cap && ok; ++d)
                ok = inverse.gradedComponent(d) == completeSymmetric(d, ell, vars);
        }
        check(ok, "series inverse of the line-bundle product matches the symmetric sums (ell <= 4)");
    }

    {
        std::mt19937 rng(7);
        std::size_t checked = 0, failures = 0;
        for (int n = 2; n <= 4; ++n) {
            for (int ell = 1; ell < n; ++ell) {
                const FlagSpec spec{n, ell};
                const RingPresentation ring = flagPresentation(spec);
                const Exponent top = static_cast<Exponent>(manifoldDim(spec));
                std::uniform_int_distribution<Exponent> degree(0, top);
                for (int k = 0; k < 40; ++k) {
                    Poly p = randomHomogeneous(rng, ring.numVars(), degree(rng));
                    ++checked;
                    const bool nf_zero = ring.normalForm(p).isZero();
                    if (nf_zero != ring.oracleMembership(p))
                        ++failures;
                }
            }
        }
        std::ostringstream line;
        line << "groebner vs linear-algebra membership: " << checked - failures << "/" << checked
             << " agree (n <= 4)";
        check(failures == 0, line.str());
    }

    {
        bool ok = true;
        for (int n = 2; n <= 5 && ok; ++n) {
            for (int ell = 1; ell < n && ok; ++ell) {
                const ObstructionVerdict verdict = certifyNoEquivariantMap(n, ell);
                std::vector<Exponent> exps(static_cast<std::size_t>(ell) + 1);
                exps[0] = static_cast<Exponent>(n);
                for (int i = 1; i <= ell; ++i)
                    exps[static_cast<std::size_t>(i)] = static_cast<Exponent>(n - i);
                ok = verdict.obstruction_nonzero &&
                     verdict.certificate == Poly::monomial(Monomial(std::move(exps)));
            }
        }
        check(ok, "certificates match the closed form x0^n * prod x_i^(n-i) (n <= 5)");
    }

    report << (all_ok ? "selftest: PASS" : "selftest: FAIL") << '\n';
    return SelftestResult{all_ok, report.str()};
}

}  // namespace eulercert
