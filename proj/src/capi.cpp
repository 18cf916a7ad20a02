#include "eulercert/eulercert.h"

#include "errors.hpp"
#include "f2poly.hpp"
#include "obstruction.hpp"
#include "quotient.hpp"
#include "reps.hpp"
#include "selftest.hpp"
#include "topology.hpp"
#include "version.hpp"

#include <atomic>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct ec_poly {
    eulercert::Poly value;
};

struct ec_presentation {
    std::shared_ptr<const eulercert::RingPresentation> value;
};

struct ec_repspec {
    eulercert::RepSpec value;
};

struct ec_verdict {
    eulercert::ObstructionVerdict value;
};

namespace {

thread_local std::string t_last_error;

std::atomic<std::uint64_t> g_slice_budget_bits{eulercert::kDefaultSliceBudgetBits};

ec_status fail(ec_status status, const char* message) {
    t_last_error = message;
    return status;
}

template <typename Fn>
ec_status guarded(Fn&& fn) {
    try {
        fn();
        return EC_OK;
    } catch (const eulercert::ParseError& e) {
        return fail(EC_ERR_PARSE, e.what());
    } catch (const eulercert::BudgetExceededError& e) {
        return fail(EC_ERR_BUDGET_EXCEEDED, e.what());
    } catch (const eulercert::EngineMismatchError& e) {
        return fail(EC_ERR_ENGINE_MISMATCH, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EC_ERR_BUDGET_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(EC_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ec_status requireArgs(bool ok) {
    return ok ? EC_OK : fail(EC_ERR_INVALID_ARGUMENT, "null argument");
}

eulercert::Engine toEngine(ec_engine engine) {
    switch (engine) {
        case EC_ENGINE_GROEBNER:
            return eulercert::Engine::groebner;
        case EC_ENGINE_ORACLE:
            return eulercert::Engine::oracle;
        case EC_ENGINE_BOTH:
            return eulercert::Engine::both;
    }
    throw std::invalid_argument("unknown engine selector");
}

}  // namespace

extern "C" {

const char* ec_version(void) {
    return eulercert::kVersion;
}

const char* ec_last_error(void) {
    return t_last_error.c_str();
}

void ec_string_free(char* s) {
    delete[] s;
}

void ec_set_slice_budget_bits(uint64_t bits) {
    g_slice_budget_bits.store(bits == 0 ? eulercert::kDefaultSliceBudgetBits : bits);
}

uint64_t ec_slice_budget_bits(void) {
    return g_slice_budget_bits.load();
}

ec_status ec_poly_parse(const char* text, uint32_t num_vars, ec_poly** out) {
    if (ec_status s = requireArgs(text && out); s != EC_OK)
        return s;
    return guarded([&] { *out = new ec_poly{eulercert::parsePoly(text, num_vars)}; });
}

ec_status ec_poly_format(const ec_poly* p, char** out) {
    if (ec_status s = requireArgs(p && out); s != EC_OK)
        return s;
    return guarded([&] { *out = duplicate(eulercert::toText(p->value)); });
}

uint32_t ec_poly_num_vars(const ec_poly* p) {
    return p ? static_cast<uint32_t>(p->value.numVars()) : 0;
}

int ec_poly_is_zero(const ec_poly* p) {
    return (p && p->value.isZero()) ? 1 : 0;
}

int32_t ec_poly_degree(const ec_poly* p) {
    return p ? static_cast<int32_t>(p->value.degree()) : -1;
}

int ec_poly_equal(const ec_poly* a, const ec_poly* b) {
    if (!a || !b)
        return 0;
    return a->value == b->value ? 1 : 0;
}

void ec_poly_free(ec_poly* p) {
    delete p;
}

ec_status ec_presentation_create(uint32_t num_vars, const char* const* relations, size_t count,
                                 ec_presentation** out) {
    if (ec_status s = requireArgs(out && (count == 0 || relations)); s != EC_OK)
        return s;
    return guarded([&] {
        std::vector<eulercert::Poly> parsed;
        parsed.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!relations[i])
                throw std::invalid_argument("null relation string");
            parsed.push_back(eulercert::parsePoly(relations[i], num_vars));
        }
        auto value = std::make_shared<const eulercert::RingPresentation>(
            num_vars, std::move(parsed), eulercert::MonomialOrder::lex,
            eulercert::PresentationHints{}, g_slice_budget_bits.load());
        *out = new ec_presentation{std::move(value)};
    });
}

ec_status ec_presentation_flag(uint32_t n, uint32_t ell, ec_presentation** out) {
    if (ec_status s = requireArgs(out); s != EC_OK)
        return s;
    return guarded([&] {
        auto value = std::make_shared<const eulercert::RingPresentation>(eulercert::flagPresentation(
            eulercert::FlagSpec{static_cast<int>(n), static_cast<int>(ell)},
            g_slice_budget_bits.load()));
        *out = new ec_presentation{std::move(value)};
    });
}

ec_status ec_presentation_base(uint32_t n, uint32_t ell, ec_presentation** out) {
    if (ec_status s = requireArgs(out); s != EC_OK)
        return s;
    return guarded([&] {
        auto value = std::make_shared<const eulercert::RingPresentation>(eulercert::basePresentation(
            eulercert::FlagSpec{static_cast<int>(n), static_cast<int>(ell)},
            g_slice_budget_bits.load()));
        *out = new ec_presentation{std::move(value)};
    });
}

uint32_t ec_presentation_num_vars(const ec_presentation* pr) {
    return pr ? static_cast<uint32_t>(pr->value->numVars()) : 0;
}

size_t ec_presentation_relation_count(const ec_presentation* pr) {
    return pr ? pr->value->relations().size() : 0;
}

ec_status ec_presentation_relation(const ec_presentation* pr, size_t index, char** out) {
    if (ec_status s = requireArgs(pr && out); s != EC_OK)
        return s;
    if (index >= pr->value->relations().size())
        return fail(EC_ERR_INVALID_ARGUMENT, "relation index out of range");
    return guarded([&] { *out = duplicate(eulercert::toText(pr->value->relations()[index])); });
}

size_t ec_presentation_groebner_count(const ec_presentation* pr) {
    return pr ? pr->value->groebnerBasis().size() : 0;
}

ec_status ec_presentation_groebner(const ec_presentation* pr, size_t index, char** out) {
    if (ec_status s = requireArgs(pr && out); s != EC_OK)
        return s;
    if (index >= pr->value->groebnerBasis().size())
        return fail(EC_ERR_INVALID_ARGUMENT, "basis index out of range");
    return guarded([&] { *out = duplicate(eulercert::toText(pr->value->groebnerBasis()[index])); });
}

ec_status ec_normal_form(const ec_presentation* pr, const ec_poly* p, ec_poly** out) {
    if (ec_status s = requireArgs(pr && p && out); s != EC_OK)
        return s;
    return guarded([&] { *out = new ec_poly{pr->value->normalForm(p->value)}; });
}

ec_status ec_ideal_membership(const ec_presentation* pr, const ec_poly* p, int* out) {
    if (ec_status s = requireArgs(pr && p && out); s != EC_OK)
        return s;
    return guarded([&] { *out = pr->value->oracleMembership(p->value) ? 1 : 0; });
}

ec_status ec_hilbert_function(const ec_presentation* pr, uint32_t cap, uint32_t* dims) {
    if (ec_status s = requireArgs(pr && dims); s != EC_OK)
        return s;
    return guarded([&] {
        const eulercert::HilbertTable table = pr->value->hilbertFunction(cap);
        for (uint32_t d = 0; d <= cap; ++d)
            dims[d] = table.dims[d];
    });
}

void ec_presentation_free(ec_presentation* pr) {
    delete pr;
}

int32_t ec_flag_manifold_dim(uint32_t n, uint32_t ell) {
    try {
        return static_cast<int32_t>(
            eulercert::manifoldDim(eulercert::FlagSpec{static_cast<int>(n), static_cast<int>(ell)}));
    } catch (const std::exception&) {
        return -1;
    }
}

ec_status ec_flag_top_class(uint32_t n, uint32_t ell, char** out) {
    if (ec_status s = requireArgs(out); s != EC_OK)
        return s;
    return guarded([&] {
        *out = duplicate(eulercert::toText(eulercert::topClass(
            eulercert::FlagSpec{static_cast<int>(n), static_cast<int>(ell)})));
    });
}

ec_status ec_repspec_parse(const char* text, ec_repspec** out) {
    if (ec_status s = requireArgs(text && out); s != EC_OK)
        return s;
    return guarded([&] { *out = new ec_repspec{eulercert::parseRepSpec(text)}; });
}

ec_status ec_repspec_format(const ec_repspec* rep, char** out) {
    if (ec_status s = requireArgs(rep && out); s != EC_OK)
        return s;
    return guarded([&] { *out = duplicate(eulercert::formatRepSpec(rep->value)); });
}

ec_status ec_repspec_test_representation(uint32_t n, uint32_t ell, ec_repspec** out) {
    if (ec_status s = requireArgs(out); s != EC_OK)
        return s;
    return guarded([&] {
        *out = new ec_repspec{
            eulercert::buildTestRepresentation(static_cast<int>(n), static_cast<int>(ell))};
    });
}

uint32_t ec_repspec_rank(const ec_repspec* rep) {
    return rep ? rep->value.rank() : 0;
}

uint32_t ec_repspec_dimension(const ec_repspec* rep) {
    return rep ? rep->value.dimension() : 0;
}

int ec_repspec_has_trivial_summand(const ec_repspec* rep) {
    return (rep && rep->value.hasTrivialSummand()) ? 1 : 0;
}

void ec_repspec_free(ec_repspec* rep) {
    delete rep;
}

ec_status ec_euler_class_image(const ec_repspec* rep, const ec_presentation* base, ec_poly** out) {
    if (ec_status s = requireArgs(rep && base && out); s != EC_OK)
        return s;
    return guarded([&] { *out = new ec_poly{eulercert::eulerClassImage(rep->value, *base->value)}; });
}

ec_status ec_evaluate(const ec_repspec* rep, const ec_presentation* base, ec_engine engine,
                      ec_verdict** out) {
    if (ec_status s = requireArgs(rep && base && out); s != EC_OK)
        return s;
    return guarded([&] {
        *out = new ec_verdict{eulercert::evaluateObstruction(rep->value, base->value, toEngine(engine))};
    });
}

ec_status ec_certify(uint32_t n, uint32_t ell, ec_engine engine, ec_verdict** out) {
    if (ec_status s = requireArgs(out); s != EC_OK)
        return s;
    return guarded([&] {
        *out = new ec_verdict{eulercert::certifyNoEquivariantMap(
            static_cast<int>(n), static_cast<int>(ell), toEngine(engine),
            g_slice_budget_bits.load())};
    });
}

int ec_verdict_nonzero(const ec_verdict* v) {
    return (v && v->value.obstruction_nonzero) ? 1 : 0;
}

int ec_verdict_trivial_shortcut(const ec_verdict* v) {
    return (v && v->value.trivial_summand_shortcut) ? 1 : 0;
}

uint32_t ec_verdict_certificate_degree(const ec_verdict* v) {
    return v ? v->value.certificate_degree : 0;
}

ec_status ec_verdict_certificate(const ec_verdict* v, char** out) {
    if (ec_status s = requireArgs(v && out); s != EC_OK)
        return s;
    return guarded([&] { *out = duplicate(eulercert::toText(v->value.certificate)); });
}

size_t ec_verdict_relation_count(const ec_verdict* v) {
    return v ? v->value.presentation->relations().size() : 0;
}

ec_status ec_verdict_relation(const ec_verdict* v, size_t index, char** out) {
    if (ec_status s = requireArgs(v && out); s != EC_OK)
        return s;
    if (index >= v->value.presentation->relations().size())
        return fail(EC_ERR_INVALID_ARGUMENT, "relation index out of range");
    return guarded(
        [&] { *out = duplicate(eulercert::toText(v->value.presentation->relations()[index])); });
}

void ec_verdict_free(ec_verdict* v) {
    delete v;
}

ec_status ec_selftest(int* ok, char** report) {
    if (ec_status s = requireArgs(ok && report); s != EC_OK)
        return s;
    return guarded([&] {
        const eulercert::SelftestResult result = eulercert::runSelftest();
        *ok = result.ok ? 1 : 0;
        *report = duplicate(result.report);
    });
}

}  // extern "C"
