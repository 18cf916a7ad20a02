#pragma once

#include "eulercert/eulercert.h"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercert::cli {

// Machine-readable result of a `certify` run. Serialization round-trips
// losslessly: from_json(to_json(doc)) == doc and the dump is byte-stable.
struct CertificateDocument {
    int n = 0;
    int ell = 0;
    bool obstruction_nonzero = false;
    std::string certificate;
    int certificate_degree = 0;
    bool trivial_summand_shortcut = false;
    std::vector<std::string> base_relations;
    std::string engine;
    std::string tool_version;

    bool operator==(const CertificateDocument&) const = default;
};

inline void to_json(nlohmann::json& j, const CertificateDocument& doc) {
    j = nlohmann::json{{"n", doc.n},
                       {"ell", doc.ell},
                       {"obstruction_nonzero", doc.obstruction_nonzero},
                       {"certificate", doc.certificate},
                       {"certificate_degree", doc.certificate_degree},
                       {"trivial_summand_shortcut", doc.trivial_summand_shortcut},
                       {"base_relations", doc.base_relations},
                       {"engine", doc.engine},
                       {"tool_version", doc.tool_version}};
}

inline void from_json(const nlohmann::json& j, CertificateDocument& doc) {
    j.at("n").get_to(doc.n);
    j.at("ell").get_to(doc.ell);
    j.at("obstruction_nonzero").get_to(doc.obstruction_nonzero);
    j.at("certificate").get_to(doc.certificate);
    j.at("certificate_degree").get_to(doc.certificate_degree);
    j.at("trivial_summand_shortcut").get_to(doc.trivial_summand_shortcut);
    j.at("base_relations").get_to(doc.base_relations);
    j.at("engine").get_to(doc.engine);
    j.at("tool_version").get_to(doc.tool_version);
}

inline const char* engineName(ec_engine engine) {
    switch (engine) {
        case EC_ENGINE_GROEBNER:
            return "groebner";
        case EC_ENGINE_ORACLE:
            return "oracle";
        case EC_ENGINE_BOTH:
            return "both";
    }
    return "groebner";
}

inline std::string takeString(char* s) {
    std::string out = s ? s : "";
    ec_string_free(s);
    return out;
}

// Collects the document for an already-computed verdict. Throws on API
// failure; callers handle ec_certify status codes themselves.
inline CertificateDocument makeCertificateDocument(int n, int ell, ec_engine engine,
                                                   const ec_verdict* verdict) {
    CertificateDocument doc;
    doc.n = n;
    doc.ell = ell;
    doc.obstruction_nonzero = ec_verdict_nonzero(verdict) != 0;
    doc.certificate_degree = static_cast<int>(ec_verdict_certificate_degree(verdict));
    doc.trivial_summand_shortcut = ec_verdict_trivial_shortcut(verdict) != 0;
    doc.engine = engineName(engine);
    doc.tool_version = ec_version();

    char* text = nullptr;
    if (ec_verdict_certificate(verdict, &text) != EC_OK)
        throw std::runtime_error(ec_last_error());
    doc.certificate = takeString(text);

    const size_t count = ec_verdict_relation_count(verdict);
    doc.base_relations.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        char* relation = nullptr;
        if (ec_verdict_relation(verdict, i, &relation) != EC_OK)
            throw std::runtime_error(ec_last_error());
        doc.base_relations.push_back(takeString(relation));
    }
    return doc;
}

}  // namespace eulercert::cli
