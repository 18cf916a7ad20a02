// Command-line front end. Links only the C API.
//
// Exit codes: 0 nonzero obstruction (or informational command succeeded),
// 1 malformed input, 2 resource exhaustion or engine disagreement,
// 3 inconclusive verdict.

#include "certdoc.hpp"
#include "eulercert/eulercert.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitInconclusive = 3;

int exitCodeFor(ec_status status) {
    switch (status) {
        case EC_OK:
            return kExitOk;
        case EC_ERR_INVALID_ARGUMENT:
        case EC_ERR_PARSE:
            return kExitBadInput;
        case EC_ERR_BUDGET_EXCEEDED:
        case EC_ERR_ENGINE_MISMATCH:
        case EC_ERR_INTERNAL:
            return kExitResource;
    }
    return kExitResource;
}

int reportStatus(ec_status status) {
    std::cerr << "error: " << ec_last_error() << "\n";
    return exitCodeFor(status);
}

int reportBadInput(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitBadInput;
}

ec_engine engineFromName(const std::string& name) {
    if (name == "oracle")
        return EC_ENGINE_ORACLE;
    if (name == "both")
        return EC_ENGINE_BOTH;
    return EC_ENGINE_GROEBNER;
}

std::optional<std::string> readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

using VerdictPtr = std::unique_ptr<ec_verdict, decltype(&ec_verdict_free)>;
using PresentationPtr = std::unique_ptr<ec_presentation, decltype(&ec_presentation_free)>;
using RepPtr = std::unique_ptr<ec_repspec, decltype(&ec_repspec_free)>;

int runCertify(int n, int ell, const std::string& engine_name, const std::string& format) {
    const ec_engine engine = engineFromName(engine_name);
    ec_verdict* raw = nullptr;
    if (ec_status status = ec_certify(static_cast<uint32_t>(n), static_cast<uint32_t>(ell),
                                      engine, &raw);
        status != EC_OK)
        return reportStatus(status);
    VerdictPtr verdict(raw, &ec_verdict_free);

    const eulercert::cli::CertificateDocument doc =
        eulercert::cli::makeCertificateDocument(n, ell, engine, verdict.get());
    if (format == "json") {
        std::cout << nlohmann::json(doc).dump(2) << "\n";
    } else if (doc.obstruction_nonzero) {
        std::cout << "NONZERO obstruction: " << doc.certificate
                  << " -- no equivariant map exists\n";
    } else {
        std::cout << "INCONCLUSIVE: the obstruction class reduces to 0 "
                     "(no conclusion about the map)\n";
    }
    return doc.obstruction_nonzero ? kExitOk : kExitInconclusive;
}

// Relations file: '#' comments, a `vars <m>` header, then one polynomial in
// canonical text form per line.
int parseRelationsFile(const std::string& path, PresentationPtr& out) {
    const std::optional<std::string> text = readFile(path);
    if (!text)
        return reportBadInput("cannot read relations file '" + path + "'");

    uint32_t num_vars = 0;
    bool have_header = false;
    std::vector<std::string> relations;
    std::istringstream lines(*text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token))
            continue;
        if (!have_header) {
            std::string count;
            if (token != "vars" || !(fields >> count))
                return reportBadInput("relations file '" + path + "' line " +
                                      std::to_string(line_number) +
                                      ": expected a `vars <count>` header");
            auto result = std::from_chars(count.data(), count.data() + count.size(), num_vars);
            if (result.ec != std::errc{} || result.ptr != count.data() + count.size() ||
                num_vars == 0)
                return reportBadInput("relations file '" + path + "' line " +
                                      std::to_string(line_number) +
                                      ": invalid variable count '" + count + "'");
            have_header = true;
            continue;
        }
        std::string rest;
        std::getline(fields, rest);
        relations.push_back(token + rest);
    }
    if (!have_header)
        return reportBadInput("relations file '" + path + "' has no `vars <count>` header");

    std::vector<const char*> pointers;
    pointers.reserve(relations.size());
    for (const std::string& r : relations)
        pointers.push_back(r.c_str());
    ec_presentation* raw = nullptr;
    if (ec_status status =
            ec_presentation_create(num_vars, pointers.data(), pointers.size(), &raw);
        status != EC_OK)
        return reportStatus(status);
    out = PresentationPtr(raw, &ec_presentation_free);
    return kExitOk;
}

int runEuler(const std::string& rep_path, const std::vector<std::string>& base_spec,
             std::optional<int> n, std::optional<int> ell) {
    const std::optional<std::string> rep_text = readFile(rep_path);
    if (!rep_text)
        return reportBadInput("cannot read representation file '" + rep_path + "'");
    ec_repspec* rep_raw = nullptr;
    if (ec_status status = ec_repspec_parse(rep_text->c_str(), &rep_raw); status != EC_OK)
        return reportStatus(status);
    RepPtr rep(rep_raw, &ec_repspec_free);

    PresentationPtr base(nullptr, &ec_presentation_free);
    if (base_spec[0] == "flag") {
        if (base_spec.size() != 1)
            return reportBadInput("`--base flag` takes no file argument");
        if (!n || !ell)
            return reportBadInput("`--base flag` requires --n and --ell");
        ec_presentation* raw = nullptr;
        if (ec_status status = ec_presentation_base(static_cast<uint32_t>(*n),
                                                    static_cast<uint32_t>(*ell), &raw);
            status != EC_OK)
            return reportStatus(status);
        base = PresentationPtr(raw, &ec_presentation_free);
    } else if (base_spec[0] == "relations") {
        if (base_spec.size() != 2)
            return reportBadInput("`--base relations` requires a file argument");
        if (int code = parseRelationsFile(base_spec[1], base); code != kExitOk)
            return code;
    } else {
        return reportBadInput("unknown base kind '" + base_spec[0] +
                              "' (expected `flag` or `relations FILE`)");
    }

    ec_verdict* verdict_raw = nullptr;
    if (ec_status status = ec_evaluate(rep.get(), base.get(), EC_ENGINE_GROEBNER, &verdict_raw);
        status != EC_OK)
        return reportStatus(status);
    VerdictPtr verdict(verdict_raw, &ec_verdict_free);

    char* certificate = nullptr;
    if (ec_status status = ec_verdict_certificate(verdict.get(), &certificate); status != EC_OK)
        return reportStatus(status);
    std::cout << "euler class: " << eulercert::cli::takeString(certificate) << "\n";
    if (ec_verdict_nonzero(verdict.get())) {
        std::cout << "degree: " << ec_verdict_certificate_degree(verdict.get()) << "\n";
        std::cout << "verdict: NONZERO obstruction -- no equivariant map exists\n";
        return kExitOk;
    }
    if (ec_verdict_trivial_shortcut(verdict.get()))
        std::cout << "verdict: INCONCLUSIVE (trivial summand forces the zero class)\n";
    else
        std::cout << "verdict: INCONCLUSIVE (the class reduces to 0)\n";
    return kExitInconclusive;
}

int printPresentation(const char* label, const ec_presentation* pr, bool with_groebner) {
    const uint32_t num_vars = ec_presentation_num_vars(pr);
    std::cout << label << ": " << num_vars << (num_vars == 1 ? " variable\n" : " variables\n");
    for (size_t i = 0; i < ec_presentation_relation_count(pr); ++i) {
        char* text = nullptr;
        if (ec_status status = ec_presentation_relation(pr, i, &text); status != EC_OK)
            return reportStatus(status);
        std::cout << "  relation: " << eulercert::cli::takeString(text) << "\n";
    }
    if (with_groebner) {
        for (size_t i = 0; i < ec_presentation_groebner_count(pr); ++i) {
            char* text = nullptr;
            if (ec_status status = ec_presentation_groebner(pr, i, &text); status != EC_OK)
                return reportStatus(status);
            std::cout << "  groebner: " << eulercert::cli::takeString(text) << "\n";
        }
    }
    return kExitOk;
}

int runRing(int n, int ell, bool with_hilbert, bool with_top_class) {
    ec_presentation* flag_raw = nullptr;
    if (ec_status status = ec_presentation_flag(static_cast<uint32_t>(n),
                                                static_cast<uint32_t>(ell), &flag_raw);
        status != EC_OK)
        return reportStatus(status);
    PresentationPtr flag(flag_raw, &ec_presentation_free);

    ec_presentation* base_raw = nullptr;
    if (ec_status status = ec_presentation_base(static_cast<uint32_t>(n),
                                                static_cast<uint32_t>(ell), &base_raw);
        status != EC_OK)
        return reportStatus(status);
    PresentationPtr base(base_raw, &ec_presentation_free);

    if (int code = printPresentation("flag ring", flag.get(), true); code != kExitOk)
        return code;
    if (int code = printPresentation("base ring", base.get(), false); code != kExitOk)
        return code;

    const int32_t dim = ec_flag_manifold_dim(static_cast<uint32_t>(n), static_cast<uint32_t>(ell));
    if (with_hilbert) {
        const uint32_t cap = static_cast<uint32_t>(dim);
        std::vector<uint32_t> dims(cap + 1, 0);
        if (ec_status status = ec_hilbert_function(flag.get(), cap, dims.data()); status != EC_OK)
            return reportStatus(status);
        std::cout << "hilbert:";
        for (uint32_t v : dims)
            std::cout << " " << v;
        std::cout << "\n";
    }
    if (with_top_class) {
        char* text = nullptr;
        if (ec_status status = ec_flag_top_class(static_cast<uint32_t>(n),
                                                 static_cast<uint32_t>(ell), &text);
            status != EC_OK)
            return reportStatus(status);
        std::cout << "top class: " << eulercert::cli::takeString(text) << "\n";
        std::cout << "manifold dim: " << dim << "\n";
    }
    return kExitOk;
}

int runSelftest() {
    int ok = 0;
    char* report = nullptr;
    if (ec_status status = ec_selftest(&ok, &report); status != EC_OK)
        return reportStatus(status);
    std::cout << eulercert::cli::takeString(report);
    return ok ? kExitOk : kExitResource;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("EULERCERT_SLICE_BUDGET_BITS")) {
        uint64_t bits = 0;
        std::string value(env);
        auto result = std::from_chars(value.data(), value.data() + value.size(), bits);
        if (result.ec != std::errc{} || result.ptr != value.data() + value.size() || bits == 0)
            return reportBadInput("invalid EULERCERT_SLICE_BUDGET_BITS value '" + value + "'");
        ec_set_slice_budget_bits(bits);
    }

    CLI::App app{std::string("eulercert ") + ec_version() +
                 " -- exact mod-2 obstruction certificates for equivariant maps"};
    app.require_subcommand(1);

    int certify_n = 0, certify_ell = 0;
    std::string certify_engine = "groebner", certify_format = "text";
    CLI::App* certify = app.add_subcommand(
        "certify", "Certify that no equivariant test map exists for (n, ell)");
    certify->add_option("--n", certify_n, "ambient dimension")->required();
    certify->add_option("--ell", certify_ell, "number of line factors")->required();
    certify->add_option("--engine", certify_engine, "verdict engine")
        ->check(CLI::IsMember({"groebner", "oracle", "both"}));
    certify->add_option("--format", certify_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string euler_rep;
    std::vector<std::string> euler_base;
    int euler_n = 0, euler_ell = 0;
    CLI::App* euler = app.add_subcommand(
        "euler", "Reduce the Euler class of a representation in a base ring");
    euler->add_option("--rep", euler_rep, "representation file")->required();
    CLI::Option* base_opt = euler->add_option("--base", euler_base,
                                              "`flag` (with --n/--ell) or `relations FILE`");
    base_opt->expected(1, 2)->required();
    CLI::Option* n_opt = euler->add_option("--n", euler_n, "ambient dimension");
    CLI::Option* ell_opt = euler->add_option("--ell", euler_ell, "number of line factors");

    int ring_n = 0, ring_ell = 0;
    bool ring_hilbert = false, ring_top = false;
    CLI::App* ring = app.add_subcommand(
        "ring", "Print the flag and base presentations for (n, ell)");
    ring->add_option("--n", ring_n, "ambient dimension")->required();
    ring->add_option("--ell", ring_ell, "number of line factors")->required();
    ring->add_flag("--hilbert", ring_hilbert, "print the flag quotient dimensions");
    ring->add_flag("--top-class", ring_top, "print the top class and manifold dimension");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the desk-scale consistency suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    if (certify->parsed())
        return runCertify(certify_n, certify_ell, certify_engine, certify_format);
    if (euler->parsed())
        return runEuler(euler_rep, euler_base,
                        n_opt->count() ? std::optional<int>(euler_n) : std::nullopt,
                        ell_opt->count() ? std::optional<int>(euler_ell) : std::nullopt);
    if (ring->parsed())
        return runRing(ring_n, ring_ell, ring_hilbert, ring_top);
    if (selftest->parsed())
        return runSelftest();
    return kExitBadInput;
}
