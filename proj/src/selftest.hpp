#pragma once

#include <string>

namespace eulercert {

struct SelftestResult {
    bool ok = false;
    std::string report;
};

// Desk-scale consistency suites: product arithmetic against a naive
// convolution, the symmetric-series identity, agreement of the two
// normal-form engines, and the closed-form certificates for small inputs.
// Deterministic: fixed seeds, byte-stable report.
SelftestResult runSelftest();

}  // namespace eulercert
