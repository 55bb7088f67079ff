#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minpoly.hpp"
#include "roots.hpp"

namespace pslqkit {

struct FactorizationResult {
    mpz_class content;
    std::vector<std::pair<IntPolynomial, int>> factors;  // primitive, positive lead
    std::optional<IntPolynomial> residual;               // part not reached via real roots

    // content * prod factor^mult * residual, for the product-identity check.
    IntPolynomial reassemble() const;
};

// Factors p by reconstructing the minimal polynomial of each real root and
// dividing it out. Factors without real roots end up in the residual, never
// misattributed (every emitted factor passes an exact division gate).
FactorizationResult factor_primitive(const IntPolynomial& p, const PslqOptions& opts = {});

}  // namespace pslqkit
