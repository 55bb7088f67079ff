#pragma once

#include <optional>

#include "polynomial.hpp"
#include "relation.hpp"

namespace pslqkit {

// Brute-force references for the test suite. Correctness only; no attention
// paid to speed beyond the tractability guard.

// Exhaustive minimal-norm relation with entries in [-height_cap, height_cap]
// and |a . x| < tolerance. Deterministic: smallest norm, then lexicographic.
// Throws when the search space exceeds 10^8 candidates.
std::optional<IntegerRelation> brute_force_min_relation(const std::vector<BigReal>& x,
                                                        long height_cap,
                                                        const BigReal& tolerance);

// Smallest-degree, then smallest-height primitive polynomial with
// |p(alpha)| < tolerance, normalized to a positive leading coefficient.
std::optional<IntPolynomial> brute_force_minpoly(const mpq_class& alpha_approx,
                                                 int degree_cap, long height_cap,
                                                 const mpq_class& tolerance);

}  // namespace pslqkit
