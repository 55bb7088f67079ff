#pragma once

#include <vector>

#include "polynomial.hpp"

namespace pslqkit {

// Isolating interval for one simple real root: either the exact rational root
// itself or an open interval (lo, hi) with a sign change and exactly one root.
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
    bool exact = false;
    mpq_class exact_value;
};

// Sturm-sequence isolation of all real roots of a squarefree polynomial.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

// Shrinks the interval until hi - lo < width and returns its midpoint (or the
// exact root). Bisection with exact rational sign tests, accelerated by
// guarded Newton steps.
mpq_class refine_root(const IntPolynomial& p, RootInterval& iv, const mpq_class& width);

// All real roots of a squarefree p, each accurate to the context threshold,
// in ascending order.
std::vector<BigReal> real_roots(const IntPolynomial& p, const PrecisionContext& ctx);

}  // namespace pslqkit
