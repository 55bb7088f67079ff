#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "relation.hpp"

namespace pslqkit {

// The rational-approximation representation <approx, n, N> of an algebraic
// number, plus the minimal polynomial once it has been reconstructed.
struct AlgebraicHandle {
    mpq_class approx;
    int degree_bound = 0;
    int height_bound = 0;
    std::optional<IntPolynomial> minimal_poly;
};

enum class ReconstructionStatus {
    Found,
    NotFound,
    CertificationFailed,
};

struct ReconstructionReport {
    AlgebraicHandle handle;
    BigReal epsilon;            // error budget at the decisive degree
    int digits_used = 0;
    long iterations = 0;        // summed over all degree attempts
    std::vector<double> lower_bound_trace;
    std::vector<std::pair<int, long>> per_degree_iterations;
    ReconstructionStatus status = ReconstructionStatus::NotFound;
    double best_lower_bound = 0.0;
};

// 1 / (n^2 * (n+1)^(n-1/2) * N^(2n)): the approximation accuracy that
// guarantees exact reconstruction.
BigReal epsilon_bound(int n, int N, mpfr_prec_t prec);

// ceil(-log10(epsilon_bound(n, N))).
int digits_required(int n, int N);

// (1, a, a^2, ..., a^n); each power is formed exactly from the rational input
// and rounded once.
std::vector<BigReal> power_vector(const mpq_class& approx, int n, const PrecisionContext& ctx);

// Ascending-degree reconstruction of the minimal polynomial of the algebraic
// number approximated by `approx`, with degree bound n and height bound N.
ReconstructionReport reconstruct(const mpq_class& approx, int n, int N,
                                 const PslqOptions& opts = {});

// Same search restricted to degrees [dmin, dmax]; used by the factorization
// driver, which supplies a per-degree height bound.
ReconstructionReport reconstruct_range(const mpq_class& approx, int dmin, int dmax, int N,
                                       const PslqOptions& opts = {});

}  // namespace pslqkit
