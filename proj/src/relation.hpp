#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pslq.hpp"

namespace pslqkit {

struct IntegerRelation {
    std::vector<mpz_class> coefficients;
    double euclidean_norm = 0.0;
    mpz_class height;
};

// Normalizes the sign so the last nonzero coefficient is positive and fills
// in the derived norms. Throws on the all-zero vector.
IntegerRelation make_relation(std::vector<mpz_class> coefficients);

enum class RelationStatus {
    Found,
    NoRelationWithinHeight,
    IterationCapReached,
};

struct PslqOptions {
    double gamma = 2.0;
    double tau = 1.4142135623730951;  // sqrt(2); 1/tau^2 = 1/gamma^2 + 1/4
    long max_iterations = 0;          // 0: use the theoretical cap
    std::function<void(const PslqState&)> observer;  // called after each reduction
};

struct RelationResult {
    RelationStatus status = RelationStatus::NoRelationWithinHeight;
    std::optional<IntegerRelation> relation;
    BigReal residual;    // |m . x| against the input vector as given
    double lower_bound = 0.0;  // last 1 / max_j |h_jj|
    long iterations = 0;
    std::vector<double> lower_bound_trace;
};

// 1 / max_j |h_jj|; a lower bound on the Euclidean norm of every relation.
double lower_bound_norm(const HMatrix& H);

// ceil(C(n,2) * log(gamma^(n-1) * relation_norm_bound) / log(tau)).
long iteration_cap(int n, double gamma, double tau, double relation_norm_bound);

// Runs the parameterized integer relation construction on x. `epsilon` is the
// residual tolerance on |m . x| (for a unit input vector this is the
// detection threshold applied to the diagonal of H).
RelationResult find_relation(const std::vector<BigReal>& x, const mpz_class& height_bound,
                             const BigReal& epsilon, const PrecisionContext& ctx,
                             const PslqOptions& opts = {});

}  // namespace pslqkit
