#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace pslqkit {

// Result of unitizing an input vector. When a coordinate is exactly zero the
// vector has an immediate relation (the matching unit coordinate vector) and
// no unit vector is produced.
struct UnitizeOutcome {
    std::optional<std::size_t> zero_index;  // 0-based
    std::vector<BigReal> unit;
    BigReal norm;
};

UnitizeOutcome unitize(const std::vector<BigReal>& x, const PrecisionContext& ctx);

// n x (n-1) lower trapezoidal matrix, 0-based storage.
class HMatrix {
public:
    HMatrix() = default;
    HMatrix(int n, mpfr_prec_t prec)
        : n_(n), e_(static_cast<std::size_t>(n) * (n - 1), BigReal(prec)) {}
    int rows() const { return n_; }
    int cols() const { return n_ - 1; }
    BigReal& at(int i, int j) { return e_[static_cast<std::size_t>(i) * (n_ - 1) + j]; }
    const BigReal& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * (n_ - 1) + j];
    }

private:
    int n_ = 0;
    std::vector<BigReal> e_;
};

// H from the partial sums of a unit vector with no zero entry: x * H = 0 and
// H^T * H = I within rounding.
HMatrix build_h_matrix(const std::vector<BigReal>& unit, const PrecisionContext& ctx);

struct PslqState {
    PrecisionContext ctx;
    BigReal gamma;
    BigReal tau;
    long iteration = 0;
    std::vector<BigReal> xbar;
    HMatrix H;
    std::vector<std::vector<mpz_class>> A;  // n x n, A * B = I throughout
    std::vector<std::vector<mpz_class>> B;

    int n() const { return static_cast<int>(xbar.size()); }
};

PslqState make_pslq_state(std::vector<BigReal> unit, const PrecisionContext& ctx,
                          double gamma, double tau);

// Size reduction: afterwards |h_ij| <= |h_jj|/2 for i > j. Updates xbar, H, A
// and B together so that the state invariants are preserved.
void hermite_reduce(PslqState& state);

// Smallest 0-based r maximizing tau^(r+1) * |h_rr|.
int select_pivot(const PslqState& state);

// Exchange rows r, r+1 (plus the matching xbar entries, A rows, B columns)
// and, when r < n-2, restore trapezoidal form with the corner plane rotation.
void swap_and_rotate(PslqState& state, int r);

}  // namespace pslqkit
