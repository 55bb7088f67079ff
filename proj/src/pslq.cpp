#include "pslq.hpp"

#include <cmath>
#include <utility>

namespace pslqkit {

UnitizeOutcome unitize(const std::vector<BigReal>& x, const PrecisionContext& ctx) {
    if (x.size() < 2) throw ArithError("unitize: dimension must be at least 2");
    UnitizeOutcome out;
    out.norm = BigReal(0L, ctx.prec);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
            out.zero_index = i;
            return out;
        }
    }
    BigReal s(0L, ctx.prec);
    for (const auto& xi : x) s += xi * xi;
    if (s.is_zero()) throw ArithError("unitize: zero vector");
    out.norm = sqrt(s);
    out.unit.reserve(x.size());
    for (const auto& xi : x) out.unit.push_back(xi / out.norm);
    return out;
}

HMatrix build_h_matrix(const std::vector<BigReal>& unit, const PrecisionContext& ctx) {
    int n = static_cast<int>(unit.size());
    if (n < 2) throw ArithError("build_h_matrix: dimension must be at least 2");

    // s_j^2 = sum_{k >= j} x_k^2, accumulated backwards.
    std::vector<BigReal> s(static_cast<std::size_t>(n), BigReal(ctx.prec));
    BigReal acc(0L, ctx.prec);
    for (int j = n - 1; j >= 0; --j) {
        acc += unit[static_cast<std::size_t>(j)] * unit[static_cast<std::size_t>(j)];
        s[static_cast<std::size_t>(j)] = sqrt(acc);
    }

    HMatrix H(n, ctx.prec);
    for (int j = 0; j < n - 1; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i < j) {
                H.at(i, j) = BigReal(0L, ctx.prec);
            } else if (i == j) {
                H.at(i, j) = s[static_cast<std::size_t>(j + 1)] / s[static_cast<std::size_t>(j)];
            } else {
                H.at(i, j) = -(unit[static_cast<std::size_t>(i)] * unit[static_cast<std::size_t>(j)]) /
                             (s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(j + 1)]);
            }
        }
    }
    return H;
}

PslqState make_pslq_state(std::vector<BigReal> unit, const PrecisionContext& ctx,
                          double gamma, double tau) {
    if (gamma <= std::sqrt(4.0 / 3.0))
        throw ArithError("gamma must exceed sqrt(4/3)");
    if (tau <= 1.0) throw ArithError("tau must exceed 1");
    PslqState st;
    st.ctx = ctx;
    st.gamma = BigReal(gamma, ctx.prec);
    st.tau = BigReal(tau, ctx.prec);
    st.H = build_h_matrix(unit, ctx);
    st.xbar = std::move(unit);
    int n = st.n();
    st.A.assign(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(0)));
    st.B = st.A;
    for (int i = 0; i < n; ++i) {
        st.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        st.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    return st;
}

void hermite_reduce(PslqState& state) {
    int n = state.n();
    for (int i = 1; i < n; ++i) {
        for (int j = std::min(i - 1, n - 2); j >= 0; --j) {
            if (state.H.at(j, j).is_zero()) continue;
            mpz_class q = nint(state.H.at(i, j) / state.H.at(j, j));
            if (q == 0) continue;
            BigReal qr(q, state.ctx.prec);
            // Row op on H and A, matching column op on B and the xbar update.
            for (int k = 0; k <= j; ++k)
                state.H.at(i, k) -= qr * state.H.at(j, k);
            for (int k = 0; k < n; ++k) {
                state.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    q * state.A[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                state.B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +=
                    q * state.B[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            }
            state.xbar[static_cast<std::size_t>(j)] += qr * state.xbar[static_cast<std::size_t>(i)];
        }
    }
}

int select_pivot(const PslqState& state) {
    int n = state.n();
    BigReal weight = state.tau;
    BigReal best(0L, state.ctx.prec);
    int best_r = 0;
    for (int j = 0; j < n - 1; ++j) {
        BigReal val = weight * abs(state.H.at(j, j));
        if (j == 0 || val > best) {
            best = val;
            best_r = j;
        }
        weight *= state.tau;
    }
    return best_r;
}

void swap_and_rotate(PslqState& state, int r) {
    int n = state.n();
    if (r < 0 || r >= n - 1) throw ArithError("swap_and_rotate: bad row index");

    BigReal beta = state.H.at(r + 1, r);
    BigReal lambda = (r < n - 2) ? state.H.at(r + 1, r + 1) : BigReal(0L, state.ctx.prec);

    for (int j = 0; j < n - 1; ++j)
        std::swap(state.H.at(r, j), state.H.at(r + 1, j));
    std::swap(state.xbar[static_cast<std::size_t>(r)], state.xbar[static_cast<std::size_t>(r + 1)]);
    std::swap(state.A[static_cast<std::size_t>(r)], state.A[static_cast<std::size_t>(r + 1)]);
    for (int i = 0; i < n; ++i)
        std::swap(state.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                  state.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(r + 1)]);

    if (r >= n - 2) return;  // last pivot row: pure exchange

    BigReal sigma = sqrt(beta * beta + lambda * lambda);
    if (sigma < state.ctx.zero_threshold()) return;  // relation imminent; caller detects
    BigReal c = beta / sigma;
    BigReal s = lambda / sigma;
    for (int i = 0; i < n; ++i) {
        BigReal u = state.H.at(i, r);
        BigReal v = state.H.at(i, r + 1);
        state.H.at(i, r) = c * u + s * v;
        state.H.at(i, r + 1) = -s * u + c * v;
    }
}

}  // namespace pslqkit
