#include "doctest.h"

#include <random>

#include "pslq.hpp"

using namespace pslqkit;

namespace {

bool is_identity(const std::vector<std::vector<mpz_class>>& A,
                 const std::vector<std::vector<mpz_class>>& B) {
    int n = static_cast<int>(A.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < n; ++k)
                s += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

bool orthonormal_columns(const HMatrix& H, const BigReal& tol) {
    mpfr_prec_t p = H.at(0, 0).prec();
    for (int a = 0; a < H.cols(); ++a)
        for (int b = a; b < H.cols(); ++b) {
            BigReal dot(0L, p);
            for (int i = 0; i < H.rows(); ++i) dot += H.at(i, a) * H.at(i, b);
            BigReal want(a == b ? 1L : 0L, p);
            if (!(abs(dot - want) < tol)) return false;
        }
    return true;
}

std::vector<BigReal> to_bigreal(const std::vector<double>& v, mpfr_prec_t p) {
    std::vector<BigReal> out;
    for (double d : v) out.emplace_back(d, p);
    return out;
}

}  // namespace

TEST_CASE("unitize") {
    auto ctx = make_context(30, 5);
    auto u = unitize(to_bigreal({3, 4}, ctx.prec), ctx);
    CHECK(!u.zero_index);
    CHECK(abs(u.unit[0] - BigReal(mpq_class(3, 5), ctx.prec)) < ctx.zero_threshold());
    CHECK(abs(u.unit[1] - BigReal(mpq_class(4, 5), ctx.prec)) < ctx.zero_threshold());
    CHECK(abs(u.norm - BigReal(5L, ctx.prec)) < ctx.zero_threshold());

    auto z = unitize(to_bigreal({0, 7}, ctx.prec), ctx);
    REQUIRE(z.zero_index);
    CHECK(*z.zero_index == 0);

    auto s = unitize(to_bigreal({1, 1, 1}, ctx.prec), ctx);
    BigReal inv_sqrt3 = BigReal(1L, ctx.prec) / sqrt(BigReal(3L, ctx.prec));
    for (int i = 0; i < 3; ++i) CHECK(abs(s.unit[static_cast<std::size_t>(i)] - inv_sqrt3) <
                                      ctx.zero_threshold());
}

TEST_CASE("h matrix from partial sums") {
    auto ctx = make_context(30, 5);
    auto u = unitize(to_bigreal({3, 4}, ctx.prec), ctx);
    auto H = build_h_matrix(u.unit, ctx);
    REQUIRE(H.rows() == 2);
    REQUIRE(H.cols() == 1);
    CHECK(abs(H.at(0, 0) - BigReal(mpq_class(4, 5), ctx.prec)) < ctx.zero_threshold());
    CHECK(abs(H.at(1, 0) - BigReal(mpq_class(-3, 5), ctx.prec)) < ctx.zero_threshold());
    // x * H = 0
    BigReal dot = u.unit[0] * H.at(0, 0) + u.unit[1] * H.at(1, 0);
    CHECK(abs(dot) < ctx.zero_threshold());

    auto v = unitize(to_bigreal({1, 1}, ctx.prec), ctx);
    auto H2 = build_h_matrix(v.unit, ctx);
    BigReal inv_sqrt2 = BigReal(1L, ctx.prec) / sqrt(BigReal(2L, ctx.prec));
    CHECK(abs(H2.at(0, 0) - inv_sqrt2) < ctx.zero_threshold());
    CHECK(abs(H2.at(1, 0) + inv_sqrt2) < ctx.zero_threshold());

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 4.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> x;
        for (int i = 0; i < 5; ++i) x.push_back(dist(rng));
        auto w = unitize(to_bigreal(x, ctx.prec), ctx);
        auto Hw = build_h_matrix(w.unit, ctx);
        CHECK(orthonormal_columns(Hw, ctx.zero_threshold()));
        for (int j = 0; j < Hw.cols(); ++j) {
            BigReal d(0L, ctx.prec);
            for (int i = 0; i < Hw.rows(); ++i) d += w.unit[static_cast<std::size_t>(i)] * Hw.at(i, j);
            CHECK(abs(d) < ctx.zero_threshold());
        }
    }
}

TEST_CASE("hermite reduction quotients") {
    auto ctx = make_context(30, 5);
    auto u = unitize(to_bigreal({3, 4}, ctx.prec), ctx);
    auto st = make_pslq_state(u.unit, ctx, 2.0, 1.4142135623730951);

    st.H.at(0, 0) = BigReal(1.0, ctx.prec);
    st.H.at(1, 0) = BigReal(0.4, ctx.prec);
    hermite_reduce(st);
    CHECK(abs(st.H.at(1, 0) - BigReal(0.4, ctx.prec)) < ctx.zero_threshold());  // q = 0

    st.H.at(1, 0) = BigReal(1.5, ctx.prec);
    hermite_reduce(st);
    // q = nint(1.5) = 2, so the slot becomes 1.5 - 2 = -0.5.
    CHECK(abs(st.H.at(1, 0) + BigReal(0.5, ctx.prec)) < ctx.zero_threshold());
}

TEST_CASE("hermite reduction property on random states") {
    auto ctx = make_context(30, 5);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.05, 3.0);
    for (int t = 0; t < 25; ++t) {
        std::vector<double> x;
        for (int i = 0; i < 4; ++i) x.push_back(dist(rng));
        auto u = unitize(to_bigreal(x, ctx.prec), ctx);
        auto st = make_pslq_state(u.unit, ctx, 2.0, 1.4142135623730951);
        hermite_reduce(st);
        for (int i = 1; i < st.n(); ++i)
            for (int j = 0; j < std::min(i, st.n() - 1); ++j)
                CHECK(abs(st.H.at(i, j)) <=
                      abs(st.H.at(j, j)) / BigReal(2L, ctx.prec) + ctx.zero_threshold());
        CHECK(is_identity(st.A, st.B));
    }
}

TEST_CASE("pivot selection") {
    auto ctx = make_context(30, 5);
    double tau = 1.4142135623730951;
    auto u3 = unitize(to_bigreal({1, 2, 3}, ctx.prec), ctx);
    auto st = make_pslq_state(u3.unit, ctx, 2.0, tau);

    st.H.at(0, 0) = BigReal(0.9, ctx.prec);
    st.H.at(1, 1) = BigReal(0.9, ctx.prec);
    CHECK(select_pivot(st) == 1);  // equal magnitudes: the larger tau weight wins

    st.H.at(0, 0) = BigReal(1.0, ctx.prec);
    st.H.at(1, 1) = BigReal(0.1, ctx.prec);
    CHECK(select_pivot(st) == 0);  // tau*1.0 beats tau^2*0.1

    auto u2 = unitize(to_bigreal({3, 4}, ctx.prec), ctx);
    auto st2 = make_pslq_state(u2.unit, ctx, 2.0, tau);
    CHECK(select_pivot(st2) == 0);  // only choice
}

TEST_CASE("swap and rotate") {
    auto ctx = make_context(30, 5);
    double tau = 1.4142135623730951;

    // 2x1: pure swap.
    auto u2 = unitize(to_bigreal({3, 4}, ctx.prec), ctx);
    auto st2 = make_pslq_state(u2.unit, ctx, 2.0, tau);
    BigReal h0 = st2.H.at(0, 0), h1 = st2.H.at(1, 0);
    swap_and_rotate(st2, 0);
    CHECK(st2.H.at(0, 0) == h1);
    CHECK(st2.H.at(1, 0) == h0);
    CHECK(is_identity(st2.A, st2.B));

    // 3x2 and larger: trapezoidal form restored, column norms preserved.
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(0.1, 2.5);
    for (int t = 0; t < 25; ++t) {
        std::vector<double> x;
        for (int i = 0; i < 3 + t % 2; ++i) x.push_back(dist(rng));
        auto u = unitize(to_bigreal(x, ctx.prec), ctx);
        auto st = make_pslq_state(u.unit, ctx, 2.0, tau);
        CHECK(orthonormal_columns(st.H, ctx.zero_threshold()));
        swap_and_rotate(st, 0);
        // Superdiagonal annihilated: entries above the diagonal are zero.
        for (int i = 0; i < st.n(); ++i)
            for (int j = i + 1; j < st.n() - 1; ++j)
                CHECK(abs(st.H.at(i, j)) < ctx.zero_threshold());
        CHECK(orthonormal_columns(st.H, ctx.zero_threshold()));
        CHECK(is_identity(st.A, st.B));
    }
}
