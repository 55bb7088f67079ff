#include "doctest.h"

#include <cmath>

#include "oracle.hpp"

using namespace pslqkit;

namespace {

const char* kSqrt2 = "1.414213562373095048801688724209698078570";
const char* kPhi = "1.618033988749894848204586834365638117720";

}  // namespace

TEST_CASE("minimal relation search") {
    auto ctx = make_context(35, 5);
    std::vector<BigReal> x{BigReal(1L, ctx.prec), BigReal(parse_decimal(kSqrt2), ctx.prec),
                           BigReal(2L, ctx.prec)};
    auto r = brute_force_min_relation(x, 3, pow10(-20, ctx.prec));
    REQUIRE(r);
    CHECK(r->coefficients == std::vector<mpz_class>{mpz_class(-2), mpz_class(0), mpz_class(1)});
    CHECK(r->euclidean_norm == doctest::Approx(std::sqrt(5.0)));

    std::vector<BigReal> y{BigReal(1L, ctx.prec), BigReal(2L, ctx.prec)};
    auto r2 = brute_force_min_relation(y, 2, pow10(-20, ctx.prec));
    REQUIRE(r2);
    CHECK(r2->coefficients == std::vector<mpz_class>{mpz_class(-2), mpz_class(1)});

    std::vector<BigReal> z{BigReal(1L, ctx.prec), BigReal(parse_decimal(kPhi), ctx.prec)};
    CHECK(!brute_force_min_relation(z, 1, pow10(-20, ctx.prec)));
}

TEST_CASE("minimal polynomial search") {
    auto p = brute_force_minpoly(parse_decimal("1.41421356237"), 2, 2, mpq_class(1, 1000000));
    REQUIRE(p);
    CHECK(p->to_text() == "x^2 - 2");

    auto q = brute_force_minpoly(parse_decimal("0.5"), 1, 2, mpq_class(1, 1000000));
    REQUIRE(q);
    CHECK(q->to_text() == "2*x - 1");

    // pi admits no small relation at a tight tolerance.
    auto none = brute_force_minpoly(parse_decimal("3.14159265359"), 2, 3,
                                    mpq_class(1, mpz_class("100000000")));
    CHECK(!none);
}

TEST_CASE("tractability guard") {
    auto ctx = make_context(30, 5);
    std::vector<BigReal> x(8, BigReal(1L, ctx.prec));
    CHECK_THROWS_AS(brute_force_min_relation(x, 100, pow10(-10, ctx.prec)), ArithError);
}
