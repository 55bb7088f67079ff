#include "doctest.h"

#include "minpoly.hpp"

using namespace pslqkit;

TEST_CASE("epsilon bound closed forms") {
    mpfr_prec_t p = 256;

    // n=2, N=47: 1/(12*sqrt(3)*47^4).
    BigReal e1 = epsilon_bound(2, 47, p);
    BigReal want1 = BigReal(1L, p) /
                    (BigReal(12L, p) * sqrt(BigReal(3L, p)) * pow_si(BigReal(47L, p), 4));
    CHECK(abs(e1 - want1) < want1 * pow10(-40, p));

    // n=4, N=10: 1/(16*5^(7/2)*10^8) ~ 2.2e-12.
    BigReal e2 = epsilon_bound(4, 10, p);
    BigReal want2 = BigReal(1L, p) / (BigReal(16L, p) * pow_si(BigReal(5L, p), 3) *
                                      sqrt(BigReal(5L, p)) * pow10(8, p));
    CHECK(abs(e2 - want2) < want2 * pow10(-40, p));
    CHECK(e2.to_double() == doctest::Approx(2.2e-12).epsilon(0.05));

    // n=2, N=5: 1/(7500*sqrt(3)) ~ 8e-5.
    BigReal e3 = epsilon_bound(2, 5, p);
    BigReal want3 = BigReal(1L, p) / (BigReal(7500L, p) * sqrt(BigReal(3L, p)));
    CHECK(abs(e3 - want3) < want3 * pow10(-40, p));
}

TEST_CASE("digits required") {
    CHECK(digits_required(7, 17) == 25);
    CHECK(digits_required(10, 15) == 36);
    // -log10(eps(4,13)) = 12.562..., so the ceiling is 13.
    CHECK(digits_required(4, 13) == 13);
}

TEST_CASE("power vector") {
    auto ctx = make_context(30, 5);
    auto v1 = power_vector(mpq_class(1), 3, ctx);
    REQUIRE(v1.size() == 4);
    for (auto& t : v1) CHECK(t == BigReal(1L, ctx.prec));

    auto v2 = power_vector(mpq_class(2), 2, ctx);
    CHECK(v2[0] == BigReal(1L, ctx.prec));
    CHECK(v2[1] == BigReal(2L, ctx.prec));
    CHECK(v2[2] == BigReal(4L, ctx.prec));

    mpq_class a = parse_decimal("11.937253933");
    auto v3 = power_vector(a, 2, ctx);
    // Powers are formed exactly in rational arithmetic and rounded once.
    CHECK(abs(v3[2] - BigReal(mpq_class(a * a), ctx.prec)) < pow10(-25, ctx.prec));
    CHECK(v3[2].to_double() == doctest::Approx(142.49803).epsilon(1e-6));
}

TEST_CASE("minimal polynomial reconstruction") {
    auto r1 = reconstruct(parse_decimal("11.937253933"), 2, 47);
    REQUIRE(r1.status == ReconstructionStatus::Found);
    CHECK(r1.handle.minimal_poly->to_text() == "x^2 - 8*x - 47");

    auto r2 = reconstruct(parse_decimal("3.14626436994198"), 4, 10);
    REQUIRE(r2.status == ReconstructionStatus::Found);
    CHECK(r2.handle.minimal_poly->to_text() == "x^4 - 10*x^2 + 1");

    auto r3 = reconstruct(parse_decimal("0.5"), 1, 2);
    REQUIRE(r3.status == ReconstructionStatus::Found);
    CHECK(r3.handle.minimal_poly->to_text() == "2*x - 1");

    auto r4 = reconstruct(parse_decimal("2.618033989"), 2, 5);
    REQUIRE(r4.status == ReconstructionStatus::Found);
    CHECK(r4.handle.minimal_poly->to_text() == "x^2 - 3*x + 1");
}

TEST_CASE("reconstruction diagnostics") {
    auto r = reconstruct(parse_decimal("3.14626436994198"), 4, 10);
    CHECK(r.digits_used >= digits_required(4, 10));
    CHECK(r.iterations > 0);
    CHECK(!r.per_degree_iterations.empty());
    // The quartic is irreducible, so degrees 1..3 must all have been tried.
    CHECK(r.per_degree_iterations.size() == 4);
    CHECK(r.handle.degree_bound == 4);
    CHECK(r.handle.height_bound == 10);
}

TEST_CASE("degree-restricted search") {
    // Restricting to a degree above the true one may surface a multiple of the
    // minimal polynomial, but never an unrelated one.
    auto r = reconstruct_range(parse_decimal("1.41421356237309504880168872420969807857"),
                               3, 3, 5);
    if (r.status == ReconstructionStatus::Found) {
        auto q = r.handle.minimal_poly->divide_exact(IntPolynomial::from_text("x^2 - 2"));
        CHECK(q.degree() == 1);
    }

    auto r2 = reconstruct_range(parse_decimal("1.41421356237309504880168872420969807857"),
                                2, 2, 5);
    REQUIRE(r2.status == ReconstructionStatus::Found);
    CHECK(r2.handle.minimal_poly->to_text() == "x^2 - 2");
}
