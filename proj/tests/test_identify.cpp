#include "doctest.h"

#include "identify.hpp"

using namespace pslqkit;

namespace {

ReconstructionReport run(FormKind kind, const char* beta, int n, int N) {
    TranscendentalForm f;
    f.kind = kind;
    f.beta_approx = parse_decimal(beta);
    f.degree_bound = n;
    f.height_bound = N;
    return identify_form(f);
}

}  // namespace

TEST_CASE("arcsin form") {
    // beta ~ pi/6, so alpha = sin(beta) = 1/2.
    auto r = run(FormKind::Arcsin, "0.523598775598299", 1, 2);
    REQUIRE(r.status == ReconstructionStatus::Found);
    CHECK(r.handle.minimal_poly->to_text() == "2*x - 1");
}

TEST_CASE("arccos form") {
    // beta ~ pi/4, so alpha = cos(beta) = sqrt(2)/2.
    auto r = run(FormKind::Arccos, "0.785398163397448", 2, 2);
    REQUIRE(r.status == ReconstructionStatus::Found);
    CHECK(r.handle.minimal_poly->to_text() == "2*x^2 - 1");
}

TEST_CASE("log form") {
    auto r = run(FormKind::Log, "0", 1, 1);
    REQUIRE(r.status == ReconstructionStatus::Found);
    CHECK(r.handle.minimal_poly->to_text() == "x - 1");

    // beta = log 2 to 20 digits, alpha = 2.
    auto r2 = run(FormKind::Log, "0.69314718055994530942", 1, 2);
    REQUIRE(r2.status == ReconstructionStatus::Found);
    CHECK(r2.handle.minimal_poly->to_text() == "x - 2");
}

TEST_CASE("domain validation") {
    CHECK_THROWS(run(FormKind::Arcsin, "2.5", 1, 2));   // |beta| > pi/2
    CHECK_THROWS(run(FormKind::Arccos, "-0.5", 1, 2));  // beta < 0
    CHECK_THROWS(run(FormKind::Arccos, "4", 1, 2));     // beta > pi
}
