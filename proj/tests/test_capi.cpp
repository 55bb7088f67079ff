#include "doctest.h"

#include <cstring>
#include <string>

#include "pslqkit.h"

TEST_CASE("c api minpoly") {
    pslqkit_report* rep = nullptr;
    auto st = pslqkit_minpoly("11.937253933", 2, 47, nullptr, &rep);
    REQUIRE(st == PSLQKIT_OK);
    REQUIRE(rep);
    CHECK(std::string(pslqkit_report_polynomial(rep)) == "x^2 - 8*x - 47");
    CHECK(std::string(pslqkit_report_outcome(rep)) == "found");
    CHECK(pslqkit_report_digits(rep) > 0);
    CHECK(pslqkit_report_iterations(rep) > 0);
    pslqkit_report_free(rep);
}

TEST_CASE("c api minpoly not found") {
    pslqkit_report* rep = nullptr;
    // pi is not algebraic of degree <= 2 with height <= 3.
    auto st = pslqkit_minpoly("3.14159265358979323846", 2, 3, nullptr, &rep);
    CHECK(st == PSLQKIT_ERR_NOT_FOUND);
    REQUIRE(rep);
    CHECK(pslqkit_report_polynomial(rep) == nullptr);
    CHECK(std::string(pslqkit_report_outcome(rep)) == "not-found");
    pslqkit_report_free(rep);
}

TEST_CASE("c api identify") {
    pslqkit_report* rep = nullptr;
    auto st = pslqkit_identify("acos", "0.785398163397448", 2, 2, nullptr, &rep);
    REQUIRE(st == PSLQKIT_OK);
    CHECK(std::string(pslqkit_report_polynomial(rep)) == "2*x^2 - 1");
    pslqkit_report_free(rep);

    CHECK(pslqkit_identify("tanh", "0.5", 1, 2, nullptr, nullptr) ==
          PSLQKIT_ERR_INVALID_INPUT);
    CHECK(std::strlen(pslqkit_last_error()) > 0);
}

TEST_CASE("c api relation") {
    pslqkit_relation* rel = nullptr;
    auto st = pslqkit_find_relation("1,2", 3, nullptr, 0, nullptr, &rel);
    REQUIRE(st == PSLQKIT_OK);
    CHECK(std::string(pslqkit_relation_coefficients(rel)) == "(-2, 1)");
    CHECK(std::string(pslqkit_relation_outcome(rel)) == "found");
    pslqkit_relation_free(rel);

    rel = nullptr;
    st = pslqkit_find_relation("1,1.6180339887498948482", 1, "1e-15", 25, nullptr, &rel);
    CHECK(st == PSLQKIT_ERR_NOT_FOUND);
    REQUIRE(rel);
    CHECK(pslqkit_relation_coefficients(rel) == nullptr);
    CHECK(std::string(pslqkit_relation_outcome(rel)) == "no-relation-within-height");
    pslqkit_relation_free(rel);
}

TEST_CASE("c api factor") {
    pslqkit_factorization* fac = nullptr;
    auto st = pslqkit_factor("x^2 - 3*x + 2", nullptr, &fac);
    REQUIRE(st == PSLQKIT_OK);
    CHECK(std::string(pslqkit_factorization_content(fac)) == "1");
    CHECK(pslqkit_factorization_count(fac) == 2);
    CHECK(pslqkit_factorization_residual(fac) == nullptr);
    pslqkit_factorization_free(fac);

    CHECK(pslqkit_factor("not a poly @", nullptr, &fac) == PSLQKIT_ERR_INVALID_INPUT);
}

TEST_CASE("c api digits") {
    char eps[64];
    int digits = 0;
    REQUIRE(pslqkit_digits(7, 17, eps, sizeof(eps), &digits) == PSLQKIT_OK);
    CHECK(digits == 25);
    CHECK(std::strlen(eps) > 0);
}

TEST_CASE("c api null arguments") {
    CHECK(pslqkit_minpoly(nullptr, 2, 5, nullptr, nullptr) == PSLQKIT_ERR_INVALID_INPUT);
    CHECK(pslqkit_find_relation(nullptr, 3, nullptr, 0, nullptr, nullptr) ==
          PSLQKIT_ERR_INVALID_INPUT);
    CHECK(std::string(pslqkit_status_name(PSLQKIT_OK)) == "ok");
    CHECK(std::string(pslqkit_status_name(PSLQKIT_ERR_PRECISION)) == "precision-failure");
}
