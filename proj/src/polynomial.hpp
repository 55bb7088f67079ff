#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace pslqkit {

class NotAFactorError : public std::runtime_error {
public:
    explicit NotAFactorError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense univariate polynomial over Z. Coefficient index equals the power;
// the leading (last) coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    // Accepts "x^4 - 10*x^2 + 1" style text, '*' optional, any term order.
    static IntPolynomial from_text(const std::string& text);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return mpz_class(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const mpz_class& leading() const { return c_.back(); }

    mpz_class height() const;          // L-infinity norm of the coefficients
    mpz_class length_squared() const;  // squared Euclidean length
    BigReal length(mpfr_prec_t prec) const;

    mpz_class content() const;  // gcd of the coefficients, positive; error on zero
    IntPolynomial primitive_part() const;

    BigReal evaluate(const BigReal& t) const;
    mpq_class evaluate(const mpq_class& t) const;

    IntPolynomial derivative() const;

    // Exact quotient; throws NotAFactorError unless d divides *this over Z.
    IntPolynomial divide_exact(const IntPolynomial& d) const;

    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    // Descending-order rendering, e.g. "x^2 - 8*x - 47".
    std::string to_text() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// Height bound ceil(2^m * |p|) valid for any integer factor of p with degree
// at most m; p must be primitive.
mpz_class landau_mignotte_height_bound(const IntPolynomial& p, int m);

}  // namespace pslqkit
