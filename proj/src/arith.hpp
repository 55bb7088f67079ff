#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pslqkit {

class ArithError : public std::runtime_error {
public:
    explicit ArithError(const std::string& msg) : std::runtime_error(msg) {}
};

// Binary precision that carries `digits` significant decimal digits with room
// to spare for correctly rounded results.
mpfr_prec_t bits_for_digits(int digits);

// Extended-precision real scalar. Every value carries its own mpfr precision;
// binary operations widen to the larger operand precision.
class BigReal {
public:
    BigReal() {
        mpfr_init2(v_, 64);
        mpfr_set_zero(v_, 1);
    }
    explicit BigReal(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigReal(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigReal(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    BigReal(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigReal(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact conversion of the stored binary value to a rational.
    mpq_class to_rational() const;

    // Decimal rendering with `digits` significant digits.
    std::string str(int digits) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    BigReal& operator+=(const BigReal& b) { *this = *this + b; return *this; }
    BigReal& operator-=(const BigReal& b) { *this = *this - b; return *this; }
    BigReal& operator*=(const BigReal& b) { *this = *this * b; return *this; }
    BigReal& operator/=(const BigReal& b) { *this = *this / b; return *this; }

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal log10(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal asin(const BigReal& a);
BigReal acos(const BigReal& a);
BigReal floor(const BigReal& a);
BigReal pow_si(const BigReal& a, long e);
BigReal const_pi(mpfr_prec_t prec);
// 10^e at the given precision.
BigReal pow10(long e, mpfr_prec_t prec);

// nint(t) = floor(t + 1/2); halves round up.
mpz_class nint(const BigReal& t);

struct PrecisionContext {
    int decimal_digits = 0;
    int guard_digits = 0;
    mpfr_prec_t prec = 64;

    // 10^-(decimal_digits - guard_digits); values below it count as zero.
    BigReal zero_threshold() const {
        return pow10(-(static_cast<long>(decimal_digits) - guard_digits), prec);
    }
};

// decimal_digits must be at least 10; anything coarser cannot support a
// reconstruction task.
PrecisionContext make_context(int decimal_digits, int guard_digits);

// Exact value of a decimal literal (optional sign, fraction, exponent).
// No binary rounding is involved.
mpq_class parse_decimal(const std::string& text);

// Decimal rendering of a rational: exact when the expansion terminates within
// max_digits fractional digits, correctly rounded otherwise.
std::string format_decimal(const mpq_class& q, int max_digits);

}  // namespace pslqkit
