#include "arith.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

namespace pslqkit {

mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) digits = 1;
    const double log2_10 = 3.321928094887362;
    return static_cast<mpfr_prec_t>(std::ceil(digits * log2_10)) + 32;
}

mpq_class BigReal::to_rational() const {
    if (mpfr_zero_p(v_)) return mpq_class(0);
    if (!mpfr_number_p(v_)) throw ArithError("cannot convert non-finite value to rational");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v_);
    mpq_class out(q);
    mpq_clear(q);
    return out;
}

std::string BigReal::str(int digits) const {
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {
mpfr_prec_t join_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

#define PSLQKIT_UNARY(name, fn)                  \
    BigReal name(const BigReal& a) {             \
        BigReal r(a.prec());                     \
        fn(r.raw(), a.raw(), MPFR_RNDN);         \
        return r;                                \
    }

PSLQKIT_UNARY(abs, mpfr_abs)
PSLQKIT_UNARY(sqrt, mpfr_sqrt)
PSLQKIT_UNARY(exp, mpfr_exp)
PSLQKIT_UNARY(log, mpfr_log)
PSLQKIT_UNARY(log10, mpfr_log10)
PSLQKIT_UNARY(sin, mpfr_sin)
PSLQKIT_UNARY(cos, mpfr_cos)
PSLQKIT_UNARY(asin, mpfr_asin)
PSLQKIT_UNARY(acos, mpfr_acos)

#undef PSLQKIT_UNARY

BigReal floor(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

BigReal pow_si(const BigReal& a, long e) {
    BigReal r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigReal const_pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal pow10(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

mpz_class nint(const BigReal& t) {
    BigReal u(t.prec() + 8);
    mpfr_set(u.raw(), t.raw(), MPFR_RNDN);
    mpfr_add_d(u.raw(), u.raw(), 0.5, MPFR_RNDN);
    mpfr_floor(u.raw(), u.raw());
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), u.raw(), MPFR_RNDN);
    return z;
}

PrecisionContext make_context(int decimal_digits, int guard_digits) {
    if (decimal_digits < 10)
        throw ArithError("decimal_digits must be at least 10");
    if (guard_digits < 0)
        throw ArithError("guard_digits must be non-negative");
    PrecisionContext ctx;
    ctx.decimal_digits = decimal_digits;
    ctx.guard_digits = guard_digits;
    ctx.prec = bits_for_digits(decimal_digits);
    return ctx;
}

mpq_class parse_decimal(const std::string& text) {
    const char* s = text.c_str();
    std::size_t i = 0, n = text.size();
    auto fail = [&]() -> void { throw ArithError("malformed decimal literal: '" + text + "'"); };

    bool neg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

    std::string int_part, frac_part;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) int_part.push_back(s[i++]);
    if (i < n && s[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part.push_back(s[i++]);
    }
    if (int_part.empty() && frac_part.empty()) fail();

    long exponent = 0;
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        if (digits.size() > 9) fail();
        exponent = std::stol(digits);
        if (eneg) exponent = -exponent;
    }
    if (i != n) fail();

    mpz_class mantissa(int_part.empty() ? std::string("0") + frac_part
                                        : int_part + frac_part,
                       10);
    long shift = exponent - static_cast<long>(frac_part.size());

    mpq_class q(mantissa);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    if (shift >= 0)
        q *= mpq_class(p10);
    else
        q /= mpq_class(p10);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string format_decimal(const mpq_class& q, int max_digits) {
    if (q == 0) return "0";
    mpq_class a = q;
    bool neg = a < 0;
    if (neg) a = -a;

    // Strip factors of 2 and 5 from the denominator to detect a finite
    // expansion.
    mpz_class den = a.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
        ++fives;
    }
    unsigned long frac_digits = std::max(twos, fives);
    if (den == 1 && frac_digits <= static_cast<unsigned long>(max_digits)) {
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, frac_digits);
        mpz_class scaled = a.get_num() * p10 / a.get_den();
        std::string digits = scaled.get_str();
        std::string out;
        if (digits.size() <= frac_digits)
            out = "0." + std::string(frac_digits - digits.size(), '0') + digits;
        else if (frac_digits == 0)
            out = digits;
        else
            out = digits.substr(0, digits.size() - frac_digits) + "." +
                  digits.substr(digits.size() - frac_digits);
        return neg ? "-" + out : out;
    }
    BigReal r(q, bits_for_digits(max_digits + 2));
    return r.str(max_digits);
}

}  // namespace pslqkit
