#include "polynomial.hpp"

#include <cctype>
#include <sstream>

namespace pslqkit {

mpz_class IntPolynomial::height() const {
    mpz_class h = 0;
    for (const auto& c : c_) {
        mpz_class a = ::abs(c);
        if (a > h) h = a;
    }
    return h;
}

mpz_class IntPolynomial::length_squared() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += c * c;
    return s;
}

BigReal IntPolynomial::length(mpfr_prec_t prec) const {
    return sqrt(BigReal(length_squared(), prec));
}

mpz_class IntPolynomial::content() const {
    if (is_zero()) throw ArithError("content of the zero polynomial is undefined");
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    mpz_class g = content();
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

BigReal IntPolynomial::evaluate(const BigReal& t) const {
    BigReal acc(0L, t.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + BigReal(*it, t.prec());
    return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return IntPolynomial();
    std::vector<mpz_class> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw NotAFactorError("division by the zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (d.degree() > degree()) throw NotAFactorError("divisor degree exceeds dividend degree");

    // Long division over Q, then an integrality check on the quotient.
    std::vector<mpq_class> rem(c_.begin(), c_.end());
    int dd = d.degree();
    int qd = degree() - dd;
    std::vector<mpq_class> quot(static_cast<std::size_t>(qd) + 1);
    mpq_class lead(d.leading());
    for (int k = qd; k >= 0; --k) {
        mpq_class q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * mpq_class(d.coeff(i));
    }
    for (const auto& r : rem)
        if (r != 0) throw NotAFactorError("nonzero remainder");
    std::vector<mpz_class> out;
    out.reserve(quot.size());
    for (const auto& q : quot) {
        if (q.get_den() != 1) throw NotAFactorError("non-integer quotient coefficient");
        out.push_back(q.get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = ::abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPolynomial IntPolynomial::from_text(const std::string& text) {
    auto fail = [&](const std::string& why) -> void {
        throw ArithError("malformed polynomial '" + text + "': " + why);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail("empty input");

    std::vector<mpz_class> coeffs;
    auto add_term = [&](const mpz_class& c, long p) {
        if (p < 0 || p > 100000) fail("power out of range");
        if (coeffs.size() <= static_cast<std::size_t>(p))
            coeffs.resize(static_cast<std::size_t>(p) + 1, mpz_class(0));
        coeffs[static_cast<std::size_t>(p)] += c;
    };

    std::size_t i = 0, n = s.size();
    while (i < n) {
        int sign = 1;
        while (i < n && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= n) fail("dangling sign");
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        bool have_coeff = !digits.empty();
        if (i < n && s[i] == '*') {
            if (!have_coeff) fail("'*' without coefficient");
            ++i;
            if (i >= n || (s[i] != 'x' && s[i] != 'X')) fail("expected x after '*'");
        }
        long power = 0;
        bool have_var = false;
        if (i < n && (s[i] == 'x' || s[i] == 'X')) {
            have_var = true;
            power = 1;
            ++i;
            if (i < n && s[i] == '^') {
                ++i;
                std::string pd;
                while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) pd.push_back(s[i++]);
                if (pd.empty()) fail("missing exponent");
                power = std::stol(pd);
            }
        }
        if (!have_coeff && !have_var) fail("empty term");
        mpz_class c = have_coeff ? mpz_class(digits, 10) : mpz_class(1);
        if (sign < 0) c = -c;
        add_term(c, power);
        if (i < n && s[i] != '+' && s[i] != '-') fail("unexpected character");
    }
    return IntPolynomial(std::move(coeffs));
}

mpz_class landau_mignotte_height_bound(const IntPolynomial& p, int m) {
    if (p.is_zero()) throw ArithError("height bound of the zero polynomial is undefined");
    if (m < 0) throw ArithError("factor degree bound must be non-negative");
    // ceil(2^m * |p|) computed exactly: smallest k with k^2 >= 4^m * |p|^2.
    mpz_class s = p.length_squared();
    mpz_class scaled;
    mpz_ui_pow_ui(scaled.get_mpz_t(), 4, static_cast<unsigned long>(m));
    scaled *= s;
    mpz_class k;
    mpz_sqrt(k.get_mpz_t(), scaled.get_mpz_t());
    if (k * k < scaled) k += 1;
    return k;
}

}  // namespace pslqkit
