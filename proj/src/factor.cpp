#include "factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pslqkit {

namespace {

// Primitive gcd over Z via rational Euclid; good enough for the degrees in
// scope.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpq_class> u(a.coeffs().begin(), a.coeffs().end());
    std::vector<mpq_class> v(b.coeffs().begin(), b.coeffs().end());
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        // u mod v
        while (u.size() >= v.size() && !u.empty()) {
            mpq_class q = u.back() / v.back();
            std::size_t shift = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= q * v[i];
            u.pop_back();
            trim(u);
        }
        std::swap(u, v);
    }
    if (u.empty()) return IntPolynomial();
    // Clear denominators and take the primitive part.
    mpz_class den = 1;
    for (const auto& c : u) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> zc;
    zc.reserve(u.size());
    for (const auto& c : u) zc.push_back(c.get_num() * (den / c.get_den()));
    IntPolynomial g = IntPolynomial(std::move(zc)).primitive_part();
    if (g.leading() < 0) g = -g;
    return g;
}

// Does g vanish at the root isolated by iv? Endpoints are never roots of the
// ambient squarefree polynomial, so an exact sign change decides it.
bool factor_owns_root(const IntPolynomial& g, const RootInterval& iv) {
    if (iv.exact) return g.evaluate(iv.exact_value) == 0;
    return sgn(g.evaluate(iv.lo)) * sgn(g.evaluate(iv.hi)) < 0;
}

long height_bound_as_long(const mpz_class& b) {
    if (!b.fits_slong_p() || b.get_si() > (1L << 30))
        throw ArithError("factor: Landau-Mignotte height bound too large for reconstruction");
    return b.get_si();
}

}  // namespace

IntPolynomial FactorizationResult::reassemble() const {
    IntPolynomial acc(std::vector<mpz_class>{content});
    for (const auto& [f, mult] : factors)
        for (int k = 0; k < mult; ++k) acc = acc * f;
    if (residual) acc = acc * *residual;
    return acc;
}

FactorizationResult factor_primitive(const IntPolynomial& p, const PslqOptions& opts) {
    if (p.is_zero()) throw ArithError("factor: zero polynomial");

    FactorizationResult result;
    result.content = p.content();
    IntPolynomial pp = p.primitive_part();
    int sign = pp.leading() < 0 ? -1 : 1;
    if (sign < 0) pp = -pp;

    if (pp.degree() < 1) {
        if (sign < 0) result.residual = IntPolynomial(std::vector<mpz_class>{mpz_class(-1)});
        return result;
    }

    // Squarefree part; multiplicities are recovered afterwards by repeated
    // division.
    IntPolynomial sf = pp;
    IntPolynomial g = poly_gcd(pp, pp.derivative());
    if (g.degree() >= 1) sf = pp.divide_exact(g).primitive_part();
    if (sf.leading() < 0) sf = -sf;

    auto intervals = isolate_real_roots(sf);
    // Tighten for ordering and ownership tests.
    mpq_class coarse = mpq_class(1) / mpq_class(mpz_class(1) << 64);
    for (auto& iv : intervals) refine_root(sf, iv, coarse);
    std::sort(intervals.begin(), intervals.end(), [&](const RootInterval& a, const RootInterval& b) {
        mpq_class qa = a.exact ? a.exact_value : mpq_class((a.lo + a.hi) / 2);
        mpq_class qb = b.exact ? b.exact_value : mpq_class((b.lo + b.hi) / 2);
        double ma = std::fabs(qa.get_d());
        double mb = std::fabs(qb.get_d());
        return ma > mb;
    });

    IntPolynomial work = sf;
    std::vector<IntPolynomial> found;

    for (auto& iv : intervals) {
        if (work.degree() < 1) break;
        if (!factor_owns_root(work, iv)) continue;  // already divided out

        bool accepted = false;
        for (int d = 1; d <= work.degree() && !accepted; ++d) {
            long Nd = height_bound_as_long(landau_mignotte_height_bound(work, d));
            int N = static_cast<int>(std::min<long>(Nd, std::numeric_limits<int>::max()));

            // Refine the root below the reconstruction error budget
            // 1/(d^2 (d+1)^(d-1/2) N^(2d)) > 1/(2 D) with D the integer part
            // of the denominator.
            mpz_class D;
            mpz_ui_pow_ui(D.get_mpz_t(), static_cast<unsigned long>(d + 1),
                          static_cast<unsigned long>(d));
            D *= mpz_class(d) * mpz_class(d);
            mpz_class np;
            mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(N),
                          static_cast<unsigned long>(2 * d));
            D *= np;
            mpq_class width = mpq_class(1) / mpq_class(2 * D);
            mpq_class approx = refine_root(sf, iv, width);

            ReconstructionReport rep = reconstruct_range(approx, d, d, N, opts);
            if (rep.status != ReconstructionStatus::Found) continue;
            try {
                IntPolynomial quotient = work.divide_exact(*rep.handle.minimal_poly);
                found.push_back(*rep.handle.minimal_poly);
                work = quotient;
                accepted = true;
            } catch (const NotAFactorError&) {
                // Misidentified root; keep searching higher degrees.
            }
        }
    }

    // Multiplicities against the full primitive polynomial.
    IntPolynomial remaining = pp;
    for (const auto& f : found) {
        int mult = 0;
        while (true) {
            try {
                IntPolynomial next = remaining.divide_exact(f);
                remaining = next;
                ++mult;
            } catch (const NotAFactorError&) {
                break;
            }
        }
        result.factors.emplace_back(f, mult);
    }

    if (remaining.degree() >= 1) {
        result.residual = sign < 0 ? -remaining : remaining;
    } else if (sign < 0) {
        result.residual = IntPolynomial(std::vector<mpz_class>{mpz_class(-1)});
    }
    return result;
}

}  // namespace pslqkit
