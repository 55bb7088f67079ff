#include "minpoly.hpp"

#include <cmath>

namespace pslqkit {

BigReal epsilon_bound(int n, int N, mpfr_prec_t prec) {
    if (n < 1 || N < 1) throw ArithError("epsilon_bound: n and N must be positive");
    // 1 / (n^2 (n+1)^(n-1/2) N^(2n)) = sqrt(n+1) / (n^2 (n+1)^n N^(2n)).
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n + 1),
                  static_cast<unsigned long>(n));
    denom *= mpz_class(n) * mpz_class(n);
    mpz_class npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(N),
                  static_cast<unsigned long>(2 * n));
    denom *= npow;
    return sqrt(BigReal(static_cast<long>(n + 1), prec)) / BigReal(denom, prec);
}

int digits_required(int n, int N) {
    BigReal eps = epsilon_bound(n, N, 256);
    BigReal d = -log10(eps);
    mpfr_t c;
    mpfr_init2(c, 256);
    mpfr_ceil(c, d.raw());
    long out = mpfr_get_si(c, MPFR_RNDN);
    mpfr_clear(c);
    return static_cast<int>(out);
}

std::vector<BigReal> power_vector(const mpq_class& approx, int n, const PrecisionContext& ctx) {
    if (n < 1) throw ArithError("power_vector: n must be positive");
    std::vector<BigReal> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    mpq_class pw = 1;
    v.emplace_back(1L, ctx.prec);
    for (int i = 1; i <= n; ++i) {
        pw *= approx;
        v.emplace_back(pw, ctx.prec);
    }
    return v;
}

namespace {

// Extra decimal digits needed because |approx|^d grows past 1.
int magnitude_digits(const mpq_class& approx, int d) {
    double a = std::fabs(approx.get_d());
    if (a <= 1.0) return 0;
    return static_cast<int>(std::ceil(d * std::log10(a))) + 1;
}

}  // namespace

ReconstructionReport reconstruct_range(const mpq_class& approx, int dmin, int dmax, int N,
                                       const PslqOptions& opts) {
    if (dmin < 1 || dmax < dmin) throw ArithError("reconstruct: bad degree range");
    if (N < 1) throw ArithError("reconstruct: height bound must be positive");

    ReconstructionReport rep;
    rep.handle.approx = approx;
    rep.handle.degree_bound = dmax;
    rep.handle.height_bound = N;
    bool cert_failed = false;

    // The input accuracy contract: |alpha - approx| < epsilon_bound(dmax, N).
    // Every trial degree works against that budget and at that precision.
    int base_digits = digits_required(dmax, N) + magnitude_digits(approx, dmax);
    int guard = std::max(10, 2 * dmax);
    PrecisionContext ctx = make_context(base_digits + guard, guard);
    BigReal delta = epsilon_bound(dmax, N, ctx.prec);
    BigReal amp(std::max(mpq_class(::abs(approx)), mpq_class(1)), ctx.prec);

    for (int d = dmin; d <= dmax; ++d) {
        // Bound on max_i |alpha^i - approx^i| given |alpha - approx| < delta,
        // with a factor-2 cushion.
        BigReal eps_pow = BigReal(2L * d, ctx.prec) * pow_si(amp, d - 1) * delta;
        BigReal resid_budget = eps_pow * BigReal(static_cast<long>(d), ctx.prec) *
                               BigReal(static_cast<long>(N), ctx.prec);

        std::vector<BigReal> v = power_vector(approx, d, ctx);

        PslqOptions local = opts;
        if (local.max_iterations == 0)
            local.max_iterations =
                iteration_cap(d + 1, local.gamma, local.tau, std::sqrt(d + 2.0) * N);

        RelationResult rr = find_relation(v, mpz_class(N), resid_budget, ctx, local);
        rep.iterations += rr.iterations;
        rep.per_degree_iterations.emplace_back(d, rr.iterations);
        for (double b : rr.lower_bound_trace) rep.lower_bound_trace.push_back(b);
        if (rr.lower_bound > rep.best_lower_bound) rep.best_lower_bound = rr.lower_bound;

        rep.epsilon = delta;
        rep.digits_used = ctx.decimal_digits;

        if (rr.status != RelationStatus::Found) continue;

        IntPolynomial g(rr.relation->coefficients);
        if (g.is_zero()) continue;
        g = g.primitive_part();
        if (g.leading() < 0) g = -g;

        // Certify the residual budget exactly at the actual degree and height.
        int dg = g.degree();
        if (dg < 1) continue;
        BigReal eps_pow_g = BigReal(2L * dg, ctx.prec) * pow_si(amp, dg - 1) * delta;
        BigReal budget = eps_pow_g * BigReal(static_cast<long>(dg), ctx.prec) *
                         BigReal(g.height(), ctx.prec);
        mpq_class value = g.evaluate(approx);
        BigReal value_abs = abs(BigReal(value, ctx.prec));
        if (value_abs > budget) {
            cert_failed = true;
            continue;
        }

        rep.status = ReconstructionStatus::Found;
        rep.handle.minimal_poly = std::move(g);
        return rep;
    }

    rep.status = cert_failed ? ReconstructionStatus::CertificationFailed
                             : ReconstructionStatus::NotFound;
    return rep;
}

ReconstructionReport reconstruct(const mpq_class& approx, int n, int N,
                                 const PslqOptions& opts) {
    return reconstruct_range(approx, 1, n, N, opts);
}

}  // namespace pslqkit
