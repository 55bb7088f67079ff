#include "oracle.hpp"

#include <cmath>

namespace pslqkit {

namespace {

double space_size(long width, int slots) {
    return std::pow(static_cast<double>(width), slots);
}

bool lex_less(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::optional<IntegerRelation> brute_force_min_relation(const std::vector<BigReal>& x,
                                                        long height_cap,
                                                        const BigReal& tolerance) {
    int n = static_cast<int>(x.size());
    if (n < 2) throw ArithError("oracle: dimension must be at least 2");
    if (height_cap < 1) throw ArithError("oracle: height cap must be positive");
    if (space_size(2 * height_cap + 1, n) > 1e8)
        throw ArithError("oracle: search space too large");

    mpfr_prec_t prec = x[0].prec();
    std::vector<long> a(static_cast<std::size_t>(n), 0);
    std::optional<std::vector<mpz_class>> best;
    long best_norm_sq = 0;

    // Depth-first odometer with running partial dot products.
    std::vector<BigReal> partial(static_cast<std::size_t>(n) + 1, BigReal(0L, prec));
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            long norm_sq = 0;
            bool nonzero = false;
            for (long c : a) {
                norm_sq += c * c;
                if (c != 0) nonzero = true;
            }
            if (!nonzero) return;
            if (!(abs(partial[static_cast<std::size_t>(n)]) < tolerance)) return;
            std::vector<mpz_class> cand(a.begin(), a.end());
            cand = make_relation(std::move(cand)).coefficients;
            if (!best || norm_sq < best_norm_sq ||
                (norm_sq == best_norm_sq && lex_less(cand, *best))) {
                best = std::move(cand);
                best_norm_sq = norm_sq;
            }
            return;
        }
        for (long c = -height_cap; c <= height_cap; ++c) {
            a[static_cast<std::size_t>(idx)] = c;
            partial[static_cast<std::size_t>(idx) + 1] =
                partial[static_cast<std::size_t>(idx)] + BigReal(c, prec) * x[static_cast<std::size_t>(idx)];
            self(self, idx + 1);
        }
    };
    rec(rec, 0);

    if (!best) return std::nullopt;
    return make_relation(std::move(*best));
}

std::optional<IntPolynomial> brute_force_minpoly(const mpq_class& alpha_approx,
                                                 int degree_cap, long height_cap,
                                                 const mpq_class& tolerance) {
    if (degree_cap < 1 || height_cap < 1) throw ArithError("oracle: bad caps");

    for (int d = 1; d <= degree_cap; ++d) {
        if (space_size(2 * height_cap + 1, d + 1) > 1e8)
            throw ArithError("oracle: search space too large");
        for (long h = 1; h <= height_cap; ++h) {
            std::vector<long> c(static_cast<std::size_t>(d) + 1, 0);
            std::optional<std::vector<mpz_class>> best;

            auto rec = [&](auto&& self, int idx) -> void {
                if (idx == d + 1) {
                    if (c[static_cast<std::size_t>(d)] == 0) return;
                    long maxabs = 0;
                    for (long v : c) maxabs = std::max(maxabs, std::labs(v));
                    if (maxabs != h) return;  // lower heights already covered
                    std::vector<mpz_class> zc(c.begin(), c.end());
                    IntPolynomial p{std::vector<mpz_class>(zc)};
                    if (p.content() != 1) return;
                    mpq_class val = p.evaluate(alpha_approx);
                    if (::abs(val) >= tolerance) return;
                    if (p.leading() < 0) {
                        p = -p;
                        zc = p.coeffs();
                    }
                    if (!best || lex_less(zc, *best)) best = std::move(zc);
                    return;
                }
                for (long v = -h; v <= h; ++v) {
                    c[static_cast<std::size_t>(idx)] = v;
                    self(self, idx + 1);
                }
            };
            rec(rec, 0);
            if (best) return IntPolynomial(std::move(*best));
        }
    }
    return std::nullopt;
}

}  // namespace pslqkit
