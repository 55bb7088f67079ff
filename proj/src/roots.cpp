#include "roots.hpp"

#include <algorithm>
#include <deque>

namespace pslqkit {

namespace {

using QPoly = std::vector<mpq_class>;  // dense, index = power

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qfrom(const IntPolynomial& p) {
    QPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

mpq_class qeval(const QPoly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

QPoly qderiv(const QPoly& p) {
    QPoly out;
    if (p.size() < 2) return out;
    out.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    return out;
}

QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
    std::vector<QPoly> chain;
    chain.push_back(qfrom(p));
    chain.push_back(qderiv(chain[0]));
    qtrim(chain[0]);
    qtrim(chain[1]);
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<QPoly>& chain, const mpq_class& t) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(qeval(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// A point near `want` in (lo, hi) where p does not vanish.
mpq_class nonroot_point(const QPoly& p, const mpq_class& lo, const mpq_class& hi,
                        const mpq_class& want) {
    if (qeval(p, want) != 0) return want;
    for (long k = 3;; k += 2) {
        mpq_class cand = want + (hi - want) / k;
        if (cand > lo && cand < hi && qeval(p, cand) != 0) return cand;
    }
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;

    auto chain = sturm_chain(p);
    QPoly pq = qfrom(p);

    // Cauchy bound: every root lies strictly inside (-B, B).
    mpq_class bound = 1 + mpq_class(p.height()) / mpq_class(::abs(p.leading()));

    struct Seg {
        mpq_class lo, hi;
        int vlo, vhi;
    };
    std::deque<Seg> work;
    work.push_back({-bound, bound, variations(chain, -bound), variations(chain, bound)});

    while (!work.empty()) {
        Seg seg = work.front();
        work.pop_front();
        int count = seg.vlo - seg.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            RootInterval iv;
            iv.lo = seg.lo;
            iv.hi = seg.hi;
            out.push_back(std::move(iv));
            continue;
        }
        mpq_class mid = nonroot_point(pq, seg.lo, seg.hi, (seg.lo + seg.hi) / 2);
        int vmid = variations(chain, mid);
        work.push_back({seg.lo, mid, seg.vlo, vmid});
        work.push_back({mid, seg.hi, vmid, seg.vhi});
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

mpq_class refine_root(const IntPolynomial& p, RootInterval& iv, const mpq_class& width) {
    if (iv.exact) return iv.exact_value;

    IntPolynomial dp = p.derivative();

    // Precision sized to the target width.
    mpq_class w = width;
    if (w <= 0) throw ArithError("refine_root: width must be positive");
    long bits = static_cast<long>(mpz_sizeinbase(w.get_den().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(w.get_num().get_mpz_t(), 2)) + 96;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(bits, 128L));

    int slo = sgn(p.evaluate(iv.lo));
    if (slo == 0) {
        iv.exact = true;
        iv.exact_value = iv.lo;
        return iv.lo;
    }
    if (sgn(p.evaluate(iv.hi)) == 0) {
        iv.exact = true;
        iv.exact_value = iv.hi;
        return iv.hi;
    }

    bool newton_turn = false;
    while (iv.hi - iv.lo >= width) {
        mpq_class split = (iv.lo + iv.hi) / 2;
        if (newton_turn) {
            BigReal x((iv.lo + iv.hi) / 2, prec);
            BigReal d = dp.evaluate(x);
            if (!d.is_zero()) {
                BigReal cand = x - p.evaluate(x) / d;
                mpq_class cq = cand.to_rational();
                if (cq > iv.lo && cq < iv.hi) split = cq;
            }
        }
        newton_turn = !newton_turn;
        int smid = sgn(p.evaluate(split));
        if (smid == 0) {
            iv.exact = true;
            iv.exact_value = split;
            return split;
        }
        if (smid == slo)
            iv.lo = split;
        else
            iv.hi = split;
    }
    return (iv.lo + iv.hi) / 2;
}

std::vector<BigReal> real_roots(const IntPolynomial& p, const PrecisionContext& ctx) {
    std::vector<BigReal> out;
    auto intervals = isolate_real_roots(p);
    mpq_class width =
        mpq_class(1) / mpq_class(mpz_class(1) << (4 * (ctx.decimal_digits - ctx.guard_digits)));
    // 2^-4k < 10^-k, comfortably below the context threshold.
    for (auto& iv : intervals) {
        mpq_class r = refine_root(p, iv, width);
        out.emplace_back(r, ctx.prec);
    }
    return out;
}

}  // namespace pslqkit
