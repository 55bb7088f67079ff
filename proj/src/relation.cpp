#include "relation.hpp"

#include <cmath>

namespace pslqkit {

IntegerRelation make_relation(std::vector<mpz_class> coefficients) {
    int last_nonzero = -1;
    for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
        if (coefficients[static_cast<std::size_t>(i)] != 0) {
            last_nonzero = i;
            break;
        }
    }
    if (last_nonzero < 0) throw ArithError("relation must be nonzero");
    if (coefficients[static_cast<std::size_t>(last_nonzero)] < 0)
        for (auto& c : coefficients) c = -c;

    IntegerRelation rel;
    mpz_class norm_sq = 0;
    for (const auto& c : coefficients) {
        mpz_class a = ::abs(c);
        if (a > rel.height) rel.height = a;
        norm_sq += c * c;
    }
    rel.euclidean_norm = std::sqrt(norm_sq.get_d());
    rel.coefficients = std::move(coefficients);
    return rel;
}

double lower_bound_norm(const HMatrix& H) {
    double max_diag = 0.0;
    for (int j = 0; j < H.cols(); ++j) {
        double d = std::fabs(H.at(j, j).to_double());
        if (d > max_diag) max_diag = d;
    }
    if (max_diag == 0.0) return 0.0;
    return 1.0 / max_diag;
}

long iteration_cap(int n, double gamma, double tau, double relation_norm_bound) {
    if (relation_norm_bound < 1.0) relation_norm_bound = 1.0;
    double pairs = 0.5 * n * (n - 1);
    double cap = pairs * ((n - 1) * std::log(gamma) + std::log(relation_norm_bound)) / std::log(tau);
    return static_cast<long>(std::ceil(cap));
}

namespace {

std::vector<mpz_class> column_of(const std::vector<std::vector<mpz_class>>& B, int j) {
    std::vector<mpz_class> col;
    col.reserve(B.size());
    for (const auto& row : B) col.push_back(row[static_cast<std::size_t>(j)]);
    return col;
}

BigReal dot_with(const std::vector<mpz_class>& m, const std::vector<BigReal>& x,
                 mpfr_prec_t prec) {
    BigReal acc(0L, prec);
    for (std::size_t i = 0; i < m.size(); ++i) acc += BigReal(m[i], prec) * x[i];
    return acc;
}

}  // namespace

RelationResult find_relation(const std::vector<BigReal>& x, const mpz_class& height_bound,
                             const BigReal& epsilon, const PrecisionContext& ctx,
                             const PslqOptions& opts) {
    int n = static_cast<int>(x.size());
    if (n < 2) throw ArithError("find_relation: dimension must be at least 2");
    if (height_bound < 1) throw ArithError("find_relation: height bound must be positive");
    if (!(epsilon > BigReal(0L, ctx.prec))) throw ArithError("find_relation: epsilon must be positive");

    RelationResult res;
    res.residual = BigReal(0L, ctx.prec);

    UnitizeOutcome u = unitize(x, ctx);
    if (u.zero_index) {
        // A zero coordinate is an immediate relation: the unit coordinate vector.
        std::vector<mpz_class> m(static_cast<std::size_t>(n), mpz_class(0));
        m[*u.zero_index] = 1;
        res.status = RelationStatus::Found;
        res.relation = make_relation(std::move(m));
        return res;
    }

    PslqState st = make_pslq_state(std::move(u.unit), ctx, opts.gamma, opts.tau);
    BigReal eps_scaled = epsilon / u.norm;
    BigReal zero_thr = ctx.zero_threshold();
    if (eps_scaled < zero_thr) eps_scaled = zero_thr;

    double norm_ceiling = std::sqrt(static_cast<double>(n)) * height_bound.get_d();
    long cap = opts.max_iterations > 0
                   ? opts.max_iterations
                   : iteration_cap(n, opts.gamma, opts.tau,
                                   std::sqrt(n + 1.0) * height_bound.get_d());

    hermite_reduce(st);
    if (opts.observer) opts.observer(st);

    auto finish_with = [&](std::vector<mpz_class> m) -> RelationResult {
        IntegerRelation rel = make_relation(std::move(m));
        res.iterations = st.iteration;
        res.lower_bound = lower_bound_norm(st.H);
        if (rel.height > height_bound) {
            res.status = RelationStatus::NoRelationWithinHeight;
            return res;
        }
        res.residual = abs(dot_with(rel.coefficients, x, ctx.prec));
        res.status = RelationStatus::Found;
        res.relation = std::move(rel);
        return res;
    };

    while (true) {
        res.lower_bound = lower_bound_norm(st.H);
        res.lower_bound_trace.push_back(res.lower_bound);
        res.iterations = st.iteration;

        // Detection case 1: some xbar entry has collapsed, the matching B
        // column is the relation. Wins over case 2 when both fire.
        int collapsed = -1;
        for (int j = 0; j < n; ++j) {
            if (abs(st.xbar[static_cast<std::size_t>(j)]) < eps_scaled) {
                collapsed = j;
                break;
            }
        }
        if (collapsed >= 0) return finish_with(column_of(st.B, collapsed));

        // Detection case 2: a diagonal entry of H fell below the threshold.
        BigReal min_diag = abs(st.H.at(0, 0));
        for (int j = 1; j < n - 1; ++j) {
            BigReal d = abs(st.H.at(j, j));
            if (d < min_diag) min_diag = d;
        }
        if (min_diag < eps_scaled) return finish_with(column_of(st.B, n - 2));

        // Every height-bounded relation has norm at most sqrt(n) * N; once the
        // lower bound passes that, none exists.
        if (res.lower_bound > norm_ceiling) {
            res.status = RelationStatus::NoRelationWithinHeight;
            return res;
        }
        if (st.iteration >= cap) {
            res.status = RelationStatus::IterationCapReached;
            return res;
        }

        ++st.iteration;
        int r = select_pivot(st);
        swap_and_rotate(st, r);
        hermite_reduce(st);
        if (opts.observer) opts.observer(st);
    }
}

}  // namespace pslqkit
