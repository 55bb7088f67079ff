#include "identify.hpp"

#include <cmath>

namespace pslqkit {

ReconstructionReport identify_form(const TranscendentalForm& form, const PslqOptions& opts) {
    int n = form.degree_bound;
    int N = form.height_bound;
    if (n < 1 || N < 1) throw ArithError("identify: degree and height bounds must be positive");

    double beta_d = form.beta_approx.get_d();
    const double slack = 1e-6;
    switch (form.kind) {
        case FormKind::Arcsin:
            if (std::fabs(beta_d) > M_PI_2 + slack)
                throw ArithError("identify: arcsin value outside [-pi/2, pi/2]");
            break;
        case FormKind::Arccos:
            if (beta_d < -slack || beta_d > M_PI + slack)
                throw ArithError("identify: arccos value outside [0, pi]");
            break;
        case FormKind::Log:
            break;
    }

    // sin and cos are 1-Lipschitz, so the beta budget carries over to alpha
    // unchanged. exp is only exp(beta)-Lipschitz on the relevant interval, so
    // the budget shrinks by that factor; extra digits compensate.
    int extra = 8;
    if (form.kind == FormKind::Log && beta_d > -1.0)
        extra += static_cast<int>(std::ceil((std::ceil(beta_d) + 1.0) * 0.4342944819032518));

    int digits = digits_required(n, N) + extra + 10;
    PrecisionContext ctx = make_context(std::max(digits, 10) + 10, 10);

    BigReal beta(form.beta_approx, ctx.prec);
    BigReal alpha(ctx.prec);
    switch (form.kind) {
        case FormKind::Arcsin: alpha = sin(beta); break;
        case FormKind::Arccos: alpha = cos(beta); break;
        case FormKind::Log:    alpha = exp(beta); break;
    }

    return reconstruct(alpha.to_rational(), n, N, opts);
}

}  // namespace pslqkit
