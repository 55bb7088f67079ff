#pragma once

#include "minpoly.hpp"

namespace pslqkit {

enum class FormKind { Arcsin, Arccos, Log };

// beta_approx approximates f^-1(alpha) for an unknown algebraic alpha with
// degree bound n and height bound N; f is sin, cos or exp accordingly.
struct TranscendentalForm {
    FormKind kind = FormKind::Arcsin;
    mpq_class beta_approx;
    int degree_bound = 0;
    int height_bound = 0;
};

// Maps beta back through the forward function at working precision and
// reconstructs the minimal polynomial of alpha.
ReconstructionReport identify_form(const TranscendentalForm& form,
                                   const PslqOptions& opts = {});

}  // namespace pslqkit
