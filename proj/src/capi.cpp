#include "pslqkit.h"

#include <cstring>
#include <string>
#include <vector>

#include "factor.hpp"
#include "identify.hpp"
#include "minpoly.hpp"

namespace {

thread_local std::string g_last_error;

pslqkit_status set_error(pslqkit_status status, const std::string& msg) {
    g_last_error = msg;
    return status;
}

pslqkit::PslqOptions to_options(const pslqkit_options* opts) {
    pslqkit::PslqOptions out;
    if (opts) {
        if (opts->gamma != 0.0) out.gamma = opts->gamma;
        if (opts->tau != 0.0) out.tau = opts->tau;
        if (opts->max_iterations > 0) out.max_iterations = opts->max_iterations;
    }
    return out;
}

const char* outcome_name(pslqkit::ReconstructionStatus s) {
    switch (s) {
        case pslqkit::ReconstructionStatus::Found: return "found";
        case pslqkit::ReconstructionStatus::NotFound: return "not-found";
        case pslqkit::ReconstructionStatus::CertificationFailed: return "certification-failed";
    }
    return "unknown";
}

}  // namespace

struct pslqkit_report {
    std::string polynomial;
    bool has_polynomial = false;
    std::string epsilon;
    std::string outcome;
    int digits = 0;
    long iterations = 0;
    double lower_bound = 0.0;
};

struct pslqkit_relation {
    std::string coefficients;
    std::string outcome;
    bool found = false;
    double norm = 0.0;
    double lower_bound = 0.0;
    long iterations = 0;
};

struct pslqkit_factorization {
    std::string content;
    std::vector<std::pair<std::string, int>> factors;
    std::string residual;
    bool has_residual = false;
};

static pslqkit_report* report_from(const pslqkit::ReconstructionReport& rep) {
    auto* out = new pslqkit_report();
    if (rep.handle.minimal_poly) {
        out->polynomial = rep.handle.minimal_poly->to_text();
        out->has_polynomial = true;
    }
    out->epsilon = rep.epsilon.str(6);
    out->outcome = outcome_name(rep.status);
    out->digits = rep.digits_used;
    out->iterations = rep.iterations;
    out->lower_bound = rep.best_lower_bound;
    return out;
}

static pslqkit_status status_from(pslqkit::ReconstructionStatus s) {
    switch (s) {
        case pslqkit::ReconstructionStatus::Found: return PSLQKIT_OK;
        case pslqkit::ReconstructionStatus::NotFound: return PSLQKIT_ERR_NOT_FOUND;
        case pslqkit::ReconstructionStatus::CertificationFailed: return PSLQKIT_ERR_PRECISION;
    }
    return PSLQKIT_ERR_INTERNAL;
}

extern "C" {

const char* pslqkit_status_name(pslqkit_status status) {
    switch (status) {
        case PSLQKIT_OK: return "ok";
        case PSLQKIT_ERR_INVALID_INPUT: return "invalid-input";
        case PSLQKIT_ERR_NOT_FOUND: return "not-found";
        case PSLQKIT_ERR_PRECISION: return "precision-failure";
        case PSLQKIT_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* pslqkit_last_error(void) { return g_last_error.c_str(); }

pslqkit_status pslqkit_minpoly(const char* value, int degree_bound, int height_bound,
                               const pslqkit_options* opts, pslqkit_report** out) {
    if (out) *out = nullptr;
    if (!value) return set_error(PSLQKIT_ERR_INVALID_INPUT, "value must not be NULL");
    try {
        mpq_class approx = pslqkit::parse_decimal(value);
        auto rep = pslqkit::reconstruct(approx, degree_bound, height_bound, to_options(opts));
        if (out) *out = report_from(rep);
        return status_from(rep.status);
    } catch (const std::exception& e) {
        return set_error(PSLQKIT_ERR_INVALID_INPUT, e.what());
    }
}

pslqkit_status pslqkit_identify(const char* form, const char* value, int degree_bound,
                                int height_bound, const pslqkit_options* opts,
                                pslqkit_report** out) {
    if (out) *out = nullptr;
    if (!form || !value)
        return set_error(PSLQKIT_ERR_INVALID_INPUT, "form and value must not be NULL");
    try {
        pslqkit::TranscendentalForm f;
        std::string kind(form);
        if (kind == "asin")
            f.kind = pslqkit::FormKind::Arcsin;
        else if (kind == "acos")
            f.kind = pslqkit::FormKind::Arccos;
        else if (kind == "log")
            f.kind = pslqkit::FormKind::Log;
        else
            return set_error(PSLQKIT_ERR_INVALID_INPUT, "form must be asin, acos or log");
        f.beta_approx = pslqkit::parse_decimal(value);
        f.degree_bound = degree_bound;
        f.height_bound = height_bound;
        auto rep = pslqkit::identify_form(f, to_options(opts));
        if (out) *out = report_from(rep);
        return status_from(rep.status);
    } catch (const std::exception& e) {
        return set_error(PSLQKIT_ERR_INVALID_INPUT, e.what());
    }
}

void pslqkit_report_free(pslqkit_report* report) { delete report; }
const char* pslqkit_report_polynomial(const pslqkit_report* r) {
    return (r && r->has_polynomial) ? r->polynomial.c_str() : nullptr;
}
const char* pslqkit_report_epsilon(const pslqkit_report* r) { return r ? r->epsilon.c_str() : ""; }
const char* pslqkit_report_outcome(const pslqkit_report* r) { return r ? r->outcome.c_str() : ""; }
int pslqkit_report_digits(const pslqkit_report* r) { return r ? r->digits : 0; }
long pslqkit_report_iterations(const pslqkit_report* r) { return r ? r->iterations : 0; }
double pslqkit_report_lower_bound(const pslqkit_report* r) { return r ? r->lower_bound : 0.0; }

pslqkit_status pslqkit_find_relation(const char* vector, long height_bound,
                                     const char* epsilon, int decimal_digits,
                                     const pslqkit_options* opts, pslqkit_relation** out) {
    if (out) *out = nullptr;
    if (!vector) return set_error(PSLQKIT_ERR_INVALID_INPUT, "vector must not be NULL");
    try {
        std::vector<mpq_class> entries;
        std::string text(vector);
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string tok = text.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
            entries.push_back(pslqkit::parse_decimal(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }

        int digits = decimal_digits > 0 ? decimal_digits : 40;
        auto ctx = pslqkit::make_context(std::max(digits, 10) + 10, 10);
        std::vector<pslqkit::BigReal> x;
        x.reserve(entries.size());
        for (const auto& q : entries) x.emplace_back(q, ctx.prec);

        pslqkit::BigReal eps = epsilon ? pslqkit::BigReal(pslqkit::parse_decimal(epsilon), ctx.prec)
                                       : pslqkit::pow10(-(digits - 5), ctx.prec);

        auto res = pslqkit::find_relation(x, mpz_class(height_bound), eps, ctx, to_options(opts));

        auto* rel = new pslqkit_relation();
        rel->iterations = res.iterations;
        rel->lower_bound = res.lower_bound;
        switch (res.status) {
            case pslqkit::RelationStatus::Found: {
                rel->found = true;
                rel->outcome = "found";
                rel->norm = res.relation->euclidean_norm;
                std::string s = "(";
                for (std::size_t i = 0; i < res.relation->coefficients.size(); ++i) {
                    if (i) s += ", ";
                    s += res.relation->coefficients[i].get_str();
                }
                s += ")";
                rel->coefficients = s;
                break;
            }
            case pslqkit::RelationStatus::NoRelationWithinHeight:
                rel->outcome = "no-relation-within-height";
                break;
            case pslqkit::RelationStatus::IterationCapReached:
                rel->outcome = "iteration-cap-reached";
                break;
        }
        if (out)
            *out = rel;
        else
            delete rel;
        return res.status == pslqkit::RelationStatus::Found ? PSLQKIT_OK : PSLQKIT_ERR_NOT_FOUND;
    } catch (const std::exception& e) {
        return set_error(PSLQKIT_ERR_INVALID_INPUT, e.what());
    }
}

void pslqkit_relation_free(pslqkit_relation* relation) { delete relation; }
const char* pslqkit_relation_coefficients(const pslqkit_relation* r) {
    return (r && r->found) ? r->coefficients.c_str() : nullptr;
}
const char* pslqkit_relation_outcome(const pslqkit_relation* r) {
    return r ? r->outcome.c_str() : "";
}
double pslqkit_relation_norm(const pslqkit_relation* r) { return r ? r->norm : 0.0; }
double pslqkit_relation_lower_bound(const pslqkit_relation* r) { return r ? r->lower_bound : 0.0; }
long pslqkit_relation_iterations(const pslqkit_relation* r) { return r ? r->iterations : 0; }

pslqkit_status pslqkit_factor(const char* polynomial, const pslqkit_options* opts,
                              pslqkit_factorization** out) {
    if (out) *out = nullptr;
    if (!polynomial) return set_error(PSLQKIT_ERR_INVALID_INPUT, "polynomial must not be NULL");
    try {
        auto p = pslqkit::IntPolynomial::from_text(polynomial);
        auto res = pslqkit::factor_primitive(p, to_options(opts));
        auto* fac = new pslqkit_factorization();
        fac->content = res.content.get_str();
        for (const auto& [f, mult] : res.factors) fac->factors.emplace_back(f.to_text(), mult);
        if (res.residual) {
            fac->residual = res.residual->to_text();
            fac->has_residual = true;
        }
        if (out)
            *out = fac;
        else
            delete fac;
        return PSLQKIT_OK;
    } catch (const std::exception& e) {
        return set_error(PSLQKIT_ERR_INVALID_INPUT, e.what());
    }
}

void pslqkit_factorization_free(pslqkit_factorization* fac) { delete fac; }
const char* pslqkit_factorization_content(const pslqkit_factorization* f) {
    return f ? f->content.c_str() : "";
}
size_t pslqkit_factorization_count(const pslqkit_factorization* f) {
    return f ? f->factors.size() : 0;
}
const char* pslqkit_factorization_factor(const pslqkit_factorization* f, size_t index) {
    if (!f || index >= f->factors.size()) return nullptr;
    return f->factors[index].first.c_str();
}
int pslqkit_factorization_multiplicity(const pslqkit_factorization* f, size_t index) {
    if (!f || index >= f->factors.size()) return 0;
    return f->factors[index].second;
}
const char* pslqkit_factorization_residual(const pslqkit_factorization* f) {
    return (f && f->has_residual) ? f->residual.c_str() : nullptr;
}

pslqkit_status pslqkit_digits(int degree_bound, int height_bound, char* eps_buf,
                              size_t eps_buf_size, int* digits) {
    try {
        if (digits) *digits = pslqkit::digits_required(degree_bound, height_bound);
        if (eps_buf && eps_buf_size > 0) {
            auto eps = pslqkit::epsilon_bound(degree_bound, height_bound, 256);
            std::string s = eps.str(6);
            std::strncpy(eps_buf, s.c_str(), eps_buf_size - 1);
            eps_buf[eps_buf_size - 1] = '\0';
        }
        return PSLQKIT_OK;
    } catch (const std::exception& e) {
        return set_error(PSLQKIT_ERR_INVALID_INPUT, e.what());
    }
}

}  // extern "C"
