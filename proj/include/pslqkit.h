/* pslqkit: integer relation detection and exact minimal polynomial
 * reconstruction from decimal approximations.
 *
 * C interface: opaque handles plus error codes. All decimal inputs are
 * strings and are parsed exactly; results are returned as strings owned by
 * the handle they come from and stay valid until the handle is freed.
 */
#ifndef PSLQKIT_H
#define PSLQKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pslqkit_status {
    PSLQKIT_OK = 0,
    PSLQKIT_ERR_INVALID_INPUT = 1,
    PSLQKIT_ERR_NOT_FOUND = 2,
    PSLQKIT_ERR_PRECISION = 3,
    PSLQKIT_ERR_INTERNAL = 4
} pslqkit_status;

const char* pslqkit_status_name(pslqkit_status status);

/* Algorithm parameters; zero-initialize for the defaults (gamma = 2,
 * tau = sqrt(2), automatic precision and iteration budget). */
typedef struct pslqkit_options {
    double gamma;
    double tau;
    long max_iterations;
} pslqkit_options;

/* ---- minimal polynomial reconstruction / identification ---- */

typedef struct pslqkit_report pslqkit_report;

/* value: decimal approximation of an algebraic number; degree/height are the
 * bounds n and N on its minimal polynomial. On success *out holds a report
 * whose outcome is "found". NOT_FOUND / PRECISION failures also produce a
 * report (with diagnostics) when out is non-NULL. */
pslqkit_status pslqkit_minpoly(const char* value, int degree_bound, int height_bound,
                               const pslqkit_options* opts, pslqkit_report** out);

/* form: "asin", "acos" or "log"; value approximates the transcendental form
 * of an unknown algebraic number with the given bounds. */
pslqkit_status pslqkit_identify(const char* form, const char* value, int degree_bound,
                                int height_bound, const pslqkit_options* opts,
                                pslqkit_report** out);

void pslqkit_report_free(pslqkit_report* report);
const char* pslqkit_report_polynomial(const pslqkit_report* report); /* NULL if none */
const char* pslqkit_report_epsilon(const pslqkit_report* report);
const char* pslqkit_report_outcome(const pslqkit_report* report);
int pslqkit_report_digits(const pslqkit_report* report);
long pslqkit_report_iterations(const pslqkit_report* report);
double pslqkit_report_lower_bound(const pslqkit_report* report);

/* ---- integer relation search ---- */

typedef struct pslqkit_relation pslqkit_relation;

/* vector: comma-separated decimal entries. epsilon: residual tolerance on
 * |m . x| as a decimal string, or NULL for an automatic tolerance derived
 * from the working precision. decimal_digits <= 0 selects a default. */
pslqkit_status pslqkit_find_relation(const char* vector, long height_bound,
                                     const char* epsilon, int decimal_digits,
                                     const pslqkit_options* opts, pslqkit_relation** out);

void pslqkit_relation_free(pslqkit_relation* relation);
const char* pslqkit_relation_coefficients(const pslqkit_relation* relation); /* "(a, b, ...)" */
const char* pslqkit_relation_outcome(const pslqkit_relation* relation);
double pslqkit_relation_norm(const pslqkit_relation* relation);
double pslqkit_relation_lower_bound(const pslqkit_relation* relation);
long pslqkit_relation_iterations(const pslqkit_relation* relation);

/* ---- univariate factorization via root reconstruction ---- */

typedef struct pslqkit_factorization pslqkit_factorization;

pslqkit_status pslqkit_factor(const char* polynomial, const pslqkit_options* opts,
                              pslqkit_factorization** out);

void pslqkit_factorization_free(pslqkit_factorization* fac);
const char* pslqkit_factorization_content(const pslqkit_factorization* fac);
size_t pslqkit_factorization_count(const pslqkit_factorization* fac);
const char* pslqkit_factorization_factor(const pslqkit_factorization* fac, size_t index);
int pslqkit_factorization_multiplicity(const pslqkit_factorization* fac, size_t index);
const char* pslqkit_factorization_residual(const pslqkit_factorization* fac); /* NULL if none */

/* ---- error budget queries ---- */

/* Writes epsilon_bound(n, N) as a decimal string into eps_buf (truncating if
 * needed) and the required digit count into *digits. Either output may be
 * NULL. */
pslqkit_status pslqkit_digits(int degree_bound, int height_bound, char* eps_buf,
                              size_t eps_buf_size, int* digits);

/* Last error message for the calling thread, or "" if none. */
const char* pslqkit_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* PSLQKIT_H */
