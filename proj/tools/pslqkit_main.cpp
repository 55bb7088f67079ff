// Command-line front end; talks to the library exclusively through the C API.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pslqkit.h"

namespace {

using nlohmann::json;

enum class Format { Text, Kv, Json };

Format parse_format(const std::string& s) {
    if (s == "kv") return Format::Kv;
    if (s == "json") return Format::Json;
    return Format::Text;
}

int exit_code_for(pslqkit_status status) {
    switch (status) {
        case PSLQKIT_OK: return 0;
        case PSLQKIT_ERR_INVALID_INPUT: return 1;
        case PSLQKIT_ERR_NOT_FOUND: return 2;
        case PSLQKIT_ERR_PRECISION: return 3;
        default: return 1;
    }
}

void emit(Format fmt, const json& obj) {
    if (fmt == Format::Json) {
        std::printf("%s\n", obj.dump().c_str());
        return;
    }
    if (fmt == Format::Kv) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (it.value().is_string())
                std::printf("%s=%s\n", it.key().c_str(), it.value().get<std::string>().c_str());
            else
                std::printf("%s=%s\n", it.key().c_str(), it.value().dump().c_str());
        }
        return;
    }
    // Plain text: a strict subset of the structured fields.
    if (obj.contains("polynomial"))
        std::printf("%s\n", obj["polynomial"].get<std::string>().c_str());
    else if (obj.contains("relation"))
        std::printf("%s\n", obj["relation"].get<std::string>().c_str());
    else if (obj.contains("error"))
        std::fprintf(stderr, "error: %s\n", obj["error"].get<std::string>().c_str());
    else
        std::printf("%s\n", obj.dump().c_str());
}

json report_json(pslqkit_status status, const pslqkit_report* rep) {
    json obj;
    obj["status"] = pslqkit_status_name(status);
    if (rep) {
        obj["outcome"] = pslqkit_report_outcome(rep);
        obj["epsilon"] = pslqkit_report_epsilon(rep);
        obj["digits"] = pslqkit_report_digits(rep);
        obj["iterations"] = pslqkit_report_iterations(rep);
        obj["lower_bound"] = pslqkit_report_lower_bound(rep);
        const char* poly = pslqkit_report_polynomial(rep);
        if (poly) obj["polynomial"] = poly;
    }
    if (status == PSLQKIT_ERR_INVALID_INPUT) obj["error"] = pslqkit_last_error();
    return obj;
}

void print_report(Format fmt, pslqkit_status status, const pslqkit_report* rep) {
    json obj = report_json(status, rep);
    if (fmt == Format::Text && rep && pslqkit_report_polynomial(rep)) {
        std::printf("%s\n", pslqkit_report_polynomial(rep));
        std::printf("epsilon = %s, digits = %d, iterations = %ld\n",
                    pslqkit_report_epsilon(rep), pslqkit_report_digits(rep),
                    pslqkit_report_iterations(rep));
        return;
    }
    if (fmt == Format::Text && status != PSLQKIT_OK && rep) {
        std::fprintf(stderr, "no polynomial found (%s); lower bound %.6g\n",
                     pslqkit_report_outcome(rep), pslqkit_report_lower_bound(rep));
        return;
    }
    emit(fmt, obj);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimal polynomials, integer relations and polynomial factors "
                 "from decimal approximations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_str = "text";
    app.add_option("--format", format_str, "Output format: text, kv or json")
        ->check(CLI::IsMember({"text", "kv", "json"}));

    pslqkit_options opts{};
    app.add_option("--gamma", opts.gamma, "PSLQ gamma parameter (> sqrt(4/3))");
    app.add_option("--tau", opts.tau, "PSLQ tau parameter (> 1)");

    // minpoly
    auto* mp = app.add_subcommand("minpoly", "Reconstruct a minimal polynomial");
    std::string mp_value;
    int mp_degree = 0, mp_height = 0;
    mp->add_option("--value", mp_value, "Decimal approximation")->required();
    mp->add_option("--degree", mp_degree, "Degree bound n")->required();
    mp->add_option("--height", mp_height, "Height bound N")->required();

    // identify
    auto* id = app.add_subcommand("identify", "Identify sin^-1/cos^-1/log of an algebraic number");
    std::string id_form, id_value;
    int id_degree = 0, id_height = 0;
    id->add_option("--form", id_form, "asin, acos or log")
        ->required()
        ->check(CLI::IsMember({"asin", "acos", "log"}));
    id->add_option("--value", id_value, "Decimal approximation of the form value")->required();
    id->add_option("--degree", id_degree, "Degree bound n")->required();
    id->add_option("--height", id_height, "Height bound N")->required();

    // factor
    auto* fa = app.add_subcommand("factor", "Factor an integer polynomial via real roots");
    std::string fa_poly;
    fa->add_option("--poly", fa_poly, "Polynomial, e.g. \"x^2 - 8*x - 47\"")->required();

    // digits
    auto* dg = app.add_subcommand("digits", "Error budget and digits for given bounds");
    int dg_degree = 0, dg_height = 0;
    dg->add_option("--degree", dg_degree, "Degree bound n")->required();
    dg->add_option("--height", dg_height, "Height bound N")->required();

    // pslq
    auto* pq = app.add_subcommand("pslq", "Find an integer relation for a vector");
    std::string pq_vector, pq_epsilon;
    long pq_height = 0;
    int pq_digits = 0;
    pq->add_option("--vector", pq_vector, "Comma-separated decimal entries")->required();
    pq->add_option("--height", pq_height, "Height bound N")->required();
    pq->add_option("--epsilon", pq_epsilon, "Residual tolerance (decimal)");
    pq->add_option("--precision", pq_digits, "Working decimal digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }
    Format fmt = parse_format(format_str);

    if (mp->parsed()) {
        pslqkit_report* rep = nullptr;
        pslqkit_status st = pslqkit_minpoly(mp_value.c_str(), mp_degree, mp_height, &opts, &rep);
        print_report(fmt, st, rep);
        pslqkit_report_free(rep);
        return exit_code_for(st);
    }

    if (id->parsed()) {
        pslqkit_report* rep = nullptr;
        pslqkit_status st = pslqkit_identify(id_form.c_str(), id_value.c_str(), id_degree,
                                             id_height, &opts, &rep);
        print_report(fmt, st, rep);
        pslqkit_report_free(rep);
        return exit_code_for(st);
    }

    if (fa->parsed()) {
        pslqkit_factorization* fac = nullptr;
        pslqkit_status st = pslqkit_factor(fa_poly.c_str(), &opts, &fac);
        if (st != PSLQKIT_OK) {
            emit(fmt, json{{"status", pslqkit_status_name(st)}, {"error", pslqkit_last_error()}});
            return exit_code_for(st);
        }
        json obj;
        obj["status"] = "ok";
        obj["content"] = pslqkit_factorization_content(fac);
        json flist = json::array();
        for (size_t i = 0; i < pslqkit_factorization_count(fac); ++i)
            flist.push_back(json{{"polynomial", pslqkit_factorization_factor(fac, i)},
                                 {"multiplicity", pslqkit_factorization_multiplicity(fac, i)}});
        obj["factors"] = flist;
        const char* residual = pslqkit_factorization_residual(fac);
        if (residual) obj["residual"] = residual;
        if (fmt == Format::Text) {
            std::printf("content: %s\n", pslqkit_factorization_content(fac));
            for (size_t i = 0; i < pslqkit_factorization_count(fac); ++i) {
                int mult = pslqkit_factorization_multiplicity(fac, i);
                if (mult == 1)
                    std::printf("factor: %s\n", pslqkit_factorization_factor(fac, i));
                else
                    std::printf("factor: (%s)^%d\n", pslqkit_factorization_factor(fac, i), mult);
            }
            if (residual) std::printf("residual: %s\n", residual);
        } else {
            emit(fmt, obj);
        }
        pslqkit_factorization_free(fac);
        return 0;
    }

    if (dg->parsed()) {
        char eps[64];
        int digits = 0;
        pslqkit_status st = pslqkit_digits(dg_degree, dg_height, eps, sizeof(eps), &digits);
        if (st != PSLQKIT_OK) {
            emit(fmt, json{{"status", pslqkit_status_name(st)}, {"error", pslqkit_last_error()}});
            return exit_code_for(st);
        }
        if (fmt == Format::Text)
            std::printf("epsilon = %s\ndigits = %d\n", eps, digits);
        else
            emit(fmt, json{{"status", "ok"}, {"epsilon", eps}, {"digits", digits}});
        return 0;
    }

    if (pq->parsed()) {
        pslqkit_relation* rel = nullptr;
        pslqkit_status st = pslqkit_find_relation(pq_vector.c_str(), pq_height,
                                                  pq_epsilon.empty() ? nullptr : pq_epsilon.c_str(),
                                                  pq_digits, &opts, &rel);
        json obj;
        obj["status"] = pslqkit_status_name(st);
        if (rel) {
            obj["outcome"] = pslqkit_relation_outcome(rel);
            obj["lower_bound"] = pslqkit_relation_lower_bound(rel);
            obj["iterations"] = pslqkit_relation_iterations(rel);
            const char* coeffs = pslqkit_relation_coefficients(rel);
            if (coeffs) {
                obj["relation"] = coeffs;
                obj["norm"] = pslqkit_relation_norm(rel);
            }
        } else if (st == PSLQKIT_ERR_INVALID_INPUT) {
            obj["error"] = pslqkit_last_error();
        }
        if (fmt == Format::Text) {
            const char* coeffs = rel ? pslqkit_relation_coefficients(rel) : nullptr;
            if (coeffs)
                std::printf("relation: %s\n", coeffs);
            else if (rel)
                std::fprintf(stderr, "no relation (%s); norm lower bound %.6g\n",
                             pslqkit_relation_outcome(rel), pslqkit_relation_lower_bound(rel));
            else
                std::fprintf(stderr, "error: %s\n", pslqkit_last_error());
        } else {
            emit(fmt, obj);
        }
        pslqkit_relation_free(rel);
        return exit_code_for(st);
    }

    return 1;
}
