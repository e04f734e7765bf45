#include "hh1.h"

#include <cstring>
#include <string>

#include "hh1/builtins.hpp"
#include "hh1/format.hpp"
#include "hh1/integrability.hpp"

using hh1::algebra::Algebra;
using hh1::format::json;

struct hh1_algebra {
    Algebra alg;
    std::string digest;
    std::string builtin_name;  // empty for parsed algebras
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hh1_status guarded(Fn&& fn) {
    try {
        fn();
        return HH1_OK;
    } catch (const hh1::math_error& e) {
        g_last_error = e.what();
        return HH1_ERR_MATH;
    } catch (const hh1::input_error& e) {
        g_last_error = e.what();
        return HH1_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HH1_ERR_INPUT;
    }
}

hh1::fp::Matrix resolve_endo(const hh1_algebra* a, const char* derivation) {
    std::string d = derivation ? derivation : "";
    if (d == "f0" || d == "f1" || d == "f2") {
        if (a->builtin_name != "c3" || a->alg.modulus() != 3)
            throw hh1::input_error("derivation name '" + d +
                                   "' is only defined on the c3 builtin with p = 3");
        return hh1::builtins::c3_derivation(d);
    }
    return hh1::format::parse_endo_text(d, a->alg.dim(), a->alg.modulus());
}

void emit(char** out_json, const std::string& command, const std::string& digest, json payload,
          std::vector<std::string> warnings = {}) {
    json rep = hh1::format::make_report(command, digest, std::move(payload), std::move(warnings));
    *out_json = dup_string(hh1::format::dump_report(rep));
}

json classes_json(const std::vector<hh1::hochschild::HH1Class>& classes) {
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(hh1::format::matrix_json(c.representative));
    return arr;
}

// Alternative transfer evaluation for a group element g of the subgroup,
// specializing the two-coset formula before expanding:
// sum_h (<h^{-1}, f(phi_1(g))> + <h, f(phi_t(g t))>) h.
hh1::fp::Vec specialized_transfer_value(const hh1::transfer::GroupBimoduleSetup& setup,
                                        const hh1::fp::Matrix& f, std::size_t g) {
    const Algebra& big = *setup.big;
    const Algebra& sub = *setup.sub;
    std::size_t t = setup.coset_reps[1];
    hh1::fp::Vec gv(big.dim(), 0);
    gv[g] = 1;
    std::size_t gt = hh1::algebra::basis_product_index(big, g, t);
    hh1::fp::Vec gtv(big.dim(), 0);
    gtv[gt] = 1;
    hh1::fp::Vec term1 = f.apply(hh1::transfer::dual_basis_projection(setup, setup.coset_reps[0], gv));
    hh1::fp::Vec term2 = f.apply(hh1::transfer::dual_basis_projection(setup, t, gtv));
    hh1::fp::Vec out(big.dim(), 0);
    for (std::size_t h = 0; h < sub.dim(); ++h) {
        std::size_t hG = setup.embedding[h];
        std::size_t hinv = hh1::algebra::basis_inverse_index(sub, h);
        // <h^{-1}, x> = x[h], <h, x> = x[h^{-1}] over the subalgebra
        out[hG] = hh1::fp::add(out[hG], hh1::fp::add(term1[h], term2[hinv], big.modulus()),
                               big.modulus());
    }
    return out;
}

}  // namespace

extern "C" {

const char* hh1_last_error(void) { return g_last_error.c_str(); }

hh1_status hh1_algebra_parse(const char* json_text, hh1_algebra** out) {
    return guarded([&] {
        if (!json_text || !out) throw hh1::input_error("null argument");
        std::string text = json_text;
        Algebra a = hh1::format::parse_algebra_text(text, hh1::format::effective_dim_cap());
        *out = new hh1_algebra{std::move(a), hh1::format::digest_hex(text), ""};
    });
}

hh1_status hh1_algebra_builtin(const char* name, unsigned p, hh1_algebra** out) {
    return guarded([&] {
        if (!name || !out) throw hh1::input_error("null argument");
        std::string n = name;
        Algebra a = hh1::builtins::builtin_algebra(n, p, hh1::format::effective_dim_cap());
        std::string key = "builtin:" + n + "@p=" + std::to_string(p);
        *out = new hh1_algebra{std::move(a), hh1::format::digest_hex(key), n};
    });
}

void hh1_algebra_free(hh1_algebra* a) { delete a; }

unsigned hh1_algebra_dim(const hh1_algebra* a) { return static_cast<unsigned>(a->alg.dim()); }
unsigned hh1_algebra_modulus(const hh1_algebra* a) { return a->alg.modulus(); }

hh1_status hh1_cmd_validate(const hh1_algebra* a, char** out_json) {
    return guarded([&] {
        json payload;
        payload["p"] = a->alg.modulus();
        payload["dim"] = a->alg.dim();
        json violations = json::array();
        for (const auto& v : hh1::algebra::validate(a->alg)) violations.push_back(v.describe());
        payload["violations"] = violations;
        payload["valid"] = violations.empty();
        emit(out_json, "validate", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_center(const hh1_algebra* a, char** out_json) {
    return guarded([&] {
        auto basis = hh1::algebra::center(a->alg);
        json payload;
        payload["dim"] = basis.size();
        json vecs = json::array(), pretty = json::array();
        for (const auto& z : basis) {
            vecs.push_back(hh1::format::vec_json(z));
            pretty.push_back(a->alg.format_element(z));
        }
        payload["basis"] = vecs;
        payload["basis_pretty"] = pretty;
        emit(out_json, "center", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_hh1(const hh1_algebra* a, char** out_json) {
    return guarded([&] {
        auto der = hh1::hochschild::derivation_space(a->alg);
        auto inn = hh1::hochschild::inner_derivations(a->alg);
        auto classes = hh1::hochschild::hh1_basis(a->alg);
        json payload;
        payload["der_dim"] = der.size();
        payload["inn_dim"] = inn.size();
        payload["hh1_dim"] = classes.size();
        payload["classes"] = classes_json(classes);
        emit(out_json, "hh1", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_ppower(const hh1_algebra* a, const char* derivation, char** out_json) {
    return guarded([&] {
        hh1::fp::Matrix d = resolve_endo(a, derivation);
        hh1::fp::Matrix pw = hh1::hochschild::p_power(a->alg, d);
        auto cls = hh1::hochschild::class_of(a->alg, pw);
        json payload;
        payload["input"] = hh1::format::matrix_json(d);
        payload["power"] = hh1::format::matrix_json(pw);
        payload["class"] = hh1::format::matrix_json(cls.representative);
        payload["class_is_zero"] = cls.is_zero();
        emit(out_json, "ppower", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_bracket(const hh1_algebra* a, const char* derivation_a,
                           const char* derivation_b, char** out_json) {
    return guarded([&] {
        hh1::fp::Matrix d = resolve_endo(a, derivation_a);
        hh1::fp::Matrix e = resolve_endo(a, derivation_b);
        for (const auto* m : {&d, &e})
            if (auto w = hh1::hochschild::leibniz_witness(a->alg, *m))
                throw hh1::math_error("bracket: input is not a derivation (Leibniz fails at (" +
                                      std::to_string(w->first) + "," + std::to_string(w->second) +
                                      "))");
        hh1::fp::Matrix br = hh1::hochschild::bracket(a->alg, d, e);
        auto cls = hh1::hochschild::class_of(a->alg, br);
        json payload;
        payload["bracket"] = hh1::format::matrix_json(br);
        payload["class"] = hh1::format::matrix_json(cls.representative);
        payload["class_is_zero"] = cls.is_zero();
        emit(out_json, "bracket", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_integrate(const hh1_algebra* a, const char* derivation, unsigned r,
                             unsigned order, unsigned branch_limit, char** out_json) {
    return guarded([&] {
        hh1::fp::Matrix d = resolve_endo(a, derivation);
        auto outcome = hh1::integrability::integrate(a->alg, d, r, order, branch_limit);
        json payload;
        payload["r"] = r;
        payload["order"] = order;
        payload["branches_explored"] = outcome.branches_explored;
        payload["hit_branch_limit"] = outcome.hit_branch_limit;
        if (outcome.integrated) {
            payload["status"] = "integrated";
            json terms = json::array();
            for (const auto& t : outcome.integrated->terms)
                terms.push_back(hh1::format::matrix_json(t));
            payload["terms"] = terms;
            auto lead = hh1::integrability::leading_index(*outcome.integrated);
            payload["leading_index"] = lead ? json(*lead) : json("infinity");
            const uint32_t p = a->alg.modulus();
            if (order >= static_cast<unsigned long>(r) * p) {
                // Does the truncated p-fold power shift degrees as expected?
                auto up = hh1::integrability::hd_power(a->alg, *outcome.integrated, p);
                bool low_zero = true;
                for (std::size_t i = 1; i < static_cast<std::size_t>(r) * p; ++i)
                    low_zero &= up.terms[i].is_zero();
                bool term_matches =
                    up.terms[static_cast<std::size_t>(r) * p] == hh1::hochschild::p_power(a->alg, d);
                payload["ppower_shift"] = {{"terms_below_rp_vanish", low_zero},
                                           {"term_rp_is_ppower_of_dr", term_matches}};
            }
        } else {
            payload["status"] = "obstructed";
            payload["obstructed_degree"] = outcome.obstructed_degree;
        }
        emit(out_json, "integrate", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_hh1r(const hh1_algebra* a, unsigned r, unsigned order, unsigned branch_limit,
                        char** out_json) {
    return guarded([&] {
        auto res = hh1::integrability::hh1_r(a->alg, r, order, branch_limit);
        json payload;
        payload["r"] = r;
        payload["order"] = order;
        payload["dim"] = res.classes.size();
        payload["classes"] = classes_json(res.classes);
        payload["flag"] = res.exact ? "exact" : "lower-bound";
        emit(out_json, "hh1r", a->digest, std::move(payload));
    });
}

hh1_status hh1_cmd_counterexample(char** out_json) {
    return guarded([&] {
        auto bundle = hh1::builtins::s3_over_c3();
        auto setup = bundle.view();
        const Algebra& big = bundle.big;
        const Algebra& sub = bundle.sub;
        hh1::fp::Matrix f0 = hh1::builtins::c3_derivation("f0");
        auto rep = hh1::transfer::ppower_transfer_discrepancy(setup, f0);

        std::vector<std::string> warnings;
        json payload;
        // tr(f0) evaluated at (123) and (132) (big-algebra basis indices 1, 2)
        hh1::fp::Matrix trf0 = hh1::transfer::transfer_map(setup, f0);
        hh1::fp::Vec at123 = trf0.col(1), at132 = trf0.col(2);
        payload["tr_f0_at_123"] = hh1::format::vec_json(at123);
        payload["tr_f0_at_123_pretty"] = big.format_element(at123);
        payload["tr_f0_at_132"] = hh1::format::vec_json(at132);
        payload["tr_f0_at_132_pretty"] = big.format_element(at132);
        // formula-as-printed vs the specialized evaluation; both recorded
        hh1::fp::Vec spec123 = specialized_transfer_value(setup, f0, 1);
        hh1::fp::Vec spec132 = specialized_transfer_value(setup, f0, 2);
        payload["tr_f0_at_123_specialized"] = hh1::format::vec_json(spec123);
        payload["tr_f0_at_132_specialized"] = hh1::format::vec_json(spec132);
        if (spec123 != at123 || spec132 != at132)
            warnings.push_back(
                "printed transfer formula and specialized evaluation disagree on kH");

        payload["f0_cubed_is_zero"] = hh1::hochschild::p_power(sub, f0).is_zero();
        payload["tr_of_f0_cubed_is_zero"] = rep.tr_of_ppower.is_zero();
        hh1::fp::Vec pw_at132 = rep.ppower_of_tr.col(2);
        payload["ppower_of_tr_f0_at_132"] = hh1::format::vec_json(pw_at132);
        payload["ppower_of_tr_f0_at_132_pretty"] = big.format_element(pw_at132);

        // [x, (132)] = 1 over F_3 S_3
        hh1::fp::Vec g132(big.dim(), 0);
        g132[2] = 1;
        auto inner = hh1::transfer::is_inner(big, {{g132, big.unit()}});
        payload["inner_solve_x_132_eq_1"] = inner.has_solution() ? "witness" : "no_solution";

        payload["tr_f0_is_derivation"] = rep.tr_f_is_derivation;
        payload["delta_is_inner"] = rep.delta_is_inner;
        payload["verdict"] = rep.commutes ? "commutes" : "does_not_commute";
        emit(out_json, "counterexample", hh1::format::digest_hex("builtin:s3_over_c3"),
             std::move(payload), std::move(warnings));
    });
}

hh1_status hh1_cmd_morita_check(const hh1_algebra* a, unsigned m, char** out_json) {
    return guarded([&] {
        Algebra mat = hh1::algebra::matrix_algebra(a->alg, m, hh1::format::effective_dim_cap());
        auto base_classes = hh1::hochschild::hh1_basis(a->alg);
        auto mat_classes = hh1::hochschild::hh1_basis(mat);
        json payload;
        payload["m"] = m;
        payload["hh1_dim_base"] = base_classes.size();
        payload["hh1_dim_matrix"] = mat_classes.size();
        json verdicts = json::array();
        bool all = true;
        for (std::size_t i = 0; i < base_classes.size(); ++i) {
            auto lhs = hh1::transfer::morita_induced_class_map(
                a->alg, mat, m, hh1::hochschild::p_power_class(a->alg, base_classes[i]));
            auto rhs = hh1::hochschild::p_power_class(
                mat, hh1::transfer::morita_induced_class_map(a->alg, mat, m, base_classes[i]));
            bool ok = lhs == rhs;
            all &= ok;
            verdicts.push_back({{"class_index", i}, {"commutes", ok}});
        }
        payload["per_class"] = verdicts;
        payload["all_commute"] = all;
        payload["dims_equal"] = base_classes.size() == mat_classes.size();
        emit(out_json, "morita-check", a->digest, std::move(payload));
    });
}

void hh1_string_free(char* s) { std::free(s); }

}  // extern "C"
