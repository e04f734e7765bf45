// Command-line front end. Everything mathematical goes through the C API in
// hh1.h; this file only handles argument parsing, file IO and rendering.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hh1.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

// --input accepts a file path, or a builtin name "s3" / "cN" with an
// optional "@p=P" suffix (default p = 3).
hh1_status load_algebra(const std::string& input, hh1_algebra** out) {
    std::string text;
    if (read_file(input, text)) return hh1_algebra_parse(text.c_str(), out);
    std::string name = input;
    unsigned p = 3;
    if (auto at = input.find("@p="); at != std::string::npos) {
        name = input.substr(0, at);
        try {
            p = static_cast<unsigned>(std::stoul(input.substr(at + 3)));
        } catch (...) {
            std::cerr << "error: bad prime in builtin spec '" << input << "'\n";
            return HH1_ERR_INPUT;
        }
    }
    return hh1_algebra_builtin(name.c_str(), p, out);
}

// --derivation accepts a file path or a builtin name (f0/f1/f2).
std::string load_derivation(const std::string& arg) {
    std::string text;
    if (read_file(arg, text)) return text;
    return arg;
}

void render_text(const nlohmann::json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                std::cout << prefix << key << ":\n";
                render_text(value, prefix + "  ");
            } else {
                std::cout << prefix << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j) flat &= !(v.is_object() || v.is_array());
        if (flat) {
            std::cout << prefix << j.dump() << "\n";
        } else {
            for (const auto& v : j) render_text(v, prefix);
        }
    } else {
        std::cout << prefix << j.dump() << "\n";
    }
}

int finish(hh1_status st, char* report, bool as_text) {
    if (st != HH1_OK) {
        std::cerr << "error: " << hh1_last_error() << "\n";
        return static_cast<int>(st);
    }
    if (as_text) {
        render_text(nlohmann::json::parse(report), "");
    } else {
        std::fputs(report, stdout);
    }
    hh1_string_free(report);
    return 0;
}

struct AlgebraGuard {
    hh1_algebra* a = nullptr;
    ~AlgebraGuard() { hh1_algebra_free(a); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First Hochschild cohomology, integrable derivations and transfer maps "
                 "for finite-dimensional algebras over prime fields"};
    app.require_subcommand(1);

    std::string input;
    std::vector<std::string> derivations;
    unsigned r = 1, order = 0, branch_limit = 1000, m = 2;
    bool as_text = false;
    bool as_json = true;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", input, "algebra file or builtin name (s3, cN[@p=P])");
        if (needs_input) in->required();
        sub->add_flag("--text", as_text, "human-readable output");
        sub->add_flag("--json", as_json, "JSON output (default)");
        return sub;
    };

    auto* c_validate = add_common(app.add_subcommand("validate", "check algebra axioms"), true);
    auto* c_center = add_common(app.add_subcommand("center", "basis of the center"), true);
    auto* c_hh1 = add_common(app.add_subcommand("hh1", "derivations modulo inner derivations"), true);

    auto* c_ppower = add_common(app.add_subcommand("ppower", "p-fold composite of a derivation"), true);
    c_ppower->add_option("--derivation", derivations, "derivation file or builtin name")
        ->required()
        ->allow_extra_args(false);

    auto* c_bracket = add_common(app.add_subcommand("bracket", "Lie bracket of two derivations"), true);
    c_bracket->add_option("--derivation", derivations,
                          "derivation file or builtin name (give twice)")
        ->required()
        ->expected(1, 2)
        ->allow_extra_args(false);

    auto* c_integrate =
        add_common(app.add_subcommand("integrate", "search for a truncated higher derivation"), true);
    c_integrate->add_option("--derivation", derivations, "derivation file or builtin name")
        ->required()
        ->allow_extra_args(false);
    c_integrate->add_option("--r", r, "integrability degree (default 1)");
    c_integrate->add_option("--order", order, "truncation order N (default p*r)");
    c_integrate->add_option("--branch-limit", branch_limit, "search node budget (default 1000)");

    auto* c_hh1r = add_common(app.add_subcommand("hh1r", "order-N integrable classes"), true);
    c_hh1r->add_option("--r", r, "integrability degree (default 1)");
    c_hh1r->add_option("--order", order, "truncation order N (default p*r)");
    c_hh1r->add_option("--branch-limit", branch_limit, "search node budget (default 1000)");

    auto* c_counter = app.add_subcommand("counterexample",
                                         "p-power map vs transfer map on the s3_over_c3 setup");
    c_counter->add_flag("--text", as_text, "human-readable output");
    c_counter->add_flag("--json", as_json, "JSON output (default)");

    auto* c_morita = add_common(
        app.add_subcommand("morita-check", "p-power commutation with the induced map on M_m(A)"), true);
    c_morita->add_option("--m", m, "matrix size (default 2)");

    CLI11_PARSE(app, argc, argv);

    if (c_counter->parsed()) {
        char* rep = nullptr;
        hh1_status st = hh1_cmd_counterexample(&rep);
        return finish(st, rep, as_text);
    }

    AlgebraGuard guard;
    if (hh1_status st = load_algebra(input, &guard.a); st != HH1_OK) {
        std::cerr << "error: " << hh1_last_error() << "\n";
        return static_cast<int>(st);
    }
    if (order == 0) order = hh1_algebra_modulus(guard.a) * r;  // smallest informative horizon

    char* rep = nullptr;
    hh1_status st = HH1_OK;
    if (c_validate->parsed()) {
        st = hh1_cmd_validate(guard.a, &rep);
    } else if (c_center->parsed()) {
        st = hh1_cmd_center(guard.a, &rep);
    } else if (c_hh1->parsed()) {
        st = hh1_cmd_hh1(guard.a, &rep);
    } else if (c_ppower->parsed()) {
        st = hh1_cmd_ppower(guard.a, load_derivation(derivations.at(0)).c_str(), &rep);
    } else if (c_bracket->parsed()) {
        if (derivations.size() != 2) {
            std::cerr << "error: bracket needs --derivation twice\n";
            return 2;
        }
        st = hh1_cmd_bracket(guard.a, load_derivation(derivations[0]).c_str(),
                             load_derivation(derivations[1]).c_str(), &rep);
    } else if (c_integrate->parsed()) {
        st = hh1_cmd_integrate(guard.a, load_derivation(derivations.at(0)).c_str(), r, order,
                               branch_limit, &rep);
    } else if (c_hh1r->parsed()) {
        st = hh1_cmd_hh1r(guard.a, r, order, branch_limit, &rep);
    } else if (c_morita->parsed()) {
        st = hh1_cmd_morita_check(guard.a, m, &rep);
    }
    return finish(st, rep, as_text);
}
