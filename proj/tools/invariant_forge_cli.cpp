/*
   Copyright 2026 The invariant-forge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <invariant_forge/action_io.hpp>
#include <invariant_forge/corpus.hpp>
#include <invariant_forge/invariant_forge.hpp>

namespace ivf = invariant_forge;
using nlohmann::json;

namespace {

// Stable exit codes: 0 success, 2 input error, 3 inapplicable method,
// 4 resource cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitCap = 4;

constexpr int kMaxVars = 12;
constexpr long long kMaxDegree = 16;
constexpr long long kMaxMonomialSpace = 50000;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

/// Shared machine-readable envelope.
void emit_json(const std::string& command, const std::string& status, const json& results,
               long long timing_ms) {
    json doc;
    doc["command"] = command;
    doc["status"] = status;
    doc["results"] = results;
    doc["timing_ms"] = timing_ms;
    std::cout << doc.dump(2) << "\n";
}

long long monomial_space_dim(int nvars, long long d) {
    // C(d + nvars - 1, nvars - 1), saturating at the cap sentinel
    mpz_class dim = ivf::binomial(d + nvars - 1, nvars - 1);
    if (!dim.fits_slong_p() || dim.get_si() > kMaxMonomialSpace * 16)
        return kMaxMonomialSpace * 16;
    return dim.get_si();
}

void enforce_caps(const ivf::ActionDescriptor& action, long long D, bool override_caps) {
    if (override_caps) {
        std::cerr << "warning: resource caps overridden\n";
        return;
    }
    int n = ivf::action_nvars(action);
    if (n > kMaxVars)
        throw ivf::resource_cap_error("cap exceeded: nvars " + std::to_string(n) + " > " +
                                      std::to_string(kMaxVars) +
                                      " (use --cap-override to proceed)");
    if (D > kMaxDegree)
        throw ivf::resource_cap_error("cap exceeded: degree " + std::to_string(D) + " > " +
                                      std::to_string(kMaxDegree) +
                                      " (use --cap-override to proceed)");
    long long space = monomial_space_dim(n, D);
    if (space > kMaxMonomialSpace)
        throw ivf::resource_cap_error(
            "cap exceeded: monomial space dimension " + std::to_string(space) + " > " +
            std::to_string(kMaxMonomialSpace) + " (use --cap-override to proceed)");
}

ivf::ActionDescriptor load_action(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ivf::action_file_error("", "cannot open file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ivf::action_file_error("", std::string("JSON parse failure: ") + e.what());
    }
    return ivf::io::parse_action(doc);
}

int run_molien(const std::string& file, long long degree, const std::string& method,
               bool as_json, bool override_caps) {
    Clock clock;
    ivf::ActionDescriptor action = load_action(file);
    enforce_caps(action, degree, override_caps);

    bool is_alpha = std::holds_alternative<ivf::AlphaCoaction>(action);
    if (is_alpha && method != "counting")
        throw ivf::inapplicable_error("charsum is not defined for alpha actions");

    json results;
    if (method == "counting") {
        results["counting"] = ivf::molien_by_counting(action, degree).coeffs;
    } else if (method == "charsum") {
        ivf::CharacterSumSeries cs = ivf::molien_charsum(action, degree);
        results["charsum"] = cs.coeffs;
        results["zeta_order"] = cs.zeta_order;
        results["abstract_only"] = cs.abstract_only;
    } else { // both
        ivf::MolienComparison cmp = ivf::molien_compare(action, degree);
        results["counting"] = cmp.counting_native;
        results["counting_over_Q"] = cmp.counting_rational;
        if (!cmp.charsum.empty()) results["charsum"] = cmp.charsum;
        results["verdict"] = cmp.all_agree ? "agree" : "mismatch";
        results["mismatched_degrees"] = cmp.mismatched_degrees;
    }

    if (as_json) {
        emit_json("molien", "ok", results, clock.ms());
    } else {
        std::cout << "Molien coefficients to degree " << degree << "\n";
        for (const auto& [key, value] : results.items())
            std::cout << "  " << key << ": " << value.dump() << "\n";
    }
    return kExitOk;
}

int run_beta(const std::string& file, long long degree, bool as_json, bool override_caps) {
    Clock clock;
    ivf::ActionDescriptor action = load_action(file);
    enforce_caps(action, degree, override_caps);
    ivf::BetaCertificate cert = ivf::minimal_generators(action, degree);

    json results;
    results["generator_degrees"] = cert.generator_degrees;
    results["beta_lower"] = cert.beta_lower;
    results["certified_complete"] = cert.certified_complete;
    results["certification_reason"] = cert.certification_reason;
    results["search_limit"] = cert.search_limit;

    if (as_json) {
        emit_json("beta", "ok", results, clock.ms());
    } else {
        std::cout << "beta_lower = " << cert.beta_lower << " (search limit " << degree << ")\n";
        std::cout << "generator degrees:";
        for (long long d : cert.generator_degrees) std::cout << " " << d;
        std::cout << "\n"
                  << (cert.certified_complete ? "certified complete: " : "uncertified: ")
                  << cert.certification_reason << "\n";
    }
    return kExitOk;
}

int run_verify_alpha(long long q, long long l, bool identity3, bool certificate, bool as_json,
                     bool override_caps) {
    Clock clock;
    if (!identity3 && !certificate) identity3 = certificate = true;
    long long g_degree = l * (q - 1);
    if (!override_caps && g_degree > 8)
        throw ivf::resource_cap_error("cap exceeded: l(q-1) = " + std::to_string(g_degree) +
                                      " > 8 (use --cap-override to proceed)");

    json results;
    bool all_ok = true;
    if (identity3) {
        json checks = json::array();
        for (long long i = 0; i < q; ++i) {
            ivf::IdentityCheck chk = ivf::verify_identity3(l, i, q);
            json entry;
            entry["i"] = i;
            entry["holds"] = chk.holds;
            if (!chk.holds) entry["diff"] = chk.diff;
            checks.push_back(entry);
            all_ok = all_ok && chk.holds;
        }
        results["identity3"] = checks;
    }
    if (certificate) {
        ivf::LowerBoundCertificate cert = ivf::richman_certificate(q, l, g_degree);
        results["g_degree"] = cert.g_degree;
        results["g_invariant"] = cert.g_invariant;
        results["indecomposability_witness"] = cert.indecomposability_witness;
        results["beta_lower_from_engine"] = cert.beta_lower_from_engine;
        results["certified"] = cert.certified();
        all_ok = all_ok && cert.certified() && cert.beta_lower_from_engine >= l;
    }

    if (as_json) {
        emit_json("verify-alpha", all_ok ? "ok" : "failed", results, clock.ms());
    } else {
        std::cout << "alpha_" << q << ", " << l << " copies of V_2:\n";
        for (const auto& [key, value] : results.items())
            std::cout << "  " << key << ": " << value.dump() << "\n";
    }
    return all_ok ? kExitOk : 1;
}

int run_examples(bool list_only, bool corrupt, bool as_json) {
    Clock clock;
    std::vector<ivf::corpus::Item> items = ivf::corpus::build(corrupt);

    if (list_only) {
        json names = json::array();
        for (const auto& item : items) {
            names.push_back(item.name);
            if (!as_json) std::cout << item.name << "\n";
        }
        if (as_json) emit_json("examples", "ok", json{{"items", names}}, clock.ms());
        return kExitOk;
    }

    json report = json::array();
    std::string first_failure;
    for (const auto& item : items) {
        std::string msg;
        bool ok = item.run(msg);
        if (!ok && first_failure.empty()) first_failure = item.name;
        json entry;
        entry["name"] = item.name;
        entry["pass"] = ok;
        if (!ok) entry["detail"] = msg;
        report.push_back(entry);
        if (!as_json)
            std::cout << (ok ? "PASS" : "FAIL") << "  " << item.name
                      << (ok ? "" : "  (" + msg + ")") << "\n";
    }
    if (as_json)
        emit_json("examples", first_failure.empty() ? "ok" : "failed: " + first_failure,
                  json{{"items", report}}, clock.ms());
    else if (!first_failure.empty())
        std::cout << "first failure: " << first_failure << "\n";
    return first_failure.empty() ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-forge: invariant rings of finite group-scheme actions"};
    app.require_subcommand(1);

    std::string file;
    long long degree = 8;
    std::string method = "counting";
    long long q = 2, l = 1;
    bool as_json = false, override_caps = false;
    bool identity3 = false, certificate = false;
    bool list_only = false, corrupt = false;

    CLI::App* molien = app.add_subcommand("molien", "Molien series of an action file");
    molien->add_option("file", file, "action file (JSON)")->required();
    molien->add_option("--degree", degree, "expansion order D");
    molien->add_option("--method", method, "counting|charsum|both")
        ->check(CLI::IsMember({"counting", "charsum", "both"}));
    molien->add_flag("--json", as_json, "machine-readable output");
    molien->add_flag("--cap-override", override_caps, "ignore resource caps");

    CLI::App* beta = app.add_subcommand("beta", "minimal generators and beta bound");
    beta->add_option("file", file, "action file (JSON)")->required();
    beta->add_option("--degree", degree, "search limit D")->check(CLI::PositiveNumber);
    beta->add_flag("--json", as_json, "machine-readable output");
    beta->add_flag("--cap-override", override_caps, "ignore resource caps");

    CLI::App* verify = app.add_subcommand("verify-alpha", "alpha_q identities and certificates");
    verify->add_option("--q", q, "truncation order (prime power)")->required();
    verify->add_option("--l", l, "number of V_2 copies")->required();
    verify->add_flag("--identity3", identity3, "run the coaction identity checks");
    verify->add_flag("--certificate", certificate, "run the lower-bound certificate");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_flag("--cap-override", override_caps, "ignore resource caps");

    CLI::App* examples = app.add_subcommand("examples", "replay the bundled corpus");
    examples->add_flag("--list", list_only, "list item names without executing");
    examples->add_flag("--corrupt", corrupt, "negative control: corrupt one relation")
        ->group("");
    examples->add_flag("--json", as_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (molien->parsed()) return run_molien(file, degree, method, as_json, override_caps);
        if (beta->parsed()) return run_beta(file, degree, as_json, override_caps);
        if (verify->parsed())
            return run_verify_alpha(q, l, identity3, certificate, as_json, override_caps);
        if (examples->parsed()) return run_examples(list_only, corrupt, as_json);
    } catch (const ivf::action_file_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ivf::inapplicable_error& e) {
        std::cerr << "inapplicable method: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const ivf::resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const ivf::precondition_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ivf::invalid_field_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ivf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
