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

#ifndef INVARIANT_FORGE_ACTION_IO_HPP
#define INVARIANT_FORGE_ACTION_IO_HPP

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "actions.hpp"

namespace invariant_forge {

/// Action-file validation failure, carrying a JSON pointer to the offending
/// field.
struct action_file_error : error {
    std::string pointer;
    action_file_error(std::string ptr, const std::string& msg)
        : error(ptr + ": " + msg), pointer(std::move(ptr)) {}
};

namespace io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Cycle notation

/// Parse one-line cycle notation with 1-based points: "(1,2)(3,4)(5,6)", "()".
inline Permutation parse_cycles(const std::string& text, int nvars,
                                const std::string& pointer) {
    Permutation p = Permutation::identity(nvars);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw action_file_error(pointer, "expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw action_file_error(pointer, "expected point in cycle notation");
            int point = std::stoi(text.substr(start, pos - start));
            if (point < 1 || point > nvars)
                throw action_file_error(pointer,
                                        "point " + std::to_string(point) + " out of range");
            cycle.push_back(point - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos == text.size())
            throw action_file_error(pointer, "unterminated cycle");
        ++pos; // ')'
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (!cycle.empty() && p.image[static_cast<size_t>(from)] != from)
                throw action_file_error(pointer, "point repeated across cycles");
            p.image[static_cast<size_t>(from)] = to;
        }
        skip_ws();
    }
    return p;
}

// ---------------------------------------------------------------------------
// Polynomial strings (for explicit coaction matrices)

/// Parse "2*x1*x2^3 + x3 - 1" style strings. Variables are x1..xn.
inline Polynomial parse_polynomial(const FieldSpec& field, int nvars, const std::string& text,
                                   const std::string& pointer) {
    Polynomial out(field, nvars);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == text.size()) throw action_file_error(pointer, "empty polynomial string");

    while (pos < text.size()) {
        long long sign = 1;
        skip_ws();
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        }
        mpq_class coeff(1);
        Monomial mono = Monomial::constant(nvars);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff *= mpq_class(text.substr(start, pos - start));
                coeff.canonicalize();
                saw_factor = true;
            } else if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == start) throw action_file_error(pointer, "variable index expected");
                int var = std::stoi(text.substr(start, pos - start));
                if (var < 1 || var > nvars)
                    throw action_file_error(pointer, "variable x" + std::to_string(var) +
                                                         " out of range");
                int exp = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    size_t estart = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (pos == estart) throw action_file_error(pointer, "exponent expected");
                    exp = std::stoi(text.substr(estart, pos - estart));
                }
                mono.exps[static_cast<size_t>(var - 1)] += exp;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) throw action_file_error(pointer, "malformed term");
        out.add_term(mono, Scalar::from_rational(field, static_cast<long>(sign) * coeff));
        skip_ws();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

inline FieldSpec parse_field(const json& doc, const std::string& pointer) {
    if (!doc.is_object() || !doc.contains("char") || !doc["char"].is_number_integer())
        throw action_file_error(pointer + "/char", "field needs an integer 'char'");
    long long c = doc["char"].get<long long>();
    if (doc.contains("cyclotomic")) {
        if (c != 0)
            throw action_file_error(pointer + "/cyclotomic",
                                    "cyclotomic fields have characteristic zero");
        if (!doc["cyclotomic"].is_number_integer() || doc["cyclotomic"].get<long long>() < 1)
            throw action_file_error(pointer + "/cyclotomic", "order must be a positive integer");
        return FieldSpec::cyclotomic(doc["cyclotomic"].get<long long>());
    }
    if (c == 0) return FieldSpec::rational();
    try {
        return FieldSpec::prime(c);
    } catch (const invalid_field_error& e) {
        throw action_file_error(pointer + "/char", e.what());
    }
}

inline DiagonalizableAction parse_diagonalizable(const json& doc, const FieldSpec& field,
                                                 const std::string& pointer) {
    if (!doc.contains("moduli") || !doc["moduli"].is_array())
        throw action_file_error(pointer + "/moduli", "array of integers required");
    if (!doc.contains("weights") || !doc["weights"].is_array())
        throw action_file_error(pointer + "/weights", "matrix required");
    std::vector<long long> moduli;
    for (size_t j = 0; j < doc["moduli"].size(); ++j) {
        const auto& v = doc["moduli"][j];
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw action_file_error(pointer + "/moduli/" + std::to_string(j),
                                    "modulus must be an integer >= 1");
        moduli.push_back(v.get<long long>());
    }
    std::vector<std::vector<long long>> weights;
    for (size_t i = 0; i < doc["weights"].size(); ++i) {
        const auto& row = doc["weights"][i];
        if (!row.is_array() || row.size() != moduli.size())
            throw action_file_error(pointer + "/weights/" + std::to_string(i),
                                    "row length must match moduli count");
        std::vector<long long> w;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw action_file_error(pointer + "/weights/" + std::to_string(i),
                                        "weights must be integers");
            w.push_back(v.get<long long>());
        }
        weights.push_back(std::move(w));
    }
    bool infinitesimal = doc.value("infinitesimal_mu", false);
    return DiagonalizableAction(std::move(moduli), std::move(weights), field, infinitesimal);
}

inline PermutationAction parse_permutation(const json& doc, const FieldSpec& field,
                                           const std::string& pointer) {
    if (!doc.contains("nvars") || !doc["nvars"].is_number_integer() ||
        doc["nvars"].get<int>() < 0)
        throw action_file_error(pointer + "/nvars", "non-negative integer required");
    int nvars = doc["nvars"].get<int>();
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw action_file_error(pointer + "/generators", "array of cycle strings required");
    std::vector<Permutation> gens;
    for (size_t i = 0; i < doc["generators"].size(); ++i) {
        const auto& g = doc["generators"][i];
        std::string gp = pointer + "/generators/" + std::to_string(i);
        if (!g.is_string()) throw action_file_error(gp, "cycle string required");
        gens.push_back(parse_cycles(g.get<std::string>(), nvars, gp));
    }
    return PermutationAction(nvars, std::move(gens), field);
}

inline AlphaCoaction parse_alpha(const json& doc, const FieldSpec& field,
                                 const std::string& pointer) {
    if (field.kind != FieldSpec::Kind::prime)
        throw action_file_error(pointer + "/field/char",
                                "alpha actions require a prime field");
    long long p = field.p;
    if (!doc.contains("q") || !doc["q"].is_number_integer())
        throw action_file_error(pointer + "/q", "integer q required");
    long long q = doc["q"].get<long long>();
    long long r = q;
    while (r > 1 && r % p == 0) r /= p;
    if (q < 2 || r != 1)
        throw action_file_error(pointer + "/q", "q must be a power of the characteristic");

    if (doc.contains("l")) {
        if (!doc["l"].is_number_integer() || doc["l"].get<long long>() < 1)
            throw action_file_error(pointer + "/l", "positive integer required");
        return standard_alpha_rep(q, doc["l"].get<long long>());
    }

    if (!doc.contains("matrix") || !doc["matrix"].is_array())
        throw action_file_error(pointer + "/matrix", "give either 'l' or an explicit matrix");
    const auto& mat = doc["matrix"];
    int n = static_cast<int>(mat.size());
    std::vector<std::vector<std::vector<Scalar>>> entries(
        static_cast<size_t>(n),
        std::vector<std::vector<Scalar>>(static_cast<size_t>(n),
                                         std::vector<Scalar>(static_cast<size_t>(q),
                                                             Scalar::zero(field))));
    for (int j = 0; j < n; ++j) {
        const auto& row = mat[static_cast<size_t>(j)];
        std::string rp = pointer + "/matrix/" + std::to_string(j);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw action_file_error(rp, "matrix must be square");
        for (int i = 0; i < n; ++i) {
            const auto& entry = row[static_cast<size_t>(i)];
            std::string ep = rp + "/" + std::to_string(i);
            if (!entry.is_object())
                throw action_file_error(ep, "entry must map t-powers to scalars");
            for (const auto& [key, val] : entry.items()) {
                long long tpow;
                try {
                    tpow = std::stoll(key);
                } catch (...) {
                    throw action_file_error(ep + "/" + key, "t-power must be an integer key");
                }
                if (tpow < 0 || tpow >= q)
                    throw action_file_error(ep + "/" + key, "t-power out of range");
                if (!val.is_string())
                    throw action_file_error(ep + "/" + key, "scalar string required");
                Polynomial c = parse_polynomial(field, 0, val.get<std::string>(), ep + "/" + key);
                entries[static_cast<size_t>(j)][static_cast<size_t>(i)]
                       [static_cast<size_t>(tpow)] =
                           c.coefficient(Monomial::constant(0));
            }
        }
    }
    return AlphaCoaction(p, q, n, std::move(entries));
}

inline ActionDescriptor parse_action(const json& doc, const std::string& pointer = "") {
    if (!doc.is_object()) throw action_file_error(pointer, "action file must be an object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw action_file_error(pointer + "/kind", "string kind required");
    if (!doc.contains("field"))
        throw action_file_error(pointer + "/field", "field object required");
    FieldSpec field = parse_field(doc["field"], pointer + "/field");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "diagonalizable") return parse_diagonalizable(doc, field, pointer);
    if (kind == "permutation") return parse_permutation(doc, field, pointer);
    if (kind == "alpha") return parse_alpha(doc, field, pointer);
    if (kind == "product") {
        if (!doc.contains("diagonalizable"))
            throw action_file_error(pointer + "/diagonalizable", "diagonal part required");
        if (!doc.contains("permutation"))
            throw action_file_error(pointer + "/permutation", "permutation part required");
        DiagonalizableAction d =
            parse_diagonalizable(doc["diagonalizable"], field, pointer + "/diagonalizable");
        PermutationAction p =
            parse_permutation(doc["permutation"], field, pointer + "/permutation");
        try {
            return ProductAction(std::move(d), std::move(p));
        } catch (const invalid_product_error& e) {
            throw action_file_error(pointer, e.what());
        }
    }
    throw action_file_error(pointer + "/kind", "unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Serialization (canonical form)

inline json serialize_field(const FieldSpec& f) {
    json doc;
    doc["char"] = f.characteristic();
    if (f.kind == FieldSpec::Kind::cyclotomic) doc["cyclotomic"] = f.n;
    return doc;
}

inline json serialize_action(const ActionDescriptor& action) {
    json doc;
    doc["field"] = serialize_field(action_field(action));
    if (const auto* d = std::get_if<DiagonalizableAction>(&action)) {
        doc["kind"] = "diagonalizable";
        doc["moduli"] = d->moduli;
        doc["weights"] = d->weights;
        if (d->infinitesimal_mu) doc["infinitesimal_mu"] = true;
    } else if (const auto* p = std::get_if<PermutationAction>(&action)) {
        doc["kind"] = "permutation";
        doc["nvars"] = p->nvars;
        json gens = json::array();
        for (const auto& g : p->generators) gens.push_back(g.to_cycle_string());
        doc["generators"] = gens;
    } else if (const auto* a = std::get_if<AlphaCoaction>(&action)) {
        doc["kind"] = "alpha";
        doc["q"] = a->q;
        json mat = json::array();
        for (int j = 0; j < a->nvars; ++j) {
            json row = json::array();
            for (int i = 0; i < a->nvars; ++i) {
                json entry = json::object();
                for (long long m = 0; m < a->q; ++m) {
                    const Scalar& c = a->matrix[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                               [static_cast<size_t>(m)];
                    if (!c.is_zero()) entry[std::to_string(m)] = c.to_string();
                }
                row.push_back(entry);
            }
            mat.push_back(row);
        }
        doc["matrix"] = mat;
    } else if (const auto* pr = std::get_if<ProductAction>(&action)) {
        doc["kind"] = "product";
        json dd;
        dd["moduli"] = pr->diag.moduli;
        dd["weights"] = pr->diag.weights;
        doc["diagonalizable"] = dd;
        json pp;
        pp["nvars"] = pr->perm.nvars;
        json gens = json::array();
        for (const auto& g : pr->perm.generators) gens.push_back(g.to_cycle_string());
        pp["generators"] = gens;
        doc["permutation"] = pp;
    }
    return doc;
}

} // namespace io
} // namespace invariant_forge

#endif
