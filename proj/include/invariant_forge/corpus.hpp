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

#ifndef INVARIANT_FORGE_CORPUS_HPP
#define INVARIANT_FORGE_CORPUS_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "invariant_forge.hpp"

namespace invariant_forge {
namespace corpus {

/// The Z/2 subgroup of S_6 generated by (1,2)(3,4)(5,6), acting on six
/// variables over the given field.
inline PermutationAction s6_z2_action(const FieldSpec& field) {
    Permutation g = Permutation::identity(6);
    g.image = {1, 0, 3, 2, 5, 4};
    return PermutationAction(6, {g}, field);
}

/// The nine invariants of degree <= 2 of the Z/2 action on six variables:
/// three linear sums, three products within a pair, three paired cross terms.
inline std::vector<Polynomial> s6_z2_low_degree_invariants(const FieldSpec& field) {
    auto var = [&](int i) { return Polynomial::variable(field, 6, i - 1); };
    std::vector<Polynomial> f;
    f.push_back(var(1) + var(2));               // f_1
    f.push_back(var(3) + var(4));               // f_2
    f.push_back(var(5) + var(6));               // f_3
    f.push_back(var(1) * var(2));               // f_4
    f.push_back(var(3) * var(4));               // f_5
    f.push_back(var(5) * var(6));               // f_6
    f.push_back(var(1) * var(3) + var(2) * var(4)); // f_7
    f.push_back(var(1) * var(5) + var(2) * var(6)); // f_8
    f.push_back(var(3) * var(5) + var(4) * var(6)); // f_9
    return f;
}

/// The degree-3 invariant x1 x4 x5 + x2 x3 x6.
inline Polynomial s6_z2_cubic_invariant(const FieldSpec& field) {
    auto var = [&](int i) { return Polynomial::variable(field, 6, i - 1); };
    return var(1) * var(4) * var(5) + var(2) * var(3) * var(6);
}

struct Item {
    std::string name;
    std::function<bool(std::string&)> run; // fills a detail message on failure
};

/// The bundled regression corpus. `corrupt` flips a sign in the cubic
/// relation item, as a negative control.
inline std::vector<Item> build(bool corrupt = false) {
    std::vector<Item> items;

    for (long long n : {2, 3, 5}) {
        items.push_back({"mu" + std::to_string(n) + "-molien", [n](std::string& msg) {
            DiagonalizableAction a({n}, {{1}}, FieldSpec::rational());
            const long long D = 12;
            MolienCoefficients counting = molien_by_counting(a, D);
            CharacterSumSeries charsum = molien_charsum(a, D);
            for (long long d = 0; d <= D; ++d) {
                long long expect = (d % n == 0) ? 1 : 0;
                if (counting.coeffs[static_cast<size_t>(d)] != expect ||
                    charsum.coeffs[static_cast<size_t>(d)] != expect) {
                    msg = "degree " + std::to_string(d) + " differs from 1/(1-t^n)";
                    return false;
                }
            }
            return true;
        }});
    }

    items.push_back({"mu3-w12-beta", [](std::string& msg) {
        DiagonalizableAction a({3}, {{1}, {2}}, FieldSpec::rational());
        BetaCertificate c = minimal_generators(a, 3);
        std::vector<long long> expect{2, 3, 3}; // xy, x^3, y^3
        if (c.generator_degrees != expect || c.beta_lower != 3 || !c.certified_complete) {
            msg = "unexpected generator degrees";
            return false;
        }
        return true;
    }});

    items.push_back({"s6-z2-beta-rational", [](std::string& msg) {
        BetaCertificate c = minimal_generators(s6_z2_action(FieldSpec::rational()), 2);
        if (c.beta_lower != 2 || !c.certified_complete) {
            msg = "expected beta = 2 certified over Q";
            return false;
        }
        return true;
    }});

    items.push_back({"s6-z2-cubic-relation", [corrupt](std::string& msg) {
        FieldSpec field = FieldSpec::rational();
        std::vector<Polynomial> f = s6_z2_low_degree_invariants(field);
        Polynomial cubic = s6_z2_cubic_invariant(field);
        Polynomial lhs = cubic * Scalar::from_int(field, 2);
        Polynomial rhs = f[0] * f[1] * f[2] - f[0] * f[8] + f[1] * f[7] - f[2] * f[6];
        if (corrupt) rhs = rhs + f[0] * f[8] + f[0] * f[8]; // sign flip on f_1 f_9
        if (lhs != rhs) {
            msg = "2f != f1 f2 f3 - f1 f9 + f2 f8 - f3 f7";
            return false;
        }
        return true;
    }});

    items.push_back({"s6-z2-gf2-indecomposable", [](std::string& msg) {
        FieldSpec gf2 = FieldSpec::prime(2);
        PermutationAction a = s6_z2_action(gf2);
        Polynomial cubic = s6_z2_cubic_invariant(gf2);
        if (!is_invariant(a, cubic)) {
            msg = "cubic is not invariant over GF(2)";
            return false;
        }
        ActionDescriptor action = a;
        std::vector<Polynomial> b1 = invariant_basis(action, 1);
        std::vector<Polynomial> b2 = invariant_basis(action, 2);
        std::vector<Polynomial> degree3;
        for (const auto& u : b1) {
            for (const auto& v : b2) degree3.push_back(u * v);
            for (const auto& v : b1)
                for (const auto& w : b1) degree3.push_back(u * v * w);
        }
        if (in_span(cubic, degree3)) {
            msg = "cubic unexpectedly expressible by degree <= 2 invariants";
            return false;
        }
        if (minimal_generators(action, 3).beta_lower < 3) {
            msg = "engine does not report beta >= 3";
            return false;
        }
        return true;
    }});

    items.push_back({"s6-z2-gf2-molien", [](std::string& msg) {
        PermutationAction a = s6_z2_action(FieldSpec::prime(2));
        MolienCoefficients counting = molien_by_counting(a, 6);
        CharacterSumSeries charsum = molien_charsum(ActionDescriptor{a}, 6);
        if (!charsum.abstract_only) {
            msg = "charsum should be flagged abstract-only in characteristic 2";
            return false;
        }
        if (counting.coeffs != charsum.coeffs) {
            msg = "GF(2) counting differs from abstract series";
            return false;
        }
        return true;
    }});

    for (auto [q, l] : std::vector<std::pair<long long, long long>>{{2, 2}, {2, 3}, {3, 2}}) {
        std::ostringstream name;
        name << "alpha-q" << q << "-l" << l;
        items.push_back({name.str(), [q, l](std::string& msg) {
            for (long long i = 0; i < q; ++i) {
                IdentityCheck chk = verify_identity3(l, i, q);
                if (!chk.holds) {
                    msg = "identity fails at i = " + std::to_string(i) + ": " + chk.diff;
                    return false;
                }
            }
            LowerBoundCertificate cert = richman_certificate(q, l, l * (q - 1));
            if (!cert.certified() || cert.beta_lower_from_engine < l) {
                msg = "lower-bound certificate failed";
                return false;
            }
            return true;
        }});
    }

    return items;
}

} // namespace corpus
} // namespace invariant_forge

#endif
