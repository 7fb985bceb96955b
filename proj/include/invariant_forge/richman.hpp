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

#ifndef INVARIANT_FORGE_RICHMAN_HPP
#define INVARIANT_FORGE_RICHMAN_HPP

#include <functional>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace invariant_forge {

/// The standard l-copy alpha_q setup: 2l variables x_1,y_1,...,x_l,y_l and the
/// block-unipotent coaction.
struct RichmanInstance {
    long long p = 2;
    long long q = 2;
    long long l = 1;
    AlphaCoaction action;

    RichmanInstance(long long q_, long long l_)
        : q(q_), l(l_), action(standard_alpha_rep(q_, l_)) {
        p = action.p;
    }
};

/// f_{l,i} = sum over compositions i_1+...+i_l = i (each 0 <= i_j <= q-1) of
/// prod_j x_j^{i_j} y_j^{q-1-i_j}. Homogeneous of total degree l(q-1) and of
/// degree q-1 in each pair {x_j, y_j}.
inline Polynomial f_poly(long long l, long long i, long long q) {
    if (l < 1) throw precondition_error("f_poly: l must be positive");
    if (i < 0 || i > q - 1) throw precondition_error("f_poly: i out of range");
    long long p = 0;
    for (long long cand = 2; cand <= q; ++cand)
        if (is_prime(cand) && q % cand == 0) {
            p = cand;
            break;
        }
    FieldSpec field = FieldSpec::prime(p);
    const int n = static_cast<int>(2 * l);
    Polynomial out(field, n);

    std::vector<int> parts(static_cast<size_t>(l), 0);
    std::function<void(long long, long long)> rec = [&](long long pos, long long rem) {
        if (pos == l - 1) {
            if (rem > q - 1) return;
            parts[static_cast<size_t>(pos)] = static_cast<int>(rem);
            std::vector<int> exps(static_cast<size_t>(n), 0);
            for (long long j = 0; j < l; ++j) {
                exps[static_cast<size_t>(2 * j)] = parts[static_cast<size_t>(j)];
                exps[static_cast<size_t>(2 * j + 1)] =
                    static_cast<int>(q - 1) - parts[static_cast<size_t>(j)];
            }
            out.add_term(Monomial(std::move(exps)), Scalar::one(field));
            return;
        }
        for (long long v = 0; v <= std::min(rem, q - 1); ++v) {
            parts[static_cast<size_t>(pos)] = static_cast<int>(v);
            rec(pos + 1, rem - v);
        }
    };
    rec(0, i);
    return out;
}

/// g_l = f_{l, q-1}, the invariant witnessing a generator of degree >= l.
inline Polynomial g_poly(long long l, long long q) { return f_poly(l, q - 1, q); }

struct IdentityCheck {
    bool holds = true;
    std::string diff; // empty when the identity holds
};

/// Symbolic check of f_{l,i} = sum_{j=i}^{q-1} C(j,i) t^{j-i} coact(f_{l,j})
/// inside GF(p)[x,y][t]/(t^q), with C(j,i) taken mod p.
inline IdentityCheck verify_identity3(long long l, long long i, long long q) {
    AlphaCoaction action = standard_alpha_rep(q, l);
    const FieldSpec& field = action.field;

    TruncatedPoly rhs(q, field, action.nvars);
    for (long long j = i; j <= q - 1; ++j) {
        Scalar c = lucas_binom(j, i, action.p);
        if (c.is_zero()) continue;
        TruncatedPoly img = coact(action, f_poly(l, j, q));
        // multiply by c * t^{j-i}
        for (long long m = q - 1; m >= 0; --m) {
            long long target = m + (j - i);
            if (target < q) rhs.coeff(target) = rhs.coeff(target) + img.coeff(m) * c;
        }
    }
    TruncatedPoly lhs = TruncatedPoly::embed(q, f_poly(l, i, q));

    IdentityCheck out;
    if (lhs != rhs) {
        out.holds = false;
        for (long long m = 0; m < q; ++m) {
            Polynomial d = lhs.coeff(m) - rhs.coeff(m);
            if (!d.is_zero()) {
                out.diff = "t^" + std::to_string(m) + ": " + d.to_string();
                break;
            }
        }
    }
    return out;
}

struct LowerBoundCertificate {
    long long q = 0;
    long long l = 0;
    long long g_degree = 0; // l(q-1)
    bool g_invariant = false;
    bool indecomposability_witness = false; // g_l outside the algebra generated in degrees <= l-1
    long long beta_lower_from_engine = 0;
    bool certified() const { return g_invariant && indecomposability_witness; }
};

/// Certify beta(alpha_q, l V_2) >= l:
///  (a) g_l is invariant,
///  (b,c) g_l is not in the degree-l(q-1) piece of the subalgebra generated by
///        invariants of degree <= l-1,
///  (d) cross-check against the graded-Nakayama engine.
inline LowerBoundCertificate richman_certificate(long long q, long long l,
                                                 long long engine_limit) {
    const long long g_degree = l * (q - 1);
    if (engine_limit < g_degree)
        throw precondition_error("richman_certificate: engine_limit below l(q-1)");

    RichmanInstance inst(q, l);
    LowerBoundCertificate cert;
    cert.q = q;
    cert.l = l;
    cert.g_degree = g_degree;

    Polynomial g = g_poly(l, q);
    cert.g_invariant = is_invariant(inst.action, g);

    ActionDescriptor action = inst.action;
    GradedInvariantBasis basis = graded_invariant_basis(action, g_degree);

    // graded pieces of the subalgebra generated by invariants of degree <= l-1
    std::vector<std::vector<Polynomial>> sub(static_cast<size_t>(g_degree) + 1);
    sub[0] = {Polynomial::one(inst.action.field, inst.action.nvars)};
    for (long long d = 1; d <= g_degree; ++d) {
        std::vector<Polynomial> span;
        for (long long a = 1; a <= std::min<long long>(d, l - 1); ++a)
            for (const auto& b : basis.per_degree.at(a))
                for (const auto& c : sub[static_cast<size_t>(d - a)]) span.push_back(b * c);
        sub[static_cast<size_t>(d)] = echelon_normalize(span);
    }
    cert.indecomposability_witness = !in_span(g, sub[static_cast<size_t>(g_degree)]);

    cert.beta_lower_from_engine = minimal_generators(action, engine_limit).beta_lower;
    return cert;
}

} // namespace invariant_forge

#endif
