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

#ifndef INVARIANT_FORGE_INVARIANTS_HPP
#define INVARIANT_FORGE_INVARIANTS_HPP

#include <map>
#include <string>
#include <vector>

#include "actions.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace invariant_forge {

// ---------------------------------------------------------------------------
// Span helpers

/// Union of monomials appearing in a list of polynomials, in graded-lex order.
inline std::vector<Monomial> monomial_support(const std::vector<Polynomial>& polys) {
    std::map<Monomial, int, GradedLexLess> idx;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms()) idx.emplace(m, 0);
    std::vector<Monomial> out;
    out.reserve(idx.size());
    for (const auto& [m, i] : idx) out.push_back(m);
    return out;
}

inline Matrix coefficient_matrix(const std::vector<Polynomial>& polys,
                                 const std::vector<Monomial>& support,
                                 const FieldSpec& field) {
    std::map<Monomial, size_t, GradedLexLess> idx;
    for (size_t i = 0; i < support.size(); ++i) idx.emplace(support[i], i);
    Matrix rows;
    rows.reserve(polys.size());
    for (const auto& f : polys) {
        Vector row(support.size(), Scalar::zero(field));
        for (const auto& [m, c] : f.terms()) row[idx.at(m)] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Canonical reduced echelon basis of the span of the given polynomials.
inline std::vector<Polynomial> echelon_normalize(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return {};
    const FieldSpec& f = polys[0].field();
    const int n = polys[0].nvars();
    std::vector<Monomial> support = monomial_support(polys);
    Matrix rows = coefficient_matrix(polys, support, f);
    rref(rows);
    std::vector<Polynomial> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        Polynomial g(f, n);
        for (size_t j = 0; j < support.size(); ++j)
            if (!row[j].is_zero()) g.add_term(support[j], row[j]);
        out.push_back(std::move(g));
    }
    return out;
}

inline size_t span_dimension(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return 0;
    return rank(coefficient_matrix(polys, monomial_support(polys), polys[0].field()));
}

/// True when f lies in the span of the given polynomials.
inline bool in_span(const Polynomial& f, const std::vector<Polynomial>& span) {
    if (f.is_zero()) return true;
    std::vector<Polynomial> with = span;
    with.push_back(f);
    return span_dimension(with) == span_dimension(span);
}

// ---------------------------------------------------------------------------
// Invariant bases

/// Degree-d monomials with zero weight vector, in graded-lex order.
inline std::vector<Monomial> invariant_monomials(const DiagonalizableAction& a, long long d) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(a.nvars, d))
        if (is_weight_zero(monomial_weight(a, m))) out.push_back(m);
    return out;
}

namespace detail {

inline std::vector<Polynomial> vectors_to_polys(const std::vector<Vector>& vecs,
                                                const std::vector<Monomial>& basis,
                                                const FieldSpec& field, int nvars) {
    std::vector<Polynomial> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) {
        Polynomial f(field, nvars);
        for (size_t k = 0; k < basis.size(); ++k)
            if (!v[k].is_zero()) f.add_term(basis[k], v[k]);
        out.push_back(std::move(f));
    }
    return out;
}

/// Rows expressing "sigma . f = f" for unknown coefficients on `monos`.
/// Requires sigma to permute `monos` (true for any degree-d monomial space,
/// and for diagonal-invariant monomials when the actions commute).
inline void append_permutation_rows(Matrix& rows, const std::vector<Monomial>& monos,
                                    const PermutationAction& a, const FieldSpec& field) {
    std::map<Monomial, size_t, GradedLexLess> idx;
    for (size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
    for (const auto& sigma : a.generators) {
        Matrix block(monos.size(), Vector(monos.size(), Scalar::zero(field)));
        for (size_t k = 0; k < monos.size(); ++k) {
            std::vector<int> e(monos[k].exps.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[static_cast<size_t>(sigma(static_cast<int>(i)))] = monos[k].exps[i];
            size_t img = idx.at(Monomial(std::move(e)));
            block[img][k] = block[img][k] + Scalar::one(field);
            block[k][k] = block[k][k] - Scalar::one(field);
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
}

/// Rows expressing "every positive t-coefficient of coact(f) vanishes".
inline Matrix alpha_invariance_rows(const AlphaCoaction& a,
                                    const std::vector<Monomial>& monos) {
    const FieldSpec& field = a.field;
    std::vector<TruncatedPoly> images;
    images.reserve(monos.size());
    for (const auto& m : monos)
        images.push_back(coact(a, Polynomial::monomial(field, m, Scalar::one(field))));

    Matrix rows;
    for (long long t = 1; t < a.q; ++t) {
        std::map<Monomial, size_t, GradedLexLess> row_of;
        std::vector<Vector> block;
        for (size_t k = 0; k < monos.size(); ++k) {
            for (const auto& [mu, c] : images[k].coeff(t).terms()) {
                auto it = row_of.find(mu);
                if (it == row_of.end()) {
                    it = row_of.emplace(mu, block.size()).first;
                    block.emplace_back(monos.size(), Scalar::zero(field));
                }
                block[it->second][k] = block[it->second][k] + c;
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace detail

/// Basis of the degree-d graded piece of the invariant ring, as a canonical
/// reduced echelon list with respect to graded-lex order.
inline std::vector<Polynomial> invariant_basis(const ActionDescriptor& action, long long d) {
    const FieldSpec field = action_field(action);
    const int n = action_nvars(action);
    if (d < 0) throw precondition_error("invariant_basis: negative degree");
    if (d == 0) return {Polynomial::one(field, n)};

    if (const auto* diag = std::get_if<DiagonalizableAction>(&action)) {
        std::vector<Polynomial> out;
        for (const auto& m : invariant_monomials(*diag, d))
            out.push_back(Polynomial::monomial(field, m, Scalar::one(field)));
        return out;
    }

    std::vector<Monomial> monos = monomials_of_degree(n, d);
    Matrix rows;

    if (const auto* perm = std::get_if<PermutationAction>(&action)) {
        detail::append_permutation_rows(rows, monos, *perm, field);
    } else if (const auto* alpha = std::get_if<AlphaCoaction>(&action)) {
        rows = detail::alpha_invariance_rows(*alpha, monos);
    } else if (const auto* prod = std::get_if<ProductAction>(&action)) {
        // one-shot intersection: diagonal conditions kill non-invariant
        // monomials, permutation conditions act on the full space
        for (size_t k = 0; k < monos.size(); ++k) {
            if (is_weight_zero(monomial_weight(prod->diag, monos[k]))) continue;
            Vector row(monos.size(), Scalar::zero(field));
            row[k] = Scalar::one(field);
            rows.push_back(std::move(row));
        }
        detail::append_permutation_rows(rows, monos, prod->perm, field);
    }

    std::vector<Vector> kernel = kernel_basis(std::move(rows), monos.size(), field);
    return echelon_normalize(detail::vectors_to_polys(kernel, monos, field, n));
}

// ---------------------------------------------------------------------------
// Reynolds operators

/// Diagonalizable Reynolds: delete every monomial of nonzero weight.
inline Polynomial reynolds(const DiagonalizableAction& a, const Polynomial& f) {
    if (f.field() != a.field) throw field_mismatch_error("reynolds: field mismatch");
    Polynomial r(f.field(), f.nvars());
    for (const auto& [m, c] : f.terms())
        if (is_weight_zero(monomial_weight(a, m))) r.add_term(m, c);
    return r;
}

/// Permutation Reynolds: group average. Requires |G| invertible in the field.
inline Polynomial reynolds(const PermutationAction& a, const Polynomial& f) {
    if (f.field() != a.field) throw field_mismatch_error("reynolds: field mismatch");
    long long p = a.field.characteristic();
    if (p != 0 && a.order() % p == 0)
        throw not_linearly_reductive_error("reynolds: characteristic divides group order");
    Polynomial sum(f.field(), f.nvars());
    for (const auto& sigma : a.elements) sum = sum + permute_polynomial(a, sigma, f);
    return sum * Scalar::from_int(a.field, a.order()).inverse();
}

// ---------------------------------------------------------------------------
// Constructive Noether splitting

/// Factor an invariant monomial into invariant factors of degree <= |G|,
/// by pigeonhole on prefix sums in Z/m_1 + ... + Z/m_s: among the first
/// |G| + 1 prefix sums two coincide, so a consecutive block of variables sums
/// to zero and splits off.
inline std::vector<Monomial> split_monomial(const DiagonalizableAction& a, const Monomial& m) {
    if (!is_weight_zero(monomial_weight(a, m)))
        throw precondition_error("split_monomial: monomial is not invariant");
    const long long order = a.order();

    std::vector<Monomial> factors;
    Monomial rest = m;
    while (rest.degree() > order) {
        // sequence of variable indices with multiplicity
        std::vector<int> seq;
        for (int i = 0; i < a.nvars; ++i)
            for (int c = 0; c < rest.exps[static_cast<size_t>(i)]; ++c) seq.push_back(i);

        // prefix sums; |G| + 1 of them land in a group of size |G|
        std::map<std::vector<long long>, size_t> seen;
        std::vector<long long> acc(a.moduli.size(), 0);
        seen.emplace(acc, 0);
        size_t lo = 0, hi = 0;
        for (size_t k = 1; k <= static_cast<size_t>(order); ++k) {
            int var = seq[k - 1];
            for (size_t j = 0; j < a.moduli.size(); ++j)
                acc[j] = (acc[j] + a.weights[static_cast<size_t>(var)][j]) % a.moduli[j];
            auto [it, fresh] = seen.emplace(acc, k);
            if (!fresh) {
                lo = it->second;
                hi = k;
                break;
            }
        }
        if (hi == 0) throw error("split_monomial: pigeonhole failed"); // unreachable

        Monomial factor = Monomial::constant(a.nvars);
        for (size_t k = lo; k < hi; ++k) ++factor.exps[static_cast<size_t>(seq[k])];
        factors.push_back(factor);
        for (int i = 0; i < a.nvars; ++i) rest.exps[static_cast<size_t>(i)] -= factor.exps[static_cast<size_t>(i)];
    }
    factors.push_back(rest);
    return factors;
}

// ---------------------------------------------------------------------------
// Minimal generators (graded Nakayama)

struct GradedInvariantBasis {
    std::map<long long, std::vector<Polynomial>> per_degree;
    long long max_degree = 0;
};

/// Per-degree invariant bases up to D; degrees computed independently.
inline GradedInvariantBasis graded_invariant_basis(const ActionDescriptor& action, long long D) {
    GradedInvariantBasis g;
    g.max_degree = D;
    std::vector<std::vector<Polynomial>> slots(static_cast<size_t>(D) + 1);
    parallel_for(static_cast<size_t>(D) + 1,
                 [&](size_t d) { slots[d] = invariant_basis(action, static_cast<long long>(d)); });
    for (long long d = 0; d <= D; ++d) g.per_degree[d] = std::move(slots[static_cast<size_t>(d)]);
    return g;
}

struct BetaCertificate {
    std::vector<long long> generator_degrees; // with multiplicity, ascending
    long long beta_lower = 0;
    bool certified_complete = false;
    std::string certification_reason;
    long long search_limit = 0;
};

namespace detail {

/// Is the action of linearly-reductive type, and what is |G|?
/// (diagonalizable always; permutation when char does not divide the order;
/// commuting products of these). Alpha actions never qualify.
inline std::pair<bool, long long> linear_reductivity(const ActionDescriptor& action) {
    if (const auto* d = std::get_if<DiagonalizableAction>(&action)) return {true, d->order()};
    if (const auto* p = std::get_if<PermutationAction>(&action)) {
        long long c = p->field.characteristic();
        return {c == 0 || p->order() % c != 0, p->order()};
    }
    if (const auto* pr = std::get_if<ProductAction>(&action)) {
        long long c = pr->field().characteristic();
        return {c == 0 || pr->perm.order() % c != 0, pr->order()};
    }
    return {false, 0};
}

} // namespace detail

/// Graded Nakayama: in each degree d, the number of new minimal generators is
/// dim S^G_d minus the dimension of the span of products of lower-degree
/// basis elements.
inline BetaCertificate minimal_generators(const ActionDescriptor& action, long long D) {
    if (D < 1) throw precondition_error("minimal_generators: D must be >= 1");
    BetaCertificate cert;
    cert.search_limit = D;

    std::vector<std::vector<Polynomial>> basis(static_cast<size_t>(D) + 1);
    parallel_for(static_cast<size_t>(D) + 1,
                 [&](size_t d) { basis[d] = invariant_basis(action, static_cast<long long>(d)); });

    for (long long d = 1; d <= D; ++d) {
        std::vector<Polynomial> products;
        for (long long a = 1; a * 2 <= d; ++a) {
            for (const auto& b : basis[static_cast<size_t>(a)])
                for (const auto& c : basis[static_cast<size_t>(d - a)]) products.push_back(b * c);
        }
        size_t decomposable = span_dimension(products);
        size_t dim = basis[static_cast<size_t>(d)].size();
        for (size_t k = decomposable; k < dim; ++k) cert.generator_degrees.push_back(d);
        if (dim > decomposable) cert.beta_lower = d;
    }

    auto [reductive, order] = detail::linear_reductivity(action);
    if (reductive && D >= order) {
        cert.certified_complete = true;
        cert.certification_reason =
            "Noether bound |G| = " + std::to_string(order) + " <= search limit";
    } else if (!reductive) {
        cert.certification_reason = "action not of linearly reductive type; lower bound only";
    } else {
        cert.certification_reason =
            "search limit below |G| = " + std::to_string(order) + "; lower bound only";
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Two-step invariants for products

/// Invariants of the product computed in two stages: first the span of
/// diagonal-invariant monomials, then the permutation invariants inside it.
/// Must coincide with the one-shot intersection.
inline std::vector<Polynomial> two_step_invariants(const ProductAction& action, long long d) {
    const FieldSpec& field = action.field();
    if (d == 0) return {Polynomial::one(field, action.nvars())};
    std::vector<Monomial> monos = invariant_monomials(action.diag, d);
    if (monos.empty()) return {};
    Matrix rows;
    detail::append_permutation_rows(rows, monos, action.perm, field);
    std::vector<Vector> kernel = kernel_basis(std::move(rows), monos.size(), field);
    return echelon_normalize(
        detail::vectors_to_polys(kernel, monos, field, action.nvars()));
}

} // namespace invariant_forge

#endif
