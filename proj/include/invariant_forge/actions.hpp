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

#ifndef INVARIANT_FORGE_ACTIONS_HPP
#define INVARIANT_FORGE_ACTIONS_HPP

#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "binomial.hpp"
#include "polynomial.hpp"

namespace invariant_forge {

// ---------------------------------------------------------------------------
// Permutations

/// Permutation of {0,...,n-1} stored as the image table.
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n) {
        Permutation p;
        p.image.resize(n);
        std::iota(p.image.begin(), p.image.end(), 0);
        return p;
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image.at(i); }

    Permutation compose(const Permutation& o) const { // (this o o)(i) = this(o(i))
        Permutation r;
        r.image.resize(image.size());
        for (size_t i = 0; i < image.size(); ++i) r.image[i] = image[o.image[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.image.resize(image.size());
        for (size_t i = 0; i < image.size(); ++i) r.image[image[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (size_t i = 0; i < image.size(); ++i)
            if (image[i] != static_cast<int>(i)) return false;
        return true;
    }

    long long order() const {
        Permutation p = *this;
        long long k = 1;
        while (!p.is_identity()) {
            p = p.compose(*this);
            ++k;
        }
        return k;
    }

    std::vector<int> cycle_lengths() const {
        std::vector<int> lens;
        std::vector<bool> seen(image.size(), false);
        for (size_t i = 0; i < image.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = static_cast<size_t>(image[j]);
                ++len;
            }
            lens.push_back(len);
        }
        return lens;
    }

    bool operator==(const Permutation& o) const { return image == o.image; }
    bool operator<(const Permutation& o) const { return image < o.image; }

    /// One-line cycle notation with 1-based points, e.g. "(1,2)(3,4)".
    std::string to_cycle_string() const {
        std::string out;
        std::vector<bool> seen(image.size(), false);
        for (size_t i = 0; i < image.size(); ++i) {
            if (seen[i] || image[i] == static_cast<int>(i)) {
                seen[i] = true;
                continue;
            }
            out += "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += ",";
                out += std::to_string(j + 1);
                first = false;
                j = static_cast<size_t>(image[j]);
            }
            out += ")";
        }
        if (out.empty()) out = "()";
        return out;
    }
};

constexpr long long kGroupClosureCap = 1000000;

/// Closure of a generating set under composition, by breadth-first
/// multiplication. Refuses groups larger than kGroupClosureCap.
inline std::vector<Permutation> group_closure(int nvars,
                                              const std::vector<Permutation>& generators) {
    std::set<Permutation> elems;
    std::deque<Permutation> work;
    Permutation id = Permutation::identity(nvars);
    elems.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        Permutation cur = work.front();
        work.pop_front();
        for (const auto& g : generators) {
            if (g.size() != nvars)
                throw precondition_error("group_closure: generator size mismatch");
            Permutation next = g.compose(cur);
            if (elems.insert(next).second) {
                if (static_cast<long long>(elems.size()) > kGroupClosureCap)
                    throw resource_cap_error("group_closure: order exceeds cap");
                work.push_back(next);
            }
        }
    }
    return {elems.begin(), elems.end()};
}

// ---------------------------------------------------------------------------
// Action descriptors

/// Action of mu_{m_1} x ... x mu_{m_s} (or the abstract product of cyclic
/// groups) by characters: variable i has weight vector (w_{i,1},...,w_{i,s}).
struct DiagonalizableAction {
    std::vector<long long> moduli;              // m_1,...,m_s, each >= 1
    std::vector<std::vector<long long>> weights; // n x s, reduced mod m_j
    int nvars = 0;
    FieldSpec field;
    bool infinitesimal_mu = false; // GF(p) group-scheme reading: every m_j a power of p

    DiagonalizableAction() = default;
    DiagonalizableAction(std::vector<long long> moduli_, std::vector<std::vector<long long>> w,
                         FieldSpec f, bool infinitesimal = false)
        : moduli(std::move(moduli_)), weights(std::move(w)),
          nvars(static_cast<int>(weights.size())), field(std::move(f)),
          infinitesimal_mu(infinitesimal) {
        for (long long m : moduli)
            if (m < 1) throw precondition_error("DiagonalizableAction: modulus < 1");
        for (auto& row : weights) {
            if (row.size() != moduli.size())
                throw precondition_error("DiagonalizableAction: weight row length");
            for (size_t j = 0; j < row.size(); ++j) {
                row[j] %= moduli[j];
                if (row[j] < 0) row[j] += moduli[j];
            }
        }
        if (infinitesimal_mu) {
            if (field.kind != FieldSpec::Kind::prime)
                throw precondition_error("DiagonalizableAction: mu-type flag needs GF(p)");
            for (long long m : moduli) {
                long long r = m;
                while (r % field.p == 0) r /= field.p;
                if (r != 1)
                    throw precondition_error(
                        "DiagonalizableAction: mu-type moduli must be powers of p");
            }
        }
    }

    long long order() const {
        long long o = 1;
        for (long long m : moduli) o *= m;
        return o;
    }
};

/// Constant (permutation) action of a finite group given by generators.
struct PermutationAction {
    int nvars = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements; // full closure, identity included
    FieldSpec field;

    PermutationAction() = default;
    PermutationAction(int n, std::vector<Permutation> gens, FieldSpec f)
        : nvars(n), generators(std::move(gens)), field(std::move(f)) {
        elements = group_closure(nvars, generators);
    }

    long long order() const { return static_cast<long long>(elements.size()); }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }
};

/// Coaction of alpha_q: x_i -> sum_j A_{ji} x_j with A_{ji} in k[t]/(t^q).
/// matrix[j][i][m] is the coefficient of t^m in A_{ji}.
struct AlphaCoaction {
    long long p = 2;
    long long q = 2;
    int nvars = 0;
    FieldSpec field;
    std::vector<std::vector<std::vector<Scalar>>> matrix;

    AlphaCoaction() = default;
    AlphaCoaction(long long p_, long long q_, int n,
                  std::vector<std::vector<std::vector<Scalar>>> mat)
        : p(p_), q(q_), nvars(n), field(FieldSpec::prime(p_)), matrix(std::move(mat)) {
        long long r = q;
        while (r % p == 0) r /= p;
        if (r != 1 || q < 2) throw precondition_error("AlphaCoaction: q must be a power of p");
        if (static_cast<int>(matrix.size()) != nvars)
            throw precondition_error("AlphaCoaction: matrix size");
        for (const auto& row : matrix) {
            if (static_cast<int>(row.size()) != nvars)
                throw precondition_error("AlphaCoaction: matrix row size");
            for (const auto& entry : row)
                if (static_cast<long long>(entry.size()) != q)
                    throw precondition_error("AlphaCoaction: entry truncation length");
        }
    }

    /// Image of variable i under the coaction, as an element of S[t]/(t^q).
    TruncatedPoly variable_image(int i) const {
        TruncatedPoly img(q, field, nvars);
        for (int j = 0; j < nvars; ++j)
            for (long long m = 0; m < q; ++m)
                if (!matrix[j][i][static_cast<size_t>(m)].is_zero())
                    img.coeff(m).add_term(Monomial::variable(nvars, j),
                                          matrix[j][i][static_cast<size_t>(m)]);
        return img;
    }
};

/// Commuting product of a diagonalizable and a permutation action on the same
/// variables: the permutation must preserve every weight vector.
struct ProductAction {
    DiagonalizableAction diag;
    PermutationAction perm;

    ProductAction() = default;
    ProductAction(DiagonalizableAction d, PermutationAction p)
        : diag(std::move(d)), perm(std::move(p)) {
        if (diag.nvars != perm.nvars)
            throw invalid_product_error("ProductAction: variable count mismatch");
        if (diag.field != perm.field)
            throw invalid_product_error("ProductAction: field mismatch");
        for (const auto& sigma : perm.generators)
            for (int i = 0; i < diag.nvars; ++i)
                if (diag.weights[static_cast<size_t>(sigma(i))] !=
                    diag.weights[static_cast<size_t>(i)])
                    throw invalid_product_error(
                        "ProductAction: permutation does not preserve weights");
    }

    int nvars() const { return diag.nvars; }
    const FieldSpec& field() const { return diag.field; }
    long long order() const { return diag.order() * perm.order(); }
};

using ActionDescriptor =
    std::variant<DiagonalizableAction, PermutationAction, AlphaCoaction, ProductAction>;

inline int action_nvars(const ActionDescriptor& a) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductAction>)
                return x.nvars();
            else
                return x.nvars;
        },
        a);
}

inline FieldSpec action_field(const ActionDescriptor& a) {
    return std::visit(
        [](const auto& x) -> FieldSpec {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductAction>)
                return x.field();
            else
                return x.field;
        },
        a);
}

// ---------------------------------------------------------------------------
// Operations

/// Weight vector (sum_i w_{i,j} k_i mod m_j)_j of a monomial; the monomial is
/// invariant exactly when this vanishes.
inline std::vector<long long> monomial_weight(const DiagonalizableAction& a, const Monomial& m) {
    if (m.nvars() != a.nvars) throw precondition_error("monomial_weight: nvars mismatch");
    std::vector<long long> w(a.moduli.size(), 0);
    for (int i = 0; i < a.nvars; ++i)
        for (size_t j = 0; j < a.moduli.size(); ++j)
            w[j] = (w[j] + a.weights[static_cast<size_t>(i)][j] * m.exps[static_cast<size_t>(i)]) %
                   a.moduli[j];
    return w;
}

inline bool is_weight_zero(const std::vector<long long>& w) {
    for (long long x : w)
        if (x != 0) return false;
    return true;
}

/// Relabel variables of f by sigma: x_i -> x_{sigma(i)}.
inline Polynomial permute_polynomial(const PermutationAction& a, const Permutation& sigma,
                                     const Polynomial& f) {
    if (!a.contains(sigma)) throw precondition_error("permute_polynomial: sigma not in group");
    if (f.nvars() != a.nvars) throw precondition_error("permute_polynomial: nvars mismatch");
    Polynomial r(f.field(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(m.exps.size());
        for (size_t i = 0; i < e.size(); ++i) e[static_cast<size_t>(sigma(static_cast<int>(i)))] = m.exps[i];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

/// Apply the coaction to a polynomial: substitute every variable by its image
/// and expand in S[t]/(t^q). An algebra map, so f is invariant exactly when
/// all positive t-coefficients of the result vanish.
inline TruncatedPoly coact(const AlphaCoaction& a, const Polynomial& f) {
    if (f.field() != a.field) throw field_mismatch_error("coact: field mismatch");
    if (f.nvars() != a.nvars) throw precondition_error("coact: nvars mismatch");
    std::vector<std::optional<TruncatedPoly>> images(static_cast<size_t>(a.nvars));
    TruncatedPoly out(a.q, a.field, a.nvars);
    for (const auto& [m, c] : f.terms()) {
        TruncatedPoly term = TruncatedPoly::embed(
            a.q, Polynomial::constant(a.field, a.nvars, c));
        for (int i = 0; i < a.nvars; ++i) {
            int e = m.exps[static_cast<size_t>(i)];
            if (e == 0) continue;
            auto& img = images[static_cast<size_t>(i)];
            if (!img) img = a.variable_image(i);
            term = term * img->pow(e);
        }
        out = out + term;
    }
    return out;
}

inline bool is_invariant(const AlphaCoaction& a, const Polynomial& f) {
    TruncatedPoly c = coact(a, f);
    for (long long m = 1; m < a.q; ++m)
        if (!c.coeff(m).is_zero()) return false;
    return true;
}

inline bool is_invariant(const DiagonalizableAction& a, const Polynomial& f) {
    for (const auto& [m, c] : f.terms())
        if (!is_weight_zero(monomial_weight(a, m))) return false;
    return true;
}

inline bool is_invariant(const PermutationAction& a, const Polynomial& f) {
    for (const auto& g : a.generators)
        if (permute_polynomial(a, g, f) != f) return false;
    return true;
}

inline bool is_invariant(const ProductAction& a, const Polynomial& f) {
    return is_invariant(a.diag, f) && is_invariant(a.perm, f);
}

inline bool is_invariant(const ActionDescriptor& a, const Polynomial& f) {
    return std::visit([&](const auto& x) { return is_invariant(x, f); }, a);
}

// ---------------------------------------------------------------------------
// Coaction validation

/// Report of the counit / coassociativity checks.
struct CoactionValidation {
    bool counit_ok = true;
    bool coassociative = true;
    std::string first_violation; // empty when valid
    bool valid() const { return counit_ok && coassociative; }
};

namespace detail {

/// Entry of a matrix over k[u,v]/(u^q, v^q): coefficient grid [a][b] of u^a v^b.
using BiTruncEntry = std::vector<std::vector<Scalar>>;

inline BiTruncEntry bi_zero(long long q, const FieldSpec& f) {
    return BiTruncEntry(static_cast<size_t>(q),
                        std::vector<Scalar>(static_cast<size_t>(q), Scalar::zero(f)));
}

} // namespace detail

/// Exact counit and coassociativity check: A(0) = I and A(u+v) = A(u) A(v)
/// inside k[u,v]/(u^q, v^q).
inline CoactionValidation validate_coaction(const AlphaCoaction& a) {
    CoactionValidation rep;
    const FieldSpec& f = a.field;
    const long long q = a.q;

    for (int j = 0; j < a.nvars && rep.counit_ok; ++j)
        for (int i = 0; i < a.nvars && rep.counit_ok; ++i) {
            Scalar expect = (i == j) ? Scalar::one(f) : Scalar::zero(f);
            if (a.matrix[static_cast<size_t>(j)][static_cast<size_t>(i)][0] != expect) {
                rep.counit_ok = false;
                rep.first_violation = "counit fails at entry (" + std::to_string(j + 1) + "," +
                                      std::to_string(i + 1) + ")";
            }
        }
    if (!rep.counit_ok) return rep;

    // lhs(j,i) = sum_m A_{ji}[m] (u+v)^m
    auto lhs_entry = [&](int j, int i) {
        detail::BiTruncEntry e = detail::bi_zero(q, f);
        for (long long m = 0; m < q; ++m) {
            const Scalar& c = a.matrix[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                      [static_cast<size_t>(m)];
            if (c.is_zero()) continue;
            for (long long u = 0; u <= m; ++u) {
                long long v = m - u;
                if (u >= q || v >= q) continue;
                Scalar b = lucas_binom(m, u, a.p);
                e[static_cast<size_t>(u)][static_cast<size_t>(v)] =
                    e[static_cast<size_t>(u)][static_cast<size_t>(v)] + c * b;
            }
        }
        return e;
    };

    // rhs(j,i) = sum_k A_{jk}(u) A_{ki}(v)
    auto rhs_entry = [&](int j, int i) {
        detail::BiTruncEntry e = detail::bi_zero(q, f);
        for (int k = 0; k < a.nvars; ++k)
            for (long long u = 0; u < q; ++u) {
                const Scalar& cu = a.matrix[static_cast<size_t>(j)][static_cast<size_t>(k)]
                                           [static_cast<size_t>(u)];
                if (cu.is_zero()) continue;
                for (long long v = 0; v < q; ++v) {
                    const Scalar& cv = a.matrix[static_cast<size_t>(k)][static_cast<size_t>(i)]
                                               [static_cast<size_t>(v)];
                    if (cv.is_zero()) continue;
                    e[static_cast<size_t>(u)][static_cast<size_t>(v)] =
                        e[static_cast<size_t>(u)][static_cast<size_t>(v)] + cu * cv;
                }
            }
        return e;
    };

    for (int j = 0; j < a.nvars; ++j)
        for (int i = 0; i < a.nvars; ++i)
            if (lhs_entry(j, i) != rhs_entry(j, i)) {
                rep.coassociative = false;
                rep.first_violation = "coassociativity fails at entry (" + std::to_string(j + 1) +
                                      "," + std::to_string(i + 1) + ")";
                return rep;
            }
    return rep;
}

/// The l-fold direct sum of the indecomposable two-dimensional alpha_q
/// representation: variables x_1,y_1,...,x_l,y_l with x_i fixed and
/// y_i -> y_i + t x_i.
inline AlphaCoaction standard_alpha_rep(long long q, long long l) {
    long long p = 0;
    for (long long cand = 2; cand <= q; ++cand) {
        if (is_prime(cand) && q % cand == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0 || l < 1) throw precondition_error("standard_alpha_rep: bad q or l");
    long long r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw precondition_error("standard_alpha_rep: q is not a prime power");

    FieldSpec f = FieldSpec::prime(p);
    int n = static_cast<int>(2 * l);
    std::vector<std::vector<std::vector<Scalar>>> mat(
        static_cast<size_t>(n),
        std::vector<std::vector<Scalar>>(static_cast<size_t>(n),
                                         std::vector<Scalar>(static_cast<size_t>(q),
                                                             Scalar::zero(f))));
    for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i)][static_cast<size_t>(i)][0] = Scalar::one(f);
    for (long long b = 0; b < l; ++b) {
        int x = static_cast<int>(2 * b), y = static_cast<int>(2 * b + 1);
        mat[static_cast<size_t>(x)][static_cast<size_t>(y)][1] = Scalar::one(f); // y -> y + t x
    }
    return AlphaCoaction(p, q, n, std::move(mat));
}

} // namespace invariant_forge

#endif
