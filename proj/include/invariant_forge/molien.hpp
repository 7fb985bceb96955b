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

#ifndef INVARIANT_FORGE_MOLIEN_HPP
#define INVARIANT_FORGE_MOLIEN_HPP

#include <numeric>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace invariant_forge {

/// Truncated Molien series: coeffs[d] = dim S^G_d for d <= D.
struct MolienCoefficients {
    long long order = 0; // expansion order D
    std::vector<long long> coeffs;
};

/// Result of the averaged character-sum expansion over Q(zeta_N).
struct CharacterSumSeries {
    long long order = 0;        // expansion order D
    long long zeta_order = 1;   // N
    std::vector<long long> coeffs;
    bool abstract_only = false; // permutation action with char dividing |G|
};

/// Direct graded-dimension count, valid for every action kind.
inline MolienCoefficients molien_by_counting(const ActionDescriptor& action, long long D) {
    if (D < 0) throw precondition_error("molien_by_counting: negative order");
    MolienCoefficients out;
    out.order = D;
    out.coeffs.assign(static_cast<size_t>(D) + 1, 0);
    parallel_for(static_cast<size_t>(D) + 1, [&](size_t d) {
        if (const auto* diag = std::get_if<DiagonalizableAction>(&action))
            out.coeffs[d] =
                static_cast<long long>(invariant_monomials(*diag, static_cast<long long>(d)).size());
        else
            out.coeffs[d] =
                static_cast<long long>(invariant_basis(action, static_cast<long long>(d)).size());
    });
    return out;
}

namespace detail {

/// Eigenvalue exponents (mod N) of one abstract group element acting on the
/// variables, with all exponents normalized to level N.
using ExponentList = std::vector<long long>;

/// Series coefficients live in the group ring Z[Z/N]: counts[a] is the
/// multiplicity of zeta_N^a. Multiplying by the geometric series of a single
/// eigenvalue is an index shift per degree step.
inline std::vector<std::vector<long long>> element_series(const ExponentList& exps, long long N,
                                                          long long D) {
    std::vector<std::vector<long long>> series(
        static_cast<size_t>(D) + 1, std::vector<long long>(static_cast<size_t>(N), 0));
    series[0][0] = 1;
    for (long long e : exps) {
        // inverse element: eigenvalue zeta^{-e}
        long long step = ((-e) % N + N) % N;
        std::vector<std::vector<long long>> next(
            static_cast<size_t>(D) + 1, std::vector<long long>(static_cast<size_t>(N), 0));
        for (long long d = 0; d <= D; ++d)
            for (long long k = 0; k <= d; ++k) {
                long long shift = (step * (d - k)) % N;
                const auto& src = series[static_cast<size_t>(k)];
                auto& dst = next[static_cast<size_t>(d)];
                for (long long a = 0; a < N; ++a)
                    dst[static_cast<size_t>((a + shift) % N)] += src[static_cast<size_t>(a)];
            }
        series = std::move(next);
    }
    return series;
}

inline std::vector<ExponentList> abstract_element_exponents(const DiagonalizableAction& a,
                                                            long long N) {
    // enumerate Z/m_1 x ... x Z/m_s
    std::vector<ExponentList> out;
    std::vector<long long> tuple(a.moduli.size(), 0);
    for (;;) {
        ExponentList exps(static_cast<size_t>(a.nvars), 0);
        for (int i = 0; i < a.nvars; ++i) {
            long long e = 0;
            for (size_t j = 0; j < a.moduli.size(); ++j)
                e = (e + (N / a.moduli[j]) * tuple[j] * a.weights[static_cast<size_t>(i)][j]) % N;
            exps[static_cast<size_t>(i)] = e;
        }
        out.push_back(std::move(exps));
        size_t j = 0;
        while (j < tuple.size() && ++tuple[j] == a.moduli[j]) tuple[j++] = 0;
        if (j == tuple.size()) break;
        if (tuple.empty()) break;
    }
    return out;
}

inline std::vector<ExponentList> abstract_element_exponents(const PermutationAction& a,
                                                            long long N) {
    std::vector<ExponentList> out;
    for (const auto& sigma : a.elements) {
        ExponentList exps;
        for (int c : sigma.cycle_lengths())
            for (int j = 0; j < c; ++j) exps.push_back((N / c) * j);
        out.push_back(std::move(exps));
    }
    return out;
}

} // namespace detail

/// Averaged character sum 1/|G| sum_g 1/det(1 - g^{-1} t), expanded as exact
/// series over Q(zeta_N) with N the lcm of the element orders. Coefficients
/// must come out as non-negative integers.
inline CharacterSumSeries molien_charsum(const ActionDescriptor& action, long long D) {
    if (D < 0) throw precondition_error("molien_charsum: negative order");

    long long N = 1;
    std::vector<detail::ExponentList> elements;
    bool abstract_only = false;

    if (const auto* diag = std::get_if<DiagonalizableAction>(&action)) {
        for (long long m : diag->moduli) N = std::lcm(N, m);
        elements = detail::abstract_element_exponents(*diag, N);
    } else if (const auto* perm = std::get_if<PermutationAction>(&action)) {
        for (const auto& sigma : perm->elements) N = std::lcm(N, sigma.order());
        elements = detail::abstract_element_exponents(*perm, N);
        long long p = perm->field.characteristic();
        abstract_only = (p != 0 && perm->order() % p == 0);
    } else {
        throw inapplicable_error(
            "molien_charsum: only diagonalizable and permutation actions are supported");
    }

    // accumulate group-ring coefficients over all elements
    std::vector<std::vector<long long>> total(
        static_cast<size_t>(D) + 1, std::vector<long long>(static_cast<size_t>(N), 0));
    std::vector<std::vector<std::vector<long long>>> partial(elements.size());
    parallel_for(elements.size(),
                 [&](size_t i) { partial[i] = detail::element_series(elements[i], N, D); });
    for (const auto& series : partial)
        for (long long d = 0; d <= D; ++d)
            for (long long a = 0; a < N; ++a)
                total[static_cast<size_t>(d)][static_cast<size_t>(a)] +=
                    series[static_cast<size_t>(d)][static_cast<size_t>(a)];

    const long long group_order = static_cast<long long>(elements.size());
    CharacterSumSeries out;
    out.order = D;
    out.zeta_order = N;
    out.abstract_only = abstract_only;
    out.coeffs.reserve(static_cast<size_t>(D) + 1);
    for (long long d = 0; d <= D; ++d) {
        // reduce sum_a count_a zeta^a modulo Phi_N; the result must be a
        // non-negative integer after dividing by |G|
        std::vector<mpq_class> raw(static_cast<size_t>(N), mpq_class(0));
        for (long long a = 0; a < N; ++a)
            raw[static_cast<size_t>(a)] = mpq_class(
                static_cast<long>(total[static_cast<size_t>(d)][static_cast<size_t>(a)]));
        Scalar value = Scalar::from_cyclotomic_coeffs(N, std::move(raw));
        if (!value.is_rational_constant())
            throw error("molien_charsum: non-rational coefficient at degree " + std::to_string(d));
        mpq_class q = value.rational_value() / static_cast<long>(group_order);
        q.canonicalize();
        if (q.get_den() != 1 || q < 0)
            throw error("molien_charsum: non-integer coefficient at degree " + std::to_string(d));
        out.coeffs.push_back(static_cast<long long>(q.get_num().get_si()));
    }
    return out;
}

/// Per-degree comparison of counting over the action's own field, counting
/// over Q with the same combinatorial data, and (when applicable) the
/// character sum.
struct MolienComparison {
    long long order = 0;
    std::vector<long long> counting_native;
    std::vector<long long> counting_rational;
    std::vector<long long> charsum; // empty when not applicable
    bool charsum_abstract_only = false;
    bool all_agree = true;
    std::vector<long long> mismatched_degrees;
};

namespace detail {

inline ActionDescriptor with_rational_field(const ActionDescriptor& action) {
    if (const auto* d = std::get_if<DiagonalizableAction>(&action))
        return DiagonalizableAction(d->moduli, d->weights, FieldSpec::rational());
    if (const auto* p = std::get_if<PermutationAction>(&action))
        return PermutationAction(p->nvars, p->generators, FieldSpec::rational());
    if (const auto* pr = std::get_if<ProductAction>(&action))
        return ProductAction(
            DiagonalizableAction(pr->diag.moduli, pr->diag.weights, FieldSpec::rational()),
            PermutationAction(pr->perm.nvars, pr->perm.generators, FieldSpec::rational()));
    throw inapplicable_error("molien_compare: alpha actions have no characteristic-zero twin");
}

} // namespace detail

inline MolienComparison molien_compare(const ActionDescriptor& action, long long D) {
    MolienComparison out;
    out.order = D;
    out.counting_native = molien_by_counting(action, D).coeffs;
    out.counting_rational = molien_by_counting(detail::with_rational_field(action), D).coeffs;

    bool has_charsum = std::holds_alternative<DiagonalizableAction>(action) ||
                       std::holds_alternative<PermutationAction>(action);
    if (has_charsum) {
        CharacterSumSeries cs = molien_charsum(action, D);
        out.charsum = cs.coeffs;
        out.charsum_abstract_only = cs.abstract_only;
    }

    for (long long d = 0; d <= D; ++d) {
        bool ok = out.counting_native[static_cast<size_t>(d)] ==
                  out.counting_rational[static_cast<size_t>(d)];
        if (!out.charsum.empty())
            ok = ok && out.counting_native[static_cast<size_t>(d)] ==
                           out.charsum[static_cast<size_t>(d)];
        if (!ok) {
            out.all_agree = false;
            out.mismatched_degrees.push_back(d);
        }
    }
    return out;
}

} // namespace invariant_forge

#endif
