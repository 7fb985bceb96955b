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

#ifndef INVARIANT_FORGE_LINALG_HPP
#define INVARIANT_FORGE_LINALG_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "field.hpp"

namespace invariant_forge {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

inline void check_rectangular(const Matrix& rows) {
    if (rows.empty()) return;
    const FieldSpec& f = rows[0].empty() ? FieldSpec::rational() : rows[0][0].field();
    for (const auto& r : rows) {
        if (r.size() != rows[0].size())
            throw precondition_error("linalg: ragged matrix");
        for (const auto& s : r)
            if (s.field() != f) throw field_mismatch_error("linalg: mixed fields");
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<size_t> rref(Matrix& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
        size_t sel = row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[row], rows[sel]);
        Scalar inv = rows[row][col].inverse();
        for (size_t j = col; j < ncols; ++j) rows[row][j] = rows[row][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col].is_zero()) continue;
            Scalar factor = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - factor * rows[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(pivots.size()); // drop zero rows
    return pivots;
}

inline size_t rank(Matrix rows) {
    check_rectangular(rows);
    return rref(rows).size();
}

/// Basis of the null space {v : R v = 0}. Each basis vector carries the
/// "free variable = 1" parameterization from the reduced echelon form and is
/// then scaled so its first nonzero coordinate is 1. Vectors are listed in
/// increasing free-column order. An empty row list over ncols columns yields
/// the standard basis.
inline std::vector<Vector> kernel_basis(Matrix rows, size_t ncols, const FieldSpec& field) {
    check_rectangular(rows);
    for (const auto& r : rows)
        if (r.size() != ncols) throw precondition_error("kernel_basis: ncols mismatch");
    std::vector<size_t> pivots = rref(rows);

    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(ncols, Scalar::zero(field));
        v[free_col] = Scalar::one(field);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][free_col];
        // normalize: first nonzero coordinate becomes 1
        for (size_t j = 0; j < ncols; ++j) {
            if (!v[j].is_zero()) {
                Scalar inv = v[j].inverse();
                for (size_t k = j; k < ncols; ++k) v[k] = v[k] * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank by enumeration of square minors (determinant expansion); only sensible
/// for very small matrices. Kept as an independent cross-check for rref.
inline size_t rank_by_minors(const Matrix& rows) {
    if (rows.empty() || rows[0].empty()) return 0;
    const size_t m = rows.size(), n = rows[0].size();
    const FieldSpec& f = rows[0][0].field();

    // determinant by Laplace expansion on index subsets
    std::function<Scalar(const std::vector<size_t>&, const std::vector<size_t>&)> det =
        [&](const std::vector<size_t>& ri, const std::vector<size_t>& ci) -> Scalar {
        if (ri.size() == 1) return rows[ri[0]][ci[0]];
        Scalar acc = Scalar::zero(f);
        for (size_t k = 0; k < ri.size(); ++k) {
            if (rows[ri[0]][ci[k]].is_zero()) continue;
            std::vector<size_t> sub_r(ri.begin() + 1, ri.end());
            std::vector<size_t> sub_c;
            for (size_t j = 0; j < ci.size(); ++j)
                if (j != k) sub_c.push_back(ci[j]);
            Scalar term = rows[ri[0]][ci[k]] * det(sub_r, sub_c);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    auto subsets = [](size_t total, size_t k) {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> cur;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (size_t i = start; i < total; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };

    for (size_t k = std::min(m, n); k >= 1; --k) {
        for (const auto& ri : subsets(m, k))
            for (const auto& ci : subsets(n, k))
                if (!det(ri, ci).is_zero()) return k;
    }
    return 0;
}

} // namespace invariant_forge

#endif
