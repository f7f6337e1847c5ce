/*
   Copyright 2026 The ratdec authors

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

#ifndef RATDEC_LINALG_HPP
#define RATDEC_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ratdec/field.hpp"

namespace ratdec {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

inline Mat make_matrix(const FieldCtx& ctx, std::size_t rows,
                       std::size_t cols) {
    return Mat(rows, Vec(cols, FieldElement::zero(ctx)));
}

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const FieldElement inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const FieldElement factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the right nullspace of m (solutions of m*x = 0).
inline std::vector<Vec> nullspace(Mat m, const FieldCtx& ctx,
                                  std::size_t cols) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, FieldElement::zero(ctx));
        v[free_col] = FieldElement::one(ctx);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < free_col) v[pivots[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A*x = b, if any.
inline std::optional<Vec> solve(Mat a, Vec b, const FieldCtx& ctx) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    // inconsistent iff a pivot lands in the appended column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, FieldElement::zero(ctx));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

inline std::optional<Mat> inverse(Mat m, const FieldCtx& ctx) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, FieldElement::zero(ctx));
        m[i][n + i] = FieldElement::one(ctx);
    }
    const auto pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv = make_matrix(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

inline FieldElement determinant(Mat m, const FieldCtx& ctx) {
    const std::size_t n = m.size();
    FieldElement det = FieldElement::one(ctx);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return FieldElement::zero(ctx);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const FieldElement inv = m[col][col].inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            const FieldElement factor = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

}  // namespace ratdec

#endif
