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

#ifndef RATDEC_NEWTON_POLYTOPE_HPP
#define RATDEC_NEWTON_POLYTOPE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "ratdec/ratfun.hpp"

namespace ratdec {

using LatticePoint = std::vector<long>;

/// Vertex set of a lattice polytope in Z^n (extreme points only, sorted).
struct LatticePolytope {
    unsigned nvars;
    std::vector<LatticePoint> vertices;
};

/// Exponent support of a nonzero polynomial.
inline std::vector<LatticePoint> support(const MultiPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : f.terms()) {
        LatticePoint p(e.begin(), e.end());
        pts.push_back(std::move(p));
    }
    return pts;
}

namespace detail {

/// Convex hull of planar integer points (monotone chain); returns vertices
/// only, collinear boundary points dropped.
inline std::vector<LatticePoint> hull_2d(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross = [](const LatticePoint& o, const LatticePoint& a,
                    const LatticePoint& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Exact phase-1 simplex feasibility: is v a convex combination of pts?
inline bool in_convex_hull(const LatticePoint& v,
                           const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    const std::size_t n = v.size();
    const std::size_t m = pts.size();
    const std::size_t rows = n + 1;
    const std::size_t cols = m + rows;  // lambdas then artificials
    // tableau: rows x (cols + 1), last column is b
    std::vector<std::vector<mpq_class>> t(rows,
                                          std::vector<mpq_class>(cols + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = pts[j][i];
        t[i][cols] = v[i];
    }
    for (std::size_t j = 0; j < m; ++j) t[n][j] = 1;
    t[n][cols] = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][cols] < 0)
            for (auto& x : t[i]) x = -x;
        t[i][m + i] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
    // phase-1 objective: minimize w = sum of artificials; expressed in the
    // nonbasic variables, so the (basic) artificial columns start at zero
    std::vector<mpq_class> obj(cols + 1, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= cols; ++j) obj[j] += t[i][j];
    for (std::size_t i = 0; i < rows; ++i) obj[m + i] = 0;

    while (true) {
        // Bland's rule: smallest index with positive reduced objective entry
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        mpq_class best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            mpq_class ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == rows) break;  // unbounded: cannot happen here
        const mpq_class pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const mpq_class factor = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                t[i][j] -= factor * t[leave][j];
        }
        const mpq_class ofac = obj[enter];
        if (ofac != 0)
            for (std::size_t j = 0; j <= cols; ++j)
                obj[j] -= ofac * t[leave][j];
        basis[leave] = enter;
    }
    return obj[cols] == 0;
}

inline std::vector<LatticePoint> hull_vertices(
    std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return pts;
    const std::size_t dim = pts[0].size();
    if (dim == 1) {
        LatticePoint lo = pts.front(), hi = pts.back();
        if (lo == hi) return {lo};
        return {lo, hi};
    }
    if (dim == 2) {
        auto h = hull_2d(std::move(pts));
        std::sort(h.begin(), h.end());
        return h;
    }
    // n >= 3: per-point extremality test by exact LP
    std::vector<LatticePoint> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticePoint> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
    }
    return verts;
}

}  // namespace detail

/// Newton polytope of a reduced rational function: the hull of the union
/// of the numerator and denominator supports.
inline LatticePolytope newton_polytope(const RationalFunctionMV& f) {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : f.num().terms())
        pts.emplace_back(e.begin(), e.end());
    for (const auto& [e, c] : f.den().terms())
        pts.emplace_back(e.begin(), e.end());
    return {f.nvars(), detail::hull_vertices(std::move(pts))};
}

enum class PolytopeTestResult { noncomposite, inconclusive };

/// One-sided test: if the gcd of all vertex coordinates (zeros ignored) is
/// 1, f is non-composite. Requires characteristic 0 or > deg f.
inline PolytopeTestResult indecomposability_test(const RationalFunctionMV& f) {
    const FieldCtx& ctx = f.ctx();
    if (ctx->is_finite() && ctx->characteristic() <= f.degree())
        throw characteristic_too_small(
            "polytope test needs characteristic 0 or > deg f");
    const LatticePolytope np = newton_polytope(f);
    long g = 0;
    for (const auto& v : np.vertices)
        for (long x : v) g = std::gcd(g, x);
    if (g == 1) return PolytopeTestResult::noncomposite;
    return PolytopeTestResult::inconclusive;  // includes the all-zero case
}

}  // namespace ratdec

#endif
