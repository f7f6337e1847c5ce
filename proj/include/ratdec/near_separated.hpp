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

#ifndef RATDEC_NEAR_SEPARATED_HPP
#define RATDEC_NEAR_SEPARATED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ratdec/decompose.hpp"

namespace ratdec {

/// F(X, Y) = f1(X)f2(Y) - f2(X)f1(Y) in 2n variables (X block first).
struct NearSeparated {
    MultiPoly poly;          // the 2n-variable polynomial
    RationalFunctionMV from; // provenance
};

namespace detail {

inline std::vector<unsigned> block_mapping(unsigned n, bool to_y_block) {
    std::vector<unsigned> m(n);
    for (unsigned i = 0; i < n; ++i) m[i] = to_y_block ? n + i : i;
    return m;
}

/// Exchange the X and Y blocks of a 2n-variable polynomial.
inline MultiPoly swap_blocks(const MultiPoly& f, unsigned n) {
    std::vector<unsigned> m(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        m[i] = n + i;
        m[n + i] = i;
    }
    return f.map_vars(2 * n, m);
}

/// Total degree over the X block only.
inline long xblock_degree(const MultiPoly& f, unsigned n) {
    long d = -1;
    for (const auto& [e, c] : f.terms()) {
        long s = 0;
        for (unsigned i = 0; i < n; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

/// Evaluate the Y block at a point, then view the result in n variables.
inline MultiPoly eval_y_block(const MultiPoly& f, unsigned n,
                              const std::vector<FieldElement>& b) {
    MultiPoly g = f;
    for (unsigned i = 0; i < n; ++i) g = g.partial_evaluate(n + i, b[i]);
    std::vector<unsigned> m(2 * n, 0);
    for (unsigned i = 0; i < n; ++i) m[i] = i;
    return g.map_vars(n, m);
}

}  // namespace detail

inline NearSeparated near_separated(const RationalFunctionMV& f) {
    const unsigned n = f.nvars();
    const MultiPoly f1x = f.num().map_vars(2 * n, detail::block_mapping(n, false));
    const MultiPoly f2x = f.den().map_vars(2 * n, detail::block_mapping(n, false));
    const MultiPoly f1y = f.num().map_vars(2 * n, detail::block_mapping(n, true));
    const MultiPoly f2y = f.den().map_vars(2 * n, detail::block_mapping(n, true));
    return {f1x * f2y - f2x * f1y, f};
}

/// Screen H for the shape h1(X)h2(Y) - h2(X)h1(Y): antisymmetry up to the
/// unit fixed by leading terms, then reconstruction from two Y evaluations
/// and exact confirmation. The returned pair is the reduced row echelon
/// basis of the two evaluations (canonical up to unimodular change).
inline std::optional<std::pair<MultiPoly, MultiPoly>> is_near_separated_form(
    const MultiPoly& h) {
    const FieldCtx& ctx = h.ctx();
    if (h.nvars() % 2 != 0 || h.is_constant()) return std::nullopt;
    const unsigned n = h.nvars() / 2;
    // block swap negates exactly, for any scalar multiple of the form
    const MultiPoly swapped = detail::swap_blocks(h, n);
    if (swapped != -h) return std::nullopt;

    // two independent Y evaluations from a small deterministic grid
    std::vector<MultiPoly> picks;
    for (long trial = 0; trial < 32 && picks.size() < 2; ++trial) {
        std::vector<FieldElement> b;
        for (unsigned i = 0; i < n; ++i) {
            const long v = (trial >> i) % 4;  // grid over {0,1,2,3}^n
            b.push_back(FieldElement::from_integer(ctx, v));
        }
        MultiPoly a = detail::eval_y_block(h, n, b);
        if (a.is_zero()) continue;
        if (picks.size() == 1) {
            // reject proportional picks
            const MultiPoly& first = picks[0];
            if ((first * a.leading_coefficient() -
                 a * first.leading_coefficient())
                    .is_zero())
                continue;
        }
        picks.push_back(std::move(a));
    }
    if (picks.size() < 2) return std::nullopt;

    // W(X,Y) = A(X)B(Y) - B(X)A(Y) must be a scalar multiple of H
    const auto up = detail::block_mapping(n, false);
    const auto dn = detail::block_mapping(n, true);
    const MultiPoly w = picks[0].map_vars(2 * n, up) * picks[1].map_vars(2 * n, dn) -
                        picks[1].map_vars(2 * n, up) * picks[0].map_vars(2 * n, dn);
    if (w.is_zero()) return std::nullopt;
    const FieldElement gamma = w.leading_coefficient() / h.leading_coefficient();
    if (w != h * gamma) return std::nullopt;

    // canonical basis of span{A, B} by reduced row echelon form over the
    // monomials of the two evaluations
    std::map<Exponents, std::size_t, GradedLexGreater> columns;
    for (const auto& p : picks)
        for (const auto& [e, cc] : p.terms()) columns.emplace(e, columns.size());
    // re-index columns in graded-lex descending order
    std::size_t idx = 0;
    for (auto& [e, i] : columns) i = idx++;
    Mat m = make_matrix(ctx, 2, columns.size());
    for (std::size_t r = 0; r < 2; ++r)
        for (const auto& [e, cc] : picks[r].terms())
            m[r][columns.find(e)->second] = cc;
    rref(m);
    std::vector<MultiPoly> basis;
    for (std::size_t r = 0; r < 2; ++r) {
        MultiPoly p(ctx, n);
        for (const auto& [e, i] : columns) p.add_term(e, m[r][i]);
        if (p.is_zero()) return std::nullopt;
        basis.push_back(normalize_canonical(p));
    }
    return std::make_pair(basis[0], basis[1]);
}

/// Pick two Y points, take the ratio of the evaluations as a candidate
/// right component of f, and accept only when the outer function verifies.
inline std::optional<std::pair<RationalFunctionMV, RationalFunctionUV>>
extract_component(const MultiPoly& h, const RationalFunctionMV& f,
                  RandomStream& stream) {
    const unsigned n = f.nvars();
    const FieldCtx& ctx = f.ctx();
    const long d = f.degree();
    for (unsigned trial = 0; trial < 10; ++trial) {
        std::vector<FieldElement> b, b2;
        const mpz_class box = 9 + 4 * trial;
        for (unsigned i = 0; i < n; ++i) {
            b.push_back(ctx->is_finite() ? random_element(ctx, stream)
                                         : random_boxed_integer(ctx, box,
                                                                stream));
            b2.push_back(ctx->is_finite() ? random_element(ctx, stream)
                                          : random_boxed_integer(ctx, box,
                                                                 stream));
        }
        const MultiPoly a1 = detail::eval_y_block(h, n, b);
        const MultiPoly a2 = detail::eval_y_block(h, n, b2);
        if (a1.is_zero() || a2.is_zero()) continue;
        RationalFunctionMV h_cand(a1, a2);
        const long dh = h_cand.degree();
        if (dh < 1 || d % dh != 0 || d / dh < 2) continue;
        try {
            RationalFunctionUV u = compute_outer_linear(f, h_cand);
            return std::make_pair(std::move(h_cand), std::move(u));
        } catch (const no_such_outer&) {
            continue;
        }
    }
    return std::nullopt;
}

struct NearSeparatedGuards {
    unsigned max_vars = 3;
    long max_degree = 10;
    bool override_guards = false;
};

/// Decomposition through the 2n-variable near-separated polynomial: factor
/// F, certify NonComposite when F is irreducible, otherwise extract a right
/// component from an irreducible factor of minimal X-block degree.
inline DecompReport decompose_via_near_separated(
    const RationalFunctionMV& f, RandomStream& stream,
    const NearSeparatedGuards& guards = {}) {
    const unsigned n = f.nvars();
    const long d = f.degree();
    if (!guards.override_guards &&
        (n > guards.max_vars || d > guards.max_degree))
        throw dimension_guard(
            "near-separated route guarded to n <= 3, deg <= 10 "
            "(override available)");
    DecompReport report{DecompOutcome::noncomposite, std::nullopt};
    if (f.is_constant() || d == 1) return report;

    const NearSeparated ns = near_separated(f);
    const MultiFactorList factors = factor_multivariate(ns.poly, stream);
    if (factors.certifies_irreducible(ns.poly)) {
        report.outcome = DecompOutcome::noncomposite;
        return report;
    }
    long min_xdeg = -1;
    for (const auto& [g, m] : factors.factors) {
        const long xd = detail::xblock_degree(g, n);
        if (xd < 1) continue;
        if (min_xdeg < 0 || xd < min_xdeg) min_xdeg = xd;
    }
    for (const auto& [g, m] : factors.factors) {
        if (detail::xblock_degree(g, n) != min_xdeg) continue;
        ++report.candidates_examined;
        auto extracted = extract_component(g, f, stream);
        if (!extracted) continue;
        report.outcome = DecompOutcome::decomposed;
        report.decomposition =
            Decomposition{std::move(extracted->second),
                          std::move(extracted->first), true,
                          Certification::deterministic};
        return report;
    }
    throw retry_budget_exhausted(
        "no candidate factor produced a verified component");
}

}  // namespace ratdec

#endif
