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

#ifndef RATDEC_LUROTH_HPP
#define RATDEC_LUROTH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratdec/decompose.hpp"

namespace ratdec {

enum class LurothOutcome { generator, no_generator };

struct LurothResult {
    LurothOutcome outcome;
    std::optional<RationalFunctionMV> generator;
    unsigned retries_used = 0;
    std::vector<std::string> trace;
};

struct SederbergResult {
    enum class Status { generator, no_generator, retry_needed } status;
    std::optional<RationalFunctionMV> generator;
    std::optional<MultiPoly> gcd_a;  // H_a
    std::optional<MultiPoly> gcd_b;  // H_b
};

/// One round of the generalized common-component search: gcd the anchored
/// members of f and g at two points, take the ratio, verify that both f and
/// g decompose through it. Verification failure signals retry_needed.
inline SederbergResult sederberg_generalized(const RationalFunctionMV& f,
                                             const RationalFunctionMV& g,
                                             const std::vector<FieldElement>& a,
                                             const std::vector<FieldElement>& b) {
    MultiPoly fa(f.ctx(), f.nvars()), ga(f.ctx(), f.nvars());
    MultiPoly fb(f.ctx(), f.nvars()), gb(f.ctx(), f.nvars());
    try {
        fa = anchored_pencil_member(f, a);
        ga = anchored_pencil_member(g, a);
        fb = anchored_pencil_member(f, b);
        gb = anchored_pencil_member(g, b);
    } catch (const base_point_of_pencil&) {
        throw denominator_vanishes_at_point();
    }
    SederbergResult result{SederbergResult::Status::retry_needed, std::nullopt,
                           std::nullopt, std::nullopt};
    const MultiPoly ha = multivariate_gcd(fa, ga);
    result.gcd_a = ha;
    if (ha.is_constant()) {
        result.status = SederbergResult::Status::no_generator;
        return result;
    }
    const MultiPoly hb = multivariate_gcd(fb, gb);
    result.gcd_b = hb;
    if (hb.is_constant()) {
        result.status = SederbergResult::Status::no_generator;
        return result;
    }
    RationalFunctionMV h(ha, hb);
    if (h.is_constant()) return result;  // retry with fresh points
    try {
        (void)compute_outer_linear(f, h);
        (void)compute_outer_linear(g, h);
    } catch (const no_such_outer&) {
        return result;
    }
    result.status = SederbergResult::Status::generator;
    result.generator = std::move(h);
    return result;
}

namespace detail {

inline SederbergResult sederberg_with_retry(const RationalFunctionMV& f,
                                            const RationalFunctionMV& g,
                                            RandomStream& stream,
                                            unsigned budget,
                                            unsigned& retries_used) {
    const long d = std::max(f.degree(), g.degree());
    for (unsigned t = 0; t < budget; ++t) {
        ++retries_used;
        const auto a = sample_point(f.ctx(), f.nvars(), d, stream);
        const auto b = sample_point(f.ctx(), f.nvars(), d, stream);
        try {
            SederbergResult r = sederberg_generalized(f, g, a, b);
            if (r.status != SederbergResult::Status::retry_needed) return r;
        } catch (const denominator_vanishes_at_point&) {
            continue;
        }
    }
    throw retry_budget_exhausted(
        "no verified common component within the point budget");
}

}  // namespace detail

/// GCRC of two univariate rational functions from two anchored gcds
/// (Sederberg's univariate strategy), verified by composition.
inline RationalFunctionUV gcrc_univariate(const RationalFunctionUV& u,
                                          const RationalFunctionUV& v,
                                          const FieldElement& x1,
                                          const FieldElement& x2) {
    if (u.is_constant() || v.is_constant())
        throw error("GCRC needs nonconstant inputs");
    if (x1 == x2) throw error("GCRC needs two distinct points");
    if (u.den().evaluate(x1).is_zero() || u.den().evaluate(x2).is_zero() ||
        v.den().evaluate(x1).is_zero() || v.den().evaluate(x2).is_zero())
        throw denominator_vanishes_at_point();
    auto anchored = [](const RationalFunctionUV& r, const FieldElement& x) {
        return r.num() * r.den().evaluate(x) - r.den() * r.num().evaluate(x);
    };
    const UniPoly a1 = gcd(anchored(u, x1), anchored(v, x1));
    const UniPoly a2 = gcd(anchored(u, x2), anchored(v, x2));
    RationalFunctionUV w(a1, a2);
    if (w.is_constant()) throw no_such_outer();
    (void)compute_outer_linear_uv(u, w);
    (void)compute_outer_linear_uv(v, w);
    return w;
}

namespace detail {

inline RationalFunctionUV gcrc_with_retry(const RationalFunctionUV& u,
                                          const RationalFunctionUV& v,
                                          RandomStream& stream,
                                          unsigned budget) {
    const FieldCtx& ctx = u.ctx();
    if (u.degree() == 1 || v.degree() == 1)
        return RationalFunctionUV::identity(ctx);
    for (unsigned t = 0; t < budget; ++t) {
        FieldElement x1, x2;
        if (ctx->is_finite()) {
            x1 = random_element(ctx, stream);
            x2 = random_element(ctx, stream);
        } else {
            const mpz_class box = 25 + 10 * static_cast<long>(t);
            x1 = random_boxed_integer(ctx, box, stream);
            x2 = random_boxed_integer(ctx, box, stream);
        }
        if (x1 == x2) continue;
        try {
            return gcrc_univariate(u, v, x1, x2);
        } catch (const denominator_vanishes_at_point&) {
            continue;
        } catch (const no_such_outer&) {
            continue;
        }
    }
    throw retry_budget_exhausted("univariate GCRC point budget exhausted");
}

}  // namespace detail

/// Lueroth generator of K(f, g) via one decomposition of f: f = u o h,
/// g = v o h if possible, then the GCRC w of u and v; the generator is
/// w o h.
inline LurothResult luroth_with_decomp(const RationalFunctionMV& f,
                                       const RationalFunctionMV& g,
                                       RandomStream& stream,
                                       const DecompOptions& options = {}) {
    LurothResult out{LurothOutcome::no_generator, std::nullopt};
    RationalFunctionUV u = RationalFunctionUV::identity(f.ctx());
    RationalFunctionMV h = f;
    if (f.degree() > 1) {
        const DecompReport r = decomp(f, stream, options);
        if (r.outcome == DecompOutcome::decomposed) {
            u = r.decomposition->u;
            h = r.decomposition->h;
        }
        out.trace.push_back(r.outcome == DecompOutcome::decomposed
                                ? "f decomposed"
                                : "f non-composite");
    }
    RationalFunctionUV v = RationalFunctionUV::identity(f.ctx());
    try {
        v = compute_outer_linear(g, h);
    } catch (const no_such_outer&) {
        return out;  // no v with g = v o h: no common field
    }
    const RationalFunctionUV w = detail::gcrc_with_retry(u, v, stream, 10);
    RationalFunctionMV generator = compose(w, h);
    // final verification against both inputs
    try {
        (void)compute_outer_linear(f, generator);
        (void)compute_outer_linear(g, generator);
    } catch (const no_such_outer&) {
        throw retry_budget_exhausted("generator verification failed");
    }
    out.outcome = LurothOutcome::generator;
    out.generator = std::move(generator);
    return out;
}

/// Lueroth generator of K(f_1, ..., f_m) by iterated pairwise reduction.
inline LurothResult luroth_generator(
    const std::vector<RationalFunctionMV>& functions, RandomStream& stream,
    unsigned budget_per_step = 10) {
    if (functions.empty()) throw error("need at least one function");
    LurothResult out{LurothOutcome::no_generator, std::nullopt};
    if (functions.size() == 1) {
        out.outcome = LurothOutcome::generator;
        out.generator = functions[0];
        return out;
    }
    RationalFunctionMV h = functions[0];
    for (std::size_t i = 1; i < functions.size(); ++i) {
        const SederbergResult step = detail::sederberg_with_retry(
            h, functions[i], stream, budget_per_step, out.retries_used);
        if (step.status != SederbergResult::Status::generator) return out;
        h = *step.generator;
        out.trace.push_back("merged input " + std::to_string(i + 1));
    }
    for (const auto& fi : functions) {
        try {
            (void)compute_outer_linear(fi, h);
        } catch (const no_such_outer&) {
            throw retry_budget_exhausted(
                "final generator fails to reach every input");
        }
    }
    out.outcome = LurothOutcome::generator;
    out.generator = std::move(h);
    return out;
}

/// If alpha*H_a + beta = H_b is solvable, H_a itself generates the same
/// field as H_a/H_b and is a polynomial generator.
inline std::optional<MultiPoly> polynomial_generator_upgrade(
    const MultiPoly& ha, const MultiPoly& hb) {
    const FieldCtx& ctx = ha.ctx();
    const Exponents zero_exp(ha.nvars(), 0);
    std::optional<FieldElement> alpha;
    for (const auto& [e, c] : hb.terms()) {
        if (e == zero_exp) continue;
        const FieldElement ca = ha.coefficient(e);
        if (ca.is_zero()) return std::nullopt;
        alpha = c / ca;
        break;
    }
    if (!alpha) return std::nullopt;  // hb constant: not a gcd pair
    const MultiPoly diff = hb - ha * *alpha;
    if (!diff.is_constant()) return std::nullopt;
    return ha;
}

}  // namespace ratdec

#endif
