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

#ifndef RATDEC_DECOMPOSE_HPP
#define RATDEC_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ratdec/ratfun.hpp"
#include "ratdec/series.hpp"

namespace ratdec {

enum class Certification { probabilistic, deterministic, polytope };

/// A verified decomposition f = u o h with deg u >= 2.
struct Decomposition {
    RationalFunctionUV u;
    RationalFunctionMV h;
    bool certified_noncomposite_h;
    Certification method;
};

enum class DecompOutcome { noncomposite, decomposed };

struct DecompReport {
    DecompOutcome outcome;
    std::optional<Decomposition> decomposition;
    unsigned trials_used = 0;
    unsigned points_sampled = 0;
    unsigned candidates_examined = 0;
    bool used_affine_change = false;
};

// ---------------------------------------------------------------------------
// Recovering the outer function u with f = u o h.
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<long> outer_degree(long deg_f, long deg_h) {
    if (deg_h < 1 || deg_f < 1) return std::nullopt;
    if (deg_f % deg_h != 0) return std::nullopt;
    return deg_f / deg_h;
}

}  // namespace detail

/// Solve for u by the linear system f2 * sum a_i h1^i h2^(k-i)
/// = f1 * sum b_i h1^i h2^(k-i), k = deg f / deg h, then verify by
/// composition. Throws no_such_outer if no verifying candidate exists.
inline RationalFunctionUV compute_outer_linear(const RationalFunctionMV& f,
                                               const RationalFunctionMV& h) {
    const FieldCtx& ctx = f.ctx();
    const auto k_opt = detail::outer_degree(f.degree(), h.degree());
    if (!k_opt) throw no_such_outer();
    const unsigned long k = static_cast<unsigned long>(*k_opt);

    std::vector<MultiPoly> basis;  // h1^i * h2^(k-i)
    {
        std::vector<MultiPoly> pow1{MultiPoly::constant(ctx, f.nvars(), 1)};
        std::vector<MultiPoly> pow2{MultiPoly::constant(ctx, f.nvars(), 1)};
        for (unsigned long i = 1; i <= k; ++i) {
            pow1.push_back(pow1.back() * h.num());
            pow2.push_back(pow2.back() * h.den());
        }
        for (unsigned long i = 0; i <= k; ++i)
            basis.push_back(pow1[i] * pow2[k - i]);
    }
    std::map<Exponents, std::size_t, GradedLexGreater> rows;
    std::vector<MultiPoly> cols;
    for (unsigned long i = 0; i <= k; ++i) cols.push_back(f.den() * basis[i]);
    for (unsigned long i = 0; i <= k; ++i) cols.push_back(-(f.num() * basis[i]));
    for (const auto& col : cols)
        for (const auto& [e, c] : col.terms()) rows.emplace(e, rows.size());
    Mat m = make_matrix(ctx, rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [e, c] : cols[j].terms())
            m[rows.find(e)->second][j] += c;

    for (const auto& v : nullspace(std::move(m), ctx, cols.size())) {
        std::vector<FieldElement> ac(v.begin(), v.begin() + k + 1);
        std::vector<FieldElement> bc(v.begin() + k + 1, v.end());
        UniPoly unum(ctx, std::move(ac)), uden(ctx, std::move(bc));
        if (uden.is_zero()) continue;
        RationalFunctionUV u(std::move(unum), std::move(uden));
        if (compose(u, h) == f) return u;
    }
    throw no_such_outer();
}

/// Same u via the series route: restrict to a line parallel to the last
/// variable (the axis itself first, then small offsets when a restriction
/// degenerates), invert the restriction of h locally, push f through, and
/// read u off a Pade approximant. Verified by full multivariate composition.
inline RationalFunctionUV compute_outer_series(const RationalFunctionMV& f,
                                               const RationalFunctionMV& h) {
    const FieldCtx& ctx = f.ctx();
    const auto k_opt = detail::outer_degree(f.degree(), h.degree());
    if (!k_opt) throw no_such_outer();
    const std::size_t k = static_cast<std::size_t>(*k_opt);

    const unsigned last = f.nvars() - 1;
    const unsigned others = f.nvars() - 1;
    auto restrict_line = [&](const MultiPoly& p,
                             const std::vector<FieldElement>& offset) {
        MultiPoly g = p;
        for (unsigned v = 0; v < others; ++v)
            g = g.partial_evaluate(v, offset[v]);
        return to_unipoly(g, last);
    };

    const long line_budget = 12;
    bool candidate_seen = false;
    for (long line = 0; line < line_budget; ++line) {
        std::vector<FieldElement> offset(others, FieldElement::zero(ctx));
        if (line > 0) {
            // deterministic small offsets after the axis itself
            for (unsigned v = 0; v < others; ++v) {
                const long value = ((line - 1) >> v) % 3 + ((line > 6) ? 1 : 0);
                offset[v] = FieldElement::from_integer(ctx, value);
            }
        }
        const UniPoly f1 = restrict_line(f.num(), offset);
        const UniPoly f2 = restrict_line(f.den(), offset);
        const UniPoly h1 = restrict_line(h.num(), offset);
        const UniPoly h2 = restrict_line(h.den(), offset);
        if (f2.is_zero() || h2.is_zero()) continue;
        if (std::max(h1.degree(), h2.degree()) < 1) continue;
        RationalFunctionUV h_line(h1, h2);
        RationalFunctionUV f_line(f1, f2);
        if (h_line.is_constant()) continue;

        // expansion point: regular and non-critical for h, regular for f
        std::optional<FieldElement> t0;
        const long budget = 50;
        for (long i = 0; i < budget; ++i) {
            if (ctx->is_finite() && mpz_class(i) >= ctx->cardinality()) break;
            FieldElement cand = ctx->is_finite()
                                    ? element_by_index(ctx, mpz_class(i))
                                    : FieldElement::from_integer(
                                          ctx, (i % 2) ? (i + 1) / 2 : -(i / 2));
            if (h_line.den().evaluate(cand).is_zero()) continue;
            if (f_line.den().evaluate(cand).is_zero()) continue;
            const auto slope = h_line.derivative_at(cand);
            if (!slope || slope->is_zero()) continue;
            t0 = cand;
            break;
        }
        if (!t0) continue;

        const std::size_t prec = 2 * k + 5;
        const TruncSeries local_inverse = compositional_inverse_at(
            h_line.num(), h_line.den(), *t0, prec);
        const TruncSeries num_series =
            compose_poly_series(f_line.num(), local_inverse);
        const TruncSeries den_series =
            compose_poly_series(f_line.den(), local_inverse);
        if (den_series.coefficient(0).is_zero()) continue;
        const TruncSeries phi = num_series / den_series;
        try {
            auto [p, q] = pade_approximant(phi, k, k);
            const FieldElement c = *h_line.evaluate(*t0);
            RationalFunctionUV u(p.shift(-c), q.shift(-c));
            candidate_seen = true;
            if (compose(u, h) == f) return u;
        } catch (const no_approximant&) {
            continue;
        }
    }
    if (candidate_seen) throw no_such_outer();
    throw singular_expansion_point();
}

/// Univariate analog of compute_outer_linear (used by the GCRC step).
inline RationalFunctionUV compute_outer_linear_uv(const RationalFunctionUV& f,
                                                  const RationalFunctionUV& h) {
    const FieldCtx& ctx = f.ctx();
    const auto k_opt = detail::outer_degree(f.degree(), h.degree());
    if (!k_opt) throw no_such_outer();
    const unsigned long k = static_cast<unsigned long>(*k_opt);
    std::vector<UniPoly> basis;
    {
        std::vector<UniPoly> pow1{UniPoly::constant(ctx, 1)};
        std::vector<UniPoly> pow2{UniPoly::constant(ctx, 1)};
        for (unsigned long i = 1; i <= k; ++i) {
            pow1.push_back(pow1.back() * h.num());
            pow2.push_back(pow2.back() * h.den());
        }
        for (unsigned long i = 0; i <= k; ++i)
            basis.push_back(pow1[i] * pow2[k - i]);
    }
    std::vector<UniPoly> cols;
    long maxdeg = 0;
    for (unsigned long i = 0; i <= k; ++i) cols.push_back(f.den() * basis[i]);
    for (unsigned long i = 0; i <= k; ++i) cols.push_back(-(f.num() * basis[i]));
    for (const auto& c : cols) maxdeg = std::max(maxdeg, c.degree());
    Mat m = make_matrix(ctx, static_cast<std::size_t>(maxdeg) + 1, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (long t = 0; t <= cols[j].degree(); ++t)
            m[static_cast<std::size_t>(t)][j] +=
                cols[j].coefficient(static_cast<std::size_t>(t));
    for (const auto& v : nullspace(std::move(m), ctx, cols.size())) {
        std::vector<FieldElement> ac(v.begin(), v.begin() + k + 1);
        std::vector<FieldElement> bc(v.begin() + k + 1, v.end());
        UniPoly unum(ctx, std::move(ac)), uden(ctx, std::move(bc));
        if (uden.is_zero()) continue;
        RationalFunctionUV u(std::move(unum), std::move(uden));
        if (compose_uv(u, h) == f) return u;
    }
    throw no_such_outer();
}

// ---------------------------------------------------------------------------
// The probabilistic decomposition algorithm.
// ---------------------------------------------------------------------------

struct DecompOptions {
    std::optional<std::pair<std::vector<FieldElement>,
                            std::vector<FieldElement>>>
        forced_points;           // seeds the first trial only
    unsigned retry_budget = 10;
    unsigned pair_cap = 25;      // minimal-degree factor pairs per trial
};

namespace detail {

inline std::vector<FieldElement> sample_point(const FieldCtx& ctx, unsigned n,
                                              long degree,
                                              RandomStream& stream) {
    std::vector<FieldElement> p;
    const mpz_class box =
        std::max<long>(101, 4 * degree * degree * degree);
    for (unsigned i = 0; i < n; ++i)
        p.push_back(ctx->is_finite() ? random_element(ctx, stream)
                                     : random_boxed_integer(ctx, box, stream));
    return p;
}

inline std::vector<MultiPoly> minimal_degree_factors(
    const MultiFactorList& list) {
    long best = -1;
    for (const auto& [g, m] : list.factors) {
        const long d = g.total_degree();
        if (d < 1) continue;
        if (best < 0 || d < best) best = d;
    }
    std::vector<MultiPoly> out;
    for (const auto& [g, m] : list.factors)
        if (g.total_degree() == best) out.push_back(g);
    return out;
}

}  // namespace detail

/// Probabilistic decomposition: factor two anchored pencil members, pair
/// minimal-degree factors as h, recover u, verify; resample on failure.
inline DecompReport decomp(const RationalFunctionMV& f, RandomStream& stream,
                           const DecompOptions& options = {}) {
    const FieldCtx& ctx = f.ctx();
    const long d = f.degree();
    DecompReport report{DecompOutcome::noncomposite, std::nullopt};
    if (f.is_constant() || d == 1) return report;
    if (f.nvars() < 2)
        throw dimension_guard("decomposition needs at least two variables");
    if (!characteristic_supports_degree(ctx, d))
        throw characteristic_too_small(
            "decomposition needs characteristic 0 or >= d(d-1)+1");

    // work in general position for the degree condition; pull h back after
    RationalFunctionMV work = f;
    std::optional<AffineChange> change;
    if (!check_general_position(f).degree_in_last_var) {
        change = random_affine_change(ctx, f.nvars(), d, stream);
        work = change->apply(f);
        report.used_affine_change = true;
    }

    for (unsigned trial = 0; trial < options.retry_budget; ++trial) {
        report.trials_used = trial + 1;
        std::vector<FieldElement> a, b;
        if (trial == 0 && options.forced_points) {
            a = options.forced_points->first;
            b = options.forced_points->second;
        } else {
            a = detail::sample_point(ctx, f.nvars(), d, stream);
            b = detail::sample_point(ctx, f.nvars(), d, stream);
            report.points_sampled += 2;
        }
        MultiPoly member_a(ctx, f.nvars()), member_b(ctx, f.nvars());
        try {
            member_a = anchored_pencil_member(work, a);
            member_b = anchored_pencil_member(work, b);
        } catch (const base_point_of_pencil&) {
            continue;
        }
        if (member_a.is_zero() || member_b.is_zero()) continue;
        const MultiFactorList fact_a = factor_multivariate(member_a, stream);
        const MultiFactorList fact_b = factor_multivariate(member_b, stream);
        if (fact_a.certifies_irreducible(member_a) ||
            fact_b.certifies_irreducible(member_b)) {
            report.outcome = DecompOutcome::noncomposite;
            return report;
        }
        const auto cand_a = detail::minimal_degree_factors(fact_a);
        const auto cand_b = detail::minimal_degree_factors(fact_b);
        unsigned pairs = 0;
        for (const auto& fa : cand_a) {
            for (const auto& fb : cand_b) {
                if (pairs >= options.pair_cap) break;
                ++pairs;
                ++report.candidates_examined;
                if (fa == fb) continue;
                RationalFunctionMV h_cand(fa, fb);
                const long dh = h_cand.degree();
                if (dh < 1 || d % dh != 0 || d / dh < 2) continue;
                try {
                    RationalFunctionUV u = compute_outer_linear(work, h_cand);
                    if (change) {
                        h_cand = change->apply_inverse(h_cand);
                        if (compose(u, h_cand) != f) continue;
                    }
                    report.outcome = DecompOutcome::decomposed;
                    report.decomposition = Decomposition{
                        std::move(u), std::move(h_cand), true,
                        Certification::probabilistic};
                    return report;
                } catch (const no_such_outer&) {
                    continue;
                }
            }
            if (pairs >= options.pair_cap) break;
        }
    }
    throw retry_budget_exhausted(
        "no verified decomposition and no irreducibility certificate within "
        "the retry budget");
}

// ---------------------------------------------------------------------------
// The deterministic decomposition algorithm over finite fields.
// ---------------------------------------------------------------------------

/// Pull (h1, h2) out of an absolutely irreducible factor with a coefficient
/// outside the base field: h1 is the basis-constant component, h2 the first
/// nonzero higher component. The pair spans the same degree-1 pencil as the
/// factor's true components.
inline std::pair<MultiPoly, MultiPoly> extract_h_from_extension_factor(
    const MultiPoly& g) {
    const auto comps = basis_components(g);
    for (std::size_t j = 1; j < comps.size(); ++j) {
        if (!comps[j].is_zero()) return {comps[0], comps[j]};
    }
    throw factor_is_rational();
}

/// Sample-set size required for the deterministic certification:
/// max(d^2, ceil(3/2 d^2 - 2d + 1)).
inline unsigned long deterministic_sample_bound(long d) {
    const unsigned long dd = static_cast<unsigned long>(d);
    const unsigned long quad = dd * dd;
    const unsigned long alt = (3 * dd * dd + 1) / 2 - 2 * dd + 1;
    return std::max(quad, alt);
}

inline std::vector<FieldElement> default_sample_set(const FieldCtx& ctx,
                                                    long d) {
    const mpz_class want(deterministic_sample_bound(d));
    const mpz_class have = ctx->cardinality();
    std::vector<FieldElement> s;
    for (mpz_class i = 0; i < want && i < have; ++i)
        s.push_back(element_by_index(ctx, i));
    return s;
}

/// Deterministic decomposition over a prime field: scan the sample set,
/// absolutely factor f1 + s*f2, and read h off the factors. NonComposite
/// and Decomposed results are certified; exhausting an undersized sample
/// set raises field_too_small.
inline DecompReport decomp_det(const RationalFunctionMV& f,
                               const std::vector<FieldElement>& sample_set,
                               RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    if (!ctx->is_prime_field())
        throw unsupported_field(
            "the deterministic algorithm runs over prime fields");
    const long d = f.degree();
    DecompReport report{DecompOutcome::noncomposite, std::nullopt};
    if (f.is_constant() || d == 1) return report;
    const bool set_sufficient =
        sample_set.size() >= deterministic_sample_bound(d);

    for (const auto& s : sample_set) {
        report.trials_used += 1;
        const MultiPoly member = f.num() + f.den() * s;
        if (member.total_degree() < d) continue;

        // gather absolutely irreducible factors, split by where their
        // coefficients live
        std::vector<MultiPoly> rational_factors;
        std::vector<MultiPoly> extension_factors;  // over some F_{p^e}
        bool absolutely_irreducible = true;
        const MultiFactorList classes = squarefree_decomposition(member);
        if (classes.factors.size() != 1 ||
            classes.factors[0].multiplicity != 1)
            absolutely_irreducible = false;
        for (const auto& [part, mult] : classes.factors) {
            const AbsoluteFactorization abs = factor_absolute(part, stream);
            if (abs.factors.factors.size() != 1 || mult != 1)
                absolutely_irreducible = false;
            for (const auto& [g, m] : abs.factors.factors) {
                if (abs.extension->is_prime_field()) {
                    rational_factors.push_back(g);
                } else if (has_base_coefficients_only(g)) {
                    rational_factors.push_back(basis_components(g)[0]);
                } else {
                    extension_factors.push_back(g);
                }
            }
        }
        if (absolutely_irreducible) {
            report.outcome = DecompOutcome::noncomposite;
            return report;  // certified: an irreducible full-degree member
        }

        std::vector<std::pair<MultiPoly, MultiPoly>> candidates;
        for (std::size_t i = 0; i < rational_factors.size(); ++i)
            for (std::size_t j = i + 1; j < rational_factors.size(); ++j)
                candidates.emplace_back(rational_factors[i],
                                        rational_factors[j]);
        for (const auto& g : extension_factors) {
            try {
                candidates.push_back(extract_h_from_extension_factor(g));
            } catch (const factor_is_rational&) {
                continue;
            }
        }
        for (const auto& [h1, h2] : candidates) {
            ++report.candidates_examined;
            if (h1.is_zero() || h2.is_zero()) continue;
            RationalFunctionMV h_cand(h1, h2);
            const long dh = h_cand.degree();
            if (dh < 1 || d % dh != 0 || d / dh < 2) continue;
            try {
                RationalFunctionUV u = compute_outer_linear(f, h_cand);
                report.outcome = DecompOutcome::decomposed;
                report.decomposition =
                    Decomposition{std::move(u), std::move(h_cand), true,
                                  Certification::deterministic};
                return report;
            } catch (const no_such_outer&) {
                continue;
            }
        }
    }
    if (!set_sufficient)
        throw field_too_small(
            "sample set exhausted below the certification bound max(d^2, "
            "3/2 d^2 - 2d + 1)");
    throw retry_budget_exhausted("certified scan exhausted the sample set");
}

inline DecompReport decomp_det(const RationalFunctionMV& f,
                               RandomStream& stream) {
    return decomp_det(f, default_sample_set(f.ctx(), f.degree()), stream);
}

// ---------------------------------------------------------------------------
// One-sided probabilistic test.
// ---------------------------------------------------------------------------

/// True when some anchored pencil member at a random point is irreducible of
/// full degree (absolutely irreducible over F_p; rationally irreducible over
/// Q, which is weaker evidence). False is inconclusive on its own.
inline bool is_noncomposite_probabilistic(const RationalFunctionMV& f,
                                          unsigned trials,
                                          RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    const long d = f.degree();
    if (d <= 1) return true;
    for (unsigned t = 0; t < trials; ++t) {
        const auto a = detail::sample_point(ctx, f.nvars(), d, stream);
        MultiPoly member(ctx, f.nvars());
        try {
            member = anchored_pencil_member(f, a);
        } catch (const base_point_of_pencil&) {
            continue;
        }
        if (member.total_degree() < d) continue;
        if (ctx->is_prime_field()) {
            if (is_absolutely_irreducible(member, stream)) return true;
        } else {
            if (is_irreducible_rational(member, stream)) return true;
        }
    }
    return false;
}

}  // namespace ratdec

#endif
