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

#ifndef RATDEC_FACTOR_ABSOLUTE_HPP
#define RATDEC_FACTOR_ABSOLUTE_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ratdec/factor_multivariate.hpp"

namespace ratdec {

namespace detail {

/// Extension contexts are deterministic in (p, e); cache them, modulus
/// search is pure.
inline FieldCtx cached_extension(const mpz_class& p, unsigned e) {
    if (e <= 1) return FieldContext::prime(p);
    thread_local std::map<std::pair<std::string, unsigned>, FieldCtx> cache;
    const auto key = std::make_pair(p.get_str(), e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, FieldContext::extension(p, e)).first;
    return it->second;
}

}  // namespace detail

/// Re-tag an F_p polynomial over F_{p^e} (power-basis embedding).
inline MultiPoly embed_poly(const MultiPoly& f, const FieldCtx& target) {
    MultiPoly r(target, f.nvars());
    for (const auto& [e, c] : f.terms())
        r.add_term(e, embed(c, target));
    return r;
}

/// Split an F_{p^e} polynomial into its e power-basis component polynomials
/// over F_p: f = sum_i a^i * component_i.
inline std::vector<MultiPoly> basis_components(const MultiPoly& f) {
    const FieldCtx& ctx = f.ctx();
    if (!ctx->is_extension())
        throw unsupported_field("basis components need an extension field");
    const FieldCtx base = FieldContext::prime(ctx->p());
    std::vector<MultiPoly> out(ctx->ext_degree(), MultiPoly(base, f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        const auto coords = c.coords();
        for (unsigned i = 0; i < ctx->ext_degree(); ++i)
            if (coords[i] != 0)
                out[i].add_term(e, FieldElement::from_integer(base, coords[i]));
    }
    return out;
}

inline bool has_base_coefficients_only(const MultiPoly& f) {
    const auto comps = basis_components(f);
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (!comps[i].is_zero()) return false;
    return true;
}

/// Apply the coefficient Frobenius x -> x^p termwise.
inline MultiPoly frobenius_poly(const MultiPoly& f) {
    MultiPoly r(f.ctx(), f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c.pow(f.ctx()->p()));
    return r;
}

struct AbsoluteFactorization {
    FieldCtx extension;          // minimal F_{p^e} carrying all factors
    MultiFactorList factors;     // absolutely irreducible over `extension`
};

namespace detail {

/// Number of absolutely irreducible components of an F_p-irreducible G:
/// the factor count over F_{p^deg G} (the component count divides the
/// degree, and the components are already split there).
inline unsigned absolute_component_count(const MultiPoly& g,
                                         RandomStream& stream) {
    const long d = g.total_degree();
    if (d <= 1) return 1;
    const FieldCtx ext =
        cached_extension(g.ctx()->p(), static_cast<unsigned>(d));
    const MultiFactorList lifted =
        factor_multivariate(embed_poly(g, ext), stream);
    return static_cast<unsigned>(lifted.factors.size());
}

}  // namespace detail

/// Absolute factorization of a squarefree polynomial over a prime field:
/// rational factorization, component counts per factor, then one common
/// minimal extension F_{p^e} with e = lcm of the counts.
inline AbsoluteFactorization factor_absolute(const MultiPoly& f,
                                             RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    if (!ctx->is_prime_field())
        throw unsupported_field(
            "absolute factorization is implemented over prime fields");
    const MultiFactorList rational = factor_multivariate(f, stream);
    unsigned long e = 1;
    std::vector<unsigned> counts;
    for (const auto& [g, m] : rational.factors) {
        const unsigned c = detail::absolute_component_count(g, stream);
        counts.push_back(c);
        e = std::lcm(e, static_cast<unsigned long>(c));
    }
    if (e == 1) return {ctx, rational};

    const FieldCtx ext = detail::cached_extension(ctx->p(),
                                                  static_cast<unsigned>(e));
    MultiFactorList out{embed(rational.unit, ext), {}};
    for (std::size_t i = 0; i < rational.factors.size(); ++i) {
        const auto& [g, m] = rational.factors[i];
        if (counts[i] == 1) {
            out.factors.push_back({embed_poly(g, ext), m});
            continue;
        }
        MultiFactorList split = factor_multivariate(embed_poly(g, ext), stream);
        for (auto& [a, am] : split.factors)
            out.factors.push_back({a, am * m});
        out.unit *= split.unit;
    }
    sort_factors(out);
    return {ext, out};
}

/// True iff the squarefree f stays irreducible over the algebraic closure.
inline bool is_absolutely_irreducible(const MultiPoly& f,
                                      RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    if (!ctx->is_prime_field())
        throw unsupported_field(
            "absolute irreducibility test is implemented over prime fields");
    if (f.is_constant()) return false;
    if (f.total_degree() == 1) return true;
    const MultiFactorList rational = factor_multivariate(f, stream);
    if (!rational.certifies_irreducible(f)) return false;
    return detail::absolute_component_count(rational.factors[0].poly, stream) ==
           1;
}

}  // namespace ratdec

#endif
