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

#ifndef RATDEC_POLYGCD_HPP
#define RATDEC_POLYGCD_HPP

#include <utility>
#include <vector>

#include "ratdec/multipoly.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

// ---------------------------------------------------------------------------
// Canonical normalization.
//
// Finite fields: monic leading coefficient under graded-lex.
// Q: integer coefficients, primitive, positive leading coefficient.
// Every "up to a constant" comparison in the library uses this form.
// ---------------------------------------------------------------------------

/// The scalar content of a polynomial over Q, signed by the leading
/// coefficient (so f / rational_content(f) is integer-primitive with a
/// positive leading coefficient). Zero polynomial gives 0.
inline mpq_class rational_content(const MultiPoly& f) {
    if (f.is_zero()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        const mpq_class& q = c.rational_value();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                q.get_den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (f.leading_coefficient().rational_value() < 0) content = -content;
    return content;
}

/// f = unit * canonical with canonical as described above.
inline std::pair<FieldElement, MultiPoly> normalized_with_unit(
    const MultiPoly& f) {
    if (f.is_zero()) return {FieldElement::one(f.ctx()), f};
    FieldElement unit = f.ctx()->is_rationals()
                            ? FieldElement::from_rational(
                                  f.ctx(), rational_content(f))
                            : f.leading_coefficient();
    return {unit, f * unit.inv()};
}

inline MultiPoly normalize_canonical(const MultiPoly& f) {
    return normalized_with_unit(f).second;
}

inline UniPoly normalize_canonical(const UniPoly& f) {
    if (f.is_zero()) return f;
    if (!f.ctx()->is_rationals()) return f.monic();
    MultiPoly g = normalize_canonical(f.to_multipoly(f.ctx(), 1, 0));
    return to_unipoly(g, 0);
}

// ---------------------------------------------------------------------------
// Pseudo-division and the subresultant remainder sequence.
// ---------------------------------------------------------------------------

/// Pseudo-remainder of a by b in the variable var:
/// lc_var(b)^(deg a - deg b + 1) * a = q*b + r with deg_var r < deg_var b.
inline MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b,
                            unsigned var) {
    const long db = b.degree_in(var);
    if (db < 0) throw division_by_zero();
    MultiPoly r = a;
    const MultiPoly lcb = leading_coeff_in_var(b, var);
    long dr = r.degree_in(var);
    long steps = dr - db + 1;
    while (dr >= db && !r.is_zero()) {
        auto rc = coeffs_in_var(r, var);
        MultiPoly lcr = rc.back();
        // r <- lcb*r - lcr*x^(dr-db)*b
        MultiPoly shift_b =
            MultiPoly::variable(b.ctx(), b.nvars(), var)
                .pow(static_cast<unsigned long>(dr - db));
        r = r * lcb - lcr * shift_b * b;
        --steps;
        dr = r.degree_in(var);
    }
    // pad remaining multiplier so the pseudo-division identity is exact
    for (; steps > 0; --steps) r = r * lcb;
    return r;
}

namespace detail {

inline MultiPoly ring_pow(const MultiPoly& f, long k) {
    return f.pow(static_cast<unsigned long>(k));
}

}  // namespace detail

// forward declaration (content_in_var and multivariate_gcd are mutually
// recursive)
inline MultiPoly multivariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// Content of f viewed in one variable: gcd of its coefficients.
inline MultiPoly content_in_var(const MultiPoly& f, unsigned var) {
    MultiPoly c(f.ctx(), f.nvars());
    for (const auto& coeff : coeffs_in_var(f, var)) {
        if (coeff.is_zero()) continue;
        c = multivariate_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? MultiPoly::constant(f.ctx(), f.nvars(), 1) : c;
}

inline MultiPoly primitive_part_in_var(const MultiPoly& f, unsigned var) {
    return f.exact_divide(content_in_var(f, var));
}

/// Monic/primitive canonical gcd. gcd(0, b) is the normalized b; the gcd of
/// anything with a nonzero constant is 1.
inline MultiPoly multivariate_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_canonical(b);
    if (b.is_zero()) return normalize_canonical(a);
    const FieldCtx& ctx = a.ctx();
    const unsigned nvars = a.nvars();
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(ctx, nvars, 1);

    MultiPoly fa = a, fb = b;
    if (ctx->is_rationals()) {
        fa = normalize_canonical(fa);
        fb = normalize_canonical(fb);
    }

    // main variable: a variable occurring in both, smallest min-degree
    unsigned var = 0;
    long best = -1;
    for (unsigned v = 0; v < nvars; ++v) {
        const long da = fa.degree_in(v), db = fb.degree_in(v);
        if (da <= 0 || db <= 0) continue;
        const long m = std::min(da, db);
        if (best < 0 || m < best) {
            best = m;
            var = v;
        }
    }
    if (best < 0) {
        // no common variable: any common divisor involves no variable at all
        return MultiPoly::constant(ctx, nvars, 1);
    }

    const MultiPoly cont_a = content_in_var(fa, var);
    const MultiPoly cont_b = content_in_var(fb, var);
    MultiPoly A = fa.exact_divide(cont_a);
    MultiPoly B = fb.exact_divide(cont_b);
    const MultiPoly cont_gcd = multivariate_gcd(cont_a, cont_b);

    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    MultiPoly g = MultiPoly::constant(ctx, nvars, 1);
    MultiPoly h = g;
    MultiPoly result(ctx, nvars);
    while (true) {
        const long delta = A.degree_in(var) - B.degree_in(var);
        MultiPoly R = pseudo_rem(A, B, var);
        if (R.is_zero()) {
            result = B;
            break;
        }
        if (R.degree_in(var) == 0) {
            result = MultiPoly::constant(ctx, nvars, 1);
            break;
        }
        A = B;
        B = R.exact_divide(g * detail::ring_pow(h, delta));
        g = leading_coeff_in_var(A, var);
        if (delta > 0)
            h = detail::ring_pow(g, delta)
                    .exact_divide(detail::ring_pow(h, delta - 1));
        if (B.degree_in(var) == 0) {
            result = MultiPoly::constant(ctx, nvars, 1);
            break;
        }
    }
    if (!result.is_constant())
        result = result.exact_divide(content_in_var(result, var));
    return normalize_canonical(cont_gcd * result);
}

inline UniPoly multivariate_gcd(const UniPoly& a, const UniPoly& b) {
    return normalize_canonical(gcd(a, b));
}

/// Resultant eliminating one variable, by the subresultant pseudo-remainder
/// sequence (exact over any of the supported fields).
inline MultiPoly resultant_in_var(const MultiPoly& a, const MultiPoly& b,
                                  unsigned var) {
    const FieldCtx& ctx = a.ctx();
    const unsigned nvars = a.nvars();
    if (a.is_zero() || b.is_zero()) return MultiPoly(ctx, nvars);
    long da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 && db == 0) return MultiPoly::constant(ctx, nvars, 1);
    if (da == 0) return detail::ring_pow(a, db);
    if (db == 0) return detail::ring_pow(b, da);

    MultiPoly A = a, B = b;
    bool negate = false;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) negate = !negate;
    }
    const MultiPoly cont_a = content_in_var(A, var);
    const MultiPoly cont_b = content_in_var(B, var);
    A = A.exact_divide(cont_a);
    B = B.exact_divide(cont_b);
    MultiPoly t = detail::ring_pow(cont_a, db) * detail::ring_pow(cont_b, da);

    MultiPoly g = MultiPoly::constant(ctx, nvars, 1);
    MultiPoly h = g;
    while (true) {
        da = A.degree_in(var);
        db = B.degree_in(var);
        const long delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        MultiPoly R = pseudo_rem(A, B, var);
        if (R.is_zero()) return MultiPoly(ctx, nvars);
        A = B;
        B = R.exact_divide(g * detail::ring_pow(h, delta));
        g = leading_coeff_in_var(A, var);
        if (delta > 0)
            h = detail::ring_pow(g, delta)
                    .exact_divide(detail::ring_pow(h, delta - 1));
        if (B.degree_in(var) == 0) break;
    }
    const long dA = A.degree_in(var);
    MultiPoly out = detail::ring_pow(B, dA);
    if (dA > 1) out = out.exact_divide(detail::ring_pow(h, dA - 1));
    out = out * t;
    return negate ? -out : out;
}

/// True iff gcd(f, df/dXi) is constant for every occurring variable with a
/// nonzero derivative and, in characteristic p, f is not a p-th power in the
/// occurring variables.
inline bool is_squarefree(const MultiPoly& f) {
    if (f.is_zero()) return false;
    const auto vars = f.occurring_vars();
    if (vars.empty()) return true;
    const mpz_class& p = f.ctx()->characteristic();
    if (p > 0) {
        bool all_divisible = true;
        for (const auto& [e, c] : f.terms()) {
            for (unsigned v : vars)
                if (mpz_class(e[v]) % p != 0) {
                    all_divisible = false;
                    break;
                }
            if (!all_divisible) break;
        }
        if (all_divisible) return false;  // p-th power over a perfect field
    }
    for (unsigned v : vars) {
        const MultiPoly d = f.derivative(v);
        if (d.is_zero()) continue;
        if (!multivariate_gcd(f, d).is_constant()) return false;
    }
    return true;
}

}  // namespace ratdec

#endif
