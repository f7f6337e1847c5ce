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

#ifndef RATDEC_RATFUN_HPP
#define RATDEC_RATFUN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratdec/factor_absolute.hpp"
#include "ratdec/linalg.hpp"
#include "ratdec/polygcd.hpp"
#include "ratdec/rng.hpp"

namespace ratdec {

namespace detail {

/// Joint scale for a reduced fraction over Q: both parts become integral
/// with joint content 1 and a positive leading denominator coefficient.
/// Over finite fields the denominator is made monic.
inline FieldElement pair_scale(
    const FieldCtx& ctx, const std::vector<const FieldElement*>& num_coeffs,
    const FieldElement& den_lead,
    const std::vector<const FieldElement*>& den_coeffs) {
    if (!ctx->is_rationals()) return den_lead.inv();
    mpz_class num_gcd = 0, den_lcm = 1;
    auto scan = [&](const std::vector<const FieldElement*>& cs) {
        for (const FieldElement* c : cs) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                    c->rational_value().get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    c->rational_value().get_den().get_mpz_t());
        }
    };
    scan(num_coeffs);
    scan(den_coeffs);
    mpq_class scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (den_lead.rational_value() < 0) scale = -scale;
    return FieldElement::from_rational(ctx, scale).inv();
}

}  // namespace detail

/// Reduced multivariate rational function: gcd(num, den) constant, den
/// nonzero, and the pair jointly canonicalized (den monic over finite
/// fields; both integral with joint content 1 and positive-leading den
/// over Q).
class RationalFunctionMV {
   public:
    RationalFunctionMV(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) throw zero_denominator();
        require_same_context(num.ctx(), den.ctx());
        if (num.nvars() != den.nvars()) throw context_mismatch();
        if (!num.is_zero()) {
            const MultiPoly g = multivariate_gcd(num, den);
            if (!g.is_constant()) {
                num = num.exact_divide(g);
                den = den.exact_divide(g);
            }
        } else {
            den = MultiPoly::constant(den.ctx(), den.nvars(), 1);
        }
        std::vector<const FieldElement*> nc, dc;
        for (const auto& [e, c] : num.terms()) nc.push_back(&c);
        for (const auto& [e, c] : den.terms()) dc.push_back(&c);
        const FieldElement u = detail::pair_scale(
            num.ctx(), nc, den.leading_coefficient(), dc);
        num_ = num * u;
        den_ = den * u;
    }

    static RationalFunctionMV from_poly(const MultiPoly& num) {
        return RationalFunctionMV(
            num, MultiPoly::constant(num.ctx(), num.nvars(), 1));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const FieldCtx& ctx() const { return num_.ctx(); }
    unsigned nvars() const { return num_.nvars(); }

    /// max(deg num, deg den) after reduction.
    long degree() const {
        return std::max(num_.total_degree(), den_.total_degree());
    }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    std::optional<FieldElement> evaluate(
        const std::vector<FieldElement>& point) const {
        const FieldElement d = den_.evaluate(point);
        if (d.is_zero()) return std::nullopt;
        return num_.evaluate(point) / d;
    }

    bool operator==(const RationalFunctionMV& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunctionMV& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (den_.is_constant() && den_.constant_value().is_one())
            return num_.to_string(names);
        return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) +
               ")";
    }

   private:
    MultiPoly num_, den_;
};

/// Reduced univariate rational function with the same conventions.
class RationalFunctionUV {
   public:
    RationalFunctionUV(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw zero_denominator();
        require_same_context(num.ctx(), den.ctx());
        if (!num.is_zero()) {
            const UniPoly g = gcd(num, den);
            if (g.degree() > 0) {
                num = num.exact_divide(g);
                den = den.exact_divide(g);
            }
        } else {
            den = UniPoly::constant(den.ctx(), 1);
        }
        std::vector<const FieldElement*> nc, dc;
        for (const auto& c : num.coeffs())
            if (!c.is_zero()) nc.push_back(&c);
        for (const auto& c : den.coeffs())
            if (!c.is_zero()) dc.push_back(&c);
        const FieldElement u = detail::pair_scale(
            num.ctx(), nc, den.leading_coefficient(), dc);
        num_ = num * u;
        den_ = den * u;
    }

    static RationalFunctionUV from_poly(const UniPoly& num) {
        return RationalFunctionUV(num, UniPoly::constant(num.ctx(), 1));
    }

    static RationalFunctionUV identity(const FieldCtx& ctx) {
        return from_poly(UniPoly::variable(ctx));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const FieldCtx& ctx() const { return num_.ctx(); }

    long degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_constant() const { return degree() <= 0; }

    std::optional<FieldElement> evaluate(const FieldElement& x) const {
        const FieldElement d = den_.evaluate(x);
        if (d.is_zero()) return std::nullopt;
        return num_.evaluate(x) / d;
    }

    /// Derivative value at a regular point.
    std::optional<FieldElement> derivative_at(const FieldElement& x) const {
        const FieldElement d = den_.evaluate(x);
        if (d.is_zero()) return std::nullopt;
        const FieldElement n = (num_.derivative() * den_ -
                                num_ * den_.derivative())
                                   .evaluate(x);
        return n / (d * d);
    }

    bool operator==(const RationalFunctionUV& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunctionUV& o) const { return !(*this == o); }

    std::string to_string(const std::string& name = "T") const {
        if (den_.is_constant() && den_.coefficient(0).is_one())
            return num_.to_string(name);
        return "(" + num_.to_string(name) + ")/(" + den_.to_string(name) + ")";
    }

   private:
    UniPoly num_, den_;
};

/// make_reduced: the constructor already reduces; this spells the operation.
inline RationalFunctionMV make_reduced(const MultiPoly& num,
                                       const MultiPoly& den) {
    return RationalFunctionMV(num, den);
}

// ---------------------------------------------------------------------------
// Composition.
// ---------------------------------------------------------------------------

/// Homogenized evaluation: for u = sum a_i T^i of degree bound k, returns
/// sum a_i h1^i h2^(k-i).
inline MultiPoly homogeneous_eval(const UniPoly& u, unsigned long k,
                                  const MultiPoly& h1, const MultiPoly& h2) {
    const FieldCtx& ctx = h1.ctx();
    MultiPoly acc(ctx, h1.nvars());
    std::vector<MultiPoly> pow1{MultiPoly::constant(ctx, h1.nvars(), 1)};
    std::vector<MultiPoly> pow2{MultiPoly::constant(ctx, h1.nvars(), 1)};
    for (unsigned long i = 1; i <= k; ++i) {
        pow1.push_back(pow1.back() * h1);
        pow2.push_back(pow2.back() * h2);
    }
    for (unsigned long i = 0; i <= k; ++i) {
        const FieldElement a = u.coefficient(i);
        if (a.is_zero()) continue;
        acc += pow1[i] * pow2[k - i] * a;
    }
    return acc;
}

/// u(h) as a reduced rational function.
inline RationalFunctionMV compose(const RationalFunctionUV& u,
                                  const RationalFunctionMV& h) {
    const unsigned long k = static_cast<unsigned long>(
        std::max(u.degree(), 0L));
    MultiPoly num = homogeneous_eval(u.num(), k, h.num(), h.den());
    MultiPoly den = homogeneous_eval(u.den(), k, h.num(), h.den());
    return RationalFunctionMV(std::move(num), std::move(den));
}

inline UniPoly homogeneous_eval_uv(const UniPoly& u, unsigned long k,
                                   const UniPoly& h1, const UniPoly& h2) {
    const FieldCtx& ctx = h1.ctx();
    UniPoly acc(ctx);
    std::vector<UniPoly> pow1{UniPoly::constant(ctx, 1)};
    std::vector<UniPoly> pow2{UniPoly::constant(ctx, 1)};
    for (unsigned long i = 1; i <= k; ++i) {
        pow1.push_back(pow1.back() * h1);
        pow2.push_back(pow2.back() * h2);
    }
    for (unsigned long i = 0; i <= k; ++i) {
        const FieldElement a = u.coefficient(i);
        if (a.is_zero()) continue;
        acc += pow1[i] * pow2[k - i] * a;
    }
    return acc;
}

inline RationalFunctionUV compose_uv(const RationalFunctionUV& u,
                                     const RationalFunctionUV& w) {
    const unsigned long k = static_cast<unsigned long>(
        std::max(u.degree(), 0L));
    UniPoly num = homogeneous_eval_uv(u.num(), k, w.num(), w.den());
    UniPoly den = homogeneous_eval_uv(u.den(), k, w.num(), w.den());
    return RationalFunctionUV(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Pencil members.
// ---------------------------------------------------------------------------

/// mu*f1 - lambda*f2.
inline MultiPoly pencil_member(const RationalFunctionMV& f,
                               const FieldElement& mu,
                               const FieldElement& lambda) {
    if (mu.is_zero() && lambda.is_zero())
        throw error("pencil member needs (mu, lambda) != (0, 0)");
    return f.num() * mu - f.den() * lambda;
}

/// f2(a)*f1(X) - f1(a)*f2(X); the member through the value of f at a.
inline MultiPoly anchored_pencil_member(const RationalFunctionMV& f,
                                        const std::vector<FieldElement>& a) {
    const FieldElement v1 = f.num().evaluate(a);
    const FieldElement v2 = f.den().evaluate(a);
    if (v1.is_zero() && v2.is_zero()) throw base_point_of_pencil();
    return pencil_member(f, v2, v1);
}

// ---------------------------------------------------------------------------
// General-position conditions for the series route: (i) the total degree is
// carried by the last variable; (ii) the restriction to the last-variable
// axis is transverse (nonzero resultant against its derivative, with the
// pencil parameter kept formal).
// ---------------------------------------------------------------------------

struct GeneralPosition {
    bool degree_in_last_var;
    bool axis_restriction_transverse;
    bool both() const { return degree_in_last_var && axis_restriction_transverse; }
};

inline GeneralPosition check_general_position(const RationalFunctionMV& f) {
    const unsigned n = f.nvars();
    const unsigned last = n - 1;
    const long d = f.degree();
    const bool deg_ok =
        std::max(f.num().degree_in(last), f.den().degree_in(last)) == d;

    // restrict to the axis (0, ..., 0, X_n)
    MultiPoly g1 = f.num(), g2 = f.den();
    for (unsigned v = 0; v + 1 < n; ++v) {
        const FieldElement z = FieldElement::zero(f.ctx());
        g1 = g1.partial_evaluate(v, z);
        g2 = g2.partial_evaluate(v, z);
    }
    // bivariate in (X_n, Lambda): A = g1 + Lambda*g2, slot 0 is X_n and
    // slot 1 the formal pencil parameter
    std::vector<unsigned> mapv(n, 0);
    mapv[last] = 0;
    MultiPoly A = g1.map_vars(2, mapv) +
                  g2.map_vars(2, mapv) * MultiPoly::variable(f.ctx(), 2, 1);
    MultiPoly B = A.derivative(0);
    bool res_ok = false;
    if (A.degree_in(0) > 0 && !B.is_zero())
        res_ok = !resultant_in_var(A, B, 0).is_zero();
    return {deg_ok, res_ok};
}

// ---------------------------------------------------------------------------
// Affine coordinate changes.
// ---------------------------------------------------------------------------

/// Substitute every variable simultaneously.
inline MultiPoly substitute_all(const MultiPoly& f,
                                const std::vector<MultiPoly>& images) {
    const FieldCtx& ctx = f.ctx();
    const unsigned n = f.nvars();
    std::vector<std::vector<MultiPoly>> pows(n);
    for (unsigned v = 0; v < n; ++v) {
        pows[v].push_back(MultiPoly::constant(ctx, images[v].nvars(), 1));
        const long d = f.degree_in(v);
        for (long k = 1; k <= d; ++k)
            pows[v].push_back(pows[v].back() * images[v]);
    }
    MultiPoly acc(ctx, images.empty() ? n : images[0].nvars());
    for (const auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(ctx, acc.nvars(), c);
        for (unsigned v = 0; v < n; ++v)
            if (e[v] > 0) t *= pows[v][e[v]];
        acc += t;
    }
    return acc;
}

/// Invertible affine substitution X -> A*X + c together with its inverse.
struct AffineChange {
    Mat a;
    Vec c;
    Mat a_inv;

    std::vector<MultiPoly> forward_images(const FieldCtx& ctx,
                                          unsigned n) const {
        std::vector<MultiPoly> imgs;
        for (unsigned i = 0; i < n; ++i) {
            MultiPoly L = MultiPoly::constant(ctx, n, c[i]);
            for (unsigned j = 0; j < n; ++j)
                L += MultiPoly::variable(ctx, n, j) * a[i][j];
            imgs.push_back(L);
        }
        return imgs;
    }

    std::vector<MultiPoly> inverse_images(const FieldCtx& ctx,
                                          unsigned n) const {
        std::vector<MultiPoly> imgs;
        for (unsigned i = 0; i < n; ++i) {
            MultiPoly L(ctx, n);
            for (unsigned j = 0; j < n; ++j) {
                L += (MultiPoly::variable(ctx, n, j) -
                      MultiPoly::constant(ctx, n, c[j])) *
                     a_inv[i][j];
            }
            imgs.push_back(L);
        }
        return imgs;
    }

    RationalFunctionMV apply(const RationalFunctionMV& f) const {
        const auto imgs = forward_images(f.ctx(), f.nvars());
        return RationalFunctionMV(substitute_all(f.num(), imgs),
                                  substitute_all(f.den(), imgs));
    }

    RationalFunctionMV apply_inverse(const RationalFunctionMV& f) const {
        const auto imgs = inverse_images(f.ctx(), f.nvars());
        return RationalFunctionMV(substitute_all(f.num(), imgs),
                                  substitute_all(f.den(), imgs));
    }
};

inline AffineChange random_affine_change(const FieldCtx& ctx, unsigned n,
                                         long degree, RandomStream& stream) {
    if (ctx->is_finite() && ctx->cardinality() < 4 * std::max(degree, 1L))
        throw field_too_small("affine change needs at least 4*deg elements");
    const mpz_class box = std::max(7L, 2 * degree);
    while (true) {
        Mat a = make_matrix(ctx, n, n);
        Vec c(n, FieldElement::zero(ctx));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j)
                a[i][j] = ctx->is_finite() ? random_element(ctx, stream)
                                           : random_boxed_integer(ctx, box,
                                                                  stream);
            c[i] = ctx->is_finite() ? random_element(ctx, stream)
                                    : random_boxed_integer(ctx, box, stream);
        }
        auto inv = inverse(a, ctx);
        if (!inv) continue;
        return AffineChange{std::move(a), std::move(c), std::move(*inv)};
    }
}

// ---------------------------------------------------------------------------
// Spectrum by brute force over a small prime field.
// ---------------------------------------------------------------------------

/// Canonical (mu : lambda) points: lambda = 1, or the point at infinity
/// (1 : 0); kept sorted and duplicate-free.
using ProjectivePointSet = std::vector<std::pair<FieldElement, FieldElement>>;

/// All (mu : lambda) in P^1(F_p) whose pencil member drops degree or is
/// absolutely reducible. Guarded to p <= 1024.
inline ProjectivePointSet spectrum_bruteforce(const RationalFunctionMV& f,
                                              RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    if (!ctx->is_prime_field())
        throw unsupported_field("spectrum enumeration needs a prime field");
    if (ctx->cardinality() > 1024) throw field_too_large_for_enumeration();
    const long d = f.degree();
    ProjectivePointSet out;
    const FieldElement one = FieldElement::one(ctx);
    const FieldElement zero = FieldElement::zero(ctx);
    auto member_in_spectrum = [&](const MultiPoly& member) {
        if (member.total_degree() < d) return true;
        return !is_absolutely_irreducible(member, stream);
    };
    for (mpz_class m = 0; m < ctx->p(); ++m) {
        const FieldElement mu = FieldElement::from_integer(ctx, m);
        if (member_in_spectrum(pencil_member(f, mu, one)))
            out.emplace_back(mu, one);
    }
    if (member_in_spectrum(pencil_member(f, one, zero)))
        out.emplace_back(one, zero);
    return out;
}

// ---------------------------------------------------------------------------
// Degree-1 (Moebius) relations between generators.
// ---------------------------------------------------------------------------

/// Find w = (alpha*T + beta)/(gamma*T + delta) with target = w o h, if one
/// exists; the returned w is invertible (degree exactly 1).
inline std::optional<RationalFunctionUV> mobius_between(
    const RationalFunctionMV& target, const RationalFunctionMV& h) {
    const FieldCtx& ctx = h.ctx();
    // target_num*(gamma*h1 + delta*h2) - target_den*(alpha*h1 + beta*h2) = 0
    const MultiPoly t1h1 = target.num() * h.num();
    const MultiPoly t1h2 = target.num() * h.den();
    const MultiPoly t2h1 = target.den() * h.num();
    const MultiPoly t2h2 = target.den() * h.den();
    std::map<Exponents, std::size_t, GradedLexGreater> rows;
    auto note_rows = [&](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms())
            rows.emplace(e, rows.size());
    };
    note_rows(t1h1);
    note_rows(t1h2);
    note_rows(t2h1);
    note_rows(t2h2);
    Mat m = make_matrix(ctx, rows.size(), 4);
    auto fill = [&](const MultiPoly& p, std::size_t col, bool negate) {
        for (const auto& [e, c] : p.terms()) {
            auto it = rows.find(e);
            m[it->second][col] += negate ? -c : c;
        }
    };
    // columns: alpha, beta, gamma, delta
    fill(t2h1, 0, true);
    fill(t2h2, 1, true);
    fill(t1h1, 2, false);
    fill(t1h2, 3, false);
    for (const auto& v : nullspace(std::move(m), ctx, 4)) {
        const FieldElement det = v[0] * v[3] - v[1] * v[2];
        if (det.is_zero()) continue;
        RationalFunctionUV w(UniPoly(ctx, {v[1], v[0]}),
                             UniPoly(ctx, {v[3], v[2]}));
        if (compose(w, h) == target) return w;
    }
    return std::nullopt;
}

inline bool mobius_equivalent(const RationalFunctionMV& a,
                              const RationalFunctionMV& b) {
    return mobius_between(a, b).has_value();
}

}  // namespace ratdec

#endif
