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

#ifndef RATDEC_FACTOR_UNIVARIATE_HPP
#define RATDEC_FACTOR_UNIVARIATE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ratdec/polygcd.hpp"
#include "ratdec/rng.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

struct UniFactor {
    UniPoly poly;
    unsigned multiplicity;
};

struct UniFactorList {
    FieldElement unit;
    std::vector<UniFactor> factors;

    UniPoly reassemble(const FieldCtx& ctx) const {
        UniPoly f = UniPoly::constant(ctx, unit);
        for (const auto& [g, m] : factors) f *= g.pow(m);
        return f;
    }
};

inline int cmp(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long k = a.degree(); k >= 0; --k) {
        const int c = FieldElement::cmp(a.coefficient(static_cast<std::size_t>(k)),
                                        b.coefficient(static_cast<std::size_t>(k)));
        if (c != 0) return c;
    }
    return 0;
}

inline void sort_factors(UniFactorList& list) {
    std::sort(list.factors.begin(), list.factors.end(),
              [](const UniFactor& x, const UniFactor& y) {
                  return cmp(x.poly, y.poly) < 0;
              });
}

namespace detail {

// ---------------------------------------------------------------------------
// Squarefree decomposition.
// ---------------------------------------------------------------------------

/// Yun's algorithm; valid in characteristic 0 or > deg f. Input monic (or
/// primitive); factors returned pairwise coprime and squarefree.
inline std::vector<UniFactor> squarefree_yun(const UniPoly& f) {
    std::vector<UniFactor> out;
    UniPoly d = f.derivative();
    UniPoly a = gcd(f, d);
    UniPoly b = f.exact_divide(a);
    UniPoly c = d.exact_divide(a);
    unsigned i = 1;
    while (b.degree() > 0) {
        UniPoly delta = c - b.derivative();
        UniPoly g = gcd(b, delta);
        if (g.degree() > 0) out.push_back({g.monic(), i});
        b = b.exact_divide(g);
        c = delta.exact_divide(g);
        ++i;
    }
    return out;
}

inline FieldElement pth_root_coeff(const FieldElement& c) {
    const FieldCtx& ctx = c.ctx();
    if (ctx->is_prime_field()) return c;  // Frobenius is the identity on F_p
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), ctx->p().get_mpz_t(), ctx->ext_degree() - 1);
    return c.pow(e);
}

/// p-th root of f = g(x^p) over a finite (perfect) field.
inline UniPoly pth_root(const UniPoly& f, unsigned long p) {
    std::vector<FieldElement> c;
    for (std::size_t k = 0; k * p <= static_cast<std::size_t>(f.degree()); ++k)
        c.push_back(pth_root_coeff(f.coefficient(k * p)));
    return UniPoly(f.ctx(), std::move(c));
}

/// Full squarefree decomposition over a finite field, any characteristic.
inline void squarefree_finite(const UniPoly& f, unsigned mult_multiplier,
                              std::vector<UniFactor>& out) {
    const mpz_class& pz = f.ctx()->characteristic();
    const unsigned long p = pz.get_ui();
    UniPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_finite(pth_root(f, p), mult_multiplier * static_cast<unsigned>(p),
                          out);
        return;
    }
    UniPoly c = gcd(f, d);
    UniPoly w = f.exact_divide(c);
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly z = w.exact_divide(y);
        if (z.degree() > 0) out.push_back({z.monic(), i * mult_multiplier});
        ++i;
        w = std::move(y);
        c = c.exact_divide(w);
    }
    if (c.degree() > 0)
        squarefree_finite(pth_root(c, p), mult_multiplier * static_cast<unsigned>(p),
                          out);
}

// ---------------------------------------------------------------------------
// Cantor-Zassenhaus over F_q.
// ---------------------------------------------------------------------------

inline UniPoly random_poly_below(const FieldCtx& ctx, long degree,
                                 RandomStream& stream) {
    std::vector<FieldElement> c;
    for (long k = 0; k < degree; ++k) c.push_back(random_element(ctx, stream));
    return UniPoly(ctx, std::move(c));
}

/// Equal-degree splitting of a monic squarefree product of irreducibles of
/// degree d over F_q.
inline void equal_degree_split(const UniPoly& f, long d, const mpz_class& q,
                               RandomStream& stream,
                               std::vector<UniPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldCtx& ctx = f.ctx();
    while (true) {
        UniPoly a = random_poly_below(ctx, f.degree(), stream);
        if (a.degree() < 1) continue;
        UniPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, q, stream, out);
            equal_degree_split(f.exact_divide(g), d, q, stream, out);
            return;
        }
        UniPoly b(ctx);
        if (mpz_odd_p(q.get_mpz_t())) {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(),
                       static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = powmod(a, e, f) - UniPoly::constant(ctx, 1);
        } else {
            // char 2: trace map sum a^(2^i)
            const unsigned long bits =
                mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^bits
            UniPoly t = a % f;
            UniPoly acc = t;
            for (unsigned long i = 1; i < bits * static_cast<unsigned long>(d);
                 ++i) {
                t = mulmod(t, t, f);
                acc += t;
            }
            b = acc % f;
        }
        UniPoly h = gcd(b, f);
        if (h.degree() > 0 && h.degree() < f.degree()) {
            equal_degree_split(h, d, q, stream, out);
            equal_degree_split(f.exact_divide(h), d, q, stream, out);
            return;
        }
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
inline std::vector<UniPoly> factor_squarefree_finite(const UniPoly& f,
                                                     RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    const mpz_class q = ctx->cardinality();
    std::vector<UniPoly> out;
    UniPoly rest = f;
    UniPoly x = UniPoly::variable(ctx);
    UniPoly h = x % rest;
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back(rest);
            break;
        }
        h = powmod(h, q, rest);
        UniPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            equal_degree_split(g.monic(), d, q, stream, out);
            rest = rest.exact_divide(g);
            h = h % rest;
        }
    }
    return out;
}

inline UniFactorList factor_univariate_finite(const UniPoly& f,
                                              RandomStream& stream) {
    UniFactorList result{f.leading_coefficient(), {}};
    std::vector<UniFactor> squarefree_parts;
    squarefree_finite(f.monic(), 1, squarefree_parts);
    for (const auto& [part, mult] : squarefree_parts) {
        for (auto& irr : factor_squarefree_finite(part, stream))
            result.factors.push_back({irr.monic(), mult});
    }
    sort_factors(result);
    return result;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Q.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // dense integer coefficients

inline void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zp_trim(r);
    return r;
}

inline void zp_mod_inplace(ZPoly& f, const mpz_class& m) {
    for (auto& c : f) c = mod_canonical(c, m);
    zp_trim(f);
}

inline ZPoly zp_balanced(ZPoly f, const mpz_class& m) {
    for (auto& c : f) {
        c = mod_canonical(c, m);
        if (2 * c > m) c -= m;
    }
    zp_trim(f);
    return f;
}

/// Exact division test of integer polynomials (b monic); returns quotient
/// when the remainder is zero.
inline bool zp_divides_monic(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    ZPoly r = a;
    quotient.clear();
    if (r.size() < b.size()) return r.empty();
    quotient.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
        mpz_class c = r.back();
        const std::size_t shift = r.size() - b.size();
        quotient[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        zp_trim(r);
        if (!r.empty() && r.size() < b.size()) return false;
    }
    return r.empty();
}

inline UniPoly zp_to_unipoly(const ZPoly& f, const FieldCtx& ctx) {
    std::vector<FieldElement> c;
    c.reserve(f.size());
    for (const auto& v : f) c.push_back(FieldElement::from_integer(ctx, v));
    return UniPoly(ctx, std::move(c));
}

inline ZPoly unipoly_to_zp(const UniPoly& f) {
    ZPoly out;
    for (const auto& c : f.coeffs()) {
        if (c.ctx()->is_rationals()) {
            if (c.rational_value().get_den() != 1)
                throw error("expected integer coefficients");
            out.push_back(c.rational_value().get_num());
        } else {
            out.push_back(c.residue());
        }
    }
    return out;
}

/// Factor a squarefree, primitive, integer polynomial of degree >= 1 into
/// irreducible primitive integer polynomials (positive leading coefficients).
inline std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f,
                                                    RandomStream& stream) {
    const long d = static_cast<long>(f.size()) - 1;
    if (d == 1) {
        ZPoly g = f;
        if (g.back() < 0)
            for (auto& c : g) c = -c;
        return {g};
    }
    const mpz_class lc = f.back();
    // monicize: g(x) = lc^(d-1) f(x/lc), so g_k = f_k * lc^(d-1-k)
    ZPoly g(f.size());
    g[static_cast<std::size_t>(d)] = 1;
    mpz_class scale = 1;
    for (long k = d - 1; k >= 0; --k) {
        g[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * scale;
        scale *= lc;
    }

    // prime selection: smallest prime above 2*d*trunc(maxcoef^(1/d)) keeping
    // the monicized image squarefree of full degree; fall back to next primes
    mpz_class maxc = 0;
    for (const auto& c : f) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    mpz_class root;
    mpz_root(root.get_mpz_t(), maxc.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class p = 2 * d * root + 1;
    if (p < 3) p = 3;
    FieldCtx fp;
    UniPoly gp{FieldCtx{}};
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (lc % p == 0) continue;
        fp = FieldContext::prime(p);
        gp = zp_to_unipoly(g, fp);
        if (gp.degree() != d) continue;
        if (gcd(gp, gp.derivative()).degree() == 0) break;
    }

    UniFactorList modular = factor_univariate_finite(gp, stream);
    if (modular.factors.size() == 1) {
        ZPoly out = f;
        if (out.back() < 0)
            for (auto& c : out) c = -c;
        return {out};
    }

    // Hensel bound: factors of g have coefficients below 2^d * |g|_2
    mpz_class norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), norm2.get_mpz_t());
    mpz_class bound = (sq + 1);
    bound <<= static_cast<unsigned long>(d + 1);  // 2 * 2^d * |g|_2

    // multifactor linear Hensel lifting of the monic modular factors
    std::vector<ZPoly> lifted;
    std::vector<UniPoly> base;
    for (const auto& [fac, mult] : modular.factors) {
        lifted.push_back(unipoly_to_zp(fac));
        base.push_back(fac);
    }
    const std::size_t r = base.size();
    std::vector<UniPoly> bezout;  // sigma_i = (prod_{j!=i} g_j)^-1 mod g_i
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly prod = UniPoly::constant(fp, 1);
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = mulmod(prod, base[j], base[i]);
        bezout.push_back(invmod(prod, base[i]));
    }
    mpz_class modulus = p;
    while (modulus < bound) {
        // error E = (g - prod lifted) / modulus  (mod p)
        ZPoly prod{1};
        for (const auto& m : lifted) prod = zp_mul(prod, m);
        ZPoly err(g.size(), 0);
        for (std::size_t k = 0; k < g.size(); ++k) {
            mpz_class e = g[k] - (k < prod.size() ? prod[k] : mpz_class(0));
            err[k] = e / modulus;  // divisible by construction
        }
        zp_mod_inplace(err, p);
        UniPoly E = zp_to_unipoly(err, fp);
        for (std::size_t i = 0; i < r; ++i) {
            UniPoly delta = mulmod(bezout[i], E % base[i], base[i]);
            ZPoly dz = unipoly_to_zp(delta);
            if (lifted[i].size() < base[i].coeffs().size())
                lifted[i].resize(base[i].coeffs().size(), 0);
            for (std::size_t k = 0; k < dz.size(); ++k)
                lifted[i][k] += dz[k] * modulus;
        }
        modulus *= p;
    }
    for (auto& m : lifted) zp_mod_inplace(m, modulus);

    // naive subset recombination against the monicized polynomial
    std::vector<ZPoly> monic_factors;
    std::vector<std::size_t> live(r);
    for (std::size_t i = 0; i < r; ++i) live[i] = i;
    ZPoly rest = g;
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{1};
            for (std::size_t i : idx) cand = zp_mul(cand, lifted[live[i]]);
            zp_mod_inplace(cand, modulus);
            cand = zp_balanced(std::move(cand), modulus);
            ZPoly quotient;
            if (!cand.empty() && cand.back() == 1 &&
                zp_divides_monic(rest, cand, quotient)) {
                monic_factors.push_back(cand);
                rest = quotient;
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                found = true;
                break;
            }
            // next subset of the current size
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == live.size() - (s - pos) - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.size() > 1) monic_factors.push_back(rest);

    // map back through x -> lc*x and take primitive parts
    std::vector<ZPoly> out;
    for (const auto& m : monic_factors) {
        ZPoly h(m.size());
        mpz_class sc = 1;
        for (std::size_t k = 0; k < m.size(); ++k) {
            h[k] = m[k] * sc;
            sc *= lc;
        }
        mpz_class content = 0;
        for (const auto& c : h) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                                        c.get_mpz_t());
        if (h.back() < 0) content = -content;
        for (auto& c : h) c /= content;
        out.push_back(std::move(h));
    }
    return out;
}

inline UniFactorList factor_univariate_rational(const UniPoly& f,
                                                RandomStream& stream) {
    const FieldCtx& ctx = f.ctx();
    // clear denominators / content
    MultiPoly as_mv = f.to_multipoly(ctx, 1, 0);
    const mpq_class content = rational_content(as_mv);
    UniPoly prim = to_unipoly(normalize_canonical(as_mv), 0);
    UniFactorList result{FieldElement::from_rational(ctx, content), {}};

    // strip a power of T
    std::size_t val = 0;
    while (val <= static_cast<std::size_t>(prim.degree()) &&
           prim.coefficient(val).is_zero())
        ++val;
    if (val > 0) {
        std::vector<FieldElement> shifted(prim.coeffs().begin() + val,
                                          prim.coeffs().end());
        prim = UniPoly(ctx, std::move(shifted));
        result.factors.push_back(
            {UniPoly::variable(ctx), static_cast<unsigned>(val)});
    }
    if (prim.degree() >= 1) {
        for (const auto& [part, mult] : squarefree_yun(prim.monic())) {
            // restore integer coefficients of this squarefree part
            MultiPoly part_mv = part.to_multipoly(ctx, 1, 0);
            UniPoly part_prim = to_unipoly(normalize_canonical(part_mv), 0);
            for (const auto& zfac :
                 factor_squarefree_integer(unipoly_to_zp(part_prim), stream))
                result.factors.push_back({zp_to_unipoly(zfac, ctx), mult});
        }
    }
    sort_factors(result);
    // fix up the unit so that the product reassembles exactly
    UniPoly prod = UniPoly::constant(ctx, 1);
    for (const auto& [g, m] : result.factors) prod *= g.pow(m);
    const FieldElement q = f.leading_coefficient() / prod.leading_coefficient();
    result.unit = q;
    return result;
}

}  // namespace detail

/// Irreducible factorization of a univariate polynomial over its field.
/// Constants give a unit-only list.
inline UniFactorList factor_univariate(const UniPoly& f, RandomStream& stream) {
    if (f.is_zero()) throw zero_polynomial();
    if (f.is_constant()) return {f.coefficient(0), {}};
    return f.ctx()->is_finite() ? detail::factor_univariate_finite(f, stream)
                                : detail::factor_univariate_rational(f, stream);
}

}  // namespace ratdec

#endif
