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

#ifndef RATDEC_FACTOR_MULTIVARIATE_HPP
#define RATDEC_FACTOR_MULTIVARIATE_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ratdec/factor_univariate.hpp"
#include "ratdec/multipoly.hpp"
#include "ratdec/polygcd.hpp"

namespace ratdec {

struct MultiFactor {
    MultiPoly poly;
    unsigned multiplicity;
};

struct MultiFactorList {
    FieldElement unit;
    std::vector<MultiFactor> factors;

    MultiPoly reassemble(const FieldCtx& ctx, unsigned nvars) const {
        MultiPoly f = MultiPoly::constant(ctx, nvars, unit);
        for (const auto& [g, m] : factors) f *= g.pow(m);
        return f;
    }

    bool certifies_irreducible(const MultiPoly& f) const {
        return factors.size() == 1 && factors[0].multiplicity == 1 &&
               factors[0].poly.total_degree() == f.total_degree();
    }
};

inline void sort_factors(MultiFactorList& list) {
    std::sort(list.factors.begin(), list.factors.end(),
              [](const MultiFactor& x, const MultiFactor& y) {
                  return MultiPoly::cmp(x.poly, y.poly) < 0;
              });
}

/// Squarefree decomposition into multiplicity classes: one canonical entry
/// per multiplicity, whose product with multiplicities reassembles f up to
/// the unit. Requires characteristic 0 or > deg f.
inline MultiFactorList squarefree_decomposition(const MultiPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    const FieldCtx& ctx = f.ctx();
    if (ctx->is_finite() && ctx->characteristic() <= f.total_degree())
        throw characteristic_too_small(
            "squarefree decomposition needs characteristic 0 or > deg f");
    std::map<unsigned, MultiPoly> classes;
    auto absorb = [&](const MultiPoly& part, unsigned mult) {
        auto it = classes.find(mult);
        if (it == classes.end())
            classes.emplace(mult, part);
        else
            it->second *= part;
    };

    // recursive content/primitive split in one variable, Yun on the
    // primitive part
    auto decompose = [&](auto&& self, const MultiPoly& g,
                         unsigned mult) -> void {
        if (g.is_constant()) return;
        const auto vars = g.occurring_vars();
        unsigned v = vars[0];
        for (unsigned w : vars)
            if (g.degree_in(w) > g.degree_in(v)) v = w;
        const MultiPoly cont = content_in_var(g, v);
        MultiPoly b = g.exact_divide(cont);
        if (!cont.is_constant()) self(self, cont, mult);
        // Yun with the derivative in v
        MultiPoly d = b.derivative(v);
        MultiPoly a = multivariate_gcd(b, d);
        b = b.exact_divide(a);
        MultiPoly c = d.exact_divide(a);
        unsigned i = 1;
        while (!b.is_constant()) {
            MultiPoly delta = c - b.derivative(v);
            MultiPoly q = multivariate_gcd(b, delta);
            if (!q.is_constant()) absorb(normalize_canonical(q), i * mult);
            b = b.exact_divide(q);
            c = delta.exact_divide(q);
            ++i;
        }
    };
    decompose(decompose, f, 1);

    MultiFactorList out{FieldElement::one(ctx), {}};
    for (auto& [mult, part] : classes)
        out.factors.push_back({normalize_canonical(part), mult});
    MultiPoly prod = out.reassemble(ctx, f.nvars());
    out.unit = f.leading_coefficient() / prod.leading_coefficient();
    return out;
}

namespace detail {

// grade = total degree in every variable except the main one
inline unsigned long ygrade(const Exponents& e, unsigned xvar) {
    unsigned long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (i != xvar) s += e[i];
    return s;
}

inline long ydegree(const MultiPoly& f, unsigned xvar) {
    long d = -1;
    for (const auto& [e, c] : f.terms())
        d = std::max(d, static_cast<long>(ygrade(e, xvar)));
    return d;
}

inline MultiPoly truncate_ygrades(const MultiPoly& f, unsigned xvar,
                                  unsigned long maxgrade) {
    MultiPoly r(f.ctx(), f.nvars());
    for (const auto& [e, c] : f.terms())
        if (ygrade(e, xvar) <= maxgrade) r.add_term(e, c);
    return r;
}

inline MultiPoly grade_slice(const MultiPoly& f, unsigned xvar,
                             unsigned long grade) {
    MultiPoly r(f.ctx(), f.nvars());
    for (const auto& [e, c] : f.terms())
        if (ygrade(e, xvar) == grade) r.add_term(e, c);
    return r;
}

inline MultiPoly trunc_mul(const MultiPoly& a, const MultiPoly& b,
                           unsigned xvar, unsigned long maxgrade) {
    MultiPoly r(a.ctx(), a.nvars());
    std::vector<std::pair<unsigned long, const std::pair<const Exponents,
                                                         FieldElement>*>>
        bt;
    bt.reserve(b.terms().size());
    for (const auto& t : b.terms()) bt.emplace_back(ygrade(t.first, xvar), &t);
    std::sort(bt.begin(), bt.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    const unsigned nvars = a.nvars();
    for (const auto& [ea, ca] : a.terms()) {
        const unsigned long ga = ygrade(ea, xvar);
        if (ga > maxgrade) continue;
        for (const auto& [gb, tb] : bt) {
            if (ga + gb > maxgrade) break;
            Exponents e(nvars);
            for (unsigned i = 0; i < nvars; ++i) e[i] = ea[i] + tb->first[i];
            r.add_term(std::move(e), ca * tb->second);
        }
    }
    return r;
}

/// Inverse of l (no xvar dependence, nonzero constant term) as a graded
/// series up to the given grade.
inline MultiPoly graded_inverse(const MultiPoly& l, unsigned xvar,
                                unsigned long maxgrade) {
    const FieldCtx& ctx = l.ctx();
    const FieldElement l0 = grade_slice(l, xvar, 0).constant_value();
    const FieldElement l0_inv = l0.inv();
    std::vector<MultiPoly> lslice;
    const long dl = ydegree(l, xvar);
    for (long k = 0; k <= dl; ++k) lslice.push_back(grade_slice(l, xvar, k));
    std::vector<MultiPoly> inv_slices;
    inv_slices.push_back(MultiPoly::constant(ctx, l.nvars(), 1) * l0_inv);
    for (unsigned long k = 1; k <= maxgrade; ++k) {
        MultiPoly acc(ctx, l.nvars());
        for (unsigned long i = 1; i <= std::min<unsigned long>(k, dl); ++i)
            acc += lslice[i] * inv_slices[k - i];
        inv_slices.push_back(acc * (-l0_inv));
    }
    MultiPoly out(ctx, l.nvars());
    for (const auto& s : inv_slices) out += s;
    return out;
}

/// Group the grade-k slice of f by y-monomial; values are dense x-polys.
inline std::map<Exponents, UniPoly> slice_by_monomial(const MultiPoly& f,
                                                      unsigned xvar,
                                                      unsigned long grade) {
    std::map<Exponents, UniPoly> out;
    for (const auto& [e, c] : f.terms()) {
        if (ygrade(e, xvar) != grade) continue;
        Exponents key = e;
        const unsigned xe = key[xvar];
        key[xvar] = 0;
        auto it = out.find(key);
        if (it == out.end())
            it = out.emplace(std::move(key), UniPoly(f.ctx())).first;
        it->second.set_coefficient(xe, it->second.coefficient(xe) + c);
    }
    return out;
}

inline MultiPoly translate_vars(const MultiPoly& f,
                                const std::vector<std::pair<unsigned, FieldElement>>&
                                    shifts,
                                bool negate) {
    MultiPoly r = f;
    for (const auto& [var, a] : shifts) {
        if (a.is_zero()) continue;
        MultiPoly lin = MultiPoly::variable(f.ctx(), f.nvars(), var) +
                        MultiPoly::constant(f.ctx(), f.nvars(), negate ? -a : a);
        r = r.substitute(var, lin);
    }
    return r;
}

// forward declaration for the content recursion
inline void factor_squarefree_multivar(const MultiPoly& f, RandomStream& stream,
                                       std::vector<MultiPoly>& out);

/// Factor a squarefree polynomial that is primitive with respect to the main
/// variable xvar and genuinely multivariate. Good-point search, univariate
/// image factorization, graded Hensel lifting of monic series factors, then
/// naive subset recombination with exact trial division.
inline void factor_primitive_squarefree(const MultiPoly& f, unsigned xvar,
                                        RandomStream& stream,
                                        std::vector<MultiPoly>& out) {
    const FieldCtx& ctx = f.ctx();
    const unsigned nvars = f.nvars();
    const MultiPoly lc = leading_coeff_in_var(f, xvar);
    const long dx = f.degree_in(xvar);
    std::vector<unsigned> yvars;
    for (unsigned v : f.occurring_vars())
        if (v != xvar) yvars.push_back(v);
    for (unsigned v : lc.occurring_vars())
        if (v != xvar && std::find(yvars.begin(), yvars.end(), v) == yvars.end())
            yvars.push_back(v);

    // good evaluation point: lc nonzero, univariate image squarefree of
    // full degree
    constexpr int kPointBudget = 25;
    std::vector<std::pair<unsigned, FieldElement>> shifts;
    UniPoly image{FieldCtx{}};
    bool found = false;
    for (int attempt = 0; attempt < kPointBudget && !found; ++attempt) {
        shifts.clear();
        MultiPoly eval = f;
        MultiPoly lc_eval = lc;
        const mpz_class box = 8 + 8 * static_cast<long>(attempt) +
                              2 * f.total_degree();
        for (unsigned v : yvars) {
            FieldElement a = ctx->is_finite() ? random_element(ctx, stream)
                                              : random_boxed_integer(ctx, box,
                                                                     stream);
            shifts.emplace_back(v, a);
            eval = eval.partial_evaluate(v, a);
            lc_eval = lc_eval.partial_evaluate(v, a);
        }
        if (lc_eval.is_zero()) continue;
        image = to_unipoly(eval, xvar);
        if (image.degree() != dx) continue;
        if (gcd(image, image.derivative()).degree() != 0) continue;
        found = true;
    }
    if (!found) throw bad_specialization_exhausted();

    UniFactorList modular = factor_univariate(image, stream);
    if (modular.factors.size() == 1) {
        out.push_back(normalize_canonical(f));
        return;
    }

    // shift the point to the origin and lift
    MultiPoly ft = translate_vars(f, shifts, false);
    const MultiPoly lt = leading_coeff_in_var(ft, xvar);
    const unsigned long total =
        static_cast<unsigned long>(std::max(ydegree(ft, xvar), 0L) +
                                   std::max(ydegree(lt, xvar), 0L));
    const MultiPoly lt_inv = graded_inverse(lt, xvar, total);
    const MultiPoly target = trunc_mul(ft, lt_inv, xvar, total);  // monic in x

    std::vector<MultiPoly> lifted;
    std::vector<UniPoly> base;
    for (const auto& [g, m] : modular.factors) {
        base.push_back(g.monic());
        lifted.push_back(base.back().to_multipoly(ctx, nvars, xvar));
    }
    const std::size_t r = base.size();
    std::vector<UniPoly> bezout;
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly prod = UniPoly::constant(ctx, 1);
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = mulmod(prod, base[j], base[i]);
        bezout.push_back(invmod(prod, base[i]));
    }
    for (unsigned long k = 1; k <= total; ++k) {
        MultiPoly prod = lifted[0];
        for (std::size_t i = 1; i < r; ++i)
            prod = trunc_mul(prod, lifted[i], xvar, k);
        const MultiPoly err = grade_slice(target, xvar, k) -
                              grade_slice(prod, xvar, k);
        if (err.is_zero()) continue;
        for (const auto& [mono, epoly] : slice_by_monomial(err, xvar, k)) {
            for (std::size_t i = 0; i < r; ++i) {
                UniPoly delta = mulmod(bezout[i], epoly % base[i], base[i]);
                if (delta.is_zero()) continue;
                const MultiPoly mono_poly = MultiPoly::monomial(
                    ctx, mono, FieldElement::one(ctx));
                lifted[i] += mono_poly * delta.to_multipoly(ctx, nvars, xvar);
            }
        }
    }

    // subset recombination against the translated polynomial
    MultiPoly rest = ft;
    std::vector<std::size_t> live(r);
    for (std::size_t i = 0; i < r; ++i) live[i] = i;
    std::vector<MultiPoly> found_factors;
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            MultiPoly cand = leading_coeff_in_var(rest, xvar);
            for (std::size_t i : idx)
                cand = trunc_mul(cand, lifted[live[i]], xvar, total);
            if (!cand.is_zero()) {
                cand = cand.exact_divide(content_in_var(cand, xvar));
                cand = normalize_canonical(cand);
                if (!cand.is_constant() && cand.divides(rest)) {
                    found_factors.push_back(cand);
                    rest = rest.exact_divide(cand);
                    std::vector<std::size_t> next_live;
                    for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        next_live.push_back(live[i]);
                    }
                    live = std::move(next_live);
                    hit = true;
                    break;
                }
            }
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == live.size() - (s - pos) - 1)
                --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (!rest.is_constant()) found_factors.push_back(normalize_canonical(rest));

    for (const auto& g : found_factors)
        out.push_back(normalize_canonical(translate_vars(g, shifts, true)));
}

inline void factor_squarefree_multivar(const MultiPoly& f, RandomStream& stream,
                                       std::vector<MultiPoly>& out) {
    if (f.is_constant()) return;
    const auto vars = f.occurring_vars();
    if (vars.size() == 1) {
        UniFactorList uf = factor_univariate(to_unipoly(f, vars[0]), stream);
        for (const auto& [g, m] : uf.factors)
            for (unsigned i = 0; i < m; ++i)  // squarefree: m is 1
                out.push_back(normalize_canonical(
                    g.to_multipoly(f.ctx(), f.nvars(), vars[0])));
        return;
    }
    unsigned xvar = vars[0];
    for (unsigned v : vars)
        if (f.degree_in(v) > f.degree_in(xvar)) xvar = v;
    const MultiPoly cont = content_in_var(f, xvar);
    MultiPoly pp = f.exact_divide(cont);
    if (!cont.is_constant()) factor_squarefree_multivar(cont, stream, out);
    factor_primitive_squarefree(pp, xvar, stream, out);
}

}  // namespace detail

/// Rational (over the coefficient field) irreducible factorization.
/// Requires characteristic 0 or > deg f (needed by the squarefree pre-pass).
inline MultiFactorList factor_multivariate(const MultiPoly& f,
                                           RandomStream& stream) {
    if (f.is_zero()) throw zero_polynomial();
    const FieldCtx& ctx = f.ctx();
    if (f.is_constant()) return {f.constant_value(), {}};
    MultiFactorList out{FieldElement::one(ctx), {}};
    for (const auto& [part, mult] : squarefree_decomposition(f).factors) {
        std::vector<MultiPoly> irreducibles;
        detail::factor_squarefree_multivar(part, stream, irreducibles);
        for (auto& g : irreducibles) out.factors.push_back({g, mult});
    }
    sort_factors(out);
    MultiPoly prod = out.reassemble(ctx, f.nvars());
    out.unit = f.leading_coefficient() / prod.leading_coefficient();
    return out;
}

/// True iff f is irreducible over its coefficient field.
inline bool is_irreducible_rational(const MultiPoly& f, RandomStream& stream) {
    if (f.is_constant()) return false;
    return factor_multivariate(f, stream).certifies_irreducible(f);
}

}  // namespace ratdec

#endif
