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

#ifndef RATDEC_UNIPOLY_HPP
#define RATDEC_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ratdec/multipoly.hpp"

namespace ratdec {

/// Dense univariate polynomial over a field context (ascending coefficients,
/// trailing zeros stripped; the zero polynomial has an empty vector).
class UniPoly {
   public:
    UniPoly() = default;

    explicit UniPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}

    UniPoly(FieldCtx ctx, std::vector<FieldElement> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const FieldCtx& ctx) { return UniPoly(ctx); }

    static UniPoly constant(const FieldCtx& ctx, const FieldElement& c) {
        return UniPoly(ctx, {c});
    }

    static UniPoly constant(const FieldCtx& ctx, long c) {
        return constant(ctx, FieldElement::from_integer(ctx, c));
    }

    static UniPoly variable(const FieldCtx& ctx) {
        return UniPoly(ctx, {FieldElement::zero(ctx), FieldElement::one(ctx)});
    }

    static UniPoly from_integers(const FieldCtx& ctx,
                                 const std::vector<long>& coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.push_back(FieldElement::from_integer(ctx, v));
        return UniPoly(ctx, std::move(c));
    }

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    long degree() const { return static_cast<long>(c_.size()) - 1; }

    FieldElement coefficient(std::size_t k) const {
        return k < c_.size() ? c_[k] : FieldElement::zero(ctx_);
    }

    const FieldElement& leading_coefficient() const { return c_.back(); }

    void set_coefficient(std::size_t k, const FieldElement& v) {
        if (k >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(k + 1, FieldElement::zero(ctx_));
        }
        c_[k] = v;
        trim();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        UniPoly r(ctx_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement::zero(ctx_));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(ctx_);
        UniPoly r(ctx_);
        r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    UniPoly operator*(const FieldElement& s) const {
        if (s.is_zero()) return UniPoly(ctx_);
        UniPoly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly pow(unsigned long k) const {
        UniPoly result = constant(ctx_, 1);
        UniPoly base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return result;
    }

    /// Quotient and remainder; the divisor's leading coefficient is inverted.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& b) const {
        check(b);
        if (b.is_zero()) throw division_by_zero();
        UniPoly q(ctx_), r = *this;
        const FieldElement lcb_inv = b.leading_coefficient().inv();
        const long db = b.degree();
        if (r.degree() >= db)
            q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1,
                        FieldElement::zero(ctx_));
        while (r.degree() >= db) {
            const long shift = r.degree() - db;
            const FieldElement t = r.leading_coefficient() * lcb_inv;
            q.c_[static_cast<std::size_t>(shift)] = t;
            for (long i = 0; i <= db; ++i)
                r.c_[static_cast<std::size_t>(shift + i)] -=
                    t * b.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        q.trim();
        return {std::move(q), std::move(r)};
    }

    UniPoly operator%(const UniPoly& b) const { return divmod(b).second; }
    UniPoly operator/(const UniPoly& b) const { return divmod(b).first; }

    UniPoly exact_divide(const UniPoly& b) const {
        auto [q, r] = divmod(b);
        if (!r.is_zero()) throw not_divisible();
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading_coefficient().inv();
    }

    UniPoly derivative() const {
        UniPoly r(ctx_);
        for (std::size_t k = 1; k < c_.size(); ++k)
            r.set_coefficient(k - 1,
                              c_[k] * FieldElement::from_integer(
                                          ctx_, static_cast<long>(k)));
        return r;
    }

    FieldElement evaluate(const FieldElement& x) const {
        FieldElement acc = FieldElement::zero(ctx_);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /// Composition this(g(T)).
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc(ctx_);
        for (std::size_t k = c_.size(); k-- > 0;)
            acc = acc * g + constant(ctx_, c_[k]);
        return acc;
    }

    /// Taylor shift this(T + c).
    UniPoly shift(const FieldElement& a) const {
        UniPoly t(ctx_, {a, FieldElement::one(ctx_)});
        return compose(t);
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& name = "T") const {
        return to_multipoly(ctx_, 1, 0).to_string({name});
    }

    /// Dense view as a MultiPoly in the given variable slot.
    MultiPoly to_multipoly(const FieldCtx& ctx, unsigned nvars,
                           unsigned var) const {
        MultiPoly f(ctx, nvars);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            Exponents e(nvars, 0);
            e[var] = static_cast<unsigned>(k);
            f.add_term(std::move(e), c_[k]);
        }
        return f;
    }

   private:
    void check(const UniPoly& o) const {
        if (!same_context(ctx_, o.ctx_)) throw context_mismatch();
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtx ctx_;
    std::vector<FieldElement> c_;
};

inline UniPoly operator*(const FieldElement& s, const UniPoly& f) {
    return f * s;
}

/// Monic gcd by the Euclidean algorithm.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
inline std::tuple<UniPoly, UniPoly, UniPoly> extended_gcd(const UniPoly& a,
                                                          const UniPoly& b) {
    const FieldCtx& ctx = a.ctx();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(ctx, 1), s1 = UniPoly::zero(ctx);
    UniPoly t0 = UniPoly::zero(ctx), t1 = UniPoly::constant(ctx, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        const FieldElement u = r0.leading_coefficient().inv();
        r0 = r0 * u;
        s0 = s0 * u;
        t0 = t0 * u;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

/// Inverse of a modulo m (gcd must be 1).
inline UniPoly invmod(const UniPoly& a, const UniPoly& m) {
    auto [g, s, t] = extended_gcd(a, m);
    if (g.degree() != 0) throw division_by_zero();
    return s % m;
}

inline UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) {
    return (a * b) % m;
}

inline UniPoly powmod(UniPoly base, mpz_class exp, const UniPoly& m) {
    UniPoly result = UniPoly::constant(base.ctx(), 1);
    base = base % m;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Extract f as a dense polynomial in its single occurring variable
/// (or in `var` when given); constants convert everywhere.
inline UniPoly to_unipoly(const MultiPoly& f, unsigned var) {
    UniPoly r(f.ctx());
    for (const auto& [e, c] : f.terms()) {
        for (unsigned i = 0; i < f.nvars(); ++i)
            if (i != var && e[i] != 0)
                throw error("polynomial is not univariate in the chosen variable");
        r.set_coefficient(e[var], c);
    }
    return r;
}

}  // namespace ratdec

#endif
