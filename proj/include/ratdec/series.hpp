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

#ifndef RATDEC_SERIES_HPP
#define RATDEC_SERIES_HPP

#include <utility>
#include <vector>

#include "ratdec/linalg.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

/// Truncated power series modulo s^precision.
class TruncSeries {
   public:
    TruncSeries(FieldCtx ctx, std::size_t precision)
        : ctx_(std::move(ctx)), prec_(precision) {}

    TruncSeries(FieldCtx ctx, std::size_t precision,
                std::vector<FieldElement> coeffs)
        : ctx_(std::move(ctx)), prec_(precision), c_(std::move(coeffs)) {
        if (c_.size() > prec_) c_.resize(prec_);
        trim();
    }

    static TruncSeries from_poly(const UniPoly& f, std::size_t precision) {
        return TruncSeries(f.ctx(), precision, f.coeffs());
    }

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t precision() const { return prec_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    FieldElement coefficient(std::size_t k) const {
        return k < c_.size() ? c_[k] : FieldElement::zero(ctx_);
    }

    void set_coefficient(std::size_t k, const FieldElement& v) {
        if (k >= prec_) return;
        if (k >= c_.size()) c_.resize(k + 1, FieldElement::zero(ctx_));
        c_[k] = v;
        trim();
    }

    TruncSeries truncated(std::size_t precision) const {
        return TruncSeries(ctx_, precision, c_);
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        const std::size_t p = std::min(prec_, o.prec_);
        TruncSeries r(ctx_, p);
        r.c_.assign(std::min(p, std::max(c_.size(), o.c_.size())),
                    FieldElement::zero(ctx_));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }

    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

    TruncSeries operator*(const TruncSeries& o) const {
        const std::size_t p = std::min(prec_, o.prec_);
        TruncSeries r(ctx_, p);
        r.c_.assign(p, FieldElement::zero(ctx_));
        for (std::size_t i = 0; i < c_.size() && i < p; ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size() && i + j < p; ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    TruncSeries operator*(const FieldElement& s) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const {
        if (coefficient(0).is_zero()) throw singular_expansion_point();
        TruncSeries r(ctx_, prec_);
        r.c_.assign(prec_, FieldElement::zero(ctx_));
        const FieldElement c0_inv = coefficient(0).inv();
        r.c_[0] = c0_inv;
        for (std::size_t k = 1; k < prec_; ++k) {
            FieldElement acc = FieldElement::zero(ctx_);
            for (std::size_t i = 1; i <= k; ++i)
                acc += coefficient(i) * r.c_[k - i];
            r.c_[k] = -c0_inv * acc;
        }
        r.trim();
        return r;
    }

    TruncSeries operator/(const TruncSeries& o) const {
        return *this * o.inverse();
    }

    bool operator==(const TruncSeries& o) const {
        return prec_ == o.prec_ && c_ == o.c_;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtx ctx_;
    std::size_t prec_;
    std::vector<FieldElement> c_;
};

/// Polynomial evaluated at a series (Horner).
inline TruncSeries compose_poly_series(const UniPoly& f,
                                       const TruncSeries& s) {
    TruncSeries acc(f.ctx(), s.precision());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = acc * s;
        acc.set_coefficient(0, acc.coefficient(0) + f.coeffs()[k]);
    }
    return acc;
}

/// Taylor expansion of num/den around t0 in the local parameter s = T - t0;
/// requires den(t0) != 0.
inline TruncSeries expand_rational_at(const UniPoly& num, const UniPoly& den,
                                      const FieldElement& t0,
                                      std::size_t precision) {
    if (den.evaluate(t0).is_zero()) throw singular_expansion_point();
    const UniPoly num_sh = num.shift(t0);
    const UniPoly den_sh = den.shift(t0);
    return TruncSeries::from_poly(num_sh, precision) /
           TruncSeries::from_poly(den_sh, precision);
}

/// The local compositional inverse of g = num/den at t0: a series
/// H(s) = t0 + w1*s + ... with g(H(s)) = g(t0) + s (mod s^precision).
/// Requires g regular at t0 and g'(t0) != 0.
inline TruncSeries compositional_inverse_at(const UniPoly& num,
                                            const UniPoly& den,
                                            const FieldElement& t0,
                                            std::size_t precision) {
    const FieldCtx& ctx = num.ctx();
    TruncSeries g = expand_rational_at(num, den, t0, precision + 1);
    const FieldElement g1 = g.coefficient(1);
    if (g1.is_zero()) throw singular_expansion_point();
    // G(s) = g(t0+s) - g(t0) = g1*s + ...; find W with G(W(s)) = s by Newton.
    TruncSeries G(ctx, precision + 1);
    for (std::size_t k = 1; k <= precision; ++k)
        G.set_coefficient(k, g.coefficient(k));
    TruncSeries Gp(ctx, precision);  // G'
    for (std::size_t k = 1; k <= precision; ++k)
        Gp.set_coefficient(k - 1,
                           G.coefficient(k) *
                               FieldElement::from_integer(ctx, static_cast<long>(k)));
    auto compose_series = [&](const TruncSeries& outer, const TruncSeries& w,
                              std::size_t p) {
        // outer has zero constant term; w has zero constant term
        TruncSeries acc(outer.ctx(), p);
        for (std::size_t k = outer.coeffs().size(); k-- > 0;) {
            acc = acc * w.truncated(p);
            acc.set_coefficient(0, acc.coefficient(0) + outer.coefficient(k));
        }
        return acc;
    };
    TruncSeries w(ctx, precision);
    w.set_coefficient(1, g1.inv());
    std::size_t current = 2;
    while (current < precision) {
        current = std::min(2 * current, precision);
        TruncSeries wc = w.truncated(current);
        TruncSeries err = compose_series(G.truncated(current), wc, current);
        // err should equal s; subtract s
        err.set_coefficient(1, err.coefficient(1) -
                                   FieldElement::one(ctx));
        TruncSeries gp_at_w = compose_series(Gp.truncated(current), wc, current);
        w = wc - err / gp_at_w;
    }
    TruncSeries H = w.truncated(precision);
    H.set_coefficient(0, t0);
    return H;
}

/// Pade approximant p/q of a series with deg p <= num_deg, deg q <= den_deg,
/// p - q*series = 0 mod s^(num_deg+den_deg+1), via an exact nullspace.
inline std::pair<UniPoly, UniPoly> pade_approximant(const TruncSeries& s,
                                                    std::size_t num_deg,
                                                    std::size_t den_deg) {
    const FieldCtx& ctx = s.ctx();
    const std::size_t eqs = num_deg + den_deg + 1;
    if (s.precision() < eqs)
        throw error("series precision too low for the requested Pade orders");
    // unknowns: p_0..p_num, q_0..q_den
    const std::size_t cols = num_deg + 1 + den_deg + 1;
    Mat m = make_matrix(ctx, eqs, cols);
    for (std::size_t t = 0; t < eqs; ++t) {
        if (t <= num_deg) m[t][t] = FieldElement::one(ctx);
        for (std::size_t j = 0; j <= den_deg && j <= t; ++j)
            m[t][num_deg + 1 + j] -= s.coefficient(t - j);
    }
    const auto basis = nullspace(std::move(m), ctx, cols);
    for (const auto& v : basis) {
        std::vector<FieldElement> pc(v.begin(), v.begin() + num_deg + 1);
        std::vector<FieldElement> qc(v.begin() + num_deg + 1, v.end());
        UniPoly p(ctx, std::move(pc)), q(ctx, std::move(qc));
        if (q.is_zero()) continue;
        const UniPoly g = gcd(p, q);
        if (!g.is_constant()) {
            p = p.exact_divide(g);
            q = q.exact_divide(g);
        }
        // reduced pair must still satisfy the defining congruence
        const TruncSeries residual = TruncSeries::from_poly(p, eqs) -
                                     TruncSeries::from_poly(q, eqs) *
                                         s.truncated(eqs);
        if (!residual.is_zero()) continue;
        // normalization: q(0) = 1 when possible, else lowest coefficient 1
        FieldElement pivot = q.coefficient(0);
        if (pivot.is_zero()) {
            for (std::size_t k = 0; k <= static_cast<std::size_t>(q.degree());
                 ++k)
                if (!q.coefficient(k).is_zero()) {
                    pivot = q.coefficient(k);
                    break;
                }
        }
        const FieldElement u = pivot.inv();
        return {p * u, q * u};
    }
    throw no_approximant();
}

}  // namespace ratdec

#endif
