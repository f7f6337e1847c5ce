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

#ifndef RATDEC_MULTIPOLY_HPP
#define RATDEC_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratdec/field.hpp"

namespace ratdec {

using Exponents = std::vector<unsigned>;

inline unsigned long exponent_sum(const Exponents& e) {
    unsigned long s = 0;
    for (unsigned v : e) s += v;
    return s;
}

/// Graded lexicographic order, X1 > X2 > ..., largest first.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned long da = exponent_sum(a), db = exponent_sum(b);
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Sparse n-variate polynomial over a field context.
///
/// Terms are kept in a graded-lex ordered map with no zero coefficients,
/// so equality, leading terms and printing are canonical. The degree of
/// the zero polynomial is the distinguished marker -1.
class MultiPoly {
   public:
    using TermMap = std::map<Exponents, FieldElement, GradedLexGreater>;

    MultiPoly() = default;

    MultiPoly(FieldCtx ctx, unsigned nvars)
        : ctx_(std::move(ctx)), nvars_(nvars) {}

    static MultiPoly zero(const FieldCtx& ctx, unsigned nvars) {
        return MultiPoly(ctx, nvars);
    }

    static MultiPoly constant(const FieldCtx& ctx, unsigned nvars,
                              const FieldElement& c) {
        MultiPoly f(ctx, nvars);
        f.add_term(Exponents(nvars, 0), c);
        return f;
    }

    static MultiPoly constant(const FieldCtx& ctx, unsigned nvars, long c) {
        return constant(ctx, nvars, FieldElement::from_integer(ctx, c));
    }

    static MultiPoly variable(const FieldCtx& ctx, unsigned nvars,
                              unsigned var) {
        MultiPoly f(ctx, nvars);
        Exponents e(nvars, 0);
        e[var] = 1;
        f.add_term(e, FieldElement::one(ctx));
        return f;
    }

    static MultiPoly monomial(const FieldCtx& ctx, Exponents exps,
                              const FieldElement& c) {
        MultiPoly f(ctx, static_cast<unsigned>(exps.size()));
        f.add_term(std::move(exps), c);
        return f;
    }

    const FieldCtx& ctx() const { return ctx_; }
    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
    }

    FieldElement constant_value() const {
        if (terms_.empty()) return FieldElement::zero(ctx_);
        return terms_.begin()->second;
    }

    /// Total degree; -1 marks the zero polynomial.
    long total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<long>(exponent_sum(terms_.begin()->first));
    }

    long degree_in(unsigned var) const {
        long d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, static_cast<long>(e[var]));
        return d;
    }

    bool occurs(unsigned var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] > 0) return true;
        return false;
    }

    std::vector<unsigned> occurring_vars() const {
        std::vector<unsigned> vars;
        for (unsigned v = 0; v < nvars_; ++v)
            if (occurs(v)) vars.push_back(v);
        return vars;
    }

    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const FieldElement& leading_coefficient() const {
        return terms_.begin()->second;
    }

    FieldElement coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElement::zero(ctx_) : it->second;
    }

    void add_term(Exponents e, const FieldElement& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(ctx_, nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        MultiPoly r(ctx_, nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(nvars_);
                for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    MultiPoly operator*(const FieldElement& s) const {
        MultiPoly r(ctx_, nvars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned long k) const {
        MultiPoly result = constant(ctx_, nvars_, 1);
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return result;
    }

    /// Exact division; throws not_divisible if the remainder is nonzero.
    MultiPoly exact_divide(const MultiPoly& b) const {
        check(b);
        if (b.is_zero()) throw division_by_zero();
        MultiPoly q(ctx_, nvars_);
        MultiPoly r = *this;
        const Exponents& eb = b.leading_exponents();
        const FieldElement lcb_inv = b.leading_coefficient().inv();
        while (!r.is_zero()) {
            const Exponents& er = r.leading_exponents();
            Exponents et(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) {
                if (er[i] < eb[i]) throw not_divisible();
                et[i] = er[i] - eb[i];
            }
            const FieldElement ct = r.leading_coefficient() * lcb_inv;
            q.add_term(et, ct);
            r -= MultiPoly::monomial(ctx_, std::move(et), ct).with_nvars(nvars_) * b;
        }
        return q;
    }

    bool divides(const MultiPoly& a) const {
        try {
            a.exact_divide(*this);
            return true;
        } catch (const not_divisible&) {
            return false;
        }
    }

    FieldElement evaluate(const std::vector<FieldElement>& point) const {
        if (point.size() != nvars_) throw error("evaluation point arity mismatch");
        const auto tables = power_tables(point);
        FieldElement acc = FieldElement::zero(ctx_);
        for (const auto& [e, c] : terms_) {
            FieldElement t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i] > 0) t *= tables[i][e[i]];
            acc += t;
        }
        return acc;
    }

    MultiPoly partial_evaluate(unsigned var, const FieldElement& value) const {
        long d = degree_in(var);
        std::vector<FieldElement> powers{FieldElement::one(ctx_)};
        for (long k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
        MultiPoly r(ctx_, nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents en = e;
            const unsigned k = en[var];
            en[var] = 0;
            r.add_term(std::move(en), k ? c * powers[k] : c);
        }
        return r;
    }

    /// Substitute a polynomial for one variable (Horner in that variable).
    MultiPoly substitute(unsigned var, const MultiPoly& g) const {
        check(g);
        const long d = degree_in(var);
        if (d <= 0) return *this;
        std::vector<MultiPoly> coeffs(static_cast<std::size_t>(d) + 1,
                                      MultiPoly(ctx_, nvars_));
        for (const auto& [e, c] : terms_) {
            Exponents en = e;
            const unsigned k = en[var];
            en[var] = 0;
            coeffs[k].add_term(std::move(en), c);
        }
        MultiPoly acc = coeffs[static_cast<std::size_t>(d)];
        for (long k = d - 1; k >= 0; --k)
            acc = acc * g + coeffs[static_cast<std::size_t>(k)];
        return acc;
    }

    MultiPoly derivative(unsigned var) const {
        MultiPoly r(ctx_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents en = e;
            en[var] -= 1;
            r.add_term(std::move(en),
                       c * FieldElement::from_integer(ctx_, static_cast<long>(e[var])));
        }
        return r;
    }

    std::vector<Exponents> support() const {
        std::vector<Exponents> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    /// Same terms re-tagged with a wider variable list (new slots zero).
    MultiPoly with_nvars(unsigned nvars) const {
        if (nvars == nvars_) return *this;
        if (nvars < nvars_) throw error("cannot shrink the variable list");
        MultiPoly r(ctx_, nvars);
        for (const auto& [e, c] : terms_) {
            Exponents en = e;
            en.resize(nvars, 0);
            r.terms_.emplace(std::move(en), c);
        }
        return r;
    }

    /// Relocate variables: new exponent vector has position mapping[i] set
    /// from old position i.
    MultiPoly map_vars(unsigned new_nvars,
                       const std::vector<unsigned>& mapping) const {
        MultiPoly r(ctx_, new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents en(new_nvars, 0);
            for (unsigned i = 0; i < nvars_; ++i) en[mapping[i]] = e[i];
            r.add_term(std::move(en), c);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Deterministic total order on polynomials (for canonical sorting).
    static int cmp(const MultiPoly& a, const MultiPoly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        GradedLexGreater gt;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (gt(ia->first, ib->first)) return 1;
            if (gt(ib->first, ia->first)) return -1;
            const int c = FieldElement::cmp(ia->second, ib->second);
            if (c != 0) return c;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

    /// Canonical text form: graded-lex descending, explicit '*', '^'.
    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (unsigned i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i]
                                         : "X" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.to_string();
            std::string term;
            if (mono.empty()) {
                term = cs;
            } else if (cs == "1") {
                term = mono;
            } else if (cs == "-1") {
                term = "-" + mono;
            } else {
                term = cs + "*" + mono;
            }
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

   private:
    void check(const MultiPoly& o) const {
        if (nvars_ != o.nvars_ || !same_context(ctx_, o.ctx_))
            throw context_mismatch();
    }

    std::vector<std::vector<FieldElement>> power_tables(
        const std::vector<FieldElement>& point) const {
        std::vector<std::vector<FieldElement>> tables(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            const long d = degree_in(i);
            tables[i].push_back(FieldElement::one(ctx_));
            for (long k = 1; k <= d; ++k)
                tables[i].push_back(tables[i].back() * point[i]);
        }
        return tables;
    }

    FieldCtx ctx_;
    unsigned nvars_ = 0;
    TermMap terms_;
};

inline MultiPoly operator*(const FieldElement& s, const MultiPoly& f) {
    return f * s;
}

/// View f as a dense polynomial in one variable; coefficients keep the full
/// variable list with the main variable's exponent zeroed.
inline std::vector<MultiPoly> coeffs_in_var(const MultiPoly& f, unsigned var) {
    const long d = f.degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0L)) + 1,
                               MultiPoly(f.ctx(), f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exponents en = e;
        const unsigned k = en[var];
        en[var] = 0;
        out[k].add_term(std::move(en), c);
    }
    return out;
}

inline MultiPoly from_coeffs_in_var(const std::vector<MultiPoly>& coeffs,
                                    unsigned var, const FieldCtx& ctx,
                                    unsigned nvars) {
    MultiPoly r(ctx, nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents en = e;
            en[var] += static_cast<unsigned>(k);
            r.add_term(std::move(en), c);
        }
    }
    return r;
}

/// Leading coefficient of f viewed in one variable.
inline MultiPoly leading_coeff_in_var(const MultiPoly& f, unsigned var) {
    auto cs = coeffs_in_var(f, var);
    return cs.back();
}

}  // namespace ratdec

#endif
