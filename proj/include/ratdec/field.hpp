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

#ifndef RATDEC_FIELD_HPP
#define RATDEC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ratdec/errors.hpp"
#include "ratdec/rng.hpp"

namespace ratdec {

namespace detail {

// -------- residue arithmetic helpers (dense polynomials over Z/p) --------
//
// Used both for extension-field element arithmetic and for the modulus
// irreducibility check, with coefficients kept canonical in [0, p).

using ResPoly = std::vector<mpz_class>;

inline mpz_class mod_canonical(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
}

inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& p) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               p.get_mpz_t());
    if (g != 1) throw division_by_zero();
    return mod_canonical(s, p);
}

inline void rp_trim(ResPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ResPoly rp_add(const ResPoly& a, const ResPoly& b, const mpz_class& p) {
    ResPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        r[i] = mod_canonical(r[i], p);
    }
    rp_trim(r);
    return r;
}

inline ResPoly rp_sub(const ResPoly& a, const ResPoly& b, const mpz_class& p) {
    ResPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        r[i] = mod_canonical(r[i], p);
    }
    rp_trim(r);
    return r;
}

inline ResPoly rp_mul(const ResPoly& a, const ResPoly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    ResPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = mod_canonical(c, p);
    rp_trim(r);
    return r;
}

inline ResPoly rp_rem(ResPoly a, const ResPoly& b, const mpz_class& p) {
    const mpz_class lc_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
        mpz_class q = mod_canonical(a.back() * lc_inv, p);
        const std::size_t shift = a.size() - b.size();
        if (q != 0) {
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_canonical(a[shift + i] - q * b[i], p);
        }
        a.pop_back();
        rp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline ResPoly rp_gcd(ResPoly a, ResPoly b, const mpz_class& p) {
    while (!b.empty()) {
        ResPoly r = rp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const mpz_class inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = mod_canonical(c * inv, p);
    }
    return a;
}

inline ResPoly rp_powmod(ResPoly base, mpz_class exp, const ResPoly& f,
                         const mpz_class& p) {
    ResPoly result{1};
    base = rp_rem(std::move(base), f, p);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            result = rp_rem(rp_mul(result, base, p), f, p);
        base = rp_rem(rp_mul(base, base, p), f, p);
        exp >>= 1;
    }
    return result;
}

// Extended Euclid, returns s with s*a = gcd (mod f); gcd must be constant.
inline ResPoly rp_invmod(const ResPoly& a, const ResPoly& f,
                         const mpz_class& p) {
    ResPoly r0 = f, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        ResPoly q;
        ResPoly rem = r0;
        const mpz_class lc_inv = mod_inverse(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpz_class c = mod_canonical(rem.back() * lc_inv, p);
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_canonical(rem[shift + i] - c * r1[i], p);
            rp_trim(rem);
        }
        ResPoly s2 = rp_sub(s0, rp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw division_by_zero();
    const mpz_class inv = mod_inverse(r0[0], p);
    for (auto& c : s0) c = mod_canonical(c * inv, p);
    rp_trim(s0);
    return s0;
}

inline bool rp_is_irreducible(const ResPoly& f, const mpz_class& p) {
    const std::size_t e = f.size() - 1;
    if (e == 0) return false;
    const ResPoly x{0, 1};
    // x^(p^e) == x (mod f), and for every prime q | e the e/q-th Frobenius
    // power must be gcd-trivial against f.
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    if (rp_powmod(x, pe, f, p) != x) return false;
    std::size_t m = e;
    std::vector<std::size_t> prime_divisors;
    for (std::size_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divisors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divisors.push_back(m);
    for (std::size_t q : prime_divisors) {
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(e / q));
        ResPoly g = rp_sub(rp_powmod(x, pk, f, p), x, p);
        if (rp_gcd(f, g, p).size() != 1) return false;
    }
    return true;
}

inline bool miller_rabin_round(const mpz_class& n, const mpz_class& base,
                               const mpz_class& d, unsigned long s) {
    mpz_class a = base % n;
    if (a == 0) return true;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

/// Miller-Rabin with the first 40 primes as bases: 40 deterministic rounds,
/// and provably exact for n < 2^64 (the 12-prime subset already is).
inline bool is_probable_prime(const mpz_class& n) {
    static const unsigned bases[40] = {
        2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
        47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
        109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
    if (n < 2) return false;
    for (unsigned b : bases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned b : bases)
        if (!miller_rabin_round(n, b, d, s)) return false;
    return true;
}

}  // namespace detail

enum class FieldKind { rationals, prime, extension };

class FieldContext;
using FieldCtx = std::shared_ptr<const FieldContext>;

/// Descriptor of the ambient field: Q, F_p, or F_{p^e}.
///
/// Immutable after construction; construction verifies primality of p
/// and irreducibility of the extension modulus.
class FieldContext {
   public:
    static FieldCtx rationals() {
        static FieldCtx instance(new FieldContext());
        return instance;
    }

    static FieldCtx prime(const mpz_class& p) {
        if (!detail::is_probable_prime(p))
            throw error("field modulus " + p.get_str() + " is not prime");
        return FieldCtx(new FieldContext(p));
    }

    /// F_{p^e} with the modulus found by a deterministic search: monic
    /// x^e + c_{e-1}x^{e-1} + ... + c_0 enumerated by a base-p counter
    /// (c_0 varies fastest), first irreducible taken.
    static FieldCtx extension(const mpz_class& p, unsigned e) {
        if (e < 2) return prime(p);
        if (!detail::is_probable_prime(p))
            throw error("field modulus " + p.get_str() + " is not prime");
        mpz_class counter = 0;
        while (true) {
            detail::ResPoly mod(e + 1, 0);
            mpz_class rest = counter;
            for (unsigned i = 0; i < e && rest != 0; ++i) {
                mod[i] = rest % p;
                rest /= p;
            }
            if (rest != 0)
                throw error("no irreducible modulus found");  // unreachable
            mod[e] = 1;
            if (detail::rp_is_irreducible(mod, p))
                return FieldCtx(new FieldContext(p, e, std::move(mod)));
            ++counter;
        }
    }

    static FieldCtx extension_with_modulus(const mpz_class& p,
                                           std::vector<mpz_class> modulus) {
        if (!detail::is_probable_prime(p))
            throw error("field modulus " + p.get_str() + " is not prime");
        if (modulus.size() < 3 || modulus.back() != 1)
            throw error("extension modulus must be monic of degree >= 2");
        for (auto& c : modulus) c = detail::mod_canonical(c, p);
        if (!detail::rp_is_irreducible(modulus, p))
            throw error("extension modulus is reducible");
        return FieldCtx(new FieldContext(
            p, static_cast<unsigned>(modulus.size() - 1), std::move(modulus)));
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    bool is_extension() const { return kind_ == FieldKind::extension; }
    bool is_finite() const { return kind_ != FieldKind::rationals; }

    /// 0 for Q, p otherwise.
    const mpz_class& characteristic() const { return p_; }
    const mpz_class& p() const { return p_; }
    unsigned ext_degree() const { return e_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    mpz_class cardinality() const {
        mpz_class c;
        mpz_pow_ui(c.get_mpz_t(), p_.get_mpz_t(), e_);
        return c;
    }

    std::string description() const {
        switch (kind_) {
            case FieldKind::rationals:
                return "rational";
            case FieldKind::prime:
                return "fp:" + p_.get_str();
            default:
                return "fp:" + p_.get_str() + "^" + std::to_string(e_);
        }
    }

    bool operator==(const FieldContext& other) const {
        return kind_ == other.kind_ && p_ == other.p_ && e_ == other.e_ &&
               modulus_ == other.modulus_;
    }

   private:
    FieldContext() : kind_(FieldKind::rationals), p_(0), e_(1) {}
    explicit FieldContext(mpz_class p)
        : kind_(FieldKind::prime), p_(std::move(p)), e_(1) {}
    FieldContext(mpz_class p, unsigned e, std::vector<mpz_class> modulus)
        : kind_(FieldKind::extension),
          p_(std::move(p)),
          e_(e),
          modulus_(std::move(modulus)) {}

    FieldKind kind_;
    mpz_class p_;
    unsigned e_;
    std::vector<mpz_class> modulus_;
};

inline bool same_context(const FieldCtx& a, const FieldCtx& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const FieldCtx& a, const FieldCtx& b) {
    if (!same_context(a, b)) throw context_mismatch();
}

/// One exact field element, tagged with its context.
///
/// Q values are reduced fractions with positive denominator (mpq canonical
/// form); finite-field values are canonical residues, stored as a trimmed
/// coefficient vector in the power basis 1, a, ..., a^{e-1}.
class FieldElement {
   public:
    FieldElement() = default;

    static FieldElement zero(const FieldCtx& ctx) { return FieldElement(ctx); }

    static FieldElement one(const FieldCtx& ctx) {
        return from_integer(ctx, 1);
    }

    static FieldElement from_integer(const FieldCtx& ctx, const mpz_class& n) {
        FieldElement r(ctx);
        if (ctx->is_rationals()) {
            r.q_ = mpq_class(n);
        } else {
            mpz_class v = detail::mod_canonical(n, ctx->p());
            if (v != 0) r.r_.push_back(std::move(v));
        }
        return r;
    }

    static FieldElement from_integer(const FieldCtx& ctx, long n) {
        return from_integer(ctx, mpz_class(n));
    }

    /// num/den as a field element; den must be invertible in the context.
    static FieldElement from_fraction(const FieldCtx& ctx, const mpz_class& num,
                                      const mpz_class& den) {
        if (den == 0) throw division_by_zero();
        if (ctx->is_rationals()) {
            FieldElement r(ctx);
            r.q_ = mpq_class(num, den);
            r.q_.canonicalize();
            return r;
        }
        return from_integer(ctx, num) / from_integer(ctx, den);
    }

    static FieldElement from_rational(const FieldCtx& ctx, const mpq_class& q) {
        return from_fraction(ctx, q.get_num(), q.get_den());
    }

    /// Element of F_{p^e} from power-basis coordinates over F_p.
    static FieldElement from_coords(const FieldCtx& ctx,
                                    std::vector<mpz_class> coords) {
        if (!ctx->is_extension()) throw unsupported_field("coords need F_{p^e}");
        FieldElement r(ctx);
        for (auto& c : coords) c = detail::mod_canonical(c, ctx->p());
        detail::rp_trim(coords);
        if (coords.size() > ctx->ext_degree())
            throw error("coordinate vector longer than extension degree");
        r.r_ = std::move(coords);
        return r;
    }

    /// The power-basis generator a of F_{p^e}.
    static FieldElement generator(const FieldCtx& ctx) {
        return from_coords(ctx, {0, 1});
    }

    const FieldCtx& ctx() const { return ctx_; }
    bool valid() const { return static_cast<bool>(ctx_); }

    bool is_zero() const {
        return ctx_->is_rationals() ? q_ == 0 : r_.empty();
    }

    bool is_one() const {
        if (ctx_->is_rationals()) return q_ == 1;
        return r_.size() == 1 && r_[0] == 1;
    }

    const mpq_class& rational_value() const { return q_; }

    /// Canonical residue in [0, p) (prime fields).
    mpz_class residue() const {
        return r_.empty() ? mpz_class(0) : r_[0];
    }

    /// Power-basis coordinates, padded to length e.
    std::vector<mpz_class> coords() const {
        std::vector<mpz_class> c = r_;
        c.resize(ctx_->ext_degree(), mpz_class(0));
        return c;
    }

    FieldElement operator-() const {
        FieldElement r(*this);
        if (ctx_->is_rationals()) {
            r.q_ = -q_;
        } else {
            for (auto& c : r.r_)
                if (c != 0) c = ctx_->p() - c;
        }
        return r;
    }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        FieldElement r(ctx_);
        if (ctx_->is_rationals())
            r.q_ = q_ + o.q_;
        else
            r.r_ = detail::rp_add(r_, o.r_, ctx_->p());
        return r;
    }

    FieldElement operator-(const FieldElement& o) const {
        check(o);
        FieldElement r(ctx_);
        if (ctx_->is_rationals())
            r.q_ = q_ - o.q_;
        else
            r.r_ = detail::rp_sub(r_, o.r_, ctx_->p());
        return r;
    }

    FieldElement operator*(const FieldElement& o) const {
        check(o);
        FieldElement r(ctx_);
        if (ctx_->is_rationals()) {
            r.q_ = q_ * o.q_;
        } else {
            r.r_ = detail::rp_mul(r_, o.r_, ctx_->p());
            if (r.r_.size() >= ctx_->modulus().size() && ctx_->is_extension())
                r.r_ = detail::rp_rem(std::move(r.r_), ctx_->modulus(), ctx_->p());
        }
        return r;
    }

    FieldElement inv() const {
        if (is_zero()) throw division_by_zero();
        FieldElement r(ctx_);
        if (ctx_->is_rationals()) {
            r.q_ = 1 / q_;
        } else if (ctx_->is_prime_field()) {
            r.r_.push_back(detail::mod_inverse(r_[0], ctx_->p()));
        } else {
            r.r_ = detail::rp_invmod(r_, ctx_->modulus(), ctx_->p());
        }
        return r;
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement pow(const mpz_class& exp) const {
        if (exp < 0) return inv().pow(-exp);
        FieldElement result = one(ctx_);
        FieldElement base = *this;
        mpz_class e = exp;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    FieldElement pow(long exp) const { return pow(mpz_class(exp)); }

    bool operator==(const FieldElement& o) const {
        if (!same_context(ctx_, o.ctx_)) return false;
        return ctx_->is_rationals() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Deterministic total order (for canonical sorting only).
    static int cmp(const FieldElement& a, const FieldElement& b) {
        if (a.ctx_->is_rationals()) return ::cmp(a.q_, b.q_);
        const std::size_t n = std::max(a.r_.size(), b.r_.size());
        for (std::size_t i = n; i-- > 0;) {
            const mpz_class& x = i < a.r_.size() ? a.r_[i] : mpz_class(0);
            const mpz_class& y = i < b.r_.size() ? b.r_[i] : mpz_class(0);
            const int c = ::cmp(x, y);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string to_string() const {
        if (ctx_->is_rationals()) return q_.get_str();
        if (ctx_->is_prime_field()) return residue().get_str();
        if (r_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < r_.size(); ++i) {
            if (r_[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += r_[i].get_str();
            } else {
                if (r_[i] != 1) s += r_[i].get_str() + "*";
                s += "a";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

   private:
    explicit FieldElement(FieldCtx ctx) : ctx_(std::move(ctx)), q_(0) {}

    void check(const FieldElement& o) const {
        if (ctx_.get() != o.ctx_.get() && !same_context(ctx_, o.ctx_))
            throw context_mismatch();
    }

    FieldCtx ctx_;
    mpq_class q_;
    std::vector<mpz_class> r_;
};

/// Lift an F_p value into F_{p^e} along the power basis.
inline FieldElement embed(const FieldElement& x, const FieldCtx& target) {
    if (!x.ctx()->is_prime_field() || !target->is_extension() ||
        x.ctx()->p() != target->p())
        throw context_mismatch();
    return FieldElement::from_coords(target, {x.residue()});
}

/// Power-basis readout of an F_{p^e} value as e elements of F_p.
inline std::vector<FieldElement> basis_coordinates(const FieldElement& y) {
    if (!y.ctx()->is_extension())
        throw unsupported_field("basis_coordinates needs an extension field");
    const FieldCtx base = FieldContext::prime(y.ctx()->p());
    std::vector<FieldElement> out;
    for (const auto& c : y.coords())
        out.push_back(FieldElement::from_integer(base, c));
    return out;
}

/// Characteristic 0, or at least d(d-1)+1.
inline bool characteristic_supports_degree(const FieldCtx& ctx, long d) {
    if (d < 1) throw error("degree must be >= 1");
    if (!ctx->is_finite()) return true;
    return ctx->characteristic() >= mpz_class(d) * (d - 1) + 1;
}

/// The idx-th element in the canonical enumeration 0, 1, 2, ... of a finite
/// field (base-p digits of idx along the power basis).
inline FieldElement element_by_index(const FieldCtx& ctx,
                                     const mpz_class& idx) {
    if (!ctx->is_finite())
        throw unsupported_field("enumeration needs a finite field");
    if (ctx->is_prime_field()) return FieldElement::from_integer(ctx, idx);
    std::vector<mpz_class> coords;
    mpz_class rest = idx;
    while (rest != 0) {
        coords.push_back(rest % ctx->p());
        rest /= ctx->p();
    }
    return FieldElement::from_coords(ctx, std::move(coords));
}

/// Uniform random element of a finite field.
inline FieldElement random_element(const FieldCtx& ctx, RandomStream& stream) {
    if (!ctx->is_finite())
        throw unsupported_field("uniform sampling needs a finite field");
    return element_by_index(ctx, stream.below(ctx->cardinality()));
}

/// Integer-valued element drawn uniformly from [-box, box] (any context).
inline FieldElement random_boxed_integer(const FieldCtx& ctx,
                                         const mpz_class& box,
                                         RandomStream& stream) {
    return FieldElement::from_integer(ctx, stream.boxed_int(box));
}

}  // namespace ratdec

#endif
