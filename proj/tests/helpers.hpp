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

#ifndef RATDEC_TESTS_HELPERS_HPP
#define RATDEC_TESTS_HELPERS_HPP

#include "ratdec/decompose.hpp"
#include "ratdec/ratfun.hpp"

namespace ratdec::testing {

inline FieldElement sc(const FieldCtx& ctx, long n) {
    return FieldElement::from_integer(ctx, n);
}

/// h = (X^3 + Y^3 + 1) / (3XY), the running non-composite cubic.
inline RationalFunctionMV cubic_over_product(const FieldCtx& ctx) {
    const MultiPoly x = MultiPoly::variable(ctx, 2, 0);
    const MultiPoly y = MultiPoly::variable(ctx, 2, 1);
    const MultiPoly one = MultiPoly::constant(ctx, 2, 1);
    return RationalFunctionMV(x.pow(3) + y.pow(3) + one, x * y * sc(ctx, 3));
}

inline MultiPoly cubic_num(const FieldCtx& ctx) {
    const MultiPoly x = MultiPoly::variable(ctx, 2, 0);
    const MultiPoly y = MultiPoly::variable(ctx, 2, 1);
    return x.pow(3) + y.pow(3) + MultiPoly::constant(ctx, 2, 1);
}

inline MultiPoly cubic_den(const FieldCtx& ctx) {
    const MultiPoly x = MultiPoly::variable(ctx, 2, 0);
    const MultiPoly y = MultiPoly::variable(ctx, 2, 1);
    return x * y * sc(ctx, 3);
}

/// u = (T^2 + 1)/T.
inline RationalFunctionUV inverse_sum_outer(const FieldCtx& ctx) {
    return RationalFunctionUV(
        UniPoly(ctx, {sc(ctx, 1), sc(ctx, 0), sc(ctx, 1)}),
        UniPoly::variable(ctx));
}

/// f = u o h of degree 6, the running composite fixture.
inline RationalFunctionMV composite_sextic(const FieldCtx& ctx) {
    return compose(inverse_sum_outer(ctx), cubic_over_product(ctx));
}

inline std::vector<FieldElement> point(const FieldCtx& ctx,
                                       std::initializer_list<long> coords) {
    std::vector<FieldElement> p;
    for (long c : coords) p.push_back(sc(ctx, c));
    return p;
}

/// A random dense-ish polynomial of total degree <= d.
inline MultiPoly random_poly(const FieldCtx& ctx, unsigned nvars, long d,
                             RandomStream& stream, long coeff_box = 9) {
    MultiPoly f(ctx, nvars);
    std::vector<Exponents> exps;
    Exponents cur(nvars, 0);
    // enumerate all exponent tuples with sum <= d
    auto rec = [&](auto&& self, unsigned var, long rest) -> void {
        if (var == nvars) {
            exps.push_back(cur);
            return;
        }
        for (long e = 0; e <= rest; ++e) {
            cur[var] = static_cast<unsigned>(e);
            self(self, var + 1, rest - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, d);
    for (const auto& e : exps) {
        FieldElement c = ctx->is_finite()
                             ? random_element(ctx, stream)
                             : random_boxed_integer(ctx, coeff_box, stream);
        f.add_term(e, c);
    }
    return f;
}

/// A random reduced rational function of degree <= d (nonzero denominator).
inline RationalFunctionMV random_rational_function(const FieldCtx& ctx,
                                                   unsigned nvars, long d,
                                                   RandomStream& stream) {
    while (true) {
        MultiPoly num = random_poly(ctx, nvars, d, stream);
        MultiPoly den = random_poly(ctx, nvars, d, stream);
        if (den.is_zero()) continue;
        RationalFunctionMV f(num, den);
        if (!f.is_constant()) return f;
    }
}

/// A random nonconstant univariate rational function of degree exactly d.
inline RationalFunctionUV random_outer(const FieldCtx& ctx, long d,
                                       RandomStream& stream) {
    while (true) {
        std::vector<FieldElement> nc, dc;
        for (long i = 0; i <= d; ++i) {
            nc.push_back(ctx->is_finite()
                             ? random_element(ctx, stream)
                             : random_boxed_integer(ctx, 9, stream));
            dc.push_back(ctx->is_finite()
                             ? random_element(ctx, stream)
                             : random_boxed_integer(ctx, 9, stream));
        }
        RationalFunctionUV u{UniPoly(ctx, nc), UniPoly(ctx, dc)};
        if (u.den().is_zero()) continue;
        if (u.degree() == d) return u;
    }
}

}  // namespace ratdec::testing

#endif
