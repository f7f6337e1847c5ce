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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ratdec/decompose.hpp"
#include "ratdec/ratfun.hpp"

using namespace ratdec;
using ratdec::testing::sc;
using ratdec::testing::point;

namespace {
const FieldCtx Q = FieldContext::rationals();
}

TEST_CASE("reduction and canonical form") {
    auto X = MultiPoly::variable(Q, 2, 0), Y = MultiPoly::variable(Q, 2, 1);
    auto one = MultiPoly::constant(Q, 2, 1);
    SECTION("difference of squares") {
        RationalFunctionMV f(X * X - Y * Y, X - Y);
        REQUIRE(f.num() == X + Y);
        REQUIRE(f.den() == one);
    }
    SECTION("common factor cancels") {
        auto h1 = ratdec::testing::cubic_num(Q);
        auto h2 = ratdec::testing::cubic_den(Q);
        RationalFunctionMV f(h1 * X, h2 * X);
        REQUIRE(f == ratdec::testing::cubic_over_product(Q));
    }
    SECTION("already reduced is unchanged up to normalization") {
        RationalFunctionMV f(X + Y, X - Y);
        RationalFunctionMV g((X + Y) * sc(Q, -2), (X - Y) * sc(Q, -2));
        REQUIRE(f == g);
    }
    SECTION("zero denominator is rejected") {
        REQUIRE_THROWS_AS(RationalFunctionMV(X, MultiPoly(Q, 2)),
                          zero_denominator);
    }
    SECTION("degree is the max after reduction") {
        RationalFunctionMV f(X * X - Y * Y, X - Y);
        REQUIRE(f.degree() == 1);
        REQUIRE(ratdec::testing::composite_sextic(Q).degree() == 6);
    }
}

TEST_CASE("pencil members") {
    auto f = ratdec::testing::cubic_over_product(Q);
    auto h1 = ratdec::testing::cubic_num(Q);
    auto h2 = ratdec::testing::cubic_den(Q);
    REQUIRE(pencil_member(f, sc(Q, 1), sc(Q, 0)) == h1);
    REQUIRE(pencil_member(f, sc(Q, 1), sc(Q, -1)) == h1 + h2);
    REQUIRE(pencil_member(f, sc(Q, 0), sc(Q, 1)) == -h2);
    REQUIRE_THROWS_AS(pencil_member(f, sc(Q, 0), sc(Q, 0)), error);
}

TEST_CASE("anchored pencil members") {
    auto f = ratdec::testing::cubic_over_product(Q);
    auto h2 = ratdec::testing::cubic_den(Q);
    SECTION("the paper's F_a at the origin") {
        REQUIRE(anchored_pencil_member(f, point(Q, {0, 0})) == -h2);
    }
    SECTION("the formula value at (0,1), where the denominator vanishes") {
        REQUIRE(anchored_pencil_member(f, point(Q, {0, 1})) ==
                h2 * sc(Q, -2));
    }
    SECTION("agrees with the two-scalar pencil form") {
        RandomStream stream(3);
        for (int i = 0; i < 20; ++i) {
            auto a = point(Q, {0, 0});
            a[0] = random_boxed_integer(Q, 10, stream);
            a[1] = random_boxed_integer(Q, 10, stream);
            const FieldElement v1 = f.num().evaluate(a);
            const FieldElement v2 = f.den().evaluate(a);
            if (v1.is_zero() && v2.is_zero()) continue;
            REQUIRE(anchored_pencil_member(f, a) ==
                    pencil_member(f, v2, v1));
        }
    }
    SECTION("base point of the pencil is rejected") {
        // (-1, 0) kills both X^3+Y^3+1 and 3XY
        REQUIRE_THROWS_AS(anchored_pencil_member(f, point(Q, {-1, 0})),
                          base_point_of_pencil);
    }
    SECTION("Example b's anchored member at (1,-1) factors as printed") {
        RandomStream stream(17);
        auto fb = ratdec::testing::composite_sextic(Q);
        auto member = anchored_pencil_member(fb, point(Q, {1, -1}));
        auto h1 = ratdec::testing::cubic_num(Q);
        auto x = MultiPoly::variable(Q, 2, 0), y = MultiPoly::variable(Q, 2, 1);
        REQUIRE(member ==
                -(h1 + x * y) * (h1 + x * y * sc(Q, 9)) * sc(Q, 3));
        auto fl = factor_multivariate(member, stream);
        bool has_printed = false;
        for (const auto& [g, m] : fl.factors)
            if (g == h1 + x * y) has_printed = true;
        REQUIRE(has_printed);
    }
}

TEST_CASE("composition") {
    auto h = ratdec::testing::cubic_over_product(Q);
    auto u = ratdec::testing::inverse_sum_outer(Q);
    SECTION("the running composite fixture") {
        auto f = compose(u, h);
        auto h1 = ratdec::testing::cubic_num(Q);
        auto h2 = ratdec::testing::cubic_den(Q);
        REQUIRE(f.num() == h1 * h1 + h2 * h2);
        REQUIRE(f.den() == h1 * h2);
    }
    SECTION("identity and constants") {
        REQUIRE(compose(RationalFunctionUV::identity(Q), h) == h);
        auto c = RationalFunctionUV::from_poly(UniPoly::constant(Q, 5));
        auto composed = compose(c, h);
        REQUIRE(composed.is_constant());
        REQUIRE(composed.num() == MultiPoly::constant(Q, 2, 5));
    }
    SECTION("degree multiplicativity on random inputs") {
        RandomStream stream(11);
        auto F101 = FieldContext::prime(101);
        int done = 0;
        while (done < 15) {
            auto u2 = ratdec::testing::random_outer(F101, 2 + (done % 2),
                                                    stream);
            auto h2 = ratdec::testing::random_rational_function(F101, 2, 2,
                                                                stream);
            if (h2.degree() != 2) continue;
            auto f = compose(u2, h2);
            REQUIRE(f.degree() == u2.degree() * h2.degree());
            ++done;
        }
    }
}

TEST_CASE("proportionality identity for unreduced pencil members") {
    // mu*f1 - lambda*f2 = (mu*u1 - lambda*u2)(h) * h2^(deg u) with f1, f2
    // built without reduction
    RandomStream stream(127);
    auto F101 = FieldContext::prime(101);
    for (const auto& ctx : {Q, F101}) {
        for (int i = 0; i < 10; ++i) {
            auto u = ratdec::testing::random_outer(ctx, 2 + (i % 2), stream);
            auto h = ratdec::testing::random_rational_function(
                ctx, 2, 2 + (i % 2), stream);
            if (h.is_constant()) continue;
            const unsigned long k =
                static_cast<unsigned long>(u.degree());
            const MultiPoly f1 = homogeneous_eval(u.num(), k, h.num(), h.den());
            const MultiPoly f2 = homogeneous_eval(u.den(), k, h.num(), h.den());
            FieldElement mu = ctx->is_finite()
                                  ? random_element(ctx, stream)
                                  : random_boxed_integer(ctx, 20, stream);
            FieldElement lambda = ctx->is_finite()
                                      ? random_element(ctx, stream)
                                      : random_boxed_integer(ctx, 20, stream);
            if (mu.is_zero() && lambda.is_zero()) continue;
            const UniPoly member_u = u.num() * mu - u.den() * lambda;
            const MultiPoly lhs = f1 * mu - f2 * lambda;
            const MultiPoly rhs =
                homogeneous_eval(member_u, k, h.num(), h.den());
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("general position conditions") {
    SECTION("the running example carries its degree on the last variable") {
        auto f = ratdec::testing::cubic_over_product(Q);
        auto gp = check_general_position(f);
        REQUIRE(gp.degree_in_last_var);
        REQUIRE(gp.axis_restriction_transverse);
    }
    SECTION("a function without the last variable fails (i)") {
        auto X = MultiPoly::variable(Q, 2, 0);
        auto f = RationalFunctionMV::from_poly(X);
        REQUIRE_FALSE(check_general_position(f).degree_in_last_var);
    }
    SECTION("an affine change restores (i)") {
        RandomStream stream(41);
        auto X = MultiPoly::variable(Q, 2, 0);
        auto f = RationalFunctionMV::from_poly(X);
        auto change = random_affine_change(Q, 2, 1, stream);
        auto g = change.apply(f);
        REQUIRE(check_general_position(g).degree_in_last_var);
        REQUIRE(change.apply_inverse(g) == f);
    }
}

TEST_CASE("affine changes round-trip") {
    RandomStream stream(43);
    auto F101 = FieldContext::prime(101);
    for (const auto& ctx : {Q, F101}) {
        for (int i = 0; i < 8; ++i) {
            auto f = ratdec::testing::random_rational_function(ctx, 2, 3,
                                                               stream);
            auto change = random_affine_change(ctx, 2, f.degree(), stream);
            REQUIRE(change.apply_inverse(change.apply(f)) == f);
        }
    }
    REQUIRE_THROWS_AS(random_affine_change(FieldContext::prime(5), 2, 10,
                                           stream),
                      field_too_small);
}

TEST_CASE("spectrum by brute force") {
    RandomStream stream(53);
    auto F101 = FieldContext::prime(101);
    SECTION("the non-composite cubic has a small spectrum containing (0:1)") {
        auto f = ratdec::testing::cubic_over_product(F101);
        auto sigma = spectrum_bruteforce(f, stream);
        REQUIRE(sigma.size() <= 8);  // d^2 - 1
        bool has_zero = false;
        for (const auto& [mu, lambda] : sigma)
            if (mu.is_zero() && lambda.is_one()) has_zero = true;
        REQUIRE(has_zero);
    }
    SECTION("every full-degree member of a composite function is reducible") {
        auto f = ratdec::testing::composite_sextic(F101);
        const long d = f.degree();
        // sample a handful of pencil members rather than the full line
        for (long m : {0L, 1L, 2L, 3L, 50L, 100L}) {
            auto member = pencil_member(f, sc(F101, m), sc(F101, 1));
            if (member.total_degree() < d) continue;
            REQUIRE_FALSE(is_absolutely_irreducible(member, stream));
        }
    }
    SECTION("guards") {
        auto f = ratdec::testing::cubic_over_product(Q);
        REQUIRE_THROWS_AS(spectrum_bruteforce(f, stream), unsupported_field);
        auto big = FieldContext::prime(2053);
        auto g = ratdec::testing::cubic_over_product(big);
        REQUIRE_THROWS_AS(spectrum_bruteforce(g, stream),
                          field_too_large_for_enumeration);
    }
}

TEST_CASE("degree-1 relations between generators") {
    auto h = ratdec::testing::cubic_over_product(Q);
    SECTION("a Moebius transform of h is recognized") {
        // w = (2T+1)/(T-3)
        RationalFunctionUV w(UniPoly::from_integers(Q, {1, 2}),
                             UniPoly::from_integers(Q, {-3, 1}));
        auto target = compose(w, h);
        auto found = mobius_between(target, h);
        REQUIRE(found.has_value());
        REQUIRE(compose(*found, h) == target);
    }
    SECTION("an unrelated function is not") {
        auto X = MultiPoly::variable(Q, 2, 0);
        auto g = RationalFunctionMV::from_poly(X);
        REQUIRE_FALSE(mobius_between(g, h).has_value());
    }
}
