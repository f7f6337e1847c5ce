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
#include "ratdec/near_separated.hpp"

using namespace ratdec;
using ratdec::testing::sc;

namespace {

const FieldCtx Q = FieldContext::rationals();

/// The two printed factors of the sextic fixture's near-separated form.
std::pair<MultiPoly, MultiPoly> printed_factors(const FieldCtx& ctx) {
    const auto up = std::vector<unsigned>{0, 1};
    const auto h1 = ratdec::testing::cubic_num(ctx);
    const auto h2 = ratdec::testing::cubic_den(ctx);
    auto x_of = [&](const MultiPoly& p) {
        return p.map_vars(4, {0, 1});
    };
    auto y_of = [&](const MultiPoly& p) {
        return p.map_vars(4, {2, 3});
    };
    // H1 = h1(X)*Y1Y2 - h1(Y)*X1X2 (the antisymmetric factor, 3 pulled out)
    const MultiPoly x1x2 = MultiPoly::variable(ctx, 4, 0) *
                           MultiPoly::variable(ctx, 4, 1);
    const MultiPoly y1y2 = MultiPoly::variable(ctx, 4, 2) *
                           MultiPoly::variable(ctx, 4, 3);
    const MultiPoly H1 = x_of(h1) * y1y2 - y_of(h1) * x1x2;
    // H2 = h1(X)h1(Y) - h2(X)h2(Y) (symmetric)
    const MultiPoly H2 = x_of(h1) * y_of(h1) - x_of(h2) * y_of(h2);
    return {H1, H2};
}

}  // namespace

TEST_CASE("near-separated construction") {
    SECTION("the printed two-factor product") {
        auto f = ratdec::testing::composite_sextic(Q);
        auto ns = near_separated(f);
        auto [H1, H2] = printed_factors(Q);
        REQUIRE(ns.poly == H1 * H2 * sc(Q, 3));
    }
    SECTION("vanishes on the diagonal") {
        auto f = ratdec::testing::composite_sextic(Q);
        auto ns = near_separated(f);
        REQUIRE(ns.poly.map_vars(2, {0, 1, 0, 1}).is_zero());
        // block swap negates
        REQUIRE(detail::swap_blocks(ns.poly, 2) == -ns.poly);
    }
    SECTION("one-variable smoke: X gives X - Y") {
        auto X = MultiPoly::variable(Q, 1, 0);
        auto ns = near_separated(RationalFunctionMV::from_poly(X));
        auto X2 = MultiPoly::variable(Q, 2, 0);
        auto Y2 = MultiPoly::variable(Q, 2, 1);
        REQUIRE(ns.poly == X2 - Y2);
    }
}

TEST_CASE("near-separated form recognition") {
    auto [H1, H2] = printed_factors(Q);
    SECTION("the antisymmetric factor is recognized") {
        auto pair = is_near_separated_form(H1 * sc(Q, 3));
        REQUIRE(pair.has_value());
        REQUIRE(pair->first == ratdec::testing::cubic_num(Q));
        auto X = MultiPoly::variable(Q, 2, 0), Y = MultiPoly::variable(Q, 2, 1);
        REQUIRE(pair->second == X * Y);
    }
    SECTION("the symmetric factor is rejected") {
        REQUIRE_FALSE(is_near_separated_form(H2).has_value());
    }
    SECTION("one-variable smoke") {
        auto X2 = MultiPoly::variable(Q, 2, 0);
        auto Y2 = MultiPoly::variable(Q, 2, 1);
        auto pair = is_near_separated_form(X2 - Y2);
        REQUIRE(pair.has_value());
        REQUIRE(pair->first == MultiPoly::variable(Q, 1, 0));
        REQUIRE(pair->second == MultiPoly::constant(Q, 1, 1));
    }
}

TEST_CASE("decomposition through the near-separated polynomial") {
    RandomStream stream(17);
    SECTION("the composite sextic") {
        auto f = ratdec::testing::composite_sextic(Q);
        auto r = decompose_via_near_separated(f, stream);
        REQUIRE(r.outcome == DecompOutcome::decomposed);
        REQUIRE(r.decomposition->u.degree() == 2);
        REQUIRE(compose(r.decomposition->u, r.decomposition->h) == f);
        REQUIRE(mobius_between(r.decomposition->h,
                               ratdec::testing::cubic_over_product(Q))
                    .has_value());
        // the paper's complexity fix: candidate count is bounded by d
        REQUIRE(r.candidates_examined <= 6);
    }
    SECTION("the non-composite cubic certifies through irreducibility") {
        auto f = ratdec::testing::cubic_over_product(Q);
        auto r = decompose_via_near_separated(f, stream);
        REQUIRE(r.outcome == DecompOutcome::noncomposite);
    }
    SECTION("a pure square in the two-variable embedding") {
        auto X = MultiPoly::variable(Q, 2, 0);
        auto f = RationalFunctionMV::from_poly(X * X);
        auto r = decompose_via_near_separated(f, stream);
        REQUIRE(r.outcome == DecompOutcome::decomposed);
        REQUIRE(r.decomposition->u.degree() == 2);
        REQUIRE(compose(r.decomposition->u, r.decomposition->h) == f);
    }
    SECTION("guards") {
        auto X = MultiPoly::variable(Q, 4, 0);
        auto f = RationalFunctionMV::from_poly(X);
        REQUIRE_THROWS_AS(decompose_via_near_separated(f, stream),
                          dimension_guard);
    }
}

TEST_CASE("component extraction") {
    RandomStream stream(19);
    auto f = ratdec::testing::composite_sextic(Q);
    auto [H1, H2] = printed_factors(Q);
    SECTION("the antisymmetric factor yields the cubic") {
        auto got = extract_component(H1 * sc(Q, 3), f, stream);
        REQUIRE(got.has_value());
        REQUIRE(compose(got->second, got->first) == f);
        REQUIRE(mobius_between(got->first,
                               ratdec::testing::cubic_over_product(Q))
                    .has_value());
    }
    SECTION("an unrelated polynomial is rejected") {
        auto X1 = MultiPoly::variable(Q, 4, 0);
        auto Y1 = MultiPoly::variable(Q, 4, 2);
        auto junk = X1 * X1 * Y1 + Y1 + MultiPoly::constant(Q, 4, 1);
        REQUIRE_FALSE(extract_component(junk, f, stream).has_value());
    }
}

TEST_CASE("divisibility of near-separated forms along composition") {
    RandomStream stream(23);
    auto F101 = FieldContext::prime(101);
    int done = 0;
    while (done < 6) {
        auto u = ratdec::testing::random_outer(F101, 2, stream);
        auto h = ratdec::testing::random_rational_function(F101, 2, 2, stream);
        if (h.degree() < 1) continue;
        auto f = compose(u, h);
        if (f.degree() != u.degree() * h.degree()) continue;
        auto nf = near_separated(f);
        auto nh = near_separated(h);
        REQUIRE(nh.poly.divides(nf.poly));
        ++done;
    }
}

TEST_CASE("irreducibility of near-separated forms of non-composite inputs") {
    RandomStream stream(29);
    auto F101 = FieldContext::prime(101);
    int done = 0;
    while (done < 3) {
        auto h = ratdec::testing::random_rational_function(F101, 2, 2, stream);
        if (h.degree() != 2) continue;
        DecompReport cert{DecompOutcome::noncomposite, std::nullopt};
        try {
            cert = decomp_det(h, stream);
        } catch (const error&) {
            continue;
        }
        if (cert.outcome != DecompOutcome::noncomposite) continue;
        auto ns = near_separated(h);
        REQUIRE(is_irreducible_rational(ns.poly, stream));
        ++done;
    }
}

TEST_CASE("cross-algorithm agreement on a few instances") {
    RandomStream stream(31);
    auto F101 = FieldContext::prime(101);
    int done = 0;
    while (done < 4) {
        RationalFunctionMV f = (done % 2 == 0)
                                   ? compose(ratdec::testing::random_outer(
                                                 F101, 2, stream),
                                             ratdec::testing::
                                                 random_rational_function(
                                                     F101, 2, 2, stream))
                                   : ratdec::testing::random_rational_function(
                                         F101, 2, 4, stream);
        if (f.degree() < 2 || f.degree() > 4) continue;
        const DecompReport a = decomp(f, stream);
        const DecompReport b = decomp_det(f, stream);
        const DecompReport c = decompose_via_near_separated(f, stream);
        REQUIRE(a.outcome == b.outcome);
        REQUIRE(b.outcome == c.outcome);
        if (a.outcome == DecompOutcome::decomposed) {
            REQUIRE(mobius_between(a.decomposition->h, b.decomposition->h)
                        .has_value());
            REQUIRE(mobius_between(b.decomposition->h, c.decomposition->h)
                        .has_value());
        }
        ++done;
    }
}
