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
#include "ratdec/cli.hpp"

using namespace ratdec;
using ratdec::testing::sc;

namespace {
const FieldCtx Q = FieldContext::rationals();
const std::vector<std::string> XY = {"X1", "X2"};
}

TEST_CASE("expression parsing") {
    SECTION("the running fixture") {
        auto f = parse_rational_function("(X1^3+X2^3+1)/(3*X1*X2)", XY, Q);
        REQUIRE(f == ratdec::testing::cubic_over_product(Q));
    }
    SECTION("aliases for small variable counts") {
        auto f = parse_rational_function("(x^3+y^3+1)/(3*x*y)", XY, Q);
        REQUIRE(f == ratdec::testing::cubic_over_product(Q));
    }
    SECTION("bare polynomial") {
        auto f = parse_rational_function("X1", XY, Q);
        REQUIRE(f.num() == MultiPoly::variable(Q, 2, 0));
        REQUIRE(f.den() == MultiPoly::constant(Q, 2, 1));
    }
    SECTION("reduction happens on construction") {
        auto f = parse_rational_function("(x+y)/(x+y)", XY, Q);
        REQUIRE(f.num() == MultiPoly::constant(Q, 2, 1));
        REQUIRE(f.den() == MultiPoly::constant(Q, 2, 1));
    }
    SECTION("negative exponents and juxtaposition are rejected") {
        REQUIRE_THROWS_AS(parse_polynomial("X1^-2", XY, Q), parse_error);
        REQUIRE_THROWS_AS(parse_polynomial("2 X1", XY, Q), parse_error);
        REQUIRE_THROWS_AS(parse_polynomial("X3 + 1", XY, Q), parse_error);
    }
    SECTION("only one top-level division") {
        REQUIRE_THROWS_AS(parse_rational_function("x/y/x", XY, Q),
                          parse_error);
        REQUIRE_THROWS_AS(parse_rational_function("(x/y)+1", XY, Q),
                          parse_error);
    }
    SECTION("positions are reported") {
        try {
            parse_polynomial("x + ?", XY, Q);
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            REQUIRE(e.position() == 4);
        }
    }
}

TEST_CASE("printing round-trips") {
    RandomStream stream(37);
    auto F101 = FieldContext::prime(101);
    for (const auto& ctx : {Q, F101}) {
        for (int i = 0; i < 20; ++i) {
            auto f = ratdec::testing::random_poly(ctx, 2, 4, stream);
            if (f.is_zero()) continue;
            auto canonical = normalize_canonical(f);
            auto reparsed = parse_polynomial(canonical.to_string(), XY, ctx);
            REQUIRE(reparsed == canonical);
        }
    }
    // rational functions print and reparse to equal objects
    auto f = ratdec::testing::composite_sextic(Q);
    auto reparsed = parse_rational_function(f.to_string(), XY, Q);
    REQUIRE(reparsed == f);
}

TEST_CASE("command dispatch") {
    SECTION("reduce") {
        Request r{.command = "reduce",
                  .inputs = {"(X1^2-X2^2)/(X1-X2)"}};
        auto rep = run(r);
        REQUIRE(rep.exit_code == 0);
        REQUIRE(rep.json["outcome"] == "reduced");
        REQUIRE(rep.json["h"]["num"] == "X1 + X2");
        REQUIRE(rep.json["h"]["den"] == "1");
    }
    SECTION("decomp on the composite fixture") {
        Request r{.command = "decomp",
                  .seed = 7,
                  .inputs = {"((X1^3+X2^3+1)^2+9*X1^2*X2^2)/"
                             "(3*X1*X2*(X1^3+X2^3+1))"}};
        r.options["point-a"] = "2,1";
        r.options["point-b"] = "1,-1";
        auto rep = run(r);
        REQUIRE(rep.exit_code == 0);
        REQUIRE(rep.json["outcome"] == "decomposed");
        REQUIRE(rep.json.contains("u"));
        REQUIRE(rep.json.contains("h"));
    }
    SECTION("indecomp emits the witness gcd") {
        Request r{.command = "indecomp", .inputs = {"(X1^2+X2)/1"}};
        auto rep = run(r);
        REQUIRE(rep.exit_code == 0);
        REQUIRE(rep.json["outcome"] == "non-composite");
        REQUIRE(rep.json["warnings"][0] == "vertex coordinate gcd = 1");
    }
    SECTION("spectrum requires a prime field") {
        Request r{.command = "spectrum",
                  .inputs = {"(X1^3+X2^3+1)/(3*X1*X2)"}};
        auto rep = run(r);
        REQUIRE(rep.exit_code == 2);
        REQUIRE(rep.json["outcome"] == "error");
    }
    SECTION("spectrum over a small prime field") {
        Request r{.command = "spectrum",
                  .field = "fp:101",
                  .inputs = {"(X1^3+X2^3+1)/(3*X1*X2)"}};
        auto rep = run(r);
        REQUIRE(rep.exit_code == 0);
        REQUIRE(rep.json["spectrum_points"].size() <= 8);
        bool has_zero = false;
        for (const auto& p : rep.json["spectrum_points"])
            if (p == "0:1") has_zero = true;
        REQUIRE(has_zero);
    }
    SECTION("usage errors exit with 1") {
        Request r{.command = "no-such-command"};
        REQUIRE(run(r).exit_code == 1);
        Request r2{.command = "decomp", .inputs = {"X1 +* X2"}};
        REQUIRE(run(r2).exit_code == 1);
    }
    SECTION("compute-u runs both routes and agrees") {
        Request r{.command = "compute-u",
                  .inputs = {"((X1^3+X2^3+1)^2+9*X1^2*X2^2)/"
                             "(3*X1*X2*(X1^3+X2^3+1))",
                             "(X1^3+X2^3+1)/(3*X1*X2)"}};
        auto rep = run(r);
        REQUIRE(rep.exit_code == 0);
        REQUIRE(rep.json["u"]["num"] == "T^2 + 1");
        REQUIRE(rep.json["u"]["den"] == "T");
    }
}

TEST_CASE("determinism: identical request and seed give identical bytes") {
    Request r{.command = "decomp",
              .field = "fp:101",
              .seed = 12345,
              .inputs = {"((X1^3+X2^3+1)^2+9*X1^2*X2^2)/"
                         "(3*X1*X2*(X1^3+X2^3+1))"}};
    auto rep1 = run(r);
    auto rep2 = run(r);
    REQUIRE(rep1.json.dump() == rep2.json.dump());
    REQUIRE(rep1.text == rep2.text);
    Request r2 = r;
    r2.seed = 54321;
    auto rep3 = run(r2);
    REQUIRE(rep3.json["outcome"] == rep1.json["outcome"]);
}
