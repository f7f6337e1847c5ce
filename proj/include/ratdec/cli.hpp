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

#ifndef RATDEC_CLI_HPP
#define RATDEC_CLI_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratdec/decompose.hpp"
#include "ratdec/luroth.hpp"
#include "ratdec/near_separated.hpp"
#include "ratdec/newton_polytope.hpp"
#include "ratdec/parse.hpp"

namespace ratdec {

struct Request {
    std::string command;
    std::string field = "rational";  // "rational" or "fp:<p>"
    unsigned nvars = 2;
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
    std::map<std::string, std::string> options;
    bool json = false;
};

struct Report {
    int exit_code = 0;
    std::string text;
    nlohmann::json json;
};

namespace detail {

inline FieldCtx parse_field_spec(const std::string& spec) {
    if (spec == "rational") return FieldContext::rationals();
    if (spec.rfind("fp:", 0) == 0)
        return FieldContext::prime(mpz_class(spec.substr(3)));
    throw parse_error("field must be 'rational' or 'fp:<p>'", 0);
}

inline std::vector<FieldElement> parse_point(const std::string& text,
                                             unsigned nvars,
                                             const FieldCtx& ctx) {
    std::vector<FieldElement> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        point.push_back(FieldElement::from_integer(ctx, mpz_class(item)));
    if (point.size() != nvars)
        throw parse_error("point needs one coordinate per variable", 0);
    return point;
}

inline nlohmann::json fraction_json(const RationalFunctionUV& u) {
    return {{"num", u.num().to_string()}, {"den", u.den().to_string()}};
}

inline nlohmann::json fraction_json(const RationalFunctionMV& h,
                                    const std::vector<std::string>& names) {
    return {{"num", h.num().to_string(names)},
            {"den", h.den().to_string(names)}};
}

}  // namespace detail

/// Run one request; deterministic in (request, seed). Exit codes: 0 success,
/// 1 parse/usage error, 2 algorithm-reported failure.
inline Report run(const Request& request) {
    Report report;
    nlohmann::json& out = report.json;
    out["command"] = request.command;
    out["field"] = request.field;
    out["seed"] = request.seed;
    std::ostringstream text;
    try {
        const FieldCtx ctx = detail::parse_field_spec(request.field);
        const auto names = default_var_names(request.nvars);
        RandomStream stream(request.seed);
        auto opt = [&](const std::string& key) -> const std::string* {
            auto it = request.options.find(key);
            return it == request.options.end() ? nullptr : &it->second;
        };
        auto need_inputs = [&](std::size_t n) {
            if (request.inputs.size() < n)
                throw parse_error("command needs " + std::to_string(n) +
                                      " expression(s)",
                                  0);
        };
        auto parse_input = [&](std::size_t i) {
            return parse_rational_function(request.inputs[i], names, ctx);
        };

        if (request.command == "reduce") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            out["outcome"] = "reduced";
            out["h"] = detail::fraction_json(f, names);
            text << f.to_string(names) << "\n";
        } else if (request.command == "decomp") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            DecompOptions options;
            if (const auto* pa = opt("point-a")) {
                const auto* pb = opt("point-b");
                if (!pb)
                    throw parse_error("point-a requires point-b", 0);
                options.forced_points = {
                    detail::parse_point(*pa, request.nvars, ctx),
                    detail::parse_point(*pb, request.nvars, ctx)};
            }
            const DecompReport r = decomp(f, stream, options);
            out["trials_used"] = r.trials_used;
            if (r.outcome == DecompOutcome::noncomposite) {
                out["outcome"] = "non-composite";
                text << "non-composite\n";
            } else {
                out["outcome"] = "decomposed";
                out["u"] = detail::fraction_json(r.decomposition->u);
                out["h"] = detail::fraction_json(r.decomposition->h, names);
                text << "u = " << r.decomposition->u.to_string() << "\n"
                     << "h = " << r.decomposition->h.to_string(names) << "\n";
            }
        } else if (request.command == "decomp-det") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            std::vector<FieldElement> sample_set;
            if (const auto* s = opt("sample-set")) {
                std::stringstream ss(*s);
                std::string item;
                while (std::getline(ss, item, ','))
                    sample_set.push_back(
                        FieldElement::from_integer(ctx, mpz_class(item)));
            } else {
                sample_set = default_sample_set(ctx, f.degree());
                if (sample_set.size() <
                    deterministic_sample_bound(f.degree()))
                    out["warnings"].push_back(
                        "field smaller than the certification bound; "
                        "exhaustion would be reported as an error");
            }
            const DecompReport r = decomp_det(f, sample_set, stream);
            out["trials_used"] = r.trials_used;
            if (r.outcome == DecompOutcome::noncomposite) {
                out["outcome"] = "non-composite";
                text << "non-composite (certified)\n";
            } else {
                out["outcome"] = "decomposed";
                out["u"] = detail::fraction_json(r.decomposition->u);
                out["h"] = detail::fraction_json(r.decomposition->h, names);
                text << "u = " << r.decomposition->u.to_string() << "\n"
                     << "h = " << r.decomposition->h.to_string(names) << "\n";
            }
        } else if (request.command == "compute-u") {
            need_inputs(2);
            const RationalFunctionMV f = parse_input(0);
            const RationalFunctionMV h = parse_input(1);
            const std::string method = opt("method") ? *opt("method") : "both";
            std::optional<RationalFunctionUV> u;
            if (method == "linear") {
                u = compute_outer_linear(f, h);
            } else if (method == "series") {
                u = compute_outer_series(f, h);
            } else {
                u = compute_outer_linear(f, h);
                const RationalFunctionUV u2 = compute_outer_series(f, h);
                if (*u != u2)
                    throw error("the two u-computation routes disagree");
            }
            out["outcome"] = "computed";
            out["u"] = detail::fraction_json(*u);
            text << "u = " << u->to_string() << "\n";
        } else if (request.command == "luroth") {
            need_inputs(1);
            std::vector<RationalFunctionMV> fs;
            for (std::size_t i = 0; i < request.inputs.size(); ++i)
                fs.push_back(parse_input(i));
            const LurothResult r = luroth_generator(fs, stream);
            if (r.outcome == LurothOutcome::generator) {
                out["outcome"] = "generator";
                out["generator"] = detail::fraction_json(*r.generator, names);
                text << "generator = " << r.generator->to_string(names) << "\n";
            } else {
                out["outcome"] = "no-generator";
                text << "no generator\n";
            }
        } else if (request.command == "sederberg") {
            need_inputs(2);
            const RationalFunctionMV f = parse_input(0);
            const RationalFunctionMV g = parse_input(1);
            SederbergResult r{SederbergResult::Status::retry_needed,
                              std::nullopt, std::nullopt, std::nullopt};
            if (const auto* pa = opt("point-a")) {
                const auto* pb = opt("point-b");
                if (!pb) throw parse_error("point-a requires point-b", 0);
                r = sederberg_generalized(
                    f, g, detail::parse_point(*pa, request.nvars, ctx),
                    detail::parse_point(*pb, request.nvars, ctx));
            } else {
                unsigned retries = 0;
                r = detail::sederberg_with_retry(f, g, stream, 10, retries);
                out["trials_used"] = retries;
            }
            if (r.status == SederbergResult::Status::generator) {
                out["outcome"] = "generator";
                out["generator"] = detail::fraction_json(*r.generator, names);
                text << "generator = " << r.generator->to_string(names) << "\n";
                if (r.gcd_a && r.gcd_b) {
                    if (auto p = polynomial_generator_upgrade(*r.gcd_a,
                                                              *r.gcd_b)) {
                        out["warnings"].push_back(
                            "polynomial generator available: " +
                            p->to_string(names));
                    }
                }
            } else if (r.status == SederbergResult::Status::no_generator) {
                out["outcome"] = "no-generator";
                text << "no generator\n";
            } else {
                out["outcome"] = "retry-needed";
                report.exit_code = 2;
                text << "retry needed (bad points)\n";
            }
        } else if (request.command == "indecomp") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            const PolytopeTestResult r = indecomposability_test(f);
            const LatticePolytope np = newton_polytope(f);
            long g = 0;
            for (const auto& v : np.vertices)
                for (long x : v) g = std::gcd(g, x);
            out["warnings"].push_back("vertex coordinate gcd = " +
                                      std::to_string(g));
            if (r == PolytopeTestResult::noncomposite) {
                out["outcome"] = "non-composite";
                text << "non-composite (vertex gcd " << g << ")\n";
            } else {
                out["outcome"] = "inconclusive";
                text << "inconclusive (vertex gcd " << g << ")\n";
            }
        } else if (request.command == "grs") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            NearSeparatedGuards guards;
            if (opt("force")) guards.override_guards = true;
            const DecompReport r =
                decompose_via_near_separated(f, stream, guards);
            out["trials_used"] = r.trials_used;
            if (r.outcome == DecompOutcome::noncomposite) {
                out["outcome"] = "non-composite";
                text << "non-composite (certified)\n";
            } else {
                out["outcome"] = "decomposed";
                out["u"] = detail::fraction_json(r.decomposition->u);
                out["h"] = detail::fraction_json(r.decomposition->h, names);
                text << "u = " << r.decomposition->u.to_string() << "\n"
                     << "h = " << r.decomposition->h.to_string(names) << "\n";
            }
        } else if (request.command == "spectrum") {
            need_inputs(1);
            const RationalFunctionMV f = parse_input(0);
            const ProjectivePointSet sigma = spectrum_bruteforce(f, stream);
            out["spectrum_points"] = nlohmann::json::array();
            for (const auto& [mu, lambda] : sigma) {
                const std::string point =
                    mu.to_string() + ":" + lambda.to_string();
                out["spectrum_points"].push_back(point);
                text << "(" << point << ")\n";
            }
            out["outcome"] = "enumerated";
            text << "count = " << sigma.size() << "\n";
        } else {
            throw parse_error("unknown command '" + request.command + "'", 0);
        }
    } catch (const parse_error& e) {
        report.exit_code = 1;
        out["outcome"] = "error";
        out["warnings"].push_back(e.what());
        text << "error: " << e.what() << "\n";
    } catch (const error& e) {
        report.exit_code = 2;
        out["outcome"] = "error";
        out["warnings"].push_back(e.what());
        text << "error: " << e.what() << "\n";
    }
    report.text = text.str();
    return report;
}

}  // namespace ratdec

#endif
