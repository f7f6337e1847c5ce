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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratdec/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "ratdec: exact decomposition of multivariate rational functions"};
    app.require_subcommand(0);

    ratdec::Request request;
    std::vector<std::string> inputs;
    std::string point_a, point_b, sample_set, method;
    bool force = false;

    app.add_option("command", request.command,
                   "one of: reduce decomp decomp-det compute-u luroth "
                   "sederberg indecomp grs spectrum")
        ->required();
    app.add_option("exprs", inputs,
                   "input expressions; '-' reads one expression from stdin");
    app.add_option("--field", request.field, "rational (default) or fp:<p>");
    app.add_option("--nvars", request.nvars, "number of variables (default 2)");
    app.add_option("--seed", request.seed, "pseudorandom seed (default 0)");
    app.add_flag("--json", request.json, "emit machine-readable JSON");
    app.add_option("--point-a", point_a, "forced point a, e.g. \"0,0\"");
    app.add_option("--point-b", point_b, "forced point b, e.g. \"0,1\"");
    app.add_option("--sample-set", sample_set,
                   "decomp-det sample set, e.g. \"0,1,2\"");
    app.add_option("--method", method, "compute-u: linear, series or both");
    app.add_flag("--force", force, "override the grs dimension/degree guards");

    CLI11_PARSE(app, argc, argv);

    for (auto& expr : inputs) {
        if (expr == "-") {
            std::string line, all;
            while (std::getline(std::cin, line)) all += line;
            expr = all;
        }
    }
    request.inputs = inputs;
    if (!point_a.empty()) request.options["point-a"] = point_a;
    if (!point_b.empty()) request.options["point-b"] = point_b;
    if (!sample_set.empty()) request.options["sample-set"] = sample_set;
    if (!method.empty()) request.options["method"] = method;
    if (force) request.options["force"] = "1";

    const ratdec::Report report = ratdec::run(request);
    if (request.json)
        std::cout << report.json.dump(2) << "\n";
    else
        std::cout << report.text;
    return report.exit_code;
}
