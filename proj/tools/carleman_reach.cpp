/*
* Copyright (C) 2026 carleman-reach contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "carleman/cli/run.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace
{

std::vector<double> parse_times(const std::string& text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double value     = 0.0;
        try {
            value = std::stod(item, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            carleman::fail(carleman::ErrorKind::config, "field \"reeval_times\": cannot parse \"" + item + "\"");
        }
        out.push_back(value);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace carleman;

    CLI::App app{"Carleman-linearization reachability for quadratic ODEs"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Compute a flowpipe from a config file and/or flags");
    std::string config_path;
    std::string model;
    std::optional<int> order;
    std::optional<double> step;
    std::optional<double> horizon;
    std::string error_bound;
    std::string reeval;
    std::string norm;
    std::string mode;
    std::string out_dir;
    std::optional<std::size_t> simulate;
    std::optional<std::uint64_t> seed;

    run_cmd->add_option("config", config_path, "JSON run configuration (or a metadata.json from a previous run)");
    run_cmd->add_option("--model", model, "Builtin model: logistic, seir, burgers");
    run_cmd->add_option("--order,-N", order, "Truncation order N");
    run_cmd->add_option("--step", step, "Time step delta");
    run_cmd->add_option("--horizon", horizon, "Time horizon T");
    run_cmd->add_option("--error-bound", error_bound, "none | theorem1")->check(CLI::IsMember({"none", "theorem1"}));
    run_cmd->add_option("--reeval", reeval, "Comma-separated reevaluation times, e.g. 4,7.5");
    run_cmd->add_option("--norm", norm, "2 | inf")->check(CLI::IsMember({"2", "inf"}));
    run_cmd->add_option("--mode", mode, "discrete | dense")->check(CLI::IsMember({"discrete", "dense"}));
    run_cmd->add_option("--out", out_dir, "Output directory");
    run_cmd->add_option("--simulate", simulate, "Number of RK4 trajectories to overlay and check");
    run_cmd->add_option("--seed", seed, "Seed for sampling initial states");

    CLI11_PARSE(app, argc, argv);

    try {
        cli::RunConfig config;
        if (!config_path.empty()) {
            config = cli::load_config(config_path);
        }
        else if (model.empty()) {
            fail(ErrorKind::config, "field \"model\": give a config file or --model");
        }
        if (!model.empty()) {
            nlohmann::json doc = cli::to_json(config);
            doc["model"]       = model;
            if (config.model != model) {
                doc.erase("params");
                doc.erase("X0");
            }
            config = cli::parse_config(doc);
        }
        if (order) {
            config.order = *order;
        }
        if (step) {
            config.delta = *step;
        }
        if (horizon) {
            config.horizon = *horizon;
        }
        if (!error_bound.empty()) {
            config.error_mode = *parse_error_mode(error_bound);
        }
        if (!reeval.empty()) {
            config.reeval_times = parse_times(reeval);
        }
        if (!norm.empty()) {
            config.norm = *parse_norm(norm);
        }
        if (!mode.empty()) {
            config.mode = *parse_time_mode(mode);
        }
        if (!out_dir.empty()) {
            config.output_dir = out_dir;
        }
        if (simulate) {
            config.simulate = *simulate;
        }
        if (seed) {
            config.seed = *seed;
        }

        cli::RunResult result = cli::run(config);
        const auto& fp        = result.flowpipe;
        std::cout << "model " << config.model << ": " << fp.sets.size() << " reach sets over ["
                  << fp.t_start() << ", " << fp.t_end() << "], R = " << result.model.R
                  << ", Re(lambda_1) = " << result.model.re_lambda1 << '\n';
        for (const auto& line : fp.diagnostics) {
            std::cout << "note: " << line << '\n';
        }
        if (result.containment) {
            std::cout << "simulation: " << (result.containment->contained ? "all trajectories contained" : "VIOLATION")
                      << ", min margin " << result.containment->min_margin << '\n';
        }
        std::cout << "wrote " << config.output_dir << "/flowpipe.csv\n";
        return cli::exit_ok;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_code(e.kind());
    }
    catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return cli::exit_internal;
    }
}
