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

#include <charconv>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace carleman::cli
{

using nlohmann::json;

int exit_code(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::config:
    case ErrorKind::invalid_argument:
        return exit_config;
    case ErrorKind::assumptions_violated:
        return exit_assumptions_violated;
    case ErrorKind::budget_exceeded:
        return exit_budget_exceeded;
    case ErrorKind::divergence:
    case ErrorKind::numerical:
        return exit_divergence;
    }
    return exit_internal;
}

namespace
{

[[noreturn]] void config_error(const std::string& field, const std::string& what)
{
    fail(ErrorKind::config, "field \"" + field + "\": " + what);
}

double as_number(const json& value, const std::string& field)
{
    if (!value.is_number()) {
        config_error(field, "expected a number");
    }
    return value.get<double>();
}

Vector as_vector(const json& value, const std::string& field)
{
    if (!value.is_array()) {
        config_error(field, "expected an array of numbers");
    }
    Vector out(static_cast<Eigen::Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = as_number(value[i], field + "[" + std::to_string(i) + "]");
    }
    return out;
}

Matrix as_matrix(const json& value, const std::string& field)
{
    if (!value.is_array() || value.empty()) {
        config_error(field, "expected a non-empty array of rows");
    }
    const std::size_t cols = value[0].is_array() ? value[0].size() : 0;
    Matrix out(static_cast<Eigen::Index>(value.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < value.size(); ++r) {
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        if (!value[r].is_array() || value[r].size() != cols) {
            config_error(row_field, "rows must be arrays of equal length");
        }
        out.row(static_cast<Eigen::Index>(r)) = as_vector(value[r], row_field).transpose();
    }
    return out;
}

json vector_json(const Vector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v[i]);
    }
    return out;
}

json matrix_json(const Matrix& m)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(vector_json(m.row(r).transpose()));
    }
    return out;
}

Hyperrectangle parse_box(const json& value)
{
    if (!value.is_object()) {
        config_error("X0", "expected an object with center/radius or lower/upper");
    }
    if (value.contains("lower") || value.contains("upper")) {
        if (!value.contains("lower") || !value.contains("upper")) {
            config_error("X0", "lower and upper must be given together");
        }
        Vector lo = as_vector(value["lower"], "X0.lower");
        Vector hi = as_vector(value["upper"], "X0.upper");
        if (lo.size() != hi.size() || !((lo.array() <= hi.array()).all())) {
            config_error("X0", "lower/upper must have equal length and lower <= upper");
        }
        return Hyperrectangle::from_bounds(lo, hi);
    }
    if (!value.contains("center")) {
        config_error("X0.center", "missing required field");
    }
    Vector c = as_vector(value["center"], "X0.center");
    Vector r = value.contains("radius") ? as_vector(value["radius"], "X0.radius") : Vector::Zero(c.size());
    if (c.size() != r.size() || (r.array() < 0.0).any()) {
        config_error("X0.radius", "must match center in length and be non-negative");
    }
    return Hyperrectangle::from_center_radius(c, r);
}

template <class Enum, class Parser>
Enum parse_enum(const json& doc, const std::string& field, Enum fallback, Parser parser)
{
    if (!doc.contains(field)) {
        return fallback;
    }
    const json& value = doc[field];
    std::string text  = value.is_string() ? value.get<std::string>() : value.dump();
    auto parsed       = parser(text);
    if (!parsed) {
        config_error(field, "unrecognized value " + value.dump());
    }
    return *parsed;
}

void apply_params(const json& params, const std::string& model, const std::vector<std::pair<const char*, double*>>& slots)
{
    for (const auto& [key, value] : params.items()) {
        bool found = false;
        for (const auto& [name, slot] : slots) {
            if (key == name) {
                *slot = as_number(value, "params." + key);
                found = true;
            }
        }
        if (!found) {
            config_error("params." + key, "unknown parameter for model " + model);
        }
    }
}

std::string format_double(double value)
{
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorKind::config, "cannot write output file " + path.string());
    }
    out << text;
    if (!out) {
        fail(ErrorKind::config, "failed writing output file " + path.string());
    }
}

json model_json(const ErrorModel& model)
{
    return {{"norm_x0", model.norm_x0},       {"norm_F2", model.norm_F2},
            {"re_lambda1", model.re_lambda1}, {"R", model.R},
            {"N", model.order},               {"norm", to_string(model.norm)},
            {"dissipative", model.dissipative()}, {"weakly_nonlinear", model.weakly_nonlinear()},
            {"applicable", model.applicable()},   {"violation", model.violation()}};
}

} // namespace

RunConfig parse_config(const json& input)
{
    const json& doc = (input.is_object() && input.contains("config") && input["config"].is_object())
                          ? input["config"]
                          : input;
    if (!doc.is_object()) {
        fail(ErrorKind::config, "config must be a JSON object");
    }
    RunConfig config;
    if (!doc.contains("model")) {
        config_error("model", "missing required field");
    }
    const json& model = doc["model"];
    if (model.is_string()) {
        config.model = model.get<std::string>();
        if (config.model != "logistic" && config.model != "seir" && config.model != "burgers") {
            config_error("model", "unknown builtin model \"" + config.model + "\"");
        }
    }
    else if (model.is_object()) {
        config.model = "inline";
        if (!model.contains("F1")) {
            config_error("model.F1", "missing required field");
        }
        config.F1 = as_matrix(model["F1"], "model.F1");
        const auto n = config.F1->rows();
        if (model.contains("F2")) {
            config.F2 = as_matrix(model["F2"], "model.F2");
        }
        else if (model.contains("F2_triplets")) {
            Matrix F2 = Matrix::Zero(n, n * n);
            const json& triplets = model["F2_triplets"];
            if (!triplets.is_array()) {
                config_error("model.F2_triplets", "expected an array of [row, col, value]");
            }
            for (std::size_t k = 0; k < triplets.size(); ++k) {
                const std::string field = "model.F2_triplets[" + std::to_string(k) + "]";
                const json& t           = triplets[k];
                if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
                    config_error(field, "expected [row, col, value] with integer indices");
                }
                const auto r = t[0].get<long long>();
                const auto c = t[1].get<long long>();
                if (r < 0 || r >= n || c < 0 || c >= n * n) {
                    config_error(field, "index out of range");
                }
                F2(r, c) += as_number(t[2], field);
            }
            config.F2 = std::move(F2);
        }
        else {
            config.F2 = Matrix::Zero(n, n * n);
        }
        if (model.contains("frozen")) {
            for (const auto& k : model["frozen"]) {
                if (!k.is_number_unsigned()) {
                    config_error("model.frozen", "expected non-negative integers");
                }
                config.frozen.push_back(k.get<std::size_t>());
            }
        }
    }
    else {
        config_error("model", "expected a builtin name or an object with F1/F2");
    }

    if (doc.contains("params")) {
        if (!doc["params"].is_object()) {
            config_error("params", "expected an object");
        }
        config.params = doc["params"];
    }
    if (doc.contains("X0")) {
        config.X0 = parse_box(doc["X0"]);
    }
    if (doc.contains("N")) {
        if (!doc["N"].is_number_integer()) {
            config_error("N", "expected an integer");
        }
        config.order = doc["N"].get<int>();
    }
    if (doc.contains("delta")) {
        config.delta = as_number(doc["delta"], "delta");
    }
    if (doc.contains("T")) {
        config.horizon = as_number(doc["T"], "T");
    }
    config.error_mode = parse_enum(doc, "error_mode", ErrorMode::none, parse_error_mode);
    config.norm       = parse_enum(doc, "norm", NormKind::two, parse_norm);
    config.mode       = parse_enum(doc, "mode", TimeMode::discrete, parse_time_mode);
    if (doc.contains("reeval_times")) {
        Vector times = as_vector(doc["reeval_times"], "reeval_times");
        config.reeval_times.assign(times.data(), times.data() + times.size());
    }
    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string()) {
            config_error("output_dir", "expected a string");
        }
        config.output_dir = doc["output_dir"].get<std::string>();
    }
    if (doc.contains("simulate")) {
        if (!doc["simulate"].is_number_unsigned()) {
            config_error("simulate", "expected a non-negative integer");
        }
        config.simulate = doc["simulate"].get<std::size_t>();
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
            config_error("seed", "expected a non-negative integer");
        }
        config.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("rk4_step")) {
        config.rk4_step = as_number(doc["rk4_step"], "rk4_step");
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::config, "cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    }
    catch (const json::parse_error& e) {
        fail(ErrorKind::config, "config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

json to_json(const RunConfig& config)
{
    json doc;
    if (config.model == "inline") {
        json model = {{"F1", matrix_json(*config.F1)}, {"F2", matrix_json(*config.F2)}};
        if (!config.frozen.empty()) {
            model["frozen"] = config.frozen;
        }
        doc["model"] = model;
    }
    else {
        doc["model"] = config.model;
    }
    if (!config.params.empty()) {
        doc["params"] = config.params;
    }
    if (config.X0) {
        doc["X0"] = {{"lower", vector_json(config.X0->lower())}, {"upper", vector_json(config.X0->upper())}};
    }
    if (config.order) {
        doc["N"] = *config.order;
    }
    if (config.delta) {
        doc["delta"] = *config.delta;
    }
    if (config.horizon) {
        doc["T"] = *config.horizon;
    }
    doc["error_mode"]   = to_string(config.error_mode);
    doc["reeval_times"] = config.reeval_times;
    doc["norm"]         = to_string(config.norm);
    doc["mode"]         = to_string(config.mode);
    doc["output_dir"]   = config.output_dir;
    doc["simulate"]     = config.simulate;
    doc["seed"]         = config.seed;
    if (config.rk4_step) {
        doc["rk4_step"] = *config.rk4_step;
    }
    return doc;
}

ReachRequest resolve(const RunConfig& config)
{
    ReachRequest req;
    std::optional<Hyperrectangle> default_X0;
    if (config.model == "logistic") {
        LogisticParams p;
        apply_params(config.params, config.model, {{"r", &p.r}, {"K", &p.K}});
        req.sys    = build_logistic(p);
        default_X0 = logistic_initial_set();
    }
    else if (config.model == "seir") {
        SeirParams p;
        apply_params(config.params, config.model,
                     {{"P", &p.P}, {"Lambda", &p.Lambda}, {"T_lat", &p.T_lat}, {"T_inf", &p.T_inf},
                      {"r_tra", &p.r_tra}, {"r_vac", &p.r_vac}});
        req.sys    = build_seir(p);
        default_X0 = seir_initial_set();
    }
    else if (config.model == "burgers") {
        BurgersParams p;
        double nx = p.nx;
        apply_params(config.params, config.model,
                     {{"nu", &p.nu}, {"L0", &p.L0}, {"U0", &p.U0}, {"nx", &nx}, {"w", &p.w}});
        if (nx != std::floor(nx) || nx < 3) {
            config_error("params.nx", "must be an integer >= 3");
        }
        p.nx             = static_cast<int>(nx);
        BurgersModel bm  = build_burgers(p);
        req.sys          = std::move(bm.sys);
        default_X0       = std::move(bm.X0);
    }
    else if (config.model == "inline") {
        req.sys.F1     = *config.F1;
        req.sys.F2     = *config.F2;
        req.sys.frozen = config.frozen;
        req.sys.name   = "inline";
    }
    else {
        config_error("model", "unknown model \"" + config.model + "\"");
    }
    try {
        req.sys.validate();
    }
    catch (const Error& e) {
        config_error("model", e.what());
    }

    if (config.X0) {
        req.X0 = *config.X0;
    }
    else if (default_X0) {
        req.X0 = *default_X0;
    }
    else {
        config_error("X0", "missing required field for inline models");
    }
    if (req.X0.dim() != req.sys.dim()) {
        config_error("X0", "dimension " + std::to_string(req.X0.dim()) + " does not match the model dimension " +
                               std::to_string(req.sys.dim()));
    }
    if (!config.order) {
        config_error("N", "missing required field");
    }
    if (*config.order < 1) {
        config_error("N", "truncation order must be >= 1");
    }
    if (!config.delta) {
        config_error("delta", "missing required field");
    }
    if (!config.horizon) {
        config_error("T", "missing required field");
    }
    if (!(*config.delta > 0.0)) {
        config_error("delta", "must be positive");
    }
    if (!(*config.horizon >= *config.delta)) {
        config_error("T", "must be at least delta");
    }
    req.order                = *config.order;
    req.settings.delta       = *config.delta;
    req.settings.horizon     = *config.horizon;
    req.settings.mode        = config.mode;
    req.settings.directions  = box_template(req.sys.dim());
    req.error_mode           = config.error_mode;
    req.reeval_times         = config.reeval_times;
    req.norm                 = config.norm;
    double previous = 0.0;
    for (double t : req.reeval_times) {
        if (!(t > previous) || !(t < req.settings.horizon)) {
            config_error("reeval_times", "must be strictly increasing inside (0, T)");
        }
        previous = t;
    }
    return req;
}

std::string format_table(std::span<const ReachSet> sets)
{
    std::string out = "t_lo,t_hi";
    const std::size_t n = sets.empty() ? 0 : sets.front().bounds.dim();
    for (std::size_t i = 1; i <= n; ++i) {
        out += ",lo_" + std::to_string(i) + ",hi_" + std::to_string(i);
    }
    out += '\n';
    for (const auto& set : sets) {
        out += format_double(set.t_lo);
        out += ',';
        out += format_double(set.t_hi);
        for (std::size_t i = 0; i < n; ++i) {
            const auto idx = static_cast<Eigen::Index>(i);
            out += ',';
            out += format_double(set.bounds.lower()[idx]);
            out += ',';
            out += format_double(set.bounds.upper()[idx]);
        }
        out += '\n';
    }
    return out;
}

RunResult run(const RunConfig& config)
{
    const auto start        = std::chrono::steady_clock::now();
    const ReachRequest req  = resolve(config);
    const std::filesystem::path out_dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        config_error("output_dir", "cannot create directory " + out_dir.string() + ": " + ec.message());
    }

    RunResult result;
    json& meta          = result.metadata;
    meta["config"]      = to_json(config);
    meta["model_id"]    = config.model;
    meta["state_dim"]   = req.sys.dim();
    meta["lifted_dim"]  = lifted_dimension(req.sys.dim(), req.order);
    meta["norm"]        = to_string(req.norm);
    meta["time_mode"]   = {{"name", to_string(req.settings.mode)},
                           {"note", req.settings.mode == TimeMode::dense
                                        ? "pairwise max of consecutive discrete support values; approximate"
                                        : "discrete recurrence Phi^k X0 assigned to [k delta, (k+1) delta]"}};
    meta["error_mode"]  = to_string(req.error_mode);

    try {
        result.model              = check_assumptions(req.sys, req.X0, req.order, req.norm);
        meta["error_model"]       = model_json(result.model);
        result.flowpipe           = reach(req);
    }
    catch (const Error& e) {
        meta["status"]  = to_string(e.kind());
        meta["message"] = e.what();
        write_file(out_dir / "metadata.json", meta.dump(2) + "\n");
        throw;
    }
    const EnlargedFlowpipe& fp = result.flowpipe;

    write_file(out_dir / "flowpipe.csv", format_table(fp.sets));
    write_file(out_dir / "raw_flowpipe.csv", format_table(fp.raw.sets));
    json segments = json::array();
    for (std::size_t s = 0; s < fp.segments.size(); ++s) {
        const Segment& seg = fp.segments[s];
        std::span<const ReachSet> slice(fp.sets.data() + seg.first_set, seg.set_count);
        write_file(out_dir / ("flowpipe_segment_" + std::to_string(s + 1) + ".csv"), format_table(slice));
        json entry = {{"t_start", seg.t_start},
                      {"t_end", seg.t_end},
                      {"sets", seg.set_count},
                      {"X0", {{"lower", vector_json(seg.X0.lower())}, {"upper", vector_json(seg.X0.upper())}}}};
        if (seg.model) {
            entry["error_model"] = model_json(*seg.model);
        }
        segments.push_back(entry);
    }
    std::string eps_table = "t_lo,t_hi,epsilon\n";
    for (std::size_t k = 0; k < fp.sets.size(); ++k) {
        eps_table += format_double(fp.sets[k].t_lo) + "," + format_double(fp.sets[k].t_hi) + "," +
                     format_double(fp.epsilons[k]) + "\n";
    }
    write_file(out_dir / "epsilon.csv", eps_table);

    if (config.simulate > 0) {
        std::mt19937_64 rng(config.seed);
        const double delta = req.settings.delta;
        const double h     = config.rk4_step.value_or(delta / 10.0);
        const double T     = std::min(req.settings.horizon, fp.t_end());
        auto starts        = sample_box(req.X0, config.simulate, rng);
        std::string table  = "trajectory,t";
        for (std::size_t i = 1; i <= req.sys.dim(); ++i) {
            table += ",x_" + std::to_string(i);
        }
        table += '\n';
        ContainmentReport summary;
        summary.min_margin   = std::numeric_limits<double>::infinity();
        std::size_t violated = 0;
        for (std::size_t j = 0; j < starts.size(); ++j) {
            Trajectory traj = simulate_rk4(req.sys, starts[j], T, h);
            ContainmentReport report = check_containment(traj, fp);
            summary.samples_checked += report.samples_checked;
            summary.min_margin = std::min(summary.min_margin, report.min_margin);
            if (!report.contained) {
                ++violated;
                if (!summary.first_violation) {
                    summary.first_violation = report.first_violation;
                }
            }
            for (std::size_t s = 0; s < traj.times.size(); ++s) {
                table += std::to_string(j + 1) + "," + format_double(traj.times[s]);
                for (Eigen::Index i = 0; i < traj.states[s].size(); ++i) {
                    table += "," + format_double(traj.states[s][i]);
                }
                table += '\n';
            }
        }
        summary.contained = violated == 0;
        write_file(out_dir / "trajectories.csv", table);
        json sim = {{"trajectories", starts.size()},
                    {"rk4_step", h},
                    {"violating_trajectories", violated},
                    {"samples_checked", summary.samples_checked},
                    {"min_margin", summary.min_margin}};
        if (summary.first_violation) {
            const auto& v          = *summary.first_violation;
            sim["first_violation"] = {{"time", v.time}, {"dim", v.dim + 1}, {"set", v.set}, {"margin", v.margin}};
        }
        meta["simulation"] = sim;
        result.containment = summary;
    }

    if (config.model == "logistic") {
        LogisticParams p;
        apply_params(config.params, config.model, {{"r", &p.r}, {"K", &p.K}});
        const double lo = req.X0.lower()[0];
        const double hi = req.X0.upper()[0];
        const double c  = req.X0.center()[0];
        std::string table = "t,x_center,x_lower,x_upper\n";
        for (std::size_t k = 0; k <= fp.sets.size(); ++k) {
            const double t = k < fp.sets.size() ? fp.sets[k].t_lo : fp.t_end();
            table += format_double(t) + "," + format_double(logistic_analytic(p, c, t)) + "," +
                     format_double(logistic_analytic(p, lo, t)) + "," + format_double(logistic_analytic(p, hi, t)) +
                     "\n";
        }
        write_file(out_dir / "analytic.csv", table);
    }

    meta["status"]      = "ok";
    meta["rows"]        = fp.sets.size();
    meta["segments"]    = segments;
    meta["diagnostics"] = fp.diagnostics;
    meta["timings"]     = {{"lift_s", fp.timings.lift_seconds},
                           {"expm_s", fp.timings.expm_seconds},
                           {"propagate_s", fp.timings.propagate_seconds},
                           {"reach_total_s", fp.timings.total_seconds},
                           {"wall_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    write_file(out_dir / "metadata.json", meta.dump(2) + "\n");
    return result;
}

} // namespace carleman::cli
