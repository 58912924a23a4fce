// Copyright 2026 The amplenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amplenc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "amplenc/analysis.hpp"
#include "amplenc/circuit.hpp"
#include "amplenc/compiler.hpp"
#include "amplenc/simulator.hpp"

namespace amplenc::cli {

using nlohmann::json;

namespace {

constexpr int kReportVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string mode_name(Mode m) { return m == Mode::kFaithful ? "faithful" : "oracle"; }

std::string command_name(Command c) {
    switch (c) {
        case Command::kEncode: return "encode";
        case Command::kSample: return "sample";
        case Command::kResources: return "resources";
        case Command::kAnalyze: return "analyze";
        case Command::kSweep: return "sweep";
    }
    return "?";
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json real_parts(const std::vector<Complex>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.real());
    return a;
}

double max_abs_imag(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c.imag()));
    return m;
}

// JSON has no infinity; an impossible success is written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json header(const RunConfig& config) {
    return {{"tool", "amplenc"},
            {"report_version", kReportVersion},
            {"command", command_name(config.command)},
            {"defaults",
             {{"epsilon", kDefaultEpsilon},
              {"trials", kDefaultTrials},
              {"seed", kDefaultSeed},
              {"max_n", kDefaultMaxN}}}};
}

json data_json(const DataSet& data) {
    return {{"L", data.bits()},
            {"n", data.n()},
            {"original_size", data.original_size()},
            {"c_max", data.c_max()},
            {"values", data.raw_values()}};
}

json params_json(const ProtocolParams& p) {
    return {{"R", p.R},
            {"R_source", p.R_auto ? "epsilon" : "explicit"},
            {"epsilon", p.epsilon},
            {"mode", mode_name(p.mode)},
            {"seed", p.seed}};
}

json resources_json(const ResourceReport& r) {
    return {{"quantum_qubits", r.quantum_qubits},
            {"extra_qubits", r.extra_qubits},
            {"classical_memory_bits", r.classical_memory_bits},
            {"gate_counts", r.gate_counts},
            {"simulation_gate_total", r.simulation_gate_total},
            {"query_model_gate_total", r.query_model_gate_total},
            {"depth_total", r.depth_total},
            {"compression_depth", r.compression_depth},
            {"compression_ancillas", r.compression_ancillas}};
}

json analysis_json(const analysis::EncodingReport& a) {
    return {{"p_success", a.p_success},
            {"rho", a.rho},
            {"epsilon", a.epsilon_bound},
            {"success_bound", a.success_bound},
            {"max_relative_error", a.max_relative_error},
            {"fidelity_oracle_vs_target", a.fidelity_oracle_vs_target},
            {"expected_trials", finite_or_null(a.expected_trials)},
            {"time_model", a.time_model}};
}

ProtocolParams params_for(const RunConfig& config, const DataSet& data) {
    auto p = resolve_params(data, config.epsilon, config.R);
    p.mode = config.mode;
    p.seed = config.seed;
    return p;
}

json warnings_for(const ProtocolParams& p, const DataSet& data) {
    json w = json::array();
    if (!p.R_auto && p.R < static_cast<double>(data.c_max())) {
        w.push_back("R = " + fmt_double(p.R) + " is below c_max = " + std::to_string(data.c_max()) +
                    "; large values wrap around and are suppressed");
    }
    if (!p.R_auto && data.c_max() > 0) {
        double err = analysis::max_relative_error(data, p.R);
        if (err > p.epsilon) {
            w.push_back("R = " + fmt_double(p.R) + " gives max relative error " + fmt_double(err) +
                        " above epsilon = " + fmt_double(p.epsilon) + "; success_bound assumes R chosen from epsilon");
        }
    }
    return w;
}

void check_width(const RunConfig& config, unsigned n) {
    if (n > config.max_n) {
        throw InputError("n = " + std::to_string(n) + " exceeds the maximum " + std::to_string(config.max_n) +
                         " (raise --max-n)");
    }
}

void dump_circuit(const RunConfig& config, const CompiledProtocol& protocol) {
    if (config.dump_circuit_path.empty()) return;
    std::ofstream out(config.dump_circuit_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + config.dump_circuit_path + "'");
    write_circuit(out, protocol.circuit);
}

}  // namespace

DataSet ingest_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("L") || !doc.contains("values")) {
        throw InputError("JSON data must be an object with \"L\" and \"values\"");
    }
    if (!doc["L"].is_number_unsigned()) {
        throw InputError("\"L\" must be a positive integer");
    }
    const auto& vals = doc["values"];
    if (!vals.is_array()) {
        throw InputError("\"values\" must be an array");
    }
    std::vector<std::uint64_t> values;
    values.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); i++) {
        if (!vals[i].is_number_unsigned()) {
            throw InputError("value at index " + std::to_string(i) + " is not an unsigned integer");
        }
        values.push_back(vals[i].get<std::uint64_t>());
    }
    return pad_to_power_of_two(values, doc["L"].get<unsigned>());
}

DataSet ingest_csv(std::string_view text, unsigned bits) {
    std::vector<std::uint64_t> values;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        lineno++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() || p != line.data() + line.size()) {
            throw InputError("CSV line " + std::to_string(lineno) + ": '" + std::string(line) +
                             "' is not an unsigned integer");
        }
        values.push_back(v);
    }
    return pad_to_power_of_two(values, bits);
}

DataSet ingest(const std::string& path, InputFormat format, std::optional<unsigned> bits) {
    if (format == InputFormat::kAuto) {
        bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
        format = csv ? InputFormat::kCsv : InputFormat::kJson;
    }
    auto text = read_file(path);
    if (format == InputFormat::kCsv) {
        if (!bits) throw InputError("CSV input needs --L");
        return ingest_csv(text, *bits);
    }
    auto data = ingest_json(text);
    if (bits && *bits != data.bits()) {
        throw InputError("--L " + std::to_string(*bits) + " disagrees with the file's L = " +
                         std::to_string(data.bits()));
    }
    return data;
}

DataSet sweep_data(unsigned n, unsigned bits, double fill) {
    if (!(fill > 0.0 && fill <= 1.0)) {
        throw InputError("sweep density must lie in (0, 1]");
    }
    const Index size = Index{1} << n;
    const Index filled = std::max<Index>(1, static_cast<Index>(std::llround(fill * static_cast<double>(size))));
    const std::uint64_t top = (std::uint64_t{1} << bits) - 1;
    std::vector<std::uint64_t> values(size, 0);
    std::fill_n(values.begin(), std::min(filled, size), top);
    return pad_to_power_of_two(values, bits);
}

json encode_report(const RunConfig& config, const DataSet& data) {
    auto params = params_for(config, data);
    json doc = header(config);
    doc["params"] = params_json(params);
    doc["data"] = data_json(data);
    doc["warnings"] = warnings_for(params, data);

    if (params.mode == Mode::kFaithful) check_width(config, data.n());
    auto a = analysis::analyze(data, params.R, params.epsilon);
    doc["analysis"] = analysis_json(a);
    doc["target_state"] = real_parts(a.target_state);
    doc["oracle_state"] = real_parts(a.oracle_state);

    auto protocol = compile(data, params);
    dump_circuit(config, protocol);
    doc["resources"] = resources_json(resource_report(protocol.circuit, data));

    if (params.mode == Mode::kOracle) {
        doc["prepared"] = nullptr;
        return doc;
    }
    auto post = measure_flag_postselect(run(protocol));
    double max_dev = 0.0;
    for (std::size_t k = 0; k < post.cpu_state.size(); k++) {
        max_dev = std::max(max_dev, std::abs(post.cpu_state[k] - a.oracle_state[k]));
    }
    double p_dev = std::abs(post.p_success - a.p_success);
    doc["prepared"] = {{"p_success", post.p_success},
                       {"ancilla_leakage", post.leakage},
                       {"amplitudes", real_parts(post.cpu_state)},
                       {"max_abs_imag", max_abs_imag(post.cpu_state)},
                       {"fidelity_vs_target", analysis::fidelity(post.cpu_state, a.target_state)},
                       {"fidelity_vs_oracle", analysis::fidelity(post.cpu_state, a.oracle_state)},
                       {"max_deviation_vs_oracle", max_dev},
                       {"p_success_deviation", p_dev}};
    doc["checks"] = {{"oracle_match", max_dev < tol::kOracle},
                     {"p_success_match", p_dev < tol::kOracle},
                     {"tolerance", tol::kOracle}};
    return doc;
}

json sample_report(const RunConfig& config, const DataSet& data) {
    auto params = params_for(config, data);
    json doc = header(config);
    doc["params"] = params_json(params);
    doc["params"]["trials"] = config.trials;
    doc["params"]["resimulate"] = config.resimulate;
    doc["data"] = data_json(data);
    doc["warnings"] = warnings_for(params, data);

    const double p_analytic = analysis::success_probability(data, params.R);
    double p_used = p_analytic;
    TrialStats stats;
    if (params.mode == Mode::kFaithful) {
        check_width(config, data.n());
        auto protocol = compile(data, params);
        dump_circuit(config, protocol);
        p_used = run(protocol).flag_one_weight();
        stats = sample_trials(protocol, config.trials, config.seed, {Backend::kParallel, config.resimulate});
    } else {
        stats = sample_with_probability(p_analytic, config.trials, config.seed);
    }
    const double sigma = std::sqrt(p_used * (1.0 - p_used) / static_cast<double>(stats.trials));
    doc["p_success"] = p_used;
    doc["p_success_analytic"] = p_analytic;
    doc["trials"] = {{"trials", stats.trials},
                     {"successes", stats.successes},
                     {"empirical_p", stats.empirical_p},
                     {"expected_trials", finite_or_null(stats.expected_trials)},
                     {"seed", stats.seed},
                     {"three_sigma", 3.0 * sigma},
                     {"within_three_sigma", std::abs(stats.empirical_p - p_used) <= 3.0 * sigma}};
    return doc;
}

json resources_report(const RunConfig& config, const DataSet& data) {
    auto params = params_for(config, data);
    json doc = header(config);
    doc["params"] = params_json(params);
    doc["data"] = data_json(data);
    auto protocol = compile(data, params);
    dump_circuit(config, protocol);
    doc["resources"] = resources_json(resource_report(protocol.circuit, data));
    doc["resources"]["compression_depth_formula"] = data.n() >= 2 ? ceil_log2(data.n()) : 0U;
    return doc;
}

json analyze_report(const RunConfig& config, const DataSet& data) {
    auto params = params_for(config, data);
    json doc = header(config);
    doc["params"] = params_json(params);
    doc["data"] = data_json(data);
    doc["warnings"] = warnings_for(params, data);
    auto a = analysis::analyze(data, params.R, params.epsilon);
    doc["analysis"] = analysis_json(a);
    doc["analysis"]["sum_of_squares"] = data.sum_of_squares();
    doc["analysis"]["norm_estimate"] = analysis::estimate_norm_from_success(a.p_success, data.n(), params.R);
    doc["target_state"] = real_parts(a.target_state);
    doc["oracle_state"] = real_parts(a.oracle_state);
    return doc;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
    struct Point {
        unsigned n;
        double fill;
        double epsilon;
    };
    std::vector<Point> grid;
    std::optional<DataSet> fixed;
    if (!config.data_path.empty()) {
        fixed = ingest(config.data_path, config.input_format, config.bits);
        check_width(config, fixed->n());
        for (double e : config.sweep_epsilons) grid.push_back({fixed->n(), 1.0, e});
    } else {
        if (config.sweep_n_min < 1 || config.sweep_n_min > config.sweep_n_max) {
            throw InputError("sweep needs 1 <= n-min <= n-max");
        }
        check_width(config, config.sweep_n_max);
        if (config.sweep_epsilons.empty() || config.sweep_densities.empty()) {
            throw InputError("sweep ranges must be nonempty");
        }
        for (unsigned n = config.sweep_n_min; n <= config.sweep_n_max; n++) {
            for (double f : config.sweep_densities) {
                for (double e : config.sweep_epsilons) grid.push_back({n, f, e});
            }
        }
    }
    const unsigned bits = config.bits.value_or(kDefaultSweepBits);
    // Validate every grid point up front so worker threads never throw.
    std::vector<DataSet> datasets;
    std::vector<ProtocolParams> params;
    for (const auto& pt : grid) {
        datasets.push_back(fixed ? *fixed : sweep_data(pt.n, bits, pt.fill));
        auto p = resolve_params(datasets.back(), pt.epsilon, config.R);
        p.mode = config.mode;
        params.push_back(p);
    }

    std::vector<SweepRow> rows(grid.size());
    const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; i++) {
        const auto& data = datasets[i];
        const auto& p = params[i];
        auto protocol = compile(data, p);
        SweepRow row;
        row.n = data.n();
        row.bits = data.bits();
        row.rho = density(data);
        row.epsilon = p.epsilon;
        row.p_success = p.mode == Mode::kFaithful ? run(protocol).flag_one_weight()
                                                  : analysis::success_probability(data, p.R);
        row.expected_trials = row.p_success > 0.0 ? 1.0 / row.p_success : std::numeric_limits<double>::infinity();
        row.depth = depth(protocol.circuit);
        row.time_model = analysis::time_model(row.n, row.rho, row.epsilon);
        rows[i] = row;
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,L,rho,epsilon,p_success,expected_trials,depth,time_model\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.bits) + "," + fmt_double(r.rho) + "," +
               fmt_double(r.epsilon) + "," + fmt_double(r.p_success) + "," + fmt_double(r.expected_trials) + "," +
               std::to_string(r.depth) + "," + fmt_double(r.time_model) + "\n";
    }
    return out;
}

json sweep_report(const RunConfig& config, const std::vector<SweepRow>& rows) {
    json doc = header(config);
    doc["params"] = {{"mode", mode_name(config.mode)}};
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"L", r.bits},
                       {"rho", r.rho},
                       {"epsilon", r.epsilon},
                       {"p_success", r.p_success},
                       {"expected_trials", finite_or_null(r.expected_trials)},
                       {"depth", r.depth},
                       {"time_model", r.time_model}});
    }
    doc["rows"] = arr;
    return doc;
}

namespace {

std::string amplitude_csv(const json& doc) {
    std::string out = "k,c_k,target,oracle,prepared\n";
    const auto& values = doc["data"]["values"];
    for (std::size_t k = 0; k < values.size(); k++) {
        out += std::to_string(k) + "," + std::to_string(values[k].get<std::uint64_t>()) + "," +
               fmt_double(doc["target_state"][k].get<double>()) + "," +
               fmt_double(doc["oracle_state"][k].get<double>()) + ",";
        if (!doc["prepared"].is_null()) out += fmt_double(doc["prepared"]["amplitudes"][k].get<double>());
        out += "\n";
    }
    return out;
}

// Flat key,value listing of scalar fields for the non-tabular commands.
void flatten(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (!j.is_array()) {
        out += prefix + "," + (j.is_number_float() ? fmt_double(j.get<double>()) : j.dump()) + "\n";
    }
}

std::string render(const RunConfig& config, const json& doc) {
    if (config.output_format == OutputFormat::kJson) return doc.dump(2) + "\n";
    if (config.command == Command::kEncode || config.command == Command::kAnalyze) return amplitude_csv(doc);
    std::string out = "key,value\n";
    flatten(doc, "", out);
    return out;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(config.output_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + config.output_path + "'");
    f << text;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_data) {
    auto* data = sub->add_option("--data", cfg.data_path, "Input data file (.json or .csv)");
    if (needs_data) data->required();
    sub->add_option("--input-format", cfg.input_format, "Input format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, InputFormat>{
                {"auto", InputFormat::kAuto}, {"json", InputFormat::kJson}, {"csv", InputFormat::kCsv}},
            CLI::ignore_case).description(""))
        ->type_name("{auto,json,csv}");
    sub->add_option("--L", cfg.bits, "Value bit width (required for CSV input)");
    sub->add_option("--epsilon", cfg.epsilon, "Maximum relative amplitude error")->capture_default_str();
    sub->add_option("--R", cfg.R, "Explicit rotation scale; otherwise chosen from epsilon");
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "faithful: gate-level simulation; oracle: analytic only")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Mode>{{"faithful", Mode::kFaithful}, {"oracle", Mode::kOracle}}, CLI::ignore_case)
                       .description(""))
        ->type_name("{faithful,oracle}");
    sub->add_option("--format", cfg.output_format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}},
            CLI::ignore_case).description(""))
        ->type_name("{json,csv}");
    sub->add_option("--output,-o", cfg.output_path, "Output file (default: stdout)");
    sub->add_option("--dump-circuit", cfg.dump_circuit_path, "Write the compiled circuit in text form");
    sub->add_option("--max-n", cfg.max_n, "Largest CPU width to simulate")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"amplenc: amplitude encoding by partial-CNOT rotations and flag post-selection"};
    app.require_subcommand(1);

    auto* encode = app.add_subcommand("encode", "Compile, simulate, post-select and compare with the oracles");
    add_common(encode, cfg, true);
    auto* sample = app.add_subcommand("sample", "Repeat-until-success Monte Carlo on the flag measurement");
    add_common(sample, cfg, true);
    sample->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_flag("--resimulate", cfg.resimulate, "Re-run the full circuit for every trial");
    auto* resources = app.add_subcommand("resources", "Qubit, gate and depth counts of the compiled circuit");
    add_common(resources, cfg, true);
    auto* analyze = app.add_subcommand("analyze", "Analytic predictions only");
    add_common(analyze, cfg, true);
    auto* sweep = app.add_subcommand("sweep", "Scaling table over n, epsilon and data density");
    add_common(sweep, cfg, false);
    sweep->add_option("--n-min", cfg.sweep_n_min, "Smallest n")->capture_default_str();
    sweep->add_option("--n-max", cfg.sweep_n_max, "Largest n")->capture_default_str();
    sweep->add_option("--epsilons", cfg.sweep_epsilons, "Comma-separated epsilon values")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--densities", cfg.sweep_densities, "Comma-separated fill fractions in (0, 1]")
        ->delimiter(',')
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    if (encode->parsed()) cfg.command = Command::kEncode;
    if (sample->parsed()) cfg.command = Command::kSample;
    if (resources->parsed()) cfg.command = Command::kResources;
    if (analyze->parsed()) cfg.command = Command::kAnalyze;
    if (sweep->parsed()) cfg.command = Command::kSweep;

    try {
        if (cfg.command == Command::kSweep) {
            auto rows = run_sweep(cfg);
            emit(cfg, cfg.output_format == OutputFormat::kCsv ? sweep_csv(rows) : sweep_report(cfg, rows).dump(2) + "\n",
                 out);
            return kOk;
        }
        auto data = ingest(cfg.data_path, cfg.input_format, cfg.bits);
        json doc;
        switch (cfg.command) {
            case Command::kEncode: doc = encode_report(cfg, data); break;
            case Command::kSample: doc = sample_report(cfg, data); break;
            case Command::kResources: doc = resources_report(cfg, data); break;
            case Command::kAnalyze: doc = analyze_report(cfg, data); break;
            case Command::kSweep: break;
        }
        if (doc.contains("warnings")) {
            for (const auto& w : doc["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
        }
        emit(cfg, render(cfg, doc), out);
        if (doc.contains("checks") && !(doc["checks"]["oracle_match"].get<bool>() &&
                                        doc["checks"]["p_success_match"].get<bool>())) {
            err << "error: simulated state disagrees with the analytic oracle\n";
            return kInternal;
        }
        return kOk;
    } catch (const AllZeroDataError& e) {
        err << "error: " << e.what() << "\n";
        return kZeroSuccess;
    } catch (const ZeroSuccessError& e) {
        err << "error: " << e.what() << "\n";
        return kZeroSuccess;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace amplenc::cli
