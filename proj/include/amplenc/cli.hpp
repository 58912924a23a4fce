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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "amplenc/data_model.hpp"

namespace amplenc::cli {

inline constexpr double kDefaultEpsilon = 1e-3;
inline constexpr std::uint64_t kDefaultTrials = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0;
inline constexpr unsigned kDefaultMaxN = 8;
inline constexpr unsigned kDefaultSweepBits = 5;

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kZeroSuccess = 3 };

enum class Command { kEncode, kSample, kResources, kAnalyze, kSweep };
enum class InputFormat { kAuto, kJson, kCsv };
enum class OutputFormat { kJson, kCsv };

struct RunConfig {
    Command command = Command::kEncode;
    std::string data_path;
    InputFormat input_format = InputFormat::kAuto;
    std::optional<unsigned> bits;
    double epsilon = kDefaultEpsilon;
    std::optional<double> R;
    std::uint64_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    Mode mode = Mode::kFaithful;
    bool resimulate = false;
    OutputFormat output_format = OutputFormat::kJson;
    std::string output_path;  // empty: stdout
    std::string dump_circuit_path;
    unsigned max_n = kDefaultMaxN;

    // sweep grid
    unsigned sweep_n_min = 2;
    unsigned sweep_n_max = 6;
    std::vector<double> sweep_epsilons{1e-2, 1e-3};
    std::vector<double> sweep_densities{1.0};
};

/// {"L": int, "values": [unsigned, ...]}
DataSet ingest_json(std::string_view text);
/// One unsigned integer per line; blank lines are skipped.
DataSet ingest_csv(std::string_view text, unsigned bits);
/// Reads `path`; kAuto picks CSV for a .csv extension and JSON otherwise.
DataSet ingest(const std::string& path, InputFormat format, std::optional<unsigned> bits);

/// Data for one sweep grid point: the first max(1, round(fill 2^n)) entries
/// hold 2^L - 1, the rest are zero.
DataSet sweep_data(unsigned n, unsigned bits, double fill);

struct SweepRow {
    unsigned n = 0;
    unsigned bits = 0;
    double rho = 0.0;
    double epsilon = 0.0;
    double p_success = 0.0;
    double expected_trials = 0.0;
    unsigned depth = 0;
    double time_model = 0.0;
};

std::vector<SweepRow> run_sweep(const RunConfig& config);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Report builders. Each returns the full document written by its command.
nlohmann::json encode_report(const RunConfig& config, const DataSet& data);
nlohmann::json sample_report(const RunConfig& config, const DataSet& data);
nlohmann::json resources_report(const RunConfig& config, const DataSet& data);
nlohmann::json analyze_report(const RunConfig& config, const DataSet& data);
nlohmann::json sweep_report(const RunConfig& config, const std::vector<SweepRow>& rows);

/// Entry point behind the `amplenc` executable. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amplenc::cli
