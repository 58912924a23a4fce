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

#include <span>
#include <vector>

#include "amplenc/common.hpp"
#include "amplenc/data_model.hpp"

// Closed-form predictions for the encoding protocol. Everything uses the exact
// sine, never its series, so the formulas hold when c_k / R wraps past pi.
namespace amplenc::analysis {

/// c_k / sqrt(sum c_j^2). Throws AllZeroDataError.
std::vector<Complex> ideal_target_state(const DataSet& data);

/// sin(c_k/R) / sqrt(sum sin^2(c_j/R)). Throws ZeroSuccessError when every
/// sine vanishes.
std::vector<Complex> oracle_final_state(const DataSet& data, double R);

/// (1/2^n) sum_k sin^2(c_k/R).
double success_probability(const DataSet& data, double R);

/// sin(x)/x - 1 with x = c/R; 0 for c = 0.
double relative_error(double c, double R);

/// Largest |relative_error| over the data set.
double max_relative_error(const DataSet& data, double R);

/// 6 epsilon rho: the success probability ceiling at the optimal R.
double success_bound(const DataSet& data, double epsilon);

/// log2(n) / (rho epsilon), a dimensionless model index (zero for n = 1).
double time_model(unsigned n, double rho, double epsilon);

/// p_hat 2^n R^2: small-angle inversion of the success probability.
double estimate_norm_from_success(double p_hat, unsigned n, double R);

/// |<a|b>|^2. Throws InputError on a length mismatch.
double fidelity(std::span<const Complex> a, std::span<const Complex> b);

struct EncodingReport {
    std::vector<Complex> target_state;
    std::vector<Complex> oracle_state;
    double p_success = 0.0;
    double rho = 0.0;
    double epsilon_bound = 0.0;
    double success_bound = 0.0;
    double max_relative_error = 0.0;
    double fidelity_oracle_vs_target = 0.0;
    double expected_trials = 0.0;
    double time_model = 0.0;
};

/// All analytic quantities for one instance at scale R and error budget epsilon.
EncodingReport analyze(const DataSet& data, double R, double epsilon);

}  // namespace amplenc::analysis
