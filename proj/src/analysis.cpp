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

#include "amplenc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace amplenc::analysis {

std::vector<Complex> ideal_target_state(const DataSet& data) {
    if (data.c_max() == 0) {
        throw AllZeroDataError();
    }
    const double norm = std::sqrt(data.sum_of_squares());
    std::vector<Complex> out;
    out.reserve(data.size());
    for (const auto& v : data.values()) out.emplace_back(static_cast<double>(v.raw()) / norm);
    return out;
}

std::vector<Complex> oracle_final_state(const DataSet& data, double R) {
    std::vector<double> sines;
    sines.reserve(data.size());
    double s2 = 0.0;
    for (const auto& v : data.values()) {
        double s = std::sin(static_cast<double>(v.raw()) / R);
        sines.push_back(s);
        s2 += s * s;
    }
    if (s2 < tol::kZeroSuccess) {
        throw ZeroSuccessError();
    }
    const double norm = std::sqrt(s2);
    std::vector<Complex> out;
    out.reserve(sines.size());
    for (double s : sines) out.emplace_back(s / norm);
    return out;
}

double success_probability(const DataSet& data, double R) {
    double s2 = 0.0;
    for (const auto& v : data.values()) {
        double s = std::sin(static_cast<double>(v.raw()) / R);
        s2 += s * s;
    }
    return s2 / static_cast<double>(data.size());
}

double relative_error(double c, double R) {
    if (c == 0.0) return 0.0;
    const double x = c / R;
    if (std::abs(x) >= 0.5) return std::sin(x) / x - 1.0;
    // sin(x)/x - 1 cancels badly for small x; sum the series instead.
    // Terms through x^14 leave a truncation error below 1e-15 relative.
    const double x2 = x * x;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 7; k++) {
        term *= -x2 / ((2 * k) * (2 * k + 1));
        sum += term;
    }
    return sum;
}

double max_relative_error(const DataSet& data, double R) {
    double worst = 0.0;
    for (const auto& v : data.values()) {
        worst = std::max(worst, std::abs(relative_error(static_cast<double>(v.raw()), R)));
    }
    return worst;
}

double success_bound(const DataSet& data, double epsilon) { return 6.0 * epsilon * density(data); }

double time_model(unsigned n, double rho, double epsilon) {
    if (n == 0 || !(rho > 0.0) || !(epsilon > 0.0)) {
        throw InputError("time model needs n >= 1, rho > 0 and epsilon > 0");
    }
    return std::log2(static_cast<double>(n)) / (rho * epsilon);
}

double estimate_norm_from_success(double p_hat, unsigned n, double R) {
    return p_hat * std::ldexp(1.0, static_cast<int>(n)) * R * R;
}

double fidelity(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw InputError("fidelity of states with different lengths");
    }
    Complex overlap{};
    for (std::size_t i = 0; i < a.size(); i++) overlap += std::conj(a[i]) * b[i];
    return std::norm(overlap);
}

EncodingReport analyze(const DataSet& data, double R, double epsilon) {
    EncodingReport r;
    r.target_state = ideal_target_state(data);
    r.p_success = success_probability(data, R);
    r.rho = density(data);
    r.epsilon_bound = epsilon;
    r.success_bound = success_bound(data, epsilon);
    r.max_relative_error = max_relative_error(data, R);
    r.expected_trials = r.p_success > 0.0 ? 1.0 / r.p_success : std::numeric_limits<double>::infinity();
    r.time_model = time_model(data.n(), r.rho, epsilon);
    r.oracle_state = oracle_final_state(data, R);
    r.fidelity_oracle_vs_target = fidelity(r.oracle_state, r.target_state);
    return r;
}

}  // namespace amplenc::analysis
