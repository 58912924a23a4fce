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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "amplenc/analysis.hpp"
#include "test_util.hpp"

using namespace amplenc;
using namespace amplenc::analysis;
using amplenc::testing::data_of;

TEST(Analysis, TargetState) {
    auto t = ideal_target_state(data_of({3, 1, 2, 0}, 2));
    const double s = std::sqrt(14.0);
    EXPECT_NEAR(t[0].real(), 3 / s, 1e-16);
    EXPECT_NEAR(t[2].real(), 2 / s, 1e-16);
    EXPECT_EQ(t[3], Complex(0.0));
    EXPECT_THROW(ideal_target_state(data_of({0, 0}, 1)), AllZeroDataError);
}

TEST(Analysis, OracleStateReferenceValues) {
    auto o = oracle_final_state(data_of({3, 1, 2, 0}, 2), 16.0);
    EXPECT_NEAR(o[0].real(), 0.800736134464675707, 1e-15);
    EXPECT_NEAR(o[1].real(), 0.268307661930426481, 1e-15);
    EXPECT_NEAR(o[2].real(), 0.535567588182851817, 1e-15);
    EXPECT_THROW(oracle_final_state(data_of({0, 0}, 1), 2.0), ZeroSuccessError);
}

TEST(Analysis, SuccessProbabilityReferenceValue) {
    EXPECT_NEAR(success_probability(data_of({3, 1, 2, 0}, 2), 16.0), 0.013547786143463983944603856311, 1e-17);
    EXPECT_EQ(success_probability(data_of({0, 0}, 1), 3.0), 0.0);
}

TEST(Analysis, RelativeError) {
    // mpmath: sin(0.1)/0.1 - 1
    EXPECT_NEAR(relative_error(1.0, 10.0), -0.00166583353171847693, 1e-16);
    EXPECT_EQ(relative_error(0.0, 10.0), 0.0);
    // small angles, where sin(x)/x - 1 cancels (mpmath, 40 digits)
    EXPECT_NEAR(relative_error(1e-4, 1.0), -1.666666665833333333531746e-9, 1e-24);
    EXPECT_NEAR(relative_error(0.0245, 1.0), -1.000386642090562122e-4, 1e-19);
    EXPECT_NEAR(relative_error(0.49999, 1.0), -0.0411472974367228027, 1e-17);
}

TEST(Analysis, RelativeErrorBoundedBySeriesTerm) {
    for (double x = 1e-4; x < 3.0; x *= 1.07) {
        double e = relative_error(x, 1.0);
        EXPECT_LE(e, 0.0);
        EXPECT_LE(std::abs(e), x * x / 6.0 * (1 + 1e-12)) << x;
    }
}

TEST(Analysis, MaxRelativeErrorWithinEpsilonUnderScaleRule) {
    std::mt19937_64 rng(8);
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-6}) {
        for (int i = 0; i < 50; i++) {
            auto d = amplenc::testing::random_data(rng, 1 + rng() % 5, 1 + rng() % 10);
            double R = choose_rotation_scale(d.c_max(), eps);
            EXPECT_LE(max_relative_error(d, R), eps);
        }
    }
}

TEST(Analysis, SuccessBoundAndDensity) {
    auto d = data_of({3, 1, 2, 0}, 2);
    EXPECT_NEAR(success_bound(d, 0.01), 0.0233333333333333333, 1e-16);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; i++) {
        auto r = amplenc::testing::random_data(rng, 1 + rng() % 5, 1 + rng() % 8);
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            double R = choose_rotation_scale(r.c_max(), eps);
            EXPECT_LE(success_probability(r, R), success_bound(r, eps) * (1 + 1e-12));
        }
    }
}

TEST(Analysis, SuccessDecreasesWithScaleBeyondQuarterTurn) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; i++) {
        auto d = amplenc::testing::random_data(rng, 1 + rng() % 4, 1 + rng() % 8);
        double R = 2.0 * static_cast<double>(d.c_max()) / M_PI;
        double prev = success_probability(d, R);
        for (int step = 0; step < 40; step++) {
            R *= 1.15;
            double p = success_probability(d, R);
            EXPECT_LT(p, prev);
            prev = p;
        }
    }
}

TEST(Analysis, TimeModel) {
    EXPECT_NEAR(time_model(8, 7.0 / 18.0, 0.01), 771.428571428571428, 1e-9);
    EXPECT_EQ(time_model(1, 0.5, 0.01), 0.0);
    EXPECT_THROW(time_model(0, 0.5, 0.01), InputError);
    EXPECT_THROW(time_model(2, 0.0, 0.01), InputError);
    EXPECT_THROW(time_model(2, 0.5, 0.0), InputError);
}

TEST(Analysis, NormEstimate) {
    auto d = data_of({3, 1, 2, 0}, 2);
    double est = estimate_norm_from_success(success_probability(d, 100.0), 2, 100.0);
    EXPECT_NEAR(est, 13.9967336862, 1e-9);

    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; i++) {
        auto r = amplenc::testing::random_data(rng, 1 + rng() % 5, 1 + rng() % 8);
        double eps = std::pow(10.0, -2.0 - static_cast<double>(rng() % 3));
        double R = choose_rotation_scale(r.c_max(), eps);
        double e = estimate_norm_from_success(success_probability(r, R), r.n(), R);
        EXPECT_LE(std::abs(e / r.sum_of_squares() - 1.0), 2 * eps);
    }
}

TEST(Analysis, FidelityAgainstTarget) {
    auto d = data_of({3, 1, 2, 0}, 2);
    double R = choose_rotation_scale(3, 0.01);
    auto o = oracle_final_state(d, R);
    EXPECT_NEAR(fidelity(o, ideal_target_state(d)), 0.99999040176754, 1e-12);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; i++) {
        auto r = amplenc::testing::random_data(rng, 1 + rng() % 5, 1 + rng() % 8);
        for (double eps : {1e-2, 1e-3}) {
            double Re = choose_rotation_scale(r.c_max(), eps);
            EXPECT_GE(fidelity(oracle_final_state(r, Re), ideal_target_state(r)), 1.0 - 10 * eps * eps);
        }
    }
    std::vector<Complex> a{1.0, 0.0}, b{0.0, 1.0, 0.0};
    EXPECT_THROW(fidelity(a, b), InputError);
}

TEST(Analysis, ReportBundle) {
    auto d = data_of({3, 1, 2, 0}, 2);
    auto r = analyze(d, 16.0, 0.01);
    EXPECT_NEAR(r.rho, 7.0 / 18.0, 1e-15);
    EXPECT_NEAR(r.p_success, 0.013547786143463984, 1e-17);
    EXPECT_NEAR(r.expected_trials, 1.0 / 0.013547786143463984, 1e-9);
    EXPECT_NEAR(r.time_model, 1.0 / (7.0 / 18.0 * 0.01), 1e-9);
}

TEST(Analysis, ExpectedTrialsScaleWithEpsilon) {
    // all-equal data at n = 4: p = sin^2(sqrt(6 eps)); mpmath ratio 9.8212198936779354
    auto d = data_of(std::vector<std::uint64_t>(16, 31), 5);
    double p2 = success_probability(d, choose_rotation_scale(31, 1e-2));
    double p3 = success_probability(d, choose_rotation_scale(31, 1e-3));
    EXPECT_NEAR(p2 / p3, 9.8212198936779354, 1e-12);
}
