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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "amplenc/compiler.hpp"
#include "amplenc/kernels.hpp"
#include "amplenc/simulator.hpp"
#include "test_util.hpp"

using namespace amplenc;
using amplenc::testing::data_of;

namespace {

std::size_t count_kind(std::span<const Gate> gates, GateKind kind) {
    return std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind == kind; });
}

ProtocolParams with_R(double R) {
    ProtocolParams p;
    p.R = R;
    return p;
}

}  // namespace

TEST(Initializer, HadamardOnEveryCpuQubit) {
    auto g1 = build_initializer(layout_for(1));
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0], Gate::h(0));

    auto g3 = build_initializer(layout_for(3));
    EXPECT_EQ(g3.size(), 3u);
    EXPECT_EQ(count_kind(g3, GateKind::kH), 3u);
    EXPECT_EQ(depth(build_initializer(layout_for(2))), 1u);
}

TEST(Initializer, PreparesUniformSuperposition) {
    for (unsigned n = 1; n <= 3; n++) {
        auto layout = layout_for(n);
        auto mem = build_memory(data_of(std::vector<std::uint64_t>(Index{1} << n, 1), 1));
        StateVector s(layout);
        run_gates(s, build_initializer(layout), mem);
        const double a = std::pow(2.0, -0.5 * n);
        for (Index k = 0; k < (Index{1} << n); k++) EXPECT_NEAR(s[layout.cpu_index(k)].real(), a, 1e-15);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
    }
}

TEST(MatchCompute, GateShape) {
    auto l4 = layout_for(4);
    auto g = build_match_compute(5, l4);
    EXPECT_EQ(count_kind(g, GateKind::kCX), 4u);
    EXPECT_EQ(count_kind(g, GateKind::kX), 4u);
    EXPECT_EQ(count_kind(g, GateKind::kCCX), 3u);
    std::vector<Gate> tree(g.end() - 3, g.end());
    EXPECT_EQ(depth(tree), 2u);
    for (const auto& x : g) {
        if (x.kind == GateKind::kX) {
            ASSERT_TRUE(x.condition);
            EXPECT_EQ(x.condition->reg, 5u);
            EXPECT_EQ(x.condition->role, BitRole::kIndex);
            EXPECT_FALSE(x.condition->required);
        }
    }

    auto l1 = layout_for(1);
    auto g1 = build_match_compute(0, l1);
    EXPECT_EQ(count_kind(g1, GateKind::kCCX), 0u);
    EXPECT_EQ(match_qubit(l1), l1.parity(0));
}

TEST(MatchCompute, MatchQubitIsOneExactlyOnMatchingBasisState) {
    for (unsigned n = 1; n <= 3; n++) {
        auto layout = layout_for(n);
        const Index N = Index{1} << n;
        auto mem = build_memory(data_of(std::vector<std::uint64_t>(N, 0), 1));
        for (Index k = 0; k < N; k++) {
            auto gates = build_match_compute(k, layout);
            for (Index j = 0; j < N; j++) {
                StateVector s(layout);
                s.set_basis_state(layout.cpu_index(j));
                run_gates(s, gates, mem);
                Index match_bit = Index{1} << match_qubit(layout);
                double w = kernels::serial::masked_weight(s.amplitudes(), match_bit, match_bit);
                EXPECT_NEAR(w, j == k ? 1.0 : 0.0, 1e-15) << "n=" << n << " k=" << k << " cpu=" << j;
            }
        }
    }
}

TEST(MatchUncompute, MirrorOfCompute) {
    auto layout = layout_for(3);
    auto fwd = build_match_compute(6, layout);
    auto back = build_match_uncompute(6, layout);
    ASSERT_EQ(fwd.size(), back.size());
    EXPECT_TRUE(std::equal(fwd.begin(), fwd.end(), back.rbegin()));
}

TEST(MatchUncompute, ComputeThenUncomputeIsIdentity) {
    std::mt19937_64 rng(31);
    for (unsigned n = 1; n <= 4; n++) {
        auto layout = layout_for(n);
        const Index N = Index{1} << n;
        auto mem = build_memory(data_of(std::vector<std::uint64_t>(N, 0), 1));
        // random normalized input state on all qubits
        StateVector s(layout);
        std::normal_distribution<double> g;
        double norm = 0;
        for (auto& a : s.amplitudes()) {
            a = Complex(g(rng), g(rng));
            norm += std::norm(a);
        }
        for (auto& a : s.amplitudes()) a /= std::sqrt(norm);
        std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
        Index k = rng() % N;
        run_gates(s, build_match_compute(k, layout), mem);
        run_gates(s, build_match_uncompute(k, layout), mem);
        for (Index i = 0; i < before.size(); i++) ASSERT_EQ(s[i], before[i]) << "n=" << n;
    }
}

TEST(ControlledRotations, Angles) {
    EXPECT_DOUBLE_EQ(bit_rotation_angle(5, 0, 16.0), 2.0);
    auto layout = layout_for(1);
    auto zero = build_controlled_rotations(1, data_of({5, 0}, 5), with_R(20.0), layout);
    EXPECT_TRUE(zero.empty());

    auto d = data_of({5, 0}, 5);
    auto rot = build_controlled_rotations(0, d, with_R(20.0), layout);
    ASSERT_EQ(rot.size(), 2u);
    EXPECT_DOUBLE_EQ(rot[0].angle, 8.0 / 20.0);
    EXPECT_DOUBLE_EQ(rot[1].angle, 2.0 / 20.0);
    EXPECT_EQ(rot[0].condition, (ClassicalCondition{0, BitRole::kValue, 2, true}));
    EXPECT_EQ(rot[1].condition, (ClassicalCondition{0, BitRole::kValue, 4, true}));
    EXPECT_EQ(rot[0].controls, (std::vector<QubitId>{match_qubit(layout)}));
    EXPECT_EQ(rot[0].target, layout.flag());
    EXPECT_NEAR(rot[0].angle + rot[1].angle, 0.5, 1e-15);
}

TEST(AngleTable, TotalIsTwiceValueOverR) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; trial++) {
        unsigned L = 1 + rng() % 12;
        auto d = amplenc::testing::random_data(rng, 1 + rng() % 4, L);
        double R = 0.5 + (rng() % 10000) / 7.0;
        AngleTable t(d, R);
        for (Index k = 0; k < d.size(); k++) {
            EXPECT_NEAR(t.total(k), 2.0 * static_cast<double>(d.raw(k)) / R, 1e-12 * (1 + t.total(k)));
        }
    }
}

TEST(Compile, GateCountsOnSmallInstances) {
    auto d1 = data_of({1, 1}, 1);
    auto p1 = compile(d1, with_R(4.0));
    // 1 H + 2 x (match: CX + X, one CRY, unmatch: X + CX)
    EXPECT_EQ(p1.circuit.size(), 11u);
    EXPECT_EQ(p1.blocks.size(), 2u);
    EXPECT_EQ(p1.init_end, 1u);
    EXPECT_EQ(p1.circuit.measured(), std::optional<QubitId>(layout_for(1).flag()));

    auto d2 = data_of({3, 1, 2, 0}, 2);
    auto p2 = compile(d2, with_R(16.0));
    const auto& b3 = p2.blocks[3];
    std::span<const Gate> block3(p2.circuit.gates().begin() + b3.begin, p2.circuit.gates().begin() + b3.end);
    EXPECT_EQ(count_kind(block3, GateKind::kCRY), 0u);
}

TEST(Compile, RejectsBadScaleAndOrder) {
    auto d = data_of({3, 1, 2, 0}, 2);
    EXPECT_THROW(compile(d, with_R(0.0)), InputError);
    std::vector<Index> order{0, 1, 1, 3};
    EXPECT_THROW(compile_with_order(d, with_R(4.0), order), InputError);
}

TEST(MultiControlled, FourControls) {
    std::vector<QubitId> c{0, 1, 2, 3}, anc{4, 5, 6};
    auto g = build_multi_controlled(c, Gate::ry(7, 0.3), anc);
    ASSERT_EQ(g.size(), 7u);
    EXPECT_EQ(g[0], Gate::ccx(0, 1, 4));
    EXPECT_EQ(g[1], Gate::ccx(2, 3, 5));
    EXPECT_EQ(g[2], Gate::ccx(4, 5, 6));
    EXPECT_EQ(g[3], Gate::cry(6, 7, 0.3));
    EXPECT_EQ(g[4], g[2]);
    EXPECT_EQ(g[5], g[1]);
    EXPECT_EQ(g[6], g[0]);
}

TEST(MultiControlled, OneAndTwoControls) {
    std::vector<QubitId> one{0}, none;
    auto g1 = build_multi_controlled(one, Gate::x(1), none);
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0], Gate::cx(0, 1));

    std::vector<QubitId> two{0, 1}, anc{2};
    auto g2 = build_multi_controlled(two, Gate::x(3), anc);
    ASSERT_EQ(g2.size(), 3u);
    EXPECT_EQ(g2[0], Gate::ccx(0, 1, 2));
    EXPECT_EQ(g2[1], Gate::cx(2, 3));
}

TEST(MultiControlled, InsufficientAncillas) {
    std::vector<QubitId> c{0, 1, 2, 3}, anc{4, 5};
    EXPECT_THROW(build_multi_controlled(c, Gate::x(7), anc), ConfigurationError);
    EXPECT_THROW(build_multi_controlled(c, Gate::h(7), std::vector<QubitId>{4, 5, 6}), ConfigurationError);
}

TEST(MultiControlled, ActsOnlyWhenAllControlsSet) {
    // K = 5 controls on qubits 0..4, ancillas 5..8, target 9
    std::vector<QubitId> c{0, 1, 2, 3, 4}, anc{5, 6, 7, 8};
    auto gates = build_multi_controlled(c, Gate::x(9), anc);
    auto mem = build_memory(data_of({0, 0}, 1));
    for (Index in = 0; in < 32; in++) {
        std::vector<Complex> amps(Index{1} << 10);
        amps[in] = 1.0;
        for (const auto& g : gates) amplenc::testing::naive_apply(amps, g, mem);
        Index expect = in == 31 ? (in | (Index{1} << 9)) : in;
        EXPECT_EQ(amps[expect], Complex(1.0)) << in;
    }
}
