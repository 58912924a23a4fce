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

#include "amplenc/data_model.hpp"
#include "test_util.hpp"

using namespace amplenc;
using amplenc::testing::data_of;

namespace {

std::vector<std::uint8_t> bits_of(const char* s) {
    std::vector<std::uint8_t> out;
    for (; *s; s++) out.push_back(*s == '1');
    return out;
}

}  // namespace

TEST(EncodeValue, BinaryExpansionMsbFirst) {
    EXPECT_EQ(encode_value(5, 5).bit_string(), bits_of("00101"));
    EXPECT_EQ(encode_value(0, 3).bit_string(), bits_of("000"));
    EXPECT_EQ(encode_value(31, 5).bit_string(), bits_of("11111"));
}

TEST(EncodeValue, BitWeights) {
    auto v = encode_value(0b10110, 5);
    std::uint64_t sum = 0;
    for (unsigned l = 0; l < 5; l++) sum += std::uint64_t{v.bit(l)} << (5 - 1 - l);
    EXPECT_EQ(sum, 0b10110u);
}

TEST(EncodeValue, OutOfRangeRejected) {
    EXPECT_THROW(encode_value(32, 5), InputError);
    EXPECT_THROW(encode_value(1, 0), InputError);
    EXPECT_THROW(encode_value(1, kMaxValueBits + 1), InputError);
}

TEST(EncodeValue, RoundTripExhaustiveSmallWidths) {
    for (unsigned L = 1; L <= 10; L++) {
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << L); c++) {
            ASSERT_EQ(decode_value(encode_value(c, L).bit_string()), c) << "L=" << L;
        }
    }
}

TEST(EncodeValue, RoundTripSampledWideWidths) {
    std::mt19937_64 rng(7);
    for (unsigned L = 11; L <= 16; L++) {
        std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << L) - 1);
        for (int i = 0; i < 2000; i++) {
            auto c = d(rng);
            ASSERT_EQ(decode_value(encode_value(c, L).bit_string()), c);
        }
    }
}

TEST(PadToPowerOfTwo, Examples) {
    auto a = data_of({3, 1, 2}, 2);
    EXPECT_EQ(a.raw_values(), (std::vector<std::uint64_t>{3, 1, 2, 0}));
    EXPECT_EQ(a.n(), 2u);
    EXPECT_EQ(a.original_size(), 3u);

    auto b = data_of({5}, 3);
    EXPECT_EQ(b.raw_values(), (std::vector<std::uint64_t>{5, 0}));
    EXPECT_EQ(b.n(), 1u);

    auto c = data_of({1, 2, 3, 4}, 3);
    EXPECT_EQ(c.raw_values(), (std::vector<std::uint64_t>{1, 2, 3, 4}));
    EXPECT_EQ(c.n(), 2u);
}

TEST(PadToPowerOfTwo, Errors) {
    std::vector<std::uint64_t> empty;
    EXPECT_THROW(pad_to_power_of_two(empty, 3), InputError);
    std::vector<std::uint64_t> big{1, 32};
    EXPECT_THROW(pad_to_power_of_two(big, 5), InputError);
}

TEST(PadToPowerOfTwo, CeilLog2Width) {
    EXPECT_EQ(cpu_width_for(1), 1u);
    EXPECT_EQ(cpu_width_for(2), 1u);
    EXPECT_EQ(cpu_width_for(3), 2u);
    EXPECT_EQ(cpu_width_for(4), 2u);
    EXPECT_EQ(cpu_width_for(5), 3u);
    EXPECT_EQ(cpu_width_for(256), 8u);
    EXPECT_EQ(cpu_width_for(257), 9u);
}

TEST(PadToPowerOfTwo, PaddingPreservesMaxAndSumOfSquares) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t len = 1 + rng() % 37;
        std::vector<std::uint64_t> v(len);
        std::uint64_t cmax = 0;
        double s2 = 0;
        for (auto& x : v) {
            x = rng() % 256;
            cmax = std::max(cmax, x);
            s2 += double(x) * double(x);
        }
        auto d = pad_to_power_of_two(v, 8);
        EXPECT_EQ(d.c_max(), cmax);
        EXPECT_EQ(d.sum_of_squares(), s2);
        EXPECT_EQ(d.size(), Index{1} << d.n());
        for (std::size_t k = 0; k < len; k++) EXPECT_EQ(d.raw(k), v[k]);
    }
}

TEST(BuildMemory, FourRegistersFiveValueBits) {
    auto mem = build_memory(data_of({17, 4, 0, 31}, 5));
    ASSERT_EQ(mem.size(), 4u);
    EXPECT_EQ(mem.index_width(), 2u);
    EXPECT_EQ(mem.value_width(), 5u);
    EXPECT_EQ(mem.total_bits(), 4u * 7u);
    EXPECT_EQ(mem.registers()[0].index_bits, bits_of("00"));
    EXPECT_EQ(mem.registers()[1].index_bits, bits_of("01"));
    EXPECT_EQ(mem.registers()[2].index_bits, bits_of("10"));
    EXPECT_EQ(mem.registers()[3].index_bits, bits_of("11"));
    EXPECT_EQ(mem.registers()[0].value_bits, bits_of("10001"));
    EXPECT_EQ(mem.registers()[3].value_bits, bits_of("11111"));
}

TEST(BuildMemory, ZeroPaddedRegister) {
    auto mem = build_memory(data_of({7}, 3));
    ASSERT_EQ(mem.size(), 2u);
    EXPECT_EQ(mem.registers()[1].index_bits, bits_of("1"));
    EXPECT_EQ(mem.registers()[1].value_bits, bits_of("000"));
}

TEST(BuildMemory, IndexAndValueDecode) {
    auto data = data_of({3, 1, 2, 0}, 2);
    auto mem = build_memory(data);
    EXPECT_EQ(mem.registers()[2].index_bits, bits_of("10"));
    EXPECT_EQ(mem.registers()[2].value_bits, bits_of("10"));
    for (Index k = 0; k < mem.size(); k++) {
        EXPECT_EQ(decode_value(mem.registers()[k].index_bits), k);
        EXPECT_EQ(decode_value(mem.registers()[k].value_bits), data.raw(k));
    }
}

TEST(ChooseRotationScale, Examples) {
    // mpmath: 3 / sqrt(0.06) = 12.2474487139158904909864...
    EXPECT_NEAR(choose_rotation_scale(3, 0.01), 12.247448713915890, 1e-12);
    EXPECT_DOUBLE_EQ(choose_rotation_scale(1, 1.0 / 6.0), 1.0);
    EXPECT_THROW(choose_rotation_scale(0, 0.01), AllZeroDataError);
    EXPECT_THROW(choose_rotation_scale(3, 0.0), InputError);
    EXPECT_THROW(choose_rotation_scale(3, 1.0), InputError);
}

TEST(ChooseRotationScale, EqualityCaseWithinOneUlp) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> eps(1e-6, 0.99);
    for (int i = 0; i < 1000; i++) {
        std::uint64_t cmax = 1 + rng() % 100000;
        double e = eps(rng);
        double R = choose_rotation_scale(cmax, e);
        double ratio = static_cast<double>(cmax) / R;
        double want = std::sqrt(6.0 * e);
        double ulp = std::nextafter(want, 1e300) - want;
        EXPECT_LE(std::abs(ratio - want), ulp) << cmax << " " << e;
    }
}

TEST(ResolveParams, AutoAndExplicit) {
    auto d = data_of({3, 1, 2, 0}, 2);
    auto a = resolve_params(d, 0.01);
    EXPECT_TRUE(a.R_auto);
    EXPECT_DOUBLE_EQ(a.R, choose_rotation_scale(3, 0.01));
    auto b = resolve_params(d, 0.01, 16.0);
    EXPECT_FALSE(b.R_auto);
    EXPECT_EQ(b.R, 16.0);
    EXPECT_THROW(resolve_params(d, 0.01, -1.0), InputError);
    EXPECT_THROW(resolve_params(d, 1.5), InputError);
    EXPECT_THROW(resolve_params(data_of({0, 0}, 2), 0.01), AllZeroDataError);
}

TEST(Density, Examples) {
    EXPECT_DOUBLE_EQ(density(data_of({5, 5, 5, 5}, 3)), 1.0);
    EXPECT_DOUBLE_EQ(density(data_of({0, 0, 0, 9, 0, 0, 0, 0}, 4)), 1.0 / 8.0);
    EXPECT_NEAR(density(data_of({3, 1, 2, 0}, 2)), 7.0 / 18.0, 1e-15);
    EXPECT_THROW(density(data_of({0, 0}, 1)), AllZeroDataError);
}

TEST(Density, RangeAndMaximumProperty) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; i++) {
        auto d = amplenc::testing::random_data(rng, 1 + rng() % 6, 1 + rng() % 8);
        double rho = density(d);
        EXPECT_GT(rho, 0.0);
        EXPECT_LE(rho, 1.0);
        bool all_equal = std::all_of(d.values().begin(), d.values().end(),
                                     [&](const auto& v) { return v.raw() == d.c_max(); });
        EXPECT_EQ(rho == 1.0, all_equal);
    }
}
