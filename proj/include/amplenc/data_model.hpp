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
#include <optional>
#include <span>
#include <vector>

#include "amplenc/common.hpp"

namespace amplenc {

/// Largest supported value width. Keeps 2^L and the angle table exact in double.
inline constexpr unsigned kMaxValueBits = 52;

/// An L-bit unsigned integer. Bit l (l = 0 ... L-1) carries weight 2^(L-1-l),
/// i.e. bit 0 is the most significant one.
class FixedPointValue {
   public:
    FixedPointValue(std::uint64_t raw, unsigned bits);

    std::uint64_t raw() const { return raw_; }
    unsigned bits() const { return bits_; }
    bool bit(unsigned l) const { return (raw_ >> (bits_ - 1 - l)) & 1U; }
    std::vector<std::uint8_t> bit_string() const;

   private:
    std::uint64_t raw_;
    unsigned bits_;
};

FixedPointValue encode_value(std::uint64_t c, unsigned bits);
std::uint64_t decode_value(std::span<const std::uint8_t> msb_first_bits);

/// Classical input, already zero-padded to 2^n entries.
class DataSet {
   public:
    const std::vector<FixedPointValue>& values() const { return values_; }
    std::uint64_t raw(Index k) const { return values_[k].raw(); }
    std::vector<std::uint64_t> raw_values() const;
    unsigned bits() const { return bits_; }
    unsigned n() const { return n_; }
    Index size() const { return values_.size(); }
    /// Number of entries supplied before padding.
    Index original_size() const { return original_size_; }
    std::uint64_t c_max() const { return c_max_; }
    /// Sum of c_k^2, computed in double.
    double sum_of_squares() const;

    friend DataSet pad_to_power_of_two(std::span<const std::uint64_t> values, unsigned bits);

   private:
    DataSet() = default;

    std::vector<FixedPointValue> values_;
    unsigned bits_ = 0;
    unsigned n_ = 0;
    Index original_size_ = 0;
    std::uint64_t c_max_ = 0;
};

/// Zero-pads to 2^n entries with n = ceil(log2(max(len, 2))).
/// Throws InputError on an empty list, a bad width or a value >= 2^bits.
DataSet pad_to_power_of_two(std::span<const std::uint64_t> values, unsigned bits);

/// Smallest n with 2^n >= max(count, 2).
unsigned cpu_width_for(Index count);

struct MemoryRegister {
    std::vector<std::uint8_t> index_bits;  // binary(k), MSB first
    std::vector<std::uint8_t> value_bits;  // c_k, MSB first
};

/// The 2^n classical registers |k, c_k>. Immutable once built.
class ClassicalMemory {
   public:
    explicit ClassicalMemory(std::vector<MemoryRegister> registers);

    const std::vector<MemoryRegister>& registers() const { return registers_; }
    Index size() const { return registers_.size(); }
    unsigned index_width() const { return index_width_; }
    unsigned value_width() const { return value_width_; }
    bool index_bit(Index k, unsigned m) const { return registers_.at(k).index_bits.at(m) != 0; }
    bool value_bit(Index k, unsigned l) const { return registers_.at(k).value_bits.at(l) != 0; }
    /// n + L bits per register, over all registers.
    Index total_bits() const { return size() * (index_width_ + value_width_); }

   private:
    std::vector<MemoryRegister> registers_;
    unsigned index_width_ = 0;
    unsigned value_width_ = 0;
};

ClassicalMemory build_memory(const DataSet& data);

enum class Mode { kFaithful, kOracle };

struct ProtocolParams {
    double R = 0.0;
    double epsilon = 1e-3;
    Mode mode = Mode::kFaithful;
    bool postselect = true;
    std::uint64_t seed = 0;
    bool R_auto = false;
};

/// Smallest R meeting c_max / R <= sqrt(6 epsilon), i.e. the equality case.
double choose_rotation_scale(std::uint64_t c_max, double epsilon);

/// Auto-selects R from epsilon unless an explicit scale is given. Throws
/// InputError for a non-positive R or epsilon outside (0, 1).
ProtocolParams resolve_params(const DataSet& data, double epsilon,
                              std::optional<double> explicit_R = std::nullopt);

/// (1/2^n) sum_k (c_k / c_max)^2, in (0, 1].
double density(const DataSet& data);

}  // namespace amplenc
