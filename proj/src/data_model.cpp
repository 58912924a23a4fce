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

#include "amplenc/data_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace amplenc {

namespace {

void check_width(unsigned bits) {
    if (bits == 0 || bits > kMaxValueBits) {
        throw InputError("value width L must be in [1, " + std::to_string(kMaxValueBits) + "], got " +
                         std::to_string(bits));
    }
}

}  // namespace

FixedPointValue::FixedPointValue(std::uint64_t raw, unsigned bits) : raw_(raw), bits_(bits) {
    check_width(bits);
    if (raw >> bits != 0) {
        throw InputError("value " + std::to_string(raw) + " does not fit in " + std::to_string(bits) +
                         " bits");
    }
}

std::vector<std::uint8_t> FixedPointValue::bit_string() const {
    std::vector<std::uint8_t> out(bits_);
    for (unsigned l = 0; l < bits_; l++) {
        out[l] = bit(l) ? 1 : 0;
    }
    return out;
}

FixedPointValue encode_value(std::uint64_t c, unsigned bits) { return FixedPointValue(c, bits); }

std::uint64_t decode_value(std::span<const std::uint8_t> msb_first_bits) {
    std::uint64_t v = 0;
    for (auto b : msb_first_bits) {
        v = (v << 1) | (b ? 1U : 0U);
    }
    return v;
}

unsigned cpu_width_for(Index count) {
    unsigned n = 1;
    while ((Index{1} << n) < count) {
        n++;
    }
    return n;
}

std::vector<std::uint64_t> DataSet::raw_values() const {
    std::vector<std::uint64_t> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
        out.push_back(v.raw());
    }
    return out;
}

double DataSet::sum_of_squares() const {
    double s = 0.0;
    for (const auto& v : values_) {
        auto c = static_cast<double>(v.raw());
        s += c * c;
    }
    return s;
}

DataSet pad_to_power_of_two(std::span<const std::uint64_t> values, unsigned bits) {
    if (values.empty()) {
        throw InputError("data set is empty");
    }
    check_width(bits);
    DataSet d;
    d.bits_ = bits;
    d.original_size_ = values.size();
    d.n_ = cpu_width_for(values.size());
    Index padded = Index{1} << d.n_;
    d.values_.reserve(padded);
    for (std::size_t k = 0; k < values.size(); k++) {
        if (values[k] >> bits != 0) {
            throw InputError("value at index " + std::to_string(k) + " (" + std::to_string(values[k]) +
                             ") does not fit in " + std::to_string(bits) + " bits");
        }
        d.values_.emplace_back(values[k], bits);
        d.c_max_ = std::max(d.c_max_, values[k]);
    }
    while (d.values_.size() < padded) {
        d.values_.emplace_back(0, bits);
    }
    return d;
}

ClassicalMemory::ClassicalMemory(std::vector<MemoryRegister> registers) : registers_(std::move(registers)) {
    if (registers_.empty()) {
        throw InputError("memory needs at least one register");
    }
    index_width_ = static_cast<unsigned>(registers_.front().index_bits.size());
    value_width_ = static_cast<unsigned>(registers_.front().value_bits.size());
    for (std::size_t k = 0; k < registers_.size(); k++) {
        const auto& r = registers_[k];
        if (r.index_bits.size() != index_width_ || r.value_bits.size() != value_width_) {
            throw InputError("memory register " + std::to_string(k) + " has inconsistent width");
        }
        if (decode_value(r.index_bits) != k) {
            throw InputError("memory register " + std::to_string(k) + " holds the wrong index");
        }
    }
}

ClassicalMemory build_memory(const DataSet& data) {
    std::vector<MemoryRegister> regs;
    regs.reserve(data.size());
    for (Index k = 0; k < data.size(); k++) {
        MemoryRegister r;
        r.index_bits.resize(data.n());
        for (unsigned m = 0; m < data.n(); m++) {
            r.index_bits[m] = (k >> (data.n() - 1 - m)) & 1U;
        }
        r.value_bits = data.values()[k].bit_string();
        regs.push_back(std::move(r));
    }
    return ClassicalMemory(std::move(regs));
}

double choose_rotation_scale(std::uint64_t c_max, double epsilon) {
    if (c_max == 0) {
        throw AllZeroDataError();
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InputError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
    return static_cast<double>(c_max) / std::sqrt(6.0 * epsilon);
}

ProtocolParams resolve_params(const DataSet& data, double epsilon, std::optional<double> explicit_R) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InputError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
    ProtocolParams p;
    p.epsilon = epsilon;
    if (explicit_R) {
        if (!(*explicit_R > 0.0) || !std::isfinite(*explicit_R)) {
            throw InputError("rotation scale R must be positive and finite");
        }
        p.R = *explicit_R;
        p.R_auto = false;
    } else {
        p.R = choose_rotation_scale(data.c_max(), epsilon);
        p.R_auto = true;
    }
    return p;
}

double density(const DataSet& data) {
    if (data.c_max() == 0) {
        throw AllZeroDataError();
    }
    auto cmax = static_cast<double>(data.c_max());
    double s = 0.0;
    for (const auto& v : data.values()) {
        double r = static_cast<double>(v.raw()) / cmax;
        s += r * r;
    }
    return s / static_cast<double>(data.size());
}

}  // namespace amplenc
