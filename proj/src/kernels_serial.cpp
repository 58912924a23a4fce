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

// Single-threaded reference kernels. The OpenMP kernels are tested for
// bitwise agreement against these.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "kernel_detail.hpp"

namespace amplenc::kernels {

Matrix2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Matrix2 ry(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {c, -s, s, c};
}

Index pair_count(unsigned num_qubits, Index control_mask) {
    return Index{1} << (num_qubits - 1 - std::popcount(control_mask));
}

namespace serial {

void apply_x(std::span<Complex> amps, unsigned target, Index control_mask) {
    detail::PairIndexer idx(detail::qubits_of(amps.size()), target, control_mask);
    const Index tb = idx.target_bit();
    for (Index i = 0; i < idx.pairs(); i++) {
        Index i0 = idx(i);
        std::swap(amps[i0], amps[i0 | tb]);
    }
}

void apply_matrix(std::span<Complex> amps, unsigned target, Index control_mask, const Matrix2& m) {
    detail::PairIndexer idx(detail::qubits_of(amps.size()), target, control_mask);
    const Index tb = idx.target_bit();
    for (Index i = 0; i < idx.pairs(); i++) {
        Index i0 = idx(i);
        detail::apply_pair(amps[i0], amps[i0 | tb], m);
    }
}

double masked_weight(std::span<const Complex> amps, Index mask, Index value) {
    const Index size = amps.size();
    const Index chunks = (size + detail::kReduceChunk - 1) / detail::kReduceChunk;
    double total = 0.0;
    for (Index c = 0; c < chunks; c++) {
        double part = 0.0;
        const Index end = std::min(size, (c + 1) * detail::kReduceChunk);
        for (Index i = c * detail::kReduceChunk; i < end; i++) {
            if ((i & mask) == value) part += std::norm(amps[i]);
        }
        total += part;
    }
    return total;
}

double norm_squared(std::span<const Complex> amps) { return masked_weight(amps, 0, 0); }

}  // namespace serial
}  // namespace amplenc::kernels
