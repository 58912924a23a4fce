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

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "kernel_detail.hpp"

namespace amplenc::kernels::omp {

namespace {
// Below this many pairs the fork/join overhead dominates.
constexpr Index kParallelThreshold = Index{1} << 12;
}  // namespace

void apply_x(std::span<Complex> amps, unsigned target, Index control_mask) {
    const detail::PairIndexer idx(detail::qubits_of(amps.size()), target, control_mask);
    const Index tb = idx.target_bit();
    const auto pairs = static_cast<std::int64_t>(idx.pairs());
    Complex* a = amps.data();
#pragma omp parallel for schedule(static) if (idx.pairs() >= kParallelThreshold)
    for (std::int64_t i = 0; i < pairs; i++) {
        Index i0 = idx(static_cast<Index>(i));
        std::swap(a[i0], a[i0 | tb]);
    }
}

void apply_matrix(std::span<Complex> amps, unsigned target, Index control_mask, const Matrix2& m) {
    const detail::PairIndexer idx(detail::qubits_of(amps.size()), target, control_mask);
    const Index tb = idx.target_bit();
    const auto pairs = static_cast<std::int64_t>(idx.pairs());
    Complex* a = amps.data();
#pragma omp parallel for schedule(static) if (idx.pairs() >= kParallelThreshold)
    for (std::int64_t i = 0; i < pairs; i++) {
        Index i0 = idx(static_cast<Index>(i));
        detail::apply_pair(a[i0], a[i0 | tb], m);
    }
}

double masked_weight(std::span<const Complex> amps, Index mask, Index value) {
    const Index size = amps.size();
    const auto chunks = static_cast<std::int64_t>((size + detail::kReduceChunk - 1) / detail::kReduceChunk);
    std::vector<double> parts(chunks, 0.0);
    const Complex* a = amps.data();
#pragma omp parallel for schedule(static) if (chunks > 1)
    for (std::int64_t c = 0; c < chunks; c++) {
        double part = 0.0;
        const Index begin = static_cast<Index>(c) * detail::kReduceChunk;
        const Index end = std::min(size, begin + detail::kReduceChunk);
        for (Index i = begin; i < end; i++) {
            if ((i & mask) == value) part += std::norm(a[i]);
        }
        parts[c] = part;
    }
    double total = 0.0;
    for (double p : parts) total += p;
    return total;
}

double norm_squared(std::span<const Complex> amps) { return masked_weight(amps, 0, 0); }

}  // namespace amplenc::kernels::omp
