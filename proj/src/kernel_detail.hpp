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

#include <array>
#include <bit>
#include <stdexcept>

#include "amplenc/kernels.hpp"

namespace amplenc::kernels::detail {

// Reductions sum fixed-size chunks, then add the chunk sums in order. The
// chunking does not depend on the thread count, so the result is reproducible.
inline constexpr Index kReduceChunk = 4096;

inline unsigned qubits_of(std::size_t size) {
    if (size == 0 || !std::has_single_bit(size)) {
        throw std::logic_error("amplitude count must be a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(size));
}

/// Maps a dense counter onto the i0 of each visited pair by inserting a zero
/// at the target and a one at each control position.
class PairIndexer {
   public:
    PairIndexer(unsigned num_qubits, unsigned target, Index control_mask) : control_mask_(control_mask) {
        if (target >= num_qubits || (control_mask >> num_qubits) != 0 || ((control_mask >> target) & 1U)) {
            throw std::logic_error("malformed gate for kernel");
        }
        Index fixed = control_mask | (Index{1} << target);
        for (unsigned q = 0; q < num_qubits; q++) {
            if ((fixed >> q) & 1U) positions_[count_++] = q;
        }
        pairs_ = Index{1} << (num_qubits - count_);
        target_bit_ = Index{1} << target;
    }

    Index pairs() const { return pairs_; }
    Index target_bit() const { return target_bit_; }

    Index operator()(Index i) const {
        for (unsigned j = 0; j < count_; j++) {
            unsigned p = positions_[j];
            Index low = i & ((Index{1} << p) - 1);
            i = ((i >> p) << (p + 1)) | low;
        }
        return i | control_mask_;
    }

   private:
    std::array<unsigned, 64> positions_{};
    unsigned count_ = 0;
    Index control_mask_;
    Index pairs_ = 0;
    Index target_bit_ = 0;
};

inline void apply_pair(Complex& a0, Complex& a1, const Matrix2& m) {
    Complex t0 = a0;
    Complex t1 = a1;
    a0 = m.m00 * t0 + m.m01 * t1;
    a1 = m.m10 * t0 + m.m11 * t1;
}

}  // namespace amplenc::kernels::detail
