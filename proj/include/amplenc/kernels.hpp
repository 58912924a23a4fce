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

#include "amplenc/common.hpp"

// State-vector gate kernels. Every kernel acts on the amplitude pairs
// (i0, i1 = i0 | 1 << target) where i0 has the target bit clear and all bits of
// `control_mask` set. Pairs are disjoint, so the OpenMP variants produce
// results bitwise identical to the serial reference.
namespace amplenc::kernels {

struct Matrix2 {
    Complex m00, m01, m10, m11;
};

Matrix2 hadamard();
Matrix2 ry(double angle);

/// Number of amplitude pairs a controlled single-target kernel visits.
Index pair_count(unsigned num_qubits, Index control_mask);

namespace serial {
void apply_x(std::span<Complex> amps, unsigned target, Index control_mask);
void apply_matrix(std::span<Complex> amps, unsigned target, Index control_mask, const Matrix2& m);
double norm_squared(std::span<const Complex> amps);
/// Sum of |a_i|^2 over indices with (i & mask) == value.
double masked_weight(std::span<const Complex> amps, Index mask, Index value);
}  // namespace serial

namespace omp {
void apply_x(std::span<Complex> amps, unsigned target, Index control_mask);
void apply_matrix(std::span<Complex> amps, unsigned target, Index control_mask, const Matrix2& m);
double norm_squared(std::span<const Complex> amps);
double masked_weight(std::span<const Complex> amps, Index mask, Index value);
}  // namespace omp

}  // namespace amplenc::kernels
