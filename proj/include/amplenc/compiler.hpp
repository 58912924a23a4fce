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
#include <vector>

#include "amplenc/circuit.hpp"
#include "amplenc/data_model.hpp"

namespace amplenc {

/// Gate range [begin, end) of the compiled circuit that handles register k.
struct RegisterBlock {
    Index k = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Flag rotation angle for value bit l: 2^(L-l) / R, in the Ry(theta) convention
/// where Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>.
double bit_rotation_angle(unsigned bits, unsigned l, double R);

/// Per (k, l) rotation angles. The angle for (k, l) is applied iff c_{k,l} = 1,
/// so the summed angle in branch k is 2 c_k / R.
class AngleTable {
   public:
    AngleTable(const DataSet& data, double R);

    double angle(Index k, unsigned l) const { return angles_[k * bits_ + l]; }
    bool applied(Index k, unsigned l) const { return applied_[k * bits_ + l] != 0; }
    /// Sum of applied angles for register k.
    double total(Index k) const;
    Index registers() const { return registers_; }
    unsigned bits() const { return bits_; }

   private:
    Index registers_;
    unsigned bits_;
    std::vector<double> angles_;
    std::vector<std::uint8_t> applied_;
};

struct CompiledProtocol {
    Circuit circuit;
    ProtocolParams params;
    AngleTable angle_table;
    std::size_t init_end = 0;  // gates [0, init_end) are the initializer
    std::vector<RegisterBlock> blocks;
};

std::vector<Gate> build_initializer(const RegisterLayout& layout);

/// Gates of a Toffoli tree that ANDs `controls` into a single qubit. Qubits are
/// paired per layer; an odd one out is promoted unchanged. Consumes K-1
/// ancillas in order and returns the qubit holding the result (controls[0] for
/// K = 1). Throws ConfigurationError if fewer than K-1 ancillas are given.
struct CompressionTree {
    std::vector<Gate> gates;
    QubitId result = 0;
};
CompressionTree build_compression_tree(std::span<const QubitId> controls,
                                       std::span<const QubitId> ancillas);

/// Match stage for register k: parity_m = NOT(cpu_m XOR k_m), then the
/// compression tree. Leaves the match qubit = 1 iff the CPU is in |k>.
std::vector<Gate> build_match_compute(Index k, const RegisterLayout& layout);
/// Exact reverse of build_match_compute.
std::vector<Gate> build_match_uncompute(Index k, const RegisterLayout& layout);
/// Qubit holding the match result after build_match_compute.
QubitId match_qubit(const RegisterLayout& layout);

/// One CRY on the flag per set bit of c_k, controlled by the match qubit and
/// conditioned on the matching value bit in memory.
std::vector<Gate> build_controlled_rotations(Index k, const DataSet& data, const ProtocolParams& params,
                                             const RegisterLayout& layout);

/// Generic K-controlled version of a single-qubit `operation` (X or RY):
/// compress, apply the singly-controlled operation, uncompress.
std::vector<Gate> build_multi_controlled(std::span<const QubitId> controls, const Gate& operation,
                                         std::span<const QubitId> ancillas);

/// Full protocol: initializer, then (match, rotations, unmatch) for every
/// register in order, then a measurement marker on the flag.
CompiledProtocol compile(const DataSet& data, const ProtocolParams& params);

/// Same circuit with the register blocks emitted in `order` instead of 0..2^n-1.
CompiledProtocol compile_with_order(const DataSet& data, const ProtocolParams& params,
                                    std::span<const Index> order);

}  // namespace amplenc
