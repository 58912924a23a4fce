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
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amplenc/common.hpp"
#include "amplenc/data_model.hpp"

namespace amplenc {

/// Quantum register allocation for a CPU register of width n:
///
///   cpu          [0, n)
///   flag         n
///   parity       [n + 1, 2n + 1)
///   compression  [2n + 1, 3n)
///
/// 3n qubits in total, 2n of them beyond the CPU register. For n = 1 the
/// compression block is empty and parity qubit 0 is the match qubit.
struct RegisterLayout {
    unsigned n = 0;

    QubitId cpu(unsigned m) const { return m; }
    QubitId flag() const { return n; }
    QubitId parity(unsigned m) const { return n + 1 + m; }
    QubitId compression(unsigned j) const { return 2 * n + 1 + j; }
    unsigned compression_count() const { return n - 1; }
    unsigned total_quantum() const { return 3 * n; }
    unsigned extra_qubits() const { return total_quantum() - n; }

    std::vector<QubitId> cpu_qubits() const;
    std::vector<QubitId> parity_qubits() const;
    std::vector<QubitId> compression_qubits() const;

    /// Amplitude index of CPU ket |k> with every other qubit in |0>. CPU qubit
    /// m holds the bit of k with significance 2^(n-1-m).
    Index cpu_index(Index k) const;
    /// Bits of the parity and compression qubits.
    Index ancilla_mask() const;

    bool operator==(const RegisterLayout&) const = default;
};

RegisterLayout layout_for(unsigned n);

enum class GateKind { kH, kX, kRY, kCX, kCCX, kCRY };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);
/// Number of quantum controls a kind carries.
unsigned control_arity(GateKind kind);

enum class BitRole { kIndex, kValue };

/// "Apply only if memory register `reg` has bit `bit` of the given role equal
/// to `required`." Resolved against ClassicalMemory at execution time.
struct ClassicalCondition {
    Index reg = 0;
    BitRole role = BitRole::kIndex;
    unsigned bit = 0;
    bool required = true;

    bool operator==(const ClassicalCondition&) const = default;
};

struct Gate {
    GateKind kind = GateKind::kX;
    std::vector<QubitId> controls;
    QubitId target = 0;
    double angle = 0.0;  // RY/CRY only, radians
    std::optional<ClassicalCondition> condition;

    bool operator==(const Gate&) const = default;

    static Gate h(QubitId t) { return {GateKind::kH, {}, t, 0.0, std::nullopt}; }
    static Gate x(QubitId t) { return {GateKind::kX, {}, t, 0.0, std::nullopt}; }
    static Gate ry(QubitId t, double angle) { return {GateKind::kRY, {}, t, angle, std::nullopt}; }
    static Gate cx(QubitId c, QubitId t) { return {GateKind::kCX, {c}, t, 0.0, std::nullopt}; }
    static Gate ccx(QubitId c0, QubitId c1, QubitId t) { return {GateKind::kCCX, {c0, c1}, t, 0.0, std::nullopt}; }
    static Gate cry(QubitId c, QubitId t, double angle) { return {GateKind::kCRY, {c}, t, angle, std::nullopt}; }

    Gate when(ClassicalCondition c) const {
        Gate g = *this;
        g.condition = c;
        return g;
    }

    /// Quantum qubits the gate touches (controls plus target).
    std::vector<QubitId> support() const;
};

bool condition_satisfied(const ClassicalCondition& c, const ClassicalMemory& memory);

/// Gate list over a layout, tied to the memory its classical conditions read.
class Circuit {
   public:
    Circuit(RegisterLayout layout, std::shared_ptr<const ClassicalMemory> memory);

    const RegisterLayout& layout() const { return layout_; }
    const ClassicalMemory& memory() const { return *memory_; }
    std::shared_ptr<const ClassicalMemory> memory_ptr() const { return memory_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    /// Qubit measured at the end, if any.
    std::optional<QubitId> measured() const { return measured_; }

    /// Throws InputError if the gate violates the layout or references memory
    /// that does not exist.
    void append(Gate gate);
    void append(std::span<const Gate> gates);
    void mark_measurement(QubitId q);

   private:
    void validate(const Gate& gate) const;

    RegisterLayout layout_;
    std::shared_ptr<const ClassicalMemory> memory_;
    std::vector<Gate> gates_;
    std::optional<QubitId> measured_;
};

/// Number of ASAP layers when gates with disjoint quantum supports share a
/// layer. Classical conditions never conflict.
unsigned depth(std::span<const Gate> gates);
inline unsigned depth(const Circuit& c) { return depth(c.gates()); }

/// ceil(log2(k)) for k >= 1.
unsigned ceil_log2(Index k);

struct ResourceReport {
    unsigned quantum_qubits = 0;
    unsigned extra_qubits = 0;
    Index classical_memory_bits = 0;
    std::map<std::string, Index> gate_counts;
    /// Every gate the simulator executes, i.e. the compiled length:
    /// n + sum_k (6n - 2 + popcount(c_k)).
    Index simulation_gate_total = 0;
    /// n + L: a single memory query resolving n match gates and L rotations.
    Index query_model_gate_total = 0;
    unsigned depth_total = 0;
    unsigned compression_depth = 0;
    unsigned compression_ancillas = 0;
};

ResourceReport resource_report(const Circuit& circuit, const DataSet& data);

// Line-oriented text format, one gate per line (see docs/formats.md):
//
//   amplenc-circuit 1
//   layout <n>
//   memory <registers> <index bits> <value bits>
//   <KIND>[(<angle>)] <controls...> <target> [if <idx|val>[<reg>][<bit>]=<0|1>]
//   measure <qubit>
std::string serialize(const Circuit& circuit);
void write_circuit(std::ostream& out, const Circuit& circuit);
/// Parses the text format. `memory` must match the header's shape.
Circuit parse_circuit(std::string_view text, std::shared_ptr<const ClassicalMemory> memory);

}  // namespace amplenc
