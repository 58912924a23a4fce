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
#include <functional>
#include <span>
#include <vector>

#include "amplenc/circuit.hpp"
#include "amplenc/compiler.hpp"

namespace amplenc {

enum class Backend { kSerial, kParallel };

/// Dense amplitudes over the 3n quantum qubits of a layout. Qubit q is bit
/// 2^q of the amplitude index.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(RegisterLayout layout);

    const RegisterLayout& layout() const { return layout_; }
    unsigned num_qubits() const { return layout_.total_quantum(); }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex operator[](Index i) const { return amps_[i]; }

    void set_basis_state(Index i);
    double norm_squared(Backend backend = Backend::kParallel) const;
    /// Weight with any parity or compression qubit set.
    double ancilla_leakage(Backend backend = Backend::kParallel) const;
    /// Weight with the flag qubit in |1>.
    double flag_one_weight(Backend backend = Backend::kParallel) const;

   private:
    RegisterLayout layout_;
    std::vector<Complex> amps_;
};

/// Applies one gate. Leaves the state unchanged when the gate's classical
/// condition is not met by `memory`.
void apply_gate(StateVector& state, const Gate& gate, const ClassicalMemory& memory,
                Backend backend = Backend::kParallel);

/// Called after each register block with the block just executed.
using BlockObserver = std::function<void(const RegisterBlock&, const StateVector&)>;

struct RunOptions {
    Backend backend = Backend::kParallel;
    BlockObserver after_block;
};

/// Executes the compiled circuit on a fresh |0...0> state and returns the
/// pre-measurement state.
StateVector run(const CompiledProtocol& protocol, const RunOptions& options = {});
void run_gates(StateVector& state, std::span<const Gate> gates, const ClassicalMemory& memory,
               Backend backend = Backend::kParallel);

struct PostSelection {
    std::vector<Complex> cpu_state;  // indexed by k, unit norm
    double p_success = 0.0;
    double leakage = 0.0;
};

/// Projects onto flag = 1 and renormalizes. Throws AncillaEntangledError if
/// ancilla leakage reaches tol::kLeakage and ZeroSuccessError if
/// p_success < tol::kZeroSuccess.
PostSelection measure_flag_postselect(const StateVector& state);

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double empirical_p = 0.0;
    double expected_trials = 0.0;  // 1 / empirical_p, infinity with no successes
    std::uint64_t seed = 0;
};

/// Uniform draw in [0, 1) for trial `trial` under `seed`. Depends only on the
/// pair, so trials can be evaluated in any order or in parallel.
double trial_uniform(std::uint64_t seed, std::uint64_t trial);

struct SampleOptions {
    Backend backend = Backend::kParallel;
    /// Re-run the whole circuit per trial instead of reusing one simulation.
    bool resimulate = false;
};

/// Repeat-until-success sampling: trial t succeeds iff trial_uniform(seed, t)
/// is below the flag-one probability of the simulated state.
TrialStats sample_trials(const CompiledProtocol& protocol, std::uint64_t trials, std::uint64_t seed,
                         const SampleOptions& options = {});
/// Same draw rule against a known success probability.
TrialStats sample_with_probability(double p_success, std::uint64_t trials, std::uint64_t seed);

}  // namespace amplenc
