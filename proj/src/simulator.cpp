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

#include "amplenc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "amplenc/kernels.hpp"

namespace amplenc {

namespace {

double weight(std::span<const Complex> amps, Index mask, Index value, Backend backend) {
    return backend == Backend::kSerial ? kernels::serial::masked_weight(amps, mask, value)
                                       : kernels::omp::masked_weight(amps, mask, value);
}

}  // namespace

StateVector::StateVector(RegisterLayout layout) : layout_(layout), amps_(Index{1} << layout.total_quantum()) {
    amps_[0] = 1.0;
}

void StateVector::set_basis_state(Index i) {
    if (i >= amps_.size()) {
        throw InputError("basis index outside the state vector");
    }
    std::fill(amps_.begin(), amps_.end(), Complex{});
    amps_[i] = 1.0;
}

double StateVector::norm_squared(Backend backend) const { return weight(amps_, 0, 0, backend); }

double StateVector::ancilla_leakage(Backend backend) const {
    double inside = weight(amps_, layout_.ancilla_mask(), 0, backend);
    return std::max(0.0, norm_squared(backend) - inside);
}

double StateVector::flag_one_weight(Backend backend) const {
    Index f = Index{1} << layout_.flag();
    return weight(amps_, f, f, backend);
}

void apply_gate(StateVector& state, const Gate& gate, const ClassicalMemory& memory, Backend backend) {
    if (gate.condition && !condition_satisfied(*gate.condition, memory)) {
        return;
    }
    if (gate.controls.size() != control_arity(gate.kind)) {
        throw std::logic_error("malformed gate: wrong control count");
    }
    Index control_mask = 0;
    for (QubitId c : gate.controls) control_mask |= Index{1} << c;

    auto amps = state.amplitudes();
    const bool par = backend == Backend::kParallel;
    switch (gate.kind) {
        case GateKind::kX:
        case GateKind::kCX:
        case GateKind::kCCX:
            par ? kernels::omp::apply_x(amps, gate.target, control_mask)
                : kernels::serial::apply_x(amps, gate.target, control_mask);
            break;
        case GateKind::kH:
            par ? kernels::omp::apply_matrix(amps, gate.target, control_mask, kernels::hadamard())
                : kernels::serial::apply_matrix(amps, gate.target, control_mask, kernels::hadamard());
            break;
        case GateKind::kRY:
        case GateKind::kCRY: {
            auto m = kernels::ry(gate.angle);
            par ? kernels::omp::apply_matrix(amps, gate.target, control_mask, m)
                : kernels::serial::apply_matrix(amps, gate.target, control_mask, m);
            break;
        }
    }
}

void run_gates(StateVector& state, std::span<const Gate> gates, const ClassicalMemory& memory, Backend backend) {
    for (const auto& g : gates) apply_gate(state, g, memory, backend);
}

StateVector run(const CompiledProtocol& protocol, const RunOptions& options) {
    const auto& circuit = protocol.circuit;
    StateVector state(circuit.layout());
    std::span<const Gate> gates = circuit.gates();
    run_gates(state, gates.subspan(0, protocol.init_end), circuit.memory(), options.backend);
    std::size_t done = protocol.init_end;
    for (const auto& block : protocol.blocks) {
        run_gates(state, gates.subspan(done, block.end - done), circuit.memory(), options.backend);
        done = block.end;
        if (options.after_block) options.after_block(block, state);
    }
    run_gates(state, gates.subspan(done), circuit.memory(), options.backend);
    return state;
}

PostSelection measure_flag_postselect(const StateVector& state) {
    const auto& layout = state.layout();
    PostSelection out;
    out.leakage = state.ancilla_leakage();
    if (out.leakage >= tol::kLeakage) {
        throw AncillaEntangledError(out.leakage);
    }
    out.p_success = state.flag_one_weight();
    if (out.p_success < tol::kZeroSuccess) {
        throw ZeroSuccessError();
    }
    const Index flag = Index{1} << layout.flag();
    const double scale = 1.0 / std::sqrt(out.p_success);
    const Index cpu_states = Index{1} << layout.n;
    out.cpu_state.resize(cpu_states);
    for (Index k = 0; k < cpu_states; k++) {
        out.cpu_state[k] = state[layout.cpu_index(k) | flag] * scale;
    }
    return out;
}

double trial_uniform(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 engine(seq);
    // top 53 bits -> [0, 1), identical on every standard library
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

namespace {

TrialStats finish(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed) {
    TrialStats s;
    s.trials = trials;
    s.successes = successes;
    s.seed = seed;
    s.empirical_p = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    s.expected_trials = successes ? 1.0 / s.empirical_p : std::numeric_limits<double>::infinity();
    return s;
}

}  // namespace

TrialStats sample_with_probability(double p_success, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw InputError("trials must be at least 1");
    }
    std::int64_t successes = 0;
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for reduction(+ : successes) schedule(static)
    for (std::int64_t t = 0; t < count; t++) {
        if (trial_uniform(seed, static_cast<std::uint64_t>(t)) < p_success) successes++;
    }
    return finish(trials, static_cast<std::uint64_t>(successes), seed);
}

TrialStats sample_trials(const CompiledProtocol& protocol, std::uint64_t trials, std::uint64_t seed,
                         const SampleOptions& options) {
    if (trials == 0) {
        throw InputError("trials must be at least 1");
    }
    RunOptions ro;
    ro.backend = options.backend;
    if (!options.resimulate) {
        return sample_with_probability(run(protocol, ro).flag_one_weight(options.backend), trials, seed);
    }
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; t++) {
        auto state = run(protocol, ro);
        if (trial_uniform(seed, t) < state.flag_one_weight(options.backend)) successes++;
    }
    return finish(trials, successes, seed);
}

}  // namespace amplenc
