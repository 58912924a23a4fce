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

#include "amplenc/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace amplenc {

double bit_rotation_angle(unsigned bits, unsigned l, double R) {
    return std::ldexp(1.0, static_cast<int>(bits - l)) / R;
}

AngleTable::AngleTable(const DataSet& data, double R) : registers_(data.size()), bits_(data.bits()) {
    angles_.resize(registers_ * bits_);
    applied_.resize(registers_ * bits_);
    for (Index k = 0; k < registers_; k++) {
        for (unsigned l = 0; l < bits_; l++) {
            angles_[k * bits_ + l] = bit_rotation_angle(bits_, l, R);
            applied_[k * bits_ + l] = data.values()[k].bit(l) ? 1 : 0;
        }
    }
}

double AngleTable::total(Index k) const {
    double s = 0.0;
    for (unsigned l = 0; l < bits_; l++) {
        if (applied(k, l)) s += angle(k, l);
    }
    return s;
}

std::vector<Gate> build_initializer(const RegisterLayout& layout) {
    std::vector<Gate> out;
    for (unsigned m = 0; m < layout.n; m++) out.push_back(Gate::h(layout.cpu(m)));
    return out;
}

CompressionTree build_compression_tree(std::span<const QubitId> controls, std::span<const QubitId> ancillas) {
    if (controls.empty()) {
        throw ConfigurationError("compression needs at least one control");
    }
    if (ancillas.size() + 1 < controls.size()) {
        throw ConfigurationError("compressing " + std::to_string(controls.size()) + " controls needs " +
                                 std::to_string(controls.size() - 1) + " ancillas, got " +
                                 std::to_string(ancillas.size()));
    }
    CompressionTree tree;
    std::vector<QubitId> layer(controls.begin(), controls.end());
    std::size_t next_ancilla = 0;
    while (layer.size() > 1) {
        std::vector<QubitId> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
            QubitId a = ancillas[next_ancilla++];
            tree.gates.push_back(Gate::ccx(layer[i], layer[i + 1], a));
            next.push_back(a);
        }
        if (layer.size() % 2 == 1) next.push_back(layer.back());
        layer = std::move(next);
    }
    tree.result = layer.front();
    return tree;
}

QubitId match_qubit(const RegisterLayout& layout) {
    return layout.n == 1 ? layout.parity(0) : layout.compression(layout.compression_count() - 1);
}

std::vector<Gate> build_match_compute(Index k, const RegisterLayout& layout) {
    std::vector<Gate> out;
    for (unsigned m = 0; m < layout.n; m++) {
        out.push_back(Gate::cx(layout.cpu(m), layout.parity(m)));
        // parity_m = cpu_m XOR 1 when k_m = 0, giving 1 exactly on a match
        out.push_back(Gate::x(layout.parity(m)).when({k, BitRole::kIndex, m, false}));
    }
    auto parity = layout.parity_qubits();
    auto anc = layout.compression_qubits();
    auto tree = build_compression_tree(parity, anc);
    out.insert(out.end(), tree.gates.begin(), tree.gates.end());
    return out;
}

std::vector<Gate> build_match_uncompute(Index k, const RegisterLayout& layout) {
    auto out = build_match_compute(k, layout);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Gate> build_controlled_rotations(Index k, const DataSet& data, const ProtocolParams& params,
                                             const RegisterLayout& layout) {
    std::vector<Gate> out;
    const auto& value = data.values().at(k);
    const QubitId match = match_qubit(layout);
    for (unsigned l = 0; l < data.bits(); l++) {
        if (!value.bit(l)) continue;
        out.push_back(Gate::cry(match, layout.flag(), bit_rotation_angle(data.bits(), l, params.R))
                          .when({k, BitRole::kValue, l, true}));
    }
    return out;
}

std::vector<Gate> build_multi_controlled(std::span<const QubitId> controls, const Gate& operation,
                                         std::span<const QubitId> ancillas) {
    if (!operation.controls.empty() || (operation.kind != GateKind::kX && operation.kind != GateKind::kRY)) {
        throw ConfigurationError("multi-controlled operation must be an uncontrolled X or RY");
    }
    auto tree = build_compression_tree(controls, ancillas);
    std::vector<Gate> out = tree.gates;
    Gate op = operation.kind == GateKind::kX ? Gate::cx(tree.result, operation.target)
                                             : Gate::cry(tree.result, operation.target, operation.angle);
    op.condition = operation.condition;
    out.push_back(op);
    out.insert(out.end(), tree.gates.rbegin(), tree.gates.rend());
    return out;
}

CompiledProtocol compile_with_order(const DataSet& data, const ProtocolParams& params,
                                    std::span<const Index> order) {
    if (!(params.R > 0.0) || !std::isfinite(params.R)) {
        throw InputError("rotation scale R must be positive and finite");
    }
    std::vector<Index> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Index> expected(data.size());
    std::iota(expected.begin(), expected.end(), Index{0});
    if (sorted != expected) {
        throw InputError("block order must be a permutation of all registers");
    }

    auto layout = layout_for(data.n());
    auto memory = std::make_shared<const ClassicalMemory>(build_memory(data));
    CompiledProtocol p{Circuit(layout, memory), params, AngleTable(data, params.R), 0, {}};

    p.circuit.append(build_initializer(layout));
    p.init_end = p.circuit.size();
    for (Index k : order) {
        RegisterBlock block{k, p.circuit.size(), 0};
        p.circuit.append(build_match_compute(k, layout));
        p.circuit.append(build_controlled_rotations(k, data, params, layout));
        p.circuit.append(build_match_uncompute(k, layout));
        block.end = p.circuit.size();
        p.blocks.push_back(block);
    }
    p.circuit.mark_measurement(layout.flag());
    return p;
}

CompiledProtocol compile(const DataSet& data, const ProtocolParams& params) {
    std::vector<Index> order(data.size());
    std::iota(order.begin(), order.end(), Index{0});
    return compile_with_order(data, params, order);
}

}  // namespace amplenc
