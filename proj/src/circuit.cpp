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

#include "amplenc/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

namespace amplenc {

std::vector<QubitId> RegisterLayout::cpu_qubits() const {
    std::vector<QubitId> out;
    for (unsigned m = 0; m < n; m++) out.push_back(cpu(m));
    return out;
}

std::vector<QubitId> RegisterLayout::parity_qubits() const {
    std::vector<QubitId> out;
    for (unsigned m = 0; m < n; m++) out.push_back(parity(m));
    return out;
}

std::vector<QubitId> RegisterLayout::compression_qubits() const {
    std::vector<QubitId> out;
    for (unsigned j = 0; j < compression_count(); j++) out.push_back(compression(j));
    return out;
}

Index RegisterLayout::cpu_index(Index k) const {
    Index idx = 0;
    for (unsigned m = 0; m < n; m++) {
        if ((k >> (n - 1 - m)) & 1U) {
            idx |= Index{1} << cpu(m);
        }
    }
    return idx;
}

Index RegisterLayout::ancilla_mask() const {
    // parity and compression are the contiguous ids [n + 1, 3n)
    Index all = (Index{1} << total_quantum()) - 1;
    Index low = (Index{1} << (n + 1)) - 1;
    return all & ~low;
}

RegisterLayout layout_for(unsigned n) {
    if (n == 0) {
        throw InputError("CPU register needs at least one qubit");
    }
    // 3n qubits must index a 64-bit amplitude offset.
    if (3 * n >= 63) {
        throw InputError("CPU width " + std::to_string(n) + " is too large to address");
    }
    return RegisterLayout{n};
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH: return "H";
        case GateKind::kX: return "X";
        case GateKind::kRY: return "RY";
        case GateKind::kCX: return "CX";
        case GateKind::kCCX: return "CCX";
        case GateKind::kCRY: return "CRY";
    }
    return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
    for (auto k : {GateKind::kH, GateKind::kX, GateKind::kRY, GateKind::kCX, GateKind::kCCX, GateKind::kCRY}) {
        if (gate_name(k) == name) return k;
    }
    return std::nullopt;
}

unsigned control_arity(GateKind kind) {
    switch (kind) {
        case GateKind::kCX:
        case GateKind::kCRY: return 1;
        case GateKind::kCCX: return 2;
        default: return 0;
    }
}

static bool has_angle(GateKind kind) { return kind == GateKind::kRY || kind == GateKind::kCRY; }

std::vector<QubitId> Gate::support() const {
    std::vector<QubitId> s = controls;
    s.push_back(target);
    return s;
}

bool condition_satisfied(const ClassicalCondition& c, const ClassicalMemory& memory) {
    bool bit = c.role == BitRole::kIndex ? memory.index_bit(c.reg, c.bit) : memory.value_bit(c.reg, c.bit);
    return bit == c.required;
}

Circuit::Circuit(RegisterLayout layout, std::shared_ptr<const ClassicalMemory> memory)
    : layout_(layout), memory_(std::move(memory)) {
    if (!memory_) {
        throw InputError("circuit requires a classical memory");
    }
    if (memory_->index_width() != layout_.n) {
        throw InputError("memory index width does not match the CPU register");
    }
}

void Circuit::validate(const Gate& g) const {
    if (g.controls.size() != control_arity(g.kind)) {
        throw InputError(std::string(gate_name(g.kind)) + " needs " + std::to_string(control_arity(g.kind)) +
                         " control(s)");
    }
    const unsigned nq = layout_.total_quantum();
    std::set<QubitId> seen;
    for (QubitId q : g.support()) {
        if (q >= nq) {
            throw InputError("qubit " + std::to_string(q) + " outside the " + std::to_string(nq) + "-qubit layout");
        }
        if (!seen.insert(q).second) {
            throw InputError("gate " + std::string(gate_name(g.kind)) + " repeats qubit " + std::to_string(q));
        }
    }
    if (g.condition) {
        const auto& c = *g.condition;
        unsigned width = c.role == BitRole::kIndex ? memory_->index_width() : memory_->value_width();
        if (c.reg >= memory_->size() || c.bit >= width) {
            throw InputError("classical condition references missing memory bit");
        }
    }
}

void Circuit::append(Gate gate) {
    validate(gate);
    gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const Gate> gates) {
    for (const auto& g : gates) append(g);
}

void Circuit::mark_measurement(QubitId q) {
    if (q >= layout_.total_quantum()) {
        throw InputError("measured qubit outside layout");
    }
    measured_ = q;
}

unsigned depth(std::span<const Gate> gates) {
    std::vector<unsigned> level;
    unsigned total = 0;
    for (const auto& g : gates) {
        unsigned layer = 0;
        for (QubitId q : g.support()) {
            if (q >= level.size()) level.resize(q + 1, 0);
            layer = std::max(layer, level[q]);
        }
        layer++;
        for (QubitId q : g.support()) level[q] = layer;
        total = std::max(total, layer);
    }
    return total;
}

unsigned ceil_log2(Index k) {
    unsigned r = 0;
    while ((Index{1} << r) < k) r++;
    return r;
}

ResourceReport resource_report(const Circuit& circuit, const DataSet& data) {
    const auto& layout = circuit.layout();
    ResourceReport r;
    r.quantum_qubits = layout.total_quantum();
    r.extra_qubits = layout.extra_qubits();
    r.classical_memory_bits = circuit.memory().total_bits();
    for (auto k : {GateKind::kH, GateKind::kX, GateKind::kRY, GateKind::kCX, GateKind::kCCX, GateKind::kCRY}) {
        r.gate_counts[std::string(gate_name(k))] = 0;
    }
    for (const auto& g : circuit.gates()) {
        r.gate_counts[std::string(gate_name(g.kind))]++;
    }
    r.simulation_gate_total = circuit.size();
    r.query_model_gate_total = Index{data.n()} + data.bits();
    r.depth_total = depth(circuit);

    // The first run of consecutive Toffolis is one complete compression stage.
    const auto& gates = circuit.gates();
    auto first = std::find_if(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::kCCX; });
    auto last = std::find_if(first, gates.end(), [](const Gate& g) { return g.kind != GateKind::kCCX; });
    std::span<const Gate> stage(first, last);
    r.compression_depth = depth(stage);
    std::set<QubitId> targets;
    for (const auto& g : stage) targets.insert(g.target);
    r.compression_ancillas = static_cast<unsigned>(targets.size());
    return r;
}

namespace {

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
    throw InputError("circuit text line " + std::to_string(line) + ": " + why);
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line) {
    T v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        parse_fail(line, "bad number '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& circuit) {
    const auto& mem = circuit.memory();
    out << "amplenc-circuit 1\n";
    out << "layout " << circuit.layout().n << "\n";
    out << "memory " << mem.size() << " " << mem.index_width() << " " << mem.value_width() << "\n";
    for (const auto& g : circuit.gates()) {
        out << gate_name(g.kind);
        if (has_angle(g.kind)) out << "(" << format_angle(g.angle) << ")";
        for (QubitId c : g.controls) out << " " << c;
        out << " " << g.target;
        if (g.condition) {
            const auto& c = *g.condition;
            out << " if " << (c.role == BitRole::kIndex ? "idx" : "val") << "[" << c.reg << "][" << c.bit
                << "]=" << (c.required ? 1 : 0);
        }
        out << "\n";
    }
    if (circuit.measured()) out << "measure " << *circuit.measured() << "\n";
}

std::string serialize(const Circuit& circuit) {
    std::ostringstream os;
    write_circuit(os, circuit);
    return os.str();
}

Circuit parse_circuit(std::string_view text, std::shared_ptr<const ClassicalMemory> memory) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<Circuit> circuit;
    bool saw_magic = false;

    auto tokens_of = [](const std::string& s) {
        std::vector<std::string> toks;
        std::istringstream ls(s);
        for (std::string t; ls >> t;) toks.push_back(t);
        return toks;
    };

    while (std::getline(in, line)) {
        lineno++;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!saw_magic) {
            if (toks.size() != 2 || toks[0] != "amplenc-circuit" || toks[1] != "1") {
                parse_fail(lineno, "missing 'amplenc-circuit 1' header");
            }
            saw_magic = true;
            continue;
        }
        if (toks[0] == "layout") {
            if (toks.size() != 2) parse_fail(lineno, "layout takes one argument");
            if (circuit) parse_fail(lineno, "duplicate layout line");
            circuit.emplace(layout_for(parse_number<unsigned>(toks[1], lineno)), memory);
            continue;
        }
        if (!circuit) parse_fail(lineno, "gate before layout");
        if (toks[0] == "memory") {
            if (toks.size() != 4) parse_fail(lineno, "memory takes three arguments");
            if (parse_number<Index>(toks[1], lineno) != memory->size() ||
                parse_number<unsigned>(toks[2], lineno) != memory->index_width() ||
                parse_number<unsigned>(toks[3], lineno) != memory->value_width()) {
                parse_fail(lineno, "memory shape does not match the supplied memory");
            }
            continue;
        }
        if (circuit->measured()) parse_fail(lineno, "nothing may follow the measure line");
        if (toks[0] == "measure") {
            if (toks.size() != 2) parse_fail(lineno, "measure takes one qubit");
            circuit->mark_measurement(parse_number<QubitId>(toks[1], lineno));
            continue;
        }

        Gate g;
        std::string head = toks[0];
        std::string name = head;
        auto paren = head.find('(');
        if (paren != std::string::npos) {
            if (head.back() != ')') parse_fail(lineno, "unterminated angle");
            name = head.substr(0, paren);
            g.angle = parse_number<double>(std::string_view(head).substr(paren + 1, head.size() - paren - 2), lineno);
        }
        auto kind = parse_gate_name(name);
        if (!kind) parse_fail(lineno, "unknown gate '" + name + "'");
        g.kind = *kind;
        if (has_angle(g.kind) != (paren != std::string::npos)) parse_fail(lineno, "angle mismatch for " + name);

        std::size_t i = 1;
        std::vector<QubitId> qubits;
        for (; i < toks.size() && toks[i] != "if"; i++) qubits.push_back(parse_number<QubitId>(toks[i], lineno));
        if (qubits.empty()) parse_fail(lineno, "gate without target");
        g.target = qubits.back();
        qubits.pop_back();
        g.controls = std::move(qubits);
        if (i < toks.size()) {
            if (i + 2 != toks.size()) parse_fail(lineno, "malformed condition");
            const std::string& c = toks[i + 1];
            unsigned long long reg = 0, bit = 0;
            int req = 0;
            char role[4] = {};
            int consumed = 0;
            if (std::sscanf(c.c_str(), "%3[a-z][%llu][%llu]=%d%n", role, &reg, &bit, &req, &consumed) != 4 ||
                static_cast<std::size_t>(consumed) != c.size() || (req != 0 && req != 1)) {
                parse_fail(lineno, "malformed condition '" + c + "'");
            }
            std::string r(role);
            if (r != "idx" && r != "val") parse_fail(lineno, "condition role must be idx or val");
            g.condition = ClassicalCondition{reg, r == "idx" ? BitRole::kIndex : BitRole::kValue,
                                             static_cast<unsigned>(bit), req == 1};
        }
        try {
            circuit->append(std::move(g));
        } catch (const InputError& e) {
            parse_fail(lineno, e.what());
        }
    }
    if (!circuit) throw InputError("circuit text has no layout line");
    return std::move(*circuit);
}

}  // namespace amplenc
