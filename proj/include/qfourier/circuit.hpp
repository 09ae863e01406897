// Copyright 2026 The qfourier Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <map>
#include <vector>

#include "qfourier/state.hpp"

namespace qfourier {

/// Wire assignment for the compiled circuits.
///
/// qprime:  slot-control register; qprime[0] is the most significant bit of
///          the slot label (binary labels read big-endian across qprime).
/// qdprime: the two mixer qubits prepared in |+>.
/// q:       data qubits; q.front() is the chain head q_1, q.back() is q_N,
///          the readout qubit.
/// extra:   any further qubits (e.g. the entangled register of the
///          superposed-input experiment).
struct RegisterLayout {
    std::vector<int> qprime;
    std::vector<int> qdprime;
    std::vector<int> q;
    std::vector<int> extra;

    int num_qubits() const {
        int n = 0;
        for (const auto *reg : {&qprime, &qdprime, &q, &extra})
            for (int idx : *reg)
                n = idx >= n ? idx + 1 : n;
        return n;
    }
    int readout() const {
        if (q.empty())
            throw ValidationError("layout has no data register");
        return q.back();
    }
    void validate() const {
        std::vector<bool> seen(static_cast<std::size_t>(num_qubits()), false);
        for (const auto *reg : {&qprime, &qdprime, &q, &extra})
            for (int idx : *reg) {
                if (idx < 0 || seen[static_cast<std::size_t>(idx)])
                    throw ValidationError("layout indices must be distinct");
                seen[static_cast<std::size_t>(idx)] = true;
            }
    }

    /// Contiguous default: [qprime..., qdprime x2, q...].
    static RegisterLayout contiguous(int num_qprime, int num_data) {
        RegisterLayout lay;
        int next = 0;
        for (int i = 0; i < num_qprime; ++i)
            lay.qprime.push_back(next++);
        lay.qdprime = {next, next + 1};
        next += 2;
        for (int i = 0; i < num_data; ++i)
            lay.q.push_back(next++);
        return lay;
    }
};

/// Ordered gate list over a fixed-width register.
struct Circuit {
    int num_qubits = 0;
    RegisterLayout layout;
    std::vector<Gate> gates;

    explicit Circuit(int n = 0) : num_qubits(n) {}
    Circuit(int n, RegisterLayout lay) : num_qubits(n), layout(std::move(lay)) {}

    Circuit &add(Gate g) {
        validate_gate(g, num_qubits);
        gates.push_back(std::move(g));
        return *this;
    }
    std::size_t size() const { return gates.size(); }
};

/// Applies the circuit's gates in order to a copy of `initial`.
inline State run(const Circuit &circuit, State initial) {
    if (initial.num_qubits() != circuit.num_qubits)
        throw ValidationError("state/circuit qubit count mismatch");
    for (const auto &g : circuit.gates)
        apply_gate(initial, g);
    return initial;
}

/// Per-category gate counts, keyed by (kind, number of controls).
/// CRy = (Ry,1), CCRy = (Ry,2), CNOT = (X,1).
struct GateCensus {
    std::map<std::pair<GateKind, int>, std::size_t> counts;

    std::size_t at(GateKind k, int nc) const {
        auto it = counts.find({k, nc});
        return it == counts.end() ? 0 : it->second;
    }
    std::size_t ry() const { return at(GateKind::Ry, 0); }
    std::size_t cry() const { return at(GateKind::Ry, 1); }
    std::size_t ccry() const { return at(GateKind::Ry, 2); }
    std::size_t h() const { return at(GateKind::H, 0); }
    std::size_t x() const { return at(GateKind::X, 0); }
    std::size_t cnot() const { return at(GateKind::X, 1); }
    std::size_t swap() const { return at(GateKind::Swap, 0); }
    /// k-controlled rotations, k >= 3.
    std::size_t multi_ry() const {
        std::size_t n = 0;
        for (const auto &[key, c] : counts)
            if (key.first == GateKind::Ry && key.second >= 3)
                n += c;
        return n;
    }
    std::size_t total() const {
        std::size_t n = 0;
        for (const auto &[key, c] : counts)
            n += c;
        return n;
    }
};

inline GateCensus gate_census(const Circuit &circuit) {
    GateCensus census;
    for (const auto &g : circuit.gates)
        ++census.counts[{g.kind, g.num_controls()}];
    return census;
}

} // namespace qfourier
