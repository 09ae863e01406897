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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qfourier/errors.hpp"

namespace qfourier {

enum class GateKind : std::uint8_t { Ry, H, X, Swap };

inline const char *to_string(GateKind k) {
    switch (k) {
    case GateKind::Ry:
        return "ry";
    case GateKind::H:
        return "h";
    case GateKind::X:
        return "x";
    case GateKind::Swap:
        return "swap";
    }
    return "?";
}

/// One control wire. `on_one == false` means the gate fires when the control
/// qubit is |0>; realized with X conjugation only at decomposition time.
struct Control {
    int qubit = 0;
    bool on_one = true;
};

/// Gate IR entry: a single-target rotation/flip (or a two-qubit swap) with an
/// arbitrary list of positive/negative controls.
struct Gate {
    GateKind kind = GateKind::Ry;
    double angle = 0.0; // Ry only; half-angle convention Ry(t)|0> = cos(t/2)|0> + sin(t/2)|1>
    int target = 0;
    int target2 = -1; // Swap only
    std::vector<Control> controls;

    static Gate ry(double angle, int target) {
        Gate g;
        g.kind = GateKind::Ry;
        g.angle = angle;
        g.target = target;
        return g;
    }
    static Gate h(int target) {
        Gate g;
        g.kind = GateKind::H;
        g.target = target;
        return g;
    }
    static Gate x(int target) {
        Gate g;
        g.kind = GateKind::X;
        g.target = target;
        return g;
    }
    static Gate swap(int a, int b) {
        Gate g;
        g.kind = GateKind::Swap;
        g.target = a;
        g.target2 = b;
        return g;
    }

    Gate &controlled(int qubit, bool on_one = true) {
        controls.push_back({qubit, on_one});
        return *this;
    }
    Gate &controlled(const std::vector<Control> &more) {
        controls.insert(controls.end(), more.begin(), more.end());
        return *this;
    }

    int num_controls() const { return static_cast<int>(controls.size()); }

    bool involves(int qubit) const {
        if (qubit == target || qubit == target2)
            return true;
        for (const auto &c : controls)
            if (c.qubit == qubit)
                return true;
        return false;
    }
};

/// Structural checks: indices in range, controls and targets disjoint,
/// no duplicate qubits, finite angles, swap carries no angle.
inline void validate_gate(const Gate &g, int num_qubits) {
    auto check_index = [&](int q, const char *what) {
        if (q < 0 || q >= num_qubits)
            throw ValidationError(std::string(what) + " index out of range: " +
                                  std::to_string(q));
    };
    check_index(g.target, "target");
    if (g.kind == GateKind::Swap) {
        check_index(g.target2, "target");
        if (g.target == g.target2)
            throw ValidationError("swap targets must differ");
        if (g.angle != 0.0)
            throw ValidationError("swap carries no angle");
    } else if (g.target2 != -1) {
        throw ValidationError("second target only valid for swap");
    }
    if (g.kind == GateKind::Ry && !std::isfinite(g.angle))
        throw ValidationError("rotation angle must be finite");
    std::uint64_t seen = (1ull << g.target);
    if (g.kind == GateKind::Swap)
        seen |= (1ull << g.target2);
    for (const auto &c : g.controls) {
        check_index(c.qubit, "control");
        if (seen & (1ull << c.qubit))
            throw ValidationError("control and target sets must be disjoint");
        seen |= (1ull << c.qubit);
    }
}

} // namespace qfourier
