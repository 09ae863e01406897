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

#include <cstdio>
#include <string>

#include "qfourier/passes.hpp"

namespace qfourier {

/// Lowers a circuit all the way to {ry, h, x, cx, cry} for OpenQASM 2.0.
inline Circuit lower_for_export(const Circuit &in) {
    return decompose_swaps(positive_polarity(lower(in)));
}

/// OpenQASM 2.0 text, one gate per line, register "q" indexed by the global
/// layout. The input must already be lowered (lower_for_export).
inline std::string export_qasm(const Circuit &circuit) {
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
    char buf[128];
    for (const auto &g : circuit.gates) {
        const int nc = g.num_controls();
        if (g.kind == GateKind::Ry && nc == 0) {
            std::snprintf(buf, sizeof buf, "ry(%.17g) q[%d];\n", g.angle,
                          g.target);
        } else if (g.kind == GateKind::Ry && nc == 1 && g.controls[0].on_one) {
            std::snprintf(buf, sizeof buf, "cry(%.17g) q[%d],q[%d];\n", g.angle,
                          g.controls[0].qubit, g.target);
        } else if (g.kind == GateKind::H && nc == 0) {
            std::snprintf(buf, sizeof buf, "h q[%d];\n", g.target);
        } else if (g.kind == GateKind::X && nc == 0) {
            std::snprintf(buf, sizeof buf, "x q[%d];\n", g.target);
        } else if (g.kind == GateKind::X && nc == 1 && g.controls[0].on_one) {
            std::snprintf(buf, sizeof buf, "cx q[%d],q[%d];\n",
                          g.controls[0].qubit, g.target);
        } else {
            throw ValidationError(
                "circuit not lowered to the {ry, h, x, cx, cry} gate set");
        }
        out += buf;
    }
    return out;
}

} // namespace qfourier
