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

/// Decomposition passes over the gate IR. Each pass returns a new circuit
/// whose unitary action is identical (exactly, up to floating-point rounding)
/// and is idempotent.
///
/// expand_multicontrol lowers every gate with more controls than the native
/// set supports to {Ry, H, X, CRy, CCRy, CNOT, SWAP}:
///   - k-controlled Ry (k >= 3): multiplexed-rotation network of CNOTs and
///     plain Ry gates, 3*2^k - 2 gates; bounded by 6*k^2 for the k <= 6 range
///     the assembled circuits produce (kExpansionFactor documents the bound).
///   - k-controlled X (k >= 2): H-conjugation of a (k+1)-controlled phase
///     flip, realized as a (k+1)-controlled Ry(2*pi) onto a borrowed wire
///     (Ry(2*pi) = -I, so the rotation is a pure phase on the fired
///     subspace). Requires one spare qubit outside the gate.
///   - k-controlled H: H = X * Ry(pi/2), so a controlled Ry(pi/2) followed by
///     a controlled X.
///   - k-controlled SWAP: the exchange is conjugated into a single
///     (k+1)-controlled X between the two targets.
/// On-zero controls are realized by conjugating the control wire with X
/// gates; X gates are counted separately in the census so rotation counts
/// stay comparable across polarities.

#pragma once

#include <numbers>
#include <vector>

#include "qfourier/circuit.hpp"

namespace qfourier {

/// Documented constant for the k-controlled-rotation expansion size bound
/// (gate count <= kExpansionFactor * k^2 for k in 3..6).
inline constexpr int kExpansionFactor = 6;

namespace detail {

inline void conjugate_zeros(Circuit &out, const std::vector<Control> &controls) {
    for (const auto &c : controls)
        if (!c.on_one)
            out.add(Gate::x(c.qubit));
}

/// Multiplexed Ry: applies Ry(angles[idx]) to `target` where bit i of `idx`
/// is the value of selector qubit `selectors[i]`. Exact for any angle table
/// because same-axis rotations compose additively.
inline void emit_multiplexed_ry(Circuit &out, const std::vector<int> &selectors,
                                int target, const std::vector<double> &angles) {
    if (selectors.empty()) {
        out.add(Gate::ry(angles[0], target));
        return;
    }
    const int sel = selectors.front();
    const std::vector<int> rest(selectors.begin() + 1, selectors.end());
    std::vector<double> avg(angles.size() / 2), dif(angles.size() / 2);
    for (std::size_t i = 0; i < avg.size(); ++i) {
        avg[i] = (angles[2 * i] + angles[2 * i + 1]) / 2.0;
        dif[i] = (angles[2 * i] - angles[2 * i + 1]) / 2.0;
    }
    emit_multiplexed_ry(out, rest, target, avg);
    out.add(Gate::x(target).controlled(sel));
    emit_multiplexed_ry(out, rest, target, dif);
    out.add(Gate::x(target).controlled(sel));
}

/// k-controlled Ry with arbitrary polarities via the multiplexor firing on
/// the all-ones selector pattern.
inline void emit_multi_ry(Circuit &out, const Gate &g) {
    conjugate_zeros(out, g.controls);
    std::vector<int> selectors;
    for (const auto &c : g.controls)
        selectors.push_back(c.qubit);
    std::vector<double> angles(std::size_t{1} << selectors.size(), 0.0);
    angles.back() = g.angle;
    emit_multiplexed_ry(out, selectors, g.target, angles);
    conjugate_zeros(out, g.controls);
}

inline int find_borrow(const Gate &g, int num_qubits) {
    for (int q = 0; q < num_qubits; ++q)
        if (!g.involves(q))
            return q;
    throw ValidationError("multi-controlled flip needs a spare qubit");
}

/// Phase flip of the subspace where every listed qubit is |1>, as a
/// multi-controlled Ry(2*pi) onto a borrowed target.
inline void emit_phase_flip(Circuit &out, const std::vector<int> &ones,
                            int borrow) {
    std::vector<double> angles(std::size_t{1} << ones.size(), 0.0);
    angles.back() = 2.0 * std::numbers::pi;
    emit_multiplexed_ry(out, ones, borrow, angles);
}

/// k-controlled X (k >= 2): H(t) * [phase flip on controls+t] * H(t).
inline void emit_multi_x(Circuit &out, const Gate &g, int num_qubits) {
    const int borrow = find_borrow(g, num_qubits);
    conjugate_zeros(out, g.controls);
    std::vector<int> ones;
    for (const auto &c : g.controls)
        ones.push_back(c.qubit);
    ones.push_back(g.target);
    out.add(Gate::h(g.target));
    emit_phase_flip(out, ones, borrow);
    out.add(Gate::h(g.target));
    conjugate_zeros(out, g.controls);
}

inline void emit_controlled_x_any(Circuit &out, Gate g, int num_qubits) {
    if (g.num_controls() <= 1)
        out.add(std::move(g));
    else
        emit_multi_x(out, g, num_qubits);
}

/// Controlled swap: CX(b->a), (controls+a)-controlled X on b, CX(b->a).
inline void emit_multi_swap(Circuit &out, const Gate &g, int num_qubits) {
    const int a = g.target, b = g.target2;
    out.add(Gate::x(a).controlled(b));
    Gate mid = Gate::x(b);
    mid.controls = g.controls;
    mid.controlled(a);
    emit_controlled_x_any(out, std::move(mid), num_qubits);
    out.add(Gate::x(a).controlled(b));
}

} // namespace detail

/// Rewrites every gate outside {Ry<=2 controls, X<=1, H, SWAP (uncontrolled)}
/// into that set. Unitary action is preserved exactly.
inline Circuit expand_multicontrol(const Circuit &in) {
    Circuit out(in.num_qubits, in.layout);
    for (const auto &g : in.gates) {
        switch (g.kind) {
        case GateKind::Ry:
            if (g.num_controls() <= 2)
                out.add(g);
            else
                detail::emit_multi_ry(out, g);
            break;
        case GateKind::X:
            detail::emit_controlled_x_any(out, g, in.num_qubits);
            break;
        case GateKind::H:
            if (g.num_controls() == 0) {
                out.add(g);
            } else {
                // H = X * Ry(pi/2): rotation first, then the flip
                Gate rot = Gate::ry(std::numbers::pi / 2.0, g.target);
                rot.controls = g.controls;
                if (rot.num_controls() <= 2)
                    out.add(std::move(rot));
                else
                    detail::emit_multi_ry(out, rot);
                Gate flip = Gate::x(g.target);
                flip.controls = g.controls;
                detail::emit_controlled_x_any(out, std::move(flip),
                                              in.num_qubits);
            }
            break;
        case GateKind::Swap:
            if (g.num_controls() == 0)
                out.add(g);
            else
                detail::emit_multi_swap(out, g, in.num_qubits);
            break;
        }
    }
    return out;
}

/// Replaces every two-control Ry by 2 CNOT + 3 CRy (plus X conjugation for
/// on-zero polarities). Gates with three or more controls pass through
/// untouched; run expand_multicontrol first for a full lowering.
inline Circuit decompose_ccry(const Circuit &in) {
    Circuit out(in.num_qubits, in.layout);
    for (const auto &g : in.gates) {
        if (g.kind != GateKind::Ry || g.num_controls() != 2) {
            out.add(g);
            continue;
        }
        detail::conjugate_zeros(out, g.controls);
        const int a = g.controls[0].qubit;
        const int b = g.controls[1].qubit;
        const int t = g.target;
        const double half = g.angle / 2.0;
        out.add(Gate::ry(half, t).controlled(b));
        out.add(Gate::x(b).controlled(a));
        out.add(Gate::ry(-half, t).controlled(b));
        out.add(Gate::x(b).controlled(a));
        out.add(Gate::ry(half, t).controlled(a));
        detail::conjugate_zeros(out, g.controls);
    }
    return out;
}

/// Rewrites remaining on-zero controls as X-conjugated on-one controls.
inline Circuit positive_polarity(const Circuit &in) {
    Circuit out(in.num_qubits, in.layout);
    for (const auto &g : in.gates) {
        bool any_zero = false;
        for (const auto &c : g.controls)
            any_zero = any_zero || !c.on_one;
        if (!any_zero) {
            out.add(g);
            continue;
        }
        detail::conjugate_zeros(out, g.controls);
        Gate flipped = g;
        for (auto &c : flipped.controls)
            c.on_one = true;
        out.add(std::move(flipped));
        detail::conjugate_zeros(out, g.controls);
    }
    return out;
}

/// SWAP -> 3 CNOT, for exports whose gate set has no native swap.
inline Circuit decompose_swaps(const Circuit &in) {
    Circuit out(in.num_qubits, in.layout);
    for (const auto &g : in.gates) {
        if (g.kind != GateKind::Swap) {
            out.add(g);
            continue;
        }
        if (!g.controls.empty())
            throw ValidationError("run expand_multicontrol before swap lowering");
        out.add(Gate::x(g.target2).controlled(g.target));
        out.add(Gate::x(g.target).controlled(g.target2));
        out.add(Gate::x(g.target2).controlled(g.target));
    }
    return out;
}

/// Full lowering used for gate accounting and export: first the
/// multi-control expansion, then the two-control rotation decomposition.
inline Circuit lower(const Circuit &in) {
    return decompose_ccry(expand_multicontrol(in));
}

} // namespace qfourier
