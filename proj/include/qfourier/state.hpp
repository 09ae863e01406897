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

/// Dense statevector over 2^n basis states. Qubit 0 is the least-significant
/// bit of the basis index. Gate application walks amplitude pairs whose
/// control bits match the declared polarities; everything is sequential and
/// bit-reproducible.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qfourier/gate.hpp"

namespace qfourier {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24; // desk-scale cap

class State {
  public:
    /// |0...0>
    explicit State(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits)
            throw ValidationError("qubit count must be in [1, " +
                                  std::to_string(kMaxQubits) + "], got " +
                                  std::to_string(num_qubits));
        amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
        amps_[0] = 1.0;
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    std::vector<Amplitude> &amplitudes() { return amps_; }
    Amplitude amplitude(std::size_t basis) const { return amps_[basis]; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto &a : amps_)
            s += std::norm(a);
        return s;
    }

  private:
    int num_qubits_;
    std::vector<Amplitude> amps_;
};

inline State new_state(int num_qubits) { return State(num_qubits); }

namespace detail {

/// kind + angle -> real 2x2 matrix, row-major.
inline void unitary2(GateKind kind, double angle, double m[2][2]) {
    switch (kind) {
    case GateKind::Ry: {
        const double c = std::cos(angle / 2), s = std::sin(angle / 2);
        m[0][0] = c;
        m[0][1] = -s;
        m[1][0] = s;
        m[1][1] = c;
        return;
    }
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        m[0][0] = r;
        m[0][1] = r;
        m[1][0] = r;
        m[1][1] = -r;
        return;
    }
    case GateKind::X:
        m[0][0] = 0;
        m[0][1] = 1;
        m[1][0] = 1;
        m[1][1] = 0;
        return;
    case GateKind::Swap:
        break;
    }
    m[0][0] = 1;
    m[0][1] = 0;
    m[1][0] = 0;
    m[1][1] = 1;
}

inline bool controls_match(std::size_t basis, const std::vector<Control> &cs) {
    for (const auto &c : cs) {
        const bool bit = (basis >> c.qubit) & 1u;
        if (bit != c.on_one)
            return false;
    }
    return true;
}

} // namespace detail

/// Applies the gate in place. Norm is preserved; unsatisfied controls make
/// the call a no-op on the affected pairs.
inline void apply_gate(State &state, const Gate &g) {
    validate_gate(g, state.num_qubits());
    auto &amps = state.amplitudes();
    const std::size_t dim = amps.size();

    if (g.kind == GateKind::Swap) {
        const std::size_t ta = std::size_t{1} << g.target;
        const std::size_t tb = std::size_t{1} << g.target2;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & ta) || !(i & tb))
                continue; // visit each pair once: bit a = 0, bit b = 1
            if (!detail::controls_match(i, g.controls))
                continue;
            std::swap(amps[i], amps[i ^ ta ^ tb]);
        }
        return;
    }

    double m[2][2];
    detail::unitary2(g.kind, g.angle, m);
    const std::size_t t = std::size_t{1} << g.target;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & t)
            continue;
        if (!detail::controls_match(i, g.controls))
            continue;
        const std::size_t j = i | t;
        const Amplitude a0 = amps[i], a1 = amps[j];
        amps[i] = m[0][0] * a0 + m[0][1] * a1;
        amps[j] = m[1][0] * a0 + m[1][1] * a1;
    }
}

/// Loads cos(x)|0> + sin(x)|1> onto a qubit that currently holds |0>,
/// realized as Ry(2x).
inline void prepare_psi_x(State &state, int qubit, double x) {
    apply_gate(state, Gate::ry(2.0 * x, qubit));
}

/// Sum of |amplitude|^2 over basis states with the given qubit value.
inline double prob_of_outcome(const State &state, int qubit, int outcome) {
    if (qubit < 0 || qubit >= state.num_qubits())
        throw ValidationError("qubit index out of range: " +
                              std::to_string(qubit));
    if (outcome != 0 && outcome != 1)
        throw ValidationError("outcome must be 0 or 1");
    const std::size_t t = std::size_t{1} << qubit;
    double p = 0.0;
    const auto &amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (((i & t) != 0) == (outcome == 1))
            p += std::norm(amps[i]);
    return p;
}

} // namespace qfourier
