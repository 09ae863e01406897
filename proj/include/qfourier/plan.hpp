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
#include <numbers>
#include <vector>

#include "qfourier/circuit.hpp"
#include "qfourier/series.hpp"

namespace qfourier {

/// Phase at which a rotated input reads out: <1| Ry(theta) |psi(x)> equals
/// cos(x - phase) with phase = pi/2 - theta/2. This is the bridge between
/// gate angles and the per-link chain phases.
inline double readout_phase(double theta) {
    return std::numbers::pi / 2.0 - theta / 2.0;
}
inline double theta_for_readout_phase(double phase) {
    return std::numbers::pi - 2.0 * phase;
}

/// The two rotation angles of one chain link: applied to the link's target
/// when the previous qubit reads |0> resp. |1>.
struct LinkAngles {
    double theta_on_zero = 0.0;
    double theta_on_one = 0.0;

    double w1() const { return readout_phase(theta_on_zero); }
    double v1() const { return readout_phase(theta_on_one); }
};

/// Link phase from the two readout phases (the arctan2 form); range (-pi, pi].
inline double link_beta(double w1, double v1) {
    return std::atan2(std::sin(2 * v1) - std::sin(2 * w1),
                      std::cos(2 * v1) - std::cos(2 * w1));
}

/// Amplitude factor |sin(v1 - w1)| the link contributes to the chain.
inline double link_bfactor(double w1, double v1) {
    return std::abs(std::sin(v1 - w1));
}

/// One weighted chain of the compiled circuit.
///
/// beta[0] is the head phase (equal to twice the head readout phase); beta[k-1]
/// for k >= 2 is the phase of link k. links[k-2] holds the gate pair of link k.
/// alpha = 1/2 * prod_k |sin(v1^k - w1^k)| is the chain amplitude; for n = 1 it
/// is exactly 1/2.
struct SlotSpec {
    int n = 1;
    double gamma = 0.0;
    int sign = 1;
    std::vector<double> beta;
    double head_theta = 0.0;
    std::vector<LinkAngles> links;
    double alpha = 0.5;
};

inline double slot_alpha(const SlotSpec &slot) {
    double a = 0.5;
    for (const auto &link : slot.links)
        a *= link_bfactor(link.w1(), link.v1());
    return a;
}

/// Output of the compiler: everything needed to rebuild the circuit of the
/// whole encoder and to evaluate its exact readout probability.
struct CompiledPlan {
    double scale_c = 0.0; // the constant C with |C * F_N| <= 1/2
    double residual_weight = 0.0;
    std::vector<SlotSpec> slots; // ascending n
    RegisterLayout layout;
    FourierSeries target; // canonical-form copy of the encoded series

    double total_weight() const {
        double s = residual_weight;
        for (const auto &slot : slots)
            s += slot.gamma;
        return s;
    }
};

} // namespace qfourier
