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

/// Seeded Bernoulli sampling of the terminal-qubit statistic. The circuit is
/// simulated once to get the exact marginal, then shots are drawn from
/// mt19937_64 (seeded directly with the given value); each draw maps the
/// generator's top 53 bits to a uniform in [0,1) and compares against p.
/// Identical (circuit, x, shots, seed) give byte-identical records on every
/// platform, since both the generator sequence and the mapping are fixed.

#pragma once

#include <cstdint>
#include <random>

#include "qfourier/compiler.hpp"

namespace qfourier {

struct ShotRecord {
    double x = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t ones = 0;
    std::uint64_t seed = 0;
    double p_exact = 0.0;

    double p_hat() const {
        return shots ? static_cast<double>(ones) / static_cast<double>(shots)
                     : 0.0;
    }
};

inline std::uint64_t draw_bernoulli(std::mt19937_64 &rng, double p,
                                    std::uint64_t shots) {
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        ones += (u < p) ? 1 : 0;
    }
    return ones;
}

/// Samples a circuit applied to an explicitly prepared input state.
inline ShotRecord sample_shots_on(const Circuit &circuit, State input, double x,
                                  int qubit, std::uint64_t shots,
                                  std::uint64_t seed) {
    if (shots < 1)
        throw ValidationError("shots must be >= 1");
    const State final_state = run(circuit, std::move(input));
    ShotRecord rec;
    rec.x = x;
    rec.shots = shots;
    rec.seed = seed;
    rec.p_exact = prob_of_outcome(final_state, qubit, 1);
    std::mt19937_64 rng(seed);
    rec.ones = draw_bernoulli(rng, rec.p_exact, shots);
    return rec;
}

/// Standard entry point: data qubits loaded with |psi(x)>, everything else
/// at |0>.
inline ShotRecord sample_shots(const Circuit &circuit, double x, int qubit,
                               std::uint64_t shots, std::uint64_t seed) {
    return sample_shots_on(circuit, prepare_input(circuit, x), x, qubit, shots,
                           seed);
}

} // namespace qfourier
