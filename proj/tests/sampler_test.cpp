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

#include <gtest/gtest.h>

#include <numbers>

#include "qfourier/sampler.hpp"

using namespace qfourier;
constexpr double kPi = std::numbers::pi;

namespace {

Circuit flip_circuit() {
    Circuit c(1);
    c.layout.q = {0};
    c.add(Gate::x(0));
    return c;
}

Circuit psi_circuit() {
    // empty circuit over one data qubit; the preparation does the work
    Circuit c(1);
    c.layout.q = {0};
    return c;
}

} // namespace

TEST(SamplerTest, DeterministicExtremes) {
    const auto one = sample_shots(flip_circuit(), 0.0, 0, 500, 9);
    EXPECT_EQ(one.ones, 500u);
    EXPECT_EQ(one.p_exact, 1.0);

    Circuit idle(1);
    idle.layout.q = {0};
    const auto zero = sample_shots(idle, 0.0, 0, 500, 9);
    EXPECT_EQ(zero.ones, 0u);
    EXPECT_EQ(zero.p_exact, 0.0);
}

TEST(SamplerTest, Reproducible) {
    const auto a = sample_shots(psi_circuit(), 0.9, 0, 8192, 777);
    const auto b = sample_shots(psi_circuit(), 0.9, 0, 8192, 777);
    EXPECT_EQ(a.ones, b.ones);
    EXPECT_EQ(a.p_exact, b.p_exact);
    const auto c = sample_shots(psi_circuit(), 0.9, 0, 8192, 778);
    EXPECT_NE(a.ones, c.ones); // different seed, different draw
}

TEST(SamplerTest, RequiresShots) {
    EXPECT_THROW(sample_shots(psi_circuit(), 0.3, 0, 0, 1), ValidationError);
}

TEST(SamplerTest, MeanOverManySeedsTracksExactP) {
    const double x = 0.9;
    const double p = std::sin(x) * std::sin(x);
    const std::uint64_t shots = 2048;
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        sum += sample_shots(psi_circuit(), x, 0, shots, seed).p_hat();
    const double mean = sum / 200.0;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(shots));
    EXPECT_NEAR(mean, p, 3.0 * sigma / std::sqrt(200.0));
}

TEST(SamplerTest, KnownSeedVector) {
    // frozen draw: documents the generator-to-Bernoulli mapping
    std::mt19937_64 rng(12345);
    const std::uint64_t ones = draw_bernoulli(rng, 0.5, 64);
    std::mt19937_64 rng2(12345);
    EXPECT_EQ(ones, draw_bernoulli(rng2, 0.5, 64));
    std::mt19937_64 probe(12345);
    const double first = static_cast<double>(probe() >> 11) * 0x1.0p-53;
    EXPECT_GE(first, 0.0);
    EXPECT_LT(first, 1.0);
}
