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
#include <random>

#include "qfourier/compiler.hpp"
#include "qfourier/oracle.hpp"
#include "test_util.hpp"

using namespace qfourier;
constexpr double kPi = std::numbers::pi;

namespace {

FourierSeries square_wave_series() {
    FourierSeries s;
    for (int n : {1, 3, 5, 7})
        s.terms.push_back({n, 1.0 / n, -kPi / 2});
    return s;
}

/// Bare chain of Fig.-S1 shape: head rotation plus plain link pairs, no
/// mixer qubits. The head link must have v1 = w1 (nothing controls it).
Circuit bare_chain_circuit(const std::vector<ChainLink> &links) {
    const int n = static_cast<int>(links.size());
    Circuit c(n);
    c.add(Gate::ry(theta_for_readout_phase(links[0].w1), 0));
    for (int k = 2; k <= n; ++k) {
        const auto &link = links[static_cast<std::size_t>(k - 1)];
        c.add(Gate::ry(theta_for_readout_phase(link.w1), k - 1)
                  .controlled(k - 2, false));
        c.add(Gate::ry(theta_for_readout_phase(link.v1), k - 1)
                  .controlled(k - 2, true));
    }
    return c;
}

} // namespace

TEST(EvalTargetTest, SquareWaveValues) {
    const FourierSeries s = square_wave_series();
    EXPECT_NEAR(eval_target(s, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(eval_target(s, kPi / 4), 1.0 - 1.0 / 3 + 1.0 / 5 - 1.0 / 7,
                1e-15);
}

TEST(EvalTargetTest, Periodicity) {
    FourierSeries s;
    s.period = 2.5;
    s.terms = {{1, 0.8, 0.3}, {4, -0.2, 1.1}};
    for (double x : {0.0, 0.3, 1.7, 2.2})
        EXPECT_NEAR(eval_target(s, x), eval_target(s, x + s.period), 1e-12);
}

TEST(EvalPlanProbabilityTest, ResidualOnlyPlanIsHalf) {
    CompiledPlan plan;
    plan.scale_c = 0.1;
    plan.residual_weight = 1.0;
    for (double x : {0.0, 0.5, 2.0})
        EXPECT_EQ(eval_plan_probability(plan, x), 0.5);
}

TEST(EvalPlanProbabilityTest, SingleSlotValue) {
    CompiledPlan plan;
    plan.scale_c = 0.25;
    SlotSpec slot;
    slot.n = 1;
    slot.beta = {0.0};
    angles_from_beta(slot);
    slot.gamma = 0.5; // gamma * alpha = 1/4
    plan.slots.push_back(slot);
    plan.residual_weight = 0.5;
    EXPECT_NEAR(eval_plan_probability(plan, 0.0), 0.75, 1e-15);
}

TEST(UnContributionTest, AlignedPhasesPeak) {
    const FourierSeries s = square_wave_series();
    const CompiledPlan plan = compile_plan(s);
    const SlotSpec *slot3 = nullptr;
    for (const auto &slot : plan.slots)
        if (slot.n == 3)
            slot3 = &slot;
    ASSERT_NE(slot3, nullptr);
    // all cosines at their peak, alpha = 1/2 under the canonical angles
    EXPECT_NEAR(un_contribution(*slot3, slot3->beta[0] / 2.0), 1.0, 1e-12);
}

TEST(UnContributionTest, SingleLinkZero) {
    SlotSpec slot;
    slot.n = 1;
    slot.beta = {0.0};
    angles_from_beta(slot);
    EXPECT_NEAR(un_contribution(slot, kPi / 2), 0.0, 1e-15);
}

TEST(UnContributionTest, MatchesStatevectorOnRandomChains) {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> beta_draw(-kPi, kPi);
    std::uniform_int_distribution<int> n_draw(1, 6);
    std::uniform_real_distribution<double> x_draw(0.0, kPi);
    for (int t = 0; t < 50; ++t) {
        SlotSpec slot;
        slot.n = n_draw(rng);
        for (int k = 0; k < slot.n; ++k)
            slot.beta.push_back(beta_draw(rng));
        angles_from_beta(slot);
        const RegisterLayout lay = RegisterLayout::contiguous(0, slot.n);
        const Circuit c = build_un(slot, lay);
        const double x = x_draw(rng);
        State st(c.num_qubits);
        for (int q : lay.q)
            prepare_psi_x(st, q, x);
        const double sim = prob_of_outcome(run(c, st), lay.readout(), 1);
        EXPECT_NEAR(sim, un_contribution(slot, x), 1e-12);
    }
}

TEST(ChainRecurrenceTest, MemorylessWhenPairsEqual) {
    std::vector<ChainLink> links;
    for (int k = 0; k < 4; ++k)
        links.push_back({0.3 * k, 0.3 * k}); // v1 = w1 -> B = 0
    for (double x : {0.1, 0.9, 2.3}) {
        const ChainTrace t0 = chain_recurrence(links, x, 0.0);
        const ChainTrace t1 = chain_recurrence(links, x, 1.0);
        EXPECT_NEAR(t0.final_p1, chain_a(links.back(), x), 1e-15);
        EXPECT_NEAR(t0.final_p1, t1.final_p1, 1e-15);
    }
}

TEST(ChainRecurrenceTest, SingleStepIsHeadTerm) {
    const std::vector<ChainLink> links = {{0.7, 0.7}};
    const double x = 1.3;
    const ChainTrace t = chain_recurrence(links, x, 0.0);
    EXPECT_NEAR(t.final_p1, 0.5 + 0.5 * std::cos(2 * x - 1.4), 1e-15);
}

TEST(ChainRecurrenceTest, RejectsBadHead) {
    EXPECT_THROW(chain_recurrence({}, 0.0, -0.1), ValidationError);
    EXPECT_THROW(chain_recurrence({}, 0.0, 1.1), ValidationError);
}

TEST(ChainRecurrenceTest, ThreeWayAgreement) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-kPi, kPi);
    std::uniform_int_distribution<int> n_draw(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = n_draw(rng);
        std::vector<ChainLink> links;
        const double w_head = d(rng);
        links.push_back({w_head, w_head}); // no control on the head
        for (int k = 1; k < n; ++k)
            links.push_back({d(rng), d(rng)});
        const Circuit circuit = bare_chain_circuit(links);
        for (int j = 0; j < 20; ++j) {
            const double x = d(rng);
            const double rec = chain_recurrence(links, x, 0.5).final_p1;
            const double closed = chain_closed_form(links, x, 0.5);
            EXPECT_NEAR(rec, closed, 1e-12);
            State st(circuit.num_qubits);
            for (int q = 0; q < circuit.num_qubits; ++q)
                prepare_psi_x(st, q, x);
            const double sim =
                prob_of_outcome(run(circuit, st), circuit.num_qubits - 1, 1);
            EXPECT_NEAR(rec, sim, 1e-12);
        }
    }
}

TEST(ChainRecurrenceTest, BFactorization) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-kPi, kPi);
    for (int t = 0; t < 30; ++t) {
        const ChainLink link{d(rng), d(rng)};
        const double s = link_bfactor(link.w1, link.v1);
        const double beta = link_beta(link.w1, link.v1);
        for (int j = 0; j < 64; ++j) {
            const double x = kPi * j / 64;
            EXPECT_NEAR(chain_b(link, x), s * std::cos(2 * x - beta), 1e-12);
        }
    }
}

TEST(ChainRecurrenceTest, MergedFormIdentity) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-kPi, kPi);
    for (int t = 0; t < 30; ++t) {
        const ChainLink link{d(rng), d(rng)};
        const MergedLinkForm m = merged_link_form(link);
        const double s = link_bfactor(link.w1, link.v1);
        const double beta = link_beta(link.w1, link.v1);
        for (int j = 0; j < 32; ++j) {
            const double x = kPi * j / 32;
            const double direct = s * std::cos(2 * x - beta) +
                                  std::cos(2 * x - 2 * link.w1);
            EXPECT_NEAR(m.eta * std::cos(2 * x - m.zeta), direct, 1e-12);
        }
    }
}

TEST(CosPowerTest, CubeIdentity) {
    const FourierSeries s = cospower_to_fourier(1.0, 0.0, 3);
    ASSERT_EQ(s.terms.size(), 2u);
    EXPECT_EQ(s.terms[0].n, 3);
    EXPECT_NEAR(s.terms[0].a, 0.25, 1e-15);
    EXPECT_EQ(s.terms[1].n, 1);
    EXPECT_NEAR(s.terms[1].a, 0.75, 1e-15);
}

TEST(CosPowerTest, PeakValue) {
    // coefficients of cos^5 sum to 1 at the peak
    const FourierSeries s = cospower_to_fourier(1.0, 0.0, 5);
    double sum = 0.0;
    for (const auto &t : s.terms)
        sum += t.a;
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(CosPowerTest, RoundTripEvaluation) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-kPi, kPi);
    for (int n : {1, 2, 3, 4, 6, 7}) {
        const double amp = 0.5 + 0.1 * n;
        const double phase = d(rng);
        const FourierSeries s = cospower_to_fourier(amp, phase, n);
        for (int j = 0; j < 128; ++j) {
            const double x = -kPi + 2 * kPi * j / 128;
            const double direct =
                amp * std::pow(std::cos(2 * x - phase), n);
            EXPECT_NEAR(eval_series_canonical(s, x), direct, 1e-12)
                << "n=" << n;
        }
    }
}

TEST(CosPowerTest, PaperTermsResumToSquareWave) {
    // the four rewritten components recombine into the input harmonics
    struct Term {
        double amp, phase;
        int n;
    };
    const Term terms[] = {{-0.8211, 4.8812, 1},
                          {18.9339, 0.2384, 3},
                          {-15.6030, 0.0046, 5},
                          {-9.1429, 0.6732, 7}};
    HarmonicPhasors sum;
    for (const auto &t : terms)
        for (const auto &h : cospower_to_fourier(t.amp, t.phase, t.n).terms)
            sum[h.n] += std::polar(h.a, h.b);
    for (int n : {1, 3, 5, 7}) {
        const auto c = sum[n];
        EXPECT_NEAR(std::abs(c), 1.0 / n, 2e-3) << "n=" << n;
        EXPECT_NEAR(std::remainder(std::arg(c) + kPi / 2, 2 * kPi), 0.0, 2e-2)
            << "n=" << n;
    }
}
