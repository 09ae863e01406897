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

/// Analytic ground truth for everything the circuits are supposed to compute:
/// target evaluation, the exact readout probability of a compiled plan, the
/// per-chain contribution, the chain recurrence with its closed form, and the
/// power-reduction of cosines. None of this touches the simulator.

#pragma once

#include <vector>

#include "qfourier/plan.hpp"
#include "qfourier/series.hpp"

namespace qfourier {

/// F_N(x) = sum a_n cos((2*pi/T) n x + b_n), using the series' own period.
inline double eval_target(const FourierSeries &series, double x) {
    return eval_series(series, x);
}

/// alpha^n * prod_{k=1..n} cos(2x - beta_k) + 1/2 for one chain.
inline double un_contribution(const SlotSpec &slot, double x) {
    double prod = 1.0;
    for (double beta : slot.beta)
        prod *= std::cos(2.0 * x - beta);
    return slot.alpha * prod + 0.5;
}

/// Exact readout probability of the assembled circuit:
/// sum_m sign_m gamma_m alpha^m prod_k cos(2x - beta_k^m) + 1/2.
inline double eval_plan_probability(const CompiledPlan &plan, double x) {
    double p = 0.5;
    for (const auto &slot : plan.slots)
        p += slot.sign * slot.gamma * (un_contribution(slot, x) - 0.5);
    return p;
}

// ---------------------------------------------------------------------------
// Chain recurrence
// ---------------------------------------------------------------------------

/// One chain link for the recurrence, described by its two readout phases.
/// The head of a bare chain has v1 = w1 (no control selects a variant).
struct ChainLink {
    double w1 = 0.0;
    double v1 = 0.0;
};

inline double chain_a(const ChainLink &link, double x) {
    return 0.5 + 0.5 * std::cos(2.0 * x - 2.0 * link.w1);
}
inline double chain_b(const ChainLink &link, double x) {
    return 0.5 * (std::cos(2.0 * x - 2.0 * link.v1) -
                  std::cos(2.0 * x - 2.0 * link.w1));
}

struct ChainStep {
    double a = 0.0;
    double b = 0.0;
    double p1 = 0.0;
};

struct ChainTrace {
    std::vector<ChainStep> steps;
    double final_p1 = 0.0;
};

/// Iterates P1 <- A_k(x) + B_k(x) * P1 over the links, starting from `head`.
inline ChainTrace chain_recurrence(const std::vector<ChainLink> &links, double x,
                                   double head) {
    if (head < 0.0 || head > 1.0)
        throw ValidationError("head probability must lie in [0, 1]");
    ChainTrace trace;
    double p1 = head;
    for (const auto &link : links) {
        const double a = chain_a(link, x);
        const double b = chain_b(link, x);
        p1 = a + b * p1;
        trace.steps.push_back({a, b, p1});
    }
    trace.final_p1 = p1;
    return trace;
}

/// Closed form of the same chain:
/// P1^n = head * prod_k B_k + sum_j A_j prod_{k>j} B_k.
inline double chain_closed_form(const std::vector<ChainLink> &links, double x,
                                double head) {
    const std::size_t n = links.size();
    double p = head;
    for (std::size_t j = 0; j < n; ++j)
        p *= chain_b(links[j], x);
    for (std::size_t j = 0; j < n; ++j) {
        double term = chain_a(links[j], x);
        for (std::size_t k = j + 1; k < n; ++k)
            term *= chain_b(links[k], x);
        p += term;
    }
    return p;
}

/// Merged single-cosine form of B_{k} * . + A-neighbor pairs:
/// eta * cos(2x - zeta) = |sin(v1-w1)| cos(2x - beta) + cos(2x - 2 w1).
/// Kept as an internal identity; the recurrence above is the primary path.
struct MergedLinkForm {
    double eta = 0.0;
    double zeta = 0.0;
};

inline MergedLinkForm merged_link_form(const ChainLink &link) {
    const double s = link_bfactor(link.w1, link.v1);
    const double beta = link_beta(link.w1, link.v1);
    const double cx = s * std::cos(beta) + std::cos(2.0 * link.w1);
    const double sx = s * std::sin(beta) + std::sin(2.0 * link.w1);
    return {std::hypot(cx, sx), std::atan2(sx, cx)};
}

// ---------------------------------------------------------------------------
// Cosine power reduction
// ---------------------------------------------------------------------------

/// Exact harmonic decomposition of amplitude * cos^n(2x - phase):
/// harmonic m in {n, n-2, ...} with coefficient 2^{1-n} C(n, (n-m)/2) and
/// phase -m*phase; an even power additionally produces the constant
/// 2^{-n} C(n, n/2) which is emitted as an n = 0 term (not encodable, but
/// needed for exact bookkeeping).
inline FourierSeries cospower_to_fourier(double amplitude, double phase, int n) {
    if (n < 0)
        throw ValidationError("cosine power must be >= 0");
    FourierSeries out;
    if (n == 0) {
        out.terms.push_back({0, amplitude, 0.0});
        return out;
    }
    // binomials via incremental update to stay exact for n <= ~40
    double binom = 1.0; // C(n, 0)
    const double lead = std::ldexp(1.0, 1 - n);
    for (int j = 0; (n - 2 * j) >= 0; ++j) {
        const int m = n - 2 * j;
        if (j > 0)
            binom = binom * (n - j + 1) / j;
        if (m == 0) {
            out.terms.push_back({0, amplitude * lead * binom / 2.0, 0.0});
        } else {
            out.terms.push_back({m, amplitude * lead * binom, -m * phase});
        }
    }
    return out;
}

} // namespace qfourier
