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

/// Turns a Fourier series into a weighted-chain plan and builds the encoder
/// circuit: the weight-loading rotation tree on the slot register, the two
/// mixer Hadamards, one controlled chain per slot, and the readout swap.
///
/// The back-substitution walks harmonics top-down. Slot n removes the
/// residual's harmonic-n component by contributing
///     amp_n * prod_{k=1..n} cos(2x - beta_k),  amp_n = 2^{n-1} a'_n,
/// whose lower harmonics are folded back into the residual before the next
/// slot is chosen. Phases are uniform, beta_k = -b'_n / n; an even chain
/// length would also produce a constant term, so even slots shift one link
/// by pi/2, which cancels the constant exactly while leaving the top
/// harmonic's amplitude untouched.
///
/// Chain construction (the canonical circuit behind each slot): the first
/// mixer qubit selects between the chain and its first-link-swapped twin,
/// whose readout is then inverted. Averaging the two branches cancels every
/// history term of the chain recurrence and leaves
///     P1(q_N) = alpha^n * prod_k cos(2x - beta_k) + 1/2
/// exactly, with alpha^n = 1/2 under the maximal angle choice v1 - w1 = pi/2.
/// Census for n > 2: 4 two-control rotations (the first link's four variants)
/// and 4n - 8 single-control rotations (each later link applies its pair in
/// two half-angle installments, mirroring the four-gate link shape), plus one
/// swap when the chain does not already end on the readout qubit.

#pragma once

#include <algorithm>
#include <optional>

#include "qfourier/oracle.hpp"
#include "qfourier/passes.hpp"
#include "qfourier/plan.hpp"

namespace qfourier {

struct CompileOptions {
    std::optional<double> pin_c;
    int grid_points = 4096;  // feasibility grid for |C * F| <= 1/2
    double drop_tol = 1e-12; // relative threshold below which a harmonic is gone
};

/// Canonical per-link angles for a slot with known beta: v1 - w1 = pi/2 so
/// every amplitude factor is 1, and the head satisfies 2 w1 = beta[0].
inline void angles_from_beta(SlotSpec &slot) {
    if (slot.beta.size() != static_cast<std::size_t>(slot.n))
        throw ValidationError("slot needs one phase per link");
    slot.head_theta = theta_for_readout_phase(slot.beta[0] / 2.0);
    slot.links.clear();
    for (int k = 2; k <= slot.n; ++k) {
        const double beta = slot.beta[static_cast<std::size_t>(k - 1)];
        slot.links.push_back({-beta, -std::numbers::pi - beta});
    }
    slot.alpha = slot_alpha(slot);
}

namespace detail {

inline double wrap_angle(double a) {
    // representative in (-pi, pi]
    a = std::remainder(a, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi)
        a += 2.0 * std::numbers::pi;
    return a;
}

struct RawSlot {
    int n = 0;
    double amp = 0.0; // signed, unit-C: 2^{n-1} a'_n
    std::vector<double> betas;
};

/// Top-down removal of harmonics. The sign of a'_n follows the sign of the
/// residual phasor's cosine part (ties toward negative), and b'_n is taken in
/// (-2*pi, 0] so the uniform phase -b'_n/n lies in [0, 2*pi/n); this is the
/// branch that reproduces the reference coefficient table for the square
/// wave. Any branch choice back-substitutes consistently.
inline std::vector<RawSlot> back_substitute(HarmonicPhasors residual,
                                            double scale, double drop_tol) {
    std::vector<RawSlot> raw;
    int top = 0;
    for (const auto &[m, c] : residual)
        top = std::max(top, m);
    for (int n = top; n >= 1; --n) {
        const auto it = residual.find(n);
        if (it == residual.end())
            continue;
        const std::complex<double> c = it->second;
        const double r = std::abs(c);
        if (r <= drop_tol * scale)
            continue;
        const double phi = std::arg(c);
        double a_prime, b_prime;
        if (c.real() > 1e-9 * r) {
            a_prime = r;
            b_prime = (phi <= 0.0) ? phi : phi - 2.0 * std::numbers::pi;
        } else {
            a_prime = -r;
            b_prime = phi - std::numbers::pi;
        }
        RawSlot slot;
        slot.n = n;
        slot.amp = std::ldexp(a_prime, n - 1);
        if (n % 2 == 1) {
            slot.betas.assign(static_cast<std::size_t>(n), -b_prime / n);
        } else {
            // kill the constant term of an even cosine power: one link sits a
            // quarter turn off while the phase sum stays -b'_n
            const double base = (std::numbers::pi / 2.0 - b_prime) / n;
            slot.betas.assign(static_cast<std::size_t>(n), base);
            slot.betas[1] = base - std::numbers::pi / 2.0;
        }
        for (auto &b : slot.betas)
            b = wrap_angle(b);
        for (const auto &[m, ph] : cosine_product_phasors(slot.betas))
            residual[m] -= slot.amp * ph;
        raw.push_back(std::move(slot));
    }
    for (const auto &[m, c] : residual)
        if (std::abs(c) > 1e-9 * std::max(1.0, scale))
            throw ValidationError("back-substitution left residual harmonic " +
                                  std::to_string(m));
    return raw;
}

} // namespace detail

/// Slot labels of the control register: slots in plan order, then the
/// residual branch. Returned layouts put the register's first qubit on the
/// label's most significant bit.
inline int plan_register_width(std::size_t active_branches) {
    int m = 0;
    while ((std::size_t{1} << m) < active_branches)
        ++m;
    return m;
}

inline CompiledPlan compile_plan(const FourierSeries &series,
                                 const CompileOptions &opt = {}) {
    series.validate();
    double scale = 0.0;
    for (const auto &t : series.terms)
        scale = std::max(scale, std::abs(t.a));
    if (scale <= 0.0)
        throw ValidationError("series has only zero-amplitude terms");

    auto raw = detail::back_substitute(to_phasors(series), scale, opt.drop_tol);
    std::sort(raw.begin(), raw.end(),
              [](const auto &a, const auto &b) { return a.n < b.n; });

    CompiledPlan plan;
    plan.target.period = std::numbers::pi;
    plan.target.terms = series.terms;

    std::vector<double> unit_gamma;
    for (const auto &r : raw) {
        SlotSpec slot;
        slot.n = r.n;
        slot.sign = r.amp >= 0.0 ? 1 : -1;
        slot.beta = r.betas;
        angles_from_beta(slot);
        unit_gamma.push_back(std::abs(r.amp) / slot.alpha);
        plan.slots.push_back(std::move(slot));
    }
    double unit_sum = 0.0;
    for (double g : unit_gamma)
        unit_sum += g;

    double max_f = 0.0;
    for (int i = 0; i < opt.grid_points; ++i) {
        const double x = std::numbers::pi * i / opt.grid_points;
        max_f = std::max(max_f, std::abs(eval_series_canonical(plan.target, x)));
    }

    if (opt.pin_c) {
        const double c = *opt.pin_c;
        if (!(c > 0.0) || !std::isfinite(c))
            throw ValidationError("pinned C must be positive and finite");
        double acc = 0.0;
        for (std::size_t i = raw.size(); i-- > 0;) { // descending n, compile order
            acc += c * unit_gamma[i];
            if (acc > 1.0 + 1e-12)
                throw InfeasibleError(
                    "pinned C infeasible: slot n=" +
                    std::to_string(plan.slots[i].n) +
                    " pushes the total weight past 1 (so far " +
                    std::to_string(acc) + ")");
        }
        if (c * max_f > 0.5 + 1e-12)
            throw InfeasibleError("pinned C infeasible: |C*F| exceeds 1/2");
        plan.scale_c = c;
    } else {
        // largest C with sum(gamma) <= 1 and |C*F| <= 1/2, by bisection
        auto feasible = [&](double c) {
            return c * unit_sum <= 1.0 && c * max_f <= 0.5;
        };
        double hi = 1.0;
        while (feasible(hi))
            hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
        plan.scale_c = lo;
    }

    double total = 0.0;
    for (std::size_t i = 0; i < plan.slots.size(); ++i) {
        plan.slots[i].gamma = plan.scale_c * unit_gamma[i];
        total += plan.slots[i].gamma;
    }
    plan.residual_weight = std::max(0.0, 1.0 - total);
    if (plan.residual_weight < 1e-9)
        plan.residual_weight = 0.0;

    const std::size_t branches =
        plan.slots.size() + (plan.residual_weight > 0.0 ? 1 : 0);
    const int width = plan_register_width(branches);
    int data_qubits = 0;
    for (const auto &slot : plan.slots)
        data_qubits = std::max(data_qubits, slot.n);
    plan.layout = RegisterLayout::contiguous(width, data_qubits);
    return plan;
}

// ---------------------------------------------------------------------------
// Circuit builders
// ---------------------------------------------------------------------------

namespace detail {

/// Recursive amplitude-loading tree: at each node one rotation splits the
/// remaining weight between the two halves of the label range, so acting on
/// |0...0> produces sum_n sqrt(w_n) |n>. Subtrees with zero weight are
/// skipped (their branch amplitude is already zero).
inline void emit_weight_tree(Circuit &out, const std::vector<int> &wires,
                             const std::vector<double> &w, std::size_t begin,
                             std::size_t len, std::size_t level,
                             std::vector<Control> prefix) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < len / 2; ++i)
        lo += w[begin + i];
    for (std::size_t i = len / 2; i < len; ++i)
        hi += w[begin + i];
    if (lo + hi <= 0.0)
        return;
    const double omega = std::atan2(std::sqrt(hi), std::sqrt(lo));
    Gate g = Gate::ry(2.0 * omega, wires[level]);
    g.controls = prefix;
    out.add(std::move(g));
    if (len == 2)
        return;
    if (lo > 0.0) {
        auto p = prefix;
        p.push_back({wires[level], false});
        emit_weight_tree(out, wires, w, begin, len / 2, level + 1, std::move(p));
    }
    if (hi > 0.0) {
        auto p = prefix;
        p.push_back({wires[level], true});
        emit_weight_tree(out, wires, w, begin + len / 2, len / 2, level + 1,
                         std::move(p));
    }
}

inline void validate_weights(const std::vector<double> &gamma) {
    if (gamma.size() < 2 || (gamma.size() & (gamma.size() - 1)) != 0)
        throw ValidationError("weight vector length must be a power of two >= 2");
    double sum = 0.0;
    for (double g : gamma) {
        if (!(g >= -1e-12) || !std::isfinite(g))
            throw ValidationError("weights must be nonnegative");
        sum += g;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ValidationError("weights must sum to 1");
}

} // namespace detail

/// Maps a slot label to the basis index of a register whose first wire is the
/// label's most significant bit (wires are listed most-significant first).
inline std::size_t label_to_basis(std::size_t label, const std::vector<int> &wires) {
    std::size_t basis = 0;
    const std::size_t m = wires.size();
    for (std::size_t i = 0; i < m; ++i)
        if ((label >> (m - 1 - i)) & 1u)
            basis |= std::size_t{1} << wires[i];
    return basis;
}

/// Control pattern selecting one slot label on the given wires.
inline std::vector<Control> label_controls(std::size_t label,
                                           const std::vector<int> &wires) {
    std::vector<Control> cs;
    const std::size_t m = wires.size();
    for (std::size_t i = 0; i < m; ++i)
        cs.push_back({wires[i], ((label >> (m - 1 - i)) & 1u) != 0});
    return cs;
}

/// Standalone weight-loading circuit over ceil(log2(len)) wires 0..M-1.
/// Acting on |0...0> yields sum sqrt(gamma_n)|n> with wire 0 carrying the
/// label's most significant bit.
inline Circuit build_upre(const std::vector<double> &gamma) {
    detail::validate_weights(gamma);
    int m = 0;
    while ((std::size_t{1} << m) < gamma.size())
        ++m;
    Circuit c(m);
    std::vector<int> wires(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        wires[static_cast<std::size_t>(i)] = i;
    detail::emit_weight_tree(c, wires, gamma, 0, gamma.size(), 0, {});
    return c;
}

/// Gates of one chain, without the mixer Hadamards (the assembled circuit
/// applies those once, globally). See the file comment for the construction.
inline std::vector<Gate> build_un_body(const SlotSpec &slot,
                                       const RegisterLayout &layout) {
    if (slot.n < 1)
        throw ValidationError("chain length must be >= 1");
    if (static_cast<std::size_t>(slot.n) > layout.q.size())
        throw ValidationError("slot exceeds layout capacity");
    if (layout.qdprime.size() < 2 && slot.n > 1)
        throw ValidationError("layout needs the two mixer qubits");
    const int out = layout.readout();
    std::vector<Gate> body;
    if (slot.n == 1) {
        body.push_back(Gate::ry(slot.head_theta, out));
        return body;
    }
    const int mixer = layout.qdprime[0];
    auto data = [&](int k) { return layout.q[static_cast<std::size_t>(k - 1)]; };

    body.push_back(Gate::ry(slot.head_theta, data(1)));
    // first link: four two-control rotations; the mixer's |1> branch swaps
    // the pair, which flips the link's sign relative to the |0> branch
    const LinkAngles head_link = slot.links[0];
    body.push_back(Gate::ry(head_link.theta_on_zero, data(2))
                       .controlled(mixer, false)
                       .controlled(data(1), false));
    body.push_back(Gate::ry(head_link.theta_on_one, data(2))
                       .controlled(mixer, false)
                       .controlled(data(1), true));
    body.push_back(Gate::ry(head_link.theta_on_one, data(2))
                       .controlled(mixer, true)
                       .controlled(data(1), false));
    body.push_back(Gate::ry(head_link.theta_on_zero, data(2))
                       .controlled(mixer, true)
                       .controlled(data(1), true));
    // later links: the pair in two half-angle installments (4 rotations per
    // link, matching the four-gate shape of the first link)
    for (int k = 3; k <= slot.n; ++k) {
        const LinkAngles link = slot.links[static_cast<std::size_t>(k - 2)];
        for (int rep = 0; rep < 2; ++rep) {
            body.push_back(Gate::ry(link.theta_on_zero / 2.0, data(k))
                               .controlled(data(k - 1), false));
            body.push_back(Gate::ry(link.theta_on_one / 2.0, data(k))
                               .controlled(data(k - 1), true));
        }
    }
    // invert the readout of the swapped branch
    body.push_back(Gate::x(data(slot.n)).controlled(mixer, true));
    if (data(slot.n) != out)
        body.push_back(Gate::swap(data(slot.n), out));
    return body;
}

/// Standalone chain circuit: mixer Hadamards plus the body. Measuring the
/// readout qubit on input |psi(x)> per data qubit gives
/// alpha^n prod cos(2x - beta_k) + 1/2 exactly.
inline Circuit build_un(const SlotSpec &slot, const RegisterLayout &layout) {
    layout.validate();
    Circuit c(layout.num_qubits(), layout);
    if (slot.n > 1)
        for (int qd : layout.qdprime)
            c.add(Gate::h(qd));
    for (auto &g : build_un_body(slot, layout))
        c.add(std::move(g));
    return c;
}

/// The full encoder: weight tree on the slot register, mixer Hadamards, one
/// label-controlled chain per slot (negative slots get a label-controlled X
/// on the readout), and a label-controlled readout mix for the residual
/// branch. The residual uses a CNOT from the first mixer qubit, which pins
/// the readout probability of that branch at exactly 1/2 for every input.
inline Circuit assemble(const CompiledPlan &plan) {
    plan.layout.validate();
    const std::size_t branches =
        plan.slots.size() + (plan.residual_weight > 0.0 ? 1 : 0);
    if (branches == 0)
        throw ValidationError("plan has no slots");
    const int width = static_cast<int>(plan.layout.qprime.size());
    if (branches > (std::size_t{1} << width))
        throw ValidationError("slot register too small for the plan");
    for (const auto &slot : plan.slots)
        if (static_cast<std::size_t>(slot.n) > plan.layout.q.size())
            throw ValidationError("layout too small for slot n=" +
                                  std::to_string(slot.n));

    Circuit c(plan.layout.num_qubits(), plan.layout);
    if (width > 0) {
        std::vector<double> weights(std::size_t{1} << width, 0.0);
        for (std::size_t i = 0; i < plan.slots.size(); ++i)
            weights[i] = plan.slots[i].gamma;
        if (plan.residual_weight > 0.0)
            weights[plan.slots.size()] = plan.residual_weight;
        // weights were built from a normalized budget; tolerate C rounding
        double sum = 0.0;
        for (double w : weights)
            sum += w;
        if (std::abs(sum - 1.0) > 1e-9)
            throw ValidationError("plan weights do not sum to 1");
        detail::emit_weight_tree(c, plan.layout.qprime, weights, 0,
                                 weights.size(), 0, {});
    }
    for (int qd : plan.layout.qdprime)
        c.add(Gate::h(qd));

    const int out = plan.layout.readout();
    for (std::size_t i = 0; i < plan.slots.size(); ++i) {
        const auto pattern = label_controls(i, plan.layout.qprime);
        for (auto g : build_un_body(plan.slots[i], plan.layout)) {
            g.controlled(pattern);
            c.add(std::move(g));
        }
        if (plan.slots[i].sign < 0)
            c.add(Gate::x(out).controlled(pattern));
    }
    if (plan.residual_weight > 0.0) {
        const auto pattern = label_controls(plan.slots.size(), plan.layout.qprime);
        c.add(Gate::x(out)
                  .controlled(plan.layout.qdprime[0], true)
                  .controlled(pattern));
    }
    return c;
}

/// Input state of the encoder: slot and mixer registers at |0>, every data
/// qubit loaded with cos(x)|0> + sin(x)|1>.
inline State prepare_input(const Circuit &circuit, double x) {
    State st(circuit.num_qubits);
    for (int q : circuit.layout.q)
        prepare_psi_x(st, q, x);
    return st;
}

} // namespace qfourier
