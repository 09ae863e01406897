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

/// Command-line front end: compile -> sweep/shots/superpose/gatecount/export.
/// CSV output uses a header row, 17 significant digits, '.' decimal
/// separator, LF line endings. Exit codes: 0 success, 2 validation,
/// 3 infeasibility, 1 internal error.

#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfourier/oracle.hpp"
#include "qfourier/qasm.hpp"
#include "qfourier/sampler.hpp"
#include "qfourier/serialize.hpp"
#include "qfourier/superposition.hpp"

namespace qfourier {

namespace cli_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void print_census(std::ostream &os, const char *tag,
                         const GateCensus &c) {
    os << tag << ": total=" << c.total() << " ry=" << c.ry()
       << " cry=" << c.cry() << " ccry=" << c.ccry()
       << " multi-ry=" << c.multi_ry() << " h=" << c.h() << " x=" << c.x()
       << " cnot=" << c.cnot() << " swap=" << c.swap() << "\n";
}

inline CompiledPlan load_plan(const std::string &path) {
    return plan_from_json(read_json_file(path));
}

inline double plan_f_target(const CompiledPlan &plan, double x) {
    if (!plan.target.terms.empty())
        return eval_series_canonical(plan.target, x);
    return (eval_plan_probability(plan, x) - 0.5) / plan.scale_c;
}

struct CsvWriter {
    std::ostringstream text;
    void row(const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            text << (i ? "," : "") << cells[i];
        text << "\n";
    }
};

inline void emit_output(const std::string &path, const std::string &text,
                        std::ostream &fallback) {
    if (path.empty())
        fallback << text;
    else
        write_text_file(path, text);
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string> &args,
                   std::ostream &out = std::cout,
                   std::ostream &err = std::cerr) {
    CLI::App app{"Fourier-series to quantum-circuit compiler and simulator"};
    app.require_subcommand(1);

    // compile
    std::string series_path, plan_path;
    double pin_c = 0.0;
    auto *compile = app.add_subcommand("compile", "compile a series into a plan");
    compile->add_option("--series", series_path, "input series JSON")->required();
    compile->add_option("--out", plan_path, "output plan JSON")->required();
    auto *pin_opt = compile->add_option("--pin-c", pin_c, "pin the scaling constant");

    // sweep
    std::string sweep_plan, sweep_out;
    double xmin = 0.0, xmax = 0.0;
    int steps = 0;
    auto *sweep = app.add_subcommand("sweep", "exact probability sweep over x");
    sweep->add_option("--plan", sweep_plan)->required();
    sweep->add_option("--xmin", xmin)->required();
    sweep->add_option("--xmax", xmax)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--out", sweep_out, "output CSV (default stdout)");

    // shots
    std::string shots_plan;
    double shots_x = 0.0;
    std::uint64_t shots_n = 0, shots_seed = 0;
    auto *shots = app.add_subcommand("shots", "seeded shot sampling at one x");
    shots->add_option("--plan", shots_plan)->required();
    shots->add_option("--x", shots_x)->required();
    shots->add_option("--shots", shots_n)->required();
    shots->add_option("--seed", shots_seed, "PRNG seed (required)")->required();

    // superpose
    double sup_x0 = 0.0, sup_x1 = 0.0, sup_theta = std::numbers::pi;
    std::string sup_var, sup_out;
    int sup_steps = 0;
    std::uint64_t sup_shots = 0, sup_seed = 0;
    auto *superpose =
        app.add_subcommand("superpose", "two-branch superposed-input experiment");
    superpose->add_option("--x0", sup_x0)->required();
    superpose->add_option("--x1", sup_x1)->required();
    superpose->add_option("--sweep", sup_var, "sweep variable: x1 or theta")
        ->required();
    superpose->add_option("--steps", sup_steps)->required();
    superpose->add_option("--theta", sup_theta,
                          "fixed theta_sup for the x1 sweep (default pi)");
    auto *sup_shots_opt = superpose->add_option("--shots", sup_shots);
    auto *sup_seed_opt = superpose->add_option("--seed", sup_seed);
    superpose->add_option("--out", sup_out, "output CSV (default stdout)");

    // gatecount
    std::string count_plan;
    bool decomposed = false;
    auto *gatecount = app.add_subcommand("gatecount", "gate census of a plan");
    gatecount->add_option("--plan", count_plan)->required();
    gatecount->add_flag("--decomposed", decomposed,
                        "census after full decomposition");

    // export-qasm
    std::string qasm_plan, qasm_out;
    auto *export_qasm_cmd =
        app.add_subcommand("export-qasm", "OpenQASM 2.0 export of a plan");
    export_qasm_cmd->add_option("--plan", qasm_plan)->required();
    export_qasm_cmd->add_option("--out", qasm_out)->required();

    try {
        std::vector<const char *> argv;
        argv.push_back("qfourier");
        for (const auto &a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (compile->parsed()) {
            const auto series = series_from_json(read_json_file(series_path));
            CompileOptions opt;
            if (pin_opt->count())
                opt.pin_c = pin_c;
            const auto plan = compile_plan(series, opt);
            write_text_file(plan_path, to_json(plan).dump(2) + "\n");
            out << "C = " << cli_detail::fmt(plan.scale_c) << "\n";
            out << "residual_weight = " << cli_detail::fmt(plan.residual_weight)
                << "\n";
            out << "slots:\n";
            for (const auto &s : plan.slots)
                out << "  n=" << s.n << " gamma=" << cli_detail::fmt(s.gamma)
                    << " sign=" << (s.sign > 0 ? "+" : "-")
                    << " beta=" << cli_detail::fmt(s.beta[0]) << "\n";
            const auto circuit = assemble(plan);
            cli_detail::print_census(out, "census (IR)", gate_census(circuit));
            const auto lowered = lower(circuit);
            cli_detail::print_census(out, "census (decomposed)",
                                     gate_census(lowered));
            const int n_top = plan.layout.q.empty()
                                  ? 0
                                  : static_cast<int>(plan.layout.q.size());
            const int m = static_cast<int>(plan.layout.qprime.size());
            out << "scale reference: N=" << n_top << " M=" << m
                << " N^2*ceil(log2 N)^2 = "
                << n_top * n_top *
                       plan_register_width(static_cast<std::size_t>(n_top)) *
                       plan_register_width(static_cast<std::size_t>(n_top))
                << ", decomposed total = " << gate_census(lowered).total()
                << "\n";
            return 0;
        }
        if (sweep->parsed()) {
            if (steps < 2)
                throw ValidationError("sweep needs at least 2 steps");
            if (!(xmax > xmin))
                throw ValidationError("sweep needs xmax > xmin");
            const auto plan = cli_detail::load_plan(sweep_plan);
            const auto circuit = assemble(plan);
            const int readout = plan.layout.readout();
            cli_detail::CsvWriter csv;
            csv.row({"x", "p1_sim", "p1_theory", "f_target", "c_f_plus_half"});
            for (int i = 0; i < steps; ++i) {
                const double x = xmin + (xmax - xmin) * i / (steps - 1);
                const State st = run(circuit, prepare_input(circuit, x));
                const double p1_sim = prob_of_outcome(st, readout, 1);
                const double p1_theory = eval_plan_probability(plan, x);
                const double f = cli_detail::plan_f_target(plan, x);
                csv.row({cli_detail::fmt(x), cli_detail::fmt(p1_sim),
                         cli_detail::fmt(p1_theory), cli_detail::fmt(f),
                         cli_detail::fmt(plan.scale_c * f + 0.5)});
            }
            cli_detail::emit_output(sweep_out, csv.text.str(), out);
            return 0;
        }
        if (shots->parsed()) {
            const auto plan = cli_detail::load_plan(shots_plan);
            const auto circuit = assemble(plan);
            const auto rec = sample_shots(circuit, shots_x,
                                          plan.layout.readout(), shots_n,
                                          shots_seed);
            nlohmann::json line = {{"x", rec.x},       {"shots", rec.shots},
                                   {"ones", rec.ones}, {"seed", rec.seed},
                                   {"p_exact", rec.p_exact}};
            out << line.dump() << "\n";
            return 0;
        }
        if (superpose->parsed()) {
            if (sup_steps < 2)
                throw ValidationError("superpose needs at least 2 steps");
            if (sup_var != "x1" && sup_var != "theta")
                throw ValidationError("unknown sweep variable: " + sup_var);
            if (sup_shots_opt->count() != sup_seed_opt->count())
                throw ValidationError("--shots and --seed go together");
            const bool with_shots = sup_shots_opt->count() > 0;
            const auto slot = experiment_slot();
            cli_detail::CsvWriter csv;
            std::vector<std::string> header = {sup_var, "p0_sim", "p0_theory"};
            if (with_shots)
                header.push_back("p0_hat");
            csv.row(header);
            const double lo = 0.0;
            const double hi =
                (sup_var == "theta") ? 2.0 * std::numbers::pi : std::numbers::pi;
            for (int i = 0; i < sup_steps; ++i) {
                const double v = lo + (hi - lo) * i / (sup_steps - 1);
                const double theta = (sup_var == "theta") ? v : sup_theta;
                const double x1 = (sup_var == "x1") ? v : sup_x1;
                const auto circuit =
                    build_superposition_circuit(sup_x0, x1, theta, slot);
                const State st =
                    run(circuit, State(circuit.num_qubits));
                const int readout = circuit.layout.q.back();
                const double p0_sim = prob_of_outcome(st, readout, 0);
                const double p0_th = p0_theory(sup_x0, x1, theta, slot);
                std::vector<std::string> row = {cli_detail::fmt(v),
                                                cli_detail::fmt(p0_sim),
                                                cli_detail::fmt(p0_th)};
                if (with_shots) {
                    const auto rec = sample_shots_on(
                        circuit, State(circuit.num_qubits), v, readout,
                        sup_shots, sup_seed + static_cast<std::uint64_t>(i));
                    row.push_back(cli_detail::fmt(1.0 - rec.p_hat()));
                }
                csv.row(row);
            }
            cli_detail::emit_output(sup_out, csv.text.str(), out);
            return 0;
        }
        if (gatecount->parsed()) {
            const auto plan = cli_detail::load_plan(count_plan);
            auto circuit = assemble(plan);
            cli_detail::print_census(out, "census (IR)", gate_census(circuit));
            if (decomposed)
                cli_detail::print_census(out, "census (decomposed)",
                                         gate_census(lower(circuit)));
            return 0;
        }
        if (export_qasm_cmd->parsed()) {
            const auto plan = cli_detail::load_plan(qasm_plan);
            const auto lowered = lower_for_export(assemble(plan));
            write_text_file(qasm_out, export_qasm(lowered));
            out << "wrote " << qasm_out << " (" << lowered.size() << " gates)\n";
            return 0;
        }
    } catch (const InfeasibleError &e) {
        err << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace qfourier
