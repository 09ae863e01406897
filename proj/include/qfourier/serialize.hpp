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

/// JSON file formats (format_version 1).
///
/// Series: {"format_version": 1, "period": number,
///          "terms": [{"n": int, "a": number, "b": number}, ...]}
///
/// Plan:   {"format_version": 1, "C": number, "residual_weight": number,
///          "slots": [{"n": int, "gamma": number, "sign": +-1,
///                     "beta": [...], "theta": [...], "theta_prime": [...]}],
///          "layout": {"qprime": [...], "qdprime": [...], "q": [...]},
///          "target": <series object>}
///
/// theta[0] / theta_prime[0] both hold the head rotation; entries k-1 for
/// k >= 2 hold the link-k pair (control-|0> and control-|1> angles). Doubles
/// round-trip exactly. Slot labels of the control register are implicit:
/// slots in list order, residual branch last.

#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qfourier/plan.hpp"

namespace qfourier {

inline constexpr int kFormatVersion = 1;

inline nlohmann::json to_json(const FourierSeries &s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : s.terms)
        terms.push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
    return {{"format_version", kFormatVersion},
            {"period", s.period},
            {"terms", terms}};
}

inline FourierSeries series_from_json(const nlohmann::json &j) {
    try {
        FourierSeries s;
        if (j.value("format_version", kFormatVersion) != kFormatVersion)
            throw ValidationError("unsupported series format_version");
        s.period = j.at("period").get<double>();
        for (const auto &t : j.at("terms"))
            s.terms.push_back({t.at("n").get<int>(), t.at("a").get<double>(),
                               t.at("b").get<double>()});
        s.validate();
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed series JSON: ") + e.what());
    }
}

inline nlohmann::json to_json(const CompiledPlan &plan) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto &s : plan.slots) {
        nlohmann::json theta = nlohmann::json::array();
        nlohmann::json theta_prime = nlohmann::json::array();
        theta.push_back(s.head_theta);
        theta_prime.push_back(s.head_theta);
        for (const auto &link : s.links) {
            theta.push_back(link.theta_on_zero);
            theta_prime.push_back(link.theta_on_one);
        }
        slots.push_back({{"n", s.n},
                         {"gamma", s.gamma},
                         {"sign", s.sign},
                         {"beta", s.beta},
                         {"theta", theta},
                         {"theta_prime", theta_prime}});
    }
    return {{"format_version", kFormatVersion},
            {"C", plan.scale_c},
            {"residual_weight", plan.residual_weight},
            {"slots", slots},
            {"layout",
             {{"qprime", plan.layout.qprime},
              {"qdprime", plan.layout.qdprime},
              {"q", plan.layout.q}}},
            {"target", to_json(plan.target)}};
}

inline CompiledPlan plan_from_json(const nlohmann::json &j) {
    try {
        if (j.value("format_version", kFormatVersion) != kFormatVersion)
            throw ValidationError("unsupported plan format_version");
        CompiledPlan plan;
        plan.scale_c = j.at("C").get<double>();
        plan.residual_weight = j.at("residual_weight").get<double>();
        for (const auto &js : j.at("slots")) {
            SlotSpec s;
            s.n = js.at("n").get<int>();
            s.gamma = js.at("gamma").get<double>();
            s.sign = js.at("sign").get<int>();
            s.beta = js.at("beta").get<std::vector<double>>();
            const auto theta = js.at("theta").get<std::vector<double>>();
            const auto theta_prime =
                js.at("theta_prime").get<std::vector<double>>();
            if (s.n < 1 || s.beta.size() != static_cast<std::size_t>(s.n) ||
                theta.size() != static_cast<std::size_t>(s.n) ||
                theta_prime.size() != static_cast<std::size_t>(s.n))
                throw ValidationError("slot arrays must have one entry per link");
            if (s.sign != 1 && s.sign != -1)
                throw ValidationError("slot sign must be +-1");
            s.head_theta = theta[0];
            for (int k = 2; k <= s.n; ++k)
                s.links.push_back({theta[static_cast<std::size_t>(k - 1)],
                                   theta_prime[static_cast<std::size_t>(k - 1)]});
            s.alpha = slot_alpha(s);
            plan.slots.push_back(std::move(s));
        }
        plan.layout.qprime = j.at("layout").at("qprime").get<std::vector<int>>();
        plan.layout.qdprime =
            j.at("layout").at("qdprime").get<std::vector<int>>();
        plan.layout.q = j.at("layout").at("q").get<std::vector<int>>();
        plan.layout.validate();
        if (j.contains("target"))
            plan.target = series_from_json(j.at("target"));
        return plan;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed plan JSON: ") + e.what());
    }
}

inline nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write " + path);
    out << text;
}

} // namespace qfourier
