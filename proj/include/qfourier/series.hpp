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

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "qfourier/errors.hpp"

namespace qfourier {

/// One harmonic: a * cos((2*pi/T) * n * x + b).
struct HarmonicTerm {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
};

/// Target series sum_n a_n cos((2*pi/T) n x + b_n). The canonical convention
/// used throughout compilation is T = pi, i.e. terms cos(2 n x + b_n).
struct FourierSeries {
    double period = std::numbers::pi;
    std::vector<HarmonicTerm> terms;

    int max_harmonic() const {
        int n = 0;
        for (const auto &t : terms)
            n = std::max(n, t.n);
        return n;
    }

    void validate() const {
        if (terms.empty())
            throw ValidationError("series has no terms");
        if (!(period > 0.0) || !std::isfinite(period))
            throw ValidationError("series period must be positive and finite");
        std::map<int, int> seen;
        for (const auto &t : terms) {
            if (t.n < 1)
                throw ValidationError("harmonic index must be >= 1");
            if (!std::isfinite(t.a) || !std::isfinite(t.b))
                throw ValidationError("series coefficients must be finite");
            if (seen[t.n]++)
                throw ValidationError("duplicate harmonic index " +
                                      std::to_string(t.n));
        }
    }
};

/// sum a_n cos((2*pi/T) n x + b_n)
inline double eval_series(const FourierSeries &s, double x) {
    const double w = 2.0 * std::numbers::pi / s.period;
    double v = 0.0;
    for (const auto &t : s.terms)
        v += t.a * std::cos(w * t.n * x + t.b);
    return v;
}

/// Same series read in the canonical variable: sum a_n cos(2 n x + b_n).
inline double eval_series_canonical(const FourierSeries &s, double x) {
    double v = 0.0;
    for (const auto &t : s.terms)
        v += t.a * std::cos(2.0 * t.n * x + t.b);
    return v;
}

/// Harmonic content as phasors: term a*cos(2nx+b) <-> c_n = a*e^{ib}.
/// Key 0 holds any constant part (as a real phasor).
using HarmonicPhasors = std::map<int, std::complex<double>>;

inline HarmonicPhasors to_phasors(const FourierSeries &s) {
    HarmonicPhasors ph;
    for (const auto &t : s.terms)
        ph[t.n] += std::polar(t.a, t.b);
    return ph;
}

/// Expands a finite product prod_k cos(2x - beta_k) into harmonic phasors.
/// Exact: each factor contributes (e^{i(2x-beta)} + e^{-i(2x-beta)})/2 and
/// the product is the convolution of those two-sided spectra.
inline HarmonicPhasors cosine_product_phasors(const std::vector<double> &betas) {
    // spectrum over signed harmonics; index shift by the current reach
    std::vector<std::complex<double>> spec(1, 1.0); // harmonic 0 only
    int reach = 0;
    for (double beta : betas) {
        std::vector<std::complex<double>> next(spec.size() + 2, 0.0);
        const std::complex<double> lo = 0.5 * std::polar(1.0, beta);  // e^{-i2x} side
        const std::complex<double> hi = 0.5 * std::polar(1.0, -beta); // e^{+i2x} side
        for (std::size_t i = 0; i < spec.size(); ++i) {
            next[i] += spec[i] * lo;
            next[i + 2] += spec[i] * hi;
        }
        spec = std::move(next);
        ++reach;
    }
    // spec[i] is the coefficient of e^{i*2x*(i-reach)}; fold onto cosines
    HarmonicPhasors out;
    for (int m = 0; m <= reach; ++m) {
        const std::complex<double> c = spec[static_cast<std::size_t>(m + reach)];
        if (m == 0) {
            out[0] = c; // real by symmetry
        } else {
            // a*cos(2mx+b) = Re{a e^{ib} e^{i2mx}}; coefficient of e^{i2mx} is a e^{ib}/2
            out[m] = 2.0 * c;
        }
    }
    return out;
}

/// Fourier front end over the even periodic extension of f on [x1, x2]
/// (period T = 2(x2-x1), reflection about x2). The extension is projected
/// directly onto the canonical family cos(2nx + b):
///     a_n cos(b_n) = (2/T) Int_T F(x) cos(2nx) dx,
///     a_n sin(b_n) = -(2/T) Int_T F(x) sin(2nx) dx,
/// by a composite midpoint rule over one period, so the emitted series keeps
/// the sample variable and already uses the T = pi convention.
inline FourierSeries fourier_from_samples(const std::function<double(double)> &f,
                                          double x1, double x2, int max_harmonic,
                                          int quad_points = 4096) {
    if (!(x2 > x1))
        throw ValidationError("sample interval must satisfy x2 > x1");
    if (max_harmonic < 1)
        throw ValidationError("max harmonic must be >= 1");
    if (quad_points < 2)
        throw ValidationError("too few quadrature points");

    const double span = x2 - x1;
    const double period = 2.0 * span;
    auto extension = [&](double x) {
        double u = std::fmod(x - x1, period);
        if (u < 0)
            u += period;
        const double v = (u <= span) ? (x1 + u) : (x1 + (period - u));
        const double y = f(v);
        if (!std::isfinite(y))
            throw ValidationError("non-finite sample encountered");
        return y;
    };

    FourierSeries out;
    out.period = std::numbers::pi;
    const double h = period / quad_points;
    for (int n = 1; n <= max_harmonic; ++n) {
        double cs = 0.0, sn = 0.0;
        for (int j = 0; j < quad_points; ++j) {
            const double x = x1 + (j + 0.5) * h;
            const double y = extension(x);
            cs += y * std::cos(2.0 * n * x);
            sn += y * std::sin(2.0 * n * x);
        }
        cs *= 2.0 * h / period;
        sn *= 2.0 * h / period;
        const double a = std::hypot(cs, sn);
        const double b = -std::atan2(sn, cs);
        out.terms.push_back({n, a, b});
    }
    return out;
}

} // namespace qfourier
