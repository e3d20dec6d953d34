// Copyright 2026 The gkp-magic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkp/mode_comb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {

ModeComb::ModeComb(double width) : width_(width) {
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw std::invalid_argument("ModeComb: width must be positive and finite");
    }
}

ModeComb::ModeComb(double width, std::span<const GaussianWavepacket> packets) : ModeComb(width) {
    for (const auto& p : packets) {
        if (std::abs(p.width - width) > 1e-12 * width) {
            throw std::invalid_argument("ModeComb: packets must share the comb width");
        }
        add(p.amplitude, p.center);
    }
}

void ModeComb::add(cplx amplitude, double center) {
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()) || !std::isfinite(center)) {
        throw std::invalid_argument("ModeComb: non-finite packet");
    }
    auto it = std::lower_bound(packets_.begin(), packets_.end(), center - kMergeTolerance,
                               [](const GaussianWavepacket& p, double c) { return p.center < c; });
    if (it != packets_.end() && std::abs(it->center - center) <= kMergeTolerance) {
        it->amplitude += amplitude;
        return;
    }
    packets_.insert(it, GaussianWavepacket{amplitude, center, width_});
}

void ModeComb::add(const ModeComb& other, cplx scale) {
    if (std::abs(other.width_ - width_) > 1e-12 * width_) {
        throw std::invalid_argument("ModeComb: width mismatch");
    }
    for (const auto& p : other.packets_) {
        add(scale * p.amplitude, p.center);
    }
}

ModeComb ModeComb::scaled(cplx factor) const {
    ModeComb out = *this;
    for (auto& p : out.packets_) p.amplitude *= factor;
    return out;
}

ModeComb ModeComb::shifted(double offset) const {
    ModeComb out = *this;
    for (auto& p : out.packets_) p.center += offset;
    return out;
}

double ModeComb::norm() const {
    return std::sqrt(std::max(0.0, comb_inner_product(*this, *this).real()));
}

ModeComb ModeComb::normalized() const {
    double n = norm();
    if (!(n > 0.0)) {
        throw std::domain_error("ModeComb: cannot normalize a zero-norm comb");
    }
    return scaled(1.0 / n);
}

cplx ModeComb::evaluate(double q) const {
    const double pref = std::pow(2.0 * std::numbers::pi * width_ * width_, -0.25);
    cplx sum = 0.0;
    for (const auto& p : packets_) {
        double d = q - p.center;
        sum += p.amplitude * std::exp(-d * d / (4.0 * width_ * width_));
    }
    return pref * sum;
}

cplx comb_inner_product(const ModeComb& c1, const ModeComb& c2) {
    if (std::abs(c1.width() - c2.width()) > 1e-12 * c1.width()) {
        throw std::invalid_argument("comb_inner_product: width mismatch");
    }
    const double inv = 1.0 / (8.0 * c1.width() * c1.width());
    cplx sum = 0.0;
    for (const auto& p : c1.packets()) {
        cplx row = 0.0;
        for (const auto& r : c2.packets()) {
            double d = p.center - r.center;
            row += r.amplitude * std::exp(-d * d * inv);
        }
        sum += std::conj(p.amplitude) * row;
    }
    return sum;
}

cplx comb_overlap_any_width(const ModeComb& c1, const ModeComb& c2) {
    const double w1 = c1.width();
    const double w2 = c2.width();
    const double s = w1 * w1 + w2 * w2;
    const double pref = std::sqrt(2.0 * w1 * w2 / s);
    cplx sum = 0.0;
    for (const auto& p : c1.packets()) {
        cplx row = 0.0;
        for (const auto& r : c2.packets()) {
            double d = p.center - r.center;
            row += r.amplitude * std::exp(-d * d / (4.0 * s));
        }
        sum += std::conj(p.amplitude) * row;
    }
    return pref * sum;
}

}  // namespace gkp
