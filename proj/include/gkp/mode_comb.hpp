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

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gkp {

using cplx = std::complex<double>;

/// Normalized Gaussian packet
///
///     g(q) = (2 pi w^2)^{-1/4} exp(-(q - center)^2 / (4 w^2))
///
/// scaled by `amplitude`. `width` is the standard deviation w of |g|^2.
struct GaussianWavepacket {
    cplx amplitude;
    double center;
    double width;
};

/// Oscillator state written as a finite superposition of equal-width Gaussian
/// packets in the position representation.
///
/// Packets are kept sorted by center; packets whose centers lie within
/// kMergeTolerance of each other are merged by adding amplitudes. The comb may
/// be empty (zero vector), which is how an unpopulated qubit branch of a
/// hybrid state is represented.
class ModeComb {
  public:
    static constexpr double kMergeTolerance = 1e-12;

    explicit ModeComb(double width);
    ModeComb(double width, std::span<const GaussianWavepacket> packets);

    double width() const { return width_; }
    std::span<const GaussianWavepacket> packets() const { return packets_; }
    std::size_t size() const { return packets_.size(); }
    bool empty() const { return packets_.empty(); }

    void add(cplx amplitude, double center);
    void add(const ModeComb& other, cplx scale = 1.0);

    ModeComb scaled(cplx factor) const;
    ModeComb shifted(double offset) const;
    /// Throws std::domain_error for a zero-norm comb.
    ModeComb normalized() const;

    double norm() const;

    /// psi(q) as a function of position.
    cplx evaluate(double q) const;

  private:
    double width_;
    std::vector<GaussianWavepacket> packets_;
};

/// <c1|c2> using the closed-form overlap of equal-width packets,
/// exp(-(x1 - x2)^2 / (8 w^2)). Throws std::invalid_argument on width mismatch.
cplx comb_inner_product(const ModeComb& c1, const ModeComb& c2);

/// <c1|c2> for combs of arbitrary (possibly different) widths.
cplx comb_overlap_any_width(const ModeComb& c1, const ModeComb& c2);

}  // namespace gkp
