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

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "gkp/standard_form.hpp"

namespace gkp {

/// Quarter of the sub-lattice period sqrt(pi)/4, refined four times.
inline const double kDefaultCell = std::sqrt(std::numbers::pi) / 16.0;
inline constexpr int kDefaultGaussOrder = 8;
inline constexpr double kDefaultTailTol = 1e-9;

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Tensor-product Gauss-Legendre rule on square cells tiling
/// [-box_halfwidth, box_halfwidth]^2 (rounded up to a whole number of cells).
struct QuadratureConfig {
    double box_halfwidth;
    double cell;
    int points_per_cell;
    double tail_tol;
};

/// Standard deviation 1 / (2 sigma) of the Gaussian envelope G_{1/(4 sigma^2)}.
double envelope_sigma(SqueezingParam s);

/// Envelope mass outside the square box of half-width `box_halfwidth`.
double envelope_tail_mass(SqueezingParam s, double box_halfwidth);

/// Box just large enough for envelope_tail_mass < tail_tol.
QuadratureConfig default_quadrature(SqueezingParam s, double tail_tol = kDefaultTailTol,
                                    double cell = kDefaultCell, int points_per_cell = kDefaultGaussOrder);

/// Structural checks only: 0 < cell <= sqrt(pi)/2, order >= 1, box and tail_tol
/// positive. Throws ConfigError.
void validate_config(const QuadratureConfig& cfg);
/// Structural checks plus the tail-mass requirement for the given squeezing.
void validate_config(const QuadratureConfig& cfg, SqueezingParam s);

struct WignerIntegrals {
    double abs_integral;  // integral of |W|, the negativity
    double integral;      // integral of W, 1 for a normalized state
};

WignerIntegrals integrate_wigner(const SeparableWigner& w, const QuadratureConfig& cfg);
WignerIntegrals integrate_wigner(const std::function<double(WignerPoint)>& w, const QuadratureConfig& cfg);

enum class ApproxState { zero, h };

double negativity(ApproxState state, SqueezingParam s, const QuadratureConfig& cfg,
                  double theta_tol = kDefaultThetaTol);
double negativity(const SeparableWigner& w, const QuadratureConfig& cfg);
double negativity(const std::function<double(WignerPoint)>& w, const QuadratureConfig& cfg);

struct NegativityRow {
    double db;
    double sigma2;
    double neg_zero;
    double neg_h;
};

/// How each grid point picks its quadrature: default_quadrature with these
/// knobs.
struct SweepPolicy {
    double cell = kDefaultCell;
    int points_per_cell = kDefaultGaussOrder;
    double tail_tol = kDefaultTailTol;
    double theta_tol = kDefaultThetaTol;
};

inline constexpr double kMaxSweepDb = 20.0;

/// One row per squeezing level. Grid must be ascending with values in (0, 20].
std::vector<NegativityRow> negativity_sweep(std::span<const double> db_grid,
                                            const SweepPolicy& policy = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace gkp
