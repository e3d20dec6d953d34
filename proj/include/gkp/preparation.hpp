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
#include <random>
#include <span>
#include <vector>

#include "gkp/hybrid.hpp"
#include "gkp/standard_form.hpp"

namespace gkp {

/// Controlled-displacement parameter r and qubit Z rotation angle for one round.
struct RoundSetting {
    double displacement;
    double phase;
};

/// Chooses round k's setting (k counted from 1) from the outcomes already seen.
using PhaseSchedule = std::function<RoundSetting(int round, std::span<const int> prior_outcomes)>;

/// r = sqrt(2 pi) every round, i.e. a 2 sqrt(pi) shift (one codeword period),
/// with iterative phase-estimation feedback
///     phi_k = -pi * sum_{i<k} m_i 2^{-(k-i)}.
PhaseSchedule default_schedule();

/// Same (r, phi) every round.
PhaseSchedule fixed_schedule(double displacement, double phase = 0.0);

/// sqrt(1 / (2 pi rounds)): the packet width that matches the envelope a
/// binomial comb reaches after `rounds` unit-period rounds.
double default_initial_width(int rounds);

/// Best-matching standard-form codeword for an arbitrary comb.
struct CodewordFit {
    bool valid;
    double sigma2;      // weighted least-squares envelope fit
    double center;      // |amplitude|^2-weighted mean packet position
    LogicalLabel label; // lattice registration relative to `center`
    double overlap;     // |<ref|comb>| / (|ref| |comb|), 0 when !valid
};

/// Flatter envelopes (about 37 dB and beyond) are reported as invalid fits.
inline constexpr double kMinFitSigma2 = 1e-4;

/// Fits log|a_k| = c - kappa (x_k - center)^2 (weights |a_k|^2), solves
/// kappa = sigma^2 / (1 - 4 sigma^4) for sigma^2, then
/// compares against the standard-form codeword of that sigma^2 translated to
/// `center`, trying both labels.
CodewordFit fit_standard_form(const ModeComb& comb, double theta_tol = kDefaultThetaTol);

struct CodewordRun {
    ModeComb comb;
    std::vector<int> outcomes;
    double probability;  // probability of this outcome string
    CodewordFit fit;
};

/// Repeats {controlled displacement, R_Z(phi), H, Z measurement} on a qubit
/// prepared in |+> each round, starting from a single packet of
/// `initial_width` at the origin. Throws std::invalid_argument for rounds < 1,
/// a missing schedule, or non-finite schedule output.
CodewordRun run_codeword_preparation(int rounds, const PhaseSchedule& schedule, double initial_width,
                                     std::span<const int> outcomes);
CodewordRun run_codeword_preparation(int rounds, const PhaseSchedule& schedule, double initial_width,
                                     std::mt19937_64& rng);

/// Enumerates every outcome string and keeps the one with the largest fit
/// overlap.
CodewordRun best_codeword_branch(int rounds, const PhaseSchedule& schedule, double initial_width);

/// sqrt(pi/2): moves the oscillator by sqrt(pi), one logical X.
inline const double kLogicalShiftDisplacement = std::sqrt(std::numbers::pi / 2.0);

struct Pi8Result {
    ModeComb comb;
    int outcome;
    double probability;
    double target_overlap;  // |<target|comb>| with pi8_target(input, rotation)
};

/// (comb_0 + e^{i phi} comb_1) / norm with comb_0 = input, comb_1 = input
/// moved by sqrt(pi), and phi the relative phase of the diagonal rotation.
ModeComb pi8_target(const ModeComb& input, const Mat2& z_rotation = gates::t());

/// Turns an approximate |0> comb into the matching |pi/8> comb:
/// qubit |+>, controlled displacement by sqrt(pi/2), z_rotation (T), H, Z
/// measurement. Outcome 1 leaves a logical Z error, removed by flipping the
/// sign of every packet that came from the displaced branch.
///
/// Throws std::invalid_argument if input is not normalized or z_rotation is
/// not diagonal.
Pi8Result prepare_pi8_from_zero(const ModeComb& input, int outcome, const Mat2& z_rotation = gates::t());
Pi8Result prepare_pi8_from_zero(const ModeComb& input, std::mt19937_64& rng,
                                const Mat2& z_rotation = gates::t());

}  // namespace gkp
