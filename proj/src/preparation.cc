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

#include "gkp/preparation.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {
namespace {

constexpr double kPi = std::numbers::pi;

ModeComb initial_packet(double width) {
    ModeComb c(width);
    c.add(1.0, 0.0);
    return c;
}

RoundSetting checked_setting(const PhaseSchedule& schedule, int round, std::span<const int> prior) {
    RoundSetting s = schedule(round, prior);
    if (!std::isfinite(s.displacement) || !std::isfinite(s.phase)) {
        throw std::invalid_argument("codeword preparation: schedule produced a non-finite setting");
    }
    return s;
}

void check_run_args(int rounds, const PhaseSchedule& schedule, double initial_width) {
    if (rounds < 1) throw std::invalid_argument("codeword preparation: rounds must be at least 1");
    if (!schedule) throw std::invalid_argument("codeword preparation: missing schedule");
    if (!(initial_width > 0.0)) throw std::invalid_argument("codeword preparation: width must be positive");
}

struct RoundOutput {
    BranchMeasurement measurement;
    int outcome;
};

// One round; `pick` maps the pre-measurement hybrid state to an outcome.
template <typename Pick>
CodewordRun run_rounds(int rounds, const PhaseSchedule& schedule, double initial_width, Pick pick) {
    check_run_args(rounds, schedule, initial_width);
    const double r = 1.0 / std::numbers::sqrt2;
    ModeComb comb = initial_packet(initial_width);
    std::vector<int> outcomes;
    double probability = 1.0;
    for (int k = 1; k <= rounds; ++k) {
        RoundSetting setting = checked_setting(schedule, k, outcomes);
        HybridState h = HybridState::product(r, r, comb);
        h = controlled_displacement(h, setting.displacement);
        h = qubit_gate(h, gates::rz(setting.phase));
        h = qubit_gate(h, gates::hadamard());
        int m = pick(h, k);
        BranchMeasurement meas = measure_qubit_z(h, m);
        probability *= meas.probability;
        outcomes.push_back(m);
        comb = std::move(meas.post);
    }
    CodewordFit fit = fit_standard_form(comb);
    return CodewordRun{std::move(comb), std::move(outcomes), probability, fit};
}

double diagonal_phase(const Mat2& u) {
    if (std::abs(u[1]) > 1e-14 || std::abs(u[2]) > 1e-14) {
        throw std::invalid_argument("prepare_pi8_from_zero: rotation must be diagonal");
    }
    return std::arg(u[3] / u[0]);
}

bool has_center(const ModeComb& c, double x) {
    auto ps = c.packets();
    auto it = std::lower_bound(ps.begin(), ps.end(), x - ModeComb::kMergeTolerance,
                               [](const GaussianWavepacket& p, double v) { return p.center < v; });
    return it != ps.end() && std::abs(it->center - x) <= ModeComb::kMergeTolerance;
}

Pi8Result finish_pi8(const ModeComb& input, const HybridState& h, int outcome, const Mat2& z_rotation) {
    BranchMeasurement meas = measure_qubit_z(h, outcome);
    ModeComb out = meas.post;
    if (outcome == 1) {
        // Logical Z frame update on the displaced half of the superposition.
        const ModeComb displaced = input.shifted(std::numbers::sqrt2 * kLogicalShiftDisplacement);
        ModeComb fixed(out.width());
        for (const auto& p : out.packets()) {
            bool from_shift = has_center(displaced, p.center);
            bool from_input = has_center(input, p.center);
            if (from_shift && from_input) {
                throw std::invalid_argument("prepare_pi8_from_zero: input packets collide with their logical shift");
            }
            fixed.add(from_shift ? -p.amplitude : p.amplitude, p.center);
        }
        out = std::move(fixed);
    }
    ModeComb target = pi8_target(input, z_rotation);
    double overlap = std::abs(comb_inner_product(target, out)) / out.norm();
    return Pi8Result{std::move(out), outcome, meas.probability, overlap};
}

HybridState pi8_circuit(const ModeComb& input, const Mat2& z_rotation) {
    if (std::abs(input.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("prepare_pi8_from_zero: input comb must be normalized");
    }
    diagonal_phase(z_rotation);
    const double r = 1.0 / std::numbers::sqrt2;
    HybridState h = HybridState::product(r, r, input);
    h = controlled_displacement(h, kLogicalShiftDisplacement);
    h = qubit_gate(h, z_rotation);
    return qubit_gate(h, gates::hadamard());
}

}  // namespace

PhaseSchedule default_schedule() {
    return [](int round, std::span<const int> prior) {
        double phi = 0.0;
        for (int i = 1; i < round; ++i) {
            if (prior[static_cast<std::size_t>(i - 1)] == 1) phi -= kPi * std::ldexp(1.0, -(round - i));
        }
        return RoundSetting{std::sqrt(2.0 * kPi), phi};
    };
}

PhaseSchedule fixed_schedule(double displacement, double phase) {
    return [=](int, std::span<const int>) { return RoundSetting{displacement, phase}; };
}

double default_initial_width(int rounds) {
    if (rounds < 1) throw std::invalid_argument("default_initial_width: rounds must be at least 1");
    return std::sqrt(1.0 / (2.0 * kPi * rounds));
}

CodewordFit fit_standard_form(const ModeComb& comb, double theta_tol) {
    CodewordFit fit{false, 0.0, 0.0, LogicalLabel::zero, 0.0};
    double wsum = 0.0;
    double xsum = 0.0;
    for (const auto& p : comb.packets()) {
        double w = std::norm(p.amplitude);
        wsum += w;
        xsum += w * p.center;
    }
    if (!(wsum > 0.0)) return fit;
    fit.center = xsum / wsum;

    // Weighted least squares for y = c0 + c1 * t with t = (x - center)^2, y = log|a|.
    double sw = 0, st = 0, sy = 0, stt = 0, sty = 0;
    for (const auto& p : comb.packets()) {
        double w = std::norm(p.amplitude);
        if (w <= 0.0) continue;
        double t = (p.center - fit.center) * (p.center - fit.center);
        double y = 0.5 * std::log(w);
        sw += w;
        st += w * t;
        sy += w * y;
        stt += w * t * t;
        sty += w * t * y;
    }
    double det = sw * stt - st * st;
    if (!(det > 1e-300 * sw * stt)) return fit;
    // Standard form: log|a| = -sigma^2 x^2 / (1 - 4 sigma^4) + const.
    const double kappa = -(sw * sty - st * sy) / det;
    if (!(kappa > 0.0)) return fit;
    fit.sigma2 = 2.0 * kappa / (1.0 + std::sqrt(1.0 + 16.0 * kappa * kappa));
    if (!(fit.sigma2 >= kMinFitSigma2 && fit.sigma2 < 0.5)) return fit;

    SqueezingParam s(fit.sigma2);
    const double comb_norm = comb.norm();
    for (LogicalLabel label : {LogicalLabel::zero, LogicalLabel::one}) {
        ModeComb ref = position_wavefunction(s, label, default_s_cut(s), theta_tol).shifted(fit.center);
        double ov = std::abs(comb_overlap_any_width(ref, comb)) / (ref.norm() * comb_norm);
        if (ov > fit.overlap) {
            fit.overlap = ov;
            fit.label = label;
        }
    }
    fit.valid = true;
    return fit;
}

CodewordRun run_codeword_preparation(int rounds, const PhaseSchedule& schedule, double initial_width,
                                     std::span<const int> outcomes) {
    if (static_cast<int>(outcomes.size()) != rounds) {
        throw std::invalid_argument("codeword preparation: need one forced outcome per round");
    }
    for (int m : outcomes) {
        if (m != 0 && m != 1) throw std::invalid_argument("codeword preparation: outcomes must be bits");
    }
    return run_rounds(rounds, schedule, initial_width,
                      [&](const HybridState&, int k) { return outcomes[static_cast<std::size_t>(k - 1)]; });
}

CodewordRun run_codeword_preparation(int rounds, const PhaseSchedule& schedule, double initial_width,
                                     std::mt19937_64& rng) {
    return run_rounds(rounds, schedule, initial_width, [&](const HybridState& h, int) {
        double n0 = h.branch0().norm();
        double p0 = n0 * n0 / (h.norm() * h.norm());
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p0 ? 0 : 1;
    });
}

CodewordRun best_codeword_branch(int rounds, const PhaseSchedule& schedule, double initial_width) {
    check_run_args(rounds, schedule, initial_width);
    if (rounds > 20) throw std::invalid_argument("best_codeword_branch: too many rounds to enumerate");
    std::optional<CodewordRun> best;
    std::vector<int> outcomes(static_cast<std::size_t>(rounds));
    for (unsigned long bits = 0; bits < (1ul << rounds); ++bits) {
        for (int k = 0; k < rounds; ++k) outcomes[static_cast<std::size_t>(k)] = static_cast<int>((bits >> k) & 1u);
        try {
            CodewordRun run = run_codeword_preparation(rounds, schedule, initial_width, outcomes);
            if (!best || run.fit.overlap > best->fit.overlap) best = std::move(run);
        } catch (const std::domain_error&) {
            // zero-probability branch
        }
    }
    if (!best) throw std::domain_error("best_codeword_branch: every branch has zero probability");
    return std::move(*best);
}

ModeComb pi8_target(const ModeComb& input, const Mat2& z_rotation) {
    const double phi = diagonal_phase(z_rotation);
    ModeComb t(input.width());
    t.add(input);
    t.add(input.shifted(std::numbers::sqrt2 * kLogicalShiftDisplacement), std::polar(1.0, phi));
    return t.normalized();
}

Pi8Result prepare_pi8_from_zero(const ModeComb& input, int outcome, const Mat2& z_rotation) {
    return finish_pi8(input, pi8_circuit(input, z_rotation), outcome, z_rotation);
}

Pi8Result prepare_pi8_from_zero(const ModeComb& input, std::mt19937_64& rng, const Mat2& z_rotation) {
    HybridState h = pi8_circuit(input, z_rotation);
    double n0 = h.branch0().norm();
    int outcome = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < n0 * n0 ? 0 : 1;
    return finish_pi8(input, h, outcome, z_rotation);
}

}  // namespace gkp
