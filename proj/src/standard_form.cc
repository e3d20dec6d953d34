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

#include "gkp/standard_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {
namespace {

constexpr double kPi = std::numbers::pi;

double label_value(LogicalLabel j) { return static_cast<double>(static_cast<int>(j)); }

cplx theta_at(double a, double b, double z, double im_tau, double tol) {
    return theta_stable(ThetaArgs{a, b, cplx(z, 0.0), cplx(0.0, im_tau)}, tol);
}

// Density of the normal distribution with variance 1 / (4 sigma^2).
double envelope_density(double sigma2, double x) {
    return std::sqrt(2.0 * sigma2 / kPi) * std::exp(-2.0 * sigma2 * x * x);
}

}  // namespace

double db_from_sigma2(double sigma2) { return -10.0 * std::log10(2.0 * sigma2); }

double sigma2_from_db(double db) { return 0.5 * std::pow(10.0, -db / 10.0); }

SqueezingParam::SqueezingParam(double sigma2) : sigma2_(sigma2) {
    if (!(sigma2 > 0.0 && sigma2 < 0.5)) {
        throw std::invalid_argument("SqueezingParam: sigma^2 must lie in (0, 1/2)");
    }
}

SqueezingParam SqueezingParam::from_db(double db) { return SqueezingParam(sigma2_from_db(db)); }

double SqueezingParam::sigma() const { return std::sqrt(sigma2_); }

double SqueezingParam::packet_spacing() const {
    return std::sqrt((1.0 - 4.0 * sigma2_ * sigma2_) * kPi);
}

double normalization_constant(SqueezingParam s, LogicalLabel j, double tol) {
    const double v = s.sigma2();
    const double a = label_value(j) / 2.0;
    cplx n = theta_at(a, 0.0, 0.0, 8.0 * v, tol) * theta_at(0.0, 0.0, 0.0, 0.5 * v, tol) +
             theta_at(a + 0.5, 0.0, 0.0, 8.0 * v, tol) * theta_at(0.0, 0.5, 0.0, 0.5 * v, tol);
    return n.real();
}

double codeword_overlap(SqueezingParam s, double tol) {
    const double v = s.sigma2();
    cplx num = theta_at(0.25, 0.0, 0.0, 8.0 * v, tol) * theta_at(0.0, 0.25, 0.0, 0.5 * v, tol) +
               theta_at(0.75, 0.0, 0.0, 8.0 * v, tol) * theta_at(0.0, 0.75, 0.0, 0.5 * v, tol);
    double n0 = normalization_constant(s, LogicalLabel::zero, tol);
    double n1 = normalization_constant(s, LogicalLabel::one, tol);
    return num.real() / std::sqrt(n0 * n1);
}

double hadamard_prefactor(SqueezingParam s, double tol) {
    return 1.0 / std::sqrt(1.0 + codeword_overlap(s, tol) / std::numbers::sqrt2);
}

cplx SeparableWigner::evaluate_complex(WignerPoint pt) const {
    cplx sum = 0.0;
    for (const auto& t : terms) {
        sum += t.coeff * t.q_factor(pt.q) * t.p_factor(pt.p);
    }
    return sum;
}

SeparableWigner separable_wigner_jjp(SqueezingParam s, LogicalLabel j, LogicalLabel jp, double tol) {
    const double v = s.sigma2();
    const double c = std::sqrt(1.0 - 4.0 * v * v);
    const double sum_char = (label_value(j) + label_value(jp)) / 4.0;
    const double diff_char = (label_value(j) - label_value(jp)) / 4.0;
    const double k = 1.0 / (2.0 * v *
                            std::sqrt(normalization_constant(s, j, tol) *
                                      normalization_constant(s, jp, tol)));

    auto q_factor = [=](double shift) {
        return [=](double q) -> cplx {
            double z = -q * c / (2.0 * std::sqrt(kPi));
            return envelope_density(v, q) * theta_at(0.0, sum_char + shift, z, 0.5 * v, tol);
        };
    };
    auto p_factor = [=](double shift) {
        return [=](double p) -> cplx {
            double z = -2.0 * p * c / std::sqrt(kPi);
            return envelope_density(v, p) * theta_at(diff_char + shift, 0.0, z, 8.0 * v, tol);
        };
    };

    SeparableWigner w;
    w.terms.push_back({cplx(k, 0.0), q_factor(0.0), p_factor(0.0)});
    w.terms.push_back({cplx(k, 0.0), q_factor(0.5), p_factor(0.5)});
    return w;
}

SeparableWigner separable_wigner_h(SqueezingParam s, double tol) {
    const double c = std::cos(kPi / 8.0);
    const double sn = std::sin(kPi / 8.0);
    const double pref = hadamard_prefactor(s, tol);
    const double pref2 = pref * pref;
    const std::pair<LogicalLabel, double> amps[] = {{LogicalLabel::zero, c}, {LogicalLabel::one, sn}};

    SeparableWigner w;
    for (const auto& [j, aj] : amps) {
        for (const auto& [jp, ajp] : amps) {
            SeparableWigner part = separable_wigner_jjp(s, j, jp, tol);
            for (auto& t : part.terms) {
                t.coeff *= pref2 * aj * ajp;
                w.terms.push_back(std::move(t));
            }
        }
    }
    return w;
}

cplx wigner_jjp(SqueezingParam s, LogicalLabel j, LogicalLabel jp, WignerPoint pt, double tol) {
    return separable_wigner_jjp(s, j, jp, tol).evaluate_complex(pt);
}

double wigner_h(SqueezingParam s, WignerPoint pt, double tol) {
    return separable_wigner_h(s, tol)(pt);
}

int default_s_cut(SqueezingParam s) {
    // Envelope weight of packet s is exp(-2 sigma^2 pi (2s)^2).
    const double log_ratio = std::log(1e13);
    double half = std::sqrt(log_ratio / (2.0 * kPi * s.sigma2())) / 2.0;
    return std::max(10, static_cast<int>(std::ceil(half)) + 1);
}

ModeComb position_wavefunction(SqueezingParam s, LogicalLabel j, int s_cut, double tol) {
    if (s_cut < 1) {
        throw std::invalid_argument("position_wavefunction: s_cut must be at least 1");
    }
    const double v = s.sigma2();
    const double spacing = s.packet_spacing();
    const double jv = label_value(j);
    // exp(-(q - x)^2 / (4 sigma^2)) = (2 pi sigma^2)^{1/4} * normalized packet.
    const double global = std::pow(2.0 * kPi * v, 0.25) /
                          std::sqrt(std::sqrt(kPi) * v * normalization_constant(s, j, tol));
    ModeComb comb(s.sigma());
    for (int k = -s_cut; k <= s_cut; ++k) {
        double n = 2.0 * k + jv;
        comb.add(global * std::exp(-v * kPi * n * n), n * spacing);
    }
    return comb;
}

ModeComb hadamard_wavefunction(SqueezingParam s, int s_cut, double tol) {
    ModeComb out(s.sigma());
    const double pref = hadamard_prefactor(s, tol);
    out.add(position_wavefunction(s, LogicalLabel::zero, s_cut, tol), pref * std::cos(kPi / 8.0));
    out.add(position_wavefunction(s, LogicalLabel::one, s_cut, tol), pref * std::sin(kPi / 8.0));
    return out;
}

}  // namespace gkp
