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

#include "gkp/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {
namespace {

void check_args(const ThetaArgs& args, double tol) {
    if (!(args.tau.imag() > 0.0)) {
        throw std::domain_error("theta: Im(tau) must be positive");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("theta: tol must be positive");
    }
}

// Sums term(n) for integer n, starting at `center` and growing a symmetric
// window. Stops once the window covers `min_half` and both boundary terms are
// negligible.
template <typename Term>
cplx sum_outward(const Term& term, long center, long min_half, double tol) {
    cplx sum = term(center);
    for (long k = 1;; ++k) {
        cplx lo = term(center - k);
        cplx hi = term(center + k);
        sum += lo + hi;
        if (k >= min_half) {
            double bound = tol * (std::abs(sum) + 1.0);
            // Next pair beyond the window; terms are log-concave in n so once
            // both are below the bound the remaining tail is smaller still.
            if (std::abs(term(center - k - 1)) < bound && std::abs(term(center + k + 1)) < bound) {
                break;
            }
        }
        if (k > 100000000) {
            throw std::runtime_error("theta: series failed to converge");
        }
    }
    return sum;
}

long min_half_width(double decay_rate, double tol) {
    // decay_rate: terms fall like exp(-decay_rate * n^2).
    double log_inv = std::log(1.0 / std::min(tol, 0.5));
    return static_cast<long>(std::ceil(std::sqrt(log_inv / decay_rate))) + 2;
}

}  // namespace

cplx theta(const ThetaArgs& args, double tol) {
    check_args(args, tol);
    constexpr double pi = std::numbers::pi;
    const cplx i_pi_tau = cplx(0.0, pi) * args.tau;
    const cplx two_i_pi_zb = cplx(0.0, 2.0 * pi) * (args.z + args.b);
    auto term = [&](long s) {
        double n = static_cast<double>(s) + args.a;
        return std::exp(i_pi_tau * (n * n) + two_i_pi_zb * n);
    };
    // |term| peaks at n = -Im(z) / Im(tau).
    double peak = -args.z.imag() / args.tau.imag() - args.a;
    long center = std::lround(peak);
    return sum_outward(term, center, min_half_width(pi * args.tau.imag(), tol), tol);
}

cplx theta_modular(const ThetaArgs& args, double tol) {
    check_args(args, tol);
    constexpr double pi = std::numbers::pi;
    const cplx x0 = args.z + args.b;
    const cplx w = cplx(0.0, -pi) / args.tau;  // Re(w) < 0
    const cplx two_i_pi_a(0.0, 2.0 * pi * args.a);
    auto term = [&](long n) {
        cplx x = x0 - static_cast<double>(n);
        return std::exp(w * x * x + two_i_pi_a * static_cast<double>(n));
    };
    // d/dn Re(w x^2) = 0 at n = Re(x0) - Im(w) Im(x0) / Re(w).
    double peak = x0.real() - w.imag() * x0.imag() / w.real();
    long center = std::lround(peak);
    double rate = -w.real();
    cplx prefactor = 1.0 / std::sqrt(cplx(0.0, -1.0) * args.tau);
    return prefactor * sum_outward(term, center, min_half_width(rate, tol), tol);
}

cplx theta_stable(const ThetaArgs& args, double tol) {
    if (std::abs(args.tau) < 1.0) {
        return theta_modular(args, tol);
    }
    return theta(args, tol);
}

}  // namespace gkp
