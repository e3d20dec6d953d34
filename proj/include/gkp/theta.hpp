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

namespace gkp {

using cplx = std::complex<double>;

inline constexpr double kDefaultThetaTol = 1e-12;

/// Arguments of the theta function with characteristics (a, b):
///
///     theta[a; b](z, tau) = sum_{s in Z} exp(i pi tau (s+a)^2 + 2 i pi (z+b)(s+a))
///
/// The series converges only for Im(tau) > 0.
struct ThetaArgs {
    double a = 0.0;
    double b = 0.0;
    cplx z{0.0, 0.0};
    cplx tau{0.0, 1.0};
};

/// Direct series. Terms are accumulated outward from the dominant index until
/// the next omitted term on each side is below tol * (|partial sum| + 1).
///
/// Throws std::domain_error if Im(tau) <= 0 and std::invalid_argument if
/// tol <= 0.
cplx theta(const ThetaArgs& args, double tol = kDefaultThetaTol);

/// Same function evaluated through the Poisson-resummed (modular) series
///
///     (-i tau)^{-1/2} sum_n exp(-i pi (z+b-n)^2 / tau + 2 i pi n a).
///
/// Decays like exp(-pi Im(tau) n^2 / |tau|^2), so it is the short series when
/// |tau| < 1. For a = 0 and real z every term is positive, which keeps
/// exponentially small values (overlaps of nearly orthogonal codewords) free
/// of cancellation.
cplx theta_modular(const ThetaArgs& args, double tol = kDefaultThetaTol);

/// Picks whichever of theta / theta_modular has the faster-decaying series.
cplx theta_stable(const ThetaArgs& args, double tol = kDefaultThetaTol);

}  // namespace gkp
