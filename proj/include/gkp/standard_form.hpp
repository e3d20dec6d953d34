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
#include <functional>
#include <vector>

#include "gkp/mode_comb.hpp"
#include "gkp/theta.hpp"

namespace gkp {

/// -10 log10(2 sigma^2). Pure formula; accepts any positive sigma2.
double db_from_sigma2(double sigma2);
double sigma2_from_db(double db);

/// Variance sigma^2 of the approximate square-lattice code (hbar = 1).
/// Valid range is 0 < sigma^2 < 1/2, i.e. strictly positive squeezing in dB.
class SqueezingParam {
  public:
    explicit SqueezingParam(double sigma2);
    static SqueezingParam from_db(double db);

    double sigma2() const { return sigma2_; }
    double sigma() const;
    double db() const { return db_from_sigma2(sigma2_); }
    /// sqrt((1 - 4 sigma^4) pi), the distance between neighbouring packets of
    /// the codeword pair.
    double packet_spacing() const;

  private:
    double sigma2_;
};

enum class LogicalLabel : int { zero = 0, one = 1 };

struct WignerPoint {
    double q;
    double p;
};

/// N_{sigma^2, j}: sum of two products of theta functions (qubit code, d = 2).
double normalization_constant(SqueezingParam s, LogicalLabel j, double tol = kDefaultThetaTol);

/// <0_{sigma^2}|1_{sigma^2}>, real and in [0, 1).
double codeword_overlap(SqueezingParam s, double tol = kDefaultThetaTol);

/// 1 / sqrt(1 + Re<0|1> / sqrt(2)), the normalization of
/// cos(pi/8)|0> + sin(pi/8)|1>.
double hadamard_prefactor(SqueezingParam s, double tol = kDefaultThetaTol);

/// Wigner function written as a sum of separable products
///
///     W(q, p) = Re sum_k coeff_k * Q_k(q) * P_k(p).
///
/// Every operator |j><j'| of the standard form has exactly two such terms.
struct SeparableWigner {
    struct Term {
        cplx coeff;
        std::function<cplx(double)> q_factor;
        std::function<cplx(double)> p_factor;
    };
    std::vector<Term> terms;

    /// Complex sum (the imaginary part vanishes for Hermitian combinations).
    cplx evaluate_complex(WignerPoint pt) const;
    double operator()(WignerPoint pt) const { return evaluate_complex(pt).real(); }
};

SeparableWigner separable_wigner_jjp(SqueezingParam s, LogicalLabel j, LogicalLabel jp,
                                     double tol = kDefaultThetaTol);
SeparableWigner separable_wigner_h(SqueezingParam s, double tol = kDefaultThetaTol);

/// Wigner representation of |j_{sigma^2}><j'_{sigma^2}|. Real when j == jp.
cplx wigner_jjp(SqueezingParam s, LogicalLabel j, LogicalLabel jp, WignerPoint pt,
                double tol = kDefaultThetaTol);

/// Wigner function of the normalized approximate Hadamard eigenstate.
double wigner_h(SqueezingParam s, WignerPoint pt, double tol = kDefaultThetaTol);

/// Smallest symmetric cut such that the dropped envelope weight is below
/// 1e-13 of the total, and never below 10.
int default_s_cut(SqueezingParam s);

/// Position wavefunction of |j_{sigma^2}> truncated to s in [-s_cut, s_cut]:
/// packets of width sigma at (2s + j) * packet_spacing() with envelope
/// exp(-sigma^2 pi (2s + j)^2). Throws std::invalid_argument if s_cut < 1.
ModeComb position_wavefunction(SqueezingParam s, LogicalLabel j, int s_cut,
                               double tol = kDefaultThetaTol);

/// Position wavefunction of the normalized approximate Hadamard eigenstate.
ModeComb hadamard_wavefunction(SqueezingParam s, int s_cut, double tol = kDefaultThetaTol);

}  // namespace gkp
