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

#include "gkp/mode_comb.hpp"
#include "gkp/qubit_register.hpp"

namespace gkp {

/// Qubit tensored with an oscillator: branch0 ⊗ |0> + branch1 ⊗ |1>.
class HybridState {
  public:
    static constexpr double kNormTolerance = 1e-10;

    /// Throws std::invalid_argument if the branch widths differ or the total
    /// norm is not 1 within kNormTolerance.
    HybridState(ModeComb branch0, ModeComb branch1);

    /// (a0|0> + a1|1>) ⊗ osc, with osc normalized and |a0|^2 + |a1|^2 = 1.
    static HybridState product(cplx a0, cplx a1, const ModeComb& osc);

    const ModeComb& branch0() const { return branch0_; }
    const ModeComb& branch1() const { return branch1_; }
    const ModeComb& branch(int b) const { return b == 0 ? branch0_ : branch1_; }
    double width() const { return branch0_.width(); }
    double norm() const;

  private:
    ModeComb branch0_;
    ModeComb branch1_;
};

/// D(r) on the oscillator conditioned on the qubit being |1>; moves every
/// packet of branch1 by sqrt(2) r.
HybridState controlled_displacement(const HybridState& h, double r);

/// Applies a 2x2 unitary to the qubit, mixing the two branches.
HybridState qubit_gate(const HybridState& h, const Mat2& u);

struct BranchMeasurement {
    double probability;
    ModeComb post;  // normalized oscillator state
};

/// Z measurement of the qubit with a forced outcome. Throws std::domain_error
/// if the selected branch has zero weight.
BranchMeasurement measure_qubit_z(const HybridState& h, int outcome);

}  // namespace gkp
