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

#include "gkp/hybrid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {

HybridState::HybridState(ModeComb branch0, ModeComb branch1)
    : branch0_(std::move(branch0)), branch1_(std::move(branch1)) {
    if (std::abs(branch0_.width() - branch1_.width()) > 1e-12 * branch0_.width()) {
        throw std::invalid_argument("HybridState: branches must share the packet width");
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("HybridState: state is not normalized");
    }
}

HybridState HybridState::product(cplx a0, cplx a1, const ModeComb& osc) {
    return HybridState(osc.scaled(a0), osc.scaled(a1));
}

double HybridState::norm() const {
    double n0 = branch0_.norm();
    double n1 = branch1_.norm();
    return std::sqrt(n0 * n0 + n1 * n1);
}

HybridState controlled_displacement(const HybridState& h, double r) {
    return HybridState(h.branch0(), h.branch1().shifted(std::numbers::sqrt2 * r));
}

HybridState qubit_gate(const HybridState& h, const Mat2& u) {
    ModeComb b0(h.width());
    ModeComb b1(h.width());
    b0.add(h.branch0(), u[0]);
    b0.add(h.branch1(), u[1]);
    b1.add(h.branch0(), u[2]);
    b1.add(h.branch1(), u[3]);
    return HybridState(std::move(b0), std::move(b1));
}

BranchMeasurement measure_qubit_z(const HybridState& h, int outcome) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("measure_qubit_z: outcome must be 0 or 1");
    const ModeComb& b = h.branch(outcome);
    double n = b.norm();
    double total = h.norm();
    double p = (n * n) / (total * total);
    if (!(p > 1e-300)) throw std::domain_error("measure_qubit_z: outcome has zero probability");
    return BranchMeasurement{p, b.scaled(1.0 / n)};
}

}  // namespace gkp
