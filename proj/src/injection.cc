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

#include "gkp/injection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {
namespace {

constexpr int kData = 0;
constexpr int kAncilla = 1;

QubitRegister entangle_with_ancilla(const QubitRegister& psi) {
    if (psi.num_qubits() != 1) throw std::invalid_argument("t_injection: input must be a single qubit");
    QubitRegister reg = psi.tensor(pi8_state());
    reg.apply_cnot(kData, kAncilla);
    return reg;
}

InjectionResult finish_injection(std::pair<QubitRegister, MeasurementRecord> measured) {
    auto& [out, record] = measured;
    if (record.outcome == 1) out.apply(gates::s(), 0);
    return InjectionResult{out, record};
}

PairResult finish_pair(int consumed_wire, std::pair<QubitRegister, MeasurementRecord> measured) {
    auto& [out, record] = measured;
    if (record.outcome == 0) out.apply(gates::s_dag(), 0);
    out.apply(gates::hadamard(), 0);
    return PairResult{out, {record}, PairBranch{record.outcome, consumed_wire}};
}

QubitRegister entangled_pair(int consumed_wire) {
    if (consumed_wire != 0 && consumed_wire != 1) {
        throw std::invalid_argument("pi8_pair_to_zero: consumed_wire must be 0 or 1");
    }
    QubitRegister reg = pi8_state().tensor(pi8_state());
    reg.apply_cnot(1 - consumed_wire, consumed_wire);
    return reg;
}

}  // namespace

QubitRegister pi8_state() {
    const double r = 1.0 / std::numbers::sqrt2;
    return QubitRegister::single(std::polar(r, -std::numbers::pi / 8.0), std::polar(r, std::numbers::pi / 8.0));
}

InjectionResult t_injection(const QubitRegister& psi, int outcome) {
    return finish_injection(entangle_with_ancilla(psi).measure_and_remove(kAncilla, outcome));
}

InjectionResult t_injection(const QubitRegister& psi, std::mt19937_64& rng) {
    return finish_injection(entangle_with_ancilla(psi).measure_and_remove(kAncilla, rng));
}

PairResult pi8_pair_to_zero(PairBranch branch) {
    QubitRegister reg = entangled_pair(branch.consumed_wire);
    return finish_pair(branch.consumed_wire, reg.measure_and_remove(branch.consumed_wire, branch.outcome));
}

PairResult pi8_pair_to_zero(std::mt19937_64& rng) {
    QubitRegister reg = entangled_pair(1);
    return finish_pair(1, reg.measure_and_remove(1, rng));
}

std::vector<PairBranch> all_pair_branches() {
    return {PairBranch{0, 0}, PairBranch{0, 1}, PairBranch{1, 0}, PairBranch{1, 1}};
}

}  // namespace gkp
