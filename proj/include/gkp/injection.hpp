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

#include <random>
#include <vector>

#include "gkp/qubit_register.hpp"

namespace gkp {

/// (exp(-i pi/8)|0> + exp(i pi/8)|1>) / sqrt(2), equal to T|+> up to phase.
QubitRegister pi8_state();

struct InjectionResult {
    QubitRegister output;
    MeasurementRecord record;
};

/// Applies T to a one-qubit state by consuming one |pi/8> ancilla.
///
/// Circuit: CNOT (data -> ancilla), Z measurement of the ancilla, then S on
/// the data if the outcome is 1. Before the correction the data holds
/// T^{(-1)^m} |psi> up to phase, so S T^dag = T fixes the m = 1 branch. Both
/// outcomes occur with probability 1/2 for every input.
///
/// Throws std::invalid_argument unless psi is a normalized single qubit.
InjectionResult t_injection(const QubitRegister& psi, int outcome);
InjectionResult t_injection(const QubitRegister& psi, std::mt19937_64& rng);

/// Branch label of the |pi/8> x |pi/8> -> |0> conversion: the ancilla
/// measurement outcome and which of the two (identical) input wires is
/// consumed as the injection ancilla.
struct PairBranch {
    int outcome;
    int consumed_wire;
};

struct PairResult {
    QubitRegister output;
    std::vector<MeasurementRecord> records;
    PairBranch branch;
};

/// Deterministically turns two |pi/8> states into |0> with Clifford
/// operations only.
///
/// The kept wire enters the injection circuit as data. Without correction the
/// data wire holds T^{(-1)^m} T|+> up to phase, i.e. S|+> for m = 0 and |+>
/// for m = 1. Corrections:
///   m = 0: S^dag, then H
///   m = 1: H
PairResult pi8_pair_to_zero(PairBranch branch);
PairResult pi8_pair_to_zero(std::mt19937_64& rng);

/// Magic states consumed per output |0>.
constexpr int pi8_pair_resource_count() { return 2; }

/// All four (outcome, consumed_wire) combinations.
std::vector<PairBranch> all_pair_branches();

}  // namespace gkp
