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

#include <array>
#include <complex>
#include <random>
#include <span>
#include <vector>

namespace gkp {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

namespace gates {
Mat2 identity();
Mat2 hadamard();
Mat2 s();
Mat2 s_dag();
Mat2 t();
Mat2 t_dag();
Mat2 x();
Mat2 z();
/// diag(exp(-i phi/2), exp(i phi/2)).
Mat2 rz(double phi);
Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);
}  // namespace gates

struct MeasurementRecord {
    int outcome;
    double probability;
};

/// Dense state vector over n qubits. Basis index bit k holds qubit k.
class QubitRegister {
  public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws std::invalid_argument unless the size is a power of two and the
    /// vector has unit norm within kNormTolerance.
    explicit QubitRegister(std::vector<cplx> amplitudes);
    static QubitRegister basis(int num_qubits, std::size_t index);
    static QubitRegister single(cplx a0, cplx a1);

    int num_qubits() const { return num_qubits_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }

    void apply(const Mat2& u, int qubit);
    void apply_cnot(int control, int target);

    /// Probability that qubit reads `outcome` in the Z basis.
    double probability(int qubit, int outcome) const;

    /// Projects qubit onto |outcome> and removes it from the register.
    /// Throws std::domain_error if the outcome has (numerically) zero probability.
    std::pair<QubitRegister, MeasurementRecord> measure_and_remove(int qubit, int outcome) const;
    std::pair<QubitRegister, MeasurementRecord> measure_and_remove(int qubit, std::mt19937_64& rng) const;

    QubitRegister tensor(const QubitRegister& high) const;

  private:
    struct Unchecked {};
    QubitRegister(std::vector<cplx> amplitudes, Unchecked);
    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<cplx> amplitudes_;
};

/// |<a|b>|^2, global phase removed.
double fidelity(const QubitRegister& a, const QubitRegister& b);

/// Haar-random single-qubit state.
QubitRegister random_qubit(std::mt19937_64& rng);

}  // namespace gkp
