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

#include "gkp/qubit_register.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkp {

namespace gates {
Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 hadamard() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {r, r, r, -r};
}
Mat2 s() { return {1.0, 0.0, 0.0, cplx(0.0, 1.0)}; }
Mat2 s_dag() { return {1.0, 0.0, 0.0, cplx(0.0, -1.0)}; }
Mat2 t() { return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)}; }
Mat2 t_dag() { return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4.0)}; }
Mat2 x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 z() { return {1.0, 0.0, 0.0, -1.0}; }
Mat2 rz(double phi) { return {std::polar(1.0, -phi / 2.0), 0.0, 0.0, std::polar(1.0, phi / 2.0)}; }
Mat2 multiply(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}
Mat2 adjoint(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }
}  // namespace gates

QubitRegister::QubitRegister(std::vector<cplx> amplitudes, Unchecked)
    : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    while ((std::size_t{1} << num_qubits_) < amplitudes_.size()) ++num_qubits_;
}

QubitRegister::QubitRegister(std::vector<cplx> amplitudes) : QubitRegister(std::move(amplitudes), Unchecked{}) {
    if (amplitudes_.empty() || (std::size_t{1} << num_qubits_) != amplitudes_.size()) {
        throw std::invalid_argument("QubitRegister: size must be a power of two");
    }
    double n = 0.0;
    for (const auto& a : amplitudes_) n += std::norm(a);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("QubitRegister: state is not normalized");
    }
}

QubitRegister QubitRegister::basis(int num_qubits, std::size_t index) {
    std::vector<cplx> v(std::size_t{1} << num_qubits, 0.0);
    v.at(index) = 1.0;
    return QubitRegister(std::move(v));
}

QubitRegister QubitRegister::single(cplx a0, cplx a1) { return QubitRegister({a0, a1}); }

void QubitRegister::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) throw std::invalid_argument("QubitRegister: qubit index out of range");
}

void QubitRegister::apply(const Mat2& u, int qubit) {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & bit) continue;
        cplx a0 = amplitudes_[i];
        cplx a1 = amplitudes_[i | bit];
        amplitudes_[i] = u[0] * a0 + u[1] * a1;
        amplitudes_[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

void QubitRegister::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw std::invalid_argument("QubitRegister: CNOT needs distinct qubits");
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amplitudes_[i], amplitudes_[i | tb]);
    }
}

double QubitRegister::probability(int qubit, int outcome) const {
    check_qubit(qubit);
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("QubitRegister: outcome must be 0 or 1");
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (((i & bit) != 0) == (outcome == 1)) p += std::norm(amplitudes_[i]);
    }
    return p;
}

std::pair<QubitRegister, MeasurementRecord> QubitRegister::measure_and_remove(int qubit, int outcome) const {
    const double p = probability(qubit, outcome);
    if (p < 1e-300) throw std::domain_error("QubitRegister: measurement outcome has zero probability");
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t low_mask = bit - 1;
    std::vector<cplx> reduced(amplitudes_.size() / 2);
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (((i & bit) != 0) != (outcome == 1)) continue;
        std::size_t j = (i & low_mask) | ((i >> 1) & ~low_mask);
        reduced[j] = amplitudes_[i] * scale;
    }
    return {QubitRegister(std::move(reduced), Unchecked{}), MeasurementRecord{outcome, p}};
}

std::pair<QubitRegister, MeasurementRecord> QubitRegister::measure_and_remove(int qubit,
                                                                              std::mt19937_64& rng) const {
    double p0 = probability(qubit, 0);
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    return measure_and_remove(qubit, u < p0 ? 0 : 1);
}

QubitRegister QubitRegister::tensor(const QubitRegister& high) const {
    std::vector<cplx> v(amplitudes_.size() * high.amplitudes_.size());
    for (std::size_t h = 0; h < high.amplitudes_.size(); ++h) {
        for (std::size_t l = 0; l < amplitudes_.size(); ++l) {
            v[h * amplitudes_.size() + l] = high.amplitudes_[h] * amplitudes_[l];
        }
    }
    return QubitRegister(std::move(v), Unchecked{});
}

double fidelity(const QubitRegister& a, const QubitRegister& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: register size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::norm(s);
}

QubitRegister random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    cplx a0(n(rng), n(rng));
    cplx a1(n(rng), n(rng));
    double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    return QubitRegister::single(a0 / norm, a1 / norm);
}

}  // namespace gkp
