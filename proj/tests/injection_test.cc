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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "gkp/qubit_register.hpp"

using gkp::cplx;
using gkp::Mat2;
using gkp::QubitRegister;
namespace gates = gkp::gates;

namespace {

QubitRegister applied(QubitRegister r, const Mat2& u) {
    r.apply(u, 0);
    return r;
}

void expect_unitary(const Mat2& u) {
    Mat2 p = gates::multiply(u, gates::adjoint(u));
    Mat2 id = gates::identity();
    for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(p[k] - id[k]), 1e-14);
}

}  // namespace

TEST(qubit_register, gates_are_unitary) {
    for (const Mat2& u : {gates::identity(), gates::hadamard(), gates::s(), gates::s_dag(), gates::t(), gates::t_dag(),
                          gates::x(), gates::z(), gates::rz(0.37)}) {
        expect_unitary(u);
    }
}

TEST(qubit_register, gate_identities) {
    auto eq = [](const Mat2& a, const Mat2& b) {
        for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(a[k] - b[k]), 1e-14);
    };
    eq(gates::multiply(gates::t(), gates::t()), gates::s());
    eq(gates::multiply(gates::s(), gates::s()), gates::z());
    eq(gates::multiply(gates::hadamard(), gates::hadamard()), gates::identity());
    eq(gates::multiply(gates::s(), gates::s_dag()), gates::identity());
    // R_Z(pi/4) = e^{-i pi/8} T.
    Mat2 rz = gates::rz(std::numbers::pi / 4.0);
    Mat2 t = gates::t();
    for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(rz[k] - std::polar(1.0, -std::numbers::pi / 8) * t[k]), 1e-14);
}

TEST(qubit_register, construction_checks) {
    EXPECT_THROW(QubitRegister({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(QubitRegister({1.0, 1.0}), std::invalid_argument);
    EXPECT_NO_THROW(QubitRegister({cplx(0.6, 0), cplx(0, 0.8)}));
    EXPECT_EQ(QubitRegister::basis(3, 5).num_qubits(), 3);
}

TEST(qubit_register, cnot_and_measurement) {
    QubitRegister plus = applied(QubitRegister::basis(1, 0), gates::hadamard());
    QubitRegister pair = plus.tensor(QubitRegister::basis(1, 0));
    pair.apply_cnot(0, 1);
    EXPECT_NEAR(pair.probability(1, 1), 0.5, 1e-15);
    auto [post, rec] = pair.measure_and_remove(1, 1);
    EXPECT_EQ(post.num_qubits(), 1);
    EXPECT_NEAR(rec.probability, 0.5, 1e-15);
    EXPECT_NEAR(gkp::fidelity(post, QubitRegister::basis(1, 1)), 1.0, 1e-15);
    EXPECT_THROW(QubitRegister::basis(2, 0).measure_and_remove(0, 1), std::domain_error);
}

TEST(qubit_register, random_states_are_normalized) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        QubitRegister r = gkp::random_qubit(rng);
        double n = std::norm(r.amplitudes()[0]) + std::norm(r.amplitudes()[1]);
        EXPECT_NEAR(n, 1.0, 1e-14);
    }
}

TEST(injection, pi8_state_is_t_plus) {
    QubitRegister tp = applied(applied(QubitRegister::basis(1, 0), gates::hadamard()), gates::t());
    EXPECT_NEAR(gkp::fidelity(gkp::pi8_state(), tp), 1.0, 1e-15);
}

TEST(injection, applies_t_on_both_outcomes) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        QubitRegister psi = gkp::random_qubit(rng);
        QubitRegister want = applied(psi, gates::t());
        for (int m : {0, 1}) {
            auto r = gkp::t_injection(psi, m);
            EXPECT_EQ(r.record.outcome, m);
            EXPECT_NEAR(r.record.probability, 0.5, 1e-12);
            EXPECT_GE(gkp::fidelity(r.output, want), 1.0 - 1e-12);
        }
    }
}

TEST(injection, twice_gives_phase_gate) {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 30; ++k) {
        QubitRegister psi = gkp::random_qubit(rng);
        QubitRegister twice = gkp::t_injection(gkp::t_injection(psi, rng).output, rng).output;
        EXPECT_GE(gkp::fidelity(twice, applied(psi, gates::s())), 1.0 - 1e-12);
    }
}

TEST(injection, sampled_outcomes_are_fair) {
    std::mt19937_64 rng(23);
    const int n = 4000;
    int ones = 0;
    for (int k = 0; k < n; ++k) ones += gkp::t_injection(gkp::random_qubit(rng), rng).record.outcome;
    EXPECT_LE(std::abs(ones - n / 2.0), 5.0 * std::sqrt(n / 4.0));
}

TEST(injection, rejects_multi_qubit_input) {
    EXPECT_THROW(gkp::t_injection(QubitRegister::basis(2, 0), 0), std::invalid_argument);
}

TEST(injection, pair_conversion_every_branch) {
    auto branches = gkp::all_pair_branches();
    EXPECT_EQ(branches.size(), 4u);
    std::set<std::pair<int, int>> seen;
    for (auto b : branches) {
        seen.insert({b.outcome, b.consumed_wire});
        auto r = gkp::pi8_pair_to_zero(b);
        EXPECT_EQ(r.output.num_qubits(), 1);
        EXPECT_GE(gkp::fidelity(r.output, QubitRegister::basis(1, 0)), 1.0 - 1e-12);
        ASSERT_FALSE(r.records.empty());
        EXPECT_NEAR(r.records.front().probability, 0.5, 1e-12);
    }
    EXPECT_EQ(seen.size(), 4u);
    EXPECT_EQ(gkp::pi8_pair_resource_count(), 2);
}

TEST(injection, pair_conversion_sampled) {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 100; ++k) {
        EXPECT_GE(gkp::fidelity(gkp::pi8_pair_to_zero(rng).output, QubitRegister::basis(1, 0)), 1.0 - 1e-12);
    }
}
