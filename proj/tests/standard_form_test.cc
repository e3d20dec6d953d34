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

#include "gkp/standard_form.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"

using gkp::LogicalLabel;
using gkp::SqueezingParam;
using gkp::WignerPoint;

namespace {

const double kDbGrid[] = {1.0, 2.5, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0};

}  // namespace

TEST(standard_form, db_conversion) {
    EXPECT_NEAR(gkp::sigma2_from_db(10.0), 0.05, 1e-15);
    EXPECT_NEAR(gkp::db_from_sigma2(0.005), 20.0, 1e-12);
    for (double db : kDbGrid) EXPECT_NEAR(gkp::db_from_sigma2(gkp::sigma2_from_db(db)), db, 1e-12);
    EXPECT_NEAR(SqueezingParam::from_db(10.0).sigma2(), 0.05, 1e-15);
}

TEST(standard_form, rejects_degenerate_sigma2) {
    EXPECT_THROW(SqueezingParam(0.0), std::invalid_argument);
    EXPECT_THROW(SqueezingParam(-0.1), std::invalid_argument);
    EXPECT_THROW(SqueezingParam(0.5), std::invalid_argument);
    EXPECT_THROW(SqueezingParam(0.7), std::invalid_argument);
    EXPECT_THROW(SqueezingParam(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    EXPECT_NO_THROW(SqueezingParam(0.4999));
}

TEST(standard_form, normalization_matches_packet_sum) {
    for (double db : kDbGrid) {
        SqueezingParam s = SqueezingParam::from_db(db);
        for (int j : {0, 1}) {
            double raw = gkp_oracle::inner(gkp_oracle::codeword_packets(s.sigma2(), j),
                                           gkp_oracle::codeword_packets(s.sigma2(), j))
                             .real();
            double n = gkp::normalization_constant(s, static_cast<LogicalLabel>(j));
            EXPECT_NEAR(raw / (std::sqrt(std::numbers::pi) * s.sigma2() * n), 1.0, 1e-8) << db << " dB, j=" << j;
        }
    }
}

TEST(standard_form, overlap_matches_packet_sum) {
    for (double db : kDbGrid) {
        SqueezingParam s = SqueezingParam::from_db(db);
        double want = gkp_oracle::inner(gkp_oracle::codeword(s.sigma2(), 0), gkp_oracle::codeword(s.sigma2(), 1)).real();
        EXPECT_NEAR(gkp::codeword_overlap(s), want, 1e-6) << db;
    }
}

TEST(standard_form, overlap_frozen_value) {
    // Pairwise packet sum at sigma^2 = 0.05, frozen.
    EXPECT_NEAR(gkp::codeword_overlap(SqueezingParam(0.05)), 7.76406641865106e-4, 1e-12);
}

TEST(standard_form, overlap_decreases_with_squeezing) {
    double prev = 1.0;
    for (double db = 1.0; db <= 20.0; db += 0.5) {
        double ov = gkp::codeword_overlap(SqueezingParam::from_db(db));
        EXPECT_GT(ov, 0.0) << db;
        EXPECT_LT(ov, prev) << db;
        prev = ov;
    }
}

TEST(standard_form, hadamard_prefactor_formula) {
    SqueezingParam s(0.08);
    EXPECT_NEAR(gkp::hadamard_prefactor(s), 1.0 / std::sqrt(1.0 + gkp::codeword_overlap(s) / std::numbers::sqrt2),
                1e-15);
    double want = std::sqrt(gkp_oracle::inner(gkp_oracle::hadamard_state(0.08), gkp_oracle::hadamard_state(0.08)).real());
    EXPECT_NEAR(want, 1.0, 1e-12);
}

TEST(standard_form, position_wavefunction_is_normalized) {
    for (double db : kDbGrid) {
        SqueezingParam s = SqueezingParam::from_db(db);
        int cut = gkp::default_s_cut(s);
        EXPECT_GE(cut, 10);
        for (auto j : {LogicalLabel::zero, LogicalLabel::one}) {
            EXPECT_NEAR(gkp::position_wavefunction(s, j, cut).norm(), 1.0, 1e-8) << db;
        }
        EXPECT_NEAR(gkp::hadamard_wavefunction(s, cut).norm(), 1.0, 1e-8) << db;
    }
}

TEST(standard_form, position_wavefunction_matches_oracle_pointwise) {
    for (double db : {3.0, 9.0, 15.0}) {
        SqueezingParam s = SqueezingParam::from_db(db);
        for (int j : {0, 1}) {
            gkp::ModeComb comb = gkp::position_wavefunction(s, static_cast<LogicalLabel>(j), gkp::default_s_cut(s));
            gkp_oracle::Packets ref = gkp_oracle::codeword(s.sigma2(), j);
            for (double q = -6.0; q <= 6.0; q += 0.173) {
                EXPECT_NEAR(comb.evaluate(q).real(), gkp_oracle::evaluate(ref, q), 1e-10) << db << " " << q;
                EXPECT_NEAR(comb.evaluate(q).imag(), 0.0, 1e-14);
            }
        }
    }
}

TEST(standard_form, comb_overlap_agrees_with_theta_overlap) {
    for (double db : kDbGrid) {
        SqueezingParam s = SqueezingParam::from_db(db);
        int cut = gkp::default_s_cut(s);
        auto c0 = gkp::position_wavefunction(s, LogicalLabel::zero, cut);
        auto c1 = gkp::position_wavefunction(s, LogicalLabel::one, cut);
        EXPECT_NEAR(gkp::comb_inner_product(c0, c1).real(), gkp::codeword_overlap(s), 1e-6) << db;
    }
}

TEST(standard_form, rejects_bad_cut) {
    EXPECT_THROW(gkp::position_wavefunction(SqueezingParam(0.1), LogicalLabel::zero, 0), std::invalid_argument);
}

TEST(standard_form, wigner_matches_transform_oracle) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (double db : {2.0, 5.0, 8.0, 12.0}) {
        SqueezingParam s = SqueezingParam::from_db(db);
        auto zero = gkp_oracle::codeword(s.sigma2(), 0);
        auto one = gkp_oracle::codeword(s.sigma2(), 1);
        auto h = gkp_oracle::hadamard_state(s.sigma2());
        for (int k = 0; k < 60; ++k) {
            WignerPoint pt{u(rng), u(rng)};
            EXPECT_NEAR(gkp::wigner_jjp(s, LogicalLabel::zero, LogicalLabel::zero, pt).real(),
                        gkp_oracle::wigner(zero, pt.q, pt.p), 1e-10);
            EXPECT_NEAR(gkp::wigner_jjp(s, LogicalLabel::one, LogicalLabel::one, pt).real(),
                        gkp_oracle::wigner(one, pt.q, pt.p), 1e-10);
            EXPECT_NEAR(gkp::wigner_h(s, pt), gkp_oracle::wigner(h, pt.q, pt.p), 1e-10);
        }
    }
}

TEST(standard_form, wigner_oracle_matches_direct_integral) {
    // Sanity check of the closed-form oracle against brute-force quadrature of
    // (1/pi) int dy psi(q+y) psi(q-y) cos(2 p y) for a real state.
    auto h = gkp_oracle::hadamard_state(0.12);
    for (auto [q, p] : {std::pair{0.3, -0.7}, std::pair{1.9, 2.2}, std::pair{-2.5, 0.1}}) {
        auto f = [&](double y) {
            return gkp_oracle::evaluate(h, q + y) * gkp_oracle::evaluate(h, q - y) * std::cos(2.0 * p * y);
        };
        double integral = 0.0;
        for (double lo = -20.0; lo < 20.0; lo += 0.5) {
            integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, lo + 0.5, 0, 0);
        }
        EXPECT_NEAR(integral / std::numbers::pi, gkp_oracle::wigner(h, q, p), 1e-11);
    }
}

TEST(standard_form, cross_wigner_is_hermitian) {
    SqueezingParam s(0.07);
    for (double q : {-1.1, 0.0, 0.6}) {
        for (double p : {-0.4, 0.9}) {
            auto w01 = gkp::wigner_jjp(s, LogicalLabel::zero, LogicalLabel::one, {q, p});
            auto w10 = gkp::wigner_jjp(s, LogicalLabel::one, LogicalLabel::zero, {q, p});
            EXPECT_NEAR(std::abs(w01 - std::conj(w10)), 0.0, 1e-13);
        }
    }
}

TEST(standard_form, wigner_position_marginal) {
    // int W(q, p) dp = |psi(q)|^2.
    SqueezingParam s(0.1);
    auto comb = gkp::position_wavefunction(s, LogicalLabel::zero, gkp::default_s_cut(s));
    for (double q : {0.0, 0.4, 1.7724538509, -3.3}) {
        auto f = [&](double p) { return gkp::wigner_jjp(s, LogicalLabel::zero, LogicalLabel::zero, {q, p}).real(); };
        double m = 0.0;
        for (double lo = -16.0; lo < 16.0; lo += 0.5) {
            m += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, lo + 0.5, 0, 0);
        }
        EXPECT_NEAR(m, std::norm(comb.evaluate(q)), 1e-9) << q;
    }
}

TEST(standard_form, separable_form_matches_pointwise) {
    SqueezingParam s(0.03);
    auto sep = gkp::separable_wigner_h(s);
    EXPECT_EQ(sep.terms.size(), 8u);
    EXPECT_EQ(gkp::separable_wigner_jjp(s, LogicalLabel::zero, LogicalLabel::one).terms.size(), 2u);
    for (double q : {-0.5, 0.25, 2.0}) {
        for (double p : {-1.0, 0.33}) {
            EXPECT_NEAR(sep({q, p}), gkp::wigner_h(s, {q, p}), 1e-13);
            EXPECT_NEAR(sep.evaluate_complex({q, p}).imag(), 0.0, 1e-12);
        }
    }
}
