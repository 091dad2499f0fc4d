// Copyright 2026 The sic4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {
namespace {

Ket qubit_fiducial() {
  const double theta = 0.5 * std::acos(1.0 / std::sqrt(3.0));
  Ket v(2);
  v << std::cos(theta), std::polar(std::sin(theta), kPi / 4);
  return v;
}

TEST(Displacement, PhaseConventions) {
  EXPECT_EQ(d_bar(3), 3);
  EXPECT_EQ(d_bar(4), 8);
  EXPECT_NEAR(std::abs(tau(4) - std::polar(1.0, 5 * kPi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(tau(4) * tau(4) - omega(4)), 0.0, 1e-15);
  // Frozen by the independent oracle: D_{1,1}[1,0] = tau.
  const ComplexMatrix d11 = displacement(1, 1, 4);
  EXPECT_NEAR(d11(1, 0).real(), -0.7071067811865476, 1e-15);
  EXPECT_NEAR(d11(1, 0).imag(), -0.7071067811865475, 1e-15);
}

TEST(Displacement, GeneratorsAndLift) {
  const ComplexMatrix x = shift_operator(4);
  const ComplexMatrix z = phase_operator(4);
  EXPECT_LT((z * x - omega(4) * x * z).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((displacement(1, 0, 4) - x).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((displacement(0, 1, 4) - z).cwiseAbs().maxCoeff(), 1e-14);
  // Even d: D_{p + d e_1} = (-1)^{p2} D_p.
  EXPECT_LT((displacement(5, 1, 4) + displacement(1, 1, 4)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((displacement(5, 2, 4) - displacement(1, 2, 4)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((displacement(1, 1, 3) - displacement(4, 1, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Displacement, CommutationLaw) {
  for (int d = 2; d <= 6; ++d) EXPECT_TRUE(weyl_commutation_check(d)) << "d = " << d;
}

TEST(Displacement, OrthogonalityOfTraces) {
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const Complex t = (displacement(from_linear_index(a, 4), 4).adjoint() * displacement(from_linear_index(b, 4), 4)).trace();
      EXPECT_NEAR(std::abs(t), a == b ? 4.0 : 0.0, 1e-12);
    }
}

TEST(Constants, GoldenRatioAmplitudes) {
  EXPECT_NEAR(SicConstants::a_plus(), 0.59768743968021, 1e-13);
  EXPECT_NEAR(SicConstants::a_minus(), 0.2068084245105004, 1e-13);
  EXPECT_NEAR(SicConstants::b(), 0.4472135954999579, 1e-13);
  EXPECT_NEAR(SicConstants::golden() * (1 + SicConstants::golden()), 1.0, 1e-14);
  EXPECT_NEAR(SicConstants::g_plus() * SicConstants::g_plus() + SicConstants::g_minus() * SicConstants::g_minus(), 0.4, 1e-14);
}

TEST(Fiducial, ClosedFormKetIsFiducial) {
  const Ket v = fiducial_ket_d4();
  EXPECT_NEAR(v.norm(), 1.0, 1e-14);
  EXPECT_TRUE(is_fiducial(v, 4, Tolerance(1e-12)));
  for (int k = 1; k < 16; ++k) {
    EXPECT_NEAR(std::abs(v.dot(displacement(from_linear_index(k, 4), 4) * v)), 1 / std::sqrt(5.0), 1e-9);
  }
}

TEST(Fiducial, RejectsBadInput) {
  Ket e0 = Ket::Zero(4);
  e0(0) = 1.0;
  EXPECT_FALSE(is_fiducial(e0, 4));
  EXPECT_THROW(is_fiducial(Ket(2.0 * e0), 4), std::invalid_argument);
  EXPECT_THROW(generate_sic(e0, 4), std::invalid_argument);
}

TEST(Sic, QubitTetrahedron) {
  const auto sic = generate_sic(qubit_fiducial(), 2, {}, "tetrahedron");
  ASSERT_EQ(sic.states.size(), 4u);
  EXPECT_TRUE(verify_sic(sic).is_sic);
}

TEST(Sic, FourDimensional) {
  const auto sic = generate_sic(fiducial_ket_d4(), 4);
  const auto r = verify_sic(sic);
  EXPECT_TRUE(r.is_sic);
  EXPECT_LT(r.max_fidelity_deviation, 1e-12);
  EXPECT_LT(r.completeness_deviation, 1e-12);
}

TEST(Sic, VerifyDetectsDefects) {
  auto sic = generate_sic(fiducial_ket_d4(), 4);
  std::vector<ComplexMatrix> short_list(sic.states.begin(), sic.states.end() - 1);
  EXPECT_THROW(verify_sic(short_list, 4), std::invalid_argument);
  sic.states[3] = sic.states[4];
  EXPECT_FALSE(verify_sic(sic).is_sic);
}

TEST(Sic, JsonRoundTrip) {
  const auto sic = generate_sic(fiducial_ket_d4(), 4, {}, "one");
  const auto back = sic_from_json(sic_to_json(sic));
  EXPECT_EQ(back.label, "one");
  ASSERT_EQ(back.states.size(), 16u);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_LT((back.states[k] - sic.states[k]).cwiseAbs().maxCoeff(), 1e-15);
  auto j = sic_to_json(sic);
  j["d"] = 3;
  EXPECT_THROW(sic_from_json(j), std::invalid_argument);
}

}  // namespace
}  // namespace sic4
