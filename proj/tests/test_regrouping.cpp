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

#include <map>
#include <set>

#include "sic4/hw_reconstruction.hpp"
#include "sic4/regrouping.hpp"

namespace sic4 {
namespace {

TEST(HOrbits, PartitionSicOne) {
  const auto orbits = h_orbits(1);
  EXPECT_EQ(orbits[0].members, (std::array<int, 4>{0, 2, 8, 10}));
  std::set<int> all;
  for (const auto& o : orbits) {
    EXPECT_EQ(o.sic_label, 1);
    all.insert(o.members.begin(), o.members.end());
  }
  EXPECT_EQ(all.size(), 16u);
  EXPECT_THROW(h_orbits(0), std::invalid_argument);
}

TEST(HOrbits, InvariantUnderSquares) {
  const auto& orbit = fiducial_orbit();
  const GroupElement x2(displacement(2, 0, 4));
  const GroupElement z2(displacement(0, 2, 4));
  for (int label = 1; label <= kSicCount; ++label) {
    for (const auto& o : h_orbits(label)) {
      const std::set<int> members(o.members.begin(), o.members.end());
      for (int m : o.members) {
        EXPECT_TRUE(members.count(*orbit.find(conjugate_by(x2, orbit.projectors[static_cast<std::size_t>(m)]))));
        EXPECT_TRUE(members.count(*orbit.find(conjugate_by(z2, orbit.projectors[static_cast<std::size_t>(m)]))));
      }
    }
  }
}

TEST(Regroup, RowsYieldSixteenNewSics) {
  EXPECT_THROW(regroup_row({1, 2, 3, 5}), std::invalid_argument);
  const auto& all = regrouped_sics();
  ASSERT_EQ(all.size(), 16u);
  const auto& orbit = fiducial_orbit();
  for (const auto& r : all) {
    EXPECT_TRUE(verify_sic(r.sic).is_sic);
    std::map<int, int> per_label;
    for (int m : r.members) ++per_label[orbit.sic_membership[static_cast<std::size_t>(m)]];
    EXPECT_EQ(per_label.size(), 4u);
    for (const auto& [label, n] : per_label) EXPECT_EQ(n, 4);
  }
}

TEST(Regroup, RowScanFindsNoOthers) {
  const auto scan = exhaustive_regroup_scan(fiducial_orbit(), false);
  EXPECT_EQ(scan.total(), 32);
  EXPECT_EQ(scan.original, 16);
  EXPECT_EQ(scan.regrouped, 16);
  EXPECT_EQ(scan.per_row, (std::vector<int>{8, 8, 8, 8}));
  EXPECT_EQ(scan.graph_degree_min, 33);
  EXPECT_EQ(scan.graph_degree_max, 33);
}

TEST(Regroup, FullScanFindsThirtyTwo) {
  const auto scan = exhaustive_regroup_scan(fiducial_orbit(), true);
  EXPECT_EQ(scan.total(), 32);
  EXPECT_EQ(scan.original + scan.regrouped, 32);
  for (int m : scan.memberships) EXPECT_EQ(m, 2);
}

TEST(DPrime, LiteralGenerators) {
  const auto g = dprime_generators();
  EXPECT_EQ(g.x_prime(0, 0), Complex(1.0));
  EXPECT_EQ(g.x_prime(1, 3), Complex(1.0));
  EXPECT_EQ(g.x_prime(2, 2), Complex(-1.0));
  EXPECT_EQ(g.x_prime(3, 1), Complex(-1.0));
  EXPECT_EQ(g.z_prime(0, 1), Complex(0.5, 0.5));
  EXPECT_EQ(g.z_prime(0, 3), Complex(-0.5, 0.5));
  EXPECT_TRUE(is_unitary(g.x_prime, 1e-15));
  EXPECT_TRUE(is_unitary(g.z_prime, 1e-15));
  EXPECT_TRUE(proj_equal(to_operator(g.x_pair).op.matrix(), g.x_prime));
  EXPECT_TRUE(proj_equal(to_operator(g.z_pair).op.matrix(), g.z_prime));
  // The written pair commutes to the conjugate root: X'Z' = omega Z'X'.
  EXPECT_LT((g.x_prime * g.z_prime - omega(4) * g.z_prime * g.x_prime).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(dprime_group().size(), 16u);
}

TEST(DPrime, RegroupedSicsCovariant) {
  const auto g = dprime_generators();
  for (const auto& r : regrouped_sics()) {
    EXPECT_TRUE(induced_permutation(GroupElement(g.x_prime), r.sic).has_value());
    EXPECT_TRUE(induced_permutation(GroupElement(g.z_prime), r.sic).has_value());
  }
}

TEST(DPrime, ReconstructionOnRegroupedSics) {
  const auto dp = dprime_group();
  for (const auto& r : regrouped_sics()) {
    const auto rec = reconstruct_hw(r.sic);
    EXPECT_TRUE(same_projective_set(rec.group, dp)) << r.sic.label;
    EXPECT_TRUE(uniqueness_check(r.sic));
  }
}

TEST(Equivalence, UnitaryProperties) {
  const ComplexMatrix u = equivalence_unitary();
  EXPECT_TRUE(is_unitary(u, 1e-12));
  const ComplexMatrix rho = projector(fiducial_ket_d4());
  EXPECT_TRUE(proj_equal(ComplexMatrix(u * rho * u.adjoint()), rho));
  std::vector<ComplexMatrix> image;
  for (const auto& d : standard_hw_group()) image.push_back(u * d * u.adjoint());
  EXPECT_TRUE(same_projective_set(image, dprime_group()));
}

TEST(Equivalence, MapsOriginalsOntoRegrouped) {
  const auto& orbit = fiducial_orbit();
  const GroupElement u(equivalence_unitary());
  std::set<std::set<int>> images, regrouped;
  for (const auto& sic : orbit.sics) {
    std::set<int> img;
    for (const auto& rho : sic.states) {
      const auto hit = orbit.find(conjugate_by(u, rho));
      ASSERT_TRUE(hit.has_value());
      img.insert(*hit);
    }
    images.insert(img);
  }
  for (const auto& r : regrouped_sics()) regrouped.insert(std::set<int>(r.members.begin(), r.members.end()));
  EXPECT_EQ(images, regrouped);
}

TEST(SubgroupCensus, ThirtyTwoWithTwoNormal) {
  const auto c = hw_conjugate_subgroup_census();
  EXPECT_EQ(c.total, 32);
  EXPECT_EQ(c.normal, 2);
  EXPECT_TRUE(c.normal_are_d_and_dprime);
  EXPECT_EQ(c.clifford_index, 2);
  EXPECT_EQ(c.extended_normalizer_order, 1536);
  EXPECT_TRUE(c.normalizer_preserves_orbit);
}

}  // namespace
}  // namespace sic4
