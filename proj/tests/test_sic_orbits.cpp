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

#include <algorithm>
#include <set>

#include "sic4/sic_orbits.hpp"

namespace sic4 {
namespace {

struct FrozenTriple {
  double re;
  double im;
  int multiplicity;
};

// Brute-force census of SIC 1 from tests/oracles/frozen_values.py, sorted by argument.
constexpr FrozenTriple kFrozenCensus[] = {
    {-0.070315516850829, -0.055278640450004, 144}, {-0.029247127875576, -0.084525768325580, 288},
    {0.000000000000000, -0.089442719099992, 288},  {0.048374330124739, -0.075232467625240, 96},
    {0.055278640450004, -0.070315516850828, 288},  {0.070315516850828, -0.055278640450004, 144},
    {0.075232467625240, -0.048374330124739, 96},   {0.084525768325580, -0.029247127875576, 288},
    {0.089442719099991, 0.000000000000000, 96},    {0.084525768325580, 0.029247127875576, 288},
    {0.075232467625240, 0.048374330124739, 96},    {0.070315516850829, 0.055278640450004, 144},
    {0.055278640450004, 0.070315516850829, 288},   {0.048374330124739, 0.075232467625240, 96},
    {0.000000000000000, 0.089442719099992, 288},   {-0.029247127875576, 0.084525768325580, 288},
    {-0.070315516850829, 0.055278640450004, 144},
};

const ComplexMatrix& rho_f() {
  static const ComplexMatrix r = projector(fiducial_ket_d4());
  return r;
}

TEST(Orbit, CountsAndLabelling) {
  const auto& orbit = fiducial_orbit();
  ASSERT_EQ(orbit.projectors.size(), 256u);
  ASSERT_EQ(orbit.sics.size(), 16u);
  EXPECT_TRUE(proj_equal(orbit.projectors[0], rho_f()));
  EXPECT_EQ(orbit.find(rho_f()), 0);
  for (int k = 0; k < kOrbitSize; ++k) {
    const auto& hw = orbit.hw_index[static_cast<std::size_t>(k)];
    EXPECT_EQ(FiducialOrbit::index_of(hw.sic_label, hw.p), k);
    EXPECT_EQ(orbit.sic_membership[static_cast<std::size_t>(k)], hw.sic_label);
  }
  for (const auto& sic : orbit.sics) EXPECT_TRUE(verify_sic(sic).is_sic);
}

TEST(Orbit, LabelTransformsFollowTheTable) {
  const auto& f = sic_label_transforms();
  EXPECT_EQ(f[0], SymplecticPair::identity(4));
  EXPECT_EQ(f[1].f(), (std::array<int, 4>{0, 3, 5, 7}));
  EXPECT_EQ(f[15].f(), (std::array<int, 4>{0, 3, 5, 0}));
}

TEST(Orbit, ClosedUnderExtendedClifford) {
  const auto& orbit = fiducial_orbit();
  for (const auto& c : projective_clifford_d4(true)) ASSERT_TRUE(orbit_permutation(c.op, orbit).has_value());
}

TEST(Stabilizer, FiducialOrderSix) {
  EXPECT_EQ(stability_group(rho_f(), true).size(), 6u);
  EXPECT_EQ(stability_group(rho_f(), false).size(), 3u);
  EXPECT_EQ(stability_group(fiducial_orbit().projectors[200], true).size(), 6u);
  Ket e0 = Ket::Zero(4);
  e0(0) = 1.0;
  EXPECT_THROW(stability_group(projector(e0)), std::invalid_argument);
}

TEST(Stabilizer, GeneratorMatchesWrittenMatrix) {
  const auto g = to_operator(fiducial_stabilizer_generator());
  EXPECT_TRUE(proj_equal(g.op, fiducial_stabilizer_matrix()));
  EXPECT_EQ(projective_order(g.op), 6);
}

TEST(Stabilizer, OrbitsWithinSicOne) {
  const auto orbits = stabilizer_orbits_within_sic(1);
  ASSERT_EQ(orbits.size(), 5u);
  std::set<std::set<DisplacementIndex>> got;
  for (const auto& o : orbits) {
    EXPECT_EQ(o.size(), 3u);
    got.insert(std::set<DisplacementIndex>(o.begin(), o.end()));
  }
  const std::set<std::set<DisplacementIndex>> expected{
      {{1, 0}, {0, 3}, {3, 1}}, {{3, 3}, {3, 2}, {2, 3}}, {{0, 1}, {1, 3}, {3, 0}}, {{1, 2}, {2, 1}, {1, 1}}, {{2, 0}, {0, 2}, {2, 2}}};
  EXPECT_EQ(got, expected);
}

TEST(TripleTrace, Basics) {
  EXPECT_NEAR(std::abs(triple_trace(rho_f(), rho_f(), rho_f()) - 1.0), 0.0, 1e-14);
  const auto& s = fiducial_orbit().sic(1);
  const GroupElement u(displacement(1, 3, 4) * to_operator(SymplecticPair(4, {2, 1, 1, 1})).op.matrix());
  const Complex before = triple_trace(s.states[1], s.states[5], s.states[9]);
  const Complex after = triple_trace(conjugate_by(u, s.states[1]), conjugate_by(u, s.states[5]), conjugate_by(u, s.states[9]));
  EXPECT_NEAR(std::abs(before - after), 0.0, 1e-14);
}

TEST(TripleTrace, CensusMatchesOracle) {
  const auto census = triple_trace_census(fiducial_orbit().sic(1));
  ASSERT_EQ(census.entries.size(), std::size(kFrozenCensus));
  for (std::size_t i = 0; i < census.entries.size(); ++i) {
    EXPECT_NEAR(census.entries[i].value.real(), kFrozenCensus[i].re, 1e-12);
    EXPECT_NEAR(census.entries[i].value.imag(), kFrozenCensus[i].im, 1e-12);
    EXPECT_EQ(census.entries[i].multiplicity, kFrozenCensus[i].multiplicity);
  }
  EXPECT_NEAR(census.min_separation, 0.008476196433869557, 1e-12);
}

TEST(TripleTrace, CensusIdenticalAcrossSics) {
  const auto& orbit = fiducial_orbit();
  const auto ref = triple_trace_census(orbit.sic(1));
  for (int n = 2; n <= kSicCount; ++n) EXPECT_TRUE(same_census(ref, triple_trace_census(orbit.sic(n)), 1e-9)) << n;
}

TEST(Symmetry, GroupOfSicOne) {
  const auto r = verify_symmetry_group_in_clifford();
  EXPECT_EQ(r.unitary_order, 48);
  EXPECT_EQ(r.extended_order, 96);
  EXPECT_EQ(r.triple_preserving_stabilizer_count, 3);
  EXPECT_EQ(r.triple_preserving_count, 48);
  EXPECT_TRUE(r.sylow_subgroup_is_hw);
  EXPECT_TRUE(r.pass);
}

TEST(Symmetry, PermutationHelpers) {
  const Permutation p{1, 2, 0, 4, 3};
  EXPECT_EQ(permutation_order(p), 6);
  EXPECT_EQ(compose_permutations(p, p), (Permutation{2, 0, 1, 3, 4}));
  const auto id = symmetry_action(SymplecticPair::identity(4));
  for (int n = 0; n < kSicCount; ++n) EXPECT_EQ(id.permutation[static_cast<std::size_t>(n)], n + 1);
}

TEST(Symmetry, QuotientStructure) {
  const auto q = analyze_sic_permutation_group(false);
  EXPECT_EQ(q.elements.size(), 48u);
  const std::map<int, int> orders{{1, 1}, {2, 7}, {3, 8}, {4, 24}, {6, 8}};
  EXPECT_EQ(q.elements_by_order, orders);
  EXPECT_EQ(q.center_order, 2);
  ASSERT_TRUE(q.central_involution.has_value());
  const auto& central = q.label_permutations[static_cast<std::size_t>(*q.central_involution)];
  // Rows 1 <-> 2 and 3 <-> 4 with every column fixed.
  const std::array<int, kSicCount> expected{5, 6, 7, 8, 1, 2, 3, 4, 13, 14, 15, 16, 9, 10, 11, 12};
  EXPECT_EQ(central, expected);
  EXPECT_EQ(q.row_preserving_order, 12);
  EXPECT_TRUE(q.row_subgroup_normal);
  EXPECT_TRUE(q.row_quotient_cyclic);
}

TEST(TripleFamily, FidelitiesAndNormalization) {
  for (int d : {3, 4, 5}) {
    for (double theta : {-3.0, -1.0, 0.0, 0.5, kPi / 2, 3.1}) {
      const auto k = triple_family(d, theta);
      for (const auto& v : k) EXPECT_NEAR(v.norm(), 1.0, 1e-13);
      EXPECT_NEAR(std::norm(k[0].dot(k[1])), 1.0 / (d + 1), 1e-13);
      EXPECT_NEAR(std::norm(k[0].dot(k[2])), 1.0 / (d + 1), 1e-13);
      EXPECT_NEAR(std::norm(k[1].dot(k[2])), 1.0 / (d + 1), 1e-13);
    }
  }
  EXPECT_THROW(triple_family(2, 0.0), std::invalid_argument);
}

TEST(TripleFamily, PhaseIsMonotone) {
  EXPECT_NEAR(triple_phase(4, 0.0), 0.0, 1e-15);
  for (int d : {3, 4, 5}) {
    double prev = -10.0;
    for (int i = 0; i < 1000; ++i) {
      const double phi = triple_phase(d, -kPi + 2 * kPi * i / 1000.0);
      EXPECT_GT(phi, prev);
      EXPECT_GE(phi, -kPi);
      EXPECT_LT(phi, kPi);
      prev = phi;
    }
  }
}

TEST(TripleFamily, GenericTripleIsNotInCensus) {
  const auto census = triple_trace_census(fiducial_orbit().sic(1));
  const double phi = triple_phase(4, 0.3);
  for (const auto& e : census.entries) EXPECT_GT(std::abs(std::arg(e.value) - phi), 1e-6);
}

}  // namespace
}  // namespace sic4
