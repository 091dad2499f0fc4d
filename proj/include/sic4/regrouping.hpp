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

#ifndef SIC4_REGROUPING_HPP
#define SIC4_REGROUPING_HPP

#include <array>
#include <vector>

#include "sic4/clifford_group.hpp"
#include "sic4/sic_orbits.hpp"

namespace sic4 {

/// Labels of the four SICs in each row of the 4 x 4 arrangement.
inline constexpr std::array<std::array<int, 4>, 4> kSicRows{{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}}};

/// Four states of one SIC related by H = {I, X^2, Z^2, X^2 Z^2}.
struct HOrbit {
  int sic_label = 0;
  std::array<int, 4> members{};  // orbit indices, ascending
};

/// Partition of SIC `sic_label` into four H-orbits, ordered by first member.
std::array<HOrbit, 4> h_orbits(int sic_label);

struct RegroupedSic {
  SicPovm sic;
  std::array<HOrbit, 4> parts;     // one H-orbit from each SIC of the row
  std::array<int, 16> members{};   // orbit indices, in part order
};

/// The four SICs obtained by matching H-orbits across a row. Throws
/// std::invalid_argument if `row` is not a row, std::logic_error if a match
/// is missing or ambiguous, or an assembled set is not a SIC.
std::vector<RegroupedSic> regroup_row(const std::array<int, 4>& row, Tolerance tol = {});
/// All sixteen regrouped SICs, rows in order.
const std::vector<RegroupedSic>& regrouped_sics();

struct RegroupScan {
  std::vector<std::array<int, 16>> sics;  // sorted member lists
  int original = 0;                       // of which coincide with SICs 1..16
  int regrouped = 0;                      // coincide with regrouped_sics()
  std::vector<int> per_row;               // cliques found in each row's 64 states (row mode)
  std::vector<int> memberships;           // number of found SICs containing each state
  int graph_degree_min = 0;
  int graph_degree_max = 0;
  int total() const { return static_cast<int>(sics.size()); }
};

/// Enumerates every 16-clique of the fidelity-1/5 graph. Row mode searches
/// each row's 64 states separately; full_scan searches all 256 at once.
RegroupScan exhaustive_regroup_scan(const FiducialOrbit& orbit, bool full_scan);

struct DPrimeGenerators {
  ComplexMatrix x_prime;
  ComplexMatrix z_prime;
  SymplecticPair x_pair;
  SymplecticPair z_pair;
};

/// The two generators of the displacement group of the regrouped SICs, as
/// literal matrices and as symplectic pairs.
DPrimeGenerators dprime_generators();
/// The 16 products X'^a Z'^b.
std::vector<ComplexMatrix> dprime_group();

/// The unitary U with U D U^dagger = D' that maps the original SICs onto the
/// regrouped ones and fixes rho_f.
ComplexMatrix equivalence_unitary();

struct SubgroupCensus {
  int total = 0;
  int normal = 0;
  bool normal_are_d_and_dprime = false;
  int extended_normalizer_order = 0;  // |<Clifford, U>| projectively
  int clifford_index = 0;
  bool normalizer_preserves_orbit = false;
};

/// Order-16 subgroups of the projective Clifford group generated by two
/// order-4 elements A, B with A B = omega B A (projective copies of D).
SubgroupCensus hw_conjugate_subgroup_census();

}  // namespace sic4

#endif  // SIC4_REGROUPING_HPP
