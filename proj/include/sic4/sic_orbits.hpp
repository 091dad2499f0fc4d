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

#ifndef SIC4_SIC_ORBITS_HPP
#define SIC4_SIC_ORBITS_HPP

#include <array>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sic4/clifford_group.hpp"
#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {

inline constexpr int kSicCount = 16;
inline constexpr int kStatesPerSic = 16;
inline constexpr int kOrbitSize = kSicCount * kStatesPerSic;

/// Transformations [F_n, 0], n = 1..16, whose images of SIC 1 define the
/// labelling of the sixteen covariant SICs (rows of four: 1-4, 5-8, 9-12, 13-16).
const std::array<SymplecticPair, kSicCount>& sic_label_transforms();

/// [A_4, chi_4]: antiunitary order-6 generator of the fiducial's stabilizer.
SymplecticPair fiducial_stabilizer_generator();
/// The same generator written out as V followed by complex conjugation.
GroupElement fiducial_stabilizer_matrix();

struct HwIndex {
  int sic_label = 0;  // 1..16
  DisplacementIndex p;
};

/// The 256 fiducial projectors. Index k belongs to SIC label k / 16 + 1 and
/// is D_p V_n |psi_f> with V_n = [F_n, 0] and p = from_linear_index(k % 16).
class FiducialOrbit {
 public:
  std::vector<Ket> kets;
  std::vector<ComplexMatrix> projectors;
  std::vector<int> sic_membership;
  std::vector<HwIndex> hw_index;
  std::vector<SicPovm> sics;  // sics[n - 1] is SIC n

  static int index_of(int sic_label, DisplacementIndex p) {
    return kStatesPerSic * (sic_label - 1) + linear_index(p, 4);
  }
  const SicPovm& sic(int label) const { return sics.at(static_cast<std::size_t>(label - 1)); }
  std::optional<int> find(const ComplexMatrix& rho) const;
  void build_index();

 private:
  std::unordered_map<ProjectiveKey, int, ProjectiveKeyHash> lookup_;
};

/// Builds the orbit from the label transforms and checks that the 256
/// projectors are distinct and each group of 16 is a SIC (std::logic_error
/// otherwise).
FiducialOrbit enumerate_orbit(Tolerance tol = {});
const FiducialOrbit& fiducial_orbit();

/// Image index of every orbit projector under g; std::nullopt if some image
/// leaves the orbit.
std::optional<std::vector<int>> orbit_permutation(const GroupElement& g, const FiducialOrbit& orbit);

/// Extended-Clifford elements fixing rho projectively (unitary ones only if
/// !extended). Throws std::invalid_argument when rho is not an orbit member.
std::vector<CliffordElement> stability_group(const ComplexMatrix& rho, bool extended = true);

/// Orbits of the 15 non-fiducial states of SIC `label` under the square of
/// its fiducial's stabilizer generator. Each orbit is listed in the order
/// the generator visits it, starting from its lexicographically first member.
std::vector<std::vector<DisplacementIndex>> stabilizer_orbits_within_sic(int label = 1);

Complex triple_trace(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

struct TripleTraceCensus {
  struct Entry {
    Complex value;
    int multiplicity = 0;
  };
  std::vector<Entry> entries;  // sorted by argument
  double min_separation = 0.0;
};

/// tr(rho_i rho_j rho_k) over ordered triples of distinct states, clustered
/// with gap `gap`.
TripleTraceCensus triple_trace_census(const SicPovm& sic, double gap = 1e-6);
/// Multiset equality of two censuses within tol.
bool same_census(const TripleTraceCensus& a, const TripleTraceCensus& b, double tol);

using Permutation = std::vector<int>;

Permutation compose_permutations(const Permutation& outer, const Permutation& inner);
int permutation_order(const Permutation& p);

/// Permutation of sic.states induced by g (state j -> g rho_j g^{-1});
/// std::nullopt if g does not preserve the set.
std::optional<Permutation> induced_permutation(const GroupElement& g, const SicPovm& sic);

/// All permutations pi of the SIC states preserving every triple product:
/// T(pi i, pi j, pi k) = T(i, j, k), or its conjugate when `antiunitary`.
/// When `fixed` is set, only permutations fixing that state are returned.
std::vector<Permutation> triple_preserving_permutations(const SicPovm& sic, bool antiunitary,
                                                        std::optional<int> fixed = std::nullopt);

/// Elements of `group` that map the SIC's state set onto itself.
std::vector<CliffordElement> sic_symmetry_elements(const SicPovm& sic, const std::vector<CliffordElement>& group);

struct SymmetryGroupReport {
  int unitary_order = 0;   // Clifford elements permuting SIC 1
  int extended_order = 0;  // extended Clifford elements permuting SIC 1
  int clifford_stabilizer_order = 0;          // unitary elements also fixing rho_f
  int triple_preserving_stabilizer_count = 0;  // permutations fixing state 0 that keep all triple traces
  int triple_preserving_count = 0;             // all such permutations (unitary type)
  bool stabilizer_realized_by_clifford = false;
  int two_power_elements = 0;  // elements of 2-power order in the unitary symmetry group
  bool sylow_subgroup_is_hw = false;
  bool pass = false;
};

SymmetryGroupReport verify_symmetry_group_in_clifford();

/// Permutation of SIC labels: permutation[n - 1] is the label of the image of SIC n.
struct SymmetryPermutation {
  SymplecticPair element;
  std::array<int, kSicCount> permutation{};
};

/// Throws std::logic_error if the element does not permute the 16 SICs.
SymmetryPermutation symmetry_action(const SymplecticPair& s);
std::array<int, kSicCount> symmetry_action(const GroupElement& g);

struct ConjugacyClass {
  int element_order = 0;
  int size = 0;
  int representative = 0;  // index into QuotientGroupReport::elements
};

/// Structure of the Clifford group modulo the HW group acting on SIC labels.
struct QuotientGroupReport {
  std::vector<SymplecticPair> elements;  // one representative per coset
  std::vector<std::array<int, kSicCount>> label_permutations;
  std::map<int, int> elements_by_order;
  std::vector<ConjugacyClass> classes;
  int center_order = 0;
  std::optional<int> central_involution;  // index of the order-2 central element
  int row_preserving_order = 0;
  bool row_subgroup_normal = false;
  bool row_action_uniform = false;  // same column permutation in every row
  std::vector<std::array<int, 4>> row_permutations;  // distinct induced permutations of rows 0..3
  bool row_quotient_cyclic = false;  // generated by rows 1 -> 3 -> 2 -> 4 -> 1
};

QuotientGroupReport analyze_sic_permutation_group(bool extended = false);

/// Three kets with pairwise fidelity 1/(d+1) parametrized by theta in [-pi, pi).
/// Throws std::invalid_argument for d < 3.
std::array<Ket, 3> triple_family(int d, double theta);
/// Argument of the family's triple product, in [-pi, pi).
double triple_phase(int d, double theta);

}  // namespace sic4

#endif  // SIC4_SIC_ORBITS_HPP
