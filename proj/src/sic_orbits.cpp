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

#include "sic4/sic_orbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sic4 {

const std::array<SymplecticPair, kSicCount>& sic_label_transforms() {
  static const std::array<SymplecticPair, kSicCount> transforms{
      SymplecticPair(4, {1, 0, 0, 1}), SymplecticPair(4, {0, 3, 5, 7}), SymplecticPair(4, {2, 1, 1, 1}),
      SymplecticPair(4, {6, 7, 3, 5}), SymplecticPair(4, {0, 3, 5, 5}), SymplecticPair(4, {0, 1, 7, 1}),
      SymplecticPair(4, {6, 7, 7, 7}), SymplecticPair(4, {3, 1, 1, 6}), SymplecticPair(4, {3, 1, 2, 1}),
      SymplecticPair(4, {6, 7, 1, 4}), SymplecticPair(4, {0, 3, 5, 6}), SymplecticPair(4, {0, 1, 7, 0}),
      SymplecticPair(4, {6, 7, 5, 6}), SymplecticPair(4, {3, 1, 0, 3}), SymplecticPair(4, {0, 1, 7, 2}),
      SymplecticPair(4, {0, 3, 5, 0}),
  };
  return transforms;
}

SymplecticPair fiducial_stabilizer_generator() { return {4, {-1, 1, -1, 2}, {2, 0}}; }

GroupElement fiducial_stabilizer_matrix() {
  const Complex e1 = std::polar(1.0, kPi / 4);
  const Complex e3 = std::polar(1.0, -3 * kPi / 4);
  ComplexMatrix v(4, 4);
  v << 1.0, e1, -1.0, e1,  //
      kI, e3, kI, e1,      //
      1.0, e3, -1.0, e3,   //
      kI, e1, kI, e3;
  return GroupElement(v / 2.0, true);
}

std::optional<int> FiducialOrbit::find(const ComplexMatrix& rho) const {
  const auto it = lookup_.find(projector_key(rho));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void FiducialOrbit::build_index() {
  lookup_.clear();
  for (std::size_t k = 0; k < projectors.size(); ++k) lookup_.emplace(projector_key(projectors[k]), static_cast<int>(k));
}

FiducialOrbit enumerate_orbit(Tolerance tol) {
  FiducialOrbit orbit;
  const Ket psi = fiducial_ket_d4();
  for (int n = 1; n <= kSicCount; ++n) {
    const auto v = to_operator(sic_label_transforms()[static_cast<std::size_t>(n - 1)]);
    const Ket fid = apply(v.op, psi);
    SicPovm sic = generate_sic(fid, 4, tol, "SIC " + std::to_string(n));
    for (int k = 0; k < kStatesPerSic; ++k) {
      const DisplacementIndex p = from_linear_index(k, 4);
      orbit.kets.push_back(displacement(p, 4) * fid);
      orbit.projectors.push_back(sic.states[static_cast<std::size_t>(k)]);
      orbit.sic_membership.push_back(n);
      orbit.hw_index.push_back({n, p});
    }
    if (!verify_sic(sic, tol).is_sic) throw std::logic_error("enumerate_orbit: SIC " + std::to_string(n) + " fails verification");
    orbit.sics.push_back(std::move(sic));
  }
  orbit.build_index();
  std::set<ProjectiveKey> distinct;
  for (const auto& rho : orbit.projectors) distinct.insert(projector_key(rho));
  if (distinct.size() != static_cast<std::size_t>(kOrbitSize)) {
    throw std::logic_error("enumerate_orbit: expected 256 distinct projectors, found " + std::to_string(distinct.size()));
  }
  return orbit;
}

const FiducialOrbit& fiducial_orbit() {
  static const FiducialOrbit orbit = enumerate_orbit();
  return orbit;
}

std::optional<std::vector<int>> orbit_permutation(const GroupElement& g, const FiducialOrbit& orbit) {
  std::vector<int> image(orbit.projectors.size());
  for (std::size_t k = 0; k < orbit.projectors.size(); ++k) {
    const auto hit = orbit.find(conjugate_by(g, orbit.projectors[k]));
    if (!hit) return std::nullopt;
    image[k] = *hit;
  }
  return image;
}

std::vector<CliffordElement> stability_group(const ComplexMatrix& rho, bool extended) {
  const auto& orbit = fiducial_orbit();
  const auto where = orbit.find(rho);
  if (!where) throw std::invalid_argument("stability_group: state is not in the fiducial orbit");
  const auto& target = orbit.projectors[static_cast<std::size_t>(*where)];
  std::vector<CliffordElement> out;
  for (const auto& c : projective_clifford_d4(extended)) {
    if (orbit.find(conjugate_by(c.op, target)) == where) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<DisplacementIndex>> stabilizer_orbits_within_sic(int label) {
  if (label < 1 || label > kSicCount) throw std::invalid_argument("stabilizer_orbits_within_sic: label out of range");
  const auto& orbit = fiducial_orbit();
  const auto& v = sic_label_transforms()[static_cast<std::size_t>(label - 1)];
  const auto gen = fiducial_stabilizer_generator();
  // Stabilizer of SIC n's fiducial is V_n S V_n^{-1}.
  const auto square = semidirect_product(gen, gen);
  const auto g = to_operator(semidirect_product(semidirect_product(v, square), inverse(v))).op;
  const int base = FiducialOrbit::index_of(label, {0, 0});
  std::vector<bool> seen(kStatesPerSic, false);
  seen[0] = true;
  std::vector<std::vector<DisplacementIndex>> out;
  for (int start = 1; start < kStatesPerSic; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<DisplacementIndex> cycle;
    int k = start;
    while (!seen[static_cast<std::size_t>(k)]) {
      seen[static_cast<std::size_t>(k)] = true;
      cycle.push_back(from_linear_index(k, 4));
      const auto next = orbit.find(conjugate_by(g, orbit.projectors[static_cast<std::size_t>(base + k)]));
      if (!next || *next / kStatesPerSic != label - 1) {
        throw std::logic_error("stabilizer_orbits_within_sic: stabilizer does not preserve the SIC");
      }
      k = *next - base;
    }
    if (k != start) throw std::logic_error("stabilizer_orbits_within_sic: action is not a permutation");
    out.push_back(std::move(cycle));
  }
  return out;
}

Complex triple_trace(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return (a * b * c).trace();
}

namespace {

using TripleTable = std::vector<Complex>;

TripleTable triple_table(const SicPovm& sic) {
  const std::size_t n = sic.states.size();
  TripleTable t(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix ij = sic.states[i] * sic.states[j];
      for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = (ij * sic.states[k]).trace();
    }
  }
  return t;
}

}  // namespace

TripleTraceCensus triple_trace_census(const SicPovm& sic, double gap) {
  const std::size_t n = sic.states.size();
  const auto table = triple_table(sic);
  TripleTraceCensus census;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Complex v = table[(i * n + j) * n + k];
        auto it = std::find_if(census.entries.begin(), census.entries.end(),
                               [&](const auto& e) { return std::abs(e.value - v) < gap; });
        if (it == census.entries.end()) {
          census.entries.push_back({v, 1});
        } else {
          ++it->multiplicity;
        }
      }
    }
  }
  std::sort(census.entries.begin(), census.entries.end(),
            [](const auto& a, const auto& b) { return std::arg(a.value) < std::arg(b.value); });
  census.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < census.entries.size(); ++a) {
    for (std::size_t b = a + 1; b < census.entries.size(); ++b) {
      census.min_separation = std::min(census.min_separation, std::abs(census.entries[a].value - census.entries[b].value));
    }
  }
  return census;
}

bool same_census(const TripleTraceCensus& a, const TripleTraceCensus& b, double tol) {
  if (a.entries.size() != b.entries.size()) return false;
  std::vector<bool> used(b.entries.size(), false);
  for (const auto& e : a.entries) {
    bool matched = false;
    for (std::size_t k = 0; k < b.entries.size() && !matched; ++k) {
      if (!used[k] && b.entries[k].multiplicity == e.multiplicity && std::abs(b.entries[k].value - e.value) <= tol) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Permutation compose_permutations(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

int permutation_order(const Permutation& p) {
  Permutation power = p;
  for (int n = 1;; ++n) {
    bool identity = true;
    for (std::size_t i = 0; i < power.size() && identity; ++i) identity = power[i] == static_cast<int>(i);
    if (identity) return n;
    power = compose_permutations(p, power);
  }
}

std::optional<Permutation> induced_permutation(const GroupElement& g, const SicPovm& sic) {
  std::unordered_map<ProjectiveKey, int, ProjectiveKeyHash> index;
  for (std::size_t k = 0; k < sic.states.size(); ++k) index.emplace(projector_key(sic.states[k]), static_cast<int>(k));
  Permutation perm(sic.states.size());
  for (std::size_t k = 0; k < sic.states.size(); ++k) {
    const auto it = index.find(projector_key(conjugate_by(g, sic.states[k])));
    if (it == index.end()) return std::nullopt;
    perm[k] = it->second;
  }
  return perm;
}

namespace {

constexpr double kTripleMatchTol = 1e-8;

void extend_permutation(const TripleTable& t, std::size_t n, bool antiunitary, Permutation& perm,
                        std::vector<bool>& used, std::vector<Permutation>& out) {
  const std::size_t m = [&] {
    std::size_t k = 0;
    while (k < n && perm[k] >= 0) ++k;
    return k;
  }();
  if (m == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      for (std::size_t j = 0; j < m && ok; ++j) {
        if (i == j) continue;
        Complex want = t[(i * n + j) * n + m];
        if (antiunitary) want = std::conj(want);
        const auto pi = static_cast<std::size_t>(perm[i]);
        const auto pj = static_cast<std::size_t>(perm[j]);
        ok = std::abs(t[(pi * n + pj) * n + c] - want) <= kTripleMatchTol;
      }
    }
    if (!ok) continue;
    perm[m] = static_cast<int>(c);
    used[c] = true;
    extend_permutation(t, n, antiunitary, perm, used, out);
    perm[m] = -1;
    used[c] = false;
  }
}

}  // namespace

std::vector<Permutation> triple_preserving_permutations(const SicPovm& sic, bool antiunitary, std::optional<int> fixed) {
  const std::size_t n = sic.states.size();
  const auto table = triple_table(sic);
  std::vector<Permutation> out;
  Permutation perm(n, -1);
  std::vector<bool> used(n, false);
  if (fixed) {
    // Relabel so that the fixed state is tried first with itself as image.
    const auto f = static_cast<std::size_t>(*fixed);
    Permutation order(n);
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[f]);
    SicPovm reordered = sic;
    for (std::size_t k = 0; k < n; ++k) reordered.states[k] = sic.states[static_cast<std::size_t>(order[k])];
    const auto t2 = triple_table(reordered);
    perm[0] = 0;
    used[0] = true;
    std::vector<Permutation> found;
    extend_permutation(t2, n, antiunitary, perm, used, found);
    for (const auto& p : found) {
      Permutation back(n);
      for (std::size_t k = 0; k < n; ++k) back[static_cast<std::size_t>(order[k])] = order[static_cast<std::size_t>(p[k])];
      out.push_back(std::move(back));
    }
    return out;
  }
  extend_permutation(table, n, antiunitary, perm, used, out);
  return out;
}

std::vector<CliffordElement> sic_symmetry_elements(const SicPovm& sic, const std::vector<CliffordElement>& group) {
  std::vector<CliffordElement> out;
  for (const auto& c : group) {
    if (induced_permutation(c.op, sic)) out.push_back(c);
  }
  return out;
}

SymmetryGroupReport verify_symmetry_group_in_clifford() {
  const auto& orbit = fiducial_orbit();
  const auto& sic1 = orbit.sic(1);
  SymmetryGroupReport rep;
  const auto unitary = sic_symmetry_elements(sic1, projective_clifford_d4(false));
  const auto extended = sic_symmetry_elements(sic1, projective_clifford_d4(true));
  rep.unitary_order = static_cast<int>(unitary.size());
  rep.extended_order = static_cast<int>(extended.size());

  std::set<Permutation> clifford_stabilizer_perms;
  std::set<Permutation> clifford_perms;
  for (const auto& c : unitary) {
    const auto perm = *induced_permutation(c.op, sic1);
    clifford_perms.insert(perm);
    if (perm[0] == 0) clifford_stabilizer_perms.insert(perm);
  }
  rep.clifford_stabilizer_order = static_cast<int>(clifford_stabilizer_perms.size());

  const auto stab_perms = triple_preserving_permutations(sic1, false, 0);
  rep.triple_preserving_stabilizer_count = static_cast<int>(stab_perms.size());
  rep.stabilizer_realized_by_clifford =
      std::all_of(stab_perms.begin(), stab_perms.end(), [&](const auto& p) { return clifford_stabilizer_perms.count(p) > 0; });
  rep.triple_preserving_count = static_cast<int>(triple_preserving_permutations(sic1, false).size());

  std::set<ProjectiveKey> two_power;
  for (const auto& c : unitary) {
    const int order = projective_order(c.op);
    if (order > 0 && (order & (order - 1)) == 0) two_power.insert(projective_key(c.op));
  }
  rep.two_power_elements = static_cast<int>(two_power.size());
  std::set<ProjectiveKey> hw;
  for (int k = 0; k < 16; ++k) hw.insert(projective_key(displacement(from_linear_index(k, 4), 4)));
  rep.sylow_subgroup_is_hw = two_power == hw;

  rep.pass = rep.unitary_order == 48 && rep.extended_order == 96 && rep.clifford_stabilizer_order == 3 &&
             rep.triple_preserving_stabilizer_count == 3 && rep.stabilizer_realized_by_clifford &&
             rep.triple_preserving_count == 48 && rep.two_power_elements == 16 && rep.sylow_subgroup_is_hw;
  return rep;
}

std::array<int, kSicCount> symmetry_action(const GroupElement& g) {
  const auto& orbit = fiducial_orbit();
  std::array<int, kSicCount> perm{};
  for (int n = 1; n <= kSicCount; ++n) {
    int image = 0;
    for (int k = 0; k < kStatesPerSic; ++k) {
      const auto hit = orbit.find(conjugate_by(g, orbit.projectors[static_cast<std::size_t>(FiducialOrbit::index_of(n, from_linear_index(k, 4)))]));
      if (!hit) throw std::logic_error("symmetry_action: element leaves the fiducial orbit");
      const int label = orbit.sic_membership[static_cast<std::size_t>(*hit)];
      if (image == 0) image = label;
      if (label != image) throw std::logic_error("symmetry_action: element splits a SIC");
    }
    perm[static_cast<std::size_t>(n - 1)] = image;
  }
  std::array<int, kSicCount> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int n = 1; n <= kSicCount; ++n) {
    if (sorted[static_cast<std::size_t>(n - 1)] != n) throw std::logic_error("symmetry_action: not a bijection on SICs");
  }
  return perm;
}

SymmetryPermutation symmetry_action(const SymplecticPair& s) { return {s, symmetry_action(to_operator(s).op)}; }

QuotientGroupReport analyze_sic_permutation_group(bool extended) {
  const auto& group = projective_clifford_d4(extended);
  std::unordered_map<ProjectiveKey, std::size_t, ProjectiveKeyHash> where;
  for (std::size_t i = 0; i < group.size(); ++i) where.emplace(projective_key(group[i].op), i);
  std::vector<GroupElement> hw;
  for (int k = 0; k < 16; ++k) hw.emplace_back(displacement(from_linear_index(k, 4), 4));

  auto lookup = [&](const GroupElement& g) {
    const auto it = where.find(projective_key(g));
    if (it == where.end()) throw std::logic_error("analyze_sic_permutation_group: product left the group");
    return it->second;
  };

  // Coset id of every element: the smallest group index in g D.
  std::vector<int> coset_of(group.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(i);
    for (const auto& d : hw) coset_of[lookup(compose(group[i].op, d))] = id;
  }
  const auto n = reps.size();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = coset_of[lookup(compose(group[reps[a]].op, group[reps[b]].op))];
  }
  const int identity = coset_of[lookup(GroupElement::identity(4))];
  std::vector<int> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul[a][b] == identity) inv[a] = static_cast<int>(b);
    }
  }

  QuotientGroupReport rep;
  std::vector<int> order(n);
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a), k = 1;
    while (x != identity) {
      x = mul[static_cast<std::size_t>(x)][a];
      ++k;
    }
    order[a] = k;
    ++rep.elements_by_order[k];
    rep.elements.push_back(group[reps[a]].source);
    rep.label_permutations.push_back(symmetry_action(group[reps[a]].op));
  }

  std::vector<bool> classified(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (classified[a]) continue;
    std::set<int> cls;
    for (std::size_t g = 0; g < n; ++g) cls.insert(mul[static_cast<std::size_t>(mul[g][a])][static_cast<std::size_t>(inv[g])]);
    for (int c : cls) classified[static_cast<std::size_t>(c)] = true;
    rep.classes.push_back({order[a], static_cast<int>(cls.size()), static_cast<int>(a)});
    if (cls.size() == 1) {
      ++rep.center_order;
      if (order[a] == 2) rep.central_involution = static_cast<int>(a);
    }
  }

  auto row_of = [](int label) { return (label - 1) / 4; };
  std::vector<int> row_subgroup;
  std::set<std::array<int, 4>> row_perms;
  bool uniform = true;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& perm = rep.label_permutations[a];
    std::array<int, 4> rows{};
    bool preserves = true;
    for (int r = 0; r < 4; ++r) {
      rows[static_cast<std::size_t>(r)] = row_of(perm[static_cast<std::size_t>(4 * r)]);
      for (int c = 0; c < 4; ++c) {
        if (row_of(perm[static_cast<std::size_t>(4 * r + c)]) != rows[static_cast<std::size_t>(r)]) {
          throw std::logic_error("analyze_sic_permutation_group: row structure not preserved");
        }
      }
      preserves = preserves && rows[static_cast<std::size_t>(r)] == r;
    }
    row_perms.insert(rows);
    if (preserves) {
      row_subgroup.push_back(static_cast<int>(a));
      for (int r = 1; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          const int col0 = (perm[static_cast<std::size_t>(c)] - 1) % 4;
          const int colr = (perm[static_cast<std::size_t>(4 * r + c)] - 1) % 4;
          uniform = uniform && col0 == colr;
        }
      }
    }
  }
  rep.row_preserving_order = static_cast<int>(row_subgroup.size());
  rep.row_action_uniform = uniform;
  const std::set<int> sub(row_subgroup.begin(), row_subgroup.end());
  rep.row_subgroup_normal = true;
  for (std::size_t g = 0; g < n; ++g) {
    for (int h : row_subgroup) {
      const int c = mul[static_cast<std::size_t>(mul[g][static_cast<std::size_t>(h)])][static_cast<std::size_t>(inv[g])];
      rep.row_subgroup_normal = rep.row_subgroup_normal && sub.count(c) > 0;
    }
  }
  rep.row_permutations.assign(row_perms.begin(), row_perms.end());
  // Rows 1 -> 3 -> 2 -> 4 -> 1, zero-based: 0 -> 2, 2 -> 1, 1 -> 3, 3 -> 0.
  const std::array<int, 4> cycle{2, 3, 1, 0};
  std::set<std::array<int, 4>> generated;
  std::array<int, 4> power{0, 1, 2, 3};
  for (int k = 0; k < 4; ++k) {
    generated.insert(power);
    std::array<int, 4> next{};
    for (int r = 0; r < 4; ++r) next[static_cast<std::size_t>(r)] = cycle[static_cast<std::size_t>(power[static_cast<std::size_t>(r)])];
    power = next;
  }
  rep.row_quotient_cyclic = generated == row_perms;
  return rep;
}

std::array<Ket, 3> triple_family(int d, double theta) {
  if (d < 3) throw std::invalid_argument("triple_family: dimension must be at least 3");
  const double c = std::cos(theta);
  const double root = std::sqrt(c * c + d);
  const double u = (-c + root) / std::sqrt(d * (d + 1.0));
  const double v = std::sqrt((1.0 * d * d - d - 2.0 * c * c + 2.0 * c * root) / (d * (d + 1.0)));
  std::array<Ket, 3> kets{Ket::Zero(d), Ket::Zero(d), Ket::Zero(d)};
  kets[0](0) = 1.0;
  kets[1](0) = 1.0 / std::sqrt(d + 1.0);
  kets[1](1) = std::sqrt(d / (d + 1.0));
  kets[2](0) = 1.0 / std::sqrt(d + 1.0);
  kets[2](1) = u * std::polar(1.0, theta);
  kets[2](2) = v;
  return kets;
}

double triple_phase(int d, double theta) {
  if (d < 3) throw std::invalid_argument("triple_phase: dimension must be at least 3");
  const double c = std::cos(theta);
  const Complex value = (1.0 + std::polar(1.0, theta) * (-c + std::sqrt(c * c + d))) / ((d + 1.0) * (d + 1.0));
  const double phi = std::arg(value);
  return phi >= kPi ? phi - 2.0 * kPi : phi;
}

}  // namespace sic4
