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

#include "sic4/regrouping.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "sic4/hw_reconstruction.hpp"

namespace sic4 {

namespace {

constexpr double kFidelityTol = 1e-9;

bool fidelity_fifth(const ComplexMatrix& a, const ComplexMatrix& b) {
  return std::abs((a * b).trace().real() - 0.2) <= kFidelityTol;
}

}  // namespace

std::array<HOrbit, 4> h_orbits(int sic_label) {
  if (sic_label < 1 || sic_label > kSicCount) throw std::invalid_argument("h_orbits: label out of range");
  const auto& orbit = fiducial_orbit();
  const std::array<GroupElement, 3> h{GroupElement(displacement(2, 0, 4)), GroupElement(displacement(0, 2, 4)),
                                      GroupElement(displacement(2, 2, 4))};
  const int base = FiducialOrbit::index_of(sic_label, {0, 0});
  std::array<HOrbit, 4> out;
  std::vector<bool> seen(kStatesPerSic, false);
  std::size_t next = 0;
  for (int k = 0; k < kStatesPerSic; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    std::set<int> members{base + k};
    for (const auto& g : h) {
      const auto hit = orbit.find(conjugate_by(g, orbit.projectors[static_cast<std::size_t>(base + k)]));
      if (!hit || *hit / kStatesPerSic != sic_label - 1) throw std::logic_error("h_orbits: H does not preserve the SIC");
      members.insert(*hit);
    }
    if (members.size() != 4 || next >= 4) throw std::logic_error("h_orbits: orbit of unexpected size");
    HOrbit o{sic_label, {}};
    std::copy(members.begin(), members.end(), o.members.begin());
    for (int m : members) seen[static_cast<std::size_t>(m - base)] = true;
    out[next++] = o;
  }
  return out;
}

std::vector<RegroupedSic> regroup_row(const std::array<int, 4>& row, Tolerance tol) {
  if (std::find(kSicRows.begin(), kSicRows.end(), row) == kSicRows.end()) {
    throw std::invalid_argument("regroup_row: labels do not form a row of the arrangement");
  }
  const auto& orbit = fiducial_orbit();
  auto compatible = [&](const HOrbit& a, const HOrbit& b) {
    for (int i : a.members) {
      for (int j : b.members) {
        if (!fidelity_fifth(orbit.projectors[static_cast<std::size_t>(i)], orbit.projectors[static_cast<std::size_t>(j)])) return false;
      }
    }
    return true;
  };
  std::array<std::array<HOrbit, 4>, 4> parts_by_sic;
  for (std::size_t s = 0; s < 4; ++s) parts_by_sic[s] = h_orbits(row[s]);

  std::vector<RegroupedSic> out;
  for (const auto& seed : parts_by_sic[0]) {
    RegroupedSic r;
    r.parts[0] = seed;
    for (std::size_t s = 1; s < 4; ++s) {
      int matches = 0;
      for (const auto& cand : parts_by_sic[s]) {
        if (compatible(seed, cand)) {
          r.parts[s] = cand;
          ++matches;
        }
      }
      if (matches != 1) {
        throw std::logic_error("regroup_row: expected a unique matching H-orbit in SIC " + std::to_string(row[s]) +
                               ", found " + std::to_string(matches));
      }
    }
    r.sic.d = 4;
    r.sic.label = "regrouped " + std::to_string(row[0]) + "-" + std::to_string(row[3]) + "/" + std::to_string(out.size() + 1);
    std::size_t k = 0;
    for (const auto& part : r.parts) {
      for (int m : part.members) {
        r.members[k++] = m;
        r.sic.states.push_back(orbit.projectors[static_cast<std::size_t>(m)]);
      }
    }
    if (!verify_sic(r.sic, tol).is_sic) throw std::logic_error("regroup_row: assembled states do not form a SIC");
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<RegroupedSic>& regrouped_sics() {
  static const std::vector<RegroupedSic> all = [] {
    std::vector<RegroupedSic> v;
    for (const auto& row : kSicRows) {
      auto part = regroup_row(row);
      std::move(part.begin(), part.end(), std::back_inserter(v));
    }
    return v;
  }();
  return all;
}

namespace {

using VertexSet = std::bitset<kOrbitSize>;

void grow_cliques(const std::vector<VertexSet>& adj, std::vector<int>& clique, const VertexSet& candidates,
                  std::size_t target, std::vector<std::array<int, 16>>& out) {
  if (clique.size() == target) {
    std::array<int, 16> c{};
    std::copy(clique.begin(), clique.end(), c.begin());
    out.push_back(c);
    return;
  }
  if (clique.size() + candidates.count() < target) return;
  for (std::size_t v = candidates._Find_first(); v < candidates.size(); v = candidates._Find_next(v)) {
    // Only extend with larger vertices so every clique is produced once.
    VertexSet next = candidates & adj[v];
    for (std::size_t u = 0; u <= v; ++u) next.reset(u);
    clique.push_back(static_cast<int>(v));
    grow_cliques(adj, clique, next, target, out);
    clique.pop_back();
  }
}

}  // namespace

RegroupScan exhaustive_regroup_scan(const FiducialOrbit& orbit, bool full_scan) {
  const std::size_t n = orbit.projectors.size();
  std::vector<VertexSet> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (fidelity_fifth(orbit.projectors[i], orbit.projectors[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  RegroupScan scan;
  scan.graph_degree_min = static_cast<int>(n);
  for (const auto& a : adj) {
    scan.graph_degree_min = std::min(scan.graph_degree_min, static_cast<int>(a.count()));
    scan.graph_degree_max = std::max(scan.graph_degree_max, static_cast<int>(a.count()));
  }
  std::vector<int> clique;
  if (full_scan) {
    VertexSet all;
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    grow_cliques(adj, clique, all, 16, scan.sics);
  } else {
    for (const auto& row : kSicRows) {
      VertexSet block;
      for (int label : row) {
        for (int k = 0; k < kStatesPerSic; ++k) block.set(static_cast<std::size_t>(FiducialOrbit::index_of(label, from_linear_index(k, 4))));
      }
      const auto before = scan.sics.size();
      grow_cliques(adj, clique, block, 16, scan.sics);
      scan.per_row.push_back(static_cast<int>(scan.sics.size() - before));
    }
  }
  for (auto& c : scan.sics) std::sort(c.begin(), c.end());

  std::set<std::array<int, 16>> originals, regrouped;
  for (int label = 1; label <= kSicCount; ++label) {
    std::array<int, 16> c{};
    for (int k = 0; k < kStatesPerSic; ++k) c[static_cast<std::size_t>(k)] = FiducialOrbit::index_of(label, from_linear_index(k, 4));
    originals.insert(c);
  }
  for (const auto& r : regrouped_sics()) {
    auto c = r.members;
    std::sort(c.begin(), c.end());
    regrouped.insert(c);
  }
  scan.memberships.assign(n, 0);
  for (const auto& c : scan.sics) {
    scan.original += originals.count(c) ? 1 : 0;
    scan.regrouped += regrouped.count(c) ? 1 : 0;
    for (int v : c) ++scan.memberships[static_cast<std::size_t>(v)];
  }
  return scan;
}

DPrimeGenerators dprime_generators() {
  DPrimeGenerators g{ComplexMatrix::Zero(4, 4), ComplexMatrix::Zero(4, 4), SymplecticPair(4, {3, 0, 2, 3}, {0, 1}),
                     SymplecticPair(4, {3, 2, 0, 3}, {3, 0})};
  g.x_prime(0, 0) = 1.0;
  g.x_prime(1, 3) = 1.0;
  g.x_prime(2, 2) = -1.0;
  g.x_prime(3, 1) = -1.0;
  const Complex p = 1.0 + kI;
  const Complex m = -1.0 + kI;
  g.z_prime << 0.0, p, 0.0, m,  //
      p, 0.0, m, 0.0,           //
      0.0, m, 0.0, p,           //
      m, 0.0, p, 0.0;
  g.z_prime /= 2.0;
  return g;
}

std::vector<ComplexMatrix> dprime_group() {
  const auto g = dprime_generators();
  std::vector<ComplexMatrix> out;
  ComplexMatrix xp = ComplexMatrix::Identity(4, 4);
  for (int a = 0; a < 4; ++a, xp = xp * g.x_prime) {
    ComplexMatrix zp = ComplexMatrix::Identity(4, 4);
    for (int b = 0; b < 4; ++b, zp = zp * g.z_prime) out.push_back(xp * zp);
  }
  return out;
}

ComplexMatrix equivalence_unitary() {
  ComplexMatrix u(4, 4);
  const Complex i = kI;
  u << -i, -1.0, -i, -1.0,  //
      1.0, -i, -1.0, i,     //
      -i, 1.0, -i, 1.0,     //
      1.0, i, -1.0, -i;
  return u / 2.0;
}

SubgroupCensus hw_conjugate_subgroup_census() {
  const auto& clifford = projective_clifford_d4(false);
  std::vector<const GroupElement*> order4;
  for (const auto& c : clifford) {
    if (projective_order(c.op, 8) == 4) order4.push_back(&c.op);
  }
  struct Candidate {
    std::set<ProjectiveKey> keys;
    ComplexMatrix a, b;
  };
  std::vector<Candidate> groups;
  std::set<std::set<ProjectiveKey>> seen;
  const Complex w = omega(4);
  for (const auto* a : order4) {
    const ComplexMatrix& ma = a->matrix();
    for (const auto* b : order4) {
      const ComplexMatrix& mb = b->matrix();
      const Complex commutator = (ma * mb * ma.adjoint() * mb.adjoint()).trace() / 4.0;
      if (std::abs(commutator - w) > 1e-9) continue;
      std::set<ProjectiveKey> keys;
      ComplexMatrix pa = ComplexMatrix::Identity(4, 4);
      for (int x = 0; x < 4; ++x, pa = pa * ma) {
        ComplexMatrix pb = ComplexMatrix::Identity(4, 4);
        for (int y = 0; y < 4; ++y, pb = pb * mb) keys.insert(projective_key(pa * pb));
      }
      if (keys.size() != 16) continue;
      if (seen.insert(keys).second) groups.push_back({std::move(keys), ma, mb});
    }
  }

  SubgroupCensus census;
  census.total = static_cast<int>(groups.size());
  std::set<std::set<ProjectiveKey>> normal;
  for (const auto& g : groups) {
    const bool is_normal = std::all_of(clifford.begin(), clifford.end(), [&](const CliffordElement& c) {
      const ComplexMatrix& u = c.op.matrix();
      return g.keys.count(projective_key(u * g.a * u.adjoint())) && g.keys.count(projective_key(u * g.b * u.adjoint()));
    });
    if (is_normal) normal.insert(g.keys);
  }
  census.normal = static_cast<int>(normal.size());
  std::set<ProjectiveKey> d_keys, dprime_keys;
  for (const auto& m : standard_hw_group()) d_keys.insert(projective_key(m));
  for (const auto& m : dprime_group()) dprime_keys.insert(projective_key(m));
  census.normal_are_d_and_dprime = normal == std::set<std::set<ProjectiveKey>>{d_keys, dprime_keys};

  // <Clifford, U> = union of U^k Clifford once U is known to normalize the Clifford group.
  std::set<ProjectiveKey> cliff_keys;
  for (const auto& c : clifford) cliff_keys.insert(projective_key(c.op));
  const ComplexMatrix u = equivalence_unitary();
  const bool normalizes = std::all_of(clifford.begin(), clifford.end(), [&](const CliffordElement& c) {
    return cliff_keys.count(projective_key(u * c.op.matrix() * u.adjoint())) > 0;
  });
  if (normalizes) {
    ComplexMatrix power = u;
    int k = 1;
    while (!cliff_keys.count(projective_key(power)) && k < 64) {
      power = power * u;
      ++k;
    }
    census.clifford_index = k;
    census.extended_normalizer_order = k * static_cast<int>(clifford.size());
  }
  const auto& orbit = fiducial_orbit();
  census.normalizer_preserves_orbit = normalizes && std::all_of(clifford.begin(), clifford.end(), [&](const CliffordElement& c) {
    return orbit_permutation(GroupElement(u * c.op.matrix()), orbit).has_value();
  });
  return census;
}

}  // namespace sic4
