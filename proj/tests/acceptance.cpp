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

// Runs the sixteen acceptance criteria and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sic4/clifford_group.hpp"
#include "sic4/hw_reconstruction.hpp"
#include "sic4/regrouping.hpp"
#include "sic4/sic_orbits.hpp"
#include "sic4/two_qubit_structure.hpp"

using namespace sic4;

namespace {

std::string sci(double x) {
  std::ostringstream o;
  o << std::scientific << std::setprecision(2) << x;
  return o.str();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ComplexMatrix& rho_f() {
  static const ComplexMatrix r = projector(fiducial_ket_d4());
  return r;
}

Outcome fiducial_condition() {
  const Ket v = fiducial_ket_d4();
  double dev = 0.0;
  for (int k = 1; k < 16; ++k) dev = std::max(dev, std::abs(std::abs(v.dot(displacement(from_linear_index(k, 4), 4) * v)) - 1 / std::sqrt(5.0)));
  return {dev <= 1e-9, "max overlap error " + sci(dev)};
}

Outcome orbit_cardinalities() {
  const auto& ext = projective_clifford_d4(true);
  const auto& uni = projective_clifford_d4(false);
  const auto& orbit = fiducial_orbit();
  std::set<ProjectiveKey> keys;
  for (const auto& c : ext) {
    const auto perm = orbit_permutation(c.op, orbit);
    if (!perm) return {false, "orbit not closed"};
  }
  for (const auto& p : orbit.projectors) keys.insert(projector_key(p));
  const auto sics = std::count_if(orbit.sics.begin(), orbit.sics.end(), [](const SicPovm& s) { return verify_sic(s).is_sic; });
  std::ostringstream d;
  d << ext.size() << " extended, " << uni.size() << " unitary, " << keys.size() << " fiducials, " << sics << " SICs";
  return {ext.size() == 1536 && uni.size() == 768 && keys.size() == 256 && sics == 16, d.str()};
}

Outcome stabilizer() {
  const auto ext = stability_group(rho_f(), true);
  const auto uni = stability_group(rho_f(), false);
  const auto g = to_operator(fiducial_stabilizer_generator());
  const bool literal = proj_equal(g.op, fiducial_stabilizer_matrix());
  const bool generates = projective_order(g.op) == 6;
  const std::vector<DisplacementIndex> cycle{{0, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 0}, {1, 1}, {0, 1}};
  bool cycle_ok = true;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) cycle_ok = cycle_ok && conjugation_action(g, cycle[i]).image == cycle[i + 1];
  std::ostringstream d;
  d << "orders " << ext.size() << "/" << uni.size() << ", generator matrix " << (literal ? "ok" : "mismatch") << ", cycle "
    << (cycle_ok ? "ok" : "mismatch");
  return {ext.size() == 6 && uni.size() == 3 && literal && generates && cycle_ok, d.str()};
}

Outcome stabilizer_orbits() {
  const std::set<std::set<DisplacementIndex>> expected{
      {{1, 0}, {0, 3}, {3, 1}}, {{3, 3}, {3, 2}, {2, 3}}, {{0, 1}, {1, 3}, {3, 0}}, {{1, 2}, {2, 1}, {1, 1}}, {{2, 0}, {0, 2}, {2, 2}}};
  std::set<std::set<DisplacementIndex>> got;
  for (const auto& o : stabilizer_orbits_within_sic(1)) got.insert(std::set<DisplacementIndex>(o.begin(), o.end()));
  return {got == expected, std::to_string(got.size()) + " orbits"};
}

Outcome triple_census() {
  const auto& orbit = fiducial_orbit();
  const auto census = triple_trace_census(orbit.sic(1), 1e-6);
  int real = 0, upper = 0, lower = 0;
  for (const auto& e : census.entries) {
    if (std::abs(e.value.imag()) < 1e-6) {
      ++real;
      continue;
    }
    const bool paired = std::any_of(census.entries.begin(), census.entries.end(), [&](const auto& o) { return std::abs(o.value - std::conj(e.value)) < 1e-9; });
    if (paired) (e.value.imag() > 0 ? upper : lower)++;
  }
  int identical = 0;
  for (const auto& sic : orbit.sics) identical += same_census(census, triple_trace_census(sic, 1e-6), 1e-9) ? 1 : 0;
  std::ostringstream d;
  d << census.entries.size() << " values, " << upper << " conjugate pairs, " << real << " real, identical in " << identical << " SICs";
  return {census.entries.size() == 17 && upper == 8 && lower == 8 && real == 1 && identical == 16, d.str()};
}

Outcome symmetry_group() {
  const auto s = verify_symmetry_group_in_clifford();
  const auto q = analyze_sic_permutation_group(false);
  std::map<int, std::vector<int>> classes;
  for (const auto& c : q.classes) classes[c.element_order].push_back(c.size);
  const std::map<int, int> expected{{1, 1}, {2, 7}, {3, 8}, {4, 24}, {6, 8}};
  const bool census_ok = q.elements_by_order == expected;
  std::ostringstream d;
  d << s.extended_order << "/" << s.unitary_order << ", classes";
  for (const auto& [order, sizes] : classes) {
    d << " " << order << ":";
    for (int x : sizes) d << x << ",";
  }
  return {s.extended_order == 96 && s.unitary_order == 48 && census_ok && s.two_power_elements == 16 && s.sylow_subgroup_is_hw, d.str()};
}

Outcome eigen_signature() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  ComplexMatrix zj = ComplexMatrix::Identity(4, 4);
  for (int j = 0; j < 4; ++j, zj = zj * phase_operator(4)) m += zj * rho_f() * zj.adjoint();
  const auto eig = eig_hermitian(m).values;
  const auto ref = reference_signature();
  double dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(eig[i] - ref.lambdas[i]));
  return {dev <= 1e-10 && std::abs(ref.sum() - 4.0) <= 1e-10, "max eigenvalue error " + sci(dev)};
}

Outcome reconstruction() {
  const auto standard = standard_hw_group();
  const auto dprime = dprime_group();
  int ok = 0, ok_prime = 0;
  for (const auto& sic : fiducial_orbit().sics) {
    const auto r = reconstruct_hw(sic);
    ok += (r.covariant && r.omega_commutation && same_projective_set(r.group, standard)) ? 1 : 0;
  }
  for (const auto& r : regrouped_sics()) {
    const auto rec = reconstruct_hw(r.sic);
    ok_prime += (rec.covariant && rec.omega_commutation && same_projective_set(rec.group, dprime)) ? 1 : 0;
  }
  return {ok == 16 && ok_prime == 16, std::to_string(ok) + " original, " + std::to_string(ok_prime) + " regrouped"};
}

Outcome regrouping() {
  const auto& regrouped = regrouped_sics();
  const auto valid = std::count_if(regrouped.begin(), regrouped.end(), [](const RegroupedSic& r) { return verify_sic(r.sic).is_sic; });
  const auto rows = exhaustive_regroup_scan(fiducial_orbit(), false);
  const auto full = exhaustive_regroup_scan(fiducial_orbit(), true);
  std::ostringstream d;
  d << valid << " additional, row scan " << rows.total() << ", full scan " << full.total();
  return {regrouped.size() == 16 && valid == 16 && rows.total() == 32 && rows.original + rows.regrouped == 32 && full.total() == 32, d.str()};
}

Outcome equivalence() {
  const ComplexMatrix u = equivalence_unitary();
  std::vector<ComplexMatrix> image;
  for (const auto& d : standard_hw_group()) image.push_back(u * d * u.adjoint());
  const bool group = same_projective_set(image, dprime_group());
  const bool fixes = proj_equal(ComplexMatrix(u * rho_f() * u.adjoint()), rho_f());
  const auto& orbit = fiducial_orbit();
  const GroupElement ug(u);
  std::set<std::set<int>> images, regrouped;
  for (const auto& sic : orbit.sics) {
    std::set<int> img;
    for (const auto& rho : sic.states) {
      const auto hit = orbit.find(conjugate_by(ug, rho));
      if (!hit) return {false, "image leaves the orbit"};
      img.insert(*hit);
    }
    images.insert(img);
  }
  for (const auto& r : regrouped_sics()) regrouped.insert(std::set<int>(r.members.begin(), r.members.end()));
  return {is_unitary(u, 1e-12) && group && fixes && images == regrouped, "U D U^dagger = D' " + std::string(group ? "yes" : "no")};
}

Outcome subgroup_census() {
  const auto c = hw_conjugate_subgroup_census();
  return {c.total == 32 && c.normal == 2 && c.normal_are_d_and_dprime,
          std::to_string(c.total) + " subgroups, " + std::to_string(c.normal) + " normal"};
}

Outcome two_qubit(Basis basis) {
  const auto& orbit = fiducial_orbit();
  int matched = 0, class1 = 0, table = 0;
  for (std::size_t k = 0; k < orbit.kets.size(); ++k) {
    const auto p = match_sign_pattern(gbv(projector(in_product_coordinates(orbit.kets[k], basis))), basis);
    if (!p) continue;
    ++matched;
    class1 += p->class_id == 1 ? 1 : 0;
    table += sign_functions(*p) == expected_sign_functions(orbit.sic_membership[k]) ? 1 : 0;
  }
  const double uniform = std::sqrt(0.4);
  const double rg = std::sqrt(SicConstants::golden());
  const double lo = std::sqrt((2 - 2 * rg) / 5), hi = std::sqrt((2 + 2 * rg) / 5);
  const int uniform_class = basis == Basis::product ? 1 : 2;
  int concurrence_ok = 0;
  double purity_dev = 0.0;
  for (int n = 1; n <= kSicCount; ++n) {
    const auto h = concurrence_census(n, basis);
    const int cls = n <= 8 ? 1 : 2;
    if (cls == uniform_class) {
      concurrence_ok += (h.size() == 1 && std::abs(h[0].value - uniform) <= 1e-9 && h[0].count == 16) ? 1 : 0;
    } else {
      concurrence_ok += (h.size() == 2 && h[0].count == 8 && h[1].count == 8 && std::abs(h[0].value - lo) <= 1e-9 && std::abs(h[1].value - hi) <= 1e-9) ? 1 : 0;
    }
    std::vector<ComplexMatrix> states;
    for (int k = 0; k < kStatesPerSic; ++k)
      states.push_back(projector(in_product_coordinates(orbit.kets[static_cast<std::size_t>(FiducialOrbit::index_of(n, from_linear_index(k, 4)))], basis)));
    purity_dev = std::max(purity_dev, std::abs(avg_reduced_purity(states) - 0.8));
  }
  std::ostringstream d;
  d << matched << " matched (" << class1 << " class 1), sign table " << table << "/256, concurrence " << concurrence_ok << "/16 SICs";
  return {matched == 256 && class1 == 128 && table == 256 && concurrence_ok == 16 && purity_dev <= 1e-9, d.str()};
}

Outcome partial_transpose() {
  int violating = 0, ok = 0;
  std::set<int> targets;
  for (const auto& p : all_sign_patterns(Basis::product)) {
    if (p.class_id != 1 || p.satisfies_constraint()) continue;
    ++violating;
    const auto r = partial_transpose_simplex_check(p);
    if (r.pass(1e-9)) {
      ++ok;
      targets.insert(*r.partial_transpose_in_orbit);
    }
  }
  return {violating == 128 && ok == 128, std::to_string(ok) + "/" + std::to_string(violating) + " patterns, " + std::to_string(targets.size()) + " distinct fiducials"};
}

Outcome triple_family_check() {
  double fid = 0.0, phase = 0.0;
  bool monotone = true;
  for (int d = 3; d <= 5; ++d) {
    double prev = -10.0;
    for (int i = 0; i < 100; ++i) {
      const double theta = -kPi + 2 * kPi * i / 100.0;
      const auto k = triple_family(d, theta);
      fid = std::max({fid, std::abs(std::norm(k[0].dot(k[1])) - 1.0 / (d + 1)), std::abs(std::norm(k[0].dot(k[2])) - 1.0 / (d + 1)),
                      std::abs(std::norm(k[1].dot(k[2])) - 1.0 / (d + 1))});
      const double phi = triple_phase(d, theta);
      double diff = std::arg(triple_trace(projector(k[0]), projector(k[1]), projector(k[2]))) - phi;
      diff = std::remainder(diff, 2 * kPi);
      phase = std::max(phase, std::abs(diff));
      monotone = monotone && phi > prev;
      prev = phi;
    }
  }
  std::ostringstream d;
  d << "fidelity error " << fid << ", phase error " << phase << (monotone ? ", monotone" : ", not monotone");
  return {fid <= 1e-10 && phase <= 1e-10 && monotone, d.str()};
}

Outcome property_suite() {
  double norm_dev = 0.0;
  for (Basis basis : {Basis::product, Basis::bell})
    for (const auto& v : fiducial_orbit().kets) norm_dev = std::max(norm_dev, std::abs(gbv(projector(in_product_coordinates(v, basis))).norm_squared() - 3.0));
  const bool weyl = weyl_commutation_check(4);
  std::mt19937 rng(20260418);
  const auto& pairs = all_symplectic_pairs(4, true);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  int homomorphic = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto& a = pairs[pick(rng)];
    const auto& b = pairs[pick(rng)];
    homomorphic += proj_equal(to_operator(semidirect_product(a, b)).op, compose(to_operator(a).op, to_operator(b).op)) ? 1 : 0;
  }
  const auto product = fiducial_orbit().projectors.size() * stability_group(rho_f(), true).size();
  std::ostringstream d;
  d << "gbv norm error " << norm_dev << ", homomorphism " << homomorphic << "/1000, orbit x stabilizer " << product;
  return {norm_dev <= 1e-9 && weyl && homomorphic == 1000 && product == 1536, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fiducial condition", fiducial_condition},
      {"orbit cardinalities", orbit_cardinalities},
      {"stabilizer", stabilizer},
      {"stabilizer orbits", stabilizer_orbits},
      {"triple-trace census", triple_census},
      {"symmetry group", symmetry_group},
      {"eigenvalue signature", eigen_signature},
      {"reconstruction", reconstruction},
      {"regrouping", regrouping},
      {"equivalence unitary", equivalence},
      {"subgroup census", subgroup_census},
      {"two-qubit product basis", [] { return two_qubit(Basis::product); }},
      {"two-qubit Bell basis", [] { return two_qubit(Basis::bell); }},
      {"partial-transpose simplex", partial_transpose},
      {"triple family", triple_family_check},
      {"property suite", property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << std::left << std::setw(26) << criteria[i].first
              << std::right << std::setw(8) << std::fixed << std::setprecision(0) << ms << " ms  " << o.detail << '\n';
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
