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

#include "sic4/reports.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sic4/clifford_group.hpp"
#include "sic4/hw_reconstruction.hpp"
#include "sic4/regrouping.hpp"
#include "sic4/sic_orbits.hpp"
#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {

namespace {

using nlohmann::json;

class Claims {
 public:
  explicit Claims(std::vector<Claim>& out) : out_(out) {}

  void count(const std::string& id, const std::string& anchor, long long expected, long long observed) {
    out_.push_back({id, anchor, expected, observed, expected == observed});
  }
  void value(const std::string& id, const std::string& anchor, double expected, double observed, double tol) {
    out_.push_back({id, anchor, expected, observed, std::isfinite(observed) && std::abs(expected - observed) <= tol});
  }
  void flag(const std::string& id, const std::string& anchor, bool observed) {
    out_.push_back({id, anchor, true, observed, observed});
  }
  void text(const std::string& id, const std::string& anchor, const std::string& expected, const std::string& observed) {
    out_.push_back({id, anchor, expected, observed, expected == observed});
  }

 private:
  std::vector<Claim>& out_;
};

std::string json_scalar(const json& j);

std::string index_string(DisplacementIndex p) { return "(" + std::to_string(p.p1) + "," + std::to_string(p.p2) + ")"; }

std::string join(const std::vector<int>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

const ComplexMatrix& fiducial_projector() {
  static const ComplexMatrix rho = projector(fiducial_ket_d4());
  return rho;
}

std::set<std::set<int>> state_sets_of_originals() {
  std::set<std::set<int>> out;
  for (int n = 1; n <= kSicCount; ++n) {
    std::set<int> s;
    for (int k = 0; k < kStatesPerSic; ++k) s.insert(FiducialOrbit::index_of(n, from_linear_index(k, 4)));
    out.insert(s);
  }
  return out;
}

std::set<std::set<int>> state_sets_of_regrouped() {
  std::set<std::set<int>> out;
  for (const auto& r : regrouped_sics()) out.insert(std::set<int>(r.members.begin(), r.members.end()));
  return out;
}

// ---------------------------------------------------------------- orbit

void run_orbit(const RunConfig& cfg, Report& rep) {
  Claims c(rep.claims);
  const double tol = cfg.tol.abs_tol();
  const Ket psi = fiducial_ket_d4();
  double overlap_dev = 0.0;
  for (int k = 1; k < 16; ++k) {
    const Complex o = psi.dot(displacement(from_linear_index(k, 4), 4) * psi);
    overlap_dev = std::max(overlap_dev, std::abs(std::abs(o) - 1.0 / std::sqrt(5.0)));
  }
  c.value("orbit.fiducial_overlap", "fiducial state", 0.0, overlap_dev, tol);
  c.flag("orbit.weyl_commutation", "displacement operators", weyl_commutation_check(4, cfg.tol));

  const auto& ext = projective_clifford_d4(true);
  const auto& uni = projective_clifford_d4(false);
  c.count("orbit.extended_clifford_order", "Clifford group", 1536, static_cast<long long>(ext.size()));
  c.count("orbit.clifford_order", "Clifford group", 768, static_cast<long long>(uni.size()));

  const auto& orbit = fiducial_orbit();
  std::set<ProjectiveKey> keys;
  for (const auto& p : orbit.projectors) keys.insert(projector_key(p));
  c.count("orbit.distinct_fiducials", "fiducial orbit", 256, static_cast<long long>(keys.size()));
  const auto sics = std::count_if(orbit.sics.begin(), orbit.sics.end(), [&](const SicPovm& s) { return verify_sic(s, cfg.tol).is_sic; });
  c.count("orbit.sic_count", "fiducial orbit", 16, sics);
  const auto fiducials = std::count_if(orbit.kets.begin(), orbit.kets.end(), [&](const Ket& k) { return is_fiducial(k, 4, cfg.tol); });
  c.count("orbit.all_states_fiducial", "fiducial orbit", 256, fiducials);
  std::vector<char> closed(ext.size(), 0);
  parallel_for(ext.size(), [&](std::size_t i) { closed[i] = orbit_permutation(ext[i].op, orbit).has_value(); });
  c.count("orbit.closed_under_clifford", "fiducial orbit", static_cast<long long>(ext.size()),
          std::count(closed.begin(), closed.end(), 1));

  const auto stab = stability_group(fiducial_projector(), true);
  const auto stab_u = stability_group(fiducial_projector(), false);
  c.count("orbit.stabilizer_order", "fiducial stabilizer", 6, static_cast<long long>(stab.size()));
  c.count("orbit.stabilizer_unitary_order", "fiducial stabilizer", 3, static_cast<long long>(stab_u.size()));
  c.count("orbit.orbit_stabilizer_product", "fiducial stabilizer", 1536, static_cast<long long>(orbit.projectors.size() * stab.size()));
  const SymplecticPair gen = fiducial_stabilizer_generator();
  const CliffordElement g = to_operator(gen);
  c.count("orbit.stabilizer_generator_order", "fiducial stabilizer", 6, projective_order(g.op));
  c.flag("orbit.stabilizer_generator_fixes_fiducial", "fiducial stabilizer",
         proj_equal(conjugate_by(g.op, fiducial_projector()), fiducial_projector(), cfg.tol));
  c.flag("orbit.stabilizer_generator_matrix", "fiducial stabilizer", proj_equal(g.op, fiducial_stabilizer_matrix(), cfg.tol));

  const std::set<std::set<DisplacementIndex>> expected_orbits{
      {{1, 0}, {0, 3}, {3, 1}}, {{3, 3}, {3, 2}, {2, 3}}, {{0, 1}, {1, 3}, {3, 0}}, {{1, 2}, {2, 1}, {1, 1}}, {{2, 0}, {0, 2}, {2, 2}}};
  const auto orbits = stabilizer_orbits_within_sic(1);
  std::set<std::set<DisplacementIndex>> observed_orbits;
  json orbits_json = json::array();
  for (const auto& o : orbits) {
    observed_orbits.insert(std::set<DisplacementIndex>(o.begin(), o.end()));
    json row = json::array();
    for (const auto& p : o) row.push_back({p.p1, p.p2});
    orbits_json.push_back(row);
  }
  c.flag("orbit.stabilizer_orbits", "stabilizer orbits in SIC 1", observed_orbits == expected_orbits);

  const std::vector<DisplacementIndex> cycle{{0, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 0}, {1, 1}, {0, 1}};
  std::string observed_cycle = index_string(cycle[0]);
  DisplacementIndex p = cycle[0];
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    p = conjugation_action(g, p, cfg.tol).image;
    observed_cycle += "->" + index_string(p);
  }
  std::string expected_cycle = index_string(cycle[0]);
  for (std::size_t i = 1; i < cycle.size(); ++i) expected_cycle += "->" + index_string(cycle[i]);
  c.text("orbit.conjugation_cycle", "fiducial stabilizer", expected_cycle, observed_cycle);

  rep.details["stabilizer_generator"] = pair_to_json(gen);
  rep.details["stabilizer_orbits"] = orbits_json;
}

// ---------------------------------------------------------------- symmetry

std::string class_sizes(const QuotientGroupReport& q, int order) {
  std::vector<int> sizes;
  for (const auto& cl : q.classes)
    if (cl.element_order == order) sizes.push_back(cl.size);
  std::sort(sizes.begin(), sizes.end());
  return join(sizes);
}

std::string order_census(const std::map<int, int>& m) {
  std::string s;
  for (const auto& [order, n] : m) s += (s.empty() ? "" : ",") + std::to_string(order) + ":" + std::to_string(n);
  return s;
}

std::string row_action(const std::array<int, kSicCount>& perm) {
  std::vector<int> rows;
  for (int r = 0; r < 4; ++r) rows.push_back((perm[static_cast<std::size_t>(4 * r)] - 1) / 4 + 1);
  return join(rows);
}

void run_symmetry(const RunConfig&, Report& rep) {
  Claims c(rep.claims);
  const auto s = verify_symmetry_group_in_clifford();
  c.count("symmetry.unitary_order", "symmetry group of one SIC", 48, s.unitary_order);
  c.count("symmetry.extended_order", "symmetry group of one SIC", 96, s.extended_order);
  c.count("symmetry.clifford_stabilizer_order", "symmetry group of one SIC", 3, s.clifford_stabilizer_order);
  c.count("symmetry.triple_preserving_stabilizer", "symmetry group of one SIC", 3, s.triple_preserving_stabilizer_count);
  c.flag("symmetry.stabilizer_realized_by_clifford", "symmetry group of one SIC", s.stabilizer_realized_by_clifford);
  c.count("symmetry.two_power_elements", "unique covariance group", 16, s.two_power_elements);
  c.flag("symmetry.sylow_subgroup_is_hw", "unique covariance group", s.sylow_subgroup_is_hw);

  const auto q = analyze_sic_permutation_group(false);
  c.count("symmetry.quotient_order", "symmetry among the 16 SICs", 48, static_cast<long long>(q.elements.size()));
  c.text("symmetry.order_census", "symmetry among the 16 SICs", "1:1,2:7,3:8,4:24,6:8", order_census(q.elements_by_order));
  c.text("symmetry.order2_classes", "symmetry among the 16 SICs", "1,3,3", class_sizes(q, 2));
  c.text("symmetry.order3_classes", "symmetry among the 16 SICs", "8", class_sizes(q, 3));
  c.text("symmetry.order4_classes", "symmetry among the 16 SICs", "6,6,6,6", class_sizes(q, 4));
  c.text("symmetry.order6_classes", "symmetry among the 16 SICs", "8", class_sizes(q, 6));
  c.count("symmetry.center_order", "symmetry among the 16 SICs", 2, q.center_order);
  c.count("symmetry.row_subgroup_order", "row and column structure", 12, q.row_preserving_order);
  c.flag("symmetry.row_subgroup_normal", "row and column structure", q.row_subgroup_normal);
  c.flag("symmetry.row_action_uniform", "row and column structure", q.row_action_uniform);
  c.count("symmetry.row_quotient_order", "row and column structure", 4, static_cast<long long>(q.row_permutations.size()));
  c.flag("symmetry.row_quotient_cyclic", "row and column structure", q.row_quotient_cyclic);
  const auto qe = analyze_sic_permutation_group(true);
  c.count("symmetry.extended_quotient_order", "symmetry among the 16 SICs", 96, static_cast<long long>(qe.elements.size()));
  c.count("symmetry.extended_row_quotient_order", "row and column structure", 8, static_cast<long long>(qe.row_permutations.size()));

  json reps = json::array();
  for (const auto& cl : q.classes) {
    const auto i = static_cast<std::size_t>(cl.representative);
    reps.push_back({{"order", cl.element_order},
                    {"class_size", cl.size},
                    {"element", pair_to_json(q.elements[i])},
                    {"label_permutation", q.label_permutations[i]},
                    {"row_images", row_action(q.label_permutations[i])}});
  }
  rep.details["class_representatives"] = reps;
  std::string central_rows = "none";
  bool central_fixes_columns = false;
  if (q.central_involution) {
    const auto& perm = q.label_permutations[static_cast<std::size_t>(*q.central_involution)];
    central_rows = row_action(perm);
    central_fixes_columns = true;
    for (int n = 0; n < kSicCount; ++n) central_fixes_columns = central_fixes_columns && (perm[static_cast<std::size_t>(n)] - 1) % 4 == n % 4;
  }
  c.text("symmetry.central_involution_rows", "row and column structure", "2,1,4,3", central_rows);
  c.flag("symmetry.central_involution_fixes_columns", "row and column structure", central_fixes_columns);

  if (q.central_involution) {
    const auto i = static_cast<std::size_t>(*q.central_involution);
    rep.details["central_involution"] = {{"element", pair_to_json(q.elements[i])},
                                         {"label_permutation", q.label_permutations[i]},
                                         {"row_images", row_action(q.label_permutations[i])}};
  }
  rep.details["conjugation_permutation"] = symmetry_action(GroupElement::conjugation(4));
  rep.table.push_back("order\tclass_size\tlabel_images");
  for (const auto& cl : q.classes) {
    const auto& perm = q.label_permutations[static_cast<std::size_t>(cl.representative)];
    rep.table.push_back(std::to_string(cl.element_order) + "\t" + std::to_string(cl.size) + "\t" +
                        join(std::vector<int>(perm.begin(), perm.end()), " "));
  }
}

// ---------------------------------------------------------------- triples

double wrap_angle(double x) {
  x = std::fmod(x + kPi, 2 * kPi);
  if (x < 0) x += 2 * kPi;
  return x - kPi;
}

void run_triples(const RunConfig&, Report& rep) {
  Claims c(rep.claims);
  const auto& orbit = fiducial_orbit();
  const auto census = triple_trace_census(orbit.sic(1));
  int real = 0;
  int pairs = 0;
  long long total = 0;
  json values = json::array();
  for (const auto& e : census.entries) {
    total += e.multiplicity;
    values.push_back({e.value.real(), e.value.imag(), e.multiplicity});
    if (std::abs(e.value.imag()) <= 1e-6) {
      ++real;
    } else if (e.value.imag() > 0) {
      const bool has_conjugate = std::any_of(census.entries.begin(), census.entries.end(), [&](const auto& o) {
        return std::abs(o.value - std::conj(e.value)) <= 1e-9 && o.multiplicity == e.multiplicity;
      });
      pairs += has_conjugate ? 1 : 0;
    }
  }
  c.count("triples.distinct_values", "triple products", 17, static_cast<long long>(census.entries.size()));
  c.count("triples.conjugate_pairs", "triple products", 8, pairs);
  c.count("triples.real_values", "triple products", 1, real);
  c.count("triples.ordered_triples", "triple products", 16 * 15 * 14, total);
  c.flag("triples.values_separated", "triple products", census.min_separation > 1e-6);
  std::vector<char> same(kSicCount, 0);
  parallel_for(kSicCount, [&](std::size_t n) { same[n] = same_census(census, triple_trace_census(orbit.sics[n]), 1e-9); });
  c.count("triples.identical_across_sics", "triple products", kSicCount, std::count(same.begin(), same.end(), 1));

  double fid_dev = 0.0;
  double phase_dev = 0.0;
  bool monotone = true;
  for (int d = 3; d <= 5; ++d) {
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
      const double theta = -kPi + 2 * kPi * i / 100.0;
      const auto k = triple_family(d, theta);
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          fid_dev = std::max(fid_dev, std::abs(std::norm(k[static_cast<std::size_t>(a)].dot(k[static_cast<std::size_t>(b)])) - 1.0 / (d + 1)));
      const Complex t = triple_trace(projector(k[0]), projector(k[1]), projector(k[2]));
      const double phi = triple_phase(d, theta);
      phase_dev = std::max(phase_dev, std::abs(wrap_angle(std::arg(t) - phi)));
      if (phi <= prev) monotone = false;
      prev = phi;
    }
  }
  c.value("triples.family_fidelity", "equiangular triples", 0.0, fid_dev, 1e-10);
  c.value("triples.family_phase", "equiangular triples", 0.0, phase_dev, 1e-10);
  c.flag("triples.family_phase_monotone", "equiangular triples", monotone);
  const double generic = triple_phase(4, 0.3);
  const bool in_census = std::any_of(census.entries.begin(), census.entries.end(),
                                     [&](const auto& e) { return std::abs(wrap_angle(std::arg(e.value) - generic)) < 1e-6; });
  c.flag("triples.generic_triple_not_in_census", "equiangular triples", !in_census);
  rep.details["census"] = values;
}

// ---------------------------------------------------------------- reconstruct

void run_reconstruct(const RunConfig& cfg, Report& rep) {
  Claims c(rep.claims);
  const auto& orbit = fiducial_orbit();
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  const ComplexMatrix z = phase_operator(4);
  ComplexMatrix zj = ComplexMatrix::Identity(4, 4);
  for (int j = 0; j < 4; ++j, zj = zj * z) m += zj * fiducial_projector() * zj.adjoint();
  const auto eig = eig_hermitian(m).values;
  const auto ref = reference_signature();
  double dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(eig[i] - ref.lambdas[i]));
  c.value("reconstruct.signature", "eigenvalue signature", 0.0, dev, 1e-10);
  c.value("reconstruct.signature_sum", "eigenvalue signature", 4.0, ref.sum(), 1e-12);

  const auto& sic1 = orbit.sic(1);
  std::vector<EigSignature> distinct;
  std::map<int, int> counts;
  int reference_hits = 0;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      for (int cc = b + 1; cc < 16; ++cc)
        for (int d = cc + 1; d < 16; ++d) {
          const std::array<ComplexMatrix, 4> quad{sic1.states[static_cast<std::size_t>(a)], sic1.states[static_cast<std::size_t>(b)],
                                                  sic1.states[static_cast<std::size_t>(cc)], sic1.states[static_cast<std::size_t>(d)]};
          const auto sig = quad_signature(quad);
          if (sig.matches(ref, kSignatureTol)) ++reference_hits;
          auto it = std::find_if(distinct.begin(), distinct.end(), [&](const EigSignature& s) { return s.matches(sig, kSignatureTol); });
          if (it == distinct.end()) distinct.push_back(sig);
        }
  c.count("reconstruct.distinct_quad_signatures", "eigenvalue signature", 25, static_cast<long long>(distinct.size()));
  c.count("reconstruct.reference_quads", "eigenvalue signature", 24, reference_hits);

  const auto standard = standard_hw_group();
  const auto dprime = dprime_group();
  std::vector<char> ok(kSicCount, 0), ok_regrouped(kSicCount, 0);
  parallel_for(kSicCount, [&](std::size_t n) {
    const auto r = reconstruct_hw(orbit.sics[n], cfg.tol);
    ok[n] = r.omega_commutation && r.covariant && r.group_order_16 && same_projective_set(r.group, standard);
  });
  const auto& regrouped = regrouped_sics();
  parallel_for(regrouped.size(), [&](std::size_t n) {
    const auto r = reconstruct_hw(regrouped[n].sic, cfg.tol);
    ok_regrouped[n] = r.omega_commutation && r.covariant && r.group_order_16 && same_projective_set(r.group, dprime);
  });
  c.count("reconstruct.original_sics", "group reconstruction", kSicCount, std::count(ok.begin(), ok.end(), 1));
  c.count("reconstruct.regrouped_sics", "group reconstruction", static_cast<long long>(regrouped.size()),
          std::count(ok_regrouped.begin(), ok_regrouped.end(), 1));

  std::vector<char> unique(2 * kSicCount, 0);
  parallel_for(unique.size(), [&](std::size_t n) {
    unique[n] = uniqueness_check(n < kSicCount ? orbit.sics[n] : regrouped[n - kSicCount].sic);
  });
  c.count("reconstruct.unique_covariance_group", "unique covariance group", 2 * kSicCount, std::count(unique.begin(), unique.end(), 1));

  const auto r1 = reconstruct_hw(sic1, cfg.tol);
  rep.details["sic1"] = {{"z_prime", matrix_to_json(r1.z_prime)}, {"x_prime", matrix_to_json(r1.x_prime)},
                         {"z_quad", r1.z_quad}, {"x_quad", r1.x_quad}};
  if (cfg.input) {
    std::ifstream in(*cfg.input);
    if (!in) throw std::runtime_error("cannot open " + *cfg.input);
    const SicPovm sic = sic_from_json(json::parse(in));
    bool covariant = false;
    try {
      const auto r = reconstruct_hw(sic, cfg.tol);
      covariant = r.omega_commutation && r.covariant && r.group_order_16;
      json group = json::array();
      for (const auto& g : r.group) group.push_back(matrix_to_json(g));
      rep.details["input"] = {{"label", sic.label}, {"z_prime", matrix_to_json(r.z_prime)}, {"x_prime", matrix_to_json(r.x_prime)}, {"group", group}};
    } catch (const std::exception& e) {
      rep.details["input"] = {{"label", sic.label}, {"error", e.what()}};
    }
    c.flag("reconstruct.input_covariant", "group reconstruction", covariant);
  }
}

// ---------------------------------------------------------------- regroup

void run_regroup(const RunConfig& cfg, Report& rep) {
  Claims c(rep.claims);
  const auto& orbit = fiducial_orbit();
  const auto& regrouped = regrouped_sics();
  c.count("regroup.additional_sics", "regrouped SICs", 16, static_cast<long long>(regrouped.size()));
  c.count("regroup.additional_valid", "regrouped SICs", 16,
          std::count_if(regrouped.begin(), regrouped.end(), [&](const RegroupedSic& r) { return verify_sic(r.sic, cfg.tol).is_sic; }));
  const auto originals = state_sets_of_originals();
  const auto regrouped_sets = state_sets_of_regrouped();
  std::set<std::set<int>> both;
  std::set_intersection(originals.begin(), originals.end(), regrouped_sets.begin(), regrouped_sets.end(), std::inserter(both, both.begin()));
  c.count("regroup.distinct_from_originals", "regrouped SICs", 0, static_cast<long long>(both.size()));
  bool shares_four = true;
  for (const auto& r : regrouped) {
    std::map<int, int> per_label;
    for (int m : r.members) ++per_label[orbit.sic_membership[static_cast<std::size_t>(m)]];
    shares_four = shares_four && per_label.size() == 4 && std::all_of(per_label.begin(), per_label.end(), [](auto& kv) { return kv.second == 4; });
  }
  c.flag("regroup.four_states_from_four_sics", "regrouped SICs", shares_four);

  const auto scan = exhaustive_regroup_scan(orbit, false);
  c.count("regroup.row_scan_total", "exhaustive regrouping", 32, scan.total());
  c.text("regroup.row_scan_per_row", "exhaustive regrouping", "8,8,8,8", join(scan.per_row));
  c.count("regroup.row_scan_unexplained", "exhaustive regrouping", 0, scan.total() - scan.original - scan.regrouped);
  c.count("regroup.graph_degree", "exhaustive regrouping", 33, scan.graph_degree_min);
  c.flag("regroup.graph_regular", "exhaustive regrouping", scan.graph_degree_min == scan.graph_degree_max);
  if (cfg.full_scan) {
    const auto full = exhaustive_regroup_scan(orbit, true);
    c.count("regroup.full_scan_total", "exhaustive regrouping", 32, full.total());
    c.count("regroup.full_scan_unexplained", "exhaustive regrouping", 0, full.total() - full.original - full.regrouped);
    c.flag("regroup.each_state_in_two_sics", "exhaustive regrouping",
           std::all_of(full.memberships.begin(), full.memberships.end(), [](int m) { return m == 2; }));
  }

  const auto gens = dprime_generators();
  c.flag("regroup.xprime_matches_pair", "second displacement group", proj_equal(to_operator(gens.x_pair).op.matrix(), gens.x_prime, cfg.tol));
  c.flag("regroup.zprime_matches_pair", "second displacement group", proj_equal(to_operator(gens.z_pair).op.matrix(), gens.z_prime, cfg.tol));
  const ComplexMatrix zx = gens.z_prime * gens.x_prime;
  const ComplexMatrix xz = gens.x_prime * gens.z_prime;
  const Complex scalar = (xz.adjoint() * zx).trace() / 4.0;
  const bool fourth_root = std::abs(scalar - kI) <= cfg.tol.abs_tol() || std::abs(scalar + kI) <= cfg.tol.abs_tol();
  const bool exact = (zx - scalar * xz).cwiseAbs().maxCoeff() <= cfg.tol.abs_tol();
  c.text("regroup.dprime_commutation", "second displacement group", "+i or -i",
         !exact ? "not scalar" : fourth_root ? (scalar.imag() > 0 ? "+i" : "-i") : json_scalar(json{scalar.real(), scalar.imag()}));
  rep.claims.back().pass = exact && fourth_root;
  const GroupElement xg(gens.x_prime), zg(gens.z_prime);
  c.count("regroup.regrouped_covariant", "second displacement group", 16, std::count_if(regrouped.begin(), regrouped.end(), [&](const RegroupedSic& r) {
            return induced_permutation(xg, r.sic).has_value() && induced_permutation(zg, r.sic).has_value();
          }));

  const ComplexMatrix u = equivalence_unitary();
  c.flag("regroup.u_unitary", "equivalence unitary", is_unitary(u, 1e-12));
  std::vector<ComplexMatrix> conj_d;
  for (const auto& d : standard_hw_group()) conj_d.push_back(u * d * u.adjoint());
  c.flag("regroup.u_maps_d_to_dprime", "equivalence unitary", same_projective_set(conj_d, dprime_group()));
  c.flag("regroup.u_fixes_fiducial", "equivalence unitary",
         proj_equal(ComplexMatrix(u * fiducial_projector() * u.adjoint()), fiducial_projector(), cfg.tol));
  const GroupElement ug(u);
  std::set<std::set<int>> images;
  bool in_orbit = true;
  for (const auto& s : originals) {
    std::set<int> img;
    for (int k : s) {
      const auto hit = orbit.find(conjugate_by(ug, orbit.projectors[static_cast<std::size_t>(k)]));
      if (!hit) in_orbit = false; else img.insert(*hit);
    }
    images.insert(img);
  }
  c.flag("regroup.u_maps_originals_to_regrouped", "equivalence unitary", in_orbit && images == regrouped_sets);

  const auto census = hw_conjugate_subgroup_census();
  c.count("regroup.census_total", "displacement-type subgroups", 32, census.total);
  c.count("regroup.census_normal", "displacement-type subgroups", 2, census.normal);
  c.flag("regroup.census_normal_are_d_and_dprime", "displacement-type subgroups", census.normal_are_d_and_dprime);
  c.count("regroup.clifford_index", "displacement-type subgroups", 2, census.clifford_index);
  c.count("regroup.extended_normalizer_order", "displacement-type subgroups", 1536, census.extended_normalizer_order);
  c.flag("regroup.extended_normalizer_preserves_orbit", "displacement-type subgroups", census.normalizer_preserves_orbit);

  json sics = json::array();
  json matching = json::array();
  for (const auto& r : regrouped) {
    sics.push_back(sic_to_json(r.sic));
    json parts = json::array();
    for (const auto& part : r.parts) {
      json members = json::array();
      for (int m : part.members) members.push_back(index_string(orbit.hw_index[static_cast<std::size_t>(m)].p));
      parts.push_back({{"sic", part.sic_label}, {"states", members}});
    }
    matching.push_back({{"label", r.sic.label}, {"parts", parts}});
  }
  rep.details["regrouped_sics"] = sics;
  rep.details["matching"] = matching;
  rep.details["u"] = matrix_to_json(u);
  rep.details["x_prime"] = {{"matrix", matrix_to_json(gens.x_prime)}, {"pair", pair_to_json(gens.x_pair)}};
  rep.details["z_prime"] = {{"matrix", matrix_to_json(gens.z_prime)}, {"pair", pair_to_json(gens.z_pair)}};
  rep.details["census"] = {{"total", census.total}, {"normal", census.normal}};
}

// ---------------------------------------------------------------- twoqubit

void run_twoqubit(const RunConfig& cfg, Report& rep) {
  Claims c(rep.claims);
  const Basis basis = cfg.basis;
  const auto& orbit = fiducial_orbit();
  const double tol = cfg.tol.abs_tol();

  struct Row {
    std::optional<SignPattern> pattern;
    double concurrence = 0.0;
    double norm = 0.0;
  };
  std::vector<Row> rows(orbit.kets.size());
  parallel_for(rows.size(), [&](std::size_t k) {
    const Ket v = in_product_coordinates(orbit.kets[k], basis);
    const Gbv g = gbv(projector(v), cfg.tol);
    rows[k] = {match_sign_pattern(g, basis), concurrence(v, cfg.tol), g.norm_squared()};
  });

  int matched = 0, class1 = 0, class2 = 0;
  bool class_by_label = true, constant = true, signs_match = true;
  double norm_dev = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    norm_dev = std::max(norm_dev, std::abs(rows[k].norm - 3.0));
    const auto& p = rows[k].pattern;
    if (!p) continue;
    ++matched;
    (p->class_id == 1 ? class1 : class2)++;
    const int label = orbit.sic_membership[k];
    if (p->class_id != (label <= 8 ? 1 : 2)) class_by_label = false;
    const auto first = rows[static_cast<std::size_t>(FiducialOrbit::index_of(label, {0, 0}))].pattern;
    if (!first || sign_functions(*first) != sign_functions(*p)) constant = false;
    if (sign_functions(*p) != expected_sign_functions(label)) signs_match = false;
  }
  c.value("twoqubit.gbv_norm", "Bloch vector", 0.0, norm_dev, tol);
  c.count("twoqubit.matched_patterns", "sign patterns", 256, matched);
  c.count("twoqubit.class1_states", "sign patterns", 128, class1);
  c.count("twoqubit.class2_states", "sign patterns", 128, class2);
  c.flag("twoqubit.class_by_label", "sign patterns", class_by_label);
  c.flag("twoqubit.sign_functions_constant", "sign functions", constant);
  c.flag("twoqubit.sign_functions_table", "sign functions", signs_match);

  const double uniform = std::sqrt(2.0 / 5.0);
  const double gold = SicConstants::golden();
  const double hi = std::sqrt((2 + 2 * std::sqrt(gold)) / 5);
  const double lo = std::sqrt((2 - 2 * std::sqrt(gold)) / 5);
  const int uniform_class = basis == Basis::product ? 1 : 2;
  double uniform_worst = uniform;
  int split_sics = 0;
  json histograms = json::object();
  for (int n = 1; n <= kSicCount; ++n) {
    const auto h = concurrence_census(n, basis);
    json hj = json::array();
    for (const auto& b : h) hj.push_back({b.value, b.count});
    histograms[std::to_string(n)] = hj;
    const int cls = n <= 8 ? 1 : 2;
    if (cls == uniform_class) {
      for (const auto& b : h)
        if (std::abs(b.value - uniform) > std::abs(uniform_worst - uniform)) uniform_worst = b.value;
    } else if (h.size() == 2 && h[0].count == 8 && h[1].count == 8 && std::abs(h[0].value - lo) <= tol && std::abs(h[1].value - hi) <= tol) {
      ++split_sics;
    }
  }
  const std::string uid = uniform_class == 1 ? "class1" : "class2";
  const std::string sid = uniform_class == 1 ? "class2" : "class1";
  c.value("twoqubit." + uid + "_concurrence", "concurrence", uniform, uniform_worst, tol);
  c.count("twoqubit." + sid + "_concurrence_split", "concurrence", 8, split_sics);

  double purity_dev = 0.0;
  for (int n = 1; n <= kSicCount; ++n) {
    std::vector<ComplexMatrix> states;
    for (int k = 0; k < kStatesPerSic; ++k)
      states.push_back(projector(in_product_coordinates(orbit.kets[static_cast<std::size_t>(FiducialOrbit::index_of(n, from_linear_index(k, 4)))], basis)));
    purity_dev = std::max(purity_dev, std::abs(avg_reduced_purity(states) - expected_avg_purity(2, 2)));
  }
  for (const auto& r : regrouped_sics()) {
    std::vector<ComplexMatrix> states;
    for (int m : r.members) states.push_back(projector(in_product_coordinates(orbit.kets[static_cast<std::size_t>(m)], basis)));
    purity_dev = std::max(purity_dev, std::abs(avg_reduced_purity(states) - expected_avg_purity(2, 2)));
  }
  c.value("twoqubit.average_reduced_purity", "reduced states", 0.0, purity_dev, tol);

  if (basis == Basis::product) {
    int paired = 0, cubes = 0;
    json cube_report = json::object();
    for (int n = 1; n <= kSicCount; ++n) {
      const auto census = reduced_state_census(n, basis);
      auto twofold = [](const QubitCensus& q) {
        return q.points.size() == 8 && std::all_of(q.multiplicities.begin(), q.multiplicities.end(), [](int m) { return m == 2; });
      };
      paired += twofold(census.first) && twofold(census.second) ? 1 : 0;
      if (n <= 8) cubes += census.second.cube ? 1 : 0;
      cube_report[std::to_string(n)] = {{"second_qubit_cube", census.second.cube}, {"distances", census.second.distances}};
    }
    c.count("twoqubit.reduced_states_paired", "reduced states", 16, paired);
    c.count("twoqubit.class1_cubes", "reduced states", 8, cubes);
    const auto sic1 = reduced_state_census(1, basis);
    c.value("twoqubit.cube_edge", "reduced states", 2.0 / std::sqrt(5.0), sic1.second.distances.empty() ? -1.0 : sic1.second.distances.front(), tol);
    rep.details["cubes"] = cube_report;

    int violating = 0, passing = 0;
    std::set<int> pt_targets;
    for (const auto& p : all_sign_patterns(Basis::product)) {
      if (p.class_id != 1 || p.satisfies_constraint()) continue;
      ++violating;
      const auto r = partial_transpose_simplex_check(p);
      if (r.pass(tol)) {
        ++passing;
        pt_targets.insert(*r.partial_transpose_in_orbit);
      }
    }
    c.count("twoqubit.pt_violating_patterns", "partial transpose", 128, violating);
    c.count("twoqubit.pt_simplex_pass", "partial transpose", 128, passing);
    c.count("twoqubit.pt_distinct_fiducials", "partial transpose", 128, static_cast<long long>(pt_targets.size()));
  }
  c.flag("twoqubit.shift_nonlocal", "local unitaries", operator_schmidt_rank(shift_operator(4)) > 1);
  rep.details["concurrence_histograms"] = histograms;

  rep.table.push_back("sic\tp1\tp2\tclass\ta\tb\talpha1\talpha2\talpha3\tbeta1\tbeta2\tbeta3\th1\th2\th3\tconcurrence");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& hw = orbit.hw_index[k];
    std::ostringstream line;
    line << std::setprecision(12) << hw.sic_label << '\t' << hw.p.p1 << '\t' << hw.p.p2;
    if (const auto& p = rows[k].pattern) {
      const auto h = sign_functions(*p);
      line << '\t' << p->class_id << '\t' << p->a << '\t' << p->b;
      for (int s : p->alpha) line << '\t' << s;
      for (int s : p->beta) line << '\t' << s;
      line << '\t' << h.h1 << '\t' << h.h2 << '\t' << h.h3;
    } else {
      line << "\tnone\t\t\t\t\t\t\t\t\t\t\t";
    }
    line << '\t' << rows[k].concurrence;
    rep.table.push_back(line.str());
  }
}

using Runner = std::function<void(const RunConfig&, Report&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m{{"orbit", run_orbit},         {"symmetry", run_symmetry}, {"triples", run_triples},
                                               {"reconstruct", run_reconstruct}, {"regroup", run_regroup},   {"twoqubit", run_twoqubit}};
  return m;
}

std::string json_scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(12) << j.get<double>();
    return s.str();
  }
  return j.dump();
}

}  // namespace

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::tsv:
      return "tsv";
    default:
      return "text";
  }
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "tsv") return OutputFormat::tsv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format: " + s);
}

bool Report::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* Report::find(const std::string& claim_id) const {
  const auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.claim_id == claim_id; });
  return it == claims.end() ? nullptr : &*it;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"orbit", "symmetry", "triples", "reconstruct", "regroup", "twoqubit", "all"};
  return names;
}

Report run(const std::string& subcommand, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.subcommand = subcommand;
  rep.config = config;
  if (subcommand == "all") {
    for (const auto& [name, runner] : runners()) {
      Report part;
      part.config = config;
      runner(config, part);
      rep.claims.insert(rep.claims.end(), part.claims.begin(), part.claims.end());
      rep.details[name] = part.details;
    }
  } else {
    const auto it = runners().find(subcommand);
    if (it == runners().end()) throw std::invalid_argument("unknown subcommand: " + subcommand);
    it->second(config, rep);
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::json config_to_json(const RunConfig& c) {
  json j{{"tol", c.tol.abs_tol()}, {"basis", to_string(c.basis)}, {"format", to_string(c.format)}, {"full_scan", c.full_scan},
         {"threads", worker_threads()}};
  j["out"] = c.out ? json(*c.out) : json(nullptr);
  j["input"] = c.input ? json(*c.input) : json(nullptr);
  return j;
}

nlohmann::json to_json(const Report& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim_id", c.claim_id}, {"paper_anchor", c.paper_anchor}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  }
  return {{"subcommand", r.subcommand}, {"claims", claims}, {"runtime_ms", r.runtime_ms}, {"config", config_to_json(r.config)},
          {"pass", r.all_pass()}, {"details", r.details}};
}

std::string render(const Report& r) {
  std::ostringstream out;
  switch (r.config.format) {
    case OutputFormat::json:
      out << to_json(r).dump(2) << '\n';
      break;
    case OutputFormat::tsv:
      out << "claim_id\tpaper_anchor\texpected\tobserved\tpass\n";
      for (const auto& c : r.claims)
        out << c.claim_id << '\t' << c.paper_anchor << '\t' << json_scalar(c.expected) << '\t' << json_scalar(c.observed) << '\t'
            << (c.pass ? "true" : "false") << '\n';
      if (!r.table.empty()) {
        out << '\n';
        for (const auto& line : r.table) out << line << '\n';
      }
      break;
    case OutputFormat::text: {
      std::size_t width = 0;
      for (const auto& c : r.claims) width = std::max(width, c.claim_id.size());
      for (const auto& c : r.claims) {
        out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.claim_id << "  expected "
            << json_scalar(c.expected) << ", observed " << json_scalar(c.observed) << '\n';
      }
      const auto failed = std::count_if(r.claims.begin(), r.claims.end(), [](const Claim& c) { return !c.pass; });
      out << r.subcommand << ": " << r.claims.size() - static_cast<std::size_t>(failed) << "/" << r.claims.size() << " claims pass in "
          << std::fixed << std::setprecision(0) << r.runtime_ms << " ms\n";
      break;
    }
  }
  return out.str();
}

}  // namespace sic4
