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

#ifndef SIC4_WEYL_HEISENBERG_HPP
#define SIC4_WEYL_HEISENBERG_HPP

#include <span>
#include <string>
#include <vector>

#include "sic4/numerics.hpp"

namespace sic4 {

/// Phase-space point (p1, p2), both reduced mod d.
struct DisplacementIndex {
  int p1 = 0;
  int p2 = 0;
  auto operator<=>(const DisplacementIndex&) const = default;
};

/// Position of (p1, p2) in lexicographic order: p1 * d + p2.
inline int linear_index(DisplacementIndex p, int d) { return p.p1 * d + p.p2; }
inline DisplacementIndex from_linear_index(int k, int d) { return {k / d, k % d}; }

/// d_bar = d for odd d, 2d for even d. The phase tau has order d_bar.
int d_bar(int d);
/// Symplectic form <p, q> = p2 q1 - p1 q2.
int symplectic_form(int p1, int p2, int q1, int q2);
int mod(long long x, int m);

Complex omega(int d);
Complex tau(int d);

ComplexMatrix shift_operator(int d);  // X|e_r> = |e_{r+1 mod d}>
ComplexMatrix phase_operator(int d);  // Z|e_r> = omega^r |e_r>

/// D_{p1,p2} = tau^{p1 p2} X^{p1} Z^{p2}. The indices may be any integers:
/// tau is raised mod d_bar, so for even d the result distinguishes p from
/// p + d e_k by a sign, as the Clifford conjugation law requires.
ComplexMatrix displacement(long long p1, long long p2, int d);
ComplexMatrix displacement(DisplacementIndex p, int d);

/// Checks D_p D_q = tau^{<p,q>} D_{p+q} (indices added without reduction)
/// for every pair p, q in Z_d^2.
bool weyl_commutation_check(int d, Tolerance tol = {});

/// Golden-ratio constants shared by the fiducial and the Bloch-vector tables.
struct SicConstants {
  static double golden();   // G = (sqrt 5 - 1) / 2
  static double b();        // 1 / sqrt 5
  static double a_plus();   // sqrt(1 + sqrt G) / sqrt 5
  static double a_minus();  // sqrt(1 - sqrt G) / sqrt 5
  static double g_plus();   // sqrt(1 + G) / sqrt 5
  static double g_minus();  // sqrt(1 - G) / sqrt 5
  /// A_{sign}, G_{sign} with sign = +1 or -1.
  static double a(int sign) { return sign > 0 ? a_plus() : a_minus(); }
  static double g(int sign) { return sign > 0 ? g_plus() : g_minus(); }
};

/// The closed-form d = 4 fiducial ket, unit norm.
Ket fiducial_ket_d4();

/// True iff ||<v|D_p|v>| - 1/sqrt(d+1)| <= tol for every p != 0.
/// Throws std::invalid_argument when v is not normalized.
bool is_fiducial(const Ket& v, int d, Tolerance tol = {});

/// d^2 trace-one rank-one density matrices; state k is D_p |v><v| D_p^dagger
/// with k = linear_index(p).
struct SicPovm {
  int d = 0;
  std::string label;
  std::vector<ComplexMatrix> states;
};

/// Throws std::invalid_argument when v is not a fiducial.
SicPovm generate_sic(const Ket& v, int d, Tolerance tol = {}, std::string label = {});

struct SicReport {
  double max_fidelity_deviation = 0.0;  // max_{j != k} |tr(rho_j rho_k) - 1/(d+1)|
  double max_trace_deviation = 0.0;
  double max_purity_deviation = 0.0;    // max |rho^2 - rho| entries (rank one + Hermitian)
  double max_hermiticity_deviation = 0.0;
  double completeness_deviation = 0.0;  // max |sum rho / d - I| entries
  bool is_sic = false;
};

/// Throws std::invalid_argument when states.size() != d^2.
SicReport verify_sic(std::span<const ComplexMatrix> states, int d, Tolerance tol = {});
inline SicReport verify_sic(const SicPovm& sic, Tolerance tol = {}) { return verify_sic(sic.states, sic.d, tol); }

/// {d, label, states: [matrix...]}.
nlohmann::json sic_to_json(const SicPovm& sic);
SicPovm sic_from_json(const nlohmann::json& j);

}  // namespace sic4

#endif  // SIC4_WEYL_HEISENBERG_HPP
