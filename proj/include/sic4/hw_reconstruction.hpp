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

#ifndef SIC4_HW_RECONSTRUCTION_HPP
#define SIC4_HW_RECONSTRUCTION_HPP

#include <array>
#include <span>
#include <vector>

#include "sic4/numerics.hpp"
#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {

/// Sorted eigenvalues of a sum of four SIC states.
struct EigSignature {
  std::array<double, 4> lambdas{};
  double sum() const { return lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3]; }
  bool matches(const EigSignature& other, double tol) const;
};

/// Closed-form eigenvalues lambda_0..lambda_3 of sum_j Z^j rho_f Z^{-j}, in
/// that labelling (not sorted): lambda_{0,2} = (2 +- sqrt 2) G / sqrt 5,
/// lambda_{1,3} = 2 / (sqrt 5 G) +- sqrt(2 / (5 G)).
std::array<double, 4> labelled_reference_eigenvalues();
EigSignature reference_signature();

/// Throws std::invalid_argument unless exactly four 4x4 states are given.
EigSignature quad_signature(std::span<const ComplexMatrix> states);

inline constexpr double kSignatureTol = 1e-8;

struct HwReconstruction {
  ComplexMatrix z_prime;
  ComplexMatrix x_prime;
  std::array<int, 4> z_quad{};  // state indices used for Z'
  std::array<int, 4> x_quad{};  // state indices used for X'
  std::vector<ComplexMatrix> group;  // X'^a Z'^b, a, b = 0..3
  bool omega_commutation = false;    // Z' X' = omega X' Z'
  bool covariant = false;            // X', Z' permute the SIC states
  bool group_order_16 = false;
};

/// Rebuilds the displacement group of a d = 4 SIC from its states alone.
/// Throws std::invalid_argument for a non-SIC input and std::runtime_error
/// when no qualifying quadruple exists.
HwReconstruction reconstruct_hw(const SicPovm& sic, Tolerance tol = {});

/// Equality of two 16-element operator sets up to phases.
bool same_projective_set(std::span<const ComplexMatrix> a, std::span<const ComplexMatrix> b);
std::vector<ComplexMatrix> standard_hw_group();

/// True iff the SIC's projective unitary symmetry group (found as the
/// permutations preserving all triple products) has exactly one subgroup of
/// order 16, i.e. exactly 16 elements of 2-power order.
bool uniqueness_check(const SicPovm& sic);

}  // namespace sic4

#endif  // SIC4_HW_RECONSTRUCTION_HPP
