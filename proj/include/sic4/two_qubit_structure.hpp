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

#ifndef SIC4_TWO_QUBIT_STRUCTURE_HPP
#define SIC4_TWO_QUBIT_STRUCTURE_HPP

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sic4/numerics.hpp"
#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {

// Qubit ordering: e_{2j+k} = |j> (x) |k>. r belongs to the second qubit, s to the first.

enum class Basis { product, bell };

std::string to_string(Basis b);
/// Throws std::invalid_argument for anything but "product" or "bell".
Basis basis_from_string(const std::string& s);

/// Pauli matrices: 0 = I, 1 = x, 2 = y, 3 = z.
ComplexMatrix pauli(int j);

struct Gbv {
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
  double norm_squared() const { return r.squaredNorm() + s.squaredNorm() + c.squaredNorm(); }
  bool approx_equal(const Gbv& o, double tol) const;
};

/// Throws std::invalid_argument unless rho is a 4x4 Hermitian unit-trace matrix.
Gbv gbv(const ComplexMatrix& rho, Tolerance tol = {});
ComplexMatrix to_density(const Gbv& g);

struct SignPattern {
  int a = 1;
  int b = 1;
  std::array<int, 3> alpha{1, 1, 1};
  std::array<int, 3> beta{1, 1, 1};
  int class_id = 1;
  Basis basis = Basis::product;

  bool satisfies_constraint() const;
  auto operator<=>(const SignPattern&) const = default;
};

/// The 512 sign assignments of one basis (256 per class), constraint ignored.
std::vector<SignPattern> all_sign_patterns(Basis basis);
/// GBV predicted by the structure table for `p`.
Gbv predicted_gbv(const SignPattern& p);

inline constexpr double kSignMatchTol = 1e-7;

/// The unique constraint-satisfying pattern whose table reproduces g, or
/// std::nullopt. Throws std::logic_error on more than one match.
std::optional<SignPattern> match_sign_pattern(const Gbv& g, Basis basis, double tol = kSignMatchTol);

struct SignFunctions {
  int h1 = 1;
  int h2 = 1;
  int h3 = 1;
  auto operator<=>(const SignFunctions&) const = default;
};

SignFunctions sign_functions(const SignPattern& p);
/// Expected sign-function values of SIC n: h1 by row, (h2, h3) by column.
SignFunctions expected_sign_functions(int sic_label);

/// Columns are the Bell kets (|00>+|11>), (|00>-|11>), (|01>+|10>), (|01>-|10>), each / sqrt 2.
ComplexMatrix bell_basis_map();
/// Product-basis coordinates of a ket whose components refer to `basis`.
Ket in_product_coordinates(const Ket& v, Basis basis);

/// |<psi| sigma_y (x) sigma_y |psi*>|. Throws std::invalid_argument unless normalized.
double concurrence(const Ket& psi, Tolerance tol = {});

struct HistogramBin {
  double value = 0.0;
  int count = 0;
};
/// Concurrence values of the 16 states of SIC n, clustered at 1e-9, ascending.
std::vector<HistogramBin> concurrence_census(int sic_label, Basis basis);

ComplexMatrix reduced_first(const ComplexMatrix& rho);
ComplexMatrix reduced_second(const ComplexMatrix& rho);
ComplexMatrix partial_transpose_second(const ComplexMatrix& rho);

/// Mean purity of the first-qubit reduced states.
double avg_reduced_purity(std::span<const ComplexMatrix> states);
/// (d1 + d2) / (d1 d2 + 1).
double expected_avg_purity(int d1, int d2);

struct QubitCensus {
  std::vector<Eigen::Vector3d> points;  // distinct Bloch vectors
  std::vector<int> multiplicities;
  std::vector<double> distances;  // distinct pairwise distances, ascending
  bool cube = false;
};

struct ReducedStateCensus {
  QubitCensus first;
  QubitCensus second;
};

ReducedStateCensus reduced_state_census(int sic_label, Basis basis);

struct PartialTransposeCheck {
  bool hermitian = false;
  bool unit_trace = false;
  double min_eigenvalue = 0.0;
  double max_simplex_deviation = 0.0;  // over the 15 nonzero displacements
  std::optional<int> partial_transpose_in_orbit;
  bool pass(double tol) const {
    return hermitian && unit_trace && min_eigenvalue < -tol && max_simplex_deviation <= tol && partial_transpose_in_orbit.has_value();
  }
};

/// Checks a product-basis class-1 pattern violating its constraint. Throws
/// std::invalid_argument for any other pattern.
PartialTransposeCheck partial_transpose_simplex_check(const SignPattern& p);

/// Number of singular values above 1e-9 of the realigned 4x4 operator.
int operator_schmidt_rank(const ComplexMatrix& u);

}  // namespace sic4

#endif  // SIC4_TWO_QUBIT_STRUCTURE_HPP
