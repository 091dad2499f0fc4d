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

#ifndef SIC4_CLIFFORD_GROUP_HPP
#define SIC4_CLIFFORD_GROUP_HPP

#include <array>
#include <string>
#include <vector>

#include "sic4/numerics.hpp"
#include "sic4/weyl_heisenberg.hpp"

namespace sic4 {

/// (F, chi) with F = [[alpha, beta], [gamma, delta]] over Z_{d_bar} and
/// chi in (Z_d)^2. Entries are kept reduced.
class SymplecticPair {
 public:
  /// Reduces the entries; throws std::invalid_argument unless
  /// det F = +-1 mod d_bar.
  SymplecticPair(int d, std::array<int, 4> f, std::array<int, 2> chi = {0, 0});

  static SymplecticPair identity(int d) { return {d, {1, 0, 0, 1}}; }
  /// (J, 0) with J = diag(1, -1).
  static SymplecticPair conjugation(int d) { return {d, {1, 0, 0, -1}}; }

  int d() const { return d_; }
  int dbar() const { return d_bar(d_); }
  const std::array<int, 4>& f() const { return f_; }
  const std::array<int, 2>& chi() const { return chi_; }
  int alpha() const { return f_[0]; }
  int beta() const { return f_[1]; }
  int gamma() const { return f_[2]; }
  int delta() const { return f_[3]; }
  /// +1 or -1.
  int det() const;
  bool antiunitary() const { return det() == -1; }

  /// F p computed mod d_bar (not reduced mod d).
  std::array<int, 2> apply_f(int p1, int p2) const;

  auto operator<=>(const SymplecticPair&) const = default;
  std::string to_string() const;

 private:
  int d_;
  std::array<int, 4> f_;
  std::array<int, 2> chi_;
};

/// (F1, chi1) o (F2, chi2) = (F1 F2, chi1 + F1 chi2).
SymplecticPair semidirect_product(const SymplecticPair& a, const SymplecticPair& b);
SymplecticPair inverse(const SymplecticPair& s);

/// A symplectic pair together with its operator image.
struct CliffordElement {
  SymplecticPair source;
  GroupElement op;
};

/// Explicit operator image of (F, chi): D_chi V_F for det F = 1 (factoring F
/// when beta is not a unit), and the det = 1 image of (F J, chi) followed by
/// complex conjugation when det F = -1. The result is checked against the
/// conjugation law on every displacement; a mismatch throws std::logic_error.
CliffordElement to_operator(const SymplecticPair& s);

/// The d x d matrix V_F for det F = 1 and beta invertible mod d_bar.
ComplexMatrix metaplectic_unitary(const SymplecticPair& s);

/// U D_p U^{-1} = omega^{phase_exponent} D_{image}, with `image` reduced mod d.
/// The exponent already absorbs the sign picked up when F p is reduced from
/// Z_{d_bar} to Z_d.
struct ConjugationImage {
  int phase_exponent = 0;
  DisplacementIndex image;
};

/// Throws std::logic_error if the operator does not satisfy the predicted law.
ConjugationImage conjugation_action(const CliffordElement& c, DisplacementIndex p, Tolerance tol = {});

/// All (F, chi) in ESL(2, Z_{d_bar}) x| (Z_d)^2, or only the det = 1 part.
std::vector<SymplecticPair> all_symplectic_pairs(int d, bool extended);

/// One representative per projective element of the (extended) Clifford
/// group, obtained by mapping every symplectic pair and deduplicating. The
/// representative of each class is the first pair in enumeration order.
std::vector<CliffordElement> enumerate_projective_clifford(int d, bool extended);

/// Cached d = 4 enumerations (768 unitary / 1536 extended elements).
const std::vector<CliffordElement>& projective_clifford_d4(bool extended);

nlohmann::json pair_to_json(const SymplecticPair& s);

}  // namespace sic4

#endif  // SIC4_CLIFFORD_GROUP_HPP
