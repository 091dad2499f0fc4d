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

#ifndef SIC4_NUMERICS_HPP
#define SIC4_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace sic4 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerance used by every numerical identity check.
class Tolerance {
 public:
  constexpr Tolerance() = default;
  explicit Tolerance(double abs_tol);
  double abs_tol() const { return abs_tol_; }

 private:
  double abs_tol_ = 1e-9;
};

/// A unitary (antiunitary = false) or antiunitary operator. The antiunitary
/// case is `matrix` followed by entrywise complex conjugation in the
/// computational basis, so it acts on a ket as v -> matrix * conj(v).
class GroupElement {
 public:
  /// Throws std::invalid_argument unless `matrix` is square, finite and
  /// unitary within 1e-9.
  explicit GroupElement(ComplexMatrix matrix, bool antiunitary = false);

  static GroupElement identity(int dim);
  static GroupElement conjugation(int dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  bool antiunitary() const { return antiunitary_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  bool antiunitary_;
};

/// The product a*b (b acts first): (M_a K^{c_a})(M_b K^{c_b}) = M_a conj^{c_a}(M_b) K^{c_a xor c_b}.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
/// Smallest n >= 1 with g^n projectively the identity; 0 if none up to `max_order`.
int projective_order(const GroupElement& g, int max_order = 64);

Ket apply(const GroupElement& g, const Ket& v);
/// g op g^{-1}, with op conjugated entrywise first when g is antiunitary.
ComplexMatrix conjugate_by(const GroupElement& g, const ComplexMatrix& op);

/// Equality up to a global phase. Rank-1 trace-1 Hermitian inputs are
/// compared as projectors (|tr(ab)| >= 1 - tol), anything else as unitaries
/// (|tr(a^dagger b)| >= d - tol).
bool proj_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});
/// GroupElement version: flags must agree and the matrices must be proj_equal.
bool proj_equal(const GroupElement& a, const GroupElement& b, Tolerance tol = {});

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);
bool all_finite(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

ComplexMatrix projector(const Ket& v);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  std::vector<Ket> vectors;    // orthonormal; largest-magnitude component real positive
};

/// Throws std::invalid_argument for non-Hermitian input.
EigenDecomposition eig_hermitian(const ComplexMatrix& m, Tolerance tol = {});

/// Hashable fingerprint of a matrix up to global phase: the matrix is
/// rescaled so its first entry of magnitude > 1e-6 (row-major) is real
/// positive, then every component is rounded onto a 1e-7 grid.
struct ProjectiveKey {
  bool antiunitary = false;
  std::vector<std::int64_t> digits;
  auto operator<=>(const ProjectiveKey&) const = default;
};

struct ProjectiveKeyHash {
  std::size_t operator()(const ProjectiveKey& k) const;
};

ComplexMatrix canonical_phase(const ComplexMatrix& m);
ProjectiveKey projective_key(const ComplexMatrix& m, bool antiunitary = false);
ProjectiveKey projective_key(const GroupElement& g);
/// Projectors carry no phase freedom; the key is just the rounded entries.
ProjectiveKey projector_key(const ComplexMatrix& rho);

/// Upper bound on worker threads: SIC4_THREADS if set and positive, else the
/// hardware concurrency.
unsigned worker_threads();
/// Runs body(i) for i in [0, n) across worker_threads() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// {dim, entries: [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws std::invalid_argument on malformed input or non-finite entries.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace sic4

#endif  // SIC4_NUMERICS_HPP
