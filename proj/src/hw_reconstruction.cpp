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

#include "sic4/hw_reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sic4/sic_orbits.hpp"

namespace sic4 {

bool EigSignature::matches(const EigSignature& other, double tol) const {
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(lambdas[k] - other.lambdas[k]) > tol) return false;
  }
  return true;
}

std::array<double, 4> labelled_reference_eigenvalues() {
  const double g = SicConstants::golden();
  const double s5 = std::sqrt(5.0);
  const double s2 = std::sqrt(2.0);
  return {(2.0 + s2) * g / s5, 2.0 / (s5 * g) + std::sqrt(2.0 / (5.0 * g)), (2.0 - s2) * g / s5,
          2.0 / (s5 * g) - std::sqrt(2.0 / (5.0 * g))};
}

EigSignature reference_signature() {
  EigSignature sig{labelled_reference_eigenvalues()};
  std::sort(sig.lambdas.begin(), sig.lambdas.end());
  return sig;
}

EigSignature quad_signature(std::span<const ComplexMatrix> states) {
  if (states.size() != 4) throw std::invalid_argument("quad_signature: expected exactly four states");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (const auto& s : states) {
    if (s.rows() != 4 || s.cols() != 4) throw std::invalid_argument("quad_signature: states must be 4x4");
    m += s;
  }
  const auto eig = eig_hermitian(m);
  EigSignature sig;
  std::copy(eig.values.begin(), eig.values.end(), sig.lambdas.begin());
  return sig;
}

std::vector<ComplexMatrix> standard_hw_group() {
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < 16; ++k) out.push_back(displacement(from_linear_index(k, 4), 4));
  return out;
}

bool same_projective_set(std::span<const ComplexMatrix> a, std::span<const ComplexMatrix> b) {
  std::set<ProjectiveKey> ka, kb;
  for (const auto& m : a) ka.insert(projective_key(m));
  for (const auto& m : b) kb.insert(projective_key(m));
  return ka == kb;
}

namespace {

// Operator sum_k i^{multiplier k} |e'_k><e'_k| with e'_k the eigenket of the
// quadruple sum belonging to the labelled eigenvalue lambda_k.
ComplexMatrix phase_generator(const SicPovm& sic, const std::array<int, 4>& quad, int multiplier) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int idx : quad) m += sic.states[static_cast<std::size_t>(idx)];
  const auto eig = eig_hermitian(m);
  const auto labelled = labelled_reference_eigenvalues();
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    std::size_t label = 0;
    for (std::size_t k = 1; k < 4; ++k) {
      if (std::abs(labelled[k] - eig.values[j]) < std::abs(labelled[label] - eig.values[j])) label = k;
    }
    const Complex phase = std::pow(kI, static_cast<int>((multiplier * label) % 4));
    out += phase * eig.vectors[j] * eig.vectors[j].adjoint();
  }
  return out;
}

bool has_reference_signature(const SicPovm& sic, const std::array<int, 4>& quad) {
  const std::array<ComplexMatrix, 4> states{sic.states[static_cast<std::size_t>(quad[0])], sic.states[static_cast<std::size_t>(quad[1])],
                                            sic.states[static_cast<std::size_t>(quad[2])], sic.states[static_cast<std::size_t>(quad[3])]};
  return quad_signature(states).matches(reference_signature(), kSignatureTol);
}

std::optional<std::vector<std::vector<int>>> cyclic_orbits(const SicPovm& sic, const ComplexMatrix& generator) {
  const auto perm = induced_permutation(GroupElement(generator), sic);
  if (!perm) return std::nullopt;
  std::vector<bool> seen(sic.states.size(), false);
  std::vector<std::vector<int>> orbits;
  for (std::size_t s = 0; s < sic.states.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (auto k = static_cast<int>(s); !seen[static_cast<std::size_t>(k)]; k = (*perm)[static_cast<std::size_t>(k)]) {
      seen[static_cast<std::size_t>(k)] = true;
      orbit.push_back(k);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

HwReconstruction reconstruct_hw(const SicPovm& sic, Tolerance tol) {
  if (sic.d != 4 || !verify_sic(sic, tol).is_sic) throw std::invalid_argument("reconstruct_hw: input is not a d = 4 SIC");
  const int n = static_cast<int>(sic.states.size());
  const Complex w = omega(4);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int e = c + 1; e < n; ++e) {
          const std::array<int, 4> zq{a, b, c, e};
          if (!has_reference_signature(sic, zq)) continue;
          HwReconstruction out;
          out.z_prime = phase_generator(sic, zq, 1);
          out.z_quad = zq;
          const auto orbits = cyclic_orbits(sic, out.z_prime);
          if (!orbits || orbits->size() != 4 ||
              std::any_of(orbits->begin(), orbits->end(), [](const auto& o) { return o.size() != 4; })) {
            continue;
          }
          const auto& o = *orbits;
          for (int i0 : o[0]) {
            for (int i1 : o[1]) {
              for (int i2 : o[2]) {
                for (int i3 : o[3]) {
                  std::array<int, 4> xq{i0, i1, i2, i3};
                  std::sort(xq.begin(), xq.end());
                  if (!has_reference_signature(sic, xq)) continue;
                  for (int multiplier : {1, 3}) {
                    const ComplexMatrix x = phase_generator(sic, xq, multiplier);
                    if (max_abs(out.z_prime * x - w * x * out.z_prime) > tol.abs_tol()) continue;
                    out.x_prime = x;
                    out.x_quad = xq;
                    out.omega_commutation = true;
                    ComplexMatrix xp = ComplexMatrix::Identity(4, 4);
                    for (int p = 0; p < 4; ++p, xp = xp * x) {
                      ComplexMatrix zq_power = ComplexMatrix::Identity(4, 4);
                      for (int q = 0; q < 4; ++q, zq_power = zq_power * out.z_prime) out.group.push_back(xp * zq_power);
                    }
                    std::set<ProjectiveKey> distinct;
                    for (const auto& g : out.group) distinct.insert(projective_key(g));
                    out.group_order_16 = distinct.size() == 16;
                    out.covariant = induced_permutation(GroupElement(out.x_prime), sic).has_value() &&
                                    induced_permutation(GroupElement(out.z_prime), sic).has_value();
                    return out;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  throw std::runtime_error("reconstruct_hw: no qualifying quadruple; the SIC is not covariant under a HW group");
}

bool uniqueness_check(const SicPovm& sic) {
  const auto perms = triple_preserving_permutations(sic, false);
  int two_power = 0;
  for (const auto& p : perms) {
    const int order = permutation_order(p);
    if ((order & (order - 1)) == 0) ++two_power;
  }
  const auto size = perms.size();
  return size % 16 == 0 && (size / 16) % 2 == 1 && two_power == 16;
}

}  // namespace sic4
