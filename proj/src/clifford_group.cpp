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

#include "sic4/clifford_group.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sic4 {

namespace {

std::optional<int> unit_inverse(int a, int m) {
  a = mod(a, m);
  for (int x = 1; x < m; ++x) {
    if ((a * x) % m == 1) return x;
  }
  return std::nullopt;
}

}  // namespace

SymplecticPair::SymplecticPair(int d, std::array<int, 4> f, std::array<int, 2> chi) : d_(d), f_(f), chi_(chi) {
  if (d < 2) throw std::invalid_argument("SymplecticPair: dimension must be at least 2");
  const int m = d_bar(d);
  for (auto& x : f_) x = mod(x, m);
  for (auto& x : chi_) x = mod(x, d);
  const int det = mod(1LL * f_[0] * f_[3] - 1LL * f_[1] * f_[2], m);
  if (det != 1 && det != m - 1) {
    throw std::invalid_argument("SymplecticPair: det F must be +1 or -1 mod " + std::to_string(m) + ", got " +
                                std::to_string(det));
  }
}

int SymplecticPair::det() const {
  return mod(1LL * f_[0] * f_[3] - 1LL * f_[1] * f_[2], dbar()) == 1 ? 1 : -1;
}

std::array<int, 2> SymplecticPair::apply_f(int p1, int p2) const {
  const int m = dbar();
  return {mod(1LL * f_[0] * p1 + 1LL * f_[1] * p2, m), mod(1LL * f_[2] * p1 + 1LL * f_[3] * p2, m)};
}

std::string SymplecticPair::to_string() const {
  std::ostringstream os;
  os << "[[" << f_[0] << "," << f_[1] << "],[" << f_[2] << "," << f_[3] << "]];(" << chi_[0] << "," << chi_[1]
     << ")";
  return os.str();
}

SymplecticPair semidirect_product(const SymplecticPair& a, const SymplecticPair& b) {
  if (a.d() != b.d()) throw std::invalid_argument("semidirect_product: dimension mismatch");
  const auto& x = a.f();
  const auto& y = b.f();
  const std::array<int, 4> f{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                             x[2] * y[1] + x[3] * y[3]};
  const auto moved = a.apply_f(b.chi()[0], b.chi()[1]);
  return {a.d(), f, {a.chi()[0] + moved[0], a.chi()[1] + moved[1]}};
}

SymplecticPair inverse(const SymplecticPair& s) {
  const int det = s.det();
  const std::array<int, 4> f{det * s.delta(), -det * s.beta(), -det * s.gamma(), det * s.alpha()};
  const SymplecticPair linear(s.d(), f);
  const auto moved = linear.apply_f(s.chi()[0], s.chi()[1]);
  return {s.d(), f, {-moved[0], -moved[1]}};
}

ComplexMatrix metaplectic_unitary(const SymplecticPair& s) {
  const int d = s.d();
  const int m = s.dbar();
  if (s.det() != 1) throw std::invalid_argument("metaplectic_unitary: det F must be 1");
  const auto beta_inv = unit_inverse(s.beta(), m);
  if (!beta_inv) throw std::invalid_argument("metaplectic_unitary: beta is not invertible");
  ComplexMatrix v(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const long long e = 1LL * *beta_inv * (1LL * s.alpha() * c * c - 2LL * r * c + 1LL * s.delta() * r * r);
      v(r, c) = std::polar(1.0, kPi * mod(e, m) * (d + 1.0) / d);
    }
  }
  return v / std::sqrt(static_cast<double>(d));
}

namespace {

// V_F for det F = 1, factoring F = F1 F2 when beta is not a unit.
ComplexMatrix unitary_part(const SymplecticPair& s) {
  const int m = s.dbar();
  if (unit_inverse(s.beta(), m)) return metaplectic_unitary(s);
  for (int x = 0; x < m; ++x) {
    if (!unit_inverse(s.delta() + x * s.beta(), m)) continue;
    const SymplecticPair f1(s.d(), {0, -1, 1, x});
    const SymplecticPair f2(s.d(), {s.gamma() + x * s.alpha(), s.delta() + x * s.beta(), -s.alpha(), -s.beta()});
    return metaplectic_unitary(f1) * metaplectic_unitary(f2);
  }
  throw std::logic_error("to_operator: no x makes delta + x beta invertible");
}

// The predicted law U D_p U^{-1} = omega^{<chi, Fp>} D_{Fp}, Fp taken in Z_{d_bar}.
ConjugationImage predicted_image(const SymplecticPair& s, DisplacementIndex p) {
  const int d = s.d();
  const auto q = s.apply_f(p.p1, p.p2);
  int exponent = mod(symplectic_form(s.chi()[0], s.chi()[1], q[0], q[1]), d);
  const int r1 = q[0] % d, r2 = q[1] % d;
  const int k1 = q[0] / d, k2 = q[1] / d;
  // For even d, D_{r + d k} = (-1)^{k1 r2 + k2 r1} D_r and -1 = omega^{d/2}.
  if (d % 2 == 0) exponent = mod(exponent + (d / 2) * (k1 * r2 + k2 * r1), d);
  return {exponent, {r1, r2}};
}

bool law_holds(const GroupElement& op, const ConjugationImage& img, DisplacementIndex p, int d, double tol) {
  const ComplexMatrix lhs = conjugate_by(op, displacement(p, d));
  const Complex phase = std::polar(1.0, 2.0 * kPi * img.phase_exponent / d);
  return max_abs(lhs - phase * displacement(img.image, d)) <= tol;
}

constexpr double kLawTol = 1e-9;

}  // namespace

CliffordElement to_operator(const SymplecticPair& s) {
  const int d = s.d();
  const SymplecticPair linear = s.det() == 1 ? s : SymplecticPair(d, {s.alpha(), -s.beta(), s.gamma(), -s.delta()});
  const ComplexMatrix u = displacement(s.chi()[0], s.chi()[1], d) * unitary_part(linear);
  CliffordElement out{s, GroupElement(u, s.det() == -1)};
  for (int k = 0; k < d * d; ++k) {
    const DisplacementIndex p = from_linear_index(k, d);
    if (!law_holds(out.op, predicted_image(s, p), p, d, kLawTol)) {
      throw std::logic_error("to_operator: conjugation law fails for " + s.to_string());
    }
  }
  return out;
}

ConjugationImage conjugation_action(const CliffordElement& c, DisplacementIndex p, Tolerance tol) {
  const int d = c.source.d();
  const DisplacementIndex reduced{mod(p.p1, d), mod(p.p2, d)};
  const ConjugationImage img = predicted_image(c.source, reduced);
  if (!law_holds(c.op, img, reduced, d, tol.abs_tol())) {
    throw std::logic_error("conjugation_action: operator violates the conjugation law for " + c.source.to_string());
  }
  return img;
}

std::vector<SymplecticPair> all_symplectic_pairs(int d, bool extended) {
  const int m = d_bar(d);
  std::vector<SymplecticPair> out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int e = 0; e < m; ++e) {
          const int det = mod(a * e - b * c, m);
          if (det != 1 && !(extended && det == m - 1)) continue;
          for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d; ++y) out.emplace_back(d, std::array<int, 4>{a, b, c, e}, std::array<int, 2>{x, y});
          }
        }
      }
    }
  }
  return out;
}

std::vector<CliffordElement> enumerate_projective_clifford(int d, bool extended) {
  const auto pairs = all_symplectic_pairs(d, extended);
  std::vector<std::optional<CliffordElement>> images(pairs.size());
  std::vector<ProjectiveKey> keys(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    images[i] = to_operator(pairs[i]);
    keys[i] = projective_key(images[i]->op);
  });
  std::unordered_set<ProjectiveKey, ProjectiveKeyHash> seen;
  std::vector<CliffordElement> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (seen.insert(keys[i]).second) out.push_back(std::move(*images[i]));
  }
  return out;
}

const std::vector<CliffordElement>& projective_clifford_d4(bool extended) {
  static const std::vector<CliffordElement> unitary = enumerate_projective_clifford(4, false);
  static const std::vector<CliffordElement> full = enumerate_projective_clifford(4, true);
  return extended ? full : unitary;
}

nlohmann::json pair_to_json(const SymplecticPair& s) {
  return {{"F", {{s.alpha(), s.beta()}, {s.gamma(), s.delta()}}},
          {"chi", {s.chi()[0], s.chi()[1]}},
          {"antiunitary", s.antiunitary()}};
}

}  // namespace sic4
