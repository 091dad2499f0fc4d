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

#include "sic4/weyl_heisenberg.hpp"

#include <cmath>
#include <stdexcept>

namespace sic4 {

int d_bar(int d) { return d % 2 == 0 ? 2 * d : d; }

int symplectic_form(int p1, int p2, int q1, int q2) { return p2 * q1 - p1 * q2; }

int mod(long long x, int m) {
  const long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

Complex omega(int d) { return std::polar(1.0, 2.0 * kPi / d); }

Complex tau(int d) { return -std::polar(1.0, kPi / d); }

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
}

Complex tau_power(long long k, int d) {
  const int e = mod(k, d_bar(d));
  // tau^e = exp(i pi e (d + 1) / d) evaluated directly to avoid accumulated error.
  return std::polar(1.0, kPi * static_cast<double>(e) * (d + 1) / d);
}

}  // namespace

ComplexMatrix shift_operator(int d) {
  require_dimension(d);
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) x((r + 1) % d, r) = 1.0;
  return x;
}

ComplexMatrix phase_operator(int d) {
  require_dimension(d);
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) z(r, r) = std::polar(1.0, 2.0 * kPi * r / d);
  return z;
}

ComplexMatrix displacement(long long p1, long long p2, int d) {
  require_dimension(d);
  // X^a Z^b |e_r> = omega^{b r} |e_{r+a}>.
  const int a = mod(p1, d);
  const int b = mod(p2, d);
  const Complex phase = tau_power(p1 * p2, d);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) m((r + a) % d, r) = phase * std::polar(1.0, 2.0 * kPi * mod(1LL * b * r, d) / d);
  return m;
}

ComplexMatrix displacement(DisplacementIndex p, int d) { return displacement(p.p1, p.p2, d); }

bool weyl_commutation_check(int d, Tolerance tol) {
  require_dimension(d);
  std::vector<ComplexMatrix> table;
  table.reserve(static_cast<std::size_t>(d * d));
  for (int k = 0; k < d * d; ++k) table.push_back(displacement(k / d, k % d, d));
  for (int p = 0; p < d * d; ++p) {
    for (int q = 0; q < d * d; ++q) {
      const int p1 = p / d, p2 = p % d, q1 = q / d, q2 = q % d;
      const ComplexMatrix lhs = table[p] * table[q];
      const ComplexMatrix rhs = tau_power(symplectic_form(p1, p2, q1, q2), d) * displacement(p1 + q1, p2 + q2, d);
      if (max_abs(lhs - rhs) > tol.abs_tol()) return false;
    }
  }
  return true;
}

double SicConstants::golden() { return (std::sqrt(5.0) - 1.0) / 2.0; }
double SicConstants::b() { return 1.0 / std::sqrt(5.0); }
double SicConstants::a_plus() { return std::sqrt(1.0 + std::sqrt(golden())) / std::sqrt(5.0); }
double SicConstants::a_minus() { return std::sqrt(1.0 - std::sqrt(golden())) / std::sqrt(5.0); }
double SicConstants::g_plus() { return std::sqrt(1.0 + golden()) / std::sqrt(5.0); }
double SicConstants::g_minus() { return std::sqrt(1.0 - golden()) / std::sqrt(5.0); }

Ket fiducial_ket_d4() {
  const double g = SicConstants::golden();
  const Complex e_minus = std::polar(1.0, -kPi / 4);
  const Complex e_plus = std::polar(1.0, kPi / 4);
  const Complex lift = kI * std::pow(g, -1.5);
  Ket v(4);
  v << 1.0 + e_minus, e_plus + lift, 1.0 - e_minus, e_plus - lift;
  return v / (2.0 * std::sqrt(3.0 + g));
}

namespace {

void require_normalized(const Ket& v, double tol) {
  if (std::abs(v.norm() - 1.0) > tol) throw std::invalid_argument("ket is not normalized");
}

}  // namespace

bool is_fiducial(const Ket& v, int d, Tolerance tol) {
  require_dimension(d);
  if (v.size() != d) throw std::invalid_argument("is_fiducial: ket dimension mismatch");
  require_normalized(v, tol.abs_tol());
  const double target = 1.0 / std::sqrt(d + 1.0);
  for (int k = 1; k < d * d; ++k) {
    const Complex overlap = v.dot(displacement(k / d, k % d, d) * v);
    if (std::abs(std::abs(overlap) - target) > tol.abs_tol()) return false;
  }
  return true;
}

SicPovm generate_sic(const Ket& v, int d, Tolerance tol, std::string label) {
  if (!is_fiducial(v, d, tol)) throw std::invalid_argument("generate_sic: input is not a fiducial ket");
  SicPovm sic;
  sic.d = d;
  sic.label = std::move(label);
  sic.states.reserve(static_cast<std::size_t>(d * d));
  for (int k = 0; k < d * d; ++k) sic.states.push_back(projector(displacement(k / d, k % d, d) * v));
  return sic;
}

SicReport verify_sic(std::span<const ComplexMatrix> states, int d, Tolerance tol) {
  require_dimension(d);
  if (states.size() != static_cast<std::size_t>(d * d)) {
    throw std::invalid_argument("verify_sic: expected d^2 = " + std::to_string(d * d) + " states, got " +
                                std::to_string(states.size()));
  }
  SicReport rep;
  const double target = 1.0 / (d + 1.0);
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < states.size(); ++j) {
    const auto& rho = states[j];
    if (rho.rows() != d || rho.cols() != d) throw std::invalid_argument("verify_sic: state dimension mismatch");
    sum += rho;
    rep.max_trace_deviation = std::max(rep.max_trace_deviation, std::abs(rho.trace() - 1.0));
    rep.max_purity_deviation = std::max(rep.max_purity_deviation, max_abs(rho * rho - rho));
    rep.max_hermiticity_deviation = std::max(rep.max_hermiticity_deviation, max_abs(rho - rho.adjoint()));
    for (std::size_t k = j + 1; k < states.size(); ++k) {
      const double f = (rho * states[k]).trace().real();
      rep.max_fidelity_deviation = std::max(rep.max_fidelity_deviation, std::abs(f - target));
    }
  }
  rep.completeness_deviation = max_abs(sum / static_cast<double>(d) - ComplexMatrix::Identity(d, d));
  const double t = tol.abs_tol();
  rep.is_sic = rep.max_fidelity_deviation <= t && rep.max_trace_deviation <= t && rep.max_purity_deviation <= t &&
               rep.max_hermiticity_deviation <= t && rep.completeness_deviation <= t;
  return rep;
}

nlohmann::json sic_to_json(const SicPovm& sic) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& rho : sic.states) states.push_back(matrix_to_json(rho));
  return {{"d", sic.d}, {"label", sic.label}, {"states", std::move(states)}};
}

SicPovm sic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("states") || !j.at("states").is_array()) {
    throw std::invalid_argument("SIC JSON must be an object with 'd' and 'states'");
  }
  SicPovm sic;
  sic.d = j.at("d").get<int>();
  sic.label = j.value("label", std::string{});
  for (const auto& s : j.at("states")) {
    auto m = matrix_from_json(s);
    if (m.rows() != sic.d) throw std::invalid_argument("SIC JSON: state dimension does not match 'd'");
    sic.states.push_back(std::move(m));
  }
  return sic;
}

}  // namespace sic4
