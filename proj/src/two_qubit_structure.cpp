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

#include "sic4/two_qubit_structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sic4/sic_orbits.hpp"

namespace sic4 {

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double amp(int sign) { return SicConstants::a(sign); }
double gamp(int sign) { return SicConstants::g(sign); }
double delta(int x, int y) { return x == y ? 1.0 : 0.0; }
// a^((1 - b) / 2) with the exponent read as an integer in {0, 1}.
int signed_pow(int base, int exponent) { return exponent == 0 ? 1 : base; }

std::vector<HistogramBin> histogram(std::vector<double> values, double gap) {
  std::sort(values.begin(), values.end());
  std::vector<HistogramBin> out;
  for (double v : values) {
    if (!out.empty() && std::abs(v - out.back().value) <= gap) {
      ++out.back().count;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

Eigen::Vector3d bloch(const ComplexMatrix& rho2) {
  return {(rho2 * pauli(1)).trace().real(), (rho2 * pauli(2)).trace().real(), (rho2 * pauli(3)).trace().real()};
}

QubitCensus qubit_census(const std::vector<Eigen::Vector3d>& vectors) {
  QubitCensus q;
  for (const auto& v : vectors) {
    auto it = std::find_if(q.points.begin(), q.points.end(), [&](const Eigen::Vector3d& p) { return (p - v).norm() < 1e-7; });
    if (it == q.points.end()) {
      q.points.push_back(v);
      q.multiplicities.push_back(1);
    } else {
      ++q.multiplicities[static_cast<std::size_t>(it - q.points.begin())];
    }
  }
  std::vector<double> all;
  for (std::size_t i = 0; i < q.points.size(); ++i) {
    for (std::size_t j = i + 1; j < q.points.size(); ++j) all.push_back((q.points[i] - q.points[j]).norm());
  }
  const auto bins = histogram(all, 1e-7);
  for (const auto& b : bins) q.distances.push_back(b.value);
  if (q.points.size() == 8 && bins.size() == 3) {
    const double e = bins[0].value;
    q.cube = bins[0].count == 12 && bins[1].count == 12 && bins[2].count == 4 &&
             std::abs(bins[1].value - std::sqrt(2.0) * e) < 1e-7 && std::abs(bins[2].value - std::sqrt(3.0) * e) < 1e-7;
  }
  return q;
}

}  // namespace

std::string to_string(Basis b) { return b == Basis::product ? "product" : "bell"; }

Basis basis_from_string(const std::string& s) {
  if (s == "product") return Basis::product;
  if (s == "bell") return Basis::bell;
  throw std::invalid_argument("unknown basis: " + s);
}

ComplexMatrix pauli(int j) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (j) {
    case 0:
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index out of range");
  }
  return m;
}

bool Gbv::approx_equal(const Gbv& o, double tol) const {
  return (r - o.r).cwiseAbs().maxCoeff() <= tol && (s - o.s).cwiseAbs().maxCoeff() <= tol &&
         (c - o.c).cwiseAbs().maxCoeff() <= tol;
}

Gbv gbv(const ComplexMatrix& rho, Tolerance tol) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("gbv: expected a 4x4 matrix");
  if (!is_hermitian(rho, tol.abs_tol())) throw std::invalid_argument("gbv: matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > tol.abs_tol()) throw std::invalid_argument("gbv: trace is not 1");
  const ComplexMatrix id = pauli(0);
  Gbv g;
  for (int j = 0; j < 3; ++j) {
    g.r(j) = (rho * kron(id, pauli(j + 1))).trace().real();
    g.s(j) = (rho * kron(pauli(j + 1), id)).trace().real();
    for (int k = 0; k < 3; ++k) g.c(j, k) = (rho * kron(pauli(j + 1), pauli(k + 1))).trace().real();
  }
  return g;
}

ComplexMatrix to_density(const Gbv& g) {
  const ComplexMatrix id = pauli(0);
  ComplexMatrix rho = ComplexMatrix::Identity(4, 4);
  for (int j = 0; j < 3; ++j) {
    rho += g.r(j) * kron(id, pauli(j + 1));
    rho += g.s(j) * kron(pauli(j + 1), id);
    for (int k = 0; k < 3; ++k) rho += g.c(j, k) * kron(pauli(j + 1), pauli(k + 1));
  }
  return rho / 4.0;
}

bool SignPattern::satisfies_constraint() const {
  const int prod = alpha[0] * alpha[1] * alpha[2] * beta[0] * beta[1] * beta[2];
  if (basis == Basis::product) return (class_id == 1 ? a * b * prod : b * prod) == 1;
  return (class_id == 1 ? a * b * prod : -a * b * prod) == 1;
}

std::vector<SignPattern> all_sign_patterns(Basis basis) {
  std::vector<SignPattern> out;
  out.reserve(512);
  for (int cls = 1; cls <= 2; ++cls) {
    for (int bits = 0; bits < 256; ++bits) {
      auto sign = [&](int k) { return (bits >> k) & 1 ? -1 : 1; };
      out.push_back({sign(0), sign(1), {sign(2), sign(3), sign(4)}, {sign(5), sign(6), sign(7)}, cls, basis});
    }
  }
  return out;
}

Gbv predicted_gbv(const SignPattern& p) {
  const int a = p.a;
  const int b = p.b;
  const auto [a1, a2, a3] = p.alpha;
  const auto [b1, b2, b3] = p.beta;
  const double B = SicConstants::b();
  const double r2 = std::sqrt(2.0);
  const int lo = (1 - b) / 2;
  const int hi = (1 + b) / 2;
  Gbv g;
  if (p.basis == Basis::product && p.class_id == 1) {
    g.r << b1 * amp(b), b2 * amp(-b), b3 * B;
    g.s << a1 * B, a2 * amp(a), a3 * amp(-a);
    g.c << a1 * b1 * amp(-b), a1 * b2 * amp(b), a1 * b3 * B,                                                       //
        r2 * a * a2 * b1 * amp(a) * delta(a, b), r2 * a * a2 * b2 * amp(a) * delta(a, -b), a2 * b3 * amp(-a),        //
        -r2 * a * a3 * b1 * amp(-a) * delta(-a, b), -r2 * a * a3 * b2 * amp(-a) * delta(a, b), a3 * b3 * amp(a);
  } else if (p.basis == Basis::product) {
    g.r << b1 * amp(a), b2 * amp(a), b3 * B;
    g.s << a1 * B, a2 * amp(a), a3 * amp(a);
    g.c << a1 * b1 * amp(-a), a1 * b2 * amp(-a), a1 * b3 * B,                                                      //
        signed_pow(a, lo) * a2 * b1 * gamp(-b), signed_pow(a, hi) * a2 * b2 * gamp(b), a2 * b3 * amp(-a),         //
        signed_pow(a, hi) * a3 * b1 * gamp(b), signed_pow(a, lo) * a3 * b2 * gamp(-b), a3 * b3 * amp(-a);
  } else if (p.class_id == 1) {
    g.r << b1 * B, r2 * b2 * amp(a) * delta(a, b), r2 * b3 * amp(-a) * delta(-a, b);
    g.s << a1 * B, a2 * amp(b), a3 * amp(b);
    g.c << a1 * b1 * B, r2 * a1 * b2 * amp(-a) * delta(a, b), r2 * a1 * b3 * amp(a) * delta(-a, b),  //
        a2 * b1 * amp(-b), b * a2 * b2 * amp(a), b * a2 * b3 * amp(-a),                              //
        a3 * b1 * amp(-b), a * a3 * b2 * amp(a), -a * a3 * b3 * amp(-a);
  } else {
    g.r << b1 * B, b2 * gamp(-b), b3 * gamp(b);
    g.s << a1 * B, a2 * amp(-a), a3 * amp(a);
    g.c << a1 * b1 * B, -b * a1 * b2 * gamp(-b), b * a1 * b3 * gamp(b),                                       //
        a2 * b1 * amp(a), signed_pow(-a, lo) * a2 * b2 * amp(-a), signed_pow(-a, hi) * a2 * b3 * amp(-a),  //
        a3 * b1 * amp(-a), signed_pow(a, lo) * a3 * b2 * amp(a), signed_pow(a, hi) * a3 * b3 * amp(a);
  }
  return g;
}

std::optional<SignPattern> match_sign_pattern(const Gbv& g, Basis basis, double tol) {
  std::optional<SignPattern> found;
  for (const auto& p : all_sign_patterns(basis)) {
    if (!p.satisfies_constraint() || !predicted_gbv(p).approx_equal(g, tol)) continue;
    if (found) throw std::logic_error("match_sign_pattern: more than one table pattern matches");
    found = p;
  }
  return found;
}

SignFunctions sign_functions(const SignPattern& p) {
  const int a = p.a;
  const int b = p.b;
  const auto [a1, a2, a3] = p.alpha;
  const auto [b1, b2, b3] = p.beta;
  if (p.basis == Basis::product) {
    if (p.class_id == 1) return {b * a2 * a3 * b3, a1 * a2 * a3, a * b * a1};
    return {a * b * a1 * b3, -a1 * a2 * a3, b * a1};
  }
  if (p.class_id == 1) return {-b * a1 * b1 * b2 * b3, -b1 * b2 * b3, a * b * b1};
  return {a * b * a1, -a * b1 * b2 * b3, b * b1};
}

SignFunctions expected_sign_functions(int sic_label) {
  if (sic_label < 1 || sic_label > kSicCount) throw std::invalid_argument("expected_sign_functions: label out of range");
  static constexpr std::array<int, 4> kRowH1{-1, 1, 1, -1};
  static constexpr std::array<std::array<int, 2>, 4> kColumnH23{{{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}};
  const auto row = static_cast<std::size_t>((sic_label - 1) / 4);
  const auto col = static_cast<std::size_t>((sic_label - 1) % 4);
  return {kRowH1[row], kColumnH23[col][0], kColumnH23[col][1]};
}

ComplexMatrix bell_basis_map() {
  ComplexMatrix m(4, 4);
  m << 1, 1, 0, 0,  //
      0, 0, 1, 1,   //
      0, 0, 1, -1,  //
      1, -1, 0, 0;
  return m / std::sqrt(2.0);
}

Ket in_product_coordinates(const Ket& v, Basis basis) {
  if (basis == Basis::product) return v;
  return bell_basis_map() * v;
}

double concurrence(const Ket& psi, Tolerance tol) {
  if (psi.size() != 4) throw std::invalid_argument("concurrence: expected a two-qubit ket");
  if (std::abs(psi.norm() - 1.0) > tol.abs_tol()) throw std::invalid_argument("concurrence: ket is not normalized");
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  return std::abs((psi.adjoint() * yy * psi.conjugate())(0, 0));
}

std::vector<HistogramBin> concurrence_census(int sic_label, Basis basis) {
  const auto& orbit = fiducial_orbit();
  std::vector<double> values;
  for (int k = 0; k < kStatesPerSic; ++k) {
    const auto idx = static_cast<std::size_t>(FiducialOrbit::index_of(sic_label, from_linear_index(k, 4)));
    values.push_back(concurrence(in_product_coordinates(orbit.kets[idx], basis)));
  }
  return histogram(std::move(values), 1e-9);
}

ComplexMatrix reduced_first(const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
  return out;
}

ComplexMatrix reduced_second(const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * k + i, 2 * k + j);
  return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& rho) {
  ComplexMatrix out(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) out(2 * i1 + i2, 2 * j1 + j2) = rho(2 * i1 + j2, 2 * j1 + i2);
  return out;
}

double avg_reduced_purity(std::span<const ComplexMatrix> states) {
  if (states.empty()) throw std::invalid_argument("avg_reduced_purity: no states");
  double sum = 0.0;
  for (const auto& rho : states) {
    const ComplexMatrix r = reduced_first(rho);
    sum += (r * r).trace().real();
  }
  return sum / static_cast<double>(states.size());
}

double expected_avg_purity(int d1, int d2) { return static_cast<double>(d1 + d2) / (d1 * d2 + 1); }

ReducedStateCensus reduced_state_census(int sic_label, Basis basis) {
  const auto& orbit = fiducial_orbit();
  std::vector<Eigen::Vector3d> first, second;
  for (int k = 0; k < kStatesPerSic; ++k) {
    const auto idx = static_cast<std::size_t>(FiducialOrbit::index_of(sic_label, from_linear_index(k, 4)));
    const ComplexMatrix rho = projector(in_product_coordinates(orbit.kets[idx], basis));
    first.push_back(bloch(reduced_first(rho)));
    second.push_back(bloch(reduced_second(rho)));
  }
  return {qubit_census(first), qubit_census(second)};
}

PartialTransposeCheck partial_transpose_simplex_check(const SignPattern& p) {
  if (p.basis != Basis::product || p.class_id != 1 || p.satisfies_constraint()) {
    throw std::invalid_argument("partial_transpose_simplex_check: expected a constraint-violating product class-1 pattern");
  }
  const ComplexMatrix q = to_density(predicted_gbv(p));
  PartialTransposeCheck out;
  out.hermitian = is_hermitian(q, 1e-12);
  out.unit_trace = std::abs(q.trace() - Complex(1.0)) <= 1e-12;
  out.min_eigenvalue = eig_hermitian(q).values.front();
  for (int k = 1; k < 16; ++k) {
    const ComplexMatrix dp = displacement(from_linear_index(k, 4), 4);
    const double t = (q * dp * q * dp.adjoint()).trace().real();
    out.max_simplex_deviation = std::max(out.max_simplex_deviation, std::abs(t - 0.2));
  }
  out.partial_transpose_in_orbit = fiducial_orbit().find(partial_transpose_second(q));
  return out;
}

int operator_schmidt_rank(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw std::invalid_argument("operator_schmidt_rank: expected a 4x4 operator");
  ComplexMatrix realigned(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) realigned(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
  Eigen::JacobiSVD<ComplexMatrix> svd(realigned);
  return static_cast<int>((svd.singularValues().array() > 1e-9).count());
}

}  // namespace sic4
