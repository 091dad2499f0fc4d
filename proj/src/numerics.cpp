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

#include "sic4/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace sic4 {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kPhaseAnchor = 1e-6;
constexpr double kKeyGrid = 1e7;

ComplexMatrix conj_if(const ComplexMatrix& m, bool flag) {
  return flag ? ComplexMatrix(m.conjugate()) : m;
}

void require_same_dim(long a, long b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

std::int64_t grid(double x) { return static_cast<std::int64_t>(std::llround(x * kKeyGrid)); }

}  // namespace

Tolerance::Tolerance(double abs_tol) : abs_tol_(abs_tol) {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::invalid_argument("tolerance must be a positive finite number");
  }
}

GroupElement::GroupElement(ComplexMatrix matrix, bool antiunitary)
    : matrix_(std::move(matrix)), antiunitary_(antiunitary) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("GroupElement: matrix must be square and non-empty");
  }
  if (!all_finite(matrix_)) throw std::invalid_argument("GroupElement: non-finite entry");
  if (!is_unitary(matrix_, kUnitaryTol)) throw std::invalid_argument("GroupElement: matrix is not unitary");
}

GroupElement GroupElement::identity(int dim) { return GroupElement(ComplexMatrix::Identity(dim, dim), false); }

GroupElement GroupElement::conjugation(int dim) { return GroupElement(ComplexMatrix::Identity(dim, dim), true); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  return GroupElement(a.matrix() * conj_if(b.matrix(), a.antiunitary()), a.antiunitary() != b.antiunitary());
}

GroupElement inverse(const GroupElement& g) {
  if (g.antiunitary()) return GroupElement(g.matrix().transpose(), true);
  return GroupElement(g.matrix().adjoint(), false);
}

int projective_order(const GroupElement& g, int max_order) {
  const auto id = GroupElement::identity(g.dim());
  GroupElement power = g;
  for (int n = 1; n <= max_order; ++n) {
    if (proj_equal(power, id)) return n;
    power = compose(power, g);
  }
  return 0;
}

Ket apply(const GroupElement& g, const Ket& v) {
  require_same_dim(g.dim(), v.size(), "apply");
  if (g.antiunitary()) return g.matrix() * v.conjugate();
  return g.matrix() * v;
}

ComplexMatrix conjugate_by(const GroupElement& g, const ComplexMatrix& op) {
  require_same_dim(g.dim(), op.rows(), "conjugate_by");
  return g.matrix() * conj_if(op, g.antiunitary()) * g.matrix().adjoint();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
  }
  return true;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMatrix projector(const Ket& v) { return v * v.adjoint(); }

namespace {

bool looks_like_pure_state(const ComplexMatrix& m, double tol) {
  return is_hermitian(m, tol) && std::abs(m.trace() - 1.0) <= tol && max_abs(m * m - m) <= tol;
}

}  // namespace

bool proj_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  require_same_dim(a.rows(), b.rows(), "proj_equal");
  require_same_dim(a.cols(), b.cols(), "proj_equal");
  const double t = tol.abs_tol();
  if (looks_like_pure_state(a, t) && looks_like_pure_state(b, t)) {
    return std::abs((a * b).trace()) >= 1.0 - t;
  }
  return std::abs((a.adjoint() * b).trace()) >= static_cast<double>(a.rows()) - t;
}

bool proj_equal(const GroupElement& a, const GroupElement& b, Tolerance tol) {
  return a.antiunitary() == b.antiunitary() && proj_equal(a.matrix(), b.matrix(), tol);
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m, Tolerance tol) {
  if (!is_hermitian(m, tol.abs_tol())) throw std::invalid_argument("eig_hermitian: input is not Hermitian");
  // Symmetrize so that the solver only sees the Hermitian part.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver did not converge");
  EigenDecomposition out;
  const auto n = h.rows();
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values.push_back(solver.eigenvalues()(k));
    Ket v = solver.eigenvectors().col(k);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::abs(v(arg)) / v(arg);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::size_t ProjectiveKeyHash::operator()(const ProjectiveKey& k) const {
  std::size_t h = k.antiunitary ? 0x9e3779b97f4a7c15ULL : 0;
  for (auto x : k.digits) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ComplexMatrix canonical_phase(const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      if (std::abs(z) > kPhaseAnchor) return m * (std::abs(z) / z);
    }
  }
  return m;
}

namespace {

ProjectiveKey rounded(const ComplexMatrix& m, bool antiunitary) {
  ProjectiveKey key;
  key.antiunitary = antiunitary;
  key.digits.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      key.digits.push_back(grid(m(r, c).real()));
      key.digits.push_back(grid(m(r, c).imag()));
    }
  }
  return key;
}

}  // namespace

ProjectiveKey projective_key(const ComplexMatrix& m, bool antiunitary) {
  return rounded(canonical_phase(m), antiunitary);
}

ProjectiveKey projective_key(const GroupElement& g) { return projective_key(g.matrix(), g.antiunitary()); }

ProjectiveKey projector_key(const ComplexMatrix& rho) { return rounded(rho, false); }

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIC4_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) return static_cast<unsigned>(cap);
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const auto threads = static_cast<std::size_t>(std::min<unsigned>(worker_threads(), 64));
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument("matrix JSON must be an object with 'dim' and 'entries'");
  }
  if (!j.at("dim").is_number_integer()) throw std::invalid_argument("matrix JSON: 'dim' must be an integer");
  const auto dim = j.at("dim").get<long>();
  const auto& entries = j.at("entries");
  if (dim <= 0 || !entries.is_array() || static_cast<long>(entries.size()) != dim * dim) {
    throw std::invalid_argument("matrix JSON: expected dim*dim entries");
  }
  ComplexMatrix m(dim, dim);
  for (long k = 0; k < dim * dim; ++k) {
    const auto& e = entries.at(static_cast<std::size_t>(k));
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument("matrix JSON: each entry must be [re, im]");
    }
    m(k / dim, k % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!all_finite(m)) throw std::invalid_argument("matrix JSON: non-finite entry");
  return m;
}

}  // namespace sic4
