#pragma once

// Deterministic random inputs for the property tests. Everything is seeded
// explicitly so failures reproduce.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qclearn/numkit.hpp"
#include "qclearn/rng.hpp"

namespace test_support {

using qclearn::numkit::cd;
using qclearn::numkit::CVec;
using qclearn::numkit::Matrix;

inline double uniform(qclearn::rng::SplitMix64& gen, double lo, double hi) {
  return lo + (hi - lo) * gen.next_double();
}

inline double gaussian(qclearn::rng::SplitMix64& gen) {
  const double u1 = std::max(gen.next_double(), 1e-300);
  const double u2 = gen.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline cd complex_gaussian(qclearn::rng::SplitMix64& gen) {
  return cd(gaussian(gen), gaussian(gen));
}

inline CVec random_vector(std::size_t n, qclearn::rng::SplitMix64& gen) {
  CVec v(n);
  for (auto& x : v) x = complex_gaussian(gen);
  return v;
}

inline Matrix random_matrix(std::size_t n, qclearn::rng::SplitMix64& gen) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = complex_gaussian(gen);
  return m;
}

inline Matrix random_hermitian(std::size_t n, qclearn::rng::SplitMix64& gen) {
  Matrix m = random_matrix(n, gen);
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

inline Matrix random_psd(std::size_t n, qclearn::rng::SplitMix64& gen) {
  Matrix m = random_matrix(n, gen);
  return m.adjoint() * m;
}

// Gram-Schmidt on Gaussian columns: Haar-ish unitary, good enough for the
// optimality property sweeps.
inline Matrix random_unitary(std::size_t n, qclearn::rng::SplitMix64& gen) {
  Matrix m = random_matrix(n, gen);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cd dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
  return m;
}

// unit-Frobenius-norm skew-Hermitian direction
inline Matrix random_skew_direction(std::size_t n, qclearn::rng::SplitMix64& gen) {
  Matrix h = random_hermitian(n, gen);
  const double norm = h.frobenius_norm();
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = cd(0, 1) * h(i, j) / norm;
  return z;
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace test_support
