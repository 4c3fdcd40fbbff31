#pragma once

// Dense complex matrix/vector kernels: Hermitian eigendecomposition (cyclic
// Jacobi), unitary DFT and Walsh-Hadamard transforms, eigenvalue-wise matrix
// functions and diagonal projection. Everything is a pure function of its
// inputs; complex arithmetic is double precision throughout.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qclearn/errors.hpp"

namespace qclearn::numkit {

using cd = std::complex<double>;
using CVec = std::vector<cd>;

inline constexpr std::size_t kDenseEigCap = 512;

// ---------------------------------------------------------------------------
// Matrix

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const CVec& entries() const { return a_; }

  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const cd aik = (*this)(i, k);
        if (aik == cd{}) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) += aik * rhs(k, j);
      }
    return out;
  }

  CVec operator*(const CVec& v) const {
    CVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      cd acc{};
      for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
  }

  Matrix& operator*=(cd s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  double frobenius_norm() const {
    double acc = 0;
    for (const auto& x : a_) acc += std::norm(x);
    return std::sqrt(acc);
  }

  double hermitian_residual() const {
    double worst = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  bool is_hermitian(double tol = 1e-12) const {
    return square() && hermitian_residual() <= tol;
  }

  bool is_unitary(double tol = 1e-10) const {
    if (!square()) return false;
    return (adjoint() * *this - identity(rows_)).frobenius_norm() <= tol;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  CVec a_;
};

inline double norm2(const CVec& v) {
  double acc = 0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Transforms

enum class Direction { Forward, Inverse };

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

// Radix-2 Cooley-Tukey; `sign` is the kernel exponent sign, no scaling.
inline void fft_pow2(CVec& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd u = a[i + k];
        const cd t = w * a[i + k + len / 2];
        a[i + k] = u + t;
        a[i + k + len / 2] = u - t;
        w *= wl;
      }
    }
  }
}

// Bluestein chirp-z for arbitrary length, same contract as fft_pow2.
inline void fft_bluestein(CVec& a, int sign) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  // chirp[k] = exp(sign * i*pi*k^2/n); k^2 reduced mod 2n keeps angles small
  CVec chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(k2) /
                       static_cast<double>(n);
    chirp[k] = cd(std::cos(ang), std::sin(ang));
  }
  CVec p(m), q(m);
  for (std::size_t k = 0; k < n; ++k) p[k] = a[k] * chirp[k];
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = std::conj(chirp[k]);
    if (k) q[m - k] = std::conj(chirp[k]);
  }
  fft_pow2(p, +1);
  fft_pow2(q, +1);
  for (std::size_t k = 0; k < m; ++k) p[k] *= q[k];
  fft_pow2(p, -1);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = p[k] * inv_m * chirp[k];
}

}  // namespace detail

// Unitary DFT, forward kernel w^{+jk} with w = exp(2*pi*i/N), 1/sqrt(N) on
// both directions.
inline CVec apply_dft(CVec v, Direction dir) {
  const std::size_t n = v.size();
  if (n == 0) throw BadParams("apply_dft: empty vector");
  const int sign = dir == Direction::Forward ? +1 : -1;
  if (n > 1) {
    if (detail::is_power_of_two(n))
      detail::fft_pow2(v, sign);
    else
      detail::fft_bluestein(v, sign);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : v) x *= scale;
  return v;
}

// H^{tensor n}: in-place butterfly, 1/sqrt(2) per factor. Involutive.
inline CVec apply_wht(CVec v) {
  const std::size_t n = v.size();
  if (!detail::is_power_of_two(n))
    throw NotPowerOfTwo("apply_wht: length " + std::to_string(n));
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const cd x = v[j], y = v[j + h];
        v[j] = (x + y) * inv_sqrt2;
        v[j + h] = (x - y) * inv_sqrt2;
      }
  return v;
}

// ---------------------------------------------------------------------------
// Spectrum

enum class Basis { DFT, WHT, Dense };

// Eigenvalue list with multiplicities. For Basis::DFT/WHT the values are in
// transform-index order (index j resp. c) with multiplicity 1 each, which is
// what reconstruction needs; closed-form spectra may instead collapse equal
// values with multiplicities > 1.
struct Spectrum {
  Basis basis = Basis::Dense;
  std::size_t dimension = 0;
  CVec values;
  std::vector<std::size_t> multiplicities;
  Matrix eigenvectors;  // Basis::Dense only, columns are eigenvectors

  std::size_t total_multiplicity() const {
    std::size_t acc = 0;
    for (auto m : multiplicities) acc += m;
    return acc;
  }
  double max_abs_value() const {
    double worst = 0;
    for (const auto& v : values) worst = std::max(worst, std::abs(v));
    return worst;
  }
};

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi)

inline Spectrum hermitian_eig(const Matrix& m, std::size_t cap = kDenseEigCap) {
  if (!m.square()) throw NotSquare("hermitian_eig");
  const std::size_t n = m.rows();
  if (n > cap)
    throw DimensionCap("hermitian_eig: N = " + std::to_string(n) + " > " +
                       std::to_string(cap));
  const double scale = m.frobenius_norm();
  if (m.hermitian_residual() > 1e-12 * std::max(scale, 1.0))
    throw NotHermitian("hermitian_eig: symmetry residual too large");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double stop = 1e-14 * std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2 * off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= stop / (2.0 * n)) continue;
        const cd w = apq / mag;  // phase so the rotated block is real
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // rows p,q of a (left-multiply by J^dag)
        for (std::size_t j = 0; j < n; ++j) {
          const cd xp = a(p, j), xq = a(q, j);
          a(p, j) = c * xp - s * w * xq;
          a(q, j) = s * std::conj(w) * xp + c * xq;
        }
        // columns p,q of a (right-multiply by J)
        for (std::size_t i = 0; i < n; ++i) {
          const cd xp = a(i, p), xq = a(i, q);
          a(i, p) = c * xp - s * std::conj(w) * xq;
          a(i, q) = s * w * xp + c * xq;
        }
        // accumulate eigenvectors
        for (std::size_t i = 0; i < n; ++i) {
          const cd xp = v(i, p), xq = v(i, q);
          v(i, p) = c * xp - s * std::conj(w) * xq;
          v(i, q) = s * w * xp + c * xq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  Spectrum spec;
  spec.basis = Basis::Dense;
  spec.dimension = n;
  spec.values.resize(n);
  spec.multiplicities.assign(n, 1);
  spec.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    spec.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      spec.eigenvectors(i, k) = v(i, order[k]);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Spectral matrix functions

enum class SpectralFn { Abs, Sign, SqrtPsd };

// Relative half-width of the band around zero treated as zero by Sign.
inline constexpr double kZeroBandRel = 1e-10;

namespace detail {

inline cd apply_fn(SpectralFn fn, cd lambda, double zero_band, bool* zero_hit) {
  switch (fn) {
    case SpectralFn::Abs:
      return std::abs(lambda);
    case SpectralFn::Sign:
      if (std::abs(lambda) <= zero_band) {
        if (zero_hit) *zero_hit = true;
        return 1.0;
      }
      return lambda / std::abs(lambda);
    case SpectralFn::SqrtPsd:
      if (lambda.real() < -1e-10 || std::abs(lambda.imag()) > 1e-10)
        throw NegativeEigenvalue("sqrt_psd: eigenvalue " +
                                 std::to_string(lambda.real()));
      return std::sqrt(std::max(lambda.real(), 0.0));
  }
  return lambda;
}

}  // namespace detail

// Maps f over the eigenvalues of a spectrum, in place of the matrix.
inline Spectrum map_spectrum(const Spectrum& spec, SpectralFn fn,
                             Warnings* warnings = nullptr) {
  Spectrum out = spec;
  const double zero_band = kZeroBandRel * spec.max_abs_value();
  bool zero_hit = false;
  for (auto& lambda : out.values)
    lambda = detail::apply_fn(fn, lambda, zero_band, &zero_hit);
  if (zero_hit && warnings) warnings->push_back(Warning::ZeroBand);
  return out;
}

// Rebuilds the matrix V f(L) V^dag from a transform-indexed or dense spectrum.
inline Matrix materialize(const Spectrum& spec) {
  const std::size_t n = spec.dimension;
  if (n > kDenseEigCap)
    throw DimensionCap("materialize: N = " + std::to_string(n));
  if (spec.values.size() != n)
    throw BadParams("materialize: needs one eigenvalue per index, got " +
                    std::to_string(spec.values.size()) + " for dimension " +
                    std::to_string(n));
  Matrix out(n, n);
  switch (spec.basis) {
    case Basis::DFT: {
      // circulant: first column is the inverse DFT of the eigenvalues / sqrt(N)
      CVec col = apply_dft(spec.values, Direction::Inverse);
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (auto& x : col) x *= scale;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = col[(i + n - j) % n];
      break;
    }
    case Basis::WHT: {
      CVec col = apply_wht(spec.values);
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (auto& x : col) x *= scale;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = col[i ^ j];
      break;
    }
    case Basis::Dense: {
      const Matrix& v = spec.eigenvectors;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          cd acc{};
          for (std::size_t k = 0; k < n; ++k)
            acc += v(i, k) * spec.values[k] * std::conj(v(j, k));
          out(i, j) = acc;
        }
      break;
    }
  }
  return out;
}

inline Matrix spectral_map(const Spectrum& spec, SpectralFn fn,
                           Warnings* warnings = nullptr) {
  return materialize(map_spectrum(spec, fn, warnings));
}

inline Matrix spectral_map(const Matrix& m, SpectralFn fn,
                           Warnings* warnings = nullptr) {
  return spectral_map(hermitian_eig(m), fn, warnings);
}

// ---------------------------------------------------------------------------
// Diagonal projection

inline Matrix diag_project(const Matrix& b) {
  if (!b.square()) throw NotSquare("diag_project");
  Matrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) out(i, i) = b(i, i);
  return out;
}

inline double diag_norm_sq(const Matrix& b) {
  if (!b.square()) throw NotSquare("diag_norm_sq");
  double acc = 0;
  for (std::size_t i = 0; i < b.rows(); ++i) acc += std::norm(b(i, i));
  return acc;
}

}  // namespace qclearn::numkit
