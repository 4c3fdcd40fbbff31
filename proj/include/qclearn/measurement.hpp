#pragma once

// Optimal single-query measurement construction. Two computation paths:
// group-symmetric families go through the fast transforms (B = |A|,
// S = sign(A) applied eigenvalue-wise), everything else through the Gram
// matrix square root (B = sqrt(G), S = B A^{-1}). Unitary query matrices
// short-circuit to B = I, S = A^dag.

#include <cmath>
#include <optional>
#include <vector>

#include "qclearn/concepts.hpp"
#include "qclearn/errors.hpp"
#include "qclearn/group_algebra.hpp"
#include "qclearn/numkit.hpp"

namespace qclearn::measurement {

// Matrices S and B are materialized only up to this dimension; above it the
// group path keeps the spectrum and symbol for matrix-free application.
inline constexpr std::size_t kPlanMaterializeCap = 512;

enum class Path { GroupSign, GramSqrt };

struct MeasurementPlan {
  Path path = Path::GramSqrt;
  std::size_t dimension = 0;
  bool constant_diagonal = false;
  double diagonal_value = 0;  // s, meaningful when constant_diagonal
  std::vector<double> per_concept_success;
  double avg_success = 0;
  Warnings warnings;

  // Group path payload: eigenvalues of A in transform order plus the symbol
  // of A, enough to apply S and B matrix-free at any dimension.
  std::optional<group_algebra::GroupSymbol> symbol;
  std::optional<numkit::Spectrum> spectrum;

  // Dense payloads when the dimension permits.
  std::optional<numkit::Matrix> transform;       // S
  std::optional<numkit::Matrix> critical;        // B = S A
  std::optional<numkit::Matrix> query;           // A

  bool has_warning(Warning w) const {
    for (auto x : warnings)
      if (x == w) return true;
    return false;
  }
};

// Gram matrix G = A^dag A, computed exactly from row Hamming distances:
// G_{cc'} = 1 - 2 h(c, c') / N.
inline numkit::Matrix gram(const concepts::ConceptFamily& fam) {
  const std::size_t n = fam.size();
  numkit::Matrix g(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    g(c, c) = 1.0;
    for (std::size_t c2 = c + 1; c2 < n; ++c2) {
      const double v = 1.0 - 2.0 * static_cast<double>(fam.row_hamming(c, c2)) /
                                 static_cast<double>(n);
      g(c, c2) = v;
      g(c2, c) = v;
    }
  }
  return g;
}

namespace detail {

inline bool table_symmetric(const concepts::ConceptFamily& fam) {
  const std::size_t n = fam.size();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = c + 1; x < n; ++x)
      if (fam.value(c, x) != fam.value(x, c)) return false;
  return true;
}

inline double gram_identity_residual(const numkit::Matrix& g) {
  return (g - numkit::Matrix::identity(g.rows())).frobenius_norm();
}

}  // namespace detail

inline MeasurementPlan impatient_transform(const concepts::ConceptFamily& fam) {
  const std::size_t n = fam.size();
  MeasurementPlan plan;
  plan.dimension = n;

  const auto sym = group_algebra::detect_symmetry(fam);
  if (sym.preferred() != group_algebra::SymmetryReport::Kind::None &&
      detail::table_symmetric(fam)) {
    // Real symmetric A in a group algebra: diagonalize by the fast transform,
    // take |lambda| for B and sign(lambda) for S. B has constant diagonal
    // equal to the mean absolute eigenvalue.
    const auto kind =
        sym.preferred() == group_algebra::SymmetryReport::Kind::Hypercube
            ? group_algebra::GroupKind::Hypercube
            : group_algebra::GroupKind::Cyclic;
    plan.path = Path::GroupSign;
    plan.symbol = group_algebra::family_symbol(fam, kind);
    numkit::Spectrum spec = group_algebra::group_eigenvalues(*plan.symbol);
    // symmetric real A has a real spectrum; drop the roundoff imaginary part
    for (auto& lambda : spec.values) lambda = lambda.real();
    plan.spectrum = spec;

    double s = 0;
    const double zero_band = numkit::kZeroBandRel * spec.max_abs_value();
    bool zero_hit = false;
    for (const auto& lambda : spec.values) {
      s += std::abs(lambda);
      if (std::abs(lambda) <= zero_band) zero_hit = true;
    }
    s /= static_cast<double>(n);
    if (zero_hit) plan.warnings.push_back(Warning::ZeroBand);

    plan.constant_diagonal = true;
    plan.diagonal_value = s;
    plan.per_concept_success.assign(n, s * s);
    plan.avg_success = s * s;
    if (n <= kPlanMaterializeCap) {
      plan.critical = numkit::spectral_map(spec, numkit::SpectralFn::Abs);
      plan.transform = numkit::spectral_map(spec, numkit::SpectralFn::Sign);
    }
    return plan;
  }
  if (sym.preferred() != group_algebra::SymmetryReport::Kind::None)
    plan.warnings.push_back(Warning::AsymmetricQueryMatrix);

  plan.path = Path::GramSqrt;
  numkit::Matrix g = gram(fam);

  if (detail::gram_identity_residual(g) <= 1e-9) {
    // Unitary query matrix: B = sqrt(I) = I and S = A^{-1} = A^dag.
    plan.query = concepts::query_matrix(fam);
    plan.transform = plan.query->adjoint();
    plan.critical = numkit::Matrix::identity(n);
    plan.constant_diagonal = true;
    plan.diagonal_value = 1.0;
    plan.per_concept_success.assign(n, 1.0);
    plan.avg_success = 1.0;
    return plan;
  }

  if (n > numkit::kDenseEigCap)
    throw DimensionCap("impatient_transform: dense path needs N <= " +
                       std::to_string(numkit::kDenseEigCap));

  const numkit::Spectrum gspec = numkit::hermitian_eig(g);
  double max_eig = 0, min_eig = 0;
  for (const auto& lambda : gspec.values) {
    max_eig = std::max(max_eig, lambda.real());
    min_eig = std::min(min_eig, lambda.real());
  }
  // eigenvalues of G are squared singular values of A
  const double band = numkit::kZeroBandRel * std::sqrt(std::max(max_eig, 0.0));
  for (const auto& lambda : gspec.values)
    if (std::sqrt(std::max(lambda.real(), 0.0)) <= band)
      throw SingularQueryMatrix(
          "impatient_transform: query matrix has an eigenvalue in the zero "
          "band; S = B A^{-1} is undefined");

  numkit::Spectrum root = gspec, inv_root = gspec;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::max(gspec.values[k].real(), 0.0);
    root.values[k] = std::sqrt(lambda);
    inv_root.values[k] = 1.0 / std::sqrt(lambda);
  }
  plan.query = concepts::query_matrix(fam);
  plan.critical = numkit::materialize(root);                       // sqrt(G)
  plan.transform = numkit::materialize(inv_root) * plan.query->adjoint();

  const numkit::Matrix& b = *plan.critical;
  plan.per_concept_success.resize(n);
  double avg = 0;
  double diag_min = 1e300, diag_max = -1e300;
  for (std::size_t c = 0; c < n; ++c) {
    const double bc = b(c, c).real();
    plan.per_concept_success[c] = bc * bc;
    avg += bc * bc;
    diag_min = std::min(diag_min, bc);
    diag_max = std::max(diag_max, bc);
  }
  plan.avg_success = avg / static_cast<double>(n);
  plan.constant_diagonal = (diag_max - diag_min) <= 1e-9;
  if (plan.constant_diagonal)
    plan.diagonal_value = b(0, 0).real();
  else
    plan.warnings.push_back(Warning::NonConstantDiagonal);
  return plan;
}

// ||B d(B)^dag - d(B) B^dag||_F, zero exactly at critical points.
inline double criticality_residual(const numkit::Matrix& b) {
  if (!b.square()) throw NotSquare("criticality_residual");
  const std::size_t n = b.rows();
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const numkit::cd lhs = b(i, j) * std::conj(b(j, j));
      const numkit::cd rhs = b(i, i) * std::conj(b(j, i));
      acc += std::norm(lhs - rhs);
    }
  return std::sqrt(acc);
}

struct SuccessProfile {
  std::vector<double> per_concept;
  double average = 0;
};

// Per-concept success |B_{cc}|^2 and the average ||d(B)||^2 / N.
inline SuccessProfile success_profile(const MeasurementPlan& plan) {
  SuccessProfile out;
  if (plan.critical) {
    const numkit::Matrix& b = *plan.critical;
    out.per_concept.resize(plan.dimension);
    double acc = 0;
    for (std::size_t c = 0; c < plan.dimension; ++c) {
      out.per_concept[c] = std::norm(b(c, c));
      acc += out.per_concept[c];
    }
    out.average = acc / static_cast<double>(plan.dimension);
    return out;
  }
  out.per_concept = plan.per_concept_success;
  out.average = plan.avg_success;
  return out;
}

}  // namespace qclearn::measurement
