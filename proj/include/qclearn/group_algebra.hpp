#pragma once

// Group-algebra elements for Z_N and Z_2^n: regular representation (circulant
// resp. XOR-indexed matrices), transform diagonalization, and truth-table
// symmetry detection.

#include <cstdint>
#include <vector>

#include "qclearn/concepts.hpp"
#include "qclearn/errors.hpp"
#include "qclearn/numkit.hpp"

namespace qclearn::group_algebra {

inline constexpr std::size_t kGroupOrderCap = 4096;
inline constexpr std::size_t kRepMaterializeCap = 512;

enum class GroupKind { Cyclic, Hypercube };

// Coefficient vector of a group-algebra element; the regular representation
// has this vector as its first column and coefficients[0] on the diagonal.
struct GroupSymbol {
  GroupKind group;
  std::vector<double> coefficients;

  std::size_t order() const { return coefficients.size(); }
};

inline GroupSymbol cyclic_symbol(std::vector<double> v) {
  if (v.empty()) throw BadParams("cyclic_symbol: empty coefficients");
  return GroupSymbol{GroupKind::Cyclic, std::move(v)};
}

inline GroupSymbol hypercube_symbol(std::vector<double> v) {
  if (!numkit::detail::is_power_of_two(v.size()))
    throw NotPowerOfTwo("hypercube_symbol: length " + std::to_string(v.size()));
  return GroupSymbol{GroupKind::Hypercube, std::move(v)};
}

// ---------------------------------------------------------------------------
// Regular representation

inline numkit::Matrix regular_rep(const GroupSymbol& sym) {
  const std::size_t n = sym.order();
  if (n > kRepMaterializeCap)
    throw DimensionCap("regular_rep: order " + std::to_string(n) + " > " +
                       std::to_string(kRepMaterializeCap) +
                       " (use matrix-free apply)");
  numkit::Matrix m(n, n);
  if (sym.group == GroupKind::Cyclic) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = sym.coefficients[(i + n - j) % n];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = sym.coefficients[i ^ j];
  }
  return m;
}

// Eigenvalues in transform-index order: lambda_j = sum_k v_k w^{jk} for Z_N,
// lambda_c = sum_b v_b (-1)^{b.c} for Z_2^n. One transform of the coefficient
// vector, scaled by sqrt(N) to undo the unitary normalization.
inline numkit::Spectrum group_eigenvalues(const GroupSymbol& sym) {
  const std::size_t n = sym.order();
  numkit::CVec v(sym.coefficients.begin(), sym.coefficients.end());
  numkit::Spectrum spec;
  spec.dimension = n;
  spec.multiplicities.assign(n, 1);
  const double scale = std::sqrt(static_cast<double>(n));
  if (sym.group == GroupKind::Cyclic) {
    spec.basis = numkit::Basis::DFT;
    spec.values = numkit::apply_dft(std::move(v), numkit::Direction::Forward);
  } else {
    spec.basis = numkit::Basis::WHT;
    spec.values = numkit::apply_wht(std::move(v));
  }
  for (auto& x : spec.values) x *= scale;
  return spec;
}

// Matrix-free application of the regular representation (group convolution).
inline numkit::CVec apply(const GroupSymbol& sym, const numkit::CVec& x) {
  const std::size_t n = sym.order();
  if (x.size() != n) throw BadParams("apply: length mismatch");
  if (n > kGroupOrderCap)
    throw DimensionCap("apply: order " + std::to_string(n));
  const numkit::Spectrum eigs = group_eigenvalues(sym);
  if (sym.group == GroupKind::Cyclic) {
    numkit::CVec y = numkit::apply_dft(x, numkit::Direction::Forward);
    for (std::size_t j = 0; j < n; ++j) y[j] *= eigs.values[j];
    return numkit::apply_dft(std::move(y), numkit::Direction::Inverse);
  }
  numkit::CVec y = numkit::apply_wht(x);
  for (std::size_t j = 0; j < n; ++j) y[j] *= eigs.values[j];
  return numkit::apply_wht(std::move(y));
}

// ---------------------------------------------------------------------------
// Symmetry detection (exact bit comparison)

struct SymmetryReport {
  enum class Kind { None, Cyclic, Hypercube };

  bool cyclic = false;
  bool hypercube = false;
  std::vector<std::uint8_t> phi;  // phi(k) = T[k][0] when any symmetry holds

  // When both symmetries hold the hypercube transform is preferred.
  Kind preferred() const {
    if (hypercube) return Kind::Hypercube;
    if (cyclic) return Kind::Cyclic;
    return Kind::None;
  }
};

inline SymmetryReport detect_symmetry(const concepts::ConceptFamily& fam) {
  const std::size_t n = fam.size();
  SymmetryReport rep;
  std::vector<std::uint8_t> phi(n);
  for (std::size_t k = 0; k < n; ++k) phi[k] = fam.value(k, 0) ? 1 : 0;

  rep.cyclic = true;
  for (std::size_t c = 0; c < n && rep.cyclic; ++c)
    for (std::size_t x = 0; x < n; ++x)
      if (fam.value(c, x) != (phi[(c + n - x) % n] != 0)) {
        rep.cyclic = false;
        break;
      }

  rep.hypercube = numkit::detail::is_power_of_two(n);
  for (std::size_t c = 0; c < n && rep.hypercube; ++c)
    for (std::size_t x = 0; x < n; ++x)
      if (fam.value(c, x) != (phi[c ^ x] != 0)) {
        rep.hypercube = false;
        break;
      }

  if (rep.cyclic || rep.hypercube) rep.phi = std::move(phi);
  return rep;
}

// Symbol whose regular representation is the membership query matrix: the
// first column of A, i.e. v[x] = (-1)^{T[0][x]} / sqrt(N).
inline GroupSymbol family_symbol(const concepts::ConceptFamily& fam,
                                 GroupKind kind) {
  const std::size_t n = fam.size();
  std::vector<double> v(n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x) v[x] = fam.value(0, x) ? -inv : inv;
  return kind == GroupKind::Cyclic ? cyclic_symbol(std::move(v))
                                   : hypercube_symbol(std::move(v));
}

}  // namespace qclearn::group_algebra
