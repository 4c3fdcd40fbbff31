#pragma once

// Closed-form spectra for the cyclic-window and Hamming-ball families, the
// mean-absolute-eigenvalue statistic, scaling bounds, and the per-family
// conjecture report rows consumed by the CSV sweep.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qclearn/amplify.hpp"
#include "qclearn/concepts.hpp"
#include "qclearn/errors.hpp"
#include "qclearn/group_algebra.hpp"
#include "qclearn/measurement.hpp"
#include "qclearn/numkit.hpp"

namespace qclearn::analysis {

inline constexpr int kMajorityFullCap = 64;    // full spectrum, exact integers
inline constexpr int kMajorityMiddleCap = 128; // middle eigenvalue only

// ---------------------------------------------------------------------------
// Symbol helpers (no truth-table materialization)

// phi(k) = 1 on the symmetric window {-r..r} of length d = 2r+1
inline std::vector<std::uint8_t> battleship_phi(std::size_t n, long long d) {
  if (d < 1 || d % 2 == 0 || static_cast<std::size_t>(d) >= n)
    throw BadParams("battleship_phi: need odd d in [1, N)");
  const auto r = static_cast<std::size_t>((d - 1) / 2);
  std::vector<std::uint8_t> phi(n, 0);
  for (std::size_t k = 0; k <= r; ++k) {
    phi[k] = 1;
    phi[(n - k) % n] = 1;
  }
  return phi;
}

// contiguous window of length d anchored at 0 (any 1 <= d < N; the eigenvalue
// magnitudes do not depend on the anchor)
inline std::vector<std::uint8_t> window_phi(std::size_t n, std::size_t d) {
  if (d < 1 || d >= n) throw BadParams("window_phi: need 1 <= d < N");
  std::vector<std::uint8_t> phi(n, 0);
  for (std::size_t k = 0; k < d; ++k) phi[k] = 1;
  return phi;
}

// phi(b) = 1 when wt(b) <= n/2
inline std::vector<std::uint8_t> majority_phi(int n) {
  if (n < 2 || n % 2 != 0) throw OddN("majority_phi: n = " + std::to_string(n));
  if (n > 14) throw DimensionCap("majority_phi: n = " + std::to_string(n));
  const std::size_t domain = std::size_t{1} << n;
  std::vector<std::uint8_t> phi(domain);
  for (std::size_t b = 0; b < domain; ++b)
    phi[b] = std::popcount(b) <= n / 2 ? 1 : 0;
  return phi;
}

// ---------------------------------------------------------------------------
// Spectra

// Eigenvalues of the cyclic query matrix with symbol function phi, one DFT of
// (-1)^{phi(k)} / sqrt(N).
inline numkit::Spectrum cyclic_spectrum(const std::vector<std::uint8_t>& phi) {
  const std::size_t n = phi.size();
  if (n == 0) throw BadParams("cyclic_spectrum: empty phi");
  std::vector<double> v(n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) v[k] = phi[k] ? -inv : inv;
  return group_algebra::group_eigenvalues(group_algebra::cyclic_symbol(std::move(v)));
}

// Closed form for the symmetric window: lambda_0 = (N - 2d)/sqrt(N) and
// lambda_j = -(2/sqrt(N)) sin(pi j d / N) / sin(pi j / N) for j > 0.
inline numkit::Spectrum battleship_spectrum(std::size_t n, long long d) {
  if (d < 1 || d % 2 == 0 || static_cast<std::size_t>(d) >= n)
    throw BadParams("battleship_spectrum: need odd d in [1, N)");
  numkit::Spectrum spec;
  spec.basis = numkit::Basis::DFT;
  spec.dimension = n;
  spec.multiplicities.assign(n, 1);
  spec.values.resize(n);
  const double root = std::sqrt(static_cast<double>(n));
  spec.values[0] = (static_cast<double>(n) - 2.0 * static_cast<double>(d)) / root;
  for (std::size_t j = 1; j < n; ++j) {
    const double num = std::sin(std::numbers::pi * static_cast<double>(j) *
                                static_cast<double>(d) / static_cast<double>(n));
    const double den = std::sin(std::numbers::pi * static_cast<double>(j) /
                                static_cast<double>(n));
    spec.values[j] = -(2.0 / root) * num / den;
  }
  return spec;
}

namespace detail {

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long acc = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(acc) *
                                   static_cast<unsigned long long>(n - k + i);
    acc = static_cast<unsigned long long>(wide / static_cast<unsigned>(i));
  }
  return acc;
}

}  // namespace detail

// Closed-form spectrum of the Hamming-ball family on n (even) bits: n+1
// distinct values lambda_{n,k} with multiplicity C(n,k). The integer
// lambda_{n,k} * sqrt(2^n) is carried exactly through the recurrence
// I_k = I_{k-2} (k-1) / (n-k+1); floats enter only in the final scaling.
inline numkit::Spectrum majority_spectrum(int n) {
  if (n < 2 || n % 2 != 0) throw OddN("majority_spectrum: n = " + std::to_string(n));
  if (n > kMajorityFullCap)
    throw DimensionCap("majority_spectrum: n = " + std::to_string(n));
  numkit::Spectrum spec;
  spec.basis = numkit::Basis::WHT;
  spec.dimension = std::size_t{1} << n;
  spec.values.resize(n + 1);
  spec.multiplicities.resize(n + 1);
  const double scale = std::exp2(-0.5 * n);

  long long magnitude = static_cast<long long>(detail::binomial(n, n / 2));
  double even_value = -static_cast<double>(magnitude) * scale;  // k = 0
  for (int k = 0; k <= n; ++k) {
    if (k > 0 && k % 2 == 0) {
      const __int128 num = static_cast<__int128>(magnitude) * (k - 1);
      magnitude = static_cast<long long>(num / (n - k + 1));
      const double sign = (k / 2) % 2 == 0 ? -1.0 : 1.0;
      even_value = sign * static_cast<double>(magnitude) * scale;
    }
    spec.values[k] = even_value;  // odd k repeats the k-1 value
    spec.multiplicities[k] = detail::binomial(n, k);
  }
  return spec;
}

// |lambda_{n, n/2}| from the binomial middle-eigenvalue formulas; valid past
// the full-spectrum cap since only one binomial is needed.
inline double majority_middle_abs(int n) {
  if (n < 2 || n % 2 != 0) throw OddN("majority_middle_abs: n = " + std::to_string(n));
  if (n > kMajorityMiddleCap)
    throw DimensionCap("majority_middle_abs: n = " + std::to_string(n));
  const double scale = std::exp2(-0.5 * n);
  if (n % 4 == 0)
    return static_cast<double>(detail::binomial(n / 2, n / 4)) * scale;
  return 2.0 * static_cast<double>(detail::binomial((n - 2) / 2, (n - 2) / 4)) * scale;
}

// s = (1/N) sum multiplicity * |lambda|
inline double s_average(const numkit::Spectrum& spec) {
  double acc = 0;
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    acc += static_cast<double>(spec.multiplicities[i]) * std::abs(spec.values[i]);
  return acc / static_cast<double>(spec.dimension);
}

// (2/N) sum_{j=1}^{N-1} |sin(pi j d / N)|; s sqrt(N) dominates this value.
inline double smallship_lower_bound(std::size_t n, std::size_t d) {
  double acc = 0;
  for (std::size_t j = 1; j < n; ++j)
    acc += std::abs(std::sin(std::numbers::pi * static_cast<double>(j) *
                             static_cast<double>(d) / static_cast<double>(n)));
  return 2.0 * acc / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Conjecture report rows

struct SweepRow {
  std::string family;
  std::size_t domain = 0;              // N = |C|
  std::optional<long long> param;      // d for battleship, n for bv/majority
  double s = 0;
  double theta = 0;
  long m = 0;
  long membership_queries = 0;
  long equivalence_queries = 0;
  double avg_success = 0;
  std::optional<double> gamma;
  double conj1_bound = 0;              // sqrt(N)
  std::optional<double> conj2_bound;   // log2(N) / sqrt(gamma)
};

inline SweepRow conjecture_report(const concepts::ConceptFamily& fam) {
  const std::size_t n = fam.size();
  const measurement::MeasurementPlan plan = measurement::impatient_transform(fam);
  if (!plan.constant_diagonal)
    throw NonConstantDiagonal("conjecture_report: non-constant diagonal");

  SweepRow row;
  row.family = concepts::family_name(fam.tag());
  row.domain = n;
  switch (fam.tag()) {
    case concepts::Family::Battleship: row.param = *fam.params().d; break;
    case concepts::Family::BV:
    case concepts::Family::Majority: row.param = *fam.params().n; break;
    default: break;
  }
  row.s = plan.diagonal_value;
  const amplify::IterationCount it = amplify::iteration_count(row.s);
  row.theta = it.theta;
  row.m = it.m;
  row.membership_queries = 2 * it.m + 1;
  row.equivalence_queries = it.m;
  row.avg_success = plan.avg_success;
  row.conj1_bound = std::sqrt(static_cast<double>(n));

  if (n <= concepts::kGammaCap)
    row.gamma = concepts::gamma_measure(fam).to_double();
  else if (fam.tag() == concepts::Family::Battleship)
    row.gamma =
        concepts::battleship_gamma_closed_form(n, *fam.params().d).to_double();
  if (row.gamma)
    row.conj2_bound = std::log2(static_cast<double>(n)) / std::sqrt(*row.gamma);
  return row;
}

// One row per size; `sizes` is n for bv/majority and N otherwise. Row order
// follows the input order.
inline std::vector<SweepRow> sweep(const concepts::FamilySpec& base,
                                   const std::vector<long long>& sizes) {
  std::vector<SweepRow> rows;
  rows.reserve(sizes.size());
  for (const long long size : sizes) {
    concepts::FamilySpec spec = base;
    if (base.tag == concepts::Family::BV || base.tag == concepts::Family::Majority)
      spec.n = size;
    else
      spec.domain = size;
    rows.push_back(conjecture_report(concepts::build_family(spec)));
  }
  return rows;
}

}  // namespace qclearn::analysis
