#pragma once

// Amplitude amplification driven by the two oracles: the full amplified
// learning loop with exact oracle-call accounting, the Grover product
// identity check, plain marked-set search, and the hybrid search +
// binary-search algorithm for wide battleship windows. State vectors are
// dense length-N complex arrays; transforms are applied matrix-free.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qclearn/concepts.hpp"
#include "qclearn/errors.hpp"
#include "qclearn/measurement.hpp"
#include "qclearn/numkit.hpp"
#include "qclearn/rng.hpp"

namespace qclearn::amplify {

namespace detail {

// nearest integer with half-way cases rounded up
inline long round_half_up(double x) {
  return static_cast<long>(std::floor(x + 0.5));
}

inline void apply_diag(numkit::CVec& psi, const std::vector<double>& d) {
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= d[i];
}

inline void flip_phase(numkit::CVec& psi, std::size_t idx) { psi[idx] = -psi[idx]; }

// Equal-superposition preparation: H^{tensor n} on power-of-two domains,
// F^dag otherwise. Both send |0> to the same state.
inline void prepare(numkit::CVec& psi) {
  psi = numkit::detail::is_power_of_two(psi.size())
            ? numkit::apply_wht(std::move(psi))
            : numkit::apply_dft(std::move(psi), numkit::Direction::Inverse);
}

inline void prepare_adjoint(numkit::CVec& psi) {
  psi = numkit::detail::is_power_of_two(psi.size())
            ? numkit::apply_wht(std::move(psi))
            : numkit::apply_dft(std::move(psi), numkit::Direction::Forward);
}

// Applies the plan's transform S (or its adjoint) to a state vector,
// matrix-free on the group path.
class TransformApplier {
public:
  explicit TransformApplier(const measurement::MeasurementPlan& plan)
      : plan_(plan) {
    if (plan.path == measurement::Path::GroupSign) {
      const auto& spec = *plan.spectrum;
      const double band = numkit::kZeroBandRel * spec.max_abs_value();
      sign_.resize(spec.values.size());
      for (std::size_t j = 0; j < sign_.size(); ++j) {
        const double lambda = spec.values[j].real();
        sign_[j] = std::abs(lambda) <= band ? 1.0 : (lambda < 0 ? -1.0 : 1.0);
      }
    }
  }

  void apply(numkit::CVec& psi, bool adjoint) const {
    if (plan_.path == measurement::Path::GroupSign) {
      // S = T^dag diag(sign lambda) T with T the diagonalizing transform;
      // the multipliers are real so S^dag = S.
      (void)adjoint;
      if (plan_.symbol->group == group_algebra::GroupKind::Cyclic) {
        psi = numkit::apply_dft(std::move(psi), numkit::Direction::Forward);
        for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= sign_[j];
        psi = numkit::apply_dft(std::move(psi), numkit::Direction::Inverse);
      } else {
        psi = numkit::apply_wht(std::move(psi));
        for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= sign_[j];
        psi = numkit::apply_wht(std::move(psi));
      }
      return;
    }
    const numkit::Matrix& s = *plan_.transform;
    psi = adjoint ? s.adjoint() * psi : s * psi;
  }

private:
  const measurement::MeasurementPlan& plan_;
  std::vector<double> sign_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Iteration count m = round(pi/(4 theta) - 1/2), theta = arcsin(s).

struct IterationCount {
  double theta = 0;
  long m = 0;
};

inline IterationCount iteration_count(double s) {
  if (s <= 0) throw ZeroAmplitude("iteration_count: amplitude " + std::to_string(s));
  const double theta = std::asin(std::min(s, 1.0));
  const long m = detail::round_half_up(std::numbers::pi / (4 * theta) - 0.5);
  return IterationCount{theta, m};
}

// ---------------------------------------------------------------------------
// Amplified learning: |psi> = (W U_{d0} W^dag U_{dc})^m W |0>,
// W = S U_c P with P the equal-superposition preparation.

struct AmplifyReport {
  std::size_t target_index = 0;
  double s = 0;
  double theta = 0;
  long m = 0;
  double predicted_success = 0;  // sin^2((2m+1) theta)
  double simulated_success = 0;  // |<c|psi>|^2 from the state vector
  long membership_queries = 0;   // 2m + 1
  long equivalence_queries = 0;  // m
  // |<c|psi>| after the initial W and after each iteration
  std::vector<double> target_amplitudes;
  // state before the final measurement; the CLI samples from it
  numkit::CVec final_state;
};

inline AmplifyReport amplified_learn(const concepts::ConceptFamily& fam,
                                     std::size_t target) {
  const std::size_t n = fam.size();
  if (target >= n) throw IndexOutOfRange("amplified_learn: target " + std::to_string(target));
  const measurement::MeasurementPlan plan = measurement::impatient_transform(fam);
  if (!plan.constant_diagonal)
    throw NonConstantDiagonal("amplified_learn: B does not have constant diagonal");

  AmplifyReport rep;
  rep.target_index = target;
  rep.s = plan.diagonal_value;
  const IterationCount it = iteration_count(rep.s);
  rep.theta = it.theta;
  rep.m = it.m;
  rep.predicted_success = std::pow(std::sin((2 * it.m + 1) * it.theta), 2);

  const concepts::PhaseOracle member = concepts::membership_oracle(fam, target);
  const detail::TransformApplier s_op(plan);

  numkit::CVec psi(n);
  psi[0] = 1.0;
  detail::prepare(psi);
  detail::apply_diag(psi, member.diagonal);
  ++rep.membership_queries;
  s_op.apply(psi, false);
  rep.target_amplitudes.push_back(std::abs(psi[target]));

  for (long k = 0; k < it.m; ++k) {
    detail::flip_phase(psi, target);  // equivalence oracle U_{delta_c}
    ++rep.equivalence_queries;
    s_op.apply(psi, true);            // W^dag
    detail::apply_diag(psi, member.diagonal);
    ++rep.membership_queries;
    detail::prepare_adjoint(psi);
    detail::flip_phase(psi, 0);       // U_{delta_0}
    detail::prepare(psi);             // W
    detail::apply_diag(psi, member.diagonal);
    ++rep.membership_queries;
    s_op.apply(psi, false);
    rep.target_amplitudes.push_back(std::abs(psi[target]));
  }

  rep.simulated_success = std::norm(psi[target]);
  rep.final_state = std::move(psi);
  return rep;
}

// ---------------------------------------------------------------------------
// Grover product identity: || W U_{d0} W^dag U_{dc} - (F^dag U_{d0} F U_{dc})^3 ||_F
// with W = F^dag U_{d0} F U_{dc} F^dag, maximized over the target index.

inline double grover_factorization_residual(std::size_t n) {
  if (n > 64) throw DimensionCap("grover_factorization_residual: N = " + std::to_string(n));
  if (n == 0) throw BadParams("grover_factorization_residual: N = 0");
  numkit::Matrix f(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                         static_cast<double>(n);
      f(j, k) = numkit::cd(std::cos(ang), std::sin(ang)) /
                std::sqrt(static_cast<double>(n));
    }
  const numkit::Matrix fdag = f.adjoint();

  // m * U_{delta_idx}: negate column idx
  auto flip = [&](numkit::Matrix m, std::size_t idx) {
    for (std::size_t t = 0; t < n; ++t) m(t, idx) = -m(t, idx);
    return m;
  };

  const numkit::Matrix core = flip(fdag, 0) * f;  // F^dag U_{d0} F
  double worst = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const numkit::Matrix base = flip(core, c);    // F^dag U_{d0} F U_{dc}
    const numkit::Matrix w = base * fdag;
    const numkit::Matrix lhs = flip(flip(w, 0) * w.adjoint(), c);
    const numkit::Matrix rhs = base * base * base;
    worst = std::max(worst, (lhs - rhs).frobenius_norm());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Plain amplitude amplification over a marked subset, sampled measurement.

struct GroverResult {
  std::size_t found_index = 0;
  long iterations = 0;
  double success_probability = 0;  // mass of the marked subset in the final state
};

inline GroverResult grover_search(const std::vector<std::size_t>& marked,
                                  const concepts::PhaseOracle& oracle,
                                  std::uint64_t seed) {
  const std::size_t n = oracle.diagonal.size();
  if (marked.empty()) throw EmptyMarkedSet("grover_search");
  if (marked.size() > n) throw BadParams("grover_search: marked set larger than domain");
  const double frac = static_cast<double>(marked.size()) / static_cast<double>(n);
  const IterationCount it = iteration_count(std::sqrt(frac));

  numkit::CVec psi(n);
  psi[0] = 1.0;
  detail::prepare(psi);
  for (long k = 0; k < it.m; ++k) {
    detail::apply_diag(psi, oracle.diagonal);  // U_chi
    detail::prepare_adjoint(psi);
    detail::flip_phase(psi, 0);                // U_{delta_0}
    detail::prepare(psi);
  }

  GroverResult res;
  res.iterations = it.m;
  for (const std::size_t x : marked) res.success_probability += std::norm(psi[x]);
  rng::SplitMix64 gen(seed);
  res.found_index = rng::sample_outcome(psi, gen);
  return res;
}

// ---------------------------------------------------------------------------
// Hybrid algorithm for wide windows: amplify onto the window, verify, then
// binary-search the right edge. Phase 1 tallies 2 membership queries per
// amplification round; verification adds 1; the boundary search pays
// ceil(log2 d) more.

struct HybridResult {
  std::optional<std::size_t> target = std::nullopt;  // empty on phase-1 failure
  long membership_queries = 0;
};

inline HybridResult bigship_hybrid(const concepts::ConceptFamily& fam,
                                   const concepts::PhaseOracle& oracle,
                                   std::uint64_t seed) {
  if (fam.tag() != concepts::Family::Battleship)
    throw WrongFamily("bigship_hybrid: family is " +
                      std::string(concepts::family_name(fam.tag())));
  const std::size_t n = fam.size();
  const auto d = static_cast<std::size_t>(*fam.params().d);
  const auto r = static_cast<std::size_t>(*fam.params().r);
  // the boundary search walks forward from x0; the window together with its
  // complement must not wrap inside the probed range
  if (n + 1 < 2 * d)
    throw BadParams("bigship_hybrid: window of length " + std::to_string(d) +
                    " too wide for N = " + std::to_string(n));

  const IterationCount it =
      iteration_count(std::sqrt(static_cast<double>(d) / static_cast<double>(n)));

  numkit::CVec psi(n);
  psi[0] = 1.0;
  detail::prepare(psi);
  HybridResult res;
  for (long k = 0; k < it.m; ++k) {
    detail::apply_diag(psi, oracle.diagonal);
    res.membership_queries += 2;
    detail::prepare_adjoint(psi);
    detail::flip_phase(psi, 0);
    detail::prepare(psi);
  }
  rng::SplitMix64 gen(seed);
  const std::size_t x0 = rng::sample_outcome(psi, gen);

  ++res.membership_queries;  // verify b_a(x0) = 1
  if (oracle.diagonal[x0] > 0) return res;

  // largest offset t in [0, d-1] with b_a(x0 + t) = 1; pred(0) is known true
  std::size_t lo = 0, hi = d;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    ++res.membership_queries;
    if (oracle.diagonal[(x0 + mid) % n] < 0)
      lo = mid;
    else
      hi = mid;
  }
  res.target = (x0 + lo + n - r) % n;
  return res;
}

}  // namespace qclearn::amplify
