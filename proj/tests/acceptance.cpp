// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qclearn/qclearn.hpp"
#include "test_support.hpp"

using namespace qclearn;
using numkit::cd;
using numkit::Matrix;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 12) notes.push_back(what);
    }
  }
};

Matrix hadamard_tensor(int n) {
  Matrix h(1, 1);
  h(0, 0) = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  for (int step = 0; step < n; ++step) {
    const std::size_t m = h.rows();
    Matrix next(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        next(i, j) = h(i, j) * r;
        next(i, j + m) = h(i, j) * r;
        next(i + m, j) = h(i, j) * r;
        next(i + m, j + m) = -h(i, j) * r;
      }
    h = next;
  }
  return h;
}

std::string num(double x) { return csv::format_double(x); }

// --------------------------------------------------------------------------

void bv_exactness(Criterion& c) {
  for (int n = 1; n <= 10; ++n) {
    const auto fam = concepts::bv_family(n);
    const auto plan = measurement::impatient_transform(fam);
    const Matrix h = hadamard_tensor(n);
    c.require(test_support::max_entry_diff(*plan.transform, h) <= 1e-10,
              "n=" + std::to_string(n) + ": S differs from the Hadamard tensor");
    c.require(test_support::max_entry_diff(*plan.critical,
                                           Matrix::identity(h.rows())) <= 1e-10,
              "n=" + std::to_string(n) + ": B differs from I");
    for (const double p : plan.per_concept_success)
      c.require(std::abs(p - 1.0) <= 1e-10,
                "n=" + std::to_string(n) + ": per-concept success off 1");
    if (n <= 8) {
      // independent unitarity check of the query matrix itself
      const Matrix a = concepts::query_matrix(fam);
      c.require((a.adjoint() * a - Matrix::identity(fam.size())).frobenius_norm() <=
                    1e-10,
                "n=" + std::to_string(n) + ": A^dag A != I numerically");
    }
  }
}

void grover_diagonal(Criterion& c) {
  for (std::size_t n = 4; n <= 1024; n *= 2) {
    const auto plan = measurement::impatient_transform(concepts::grover_family(n));
    const double expect = (3.0 - 4.0 / double(n)) / std::sqrt(double(n));
    c.require(plan.constant_diagonal, "N=" + std::to_string(n) + ": diagonal not constant");
    c.require(std::abs(plan.diagonal_value - expect) <= 1e-9,
              "N=" + std::to_string(n) + ": s=" + num(plan.diagonal_value) +
                  " vs " + num(expect));
    if (plan.critical) {
      const Matrix& b = *plan.critical;
      for (std::size_t i = 0; i < n; ++i)
        c.require(std::abs(b(i, i).real() - expect) <= 1e-9,
                  "N=" + std::to_string(n) + ": B diagonal entry " + std::to_string(i));
    }
  }
  const auto p4 = measurement::impatient_transform(concepts::grover_family(4));
  c.require(std::abs(p4.avg_success - 1.0) <= 1e-10, "N=4 success not 1");
  const auto p4096 = measurement::impatient_transform(concepts::grover_family(4096));
  const double scaled = 4096.0 * p4096.avg_success;
  c.require(scaled >= 8.9 && scaled <= 9.0,
            "N=4096: N*avg_success=" + num(scaled) + " outside [8.9, 9.0]");
}

void battleship_spectra(Criterion& c) {
  for (const std::size_t n : {8u, 64u, 256u, 4096u}) {
    std::vector<long long> windows = {1, 3, 7, concepts::bigship_window(1, 4, n)};
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
    for (const long long d : windows) {
      if (d >= static_cast<long long>(n)) continue;
      const auto closed = analysis::battleship_spectrum(n, d);
      const auto dft = analysis::cyclic_spectrum(analysis::battleship_phi(n, d));
      std::vector<double> lhs(n), rhs(n);
      for (std::size_t j = 0; j < n; ++j) {
        lhs[j] = closed.values[j].real();
        rhs[j] = dft.values[j].real();
        c.require(std::abs(dft.values[j].imag()) <= 1e-9,
                  "N=" + std::to_string(n) + " d=" + std::to_string(d) +
                      ": complex residue in the transform spectrum");
      }
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      double worst = 0;
      for (std::size_t j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
      c.require(worst <= 1e-9, "N=" + std::to_string(n) + " d=" + std::to_string(d) +
                                   ": multiset gap " + num(worst));
    }
  }
}

void smallship_scaling(Criterion& c) {
  const std::size_t n = 4096;
  for (const std::size_t d : {1u, 2u, 3u, 5u}) {
    const double lb = analysis::smallship_lower_bound(n, d);
    c.require(std::abs(lb - 4.0 / std::numbers::pi) <= 0.01,
              "d=" + std::to_string(d) + ": bound " + num(lb) + " vs 4/pi");
    const double s =
        analysis::s_average(analysis::cyclic_spectrum(analysis::window_phi(n, d)));
    c.require(s * std::sqrt(double(n)) >= lb,
              "d=" + std::to_string(d) + ": s*sqrt(N)=" + num(s * std::sqrt(double(n))) +
                  " below " + num(lb));
  }
}

void bigship_trend(Criterion& c) {
  concepts::FamilySpec base;
  base.tag = concepts::Family::Battleship;
  base.alpha = std::make_pair(1ll, 4ll);
  const auto rows = analysis::sweep(base, {256, 512, 1024, 2048, 4096});
  std::vector<double> stat;
  for (const auto& row : rows)
    stat.push_back(row.s * std::sqrt(double(row.domain)) / std::log(double(row.domain)));
  for (std::size_t i = 1; i < stat.size(); ++i)
    c.require(stat[i] <= stat[0] * 1.05,
              "N=" + std::to_string(rows[i].domain) + ": statistic " + num(stat[i]) +
                  " above first value " + num(stat[0]) + " + 5%");
}

void majority_spectra(Criterion& c) {
  for (int n = 2; n <= 14; n += 2) {
    const auto spec = analysis::majority_spectrum(n);
    const auto phi = analysis::majority_phi(n);
    const std::size_t domain = std::size_t{1} << n;
    std::vector<double> v(domain);
    for (std::size_t b = 0; b < domain; ++b)
      v[b] = (phi[b] ? -1.0 : 1.0) / std::sqrt(double(domain));
    const auto wht =
        group_algebra::group_eigenvalues(group_algebra::hypercube_symbol(v));
    double worst = 0;
    for (std::size_t b = 0; b < domain; ++b)
      worst = std::max(worst, std::abs(wht.values[b].real() -
                                       spec.values[std::popcount(b)].real()));
    c.require(worst <= 1e-8,
              "n=" + std::to_string(n) + ": closed-form vs WHT gap " + num(worst));
  }
  const auto two = analysis::majority_spectrum(2);
  c.require(two.values[0].real() == -1.0 && two.values[1].real() == -1.0 &&
                two.values[2].real() == 1.0,
            "n=2 spectrum is not {-1, -1, 1} exactly");
  for (int n = 2; n <= 32; n += 2) {
    const auto spec = analysis::majority_spectrum(n);
    c.require(std::abs(spec.values[n / 2].real()) == analysis::majority_middle_abs(n),
              "n=" + std::to_string(n) + ": middle eigenvalue formula not exact");
  }
  for (const int n : {32, 64, 128}) {
    const double scaled = analysis::majority_middle_abs(n) * std::sqrt(double(n));
    const double target = 2.0 / std::sqrt(std::numbers::pi);
    c.require(std::abs(scaled - target) <= 0.1 * target,
              "n=" + std::to_string(n) + ": middle*sqrt(n)=" + num(scaled));
  }
}

void amplification_exactness(Criterion& c) {
  const std::vector<concepts::ConceptFamily> fams = {
      concepts::grover_family(16), concepts::grover_family(64),
      concepts::battleship_family(8, 1), concepts::majority_family(8)};
  for (const auto& fam : fams) {
    const std::size_t n = fam.size();
    const std::size_t targets[5] = {0, 1, n / 3, n / 2, n - 1};
    for (const std::size_t target : targets) {
      const auto rep = amplify::amplified_learn(fam, target);
      const std::string tag = std::string(concepts::family_name(fam.tag())) +
                              "(" + std::to_string(n) + ") target " +
                              std::to_string(target);
      c.require(std::abs(rep.simulated_success - rep.predicted_success) <= 1e-9,
                tag + ": simulated vs sin^2((2m+1)theta)");
      const double bound = std::max(1.0 - rep.s * rep.s, rep.s * rep.s);
      c.require(rep.simulated_success >= bound - 1e-9, tag + ": below the bound");
      c.require(rep.membership_queries == 2 * rep.m + 1 &&
                    rep.equivalence_queries == rep.m,
                tag + ": query tallies");
    }
  }
}

void grover_factorization(Criterion& c) {
  for (const std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
    const double res = amplify::grover_factorization_residual(n);
    c.require(res <= 1e-10, "N=" + std::to_string(n) + ": residual " + num(res));
  }
}

void grover_depth_ratio(Criterion& c) {
  for (const std::size_t n : {256u, 1024u, 4096u}) {
    const double s = (3.0 - 4.0 / double(n)) / std::sqrt(double(n));
    const auto it = amplify::iteration_count(s);
    const double ratio =
        (3.0 * it.m + 1.0) / ((std::numbers::pi / 4.0) * std::sqrt(double(n)));
    c.require(ratio >= 0.9 && ratio <= 1.1,
              "N=" + std::to_string(n) + ": ratio " + num(ratio));
  }
}

void criticality_and_optimality(Criterion& c) {
  const std::vector<concepts::ConceptFamily> symmetric = {
      concepts::grover_family(4),       concepts::grover_family(16),
      concepts::grover_family(128),     concepts::grover_family(512),
      concepts::battleship_family(8, 1), concepts::battleship_family(64, 7),
      concepts::battleship_family(256, 31),
      concepts::battleship_family(512, 63),
      concepts::majority_family(2),     concepts::majority_family(6),
      concepts::majority_family(8)};
  for (const auto& fam : symmetric) {
    const auto plan = measurement::impatient_transform(fam);
    const double res = measurement::criticality_residual(*plan.critical);
    c.require(res <= 1e-9, std::string(concepts::family_name(fam.tag())) + "(" +
                               std::to_string(fam.size()) + "): criticality " +
                               num(res));
  }

  rng::SplitMix64 gen(0);
  for (const std::size_t n : {4u, 8u, 16u}) {
    for (const auto& fam :
         {concepts::grover_family(n), concepts::battleship_family(n, 1)}) {
      const auto plan = measurement::impatient_transform(fam);
      const Matrix& root = *plan.critical;  // sqrt of the Gram matrix
      double trace_root = 0;
      for (std::size_t i = 0; i < n; ++i) trace_root += root(i, i).real();
      const double base_dist = (root - Matrix::identity(n)).frobenius_norm();
      for (int trial = 0; trial < 100; ++trial) {
        const Matrix u = test_support::random_unitary(n, gen);
        const Matrix rotated = u * root;
        cd tr{};
        for (std::size_t i = 0; i < n; ++i) tr += rotated(i, i);
        c.require(std::abs(tr) <= trace_root + 1e-9,
                  "N=" + std::to_string(n) + ": trace maximality violated");
        c.require((rotated - Matrix::identity(n)).frobenius_norm() >=
                      base_dist - 1e-9,
                  "N=" + std::to_string(n) + ": Procrustes distance violated");
      }
    }
  }
}

void gamma_values(Criterion& c) {
  bool complement_form_matches_everywhere = true;
  for (const std::size_t n : {6u, 8u, 9u, 10u, 12u}) {
    for (long long d = 1; d < static_cast<long long>(n); d += 2) {
      const auto fam = concepts::battleship_family(n, (d - 1) / 2);
      const concepts::Rational exact = concepts::gamma_measure(fam);
      const concepts::Rational expect = concepts::battleship_gamma_closed_form(n, d);
      c.require(exact == expect,
                "N=" + std::to_string(n) + " d=" + std::to_string(d) +
                    ": enumeration " + exact.str() + " vs min{d/N,1/3} = " +
                    expect.str());
      // flipping every table bit leaves gamma invariant, so the window and
      // its complement must give the same value; check the symmetric form
      const concepts::Rational complement = concepts::battleship_gamma_closed_form(
          n, std::min(d, static_cast<long long>(n) - d));
      if (!(exact == complement)) complement_form_matches_everywhere = false;
    }
  }
  if (!c.ok)
    c.notes.push_back(
        std::string("note: min{d/N, (N-d)/N, 1/3} matches the enumeration on ") +
        (complement_form_matches_everywhere ? "every pair above" : "SOME pairs only"));
  for (std::size_t n = 3; n <= 12; ++n) {
    const concepts::Rational exact = concepts::gamma_measure(concepts::grover_family(n));
    c.require(exact == concepts::Rational(1, static_cast<long long>(n)),
              "grover(" + std::to_string(n) + "): " + exact.str());
  }
}

void hybrid_bigship(Criterion& c) {
  const auto fam = concepts::battleship_family(256, 31);  // d = 63
  long successes = 0, runs = 0;
  for (std::size_t a = 0; a < 256; ++a) {
    const auto oracle = concepts::membership_oracle(fam, a);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto res = amplify::bigship_hybrid(fam, oracle, seed);
      ++runs;
      c.require(res.membership_queries <= 20,
                "a=" + std::to_string(a) + " seed=" + std::to_string(seed) +
                    ": " + std::to_string(res.membership_queries) + " queries");
      if (res.target) {
        ++successes;
        c.require(*res.target == a,
                  "a=" + std::to_string(a) + " seed=" + std::to_string(seed) +
                      ": wrong answer " + std::to_string(*res.target));
      }
    }
  }
  c.require(successes * 2 >= runs, "success fraction " +
                                       std::to_string(successes) + "/" +
                                       std::to_string(runs) + " below 1/2");
}

void equivalence_simulation(Criterion& c) {
  for (const std::size_t n : {8u, 16u, 32u}) {
    for (long long r = 0; 2 * r + 1 < static_cast<long long>(n); ++r) {
      const auto fam = concepts::battleship_family(n, r);
      for (std::size_t a = 0; a < n; ++a) {
        const auto oracle = concepts::membership_oracle(fam, a);
        for (std::size_t cand = 0; cand < n; ++cand) {
          const auto res = concepts::battleship_equiv_by_membership(fam, oracle, cand);
          c.require(res.queries == 2, "query count not 2");
          c.require(res.equal == (a == cand),
                    "N=" + std::to_string(n) + " r=" + std::to_string(r) +
                        " a=" + std::to_string(a) + " cand=" + std::to_string(cand));
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1. BV exactness: S = H^{(x)n}, B = I, success 1 (n = 1..10)", bv_exactness},
      {"2. Grover diagonal (3-4/N)/sqrt(N), N = 4..1024; 9/N asymptote at 4096",
       grover_diagonal},
      {"3. Battleship spectra: closed form vs DFT multisets (N up to 4096)",
       battleship_spectra},
      {"4. SMALLSHIP scaling: lower bound near 4/pi and dominated by s*sqrt(N)",
       smallship_scaling},
      {"5. BIGSHIP trend: s*sqrt(N)/ln(N) stays within 5% of the N=256 value",
       bigship_trend},
      {"6. MAJORITY spectra: closed form vs WHT; middle-eigenvalue formulas",
       majority_spectra},
      {"7. Amplification exactness: sin^2((2m+1)theta) and the success bound",
       amplification_exactness},
      {"8. Grover factorization residual <= 1e-10 (N = 2..64)", grover_factorization},
      {"9. Grover depth ratio (3m+1) / ((pi/4) sqrt(N)) in [0.9, 1.1]",
       grover_depth_ratio},
      {"10. Criticality residual and random-unitary optimality properties",
       criticality_and_optimality},
      {"11. Gamma: exhaustive enumeration vs min{d/N, 1/3} and 1/N",
       gamma_values},
      {"12. Hybrid BIGSHIP: exact answers, success >= 1/2, <= 20 queries",
       hybrid_bigship},
      {"13. Equivalence via 2 membership queries, exhaustive (N = 8, 16, 32)",
       equivalence_simulation},
  };

  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s\n", c.ok ? "PASS" : "FAIL", label.c_str());
    for (const auto& note : c.notes) std::printf("       - %s\n", note.c_str());
    if (!c.ok) ++failures;
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
