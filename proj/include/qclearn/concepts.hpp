#pragma once

// Concept families over finite domains: truth tables, phase oracles, the
// membership query matrix and the subset similarity measure gamma. Truth
// tables are packed bits; families are immutable after construction.

#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclearn/errors.hpp"
#include "qclearn/numkit.hpp"

namespace qclearn::concepts {

inline constexpr std::size_t kDomainCap = 4096;       // tables fit in ~2 MB
inline constexpr std::size_t kMaterializeCap = 2048;  // dense query matrices
inline constexpr std::size_t kGammaCap = 12;          // exhaustive subsets

enum class Family { BV, Grover, Battleship, Majority, Custom };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::BV: return "bv";
    case Family::Grover: return "grover";
    case Family::Battleship: return "battleship";
    case Family::Majority: return "majority";
    case Family::Custom: return "custom";
  }
  return "?";
}

struct FamilyParams {
  std::optional<long long> n;  // bv, majority: domain is Z_2^n
  std::optional<long long> r;  // battleship window radius
  std::optional<long long> d;  // battleship window length 2r+1
  std::optional<std::pair<long long, long long>> alpha;  // d/N ratio, reduced
};

// A matched concept class: square truth table T with T[c][x] = c(x).
class ConceptFamily {
public:
  ConceptFamily(Family tag, FamilyParams params, std::size_t n,
                std::vector<std::uint64_t> bits)
      : tag_(tag), params_(std::move(params)), n_(n), stride_((n + 63) / 64),
        bits_(std::move(bits)) {}

  Family tag() const { return tag_; }
  const FamilyParams& params() const { return params_; }
  std::size_t size() const { return n_; }

  bool value(std::size_t c, std::size_t x) const {
    return (bits_[c * stride_ + x / 64] >> (x % 64)) & 1u;
  }

  std::size_t row_hamming(std::size_t c1, std::size_t c2) const {
    std::size_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w)
      acc += std::popcount(bits_[c1 * stride_ + w] ^ bits_[c2 * stride_ + w]);
    return acc;
  }

  std::size_t row_ones(std::size_t c) const {
    std::size_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w)
      acc += std::popcount(bits_[c * stride_ + w]);
    return acc;
  }

private:
  Family tag_;
  FamilyParams params_;
  std::size_t n_, stride_;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

class TableBuilder {
public:
  explicit TableBuilder(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_) {}
  void set(std::size_t c, std::size_t x) {
    bits_[c * stride_ + x / 64] |= std::uint64_t{1} << (x % 64);
  }
  std::vector<std::uint64_t> take() { return std::move(bits_); }

private:
  std::size_t n_, stride_;
  std::vector<std::uint64_t> bits_;
};

inline void check_domain(std::size_t n) {
  if (n == 0) throw BadParams("domain size must be positive");
  if (n > kDomainCap)
    throw DimensionCap("domain size " + std::to_string(n) + " > " +
                       std::to_string(kDomainCap));
}

inline std::vector<std::uint64_t> battleship_bits(std::size_t domain, long long r) {
  TableBuilder t(domain);
  for (std::size_t a = 0; a < domain; ++a)
    for (long long k = -r; k <= r; ++k) {
      const long long m = static_cast<long long>(domain);
      const std::size_t x = static_cast<std::size_t>(((static_cast<long long>(a) - k) % m + m) % m);
      t.set(a, x);
    }
  return t.take();
}

inline void check_distinct_rows(const ConceptFamily& fam) {
  const std::size_t n = fam.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < n; ++x) {
      const bool va = fam.value(a, x), vb = fam.value(b, x);
      if (va != vb) return vb;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < n; ++i)
    if (fam.row_hamming(order[i - 1], order[i]) == 0)
      throw BadParams("truth table has identical rows " +
                      std::to_string(order[i - 1]) + " and " +
                      std::to_string(order[i]));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Builders

inline ConceptFamily bv_family(long long n) {
  if (n < 1 || n > 12) throw BadParams("bv: n out of range [1,12]");
  const std::size_t domain = std::size_t{1} << n;
  detail::TableBuilder t(domain);
  for (std::size_t a = 0; a < domain; ++a)
    for (std::size_t x = 0; x < domain; ++x)
      if (std::popcount(a & x) & 1u) t.set(a, x);
  FamilyParams p;
  p.n = n;
  return ConceptFamily(Family::BV, p, domain, t.take());
}

inline ConceptFamily grover_family(std::size_t domain) {
  detail::check_domain(domain);
  detail::TableBuilder t(domain);
  for (std::size_t a = 0; a < domain; ++a) t.set(a, a);
  return ConceptFamily(Family::Grover, {}, domain, t.take());
}

inline ConceptFamily battleship_family(std::size_t domain, long long r) {
  detail::check_domain(domain);
  const long long d = 2 * r + 1;
  if (r < 0 || static_cast<std::size_t>(d) >= domain)
    throw BadParams("battleship: need 0 <= r < N/2 with distinct rows; got r=" +
                    std::to_string(r) + ", N=" + std::to_string(domain));
  FamilyParams p;
  p.r = r;
  p.d = d;
  return ConceptFamily(Family::Battleship, p, domain,
                       detail::battleship_bits(domain, r));
}

// Rounds alpha*N to the nearest odd window length, ties upward.
inline long long bigship_window(long long alpha_num, long long alpha_den,
                                std::size_t domain) {
  if (alpha_num <= 0 || alpha_den <= 0 || 2 * alpha_num >= alpha_den)
    throw BadParams("bigship: alpha must lie in (0, 1/2)");
  const long long num = alpha_num * static_cast<long long>(domain);
  const long long den = alpha_den;
  const long long k = num / den;
  long long best_d = -1, best_err = -1;
  for (long long cand = k - 3; cand <= k + 3; ++cand) {
    if (cand < 1 || cand % 2 == 0) continue;
    const long long err = std::abs(cand * den - num);
    if (best_d < 0 || err < best_err || (err == best_err && cand > best_d)) {
      best_d = cand;
      best_err = err;
    }
  }
  return best_d;
}

inline ConceptFamily bigship_family(long long alpha_num, long long alpha_den,
                                    std::size_t domain) {
  detail::check_domain(domain);
  const long long d = bigship_window(alpha_num, alpha_den, domain);
  if (static_cast<std::size_t>(d) >= domain)
    throw BadParams("bigship: rounded window covers the whole domain");
  const long long r = (d - 1) / 2;
  FamilyParams p;
  p.r = r;
  p.d = d;
  const long long g = std::gcd(alpha_num, alpha_den);
  p.alpha = std::make_pair(alpha_num / g, alpha_den / g);
  return ConceptFamily(Family::Battleship, p, domain,
                       detail::battleship_bits(domain, r));
}

inline ConceptFamily majority_family(long long n) {
  if (n < 2 || n > 12) throw BadParams("majority: n out of range [2,12]");
  if (n % 2 != 0) throw BadParams("majority: n must be even");
  const std::size_t domain = std::size_t{1} << n;
  detail::TableBuilder t(domain);
  for (std::size_t a = 0; a < domain; ++a)
    for (std::size_t x = 0; x < domain; ++x)
      if (std::popcount(a ^ x) <= n / 2) t.set(a, x);
  FamilyParams p;
  p.n = n;
  return ConceptFamily(Family::Majority, p, domain, t.take());
}

inline ConceptFamily custom_family(const std::vector<std::string>& rows) {
  const std::size_t domain = rows.size();
  detail::check_domain(domain);
  detail::TableBuilder t(domain);
  for (std::size_t c = 0; c < domain; ++c) {
    if (rows[c].size() != domain)
      throw BadParams("custom: row " + std::to_string(c) + " has length " +
                      std::to_string(rows[c].size()) + ", expected " +
                      std::to_string(domain));
    for (std::size_t x = 0; x < domain; ++x) {
      const char ch = rows[c][x];
      if (ch == '1')
        t.set(c, x);
      else if (ch != '0')
        throw BadParams("custom: row " + std::to_string(c) +
                        " has a character outside {0,1}");
    }
  }
  ConceptFamily fam(Family::Custom, {}, domain, t.take());
  detail::check_distinct_rows(fam);
  return fam;
}

// Plain-text table: first line N, then N lines of N characters in {0,1}.
inline ConceptFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::size_t domain = 0;
  if (!(in >> domain)) throw BadParams("table file: missing domain size");
  detail::check_domain(domain);
  std::vector<std::string> rows(domain);
  for (std::size_t c = 0; c < domain; ++c)
    if (!(in >> rows[c]))
      throw BadParams("table file: missing row " + std::to_string(c));
  return custom_family(rows);
}

// Aggregate spec used by the CLI and sweeps.
struct FamilySpec {
  Family tag = Family::Grover;
  std::optional<long long> n;        // bv, majority
  std::optional<long long> domain;   // N
  std::optional<long long> r;
  std::optional<long long> d;
  std::optional<std::pair<long long, long long>> alpha;
  std::optional<std::string> table_path;
};

inline ConceptFamily build_family(const FamilySpec& spec) {
  switch (spec.tag) {
    case Family::BV:
      if (!spec.n) throw BadParams("bv: n required");
      return bv_family(*spec.n);
    case Family::Grover:
      if (!spec.domain) throw BadParams("grover: N required");
      return grover_family(static_cast<std::size_t>(*spec.domain));
    case Family::Battleship: {
      if (!spec.domain) throw BadParams("battleship: N required");
      const std::size_t domain = static_cast<std::size_t>(*spec.domain);
      if (spec.alpha) return bigship_family(spec.alpha->first, spec.alpha->second, domain);
      if (spec.r) return battleship_family(domain, *spec.r);
      if (spec.d) {
        if (*spec.d % 2 == 0) throw BadParams("battleship: d must be odd");
        return battleship_family(domain, (*spec.d - 1) / 2);
      }
      throw BadParams("battleship: one of r, d, alpha required");
    }
    case Family::Majority:
      if (!spec.n) throw BadParams("majority: n required");
      return majority_family(*spec.n);
    case Family::Custom:
      if (!spec.table_path) throw BadParams("custom: table path required");
      return load_family(*spec.table_path);
  }
  throw BadParams("unknown family tag");
}

// ---------------------------------------------------------------------------
// Oracles

struct PhaseOracle {
  enum class Kind { Membership, Equivalence };
  Kind kind;
  std::size_t target;
  std::vector<double> diagonal;  // entries exactly +1 or -1
};

inline PhaseOracle membership_oracle(const ConceptFamily& fam, std::size_t c) {
  if (c >= fam.size()) throw IndexOutOfRange("membership_oracle: concept " + std::to_string(c));
  PhaseOracle o{PhaseOracle::Kind::Membership, c, std::vector<double>(fam.size())};
  for (std::size_t x = 0; x < fam.size(); ++x)
    o.diagonal[x] = fam.value(c, x) ? -1.0 : 1.0;
  return o;
}

inline PhaseOracle equivalence_oracle(const ConceptFamily& fam, std::size_t c) {
  if (c >= fam.size()) throw IndexOutOfRange("equivalence_oracle: concept " + std::to_string(c));
  PhaseOracle o{PhaseOracle::Kind::Equivalence, c,
                std::vector<double>(fam.size(), 1.0)};
  o.diagonal[c] = -1.0;
  return o;
}

// ---------------------------------------------------------------------------
// Membership query matrix: column c is U_c applied to the equal superposition,
// i.e. A[x][c] = (-1)^{T[c][x]} / sqrt(N).

inline numkit::Matrix query_matrix(const ConceptFamily& fam) {
  const std::size_t n = fam.size();
  if (n > kMaterializeCap)
    throw DimensionCap("query_matrix: N = " + std::to_string(n) + " > " +
                       std::to_string(kMaterializeCap));
  numkit::Matrix a(n, n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c)
      a(x, c) = fam.value(c, x) ? -inv : inv;
  return a;
}

// ---------------------------------------------------------------------------
// Gamma similarity measure (exact rational, denominator |C'|)

struct Rational {
  long long num = 0, den = 1;
  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational gamma_measure(const ConceptFamily& fam) {
  const std::size_t n = fam.size();
  if (n < 2) throw BadParams("gamma_measure: need at least 2 concepts");
  if (n > kGammaCap)
    throw DimensionCap("gamma_measure: N = " + std::to_string(n) + " > " +
                       std::to_string(kGammaCap));
  // column masks: bit c of col[x] is T[c][x]
  std::vector<std::uint32_t> col(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c)
      if (fam.value(c, x)) col[x] |= std::uint32_t{1} << c;

  std::optional<Rational> best;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t sub = 0; sub <= all; ++sub) {
    const int size = std::popcount(sub);
    if (size < 2) continue;
    int worst = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const int ones = std::popcount(sub & col[x]);
      const int mn = std::min(ones, size - ones);
      if (mn > worst) worst = mn;
    }
    const Rational val(worst, size);
    if (!best || val < *best) best = val;
  }
  return *best;
}

// The closed-form gamma for battleship used beyond the enumeration cap.
inline Rational battleship_gamma_closed_form(std::size_t domain, long long d) {
  const Rational ratio(d, static_cast<long long>(domain));
  const Rational third(1, 3);
  return ratio < third ? ratio : third;
}

// ---------------------------------------------------------------------------
// Simulating the equivalence oracle with two membership queries: c == b_a iff
// c(a+r) = 1 and c(a+r+1) = 0.

struct EquivalenceCheck {
  bool equal = false;
  int queries = 0;
};

inline EquivalenceCheck battleship_equiv_by_membership(
    const ConceptFamily& fam, const PhaseOracle& target_oracle,
    std::size_t candidate) {
  if (fam.tag() != Family::Battleship)
    throw WrongFamily("battleship_equiv_by_membership: family is " +
                      std::string(family_name(fam.tag())));
  if (candidate >= fam.size())
    throw IndexOutOfRange("candidate " + std::to_string(candidate));
  const std::size_t n = fam.size();
  const auto r = static_cast<std::size_t>(*fam.params().r);
  const bool inside = target_oracle.diagonal[(candidate + r) % n] < 0;
  const bool outside = target_oracle.diagonal[(candidate + r + 1) % n] > 0;
  return EquivalenceCheck{inside && outside, 2};
}

}  // namespace qclearn::concepts
