// Command-line front end: build concept families, print spectra and
// measurement plans, run amplified learning and the hybrid search, and emit
// CSV sweep reports. All output is deterministic given the flags and seed.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qclearn/qclearn.hpp"

namespace {

using namespace qclearn;

struct FamilyFlags {
  std::string family;
  std::vector<long long> domain;  // --N, list only for sweep
  std::vector<long long> bits;    // --n
  std::optional<long long> r;
  std::optional<long long> d;
  std::string alpha;              // rational p/q
  std::string table;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool sizes_as_list) {
  cmd->add_option("--family", flags.family,
                  "family tag: bv | grover | battleship | bigship | majority | custom")
      ->required();
  auto* domain_opt = cmd->add_option("--N", flags.domain, "domain size N");
  auto* bits_opt = cmd->add_option("--n", flags.bits, "bit count n (domain 2^n)");
  if (sizes_as_list) {
    domain_opt->delimiter(',');
    bits_opt->delimiter(',');
  } else {
    domain_opt->expected(0, 1);
    bits_opt->expected(0, 1);
  }
  cmd->add_option("--r", flags.r, "window radius r (battleship)");
  cmd->add_option("--d", flags.d, "window length d = 2r+1 (battleship)");
  cmd->add_option("--alpha", flags.alpha, "window ratio p/q (bigship)");
  cmd->add_option("--table", flags.table, "truth table file (custom)");
}

std::pair<long long, long long> parse_alpha(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw BadFlags("--alpha must be a rational p/q");
  try {
    const long long p = std::stoll(text.substr(0, slash));
    const long long q = std::stoll(text.substr(slash + 1));
    return {p, q};
  } catch (const std::exception&) {
    throw BadFlags("--alpha must be a rational p/q");
  }
}

// Translates flags to a family spec. Sweep supplies sizes separately, so it
// skips the N/n presence check.
concepts::FamilySpec make_spec(const FamilyFlags& flags, bool require_size = true) {
  concepts::FamilySpec spec;
  if (flags.family == "bv")
    spec.tag = concepts::Family::BV;
  else if (flags.family == "grover")
    spec.tag = concepts::Family::Grover;
  else if (flags.family == "battleship" || flags.family == "bigship")
    spec.tag = concepts::Family::Battleship;
  else if (flags.family == "majority")
    spec.tag = concepts::Family::Majority;
  else if (flags.family == "custom")
    spec.tag = concepts::Family::Custom;
  else
    throw BadFlags("unknown family: " + flags.family);

  if (!flags.domain.empty()) spec.domain = flags.domain.front();
  if (!flags.bits.empty()) spec.n = flags.bits.front();
  spec.r = flags.r;
  spec.d = flags.d;
  if (!flags.alpha.empty()) spec.alpha = parse_alpha(flags.alpha);
  if (flags.family == "bigship" && flags.alpha.empty())
    throw BadFlags("bigship requires --alpha p/q");
  if (!flags.table.empty()) spec.table_path = flags.table;

  switch (spec.tag) {
    case concepts::Family::BV:
    case concepts::Family::Majority:
      if (require_size && !spec.n) throw BadFlags(flags.family + " requires --n");
      break;
    case concepts::Family::Grover:
      if (require_size && !spec.domain) throw BadFlags("grover requires --N");
      break;
    case concepts::Family::Battleship:
      if (require_size && !spec.domain) throw BadFlags(flags.family + " requires --N");
      if (!spec.r && !spec.d && !spec.alpha)
        throw BadFlags(flags.family + " requires one of --r, --d, --alpha");
      break;
    case concepts::Family::Custom:
      if (!spec.table_path) throw BadFlags("custom requires --table");
      break;
  }
  return spec;
}

std::vector<long long> sweep_sizes(const FamilyFlags& flags) {
  if (!flags.domain.empty() && !flags.bits.empty())
    throw BadFlags("give sweep sizes via --N or --n, not both");
  if (!flags.domain.empty()) return flags.domain;
  if (!flags.bits.empty()) return flags.bits;
  throw BadFlags("sweep requires a nonempty size list via --N or --n");
}

std::string fmt(double x) { return csv::format_double(x); }

std::string fmt_complex(const numkit::cd& z) {
  if (std::abs(z.imag()) <= 1e-12) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

int run_spectrum(const FamilyFlags& flags, std::ostream& out) {
  const concepts::FamilySpec spec = make_spec(flags);
  if (spec.tag == concepts::Family::Battleship && spec.domain) {
    long long d = 0;
    if (spec.alpha)
      d = concepts::bigship_window(spec.alpha->first, spec.alpha->second,
                                   static_cast<std::size_t>(*spec.domain));
    else if (spec.d)
      d = *spec.d;
    else if (spec.r)
      d = 2 * *spec.r + 1;
    else
      throw BadFlags("battleship spectrum needs --r, --d or --alpha");
    const auto s = analysis::battleship_spectrum(
        static_cast<std::size_t>(*spec.domain), d);
    for (const auto& v : s.values) out << fmt_complex(v) << '\n';
    return 0;
  }
  if (spec.tag == concepts::Family::Majority && spec.n) {
    const auto s = analysis::majority_spectrum(static_cast<int>(*spec.n));
    for (std::size_t k = 0; k < s.values.size(); ++k)
      out << fmt_complex(s.values[k]) << " x" << s.multiplicities[k] << '\n';
    return 0;
  }
  const concepts::ConceptFamily fam = concepts::build_family(spec);
  const auto rep = group_algebra::detect_symmetry(fam);
  if (rep.preferred() != group_algebra::SymmetryReport::Kind::None) {
    const auto kind =
        rep.preferred() == group_algebra::SymmetryReport::Kind::Hypercube
            ? group_algebra::GroupKind::Hypercube
            : group_algebra::GroupKind::Cyclic;
    const auto s =
        group_algebra::group_eigenvalues(group_algebra::family_symbol(fam, kind));
    for (const auto& v : s.values) out << fmt_complex(v) << '\n';
    return 0;
  }
  const auto s = numkit::hermitian_eig(concepts::query_matrix(fam));
  for (const auto& v : s.values) out << fmt_complex(v) << '\n';
  return 0;
}

int run_impatient(const FamilyFlags& flags, std::ostream& out) {
  const concepts::ConceptFamily fam = concepts::build_family(make_spec(flags));
  const auto plan = measurement::impatient_transform(fam);
  out << "family=" << concepts::family_name(fam.tag()) << " N=" << fam.size()
      << " path=" << (plan.path == measurement::Path::GroupSign ? "group_sign" : "gram_sqrt")
      << " constant_diagonal=" << (plan.constant_diagonal ? "true" : "false");
  if (plan.constant_diagonal) out << " s=" << fmt(plan.diagonal_value);
  out << " avg_success=" << fmt(plan.avg_success);
  out << " warnings=";
  for (std::size_t i = 0; i < plan.warnings.size(); ++i)
    out << (i ? "," : "") << warning_name(plan.warnings[i]);
  out << '\n';
  return 0;
}

int run_amplify(const FamilyFlags& flags, long long target, std::uint64_t seed,
                std::ostream& out) {
  const concepts::ConceptFamily fam = concepts::build_family(make_spec(flags));
  if (target < 0 || static_cast<std::size_t>(target) >= fam.size())
    throw IndexOutOfRange("--target " + std::to_string(target));
  const auto rep = amplify::amplified_learn(fam, static_cast<std::size_t>(target));
  rng::SplitMix64 gen(seed);
  const std::size_t sampled = rng::sample_outcome(rep.final_state, gen);
  out << "family=" << concepts::family_name(fam.tag()) << " N=" << fam.size()
      << " target=" << target << " s=" << fmt(rep.s)
      << " theta=" << fmt(rep.theta) << " m=" << rep.m
      << " predicted=" << fmt(rep.predicted_success)
      << " simulated=" << fmt(rep.simulated_success)
      << " membership_queries=" << rep.membership_queries
      << " equivalence_queries=" << rep.equivalence_queries
      << " sampled=" << sampled << '\n';
  return 0;
}

int run_gamma(const FamilyFlags& flags, std::ostream& out) {
  const concepts::ConceptFamily fam = concepts::build_family(make_spec(flags));
  out << concepts::gamma_measure(fam).str() << '\n';
  return 0;
}

int run_hybrid(const FamilyFlags& flags, long long target, std::uint64_t seed,
               std::ostream& out) {
  const concepts::ConceptFamily fam = concepts::build_family(make_spec(flags));
  if (target < 0 || static_cast<std::size_t>(target) >= fam.size())
    throw IndexOutOfRange("--target " + std::to_string(target));
  const auto oracle =
      concepts::membership_oracle(fam, static_cast<std::size_t>(target));
  const auto res = amplify::bigship_hybrid(fam, oracle, seed);
  out << "found=";
  if (res.target)
    out << *res.target;
  else
    out << "FAIL";
  out << " membership_queries=" << res.membership_queries << '\n';
  return 0;
}

int run_sweep(const FamilyFlags& flags, const std::string& out_path,
              const std::string& format, std::ostream& out) {
  const auto rows = analysis::sweep(make_spec(flags, false), sweep_sizes(flags));
  if (format == "pretty") {
    for (const auto& row : rows) {
      out << row.family << " N=" << row.domain;
      if (row.param) out << " param=" << *row.param;
      out << " s=" << fmt(row.s) << " m=" << row.m
          << " membership_queries=" << row.membership_queries
          << " avg_success=" << fmt(row.avg_success);
      if (row.gamma) out << " gamma=" << fmt(*row.gamma);
      out << '\n';
    }
    return 0;
  }
  if (format != "csv") throw BadFlags("--format must be csv or pretty");
  if (out_path.empty())
    csv::emit_csv(rows, out);
  else
    csv::emit_csv(rows, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulator for quantum concept learning from membership and "
               "equivalence oracles"};
  app.require_subcommand(1);

  FamilyFlags flags;
  long long target = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the query matrix");
  add_family_flags(spectrum, flags, false);

  auto* impatient = app.add_subcommand("impatient", "optimal single-query plan");
  add_family_flags(impatient, flags, false);

  auto* amp = app.add_subcommand("amplify", "amplified learning report");
  add_family_flags(amp, flags, false);
  amp->add_option("--target", target, "target concept index")->required();
  amp->add_option("--seed", seed, "sampling seed");

  auto* gamma = app.add_subcommand("gamma", "exact similarity measure");
  add_family_flags(gamma, flags, false);

  auto* hybrid = app.add_subcommand("hybrid", "search + binary-search algorithm");
  add_family_flags(hybrid, flags, false);
  hybrid->add_option("--target", target, "target concept index")->required();
  hybrid->add_option("--seed", seed, "sampling seed");

  auto* sweep = app.add_subcommand("sweep", "per-size report rows");
  add_family_flags(sweep, flags, true);
  sweep->add_option("--out", out_path, "CSV output path");
  sweep->add_option("--format", format, "csv | pretty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "BadFlags: " << e.what() << '\n';
    return 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(flags, std::cout);
    if (impatient->parsed()) return run_impatient(flags, std::cout);
    if (amp->parsed()) return run_amplify(flags, target, seed, std::cout);
    if (gamma->parsed()) return run_gamma(flags, std::cout);
    if (hybrid->parsed()) return run_hybrid(flags, target, seed, std::cout);
    if (sweep->parsed()) return run_sweep(flags, out_path, format, std::cout);
  } catch (const BadFlags& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
