// Command-line front end: exact enumeration of labeled connected maps by
// genus (oriented) or Euler characteristic (unoriented), closed-form
// one-vertex oracles, and a self-verification suite.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mapenum/closed_form.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/fixtures.hpp"
#include "mapenum/oriented.hpp"
#include "mapenum/report.hpp"
#include "mapenum/unoriented.hpp"
#include "mapenum/wick.hpp"

namespace {

constexpr int kExitBadProfile = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitWorkloadGuard = 4;
constexpr std::uint64_t kWorkloadGuardLimit = 1'000'000'000ull;

unsigned default_threads() {
  if (const char* env = std::getenv("MAPENUM_THREADS")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && value >= 1 && value <= 1024)
      return static_cast<unsigned>(value);
    std::cerr << "warning: ignoring invalid MAPENUM_THREADS='" << env << "'\n";
  }
  return 1;
}

// Saturating estimate of the matching-space size; twist bits double per edge
// in the unoriented case.
std::uint64_t workload_estimate(const mapenum::DegreeProfile& profile, bool unoriented) {
  constexpr std::uint64_t kSaturated = ~0ull;
  const std::uint64_t darts = profile.total_darts();
  long double estimate = 1.0L;
  for (std::uint64_t f = 3; f < darts; f += 2) estimate *= static_cast<long double>(f);
  if (unoriented)
    estimate *= std::pow(2.0L, static_cast<long double>(darts / 2));
  if (estimate > static_cast<long double>(kSaturated)) return kSaturated;
  return static_cast<std::uint64_t>(estimate);
}

struct EnumerateArgs {
  std::string mode = "oriented";
  std::string degrees;
  std::string format = "table";
  unsigned threads = default_threads();
  bool include_disconnected = false;
  bool force = false;
  bool quiet = false;
};

int run_enumerate(const EnumerateArgs& args) {
  mapenum::DegreeProfile profile = mapenum::DegreeProfile::parse(args.degrees);
  const bool unoriented = args.mode == "unoriented";

  std::uint64_t estimate = workload_estimate(profile, unoriented);
  if (estimate > kWorkloadGuardLimit && !args.force) {
    std::cerr << "refusing to enumerate ~" << estimate
              << " matchings without --force\n";
    return kExitWorkloadGuard;
  }

  mapenum::EnumerateOptions options;
  options.threads = args.threads;
  if (!args.quiet)
    options.progress = [](std::uint64_t processed, std::uint64_t total) {
      std::cerr << "progress: " << processed << " / " << total << " matchings\n";
    };

  auto start = std::chrono::steady_clock::now();
  mapenum::RunReport report;
  if (unoriented) {
    if (args.include_disconnected) {
      auto histogram = mapenum::enumerate_unoriented_moments(profile);
      report = mapenum::make_report(profile, histogram, false, 0, args.threads);
    } else {
      auto histogram = mapenum::enumerate_unoriented(profile, options);
      report = mapenum::make_report(profile, histogram, 0, args.threads);
    }
  } else {
    if (args.include_disconnected) {
      auto histogram = mapenum::enumerate_oriented_moments(profile);
      report = mapenum::make_report(profile, histogram, true, 0, args.threads);
    } else {
      auto histogram = mapenum::enumerate_oriented(profile, options);
      report = mapenum::make_report(profile, histogram, 0, args.threads);
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report.elapsed_ms = static_cast<std::uint64_t>(elapsed.count());

  if (args.format == "json")
    std::cout << report.to_json() << '\n';
  else if (args.format == "csv")
    std::cout << report.to_csv();
  else
    std::cout << report.to_table();
  return 0;
}

struct OracleArgs {
  std::string formula = "hz";
  unsigned n = 1;
  std::string format = "table";
};

int run_oracle(const OracleArgs& args) {
  const bool harer_zagier = args.formula == "hz";
  mapenum::RationalPolynomial poly =
      harer_zagier ? mapenum::harer_zagier(args.n) : mapenum::goulden_jackson(args.n);
  auto counts = harer_zagier ? mapenum::harer_zagier_genus_counts(args.n)
                             : mapenum::goulden_jackson_chi_counts(args.n);
  const char* key = harer_zagier ? "g" : "chi";
  const char* name = harer_zagier ? "G" : "F";

  if (args.format == "json") {
    std::ostringstream coeffs;
    coeffs << "{";
    bool first = true;
    for (auto [bin, count] : counts) {
      coeffs << (first ? "" : ",") << '"' << bin << "\":" << count;
      first = false;
    }
    coeffs << "}";
    std::ostringstream polynomial;
    polynomial << "[";
    for (int k = 0; k <= poly.degree(); ++k) {
      if (k) polynomial << ",";
      polynomial << '"' << poly.coefficient(k) << '"';
    }
    polynomial << "]";
    std::cout << "{\"formula\":\"" << args.formula << "\",\"n\":" << args.n
              << ",\"bin_key\":\"" << key << "\",\"coefficients\":" << coeffs.str()
              << ",\"polynomial\":" << polynomial.str() << "}\n";
  } else {
    std::cout << name << "_" << args.n << "(N) = " << poly.to_string() << '\n';
    for (auto [bin, count] : counts)
      std::cout << key << '=' << bin << ": " << count << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t max_edges = 8;
  unsigned threads = default_threads();
};

class VerifyReporter {
public:
  void check(const std::string& name, const std::string& expected,
             const std::string& actual) {
    bool ok = expected == actual;
    std::cout << (ok ? "ok   " : "FAIL ") << name << "  expected=" << expected
              << " actual=" << actual << '\n';
    if (!ok) ++failures_;
    ++checks_;
  }

  template <typename T>
  void check_eq(const std::string& name, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    check(name, e.str(), a.str());
  }

  int failures() const { return failures_; }
  int checks() const { return checks_; }

private:
  int failures_ = 0;
  int checks_ = 0;
};

std::string bins_to_string(const std::map<int, std::uint64_t>& bins) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [bin, count] : bins) {
    out << (first ? "" : ",") << bin << ':' << count;
    first = false;
  }
  out << '}';
  return out.str();
}

void verify_paper_tables(const VerifyArgs& args, VerifyReporter& reporter) {
  for (const auto& fixture : mapenum::all_oriented_fixtures()) {
    auto profile = fixture.profile();
    if (profile.edge_count() > args.max_edges) continue;
    std::map<int, std::uint64_t> expected;
    for (std::size_t g = 0; g < fixture.genus_counts.size(); ++g)
      expected[static_cast<int>(g)] = fixture.genus_counts[g];
    auto histogram = mapenum::enumerate_oriented(profile, args.threads);
    reporter.check("oriented " + profile.canonical_text(), bins_to_string(expected),
                   bins_to_string(histogram.bins.bins));
  }
}

void verify_oracles(const VerifyArgs& args, VerifyReporter& reporter) {
  // Closed forms against the embedded tables (pure arithmetic).
  for (const auto& fixture : mapenum::one_vertex_fixtures()) {
    unsigned n = static_cast<unsigned>(fixture.edges());
    std::map<int, std::uint64_t> expected;
    for (std::size_t g = 0; g < fixture.genus_counts.size(); ++g)
      expected[static_cast<int>(g)] = fixture.genus_counts[g];
    reporter.check("harer-zagier n=" + std::to_string(n), bins_to_string(expected),
                   bins_to_string(mapenum::harer_zagier_genus_counts(n)));
  }
  // Closed forms against the enumerators.
  for (unsigned n = 1; n <= std::min<std::uint64_t>(args.max_edges, 8); ++n) {
    auto profile = mapenum::DegreeProfile({{2 * n, 1}});
    auto histogram = mapenum::enumerate_oriented(profile, args.threads);
    reporter.check("enumerate vs harer-zagier n=" + std::to_string(n),
                   bins_to_string(mapenum::harer_zagier_genus_counts(n)),
                   bins_to_string(histogram.bins.bins));
  }
  for (unsigned n = 1; n <= std::min<std::uint64_t>(args.max_edges, 6); ++n) {
    auto profile = mapenum::DegreeProfile({{2 * n, 1}});
    auto histogram = mapenum::enumerate_unoriented(profile, args.threads);
    reporter.check("enumerate vs goulden-jackson n=" + std::to_string(n),
                   bins_to_string(mapenum::goulden_jackson_chi_counts(n)),
                   bins_to_string(histogram.bins.bins));
  }
}

// Every degree multiset with the given dart total.
void profiles_with_darts(unsigned darts, unsigned max_degree,
                         std::map<unsigned, unsigned>& current,
                         std::vector<mapenum::DegreeProfile>& out) {
  if (darts == 0) {
    if (!current.empty()) out.push_back(mapenum::DegreeProfile(current));
    return;
  }
  for (unsigned d = std::min(darts, max_degree); d >= 1; --d) {
    ++current[d];
    profiles_with_darts(darts - d, d, current, out);
    if (--current[d] == 0) current.erase(d);
  }
}

void verify_wick(VerifyReporter& reporter) {
  std::vector<mapenum::DegreeProfile> profiles;
  for (unsigned darts = 2; darts <= 8; darts += 2) {
    std::map<unsigned, unsigned> scratch;
    profiles_with_darts(darts, darts, scratch, profiles);
  }
  for (const auto& profile : profiles) {
    std::uint64_t edges = profile.edge_count();
    auto oriented = mapenum::enumerate_oriented_moments(profile);
    auto unoriented = mapenum::enumerate_unoriented_moments(profile);
    for (unsigned dim = 1; dim <= 3; ++dim) {
      mapenum::MomentSpec spec{profile, dim};
      reporter.check_eq("gue " + profile.canonical_text() + " N=" + std::to_string(dim),
                        mapenum::gue_moment(spec),
                        mapenum::face_power_sum(oriented, dim, edges));
      reporter.check_eq("goe " + profile.canonical_text() + " N=" + std::to_string(dim),
                        mapenum::goe_moment(spec),
                        mapenum::face_power_sum(unoriented, dim, edges));
    }
  }
}

int run_verify(const VerifyArgs& args) {
  VerifyReporter reporter;
  if (args.suite == "paper-tables" || args.suite == "all")
    verify_paper_tables(args, reporter);
  if (args.suite == "oracles" || args.suite == "all") verify_oracles(args, reporter);
  if (args.suite == "wick" || args.suite == "all") verify_wick(reporter);
  std::cout << reporter.checks() - reporter.failures() << "/" << reporter.checks()
            << " checks passed\n";
  return reporter.failures() == 0 ? 0 : 1;
}

struct WickArgs {
  std::string degrees;
  unsigned dimension = 2;
  std::string ensemble = "gue";
};

int run_wick(const WickArgs& args) {
  mapenum::DegreeProfile profile = mapenum::DegreeProfile::parse(args.degrees);
  mapenum::MomentSpec spec{profile, args.dimension};
  mapenum::BigRational moment = args.ensemble == "goe" ? mapenum::goe_moment(spec)
                                                       : mapenum::gue_moment(spec);
  std::cout << args.ensemble << " moment " << profile.canonical_text()
            << " N=" << args.dimension << " = " << moment << '\n';
  if (profile.total_darts() % 2 == 0) {
    auto histogram = args.ensemble == "goe"
                         ? mapenum::enumerate_unoriented_moments(profile)
                         : mapenum::enumerate_oriented_moments(profile);
    std::cout << "face power sum = "
              << mapenum::face_power_sum(histogram, args.dimension,
                                         profile.edge_count())
              << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of labeled connected maps by surface type"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand("enumerate", "Count maps for a degree profile");
  cmd_enum->add_option("--mode", enum_args.mode, "oriented or unoriented")
      ->check(CLI::IsMember({"oriented", "unoriented"}))
      ->capture_default_str();
  cmd_enum->add_option("--degrees", enum_args.degrees,
                       "vertex degrees, e.g. '3,3,4' or '3:2,4:1'")
      ->required();
  cmd_enum->add_option("--threads", enum_args.threads, "worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd_enum->add_option("--format", enum_args.format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd_enum->add_flag("--include-disconnected", enum_args.include_disconnected,
                     "bin every matching by face count instead");
  cmd_enum->add_flag("--force", enum_args.force, "run even past the workload guard");
  cmd_enum->add_flag("--quiet", enum_args.quiet, "suppress progress output");

  OracleArgs oracle_args;
  auto* cmd_oracle =
      app.add_subcommand("oracle", "Closed-form one-vertex map counts");
  cmd_oracle->add_option("--formula", oracle_args.formula, "hz or gj")
      ->check(CLI::IsMember({"hz", "gj"}))
      ->capture_default_str();
  cmd_oracle->add_option("--n", oracle_args.n, "edge count, n >= 1")
      ->required()
      ->check(CLI::Range(1u, 64u));
  cmd_oracle->add_option("--format", oracle_args.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* cmd_verify =
      app.add_subcommand("verify", "Self-check against embedded results");
  cmd_verify->add_option("--suite", verify_args.suite,
                         "paper-tables, oracles, wick, or all")
      ->check(CLI::IsMember({"paper-tables", "oracles", "wick", "all"}))
      ->capture_default_str();
  cmd_verify->add_option("--max-edges", verify_args.max_edges, "edge budget")
      ->capture_default_str();
  cmd_verify->add_option("--threads", verify_args.threads, "worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  WickArgs wick_args;
  auto* cmd_wick = app.add_subcommand("wick", "Gaussian moment oracle (debug)");
  cmd_wick->group(""); // hidden
  cmd_wick->add_option("--degrees", wick_args.degrees)->required();
  cmd_wick->add_option("--dimension", wick_args.dimension)->check(CLI::Range(1u, 4u));
  cmd_wick->add_option("--ensemble", wick_args.ensemble)
      ->check(CLI::IsMember({"gue", "goe"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_enum->parsed()) return run_enumerate(enum_args);
    if (cmd_oracle->parsed()) return run_oracle(oracle_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_wick->parsed()) return run_wick(wick_args);
  } catch (const mapenum::ProfileError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitBadProfile;
  } catch (const mapenum::OverflowError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitOverflow;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
