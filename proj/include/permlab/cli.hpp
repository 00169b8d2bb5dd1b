#pragma once

// Command implementations behind the permlab executable. Each command writes
// to the given streams and returns the process exit code; argument parsing
// lives in tools/permlab.cpp.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlab/bijections.hpp"
#include "permlab/commutator.hpp"
#include "permlab/exact_dist.hpp"
#include "permlab/generators.hpp"
#include "permlab/io.hpp"
#include "permlab/permutation.hpp"
#include "permlab/random.hpp"
#include "permlab/verify.hpp"

namespace permlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr const char* kSeedEnvVar = "PERMLAB_SEED";
/// Stream id reserved for the random conjugation of eta, apart from sampling streams.
inline constexpr std::uint64_t kEtaStream = 0xE7A;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + s + "' (expected text, csv or json)");
}

struct CommandConfig {
  std::string subcommand;
  long n = 0;  // 0: not given
  long h = 1;
  long nmax = 15;
  std::string stat = "unseparated";
  std::string what = "pmf";
  std::string suite = "all";
  std::string chain = "uniform";
  std::string eta = "rho";
  bool conjugate = false;
  std::string mode = "exact";
  std::uint64_t samples = 100000;
  std::uint64_t count = 1;
  bool trajectory = false;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::text;
  std::string output_path;
  // trace
  std::string sigma;
  std::string ks;
  std::string peel;
  std::string perm;
};

/// kDefaultSeed unless the environment variable holds a valid integer.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return kDefaultSeed;
}

// ---------------------------------------------------------------------------
// eta mini-grammar: identity | rho | two-cycles:m | type:l1+l2+... | a,b,c,...

struct ParsedEta {
  Permutation eta;
  std::string label;
};

inline ParsedEta parse_eta(const std::string& text, long n, bool conjugate_randomly, std::uint64_t seed) {
  auto need_n = [&](const char* what) {
    if (n < 1) throw UsageError(std::string("--n is required for eta '") + what + "'");
    return static_cast<std::size_t>(n);
  };
  auto check_n = [&](std::size_t implied) {
    if (n != 0 && static_cast<std::size_t>(n) != implied)
      throw UsageError("--n " + std::to_string(n) + " conflicts with eta of size " + std::to_string(implied));
  };

  std::optional<Permutation> eta;
  if (text == "identity") {
    eta = Permutation::identity(need_n("identity"));
  } else if (text == "rho") {
    eta = Permutation::rotation(need_n("rho"), 1);
  } else if (text.rfind("two-cycles:", 0) == 0) {
    long m = 0;
    try {
      m = std::stol(text.substr(11));
    } catch (const std::exception&) {
      throw UsageError("bad eta '" + text + "'");
    }
    if (m < 1) throw UsageError("two-cycles:m needs m >= 1");
    check_n(static_cast<std::size_t>(2 * m));
    std::vector<std::vector<int>> cs;
    for (int i = 1; i <= m; ++i) cs.push_back({i, static_cast<int>(m) + i});
    eta = Permutation::from_cycles(static_cast<std::size_t>(2 * m), cs);
  } else if (text.rfind("type:", 0) == 0) {
    std::vector<int> lengths;
    std::stringstream ss(text.substr(5));
    std::string part;
    while (std::getline(ss, part, '+')) {
      try {
        lengths.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw UsageError("bad cycle type '" + text + "'");
      }
      if (lengths.back() < 1) throw UsageError("cycle lengths must be positive");
    }
    if (lengths.empty()) throw UsageError("empty cycle type");
    std::vector<std::vector<int>> cs;
    int next = 1;
    for (int len : lengths) {
      std::vector<int> c;
      for (int i = 0; i < len; ++i) c.push_back(next++);
      cs.push_back(std::move(c));
    }
    check_n(static_cast<std::size_t>(next - 1));
    eta = Permutation::from_cycles(static_cast<std::size_t>(next - 1), cs);
  } else {
    try {
      eta = parse_permutation(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad eta '" + text + "': " + e.what());
    }
    check_n(eta->size());
  }
  std::string label = text;
  if (conjugate_randomly) {
    RandomSource rng(seed, kEtaStream);
    eta = conjugacy_sampler(*eta, rng);
    label += " (conjugated)";
  }
  return {*eta, label};
}

// ---------------------------------------------------------------------------

inline void write_pmf(std::ostream& os, const ExactPmf& pmf, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: io::write_pmf_csv(os, pmf); break;
    case OutputFormat::json: os << io::pmf_to_json(pmf).dump(2) << '\n'; break;
    case OutputFormat::text:
      for (std::size_t m = 0; m < pmf.size(); ++m)
        if (pmf[m] != 0) os << m << ", " << to_fraction_string(pmf[m]) << ", " << to_decimal_string(to_real(pmf[m])) << '\n';
      break;
  }
}

inline void require_n(const CommandConfig& c) {
  if (c.n < 1) throw UsageError("--n must be given and >= 1");
}

/// Exact law tables for unseparated | fixed | circular | shifted.
inline int cmd_dist(const CommandConfig& c, std::ostream& out) {
  require_n(c);
  auto scalar = [&](const std::string& key, const std::string& value) {
    if (c.format == OutputFormat::json) out << io::json{{"n", c.n}, {key, value}}.dump() << '\n';
    else out << value << '\n';
  };
  if (c.what == "empty-count") {
    if (c.stat != "circular") throw UsageError("--what empty-count applies to --stat circular");
    scalar("empty_count", theta_empty_count(c.n).str());
    return kOk;
  }
  if (c.what == "derangements") {
    if (c.stat != "fixed") throw UsageError("--what derangements applies to --stat fixed");
    scalar("derangements", derangement_count(c.n).str());
    return kOk;
  }
  if (c.what == "zero") {
    if (c.stat != "unseparated") throw UsageError("--what zero applies to --stat unseparated");
    scalar("p0", to_fraction_string(whitworth_zero_prob(c.n)));
    return kOk;
  }
  if (c.what != "pmf") throw UsageError("unknown --what '" + c.what + "'");

  ExactPmf pmf;
  if (c.stat == "unseparated") pmf = unseparated_pmf(c.n);
  else if (c.stat == "fixed") pmf = fixed_point_pmf(c.n);
  else if (c.stat == "circular") pmf = circular_pmf(c.n);
  else if (c.stat == "shifted") {
    if (c.h < 1 || c.h >= c.n) throw UsageError("--h must satisfy 1 <= h < n");
    pmf = shifted_pmf(c.n, c.h);
  } else {
    throw UsageError("unknown statistic '" + c.stat + "' (expected unseparated, fixed, circular or shifted)");
  }
  write_pmf(out, pmf, c.format);
  return kOk;
}

inline constexpr long kVerifyEnumerationCap = 9;
inline constexpr long kVerifyCommutatorCap = 7;

inline int cmd_verify(const CommandConfig& c, std::ostream& out) {
  static const std::vector<std::string> suites{"thm1",     "exchangeability", "bijection", "shifted",
                                               "circular", "identity53",      "chains",    "commutator"};
  const bool all = c.suite == "all";
  if (!all && std::find(suites.begin(), suites.end(), c.suite) == suites.end())
    throw UsageError("unknown suite '" + c.suite + "'");

  auto cap_for = [](const std::string& s) -> long {
    if (s == "chains") return static_cast<long>(kExactChainCap);
    if (s == "commutator") return kVerifyCommutatorCap;
    if (s == "identity53") return 0;
    return kVerifyEnumerationCap;
  };
  const long n = c.n > 0 ? c.n : 6;
  if (!all && c.suite != "identity53" && n > cap_for(c.suite))
    throw UsageError("refusing suite " + c.suite + " at n=" + std::to_string(n) + ": exhaustive cap is n <= " +
                     std::to_string(cap_for(c.suite)));
  if (c.nmax < 1 || c.nmax > 500) throw UsageError("--nmax must be in [1, 500]");

  bool ok = true;
  for (const auto& s : suites) {
    if (!all && s != c.suite) continue;
    const long sn = std::min(n, cap_for(s) == 0 ? n : cap_for(s));
    verify::SuiteResult r;
    const auto un = static_cast<std::size_t>(sn);
    if (s == "thm1") r = verify::unseparated_law(un);
    else if (s == "exchangeability") r = verify::exchangeability(un);
    else if (s == "bijection") r = verify::bijection(un);
    else if (s == "shifted") r = verify::shifted(un);
    else if (s == "circular") r = verify::circular(un);
    else if (s == "identity53") r = verify::derangement_identity(c.nmax);
    else if (s == "chains") r = verify::chains(un);
    else if (s == "commutator") r = verify::commutator(un);
    const std::string scope = s == "identity53" ? "nmax=" + std::to_string(c.nmax) : "n=" + std::to_string(sn);
    out << (r.passed ? "PASS " : "FAIL ") << s << " (" << scope << ")";
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_sample(const CommandConfig& c, std::ostream& out) {
  require_n(c);
  const auto n = static_cast<std::size_t>(c.n);
  RandomSource rng(c.seed);
  std::optional<Permutation> eta;
  if (c.chain == "conjugacy") eta = parse_eta(c.eta, c.n, false, c.seed).eta;
  else if (c.chain != "uniform") {
    try {
      parse_chain(c.chain);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown chain '" + c.chain + "' (expected uniform, insertion, crp, cycle-growth or conjugacy)");
    }
  }
  for (std::uint64_t s = 0; s < c.count; ++s) {
    if (c.chain == "uniform") {
      out << to_string(uniform_permutation(n, rng)) << '\n';
    } else if (c.chain == "conjugacy") {
      out << to_string(conjugacy_sampler(*eta, rng)) << '\n';
    } else {
      const auto path = run_chain(parse_chain(c.chain), n, rng);
      if (c.trajectory) {
        for (const auto& p : path) out << to_string(p) << '\n';
        out << '\n';
      } else {
        out << to_string(path.back()) << '\n';
      }
    }
  }
  return kOk;
}

inline int cmd_commutator(const CommandConfig& c, std::ostream& out) {
  const ParsedEta parsed = parse_eta(c.eta, c.n, c.conjugate, c.seed);
  CommutatorReport report;
  if (c.mode == "exact") {
    if (parsed.eta.size() > kExactCommutatorCap && parsed.eta != Permutation::identity(parsed.eta.size()))
      throw UsageError("refusing exact mode at n=" + std::to_string(parsed.eta.size()) + ": cap is n <= " +
                       std::to_string(kExactCommutatorCap) + " (use --mode mc)");
    report = exact_commutator_report(parsed.eta, parsed.label);
  } else if (c.mode == "mc") {
    if (c.samples < 1) throw UsageError("--samples must be >= 1");
    report = mc_commutator_pmf(parsed.eta, c.samples, c.seed, parsed.label);
  } else {
    throw UsageError("unknown mode '" + c.mode + "' (expected exact or mc)");
  }

  switch (c.format) {
    case OutputFormat::json: out << io::report_to_json(report).dump(2) << '\n'; break;
    case OutputFormat::csv: io::write_report_csv(out, report); break;
    case OutputFormat::text:
      out << "eta: " << report.eta.label << " (n=" << report.eta.n << ", f=" << report.eta.fixed_points
          << ", t=" << report.eta.two_cycles << ")\n";
      out << "method: " << to_string(report.method);
      if (report.method == Method::monte_carlo) out << " (samples=" << report.samples << ", seed=" << report.seed << ")";
      out << '\n';
      out << "mean: " << to_fraction_string(report.mean) << " = " << to_decimal_string(to_real(report.mean)) << '\n';
      out << "tv vs " << report.tv.reference << ": " << to_decimal_string(report.tv.distance);
      if (report.method == Method::monte_carlo) out << " +/- " << to_decimal_string(report.ci_half_width) << " (99%)";
      out << '\n';
      write_pmf(out, report.pmf, OutputFormat::text);
      break;
  }
  return kOk;
}

inline std::string parenthesised(const std::vector<int>& listing) { return "(" + detail::join(listing) + ")"; }

/// Prints the intermediate objects of either bijection.
inline int cmd_trace(const CommandConfig& c, std::ostream& out) {
  const int modes = !c.sigma.empty() + !c.peel.empty() + !c.perm.empty();
  if (modes != 1) throw UsageError("trace needs exactly one of --sigma, --peel or --perm");
  try {
    if (!c.sigma.empty()) {
      const std::vector<int> seed = detail::split_ints(c.sigma);
      const std::vector<int> ks = c.ks.empty() ? std::vector<int>{} : detail::split_ints(c.ks);
      static_cast<void>(CircularPermutation(seed));  // validates
      const auto trace = build_circular_trace(seed, ks);
      for (std::size_t i = 0; i < trace.size(); ++i) out << "sigma_" << i << " = " << parenthesised(trace[i]) << '\n';
      out << "Theta = " << to_string(theta(trace.back())) << '\n';
    } else if (!c.peel.empty()) {
      const std::vector<int> listing = detail::split_ints(c.peel);
      static_cast<void>(CircularPermutation(listing));
      const auto trace = peel_circular_trace(listing);
      for (std::size_t i = 0; i < trace.size(); ++i) {
        out << parenthesised(trace[i]) << "  Theta = " << to_string(theta(trace[i]));
        out << '\n';
      }
    } else {
      const Permutation p = parse_permutation(c.perm);
      const int h = static_cast<int>(c.h);
      if (h < 1 || h >= static_cast<int>(p.size())) throw UsageError("--h must satisfy 1 <= h < n");
      const Permutation rp = compose(Permutation::rotation(p.size(), h), p);
      const Permutation hat = fundamental_transform(rp);
      const Permutation q = inverse(hat);
      IndexSet fixed;
      for (int k : fixed_points(p))
        if (k + h <= static_cast<int>(p.size())) fixed.push_back(k);
      out << "pi = " << to_string(p) << "  " << to_string(canonical_cycle_form(p)) << '\n';
      out << "rho_h pi = " << to_string(rp) << "  " << to_string(canonical_cycle_form(rp)) << '\n';
      out << "hat = " << to_string(hat) << '\n';
      out << "hat^-1 = " << to_string(q) << '\n';
      out << "fixed points in [n-h] = " << to_string(fixed) << '\n';
      out << "shifted successions of hat^-1 = " << to_string(shifted_successions(q, h)) << '\n';
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

/// Runs one subcommand; usage errors become exit code 2 with a message on `err`.
inline int dispatch(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "dist") return cmd_dist(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "sample") return cmd_sample(c, out);
    if (c.subcommand == "commutator") return cmd_commutator(c, out);
    if (c.subcommand == "trace") return cmd_trace(c, out);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    // Domain and range violations from the library are bad input too.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace permlab::cli
