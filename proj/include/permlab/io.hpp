#pragma once

// CSV and JSON forms of exact laws and commutator reports.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/commutator.hpp"
#include "permlab/exact_dist.hpp"
#include "permlab/numeric.hpp"

namespace permlab::io {

using nlohmann::json;

inline constexpr const char* kPmfCsvHeader = "m,numerator,denominator";

/// Header line, then one "m,numerator,denominator" row per outcome with positive mass.
inline void write_pmf_csv(std::ostream& os, const ExactPmf& pmf) {
  os << kPmfCsvHeader << '\n';
  for (std::size_t m = 0; m < pmf.size(); ++m) {
    if (pmf[m] == 0) continue;
    os << m << ',' << numerator(pmf[m]) << ',' << denominator(pmf[m]) << '\n';
  }
}

inline ExactPmf read_pmf_csv(std::istream& is) {
  std::string line;
  std::vector<Rational> probs;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header && line == kPmfCsvHeader) {
      header = false;
      continue;
    }
    header = false;
    std::stringstream ss(line);
    std::string m, num, den;
    if (!std::getline(ss, m, ',') || !std::getline(ss, num, ',') || !std::getline(ss, den))
      throw std::invalid_argument("malformed pmf row '" + line + "'");
    const auto idx = static_cast<std::size_t>(std::stoul(m));
    if (idx >= probs.size()) probs.resize(idx + 1, Rational(0));
    probs[idx] = parse_fraction(num + "/" + den);
  }
  return ExactPmf(std::move(probs));
}

/// {"m": "num/den"} over outcomes with positive mass.
inline json pmf_to_json(const ExactPmf& pmf) {
  json j = json::object();
  for (std::size_t m = 0; m < pmf.size(); ++m)
    if (pmf[m] != 0) j[std::to_string(m)] = to_fraction_string(pmf[m]);
  return j;
}

inline ExactPmf pmf_from_json(const json& j) {
  std::vector<Rational> probs;
  for (const auto& [key, value] : j.items()) {
    const auto idx = static_cast<std::size_t>(std::stoul(key));
    if (idx >= probs.size()) probs.resize(idx + 1, Rational(0));
    probs[idx] = parse_fraction(value.get<std::string>());
  }
  return ExactPmf(std::move(probs));
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline json report_to_json(const CommutatorReport& r) {
  json j;
  j["descriptor"] = {{"label", r.eta.label},
                     {"n", r.eta.n},
                     {"fixed_points", r.eta.fixed_points},
                     {"two_cycles", r.eta.two_cycles},
                     {"cycle_type", r.eta.cycle_type.lengths}};
  j["method"] = to_string(r.method);
  if (r.method == Method::monte_carlo) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  j["pmf"] = pmf_to_json(r.pmf);
  j["mean"] = to_fraction_string(r.mean);
  j["mean_decimal"] = to_double(to_real(r.mean));
  j["tv"] = {{"reference", r.tv.reference},
             {"distance", to_double(r.tv.distance)},
             {"tail_contribution", to_double(r.tv.tail_contribution)}};
  j["ci"] = to_double(r.ci_half_width);
  return j;
}

inline constexpr const char* kReportCsvHeader = "label,n,fixed_points,two_cycles,method,samples,seed,mean,tv,ci";

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline void write_report_csv(std::ostream& os, const CommutatorReport& r, bool header = true) {
  if (header) os << kReportCsvHeader << '\n';
  os << csv_field(r.eta.label) << ',' << r.eta.n << ',' << r.eta.fixed_points << ',' << r.eta.two_cycles << ','
     << to_string(r.method) << ',' << r.samples << ',' << r.seed << ',' << to_decimal_string(to_real(r.mean)) << ','
     << to_decimal_string(r.tv.distance) << ',' << to_decimal_string(r.ci_half_width) << '\n';
}

}  // namespace permlab::io
