#include <sstream>

#include <gtest/gtest.h>

#include "permlab/io.hpp"
#include "support.hpp"

using namespace permlab;

TEST(PmfCsv, WritesHeaderAndPositiveRows) {
  std::ostringstream os;
  io::write_pmf_csv(os, circular_pmf(6));
  EXPECT_EQ(os.str(), "m,numerator,denominator\n0,3,10\n1,2,5\n2,1,8\n3,1,6\n6,1,120\n");
}

TEST(PmfCsv, RoundTrips) {
  for (long n : {1, 5, 30}) {
    std::stringstream ss;
    io::write_pmf_csv(ss, unseparated_pmf(n));
    EXPECT_EQ(io::read_pmf_csv(ss), unseparated_pmf(n));
  }
  std::istringstream bad("m,numerator,denominator\n1,2\n");
  EXPECT_THROW(io::read_pmf_csv(bad), std::invalid_argument);
}

TEST(PmfJson, RoundTrips) {
  const auto pmf = fixed_point_pmf(9);
  const auto j = io::pmf_to_json(pmf);
  EXPECT_EQ(parse_fraction(j["0"].get<std::string>()), parse_fraction("133496/362880"));
  EXPECT_FALSE(j.contains("8"));
  EXPECT_EQ(io::pmf_from_json(io::json::parse(j.dump())), pmf);
}

TEST(ReportJson, ExactFields) {
  const auto r = exact_commutator_report(Permutation::rotation(5, 1), "rho");
  const auto j = io::report_to_json(r);
  EXPECT_EQ(j["method"], "exact");
  EXPECT_EQ(j["descriptor"]["label"], "rho");
  EXPECT_EQ(j["descriptor"]["n"], 5);
  EXPECT_EQ(j["descriptor"]["fixed_points"], 0);
  EXPECT_EQ(j["mean"], "5/4");
  EXPECT_EQ(j["tv"]["reference"], "Poisson(1)");
  EXPECT_FALSE(j.contains("samples"));
  EXPECT_EQ(io::pmf_from_json(j["pmf"]), circular_pmf(5));
}

TEST(ReportJson, MonteCarloFields) {
  const auto r = mc_commutator_pmf(Permutation::rotation(20, 1), 5000, 11, "rho");
  const auto j = io::report_to_json(r);
  EXPECT_EQ(j["method"], "monte-carlo");
  EXPECT_EQ(j["samples"], 5000);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_GT(j["ci"].get<double>(), 0.0);
}

TEST(ReportCsv, SummaryRow) {
  std::ostringstream os;
  io::write_report_csv(os, exact_commutator_report(Permutation::identity(3), "a,b"));
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), io::kReportCsvHeader);
  EXPECT_NE(os.str().find("\"a,b\",3,3,0,exact,0,0,3.0,"), std::string::npos);
}
