#include "oyqg/cli/suites.hpp"

#include <gtest/gtest.h>

using namespace oyqg;
using namespace oyqg::cli;

namespace {

template <class F>
void expect_no_failures(const std::vector<CheckRecord>& recs, const std::string& label) {
  for (const auto& r : recs) {
    EXPECT_NE(r.status, Status::Fail) << label << " " << r.name << ": " << r.witness;
    std::cout << label << " " << r.name << " " << status_name(r.status) << " " << r.ms << "ms\n";
  }
}

void run_exact(const std::string& type, const std::string& suite) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  QuantumGroup<ExactField> U(c, ExactField(vs), default_max_height(type));
  SuiteRunner<ExactField> S(U, SuiteParams{});
  expect_no_failures<ExactField>(S.run(suite), type + " exact");
}

void run_mod(const std::string& type, const std::string& suite) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  QuantumGroup<ModField> U(c, ModField(vs, kDefaultPrimes[0], 7), default_max_height(type));
  SuiteRunner<ModField> S(U, SuiteParams{});
  expect_no_failures<ModField>(S.run(suite), type + " modular");
}

}  // namespace

TEST(Suites, A1AllExact) { run_exact("A1", "all"); }
TEST(Suites, A2AllExact) { run_exact("A2", "all"); }
TEST(Suites, A2AllModular) { run_mod("A2", "all"); }
TEST(Suites, B2HopfPairingExact) {
  run_exact("B2", "hopf");
  run_exact("B2", "pairing");
}
