#include "test_support.hpp"

using namespace vbcorr;

TEST(Verify, AllSuitesPass) {
  const auto results = run_verification(7, 200);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.name << " residual " << r.max_residual;
}

TEST(Verify, EveryModuleIsCovered) {
  const auto results = run_verification(1, 1);
  for (const char* prefix : {"kinematics.", "spin1rep.", "states.", "observables.", "correlators.", "bell."}) {
    const bool found = std::any_of(results.begin(), results.end(),
                                   [&](const SuiteResult& r) { return r.name.rfind(prefix, 0) == 0; });
    EXPECT_TRUE(found) << prefix;
  }
  for (const auto& r : results) EXPECT_GE(r.cases, 1) << r.name;
}

TEST(Verify, ReportIsDeterministic) {
  EXPECT_EQ(format_report(run_verification(42, 50)), format_report(run_verification(42, 50)));
}

TEST(Verify, RejectsZeroTrials) { EXPECT_THROW(run_verification(1, 0), InvalidInput); }
