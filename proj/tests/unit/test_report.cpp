#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tscale/report.hpp"
#include "tscale/scenario.hpp"

using namespace tscale;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const char* name) { return slurp(std::string(TSCALE_GOLDEN_DIR) + "/" + name); }

VerifyScenario closed_form() { return load_verify_scenario(std::string(TSCALE_GOLDEN_DIR) + "/closed_form.config.json"); }

}  // namespace

TEST(Report, VerifyCsvGolden) {
  const auto sc = closed_form();
  const auto summary = run_verification(sc.instances);
  EXPECT_EQ(render_verify_csv(summary), golden("closed_form.csv"));
}

TEST(Report, VerifyJsonGolden) {
  const auto sc = closed_form();
  const auto summary = run_verification(sc.instances);
  EXPECT_EQ(render_verify_json(summary, sc.instances.count, sc.instances.variants),
            golden("closed_form.json"));
}

TEST(Report, ConvergeGoldens) {
  const auto sc = load_converge_scenario(std::string(TSCALE_GOLDEN_DIR) + "/converge_square.config.json");
  const auto rows = run_convergence(sc.study);
  EXPECT_EQ(render_converge_csv(rows), golden("converge_square.csv"));
  EXPECT_EQ(render_converge_json(sc.study, rows), golden("converge_square.json"));
}

TEST(Report, CsvHeaders) {
  EXPECT_STREQ(kVerifyCsvHeader, "instance,t1,t2,witness,bound,slack");
  EXPECT_STREQ(kConvergeCsvHeader, "h,max_error,observed_order");
}

TEST(Report, ShortestRoundTripNumbers) {
  const std::vector<ConvergenceRow> rows{{0.1, 1.0 / 3.0, std::nullopt}, {0.05, 1e-300, 2.0}};
  EXPECT_EQ(render_converge_csv(rows),
            "h,max_error,observed_order\n0.1,0.3333333333333333,\n0.05,1e-300,2\n");
}
