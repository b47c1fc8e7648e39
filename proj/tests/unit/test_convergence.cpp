#include <gtest/gtest.h>

#include "tscale/convergence.hpp"
#include "tscale/error.hpp"

using namespace tscale;

namespace {

ConvergenceSpec study(ConvergenceOp op, const char* fn) {
  ConvergenceSpec s;
  s.operation = op;
  s.scale = ScaleSpec::parse("dense:0..1,0.01");
  s.function = Function1D::parse(fn);
  return s;
}

}  // namespace

TEST(Convergence, DerivativeOfSineIsFirstOrder) {
  const auto rows = run_convergence(study(ConvergenceOp::DeltaDerivative, "sin:1,1"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_FALSE(rows[0].observed_order.has_value());
  EXPECT_DOUBLE_EQ(rows[3].h, 0.00125);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    ASSERT_TRUE(rows[k].observed_order.has_value());
    EXPECT_GE(*rows[k].observed_order, 0.9);
    EXPECT_LE(*rows[k].observed_order, 1.1);
  }
}

TEST(Convergence, ExponentialIsFirstOrder) {
  const auto rows = run_convergence(study(ConvergenceOp::Exponential, "const:1"));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GE(*rows[k].observed_order, 0.9);
    EXPECT_LE(*rows[k].observed_order, 1.1);
  }
  for (const auto& r : rows) EXPECT_LE(r.max_error, 3.0 * r.h);
}

TEST(Convergence, IntegralIsFirstOrder) {
  const auto rows = run_convergence(study(ConvergenceOp::Integral, "exp:1,1"));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GE(*rows[k].observed_order, 0.9);
    EXPECT_LE(*rows[k].observed_order, 1.1);
  }
}

TEST(Convergence, ConstantFunctionHasNoError) {
  for (auto op : {ConvergenceOp::DeltaDerivative, ConvergenceOp::Integral}) {
    for (const auto& r : run_convergence(study(op, "const:2"))) {
      EXPECT_EQ(r.max_error, 0.0);
      EXPECT_FALSE(r.observed_order.has_value());
    }
  }
}

TEST(Convergence, RejectsNonDenseScale) {
  auto s = study(ConvergenceOp::DeltaDerivative, "sin:1,1");
  s.scale = ScaleSpec::parse("integer:0..5");
  EXPECT_THROW(run_convergence(s), ConfigError);
  EXPECT_THROW(parse_convergence_op("laplace"), ConfigError);
}
