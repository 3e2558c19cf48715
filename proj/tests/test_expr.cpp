#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "nullcone/error.hpp"
#include "nullcone/expr.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/sampling.hpp"

using namespace nullcone;

namespace {

double ev(const std::string& src, ChartPoint p = {}) { return eval_expr(parse_expr(src), p); }

Error parse_error(const std::string& src) {
  try {
    parse_expr(src);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << src << "'";
  return Error(ErrorCode::InvalidArgument, "none");
}

}  // namespace

TEST(ParseExpr, Examples) {
  EXPECT_DOUBLE_EQ(ev("1 + 2*3"), 7.0);
  EXPECT_DOUBLE_EQ(ev("(1 + 2)*3"), 9.0);
  EXPECT_DOUBLE_EQ(ev("x1*x2 - x3", {2, 3, 4}), 2.0);
  EXPECT_DOUBLE_EQ(ev("sin(pi/2)"), 1.0);
  EXPECT_DOUBLE_EQ(ev("sqrt(16) + exp(0) + log(1)"), 5.0);
  EXPECT_DOUBLE_EQ(ev("1.5e2"), 150.0);
  EXPECT_NEAR(ev("tan(x1)", {0.3, 0, 0}), std::tan(0.3), 1e-15);
}

TEST(ParseExpr, UnaryMinusBindsLooserThanPower) {
  EXPECT_DOUBLE_EQ(ev("-x1^2", {3, 0, 0}), -9.0);
  EXPECT_DOUBLE_EQ(ev("(-x1)^2", {3, 0, 0}), 9.0);
  EXPECT_DOUBLE_EQ(ev("2^-1"), 0.5);
}

TEST(ParseExpr, PowerIsRightAssociative) { EXPECT_DOUBLE_EQ(ev("2^3^2"), 512.0); }

TEST(ParseExpr, SubtractionAndDivisionAreLeftAssociative) {
  EXPECT_DOUBLE_EQ(ev("10 - 4 - 3"), 3.0);
  EXPECT_DOUBLE_EQ(ev("12 / 3 / 2"), 2.0);
}

TEST(ParseExpr, UnknownSymbolReportsOffset) {
  const Error e = parse_error("x4 + 1");
  EXPECT_EQ(e.code(), ErrorCode::Parse);
  ASSERT_TRUE(e.offset().has_value());
  EXPECT_EQ(*e.offset(), 0u);
  const Error f = parse_error("1 + foo(x1)");
  EXPECT_EQ(f.code(), ErrorCode::Parse);
  EXPECT_EQ(*f.offset(), 4u);
}

TEST(ParseExpr, NonConstantExponentRejected) {
  const Error e = parse_error("x1^x2");
  EXPECT_EQ(e.code(), ErrorCode::Parse);
  EXPECT_EQ(*e.offset(), 3u);
  EXPECT_NO_THROW(parse_expr("x1^(2*pi)"));
}

TEST(ParseExpr, MalformedInputRejected) {
  for (const char* bad : {"", "1 +", "(x1", "x1)", "sin x1", "1 2", "*3", "sin()", "3 $ 4"}) {
    const Error e = parse_error(bad);
    EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
  }
}

TEST(EvalExpr, DomainErrorsCarryOffsets) {
  const auto eval_code = [](const std::string& src, ChartPoint p) {
    try {
      eval_expr(parse_expr(src), p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(eval_code("1/x1", {0, 0, 0}), ErrorCode::Eval);
  EXPECT_EQ(eval_code("log(x1)", {-1, 0, 0}), ErrorCode::Eval);
  EXPECT_EQ(eval_code("sqrt(x1)", {-1, 0, 0}), ErrorCode::Eval);
  EXPECT_EQ(eval_code("x1^0.5", {-1, 0, 0}), ErrorCode::Eval);
  EXPECT_EQ(eval_code("exp(x1)", {1000, 0, 0}), ErrorCode::Eval);
  try {
    eval_expr(parse_expr("2 + 1/x1"), {});
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.offset().has_value());
    EXPECT_EQ(*e.offset(), 5u);
  }
  EXPECT_DOUBLE_EQ(ev("x1^2", {-3, 0, 0}), 9.0);
}

TEST(DiffExpr, Examples) {
  const Expr e = parse_expr("sin(x1)^2");
  EXPECT_NEAR(eval_expr(diff_expr(e, 0), {0.3, 0, 0}), std::sin(0.6), 1e-15);
  EXPECT_TRUE(diff_expr(e, 1).is_zero());
  EXPECT_TRUE(diff_expr(parse_expr("-1"), 2).is_zero());
  EXPECT_NEAR(eval_expr(diff_expr(parse_expr("-1/sin(x3)^4"), 2), {0, 0, 1.1}),
              4.0 * std::cos(1.1) / std::pow(std::sin(1.1), 5), 1e-12);
  EXPECT_NEAR(eval_expr(diff_expr(parse_expr("x1*x2^3"), 1), {2, 3, 0}), 54.0, 1e-12);
  EXPECT_NEAR(eval_expr(diff_expr(parse_expr("log(x1)"), 0), {4, 0, 0}), 0.25, 1e-15);
  EXPECT_NEAR(eval_expr(diff_expr(parse_expr("tan(x1)"), 0), {0.4, 0, 0}),
              1.0 / std::pow(std::cos(0.4), 2), 1e-14);
}

TEST(DiffExpr, AgreesWithFiniteDifferencesOnBuiltinMetrics) {
  Rng rng(31);
  for (const auto& name : builtin_metric_names()) {
    const DiagonalMetric m = builtin_metric(name);
    for (int s = 0; s < 100; ++s) {
      const ChartPoint p = random_point(rng, m.sampling_box());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double h = 1e-5 * (1 + std::abs(p[j]));
          ChartPoint a = p, b = p;
          a[j] += h;
          b[j] -= h;
          const double fd = (eval_expr(m.component(i), a) - eval_expr(m.component(i), b)) / (2 * h);
          const double exact = eval_expr(m.partial(i, j), p);
          EXPECT_NEAR(exact, fd, 1e-6 * (1 + std::abs(exact))) << name << " g" << i << " d" << j;
        }
    }
  }
}

TEST(DiffExpr, AgreesWithFiniteDifferencesOnMixedExpressions) {
  const std::vector<std::string> corpus = {
      "x1^3*cos(x2) - exp(x3/2)", "sqrt(1 + x1^2)*sin(x2*x3)", "log(2 + cos(x1))/(1 + x2^2)",
      "tan(x1/4)^2 + x3", "(x1 - x2)^-2"};
  Rng rng(32);
  for (const auto& src : corpus) {
    const Expr e = parse_expr(src);
    for (int s = 0; s < 100; ++s) {
      const ChartPoint p{uniform(rng, 0.5, 1.5), uniform(rng, -1.5, -0.5), uniform(rng, -1, 1)};
      for (int j = 0; j < 3; ++j) {
        const double h = 1e-5;
        ChartPoint a = p, b = p;
        a[j] += h;
        b[j] -= h;
        const double fd = (eval_expr(e, a) - eval_expr(e, b)) / (2 * h);
        const double exact = eval_expr(diff_expr(e, j), p);
        EXPECT_NEAR(exact, fd, 1e-6 * (1 + std::abs(exact))) << src;
      }
    }
  }
}

TEST(ToString, RoundTripsCorpus) {
  const std::vector<std::string> corpus = {
      "1", "x1", "-x1", "pi", "x1 + x2", "x1 - x2 - x3", "x1 - (x2 - x3)", "x1*x2/x3",
      "x1/(x2*x3)", "x1/(x2/x3)", "-x1^2", "(-x1)^2", "x1^2^3", "(x1^2)^3", "2^-1",
      "x1^(-1/2)", "-(x1 + x2)", "-(x1*x2)", "sin(x1)^2", "sin(x1^2)", "cos(x2)*sin(x3)",
      "exp(-x3)", "log(1 + x1)", "sqrt(x1^2 + x2^2)", "tan(x1/2)", "-1/sin(x3)^4",
      "1/(1 + x1^2)", "x1 - -x2", "x1*-x2", "(x1 + x2)*(x1 - x2)", "x1 + x2*x3",
      "(x1 + x2)*x3", "x1/x2*x3", "x1/(x2 + x3)", "2*pi*x1", "-2.5e-3*x2",
      "(x1 - x2)^-2", "x1^0.5", "sin(cos(tan(x1)))", "exp(log(x2))", "-(-x1)",
      "x1 - (-x2)", "3 - 2 + 1", "3 - (2 + 1)", "x1*(x2*x3)", "(x1*x2)*x3",
      "-sin(x1)*cos(x2)", "sqrt(-x3)", "x1^2*x2^2*x3^2", "(1 - x1)/(1 + x1)"};
  ASSERT_EQ(corpus.size(), 50u);
  const ChartPoint p{0.7, 1.3, -0.4};
  for (const auto& src : corpus) {
    const Expr e = parse_expr(src);
    const std::string printed = to_string(e);
    const Expr again = parse_expr(printed);
    EXPECT_EQ(to_string(again), printed) << src;
    double a = 0, b = 0;
    bool ok = true;
    try {
      a = eval_expr(e, p);
      b = eval_expr(again, p);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) EXPECT_NEAR(a, b, 1e-14 * (1 + std::abs(a))) << src << " -> " << printed;
  }
}

TEST(ToString, DerivativesPrintAndReparse) {
  for (const auto& name : builtin_metric_names()) {
    const DiagonalMetric m = builtin_metric(name);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const std::string s = to_string(m.partial(i, j));
        EXPECT_EQ(to_string(parse_expr(s)), s);
      }
  }
}
