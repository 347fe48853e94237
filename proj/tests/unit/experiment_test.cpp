#include "ccm/experiment.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "ccm/bit_buffer.hpp"

namespace ccm {
namespace {

TEST(Experiment, TablePresets) {
  EXPECT_EQ(table_cases(3).size(), 5u);
  EXPECT_EQ(table_cases(4).size(), 5u);
  EXPECT_EQ(table_cases(5).size(), 4u);
  EXPECT_THROW(table_cases(6), Error);
  const auto t3 = table_cases(3);
  EXPECT_EQ(t3[1].parameter, "8");
  EXPECT_EQ(std::get<UniformBits>(t3[1].dist).b, 8u);
}

TEST(Experiment, CsvIsDeterministic) {
  ExperimentSpec spec{"table4", table_cases(4), {100, 1000}, 20, 7, KPolicy::kFixed7};
  std::ostringstream a, b;
  write_experiment_csv(spec, run_experiment(spec), a);
  write_experiment_csv(spec, run_experiment(spec), b);
  EXPECT_EQ(a.str(), b.str());
  const std::string text = a.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
  EXPECT_EQ(text.rfind("experiment,distribution,parameter,size", 0), 0u);
}

TEST(Experiment, RowOrderIsCasesThenSizes) {
  ExperimentSpec spec{"table5", table_cases(5), {100, 200}, 2, 1, KPolicy::kFixed7};
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].parameter, "1");
  EXPECT_EQ(rows[1].size, 200u);
  EXPECT_EQ(rows[2].parameter, "8");
}

TEST(Sweep, AxisMatchesGrid) {
  SweepSpec spec;
  const auto axis = sweep_axis(spec);
  ASSERT_EQ(axis.size(), 16u);
  EXPECT_EQ(axis.front(), 1);
  EXPECT_EQ(axis.back(), 61);
  spec.step = 0;
  EXPECT_THROW(sweep_axis(spec), Error);
}

TEST(Sweep, SmallGridDeterministic) {
  SweepSpec spec;
  spec.step = 30;  // 1, 31, 61
  spec.sample_size = 500;
  const auto r = run_sweep(spec);
  EXPECT_EQ(r.points.size(), 81u);
  std::ostringstream a, b;
  write_sweep_csv(spec, r, a);
  write_sweep_csv(spec, run_sweep(spec), b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("# sm_favored="), std::string::npos);
  for (const auto& p : r.points) {
    EXPECT_NEAR(p.d, p.eta1 - p.eta2, 1e-12);
    EXPECT_GE(p.mean_bitlen, 1.0);
    EXPECT_LE(p.mean_bitlen, 64.0);
  }
}

TEST(Sweep, SingleBetaGrid) {
  SweepSpec spec;
  spec.w = 0;
  spec.sample_size = 200;
  const auto r = run_sweep(spec);
  EXPECT_EQ(r.points.size(), 256u);
  EXPECT_EQ(r.points[17].alpha1, r.points[17].alpha2);
}

TEST(ConstantBitlen, SmAlwaysWinsBelow64) {
  const auto rows = constant_bitlen_comparison();
  ASSERT_EQ(rows.size(), 64u);
  for (const auto& r : rows) {
    if (r.b < 64) {
      EXPECT_GT(r.d, 0) << r.b;
      EXPECT_DOUBLE_EQ(r.d, bit_length(r.b) / 64.0);
    }
  }
  EXPECT_EQ(rows.back().eta1, 0.0);
}

}  // namespace
}  // namespace ccm
