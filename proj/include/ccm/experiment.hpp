#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccm/genmat.hpp"

namespace ccm {

/// One distribution parameterisation in an experiment.
struct ExperimentCase {
  std::string parameter;  // value shown in the CSV, e.g. "64"
  BitLengthDist dist;
};

struct ExperimentSpec {
  std::string name;  // e.g. "table3" or "custom"
  std::vector<ExperimentCase> cases;
  std::vector<std::size_t> sizes{100, 10'000, 1'000'000};
  std::size_t replicates = 1'000;
  std::uint64_t seed = 1;
  KPolicy k_policy = KPolicy::kFixed7;
};

struct ExperimentRow {
  std::string parameter;
  std::string distribution;
  std::size_t size = 0;
  ReplicateStats stats;
};

/// Preset cases for the efficiency tables:
///   3: uniform(1, n),       n in {1, 8, 16, 32, 64}
///   4: binomial(n, 0.5),    n in {1, 8, 16, 32, 64}
///   5: poisson(lambda),     lambda in {1, 8, 16, 32}
/// Throws kInvalidArgument for any other table number.
std::vector<ExperimentCase> table_cases(int table);

/// Rows in spec order: cases outer, sizes inner.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

void write_experiment_csv(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows,
                          std::ostream& out);

/// Parameter grid over beta shapes. With w > 0 all four shapes of the mixture
/// vary; with w == 0 a single Beta(alpha, beta) is swept over two parameters.
struct SweepSpec {
  double lo = 1;
  double hi = 64;
  double step = 4;
  double w = 0.5;
  std::size_t sample_size = 10'000;
  std::uint64_t seed = 1;
  KPolicy k_policy = KPolicy::kFixed7;
};

struct SweepPoint {
  double alpha1 = 0, beta1 = 0, alpha2 = 0, beta2 = 0;
  double mean_bitlen = 0;
  double eta1 = 0;
  double eta2 = 0;
  double d = 0;
  bool sm_favored() const { return d >= 0; }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::size_t sm_favored = 0;
  double sm_share() const {
    return points.empty() ? 0.0 : static_cast<double>(sm_favored) / static_cast<double>(points.size());
  }
};

/// Grid values lo, lo + step, ... up to and including hi.
std::vector<double> sweep_axis(const SweepSpec& spec);

/// Evaluates every grid point on `sample_size` sampled bit-lengths. Point g
/// uses derive_seed(seed, g); eta1 uses the sample's largest bit-length.
SweepResult run_sweep(const SweepSpec& spec);

void write_sweep_csv(const SweepSpec& spec, const SweepResult& result, std::ostream& out);

/// SM vs VLB on matrices whose elements all share bit-length b, b = 1..64,
/// with the VLB prefix derived from b.
struct ConstantBitlenRow {
  unsigned b;
  double eta1;
  double eta2;
  double d;
};

std::vector<ConstantBitlenRow> constant_bitlen_comparison();

void write_constant_bitlen_csv(const std::vector<ConstantBitlenRow>& rows, std::ostream& out);

}  // namespace ccm
