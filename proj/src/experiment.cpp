#include "ccm/experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ccm/bit_buffer.hpp"
#include "ccm/efficiency.hpp"
#include "ccm/parallel.hpp"

namespace ccm {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

const char* k_policy_name(KPolicy p) { return p == KPolicy::kFixed7 ? "fixed-7" : "derived"; }

}  // namespace

std::vector<ExperimentCase> table_cases(int table) {
  std::vector<ExperimentCase> cases;
  switch (table) {
    case 3:
      for (unsigned n : {1u, 8u, 16u, 32u, 64u})
        cases.push_back({std::to_string(n), UniformBits{1, n}});
      break;
    case 4:
      for (unsigned n : {1u, 8u, 16u, 32u, 64u})
        cases.push_back({std::to_string(n), BinomialBits{n, 0.5}});
      break;
    case 5:
      for (unsigned lambda : {1u, 8u, 16u, 32u})
        cases.push_back({std::to_string(lambda), PoissonTrunc{static_cast<double>(lambda)}});
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "no preset for table " + std::to_string(table));
  }
  return cases;
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.replicates == 0) throw Error(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  std::vector<ExperimentRow> rows;
  for (const auto& c : spec.cases) {
    for (std::size_t size : spec.sizes) {
      rows.push_back({c.parameter, describe(c.dist), size,
                      replicate_efficiency(c.dist, size, spec.replicates, spec.seed,
                                           spec.k_policy)});
    }
  }
  return rows;
}

void write_experiment_csv(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows,
                          std::ostream& out) {
  out << "experiment,distribution,parameter,size,replicates,seed,k_policy,"
         "mean_eta2,sd_eta2,mean_eta1,sd_eta1\n";
  for (const auto& r : rows) {
    out << spec.name << ',' << r.distribution << ',' << r.parameter << ',' << r.size << ','
        << r.stats.replicates << ',' << spec.seed << ',' << k_policy_name(spec.k_policy) << ','
        << fmt("%.6f", r.stats.mean_eta2) << ',' << fmt("%.6f", r.stats.sd_eta2) << ','
        << fmt("%.6f", r.stats.mean_eta1) << ',' << fmt("%.6f", r.stats.sd_eta1) << '\n';
  }
}

std::vector<double> sweep_axis(const SweepSpec& spec) {
  if (!(spec.step > 0) || !(spec.lo > 0) || spec.hi < spec.lo) {
    throw Error(ErrorCode::kInvalidArgument, "sweep needs 0 < lo <= hi and step > 0");
  }
  std::vector<double> axis;
  for (std::size_t i = 0;; ++i) {
    const double v = spec.lo + static_cast<double>(i) * spec.step;
    if (v > spec.hi + 1e-9) break;
    axis.push_back(v);
  }
  return axis;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (!(spec.w >= 0 && spec.w <= 1)) throw Error(ErrorCode::kInvalidArgument, "w must be in [0, 1]");
  if (spec.sample_size == 0) throw Error(ErrorCode::kInvalidArgument, "sample size must be >= 1");
  const std::vector<double> axis = sweep_axis(spec);
  const std::size_t m = axis.size();
  const bool mixture = spec.w > 0;
  const std::size_t total = mixture ? m * m * m * m : m * m;

  SweepResult result;
  result.points.resize(total);
  parallel_for(total, [&](std::size_t g) {
    SweepPoint& p = result.points[g];
    // Last shape parameter varies fastest.
    if (mixture) {
      p.alpha1 = axis[g / (m * m * m)];
      p.beta1 = axis[(g / (m * m)) % m];
      p.alpha2 = axis[(g / m) % m];
      p.beta2 = axis[g % m];
    } else {
      p.alpha1 = p.alpha2 = axis[g / m];
      p.beta1 = p.beta2 = axis[g % m];
    }
    BitLengthSampler sample(BetaMixture{p.alpha1, p.beta1, p.alpha2, p.beta2, spec.w},
                            derive_seed(spec.seed, g));
    std::array<std::uint64_t, kWordBits + 1> counts{};
    for (std::size_t i = 0; i < spec.sample_size; ++i) ++counts[sample()];

    BitLengthHistogram h;
    unsigned max_b = 1;
    std::uint64_t sum = 0;
    for (unsigned b = 1; b <= kWordBits; ++b) {
      if (counts[b] == 0) continue;
      h[b] = counts[b];
      max_b = b;
      sum += std::uint64_t{b} * counts[b];
    }
    const unsigned k = spec.k_policy == KPolicy::kFixed7 ? kWorstCasePrefix : bit_length(max_b);
    p.mean_bitlen = static_cast<double>(sum) / static_cast<double>(spec.sample_size);
    p.eta1 = eta1(max_b);
    p.eta2 = eta2(h, k);
    p.d = compare(h, max_b, k);
  });
  result.sm_favored = static_cast<std::size_t>(
      std::count_if(result.points.begin(), result.points.end(),
                    [](const SweepPoint& p) { return p.sm_favored(); }));
  return result;
}

void write_sweep_csv(const SweepSpec& spec, const SweepResult& result, std::ostream& out) {
  out << "# sweep lo=" << spec.lo << " hi=" << spec.hi << " step=" << spec.step
      << " w=" << spec.w << " sample_size=" << spec.sample_size << " seed=" << spec.seed
      << " k_policy=" << k_policy_name(spec.k_policy) << " points=" << result.points.size()
      << '\n';
  out << "alpha1,beta1,alpha2,beta2,mean_bitlen,eta1,eta2,d,favored\n";
  for (const auto& p : result.points) {
    out << p.alpha1 << ',' << p.beta1 << ',' << p.alpha2 << ',' << p.beta2 << ','
        << fmt("%.4f", p.mean_bitlen) << ',' << fmt("%.6f", p.eta1) << ','
        << fmt("%.6f", p.eta2) << ',' << fmt("%.6f", p.d) << ','
        << (p.sm_favored() ? "SM" : "VLB") << '\n';
  }
  out << "# sm_favored=" << result.sm_favored
      << " vlb_favored=" << result.points.size() - result.sm_favored
      << " sm_share_percent=" << fmt("%.4f", 100.0 * result.sm_share()) << '\n';
}

std::vector<ConstantBitlenRow> constant_bitlen_comparison() {
  std::vector<ConstantBitlenRow> rows;
  for (unsigned b = 1; b <= kWordBits; ++b) {
    const BitLengthHistogram h{{b, 1}};
    const unsigned k = bit_length(b);
    rows.push_back({b, eta1(b), eta2(h, k), compare(h, b, k)});
  }
  return rows;
}

void write_constant_bitlen_csv(const std::vector<ConstantBitlenRow>& rows, std::ostream& out) {
  out << "bitlen,eta1,eta2,d\n";
  for (const auto& r : rows) {
    out << r.b << ',' << fmt("%.6f", r.eta1) << ',' << fmt("%.6f", r.eta2) << ','
        << fmt("%.6f", r.d) << '\n';
  }
}

}  // namespace ccm
