// ccm: compress integer matrices and reproduce the compression-efficiency
// experiments.
//
//   ccm compress   <matrix.txt> <out.ccm> [--method sm|vlb] [--order row|col]
//   ccm decompress <in.ccm> [out.txt]
//   ccm info       <in.ccm>
//   ccm experiment (--table 3|4|5 | --dist ...) [--size N]... [--replicates R] [--seed S] [--csv F]
//   ccm sweep      [--fig 6|19] [--lo --hi --step --w] [--size N] [--seed S] [--csv F]
//
// Exit status: 0 success, 2 parse/validation error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccm/container.hpp"
#include "ccm/efficiency.hpp"
#include "ccm/experiment.hpp"
#include "ccm/text_matrix.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

const char* method_name(ccm::Method m) { return m == ccm::Method::kSm ? "SM" : "VLB"; }

void print_report(const ccm::CompressedMatrix& m, std::ostream& out) {
  const ccm::EfficiencyReport r = ccm::measure(m);
  out << "dims: " << m.rows() << "x" << m.cols() << "\n"
      << "method: " << method_name(r.method) << "\n"
      << "order: " << (m.order() == ccm::Order::kRowMajor ? "row" : "col") << "\n";
  if (r.method == ccm::Method::kSm) {
    out << "width: " << r.width << "\n";
  } else {
    out << "k: " << r.k << "\n";
  }
  out << "bits allocated: " << r.bits_allocated << "\n"
      << "bits used: " << r.bits_used << "\n"
      << "words: " << m.data().word_count() << "\n";
  char eta[64];
  std::snprintf(eta, sizeof eta, "%.6f", r.eta);
  out << "eta: " << eta << " (" << r.eta_exact.numerator() << "/" << r.eta_exact.denominator()
      << ")\n";
}

void print_histogram(const ccm::EfficiencyReport& r, std::ostream& out) {
  out << "histogram (bit-length: count):\n";
  for (const auto& [b, f] : r.histogram) out << "  " << b << ": " << f << "\n";
}

// Writes via `emit` to the file named by `path`, or to stdout when empty.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ccm::Error(ccm::ErrorCode::kIoError, "cannot open " + path + " for writing");
  emit(out);
  out.close();
  if (!out) throw ccm::Error(ccm::ErrorCode::kIoError, "cannot write " + path);
}

struct DistFlags {
  std::string dist;
  unsigned a = 1, b = 64, n = 64;
  double p = 0.5, lambda = 32;
  double alpha1 = 1, beta1 = 1, alpha2 = 1, beta2 = 1, w = 0.5;

  void add_to(CLI::App& app) {
    app.add_option("--dist", dist, "uniform|binomial|poisson|beta-mixture|constant|two-point")
        ->check(CLI::IsMember(
            {"uniform", "binomial", "poisson", "beta-mixture", "constant", "two-point"}));
    app.add_option("--a", a, "uniform lower bound; two-point first bit-length");
    app.add_option("--b", b, "uniform upper bound; constant bit-length; two-point second bit-length");
    app.add_option("--n", n, "binomial trials");
    app.add_option("--p", p, "binomial success probability; two-point p1");
    app.add_option("--lambda", lambda, "poisson mean");
    app.add_option("--alpha1", alpha1);
    app.add_option("--beta1", beta1);
    app.add_option("--alpha2", alpha2);
    app.add_option("--beta2", beta2);
    app.add_option("--w", w, "mixture weight of the first component");
  }

  ccm::BitLengthDist make() const {
    if (dist == "uniform") return ccm::UniformBits{a, b};
    if (dist == "binomial") return ccm::BinomialBits{n, p};
    if (dist == "poisson") return ccm::PoissonTrunc{lambda};
    if (dist == "beta-mixture") return ccm::BetaMixture{alpha1, beta1, alpha2, beta2, w};
    if (dist == "constant") return ccm::ConstantBits{b};
    return ccm::TwoPointBits{a, b, p};
  }

  std::string parameter() const {
    if (dist == "uniform") return std::to_string(b);
    if (dist == "binomial") return std::to_string(n);
    if (dist == "poisson") return CLI::detail::to_string(lambda);
    if (dist == "constant") return std::to_string(b);
    return "-";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computable compressed integer matrices"};
  app.require_subcommand(1);

  // compress
  std::string in_path, out_path, method = "sm", order = "row";
  std::size_t stride = ccm::VlbMatrix::kDefaultStride;
  auto* compress = app.add_subcommand("compress", "Compress a text matrix into a container");
  compress->add_option("input", in_path, "text matrix (rows per line, whitespace/comma separated)")
      ->required();
  compress->add_option("output", out_path, "container file")->required();
  compress->add_option("--method", method)->check(CLI::IsMember({"sm", "vlb"}));
  compress->add_option("--order", order)->check(CLI::IsMember({"row", "col"}));
  compress->add_option("--stride", stride, "VLB checkpoint stride (elements)")
      ->check(CLI::PositiveNumber);

  // decompress
  auto* decompress = app.add_subcommand("decompress", "Expand a container to a text matrix");
  decompress->add_option("input", in_path)->required();
  decompress->add_option("output", out_path, "text output (stdout if omitted)");

  // info
  auto* info = app.add_subcommand("info", "Print the efficiency report of a container");
  info->add_option("input", in_path)->required();

  // experiment
  std::optional<int> table;
  std::vector<std::size_t> sizes;
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
  std::string csv_path;
  std::string k_policy = "fixed7";
  DistFlags dist;
  auto* experiment = app.add_subcommand("experiment", "Replicated VLB efficiency experiment (CSV)");
  experiment->add_option("--table", table, "preset: 3 uniform, 4 binomial, 5 poisson")
      ->check(CLI::IsMember({3, 4, 5}));
  dist.add_to(*experiment);
  experiment->add_option("--size", sizes, "sample size(s); default 100 10000 1000000");
  experiment->add_option("--replicates", replicates)->check(CLI::PositiveNumber);
  experiment->add_option("--seed", seed);
  experiment->add_option("--csv", csv_path, "output CSV (stdout if omitted)");
  experiment->add_option("--k-policy", k_policy)->check(CLI::IsMember({"fixed7", "derived"}));

  // sweep
  std::optional<int> fig;
  ccm::SweepSpec sweep_spec;
  auto* sweep = app.add_subcommand("sweep", "Beta-shape parameter sweep comparing SM and VLB (CSV)");
  sweep->add_option("--fig", fig, "preset: 6 single-Beta grid, 19 constant bit-length comparison")
      ->check(CLI::IsMember({6, 19}));
  sweep->add_option("--lo", sweep_spec.lo);
  sweep->add_option("--hi", sweep_spec.hi);
  sweep->add_option("--step", sweep_spec.step);
  sweep->add_option("--w", sweep_spec.w, "mixture weight; 0 sweeps a single Beta");
  sweep->add_option("--size", sweep_spec.sample_size, "sampled bit-lengths per grid point")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_spec.seed);
  sweep->add_option("--csv", csv_path, "output CSV (stdout if omitted)");
  sweep->add_option("--k-policy", k_policy)->check(CLI::IsMember({"fixed7", "derived"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*compress) {
      std::ifstream in(in_path);
      if (!in) throw ccm::Error(ccm::ErrorCode::kIoError, "cannot open " + in_path);
      const ccm::DenseMatrix dense = ccm::parse_text_matrix(in);
      const auto m = ccm::CompressedMatrix::compress(
          dense, method == "sm" ? ccm::Method::kSm : ccm::Method::kVlb,
          order == "row" ? ccm::Order::kRowMajor : ccm::Order::kColMajor, stride);
      ccm::save_file(m, out_path);
      print_report(m, std::cout);
    } else if (*decompress) {
      const auto m = ccm::load_file(in_path);
      const ccm::DenseMatrix dense = m.decompress();
      with_output(out_path, [&](std::ostream& out) { ccm::write_text_matrix(dense, out); });
    } else if (*info) {
      const auto m = ccm::load_file(in_path);
      print_report(m, std::cout);
      print_histogram(ccm::measure(m), std::cout);
    } else if (*experiment) {
      ccm::ExperimentSpec spec;
      if (table) {
        spec.name = "table" + std::to_string(*table);
        spec.cases = ccm::table_cases(*table);
      } else if (!dist.dist.empty()) {
        spec.name = "custom";
        spec.cases.push_back({dist.parameter(), dist.make()});
      } else {
        throw ccm::Error(ccm::ErrorCode::kInvalidArgument, "experiment needs --table or --dist");
      }
      if (!sizes.empty()) spec.sizes = sizes;
      spec.replicates = replicates;
      spec.seed = seed;
      spec.k_policy = k_policy == "fixed7" ? ccm::KPolicy::kFixed7 : ccm::KPolicy::kDerived;
      const auto rows = ccm::run_experiment(spec);
      with_output(csv_path, [&](std::ostream& out) { ccm::write_experiment_csv(spec, rows, out); });
    } else if (*sweep) {
      if (fig && *fig == 19) {
        const auto rows = ccm::constant_bitlen_comparison();
        with_output(csv_path, [&](std::ostream& out) { ccm::write_constant_bitlen_csv(rows, out); });
        return 0;
      }
      if (fig && *fig == 6) sweep_spec.w = 0;
      sweep_spec.k_policy = k_policy == "fixed7" ? ccm::KPolicy::kFixed7 : ccm::KPolicy::kDerived;
      const auto result = ccm::run_sweep(sweep_spec);
      with_output(csv_path, [&](std::ostream& out) { ccm::write_sweep_csv(sweep_spec, result, out); });
      std::cerr << "SM favored at " << result.sm_favored << " of " << result.points.size()
                << " grid points\n";
    }
  } catch (const ccm::Error& e) {
    std::cerr << "ccm: " << e.what() << "\n";
    return e.code() == ccm::ErrorCode::kIoError ? kExitIo : kExitValidation;
  }
  return 0;
}
