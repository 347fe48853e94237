#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/random/mersenne_twister.hpp>

#include "ccm/dense_matrix.hpp"

namespace ccm {

// Bit-length distributions. Construct through make_* (or validate()) so the
// parameter ranges hold.

/// w Beta(alpha1, beta1) + (1 - w) Beta(alpha2, beta2), mapped onto 1..64.
struct BetaMixture {
  double alpha1, beta1, alpha2, beta2, w;
};
/// Discrete uniform on [a, b].
struct UniformBits {
  unsigned a, b;
};
/// Binomial(n, p). Raw draws, so 0 is a possible outcome.
struct BinomialBits {
  unsigned n;
  double p;
};
/// Poisson(lambda) restricted to 0..64 by redrawing.
struct PoissonTrunc {
  double lambda;
};
struct ConstantBits {
  unsigned b;
};
/// b1 with probability p1, else b2.
struct TwoPointBits {
  unsigned b1, b2;
  double p1;
};

using BitLengthDist =
    std::variant<BetaMixture, UniformBits, BinomialBits, PoissonTrunc, ConstantBits, TwoPointBits>;

/// Throws kInvalidArgument when a parameter is out of range.
void validate(const BitLengthDist& d);

/// Short human-readable description, e.g. "uniform(1,64)".
std::string describe(const BitLengthDist& d);

/// Random engine used everywhere: 64-bit Mersenne Twister seeded through a
/// SplitMix64 finaliser, so nearby seeds give unrelated streams. Boost's
/// distributions are used on top because their output is the same on every
/// platform and standard library.
using Engine = boost::random::mt19937_64;

std::uint64_t mix_seed(std::uint64_t seed) noexcept;
Engine make_engine(std::uint64_t seed);

/// Seed of replicate (or grid point) `r` of a run seeded with `seed`:
/// seed XOR r, mixed by make_engine.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t r) noexcept {
  return seed ^ r;
}

/// Maps a draw x in [0, 1] onto 1..64 by floor(64 x) + 1; x = 1 lands on 64.
unsigned beta_to_bitlen(double x) noexcept;

/// Draws bit-lengths one at a time.
class BitLengthSampler {
 public:
  BitLengthSampler(const BitLengthDist& d, std::uint64_t seed);
  BitLengthSampler(const BitLengthDist& d, Engine engine);

  ~BitLengthSampler();
  BitLengthSampler(BitLengthSampler&&) noexcept;

  unsigned operator()();
  Engine& engine() noexcept { return engine_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Engine engine_;
};

std::vector<unsigned> sample_bitlens(const BitLengthDist& d, std::size_t n, std::uint64_t seed);

/// Element whose bit-length is `bitlen`: 0 for bit-length 0, uniform on {0, 1}
/// for 1, otherwise uniform on [2^(b-1), 2^b - 1].
std::uint64_t value_with_bitlen(unsigned bitlen, Engine& engine);

DenseMatrix sample_matrix(const BitLengthDist& d, std::size_t rows, std::size_t cols,
                          std::uint64_t seed);

/// Mean and variance of the mixture on the unit interval.
struct MixtureMoments {
  double mean;
  double variance;
};

MixtureMoments mixture_moments(double alpha1, double beta1, double alpha2, double beta2,
                               double w);

enum class KPolicy { kFixed7, kDerived };

struct ReplicateStats {
  double mean_eta2 = 0;
  double sd_eta2 = 0;
  double mean_eta1 = 0;
  double sd_eta1 = 0;
  std::size_t replicates = 0;
};

/// Samples `size` bit-lengths per replicate and evaluates the VLB efficiency
/// (and SM efficiency at the sample maximum) from the histogram. Replicate r
/// uses derive_seed(seed, r); results do not depend on thread scheduling.
ReplicateStats replicate_efficiency(const BitLengthDist& d, std::size_t size,
                                    std::size_t replicates, std::uint64_t seed,
                                    KPolicy k_policy = KPolicy::kFixed7);

}  // namespace ccm
