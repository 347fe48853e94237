#include "ccm/genmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/beta_distribution.hpp>
#include <boost/random/binomial_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "ccm/bit_buffer.hpp"
#include "ccm/efficiency.hpp"
#include "ccm/parallel.hpp"

namespace ccm {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

bool valid_bitlen(unsigned b) { return b >= 1 && b <= kWordBits; }

constexpr unsigned kMaxPoisson = 64;

}  // namespace

void validate(const BitLengthDist& d) {
  struct Check {
    void operator()(const BetaMixture& m) const {
      if (!(m.alpha1 > 0 && m.beta1 > 0 && m.alpha2 > 0 && m.beta2 > 0)) {
        invalid("beta parameters must be positive");
      }
      if (!(m.w >= 0 && m.w <= 1)) invalid("mixture weight must be in [0, 1]");
    }
    void operator()(const UniformBits& u) const {
      if (!(u.a >= 1 && u.a <= u.b && u.b <= kWordBits)) invalid("uniform needs 1 <= a <= b <= 64");
    }
    void operator()(const BinomialBits& b) const {
      if (!(b.n >= 1 && b.n <= kWordBits)) invalid("binomial n must be in 1..64");
      if (!(b.p >= 0 && b.p <= 1)) invalid("binomial p must be in [0, 1]");
    }
    void operator()(const PoissonTrunc& p) const {
      // Above 64 nearly every draw would be rejected.
      if (!(p.lambda > 0 && p.lambda <= kMaxPoisson)) invalid("poisson lambda must be in (0, 64]");
    }
    void operator()(const ConstantBits& c) const {
      if (!valid_bitlen(c.b)) invalid("constant bit-length must be in 1..64");
    }
    void operator()(const TwoPointBits& t) const {
      if (!valid_bitlen(t.b1) || !valid_bitlen(t.b2)) invalid("two-point bit-lengths must be in 1..64");
      if (!(t.p1 >= 0 && t.p1 <= 1)) invalid("two-point p1 must be in [0, 1]");
    }
  };
  std::visit(Check{}, d);
}

std::string describe(const BitLengthDist& d) {
  struct Describe {
    std::ostringstream& os;
    void operator()(const BetaMixture& m) const {
      os << "beta-mixture(" << m.alpha1 << "," << m.beta1 << "," << m.alpha2 << "," << m.beta2
         << ",w=" << m.w << ")";
    }
    void operator()(const UniformBits& u) const { os << "uniform(" << u.a << "," << u.b << ")"; }
    void operator()(const BinomialBits& b) const { os << "binomial(" << b.n << "," << b.p << ")"; }
    void operator()(const PoissonTrunc& p) const { os << "poisson(" << p.lambda << ")"; }
    void operator()(const ConstantBits& c) const { os << "constant(" << c.b << ")"; }
    void operator()(const TwoPointBits& t) const {
      os << "two-point(" << t.b1 << "," << t.b2 << ",p1=" << t.p1 << ")";
    }
  };
  std::ostringstream os;
  std::visit(Describe{os}, d);
  return os.str();
}

std::uint64_t mix_seed(std::uint64_t seed) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Engine make_engine(std::uint64_t seed) { return Engine(mix_seed(seed)); }

unsigned beta_to_bitlen(double x) noexcept {
  const auto b = static_cast<unsigned>(std::floor(64.0 * x)) + 1;
  return std::clamp(b, 1u, 64u);
}

// Distribution objects are built once per sampler; some (binomial) do real
// set-up work in their constructors.
struct BitLengthSampler::Impl {
  struct Beta {
    boost::random::bernoulli_distribution<double> pick_first;
    boost::random::beta_distribution<double> first, second;
    unsigned draw(Engine& e) {
      const double x = pick_first(e) ? first(e) : second(e);
      return beta_to_bitlen(x);
    }
  };
  struct Uniform {
    boost::random::uniform_int_distribution<unsigned> dist;
    unsigned draw(Engine& e) { return dist(e); }
  };
  struct Binomial {
    boost::random::binomial_distribution<int, double> dist;
    unsigned draw(Engine& e) { return static_cast<unsigned>(dist(e)); }
  };
  struct Poisson {
    boost::random::poisson_distribution<int, double> dist;
    unsigned draw(Engine& e) {
      for (;;) {
        const int v = dist(e);
        if (v <= static_cast<int>(kMaxPoisson)) return static_cast<unsigned>(v);
      }
    }
  };
  struct Constant {
    unsigned b;
    unsigned draw(Engine&) const { return b; }
  };
  struct TwoPoint {
    boost::random::bernoulli_distribution<double> pick_first;
    unsigned b1, b2;
    unsigned draw(Engine& e) { return pick_first(e) ? b1 : b2; }
  };

  std::variant<Beta, Uniform, Binomial, Poisson, Constant, TwoPoint> state;

  static decltype(state) make(const BitLengthDist& d) {
    struct Make {
      decltype(state) operator()(const BetaMixture& m) const {
        return Beta{boost::random::bernoulli_distribution<double>(m.w),
                    boost::random::beta_distribution<double>(m.alpha1, m.beta1),
                    boost::random::beta_distribution<double>(m.alpha2, m.beta2)};
      }
      decltype(state) operator()(const UniformBits& u) const {
        return Uniform{boost::random::uniform_int_distribution<unsigned>(u.a, u.b)};
      }
      decltype(state) operator()(const BinomialBits& b) const {
        return Binomial{boost::random::binomial_distribution<int, double>(static_cast<int>(b.n), b.p)};
      }
      decltype(state) operator()(const PoissonTrunc& p) const {
        return Poisson{boost::random::poisson_distribution<int, double>(p.lambda)};
      }
      decltype(state) operator()(const ConstantBits& c) const { return Constant{c.b}; }
      decltype(state) operator()(const TwoPointBits& t) const {
        return TwoPoint{boost::random::bernoulli_distribution<double>(t.p1), t.b1, t.b2};
      }
    };
    validate(d);
    return std::visit(Make{}, d);
  }
};

BitLengthSampler::BitLengthSampler(const BitLengthDist& d, std::uint64_t seed)
    : BitLengthSampler(d, make_engine(seed)) {}

BitLengthSampler::BitLengthSampler(const BitLengthDist& d, Engine engine)
    : impl_(std::make_unique<Impl>(Impl{Impl::make(d)})), engine_(std::move(engine)) {}

BitLengthSampler::~BitLengthSampler() = default;
BitLengthSampler::BitLengthSampler(BitLengthSampler&&) noexcept = default;

unsigned BitLengthSampler::operator()() {
  return std::visit([this](auto& s) { return s.draw(engine_); }, impl_->state);
}

std::vector<unsigned> sample_bitlens(const BitLengthDist& d, std::size_t n, std::uint64_t seed) {
  BitLengthSampler sample(d, seed);
  std::vector<unsigned> out(n);
  for (auto& b : out) b = sample();
  return out;
}

std::uint64_t value_with_bitlen(unsigned bitlen, Engine& engine) {
  if (bitlen > kWordBits) invalid("bit-length " + std::to_string(bitlen));
  if (bitlen == 0) return 0;
  if (bitlen == 1) return engine() & 1;
  const unsigned low = bitlen - 1;
  return (std::uint64_t{1} << low) | (engine() & low_mask(low));
}

DenseMatrix sample_matrix(const BitLengthDist& d, std::size_t rows, std::size_t cols,
                          std::uint64_t seed) {
  BitLengthSampler sample(d, seed);
  DenseMatrix m(rows, cols);
  for (auto& v : m.values()) v = value_with_bitlen(sample(), sample.engine());
  return m;
}

MixtureMoments mixture_moments(double alpha1, double beta1, double alpha2, double beta2,
                               double w) {
  validate(BetaMixture{alpha1, beta1, alpha2, beta2, w});
  auto mean = [](double a, double b) { return a / (a + b); };
  auto var = [](double a, double b) { return a * b / ((a + b) * (a + b) * (a + b + 1)); };
  const double m1 = mean(alpha1, beta1);
  const double m2 = mean(alpha2, beta2);
  return {w * m1 + (1 - w) * m2,
          w * var(alpha1, beta1) + (1 - w) * var(alpha2, beta2) + w * (1 - w) * (m1 - m2) * (m1 - m2)};
}

namespace {

struct MeanSd {
  double mean = 0;
  double sd = 0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return r;
}

}  // namespace

ReplicateStats replicate_efficiency(const BitLengthDist& d, std::size_t size,
                                    std::size_t replicates, std::uint64_t seed,
                                    KPolicy k_policy) {
  validate(d);
  if (size == 0) invalid("sample size must be >= 1");
  if (replicates == 0) invalid("replicates must be >= 1");

  std::vector<double> eta2s(replicates);
  std::vector<double> eta1s(replicates);
  parallel_for(replicates, [&](std::size_t r) {
    BitLengthSampler sample(d, derive_seed(seed, r));
    std::array<std::uint64_t, kWordBits + 1> counts{};
    for (std::size_t i = 0; i < size; ++i) ++counts[sample()];

    BitLengthHistogram h;
    unsigned max_b = 1;
    for (unsigned b = 0; b <= kWordBits; ++b) {
      if (counts[b] == 0) continue;
      h[b] = counts[b];
      max_b = std::max(max_b, b);
    }
    const unsigned k = k_policy == KPolicy::kFixed7 ? kWorstCasePrefix : bit_length(max_b);
    eta2s[r] = eta2(h, k);
    eta1s[r] = eta1(max_b);
  });

  const MeanSd e2 = mean_sd(eta2s);
  const MeanSd e1 = mean_sd(eta1s);
  return {e2.mean, e2.sd, e1.mean, e1.sd, replicates};
}

}  // namespace ccm
