#pragma once

#include <cstdint>
#include <map>
#include <span>

#include <boost/rational.hpp>

#include "ccm/compressed_matrix.hpp"

namespace ccm {

/// Exact ratio used for efficiencies computed from integral inputs.
using Ratio = boost::rational<std::int64_t>;

inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Bit-length -> number of elements with that bit-length.
using BitLengthHistogram = std::map<unsigned, std::uint64_t>;

/// Bit-length -> probability.
using BitLengthProbabilities = std::map<unsigned, double>;

/// Prefix width assumed when the largest possible bit-length (64) is allowed.
inline constexpr unsigned kWorstCasePrefix = 7;

BitLengthHistogram histogram_of(const DenseMatrix& m);
BitLengthHistogram histogram_of(std::span<const unsigned> bit_lengths);

/// Total element count of a histogram.
std::uint64_t element_count(const BitLengthHistogram& h);

/// SM efficiency: (64 - b) / 64 for chunk width b. Independent of size.
Ratio eta1_exact(unsigned max_bitlen);
double eta1(unsigned max_bitlen);

/// VLB efficiency from a bit-length histogram and prefix width k:
///   (64 rc - sum (b_i + k) f_i) / (64 rc)  =  1 - sum b_i f_i / (64 rc) - k / 64
Ratio eta2_exact(const BitLengthHistogram& h, unsigned k);
double eta2(const BitLengthHistogram& h, unsigned k);

/// VLB efficiency with relative frequencies replaced by probabilities.
/// The probabilities must sum to 1 within 1e-12.
double eta2_prob(const BitLengthProbabilities& probs, unsigned k);

/// Expected SM efficiency when the largest element has `max_bitlen` bits.
double expected_eta1(unsigned max_bitlen);

/// Expected VLB efficiency for a given mean bit-length.
double expected_eta2(double mean_bitlen, unsigned k = kWorstCasePrefix);

/// D = eta1 - eta2. Positive favours SM, negative favours VLB.
Ratio compare_exact(const BitLengthHistogram& h, unsigned max_bitlen, unsigned k);
double compare(const BitLengthHistogram& h, unsigned max_bitlen, unsigned k);

struct TwoPointSolveResult {
  double p1 = 0;
  double p2 = 0;
  bool feasible = false;
};

/// Solves p1 + p2 = 1, b1 p1 + b2 p2 = 64 (1 - target - k / 64) for the
/// probabilities of two bit-lengths that give VLB efficiency `target`.
/// `feasible` is false when the solution falls outside [0, 1].
TwoPointSolveResult solve_two_point(double target_eta2, unsigned b1, unsigned b2,
                                    unsigned k = kWorstCasePrefix);

struct EfficiencyReport {
  Method method = Method::kSm;
  std::uint64_t bits_allocated = 0;  // 64 * rows * cols
  std::uint64_t bits_used = 0;       // stream length
  Ratio eta_exact{0};
  double eta = 0;
  BitLengthHistogram histogram;
  unsigned width = 0;  // SM chunk width, 0 for VLB
  unsigned k = 0;      // VLB prefix width, 0 for SM
};

/// Efficiency of a compressed matrix, counted from its actual buffer.
EfficiencyReport measure(const CompressedMatrix& m);

}  // namespace ccm
