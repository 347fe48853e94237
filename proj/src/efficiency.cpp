#include "ccm/efficiency.hpp"

#include <cmath>
#include <string>

namespace ccm {

namespace {

constexpr std::int64_t kBits = kWordBits;

void check_bitlen(unsigned b) {
  if (b == 0 || b > kWordBits) {
    throw Error(ErrorCode::kInvalidArgument, "bit-length " + std::to_string(b));
  }
}

}  // namespace

BitLengthHistogram histogram_of(const DenseMatrix& m) {
  BitLengthHistogram h;
  for (std::uint64_t v : m.values()) ++h[bit_length(v)];
  return h;
}

BitLengthHistogram histogram_of(std::span<const unsigned> bit_lengths) {
  BitLengthHistogram h;
  for (unsigned b : bit_lengths) ++h[b];
  return h;
}

std::uint64_t element_count(const BitLengthHistogram& h) {
  std::uint64_t n = 0;
  for (const auto& [b, f] : h) n += f;
  return n;
}

Ratio eta1_exact(unsigned max_bitlen) {
  check_bitlen(max_bitlen);
  return Ratio(kBits - static_cast<std::int64_t>(max_bitlen), kBits);
}

double eta1(unsigned max_bitlen) { return to_double(eta1_exact(max_bitlen)); }

Ratio eta2_exact(const BitLengthHistogram& h, unsigned k) {
  if (h.empty()) throw Error(ErrorCode::kInvalidArgument, "empty histogram");
  std::int64_t allocated = 0;
  std::int64_t used = 0;
  for (const auto& [b, f] : h) {
    if (f == 0) throw Error(ErrorCode::kInvalidArgument, "zero frequency in histogram");
    allocated += kBits * static_cast<std::int64_t>(f);
    used += static_cast<std::int64_t>(b + k) * static_cast<std::int64_t>(f);
  }
  return Ratio(allocated - used, allocated);
}

double eta2(const BitLengthHistogram& h, unsigned k) { return to_double(eta2_exact(h, k)); }

double eta2_prob(const BitLengthProbabilities& probs, unsigned k) {
  double total = 0;
  double weighted = 0;
  for (const auto& [b, p] : probs) {
    if (p < 0 || p > 1) throw Error(ErrorCode::kInvalidArgument, "probability out of [0, 1]");
    total += p;
    weighted += b * p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "probabilities sum to " + std::to_string(total));
  }
  return 1.0 - weighted / kBits - static_cast<double>(k) / kBits;
}

double expected_eta1(unsigned max_bitlen) { return eta1(max_bitlen); }

double expected_eta2(double mean_bitlen, unsigned k) {
  return 1.0 - mean_bitlen / kBits - static_cast<double>(k) / kBits;
}

Ratio compare_exact(const BitLengthHistogram& h, unsigned max_bitlen, unsigned k) {
  return eta1_exact(max_bitlen) - eta2_exact(h, k);
}

double compare(const BitLengthHistogram& h, unsigned max_bitlen, unsigned k) {
  return to_double(compare_exact(h, max_bitlen, k));
}

TwoPointSolveResult solve_two_point(double target_eta2, unsigned b1, unsigned b2, unsigned k) {
  if (b1 == b2) throw Error(ErrorCode::kInvalidArgument, "bit-lengths must differ");
  // From p1 = 1 - p2:  b1 + (b2 - b1) p2 = rhs
  const double rhs = kBits * (1.0 - target_eta2 - static_cast<double>(k) / kBits);
  TwoPointSolveResult r;
  r.p2 = (rhs - b1) / (static_cast<double>(b2) - b1);
  r.p1 = 1.0 - r.p2;
  r.feasible = r.p1 >= 0 && r.p1 <= 1 && r.p2 >= 0 && r.p2 <= 1;
  return r;
}

EfficiencyReport measure(const CompressedMatrix& m) {
  EfficiencyReport r;
  r.method = m.method();
  const std::uint64_t n = m.rows() * m.cols();
  r.bits_allocated = kWordBits * n;
  r.bits_used = m.data().size();
  r.eta_exact = Ratio(static_cast<std::int64_t>(r.bits_allocated) -
                          static_cast<std::int64_t>(r.bits_used),
                      static_cast<std::int64_t>(r.bits_allocated));
  r.eta = to_double(r.eta_exact);
  if (m.is_sm()) {
    const SmMatrix& sm = m.sm();
    r.width = sm.width();
    for (std::size_t idx = 0; idx < n; ++idx) ++r.histogram[bit_length(sm.get_linear(idx))];
  } else {
    r.k = m.vlb().k();
    for (std::uint64_t v : m.vlb()) ++r.histogram[bit_length(v)];
  }
  return r;
}

}  // namespace ccm
