#include "pcn/cdiff.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace pcn {

PowerMap PowerMap::make(const Field& F, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("exponent must be >= 1");
  const std::uint64_t n = F.order() - 1;
  PowerMap P;
  P.d = d;
  P.d_reduced = d % n == 0 ? n : d % n;
  P.gcd_d = std::gcd(d, n);
  return P;
}

std::uint64_t Spectrum::total() const { return std::accumulate(omega.begin(), omega.end(), std::uint64_t{0}); }

std::uint64_t Spectrum::weighted() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) s += i * omega[i];
  return s;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kPcn: return "PcN";
    case Classification::kApcn: return "APcN";
    case Classification::kHigher: return "higher";
  }
  return "?";
}

std::vector<std::uint32_t> power_table(const Field& F, const PowerMap& P) {
  std::vector<std::uint32_t> t(F.order());
  for (std::uint32_t x = 0; x < F.order(); ++x) t[x] = F.pow(Element{x}, P.d_reduced).code;
  return t;
}

std::uint64_t c_delta(const Field& F, const PowerMap& P, Element c, Element a, Element b) {
  F.check(c);
  F.check(a);
  F.check(b);
  std::uint64_t n = 0;
  for (std::uint32_t xc = 0; xc < F.order(); ++xc) {
    const Element x{xc};
    const Element lhs = F.sub(F.pow(F.add(x, a), P.d), F.mul(c, F.pow(x, P.d)));
    if (lhs == b) ++n;
  }
  return n;
}

namespace {

void count_range(const Field& F, const std::vector<std::uint32_t>& pw, Element c, Element a,
                 std::uint32_t lo, std::uint32_t hi, std::vector<std::uint32_t>& counts) {
  for (std::uint32_t xc = lo; xc < hi; ++xc) {
    const Element x{xc};
    const Element u{pw[F.add(x, a).code]};
    const Element v = F.mul(c, Element{pw[xc]});
    ++counts[F.sub(u, v).code];
  }
}

}  // namespace

std::vector<std::uint32_t> derivative_counts(const Field& F, const PowerMap& P, Element c,
                                             Element a, unsigned workers) {
  F.check(c);
  F.check(a);
  const std::uint32_t q = F.order();
  const auto pw = power_table(F, P);
  workers = std::clamp(workers, 1u, q);
  if (workers == 1) {
    std::vector<std::uint32_t> counts(q, 0);
    count_range(F, pw, c, a, 0, q, counts);
    return counts;
  }
  std::vector<std::vector<std::uint32_t>> partial(workers, std::vector<std::uint32_t>(q, 0));
  std::vector<std::thread> threads;
  const std::uint32_t chunk = (q + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint32_t lo = std::min(q, w * chunk);
    const std::uint32_t hi = std::min(q, lo + chunk);
    threads.emplace_back([&, w, lo, hi] { count_range(F, pw, c, a, lo, hi, partial[w]); });
  }
  for (auto& t : threads) t.join();
  std::vector<std::uint32_t> counts(q, 0);
  for (const auto& part : partial)
    for (std::uint32_t b = 0; b < q; ++b) counts[b] += part[b];
  return counts;
}

UniformityReport c_uniformity(const Field& F, const PowerMap& P, Element c, unsigned workers) {
  const auto counts = derivative_counts(F, P, c, F.one(), workers);
  UniformityReport r;
  const auto it = std::max_element(counts.begin(), counts.end());  // first maximum
  r.shift_one_max = *it;
  r.gcd_term = P.gcd_d;
  if (c == F.one()) {
    r.branch = UniformityBranch::kNonzeroShiftOnly;
    r.uniformity = r.shift_one_max;
  } else {
    r.branch = UniformityBranch::kWithZeroShift;
    r.uniformity = std::max(r.shift_one_max, r.gcd_term);
  }
  if (r.shift_one_max == r.uniformity)
    r.witness_b = Element{static_cast<std::uint32_t>(it - counts.begin())};
  r.classification = r.uniformity == 1   ? Classification::kPcn
                     : r.uniformity == 2 ? Classification::kApcn
                                         : Classification::kHigher;
  return r;
}

std::uint64_t c_uniformity_all_shifts(const Field& F, const PowerMap& P, Element c) {
  std::uint64_t best = 0;
  for (std::uint32_t a = 0; a < F.order(); ++a) {
    if (a == 0 && c == F.one()) continue;
    const auto counts = derivative_counts(F, P, c, Element{a});
    best = std::max<std::uint64_t>(best, *std::max_element(counts.begin(), counts.end()));
  }
  return best;
}

Spectrum spectrum_from_counts(const std::vector<std::uint32_t>& counts) {
  Spectrum s;
  const std::uint32_t top = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  s.omega.assign(top + 1, 0);
  for (auto n : counts) ++s.omega[n];
  return s;
}

Spectrum c_spectrum(const Field& F, const PowerMap& P, Element c, unsigned workers) {
  return spectrum_from_counts(derivative_counts(F, P, c, F.one(), workers));
}

Classification classify(const Field& F, const PowerMap& P, Element c) {
  return c_uniformity(F, P, c).classification;
}

PcnProbe::PcnProbe(const Field& F, const PowerMap& P)
    : F_(F), P_(P), shifted_(F.order()), plain_(power_table(F, P)), stamp_(F.order(), 0) {
  for (std::uint32_t x = 0; x < F.order(); ++x) shifted_[x] = plain_[F.add(Element{x}, F.one()).code];
}

bool PcnProbe::is_pcn(Element c, std::uint64_t* evaluations) {
  if (c != F_.one() && P_.gcd_d != 1) return false;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t q = F_.order();
  for (std::uint32_t x = 0; x < q; ++x) {
    const Element b = F_.sub(Element{shifted_[x]}, F_.mul(c, Element{plain_[x]}));
    if (stamp_[b.code] == epoch_) {
      if (evaluations) *evaluations += x + 1;
      return false;
    }
    stamp_[b.code] = epoch_;
  }
  if (evaluations) *evaluations += q;
  return true;
}

}  // namespace pcn
