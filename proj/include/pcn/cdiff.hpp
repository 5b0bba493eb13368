#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcn/gf.hpp"

namespace pcn {

/// x -> x^d. The exponent keeps its given label; d_reduced is its
/// representative in [1, p^m-1].
struct PowerMap {
  std::uint64_t d = 1;
  std::uint64_t d_reduced = 1;
  std::uint64_t gcd_d = 1;  // gcd(d, p^m-1)

  static PowerMap make(const Field& F, std::uint64_t d);
};

/// omega[i] = number of b hit by exactly i values of x (at a = 1).
struct Spectrum {
  std::vector<std::uint64_t> omega;

  std::uint64_t total() const;     // sum omega_i
  std::uint64_t weighted() const;  // sum i * omega_i
  std::size_t max_multiplicity() const { return omega.empty() ? 0 : omega.size() - 1; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

enum class Classification { kPcn, kApcn, kHigher };

std::string to_string(Classification c);

/// Which part of the definition produced the value: for c != 1 the
/// maximum runs over {counts at a = 1} and the a = 0 term gcd(d, p^m-1);
/// for c = 1 the a = 0 term is excluded.
enum class UniformityBranch { kWithZeroShift, kNonzeroShiftOnly };

struct UniformityReport {
  std::uint64_t uniformity = 0;
  std::optional<Element> witness_b;  // smallest b reaching the maximum at a = 1
  std::uint64_t shift_one_max = 0;   // max_b count(1, b)
  std::uint64_t gcd_term = 0;
  Classification classification = Classification::kHigher;
  UniformityBranch branch = UniformityBranch::kWithZeroShift;
};

/// Table of x^d for every code x.
std::vector<std::uint32_t> power_table(const Field& F, const PowerMap& P);

/// #{x : (x+a)^d - c x^d = b} by enumeration.
std::uint64_t c_delta(const Field& F, const PowerMap& P, Element c, Element a, Element b);

/// counts[b] = #{x : (x+a)^d - c x^d = b} for every b, in one pass over x.
/// The x-range is split across `workers` threads with private counters that
/// are summed afterwards.
std::vector<std::uint32_t> derivative_counts(const Field& F, const PowerMap& P, Element c,
                                             Element a, unsigned workers = 1);

UniformityReport c_uniformity(const Field& F, const PowerMap& P, Element c, unsigned workers = 1);

/// Uniformity straight from the definition: maximum over every admissible
/// shift a (a != 0 when c = 1), not only a in {0, 1}.
std::uint64_t c_uniformity_all_shifts(const Field& F, const PowerMap& P, Element c);

Spectrum spectrum_from_counts(const std::vector<std::uint32_t>& counts);
Spectrum c_spectrum(const Field& F, const PowerMap& P, Element c, unsigned workers = 1);

Classification classify(const Field& F, const PowerMap& P, Element c);

/// Reusable PcN test for scans: holds the x^d tables of one exponent and
/// answers "is count(1, b) <= 1 for all b" per c with early exit.
class PcnProbe {
 public:
  PcnProbe(const Field& F, const PowerMap& P);

  /// True iff x^d is PcN for this c (c != 1). Work performed is added to
  /// `evaluations` when given.
  bool is_pcn(Element c, std::uint64_t* evaluations = nullptr);

 private:
  const Field& F_;
  PowerMap P_;
  std::vector<std::uint32_t> shifted_;  // (x+1)^d
  std::vector<std::uint32_t> plain_;    // x^d
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace pcn
