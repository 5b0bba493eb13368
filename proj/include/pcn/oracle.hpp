#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcn/cdiff.hpp"
#include "pcn/gf.hpp"
#include "pcn/theorems.hpp"

namespace pcn {

/// Exact rational value of a closed-form count; `integral` is false when the
/// formula does not produce an integer.
struct FormulaValue {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  bool integral() const { return denominator != 0 && numerator % denominator == 0; }
  std::int64_t value() const { return numerator / denominator; }
  std::string to_string() const;
};

/// Root-count distribution of g(x) = x^(p^k+1) - b x + b over b != 0.
struct BluherReport {
  std::uint64_t Q = 0;  // p^gcd(m,k)
  unsigned h = 0;       // m / gcd(m,k)
  int formula_case = 0;  // 1: h even; 2: p, h odd; 3: p even, h odd
  std::vector<std::uint32_t> roots_per_b;  // indexed by b code (entry 0 unused)
  /// N_i keyed by i in {0, 1, 2, Q+1}.
  std::map<std::uint64_t, std::uint64_t> counts_bruteforce;
  std::map<std::uint64_t, FormulaValue> counts_formula;
  std::map<std::uint64_t, bool> agrees;
  /// Root counts observed outside {0, 1, 2, Q+1}; empty when none.
  std::vector<std::uint64_t> unexpected_root_counts;

  std::uint64_t sum_counts() const;    // should be p^m - 1
  std::uint64_t sum_weighted() const;  // should be p^m - 2
  bool all_agree() const;
  std::vector<std::uint64_t> non_integral_entries() const;
};

/// Closed-form N_i for g(x) at (p, Q, h).
std::map<std::uint64_t, FormulaValue> bluher_formula(std::uint64_t p, std::uint64_t Q, unsigned h);

BluherReport bluher_counts(const Field& F, unsigned k);

/// Per-b counts of pairs (x, y) in (GF(p^m)*)^2 solving the four systems
///   (I)   x^2 + y^2 =  1,  x^(p^k+1) - y^(p^k+1) = -b^((p^k+1)/2)
///   (II)  x^2 - y^2 =  1,  x^(p^k+1) + y^(p^k+1) = -b^((p^k+1)/2)
///   (III) x^2 - y^2 = -1,  x^(p^k+1) + y^(p^k+1) =  b^((p^k+1)/2)
///   (IV)  x^2 + y^2 = -1,  x^(p^k+1) - y^(p^k+1) =  b^((p^k+1)/2)
struct SystemCountReport {
  unsigned k = 0;
  bool hypothesis = false;  // p^k = 3 and p^m = 3 (mod 4)
  std::vector<std::array<std::uint64_t, 4>> counts;  // indexed by b code

  struct Violation {
    Element b;
    std::string what;
  };
  /// Failures of the claims (each count in {0, 4}; zero at b = +-1; at most
  /// one system solvable). Only filled when `hypothesis` holds.
  std::vector<Violation> violations;
};

SystemCountReport system_counts(const Field& F, unsigned k);

struct ScanEntry {
  std::uint64_t d = 0;
  std::vector<Element> pcn_constants;  // ascending codes
};

struct ScanReport {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::vector<ScanEntry> entries;  // only exponents with at least one PcN c, ascending d
  std::uint64_t exponents_scanned = 0;
  std::uint64_t pairs_tested = 0;
  std::uint64_t evaluations = 0;
  double seconds = 0.0;  // wall time; not part of any serialized report

  std::vector<std::pair<std::uint64_t, Element>> pairs() const;
};

/// For every d in [1, p^m-1] and every c != 1, whether x^d is PcN. The
/// d-range is split across workers; output order does not depend on them.
ScanReport pcn_scan(const Field& F, unsigned workers = 1);

/// Scan against the corollary set over the constants c not in {0, 1}. At
/// c = 0 every permutation exponent is PcN, which the set does not describe.
struct ConjectureVerdict {
  unsigned m = 0;
  ScanReport scan;
  CorollarySet predicted;
  std::vector<std::pair<std::uint64_t, Element>> scan_not_predicted;
  std::vector<std::pair<std::uint64_t, Element>> predicted_not_scan;

  bool holds() const { return scan_not_predicted.empty() && predicted_not_scan.empty(); }
  /// Exponents that are PcN for at least one c not in {0, 1}.
  std::vector<std::uint64_t> exponents() const;
};

ConjectureVerdict conjecture_check(const Field& F, unsigned workers = 1);
ConjectureVerdict conjecture_check(unsigned m, unsigned workers = 1);

struct Verdict {
  bool confirmed = false;
  std::string measured;
  std::uint64_t uniformity = 0;
  Spectrum spectrum;
};

/// Measures x^d at c and compares with the claim of an applicable prediction.
Verdict verify_prediction(const Prediction& P, const Field& F, std::uint64_t d, Element c);

}  // namespace pcn
