#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcn/cdiff.hpp"
#include "pcn/gf.hpp"

namespace pcn {

enum class ClaimKind {
  kPcn,         // uniformity = 1
  kNotPcn,      // uniformity >= 2
  kApcn,        // uniformity = 2
  kUniformity,  // uniformity = value
  kSpectrum,    // spectrum at a = 1 equals `spectrum`
};

std::string to_string(ClaimKind k);

struct Claim {
  ClaimKind kind = ClaimKind::kPcn;
  std::uint64_t value = 0;
  Spectrum spectrum;

  std::string describe() const;
  friend bool operator==(const Claim&, const Claim&) = default;
};

/// A criterion evaluated at concrete parameters. `claim` is set exactly when
/// `applicable` is true.
struct Prediction {
  std::string theorem_id;
  std::string citation;
  bool applicable = false;
  std::string reason;
  std::optional<Claim> claim;
  // The exponent and constant the claim talks about.
  std::uint64_t d = 0;
  std::optional<Element> c;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Characteristic two.

/// x^(2^k+1) over GF(2^m) is PcN iff v2(m) <= v2(k) and c in GF(2^gcd(k,m))\{1}.
/// Throws std::invalid_argument for p != 2, k = 0 or c = 1.
Prediction predict_gold_gf2(const Field& F, unsigned k, Element c);

/// Exponent set predicted PcN over GF(2^m) by the Gold criterion closed
/// under Frobenius twists and inversion mod 2^m-1. Each exponent maps to the
/// degrees g of the subfields GF(2^g) whose elements other than 1 are
/// admissible constants.
struct CorollarySet {
  unsigned m = 0;
  std::map<std::uint64_t, std::set<unsigned>> exponents;

  bool admits(const Field& F, std::uint64_t d, Element c) const;
};

CorollarySet corollary_pcn_set_gf2(unsigned m);

// ---------------------------------------------------------------------------
// Odd characteristic, c = -1.

/// x^((p^k+1)/2), c = -1: PcN iff v2(m) <= v2(k)+1, otherwise uniformity
/// (p^gcd(k,m)+1)/2. Applicable for p odd, 1 <= k < m, m >= 3.
Prediction predict_half_gold(std::uint64_t p, unsigned m, unsigned k);

enum class CongruenceFamily {
  kT1,  // d (p^k+1) = 2 mod p^m-1
  kT2,  // d (p^k+1)/2 = (p^m+1)/2 mod p^m-1
};

std::string to_string(CongruenceFamily f);

struct CongruenceSolution {
  CongruenceFamily family = CongruenceFamily::kT1;
  std::uint64_t p = 0;
  unsigned m = 0;
  unsigned k = 0;
  std::uint64_t modulus = 0;      // p^m - 1
  std::uint64_t coefficient = 0;  // reduced mod `modulus`
  std::uint64_t rhs = 0;
  std::uint64_t gcd = 0;          // gcd(coefficient, modulus)
  bool solvable = false;
  std::vector<std::uint64_t> solutions;  // ascending, in [1, p^m-1]
  /// Parity of l in d (p^k+1) = 2 + l (p^m-1), per solution (true = odd).
  std::vector<bool> ell_odd;

  std::vector<std::uint64_t> odd_solutions() const;
  std::vector<std::uint64_t> even_solutions() const;
};

/// All solutions in [1, p^m-1] by extended Euclid; p odd.
CongruenceSolution solve_congruence(std::uint64_t p, unsigned m, unsigned k, CongruenceFamily family);

/// Solutions of a d = r (mod n) in [1, n], ascending.
std::vector<std::uint64_t> solve_linear_congruence(std::uint64_t a, std::uint64_t r, std::uint64_t n);

/// Modular inverse, or nullopt when gcd(a, n) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n);

/// p^m = 3 mod 4 and d (p^k+1) = 2 mod p^m-1: PcN at c = -1 iff d is odd.
Prediction predict_thm_3mod4(std::uint64_t p, unsigned m, unsigned k, std::uint64_t d);

/// p^m = 1 mod 4, v2(k) = v2(m), d (p^k+1)/2 = (p^m+1)/2 mod p^m-1: PcN at c = -1.
Prediction predict_thm_1mod4(std::uint64_t p, unsigned m, unsigned k, std::uint64_t d);

/// Spectrum of x^(p^k+1) for p odd and c != 1.
Prediction predict_apcn_spectrum(const Field& F, unsigned k, Element c);

struct DualPair {
  std::uint64_t d_inv = 0;
  Element c_prime;
};

/// (d, c) -> (d^-1 mod p^m-1, c^d). Throws std::invalid_argument when d is
/// not invertible mod p^m-1.
DualPair inverse_exponent_dual(const Field& F, std::uint64_t d, Element c);

/// Every row of the known PcN/APcN table whose pattern and condition match
/// (p, m, d, c). Rows from other works are claims to be checked, not facts.
std::vector<Prediction> known_families_lookup(const Field& F, std::uint64_t d, Element c);

/// Every applicable prediction from this module for (F, d, c): the table rows
/// plus the parametrised criteria instantiated over k in [1, 2m].
std::vector<Prediction> all_predictions(const Field& F, std::uint64_t d, Element c);

}  // namespace pcn
