#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcn {

/// Element of GF(p^m) stored as its base-p little-endian coefficient code.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 22;

class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// 2-adic valuation; v2(0) is the infinite marker, which compares greater
/// than every finite valuation.
class Valuation {
 public:
  constexpr explicit Valuation(unsigned v) : value_(v) {}
  static constexpr Valuation infinite() { return Valuation(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr unsigned value() const { return value_; }
  std::string to_string() const;

  friend constexpr auto operator<=>(Valuation, Valuation) = default;

 private:
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();
  unsigned value_;
};

Valuation v2(std::uint64_t n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Integer power; throws std::overflow_error when the result leaves 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// gcd(p^k+1, p^m-1) by the closed form over the cases p = 2,
/// v2(m) <= v2(k) and v2(m) > v2(k). Throws std::logic_error if the closed
/// form ever disagrees with Euclid on the explicit integers.
std::uint64_t gcd_pk1(std::uint64_t p, unsigned k, unsigned m);

/// Concrete realization of GF(p^m).
///
/// The modulus is the first monic degree-m polynomial (non-leading
/// coefficients read as a base-p little-endian integer) whose root x is
/// primitive; for m = 1 it is x - g with g the least primitive root mod p.
/// Nonzero products go through the log/exp tables. Immutable once built.
class Field {
 public:
  static Field build(std::uint32_t p, unsigned m,
                     std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients c_0..c_m of the modulus, leading 1 included.
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  Element generator() const { return generator_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element minus_one() const { return Element{p_ - 1}; }
  /// Embeds an integer of the prime subfield.
  Element from_integer(std::int64_t v) const;

  bool contains(Element x) const { return x.code < q_; }
  void check(Element x) const;

  Element add(Element x, Element y) const {
    if (p_ == 2) return Element{x.code ^ y.code};
    if (m_ == 1) {
      const std::uint32_t s = x.code + y.code;
      return Element{s >= p_ ? s - p_ : s};
    }
    return Element{add_digits(x.code, y.code)};
  }
  Element neg(Element x) const {
    if (p_ == 2) return x;
    if (m_ == 1) return Element{x.code == 0 ? 0 : p_ - x.code};
    return Element{neg_digits(x.code)};
  }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    if (x.code == 0 || y.code == 0) return Element{0};
    return Element{exp_[log_[x.code] + log_[y.code]]};
  }
  /// Throws std::domain_error on division by zero.
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }

  /// x^d with 0^0 = 1; the exponent is reduced mod p^m-1 here only.
  Element pow(Element x, std::uint64_t d) const {
    if (x.code == 0) return Element{d == 0 ? 1u : 0u};
    const std::uint64_t e = (std::uint64_t{log_[x.code]} * (d % (q_ - 1))) % (q_ - 1);
    return Element{exp_[e]};
  }

  /// Discrete log to the base of the generator; x must be nonzero.
  std::uint32_t log(Element x) const;
  Element exp(std::uint64_t e) const { return Element{exp_[e % (q_ - 1)]}; }

  /// eta(x) = x^((p^m-1)/2) mapped to {-1, 0, 1}; rejects p = 2.
  int quadratic_character(Element x) const;

  /// Frobenius fixed-point test c^(p^g) = c, i.e. membership in GF(p^g)
  /// for g | m.
  bool in_subfield(Element c, unsigned g) const;

  /// Absolute trace onto GF(p), returned as an element of the prime field.
  Element trace(Element x) const;

  /// Human-readable modulus such as "x^2 + x + 2".
  std::string modulus_string() const;

  /// Raw tables, exposed for determinism checks.
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> exp_table() const {
    return std::span<const std::uint32_t>(exp_).first(q_ - 1);
  }

 private:
  Field() = default;

  std::uint32_t add_digits(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg_digits(std::uint32_t x) const;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_{};
  std::vector<std::uint32_t> log_;
  // Doubled so that log x + log y indexes without a reduction.
  std::vector<std::uint32_t> exp_;
};

}  // namespace pcn
