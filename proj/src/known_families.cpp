// Known PcN / APcN power-function families, one matcher per table row.
//
// Rows whose source is an external work are encoded as claims to be checked
// by measurement; nothing here is trusted on its own.

#include <numeric>

#include "pcn/theorems.hpp"

namespace pcn {

namespace {

struct RowContext {
  const Field& F;
  std::uint64_t p;
  unsigned m;
  std::uint64_t q;
  std::uint64_t n;
  std::uint64_t d;
  std::uint64_t d_rep;
  Element c;

  bool exponent_is(std::uint64_t pattern) const {
    if (pattern == 0) return false;
    const std::uint64_t r = pattern % n;
    return (r == 0 ? n : r) == d_rep;
  }
  bool c_is_minus_one() const { return c == F.minus_one(); }
  bool c_is_zero() const { return c == F.zero(); }
  bool c_is_one() const { return c == F.one(); }
};

class RowSink {
 public:
  explicit RowSink(const RowContext& ctx) : ctx_(ctx) {}

  void add(int row, const std::string& citation, const std::string& reason, ClaimKind kind) {
    Prediction P;
    P.theorem_id = "table:" + std::to_string(row);
    P.citation = citation;
    P.applicable = true;
    P.reason = reason;
    P.claim = Claim{kind, kind == ClaimKind::kPcn ? 1u : 2u, {}};
    P.d = ctx_.d;
    P.c = ctx_.c;
    out_.push_back(std::move(P));
  }

  std::vector<Prediction> take() { return std::move(out_); }

 private:
  const RowContext& ctx_;
  std::vector<Prediction> out_;
};

std::string with_k(const std::string& s, unsigned k) { return s + " (k = " + std::to_string(k) + ")"; }

// Odd-characteristic half-gold style patterns (p^k+1)/2 for k in [lo, hi].
template <typename Fn>
void for_each_k(unsigned lo, unsigned hi, Fn&& fn) {
  for (unsigned k = lo; k <= hi; ++k)
    if (fn(k)) return;
}

}  // namespace

std::vector<Prediction> known_families_lookup(const Field& F, std::uint64_t d, Element c) {
  F.check(c);
  if (d == 0) throw std::invalid_argument("exponent must be >= 1");
  const std::uint64_t p = F.characteristic();
  const unsigned m = F.degree();
  const std::uint64_t q = F.order();
  const std::uint64_t n = q - 1;
  const std::uint64_t r = d % n;
  const RowContext ctx{F, p, m, q, n, d, r == 0 ? n : r, c};
  RowSink sink(ctx);
  const bool odd = p != 2;
  const unsigned kmax = 2 * m;

  // 1: x^2, c != 1 (odd characteristic; x^2 is additive for p = 2)
  if (odd && ctx.exponent_is(2) && !ctx.c_is_one())
    sink.add(1, "Ellingsen et al. 2020: d = 2, c != 1, uniformity 2", "d = 2 and c != 1", ClaimKind::kApcn);

  // 2: inverse map at c = 0
  if (ctx.exponent_is(q - 2) && ctx.c_is_zero())
    sink.add(2, "Ellingsen et al. 2020: d = p^m-2, c = 0, uniformity 1", "d = p^m-2 and c = 0", ClaimKind::kPcn);

  // 3: inverse map over GF(2^m) with trace conditions
  if (!odd && m >= 2 && ctx.exponent_is(q - 2) && !ctx.c_is_zero() && !ctx.c_is_one()) {
    if (F.trace(c) == F.one() && F.trace(F.inv(c)) == F.one())
      sink.add(3, "Ellingsen et al. 2020: d = 2^m-2, c != 0, Tr(c) = Tr(1/c) = 1, uniformity 2",
               "d = 2^m-2, Tr(c) = Tr(1/c) = 1", ClaimKind::kApcn);
  }

  // 4: inverse map, odd characteristic
  if (odd && ctx.exponent_is(q - 2) && !ctx.c_is_one() && !ctx.c_is_zero()) {
    const Element four = F.from_integer(4);
    bool ok = false;
    std::string why;
    if (four != F.zero() && (c == four || c == F.inv(four))) {
      ok = true;
      why = "c = 4 or c = 1/4";
    } else {
      const Element c2_4c = F.sub(F.mul(c, c), F.mul(four, c));
      const Element one_4c = F.sub(F.one(), F.mul(four, c));
      if (F.quadratic_character(c2_4c) == -1 && F.quadratic_character(one_4c) == -1) {
        ok = true;
        why = "chi(c^2-4c) = chi(1-4c) = -1";
      }
    }
    if (ok)
      sink.add(4, "Ellingsen et al. 2020: d = p^m-2, c = 4, 1/4 or chi(c^2-4c) = chi(1-4c) = -1, uniformity 2",
               "d = p^m-2, " + why, ClaimKind::kApcn);
  }

  // 5: p = 3, d = (3^k+1)/2, c = -1, m / gcd(k, m) = 1
  if (p == 3 && ctx.c_is_minus_one()) {
    for_each_k(1, kmax, [&](unsigned k) {
      if (!ctx.exponent_is((ipow(3, k) + 1) / 2) || m / std::gcd(k, m) != 1) return false;
      sink.add(5, "Ellingsen et al. 2020: p = 3, d = (3^k+1)/2, c = -1, m/gcd(k,m) = 1, uniformity 1",
               with_k("d = (3^k+1)/2, m | k", k), ClaimKind::kPcn);
      return true;
    });
  }

  if (odd && ctx.c_is_minus_one()) {
    // 6
    if (m % 2 == 1 && ctx.exponent_is((p * p + 1) / 2))
      sink.add(6, "Bartoli-Timpanella 2020: d = (p^2+1)/2, c = -1, m odd, uniformity 1", "d = (p^2+1)/2, m odd",
               ClaimKind::kPcn);
    // 7
    if (m == 3 && ctx.exponent_is(p * p - p + 1))
      sink.add(7, "Bartoli-Timpanella 2020: d = p^2-p+1, c = -1, m = 3, uniformity 1", "d = p^2-p+1, m = 3",
               ClaimKind::kPcn);
    if (m == 5) {
      // 8
      if (ctx.exponent_is(ipow(p, 4) + (p - 2) * p * p + (p - 1) * p + 1))
        sink.add(8, "Hasan et al. 2021: d = p^4+(p-2)p^2+(p-1)p+1, c = -1, m = 5, uniformity 1",
                 "d = p^4+(p-2)p^2+(p-1)p+1, m = 5", ClaimKind::kPcn);
      // 9
      if (ctx.exponent_is((ipow(p, 5) + 1) / (p + 1)))
        sink.add(9, "Hasan et al. 2021: d = (p^5+1)/(p+1), c = -1, m = 5, uniformity 1", "d = (p^5+1)/(p+1), m = 5",
                 ClaimKind::kPcn);
    }
    if (m == 7) {
      // 10
      if (ctx.exponent_is((p - 1) * ipow(p, 6) + ipow(p, 5) + (p - 2) * ipow(p, 3) + (p - 1) * p * p + p))
        sink.add(10, "Hasan et al. 2021: d = (p-1)p^6+p^5+(p-2)p^3+(p-1)p^2+p, c = -1, m = 7, uniformity 1",
                 "d = (p-1)p^6+p^5+(p-2)p^3+(p-1)p^2+p, m = 7", ClaimKind::kPcn);
      // 11
      if (ctx.exponent_is((p - 2) * ipow(p, 6) + (p - 2) * ipow(p, 5) + (p - 1) * ipow(p, 4) + ipow(p, 3) + p * p + p))
        sink.add(11, "Hasan et al. 2021: d = (p-2)p^6+(p-2)p^5+(p-1)p^4+p^3+p^2+p, c = -1, m = 7, uniformity 1",
                 "d = (p-2)p^6+(p-2)p^5+(p-1)p^4+p^3+p^2+p, m = 7", ClaimKind::kPcn);
      // 12
      if (ctx.exponent_is((ipow(p, 7) + 1) / (p + 1)))
        sink.add(12, "Hasan et al. 2021: d = (p^7+1)/(p+1), c = -1, m = 7, uniformity 1", "d = (p^7+1)/(p+1), m = 7",
                 ClaimKind::kPcn);
    }
  }

  if (p == 3) {
    // 13
    if (ctx.c_is_minus_one() && m % 2 == 0 && ctx.exponent_is((q + 3) / 2))
      sink.add(13, "Mesnager et al. 2020: p = 3, d = (3^m+3)/2, c = -1, m even, uniformity 2",
               "d = (3^m+3)/2, m even", ClaimKind::kApcn);
    // 14
    if (ctx.c_is_zero() && q > 3 && ctx.exponent_is(q - 3))
      sink.add(14, "Mesnager et al. 2020: p = 3, d = 3^m-3, c = 0, uniformity 2", "d = 3^m-3, c = 0",
               ClaimKind::kApcn);
  }

  // 15: (p^k+1)/2, c = -1, v2(m) <= v2(k)+1, within 1 <= k < m, m >= 3
  if (odd && ctx.c_is_minus_one() && m >= 3) {
    for_each_k(1, m - 1, [&](unsigned k) {
      if (!ctx.exponent_is((ipow(p, k) + 1) / 2)) return false;
      if (v2(m) > Valuation(v2(k).value() + 1)) return false;
      sink.add(15, "Mesnager et al. 2020: d = (p^k+1)/2, v2(m) <= v2(k)+1, c = -1, uniformity 1",
               with_k("d = (p^k+1)/2, v2(m) <= v2(k)+1", k), ClaimKind::kPcn);
      return true;
    });
  }

  // 16: p^k+1, v2(m) <= v2(k), 1 != c in GF(p^gcd(m,k))
  if (odd && !ctx.c_is_one()) {
    for_each_k(1, kmax, [&](unsigned k) {
      if (!ctx.exponent_is(ipow(p, k) + 1) || v2(m) > v2(k) || !F.in_subfield(c, std::gcd(m, k))) return false;
      sink.add(16, "Mesnager et al. 2020: d = p^k+1, v2(m) <= v2(k), 1 != c in GF(p^gcd(m,k)), uniformity 2",
               with_k("d = p^k+1, v2(m) <= v2(k), c in subfield", k), ClaimKind::kApcn);
      return true;
    });
  }

  // 17: 2^k+1, v2(m) <= v2(k), k >= 2, 1 != c in GF(2^gcd(m,k))
  if (!odd && !ctx.c_is_one()) {
    for_each_k(2, kmax, [&](unsigned k) {
      if (!ctx.exponent_is(ipow(2, k) + 1) || v2(m) > v2(k) || !F.in_subfield(c, std::gcd(m, k))) return false;
      sink.add(17, "Mesnager et al. 2020: d = 2^k+1, v2(m) <= v2(k), k >= 2, 1 != c in GF(2^gcd(m,k)), uniformity 1",
               with_k("d = 2^k+1, v2(m) <= v2(k), c in subfield", k), ClaimKind::kPcn);
      return true;
    });
  }

  if (p == 3 && ctx.c_is_minus_one()) {
    // 18
    for_each_k(1, kmax, [&](unsigned k) {
      if (!ctx.exponent_is((ipow(3, k) + 1) / 2) || k % 2 == 0 || std::gcd(k, m) != 1) return false;
      sink.add(18, "Yan et al. 2020: p = 3, d = (3^k+1)/2, k odd, gcd(k,m) = 1, c = -1, uniformity 2",
               with_k("d = (3^k+1)/2, k odd, gcd(k,m) = 1", k), ClaimKind::kApcn);
      return true;
    });
  }

  // 19, 20: (p^k+1)/2 d = (p^m+1)/2 mod p^m-1 with d odd
  if ((p == 3 || p == 5) && ctx.c_is_minus_one() && ctx.d_rep % 2 == 1) {
    for_each_k(1, kmax, [&](unsigned k) {
      const bool side = p == 3 ? (k % 2 == 1 && m % 2 == 1 && std::gcd(m, k) == 1) : std::gcd(2 * m, k) == 1;
      if (!side) return false;
      const std::uint64_t half = ((powmod(p, k, 2 * n) + 1) / 2) % n;
      const auto lhs = static_cast<std::uint64_t>((static_cast<unsigned __int128>(ctx.d_rep % n) * half) % n);
      if (lhs != ((q + 1) / 2) % n) return false;
      if (p == 3)
        sink.add(19, "Zha-Hu 2021: p = 3, (3^k+1)/2 d = (3^m+1)/2 mod 3^m-1, d odd, k and m odd, gcd(m,k) = 1, "
                     "c = -1, uniformity 1",
                 with_k("congruence holds, d odd, k and m odd, gcd(m,k) = 1", k), ClaimKind::kPcn);
      else
        sink.add(20, "Zha-Hu 2021: p = 5, (5^k+1)/2 d = (5^m+1)/2 mod 5^m-1, d odd, gcd(2m,k) = 1, c = -1, "
                     "uniformity 1",
                 with_k("congruence holds, d odd, gcd(2m,k) = 1", k), ClaimKind::kPcn);
      return true;
    });
  }

  return sink.take();
}

}  // namespace pcn
