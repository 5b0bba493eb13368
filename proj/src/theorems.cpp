#include "pcn/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pcn {

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::kPcn: return "PcN";
    case ClaimKind::kNotPcn: return "not-PcN";
    case ClaimKind::kApcn: return "APcN";
    case ClaimKind::kUniformity: return "uniformity";
    case ClaimKind::kSpectrum: return "spectrum";
  }
  return "?";
}

std::string Claim::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ClaimKind::kUniformity: os << "uniformity = " << value; break;
    case ClaimKind::kSpectrum: {
      os << "spectrum = (";
      for (std::size_t i = 0; i < spectrum.omega.size(); ++i) os << (i ? ", " : "") << spectrum.omega[i];
      os << ")";
      break;
    }
    default: os << to_string(kind);
  }
  return os.str();
}

std::string to_string(CongruenceFamily f) { return f == CongruenceFamily::kT1 ? "T1" : "T2"; }

namespace {

Prediction not_applicable(std::string id, std::string citation, std::string reason) {
  Prediction P;
  P.theorem_id = std::move(id);
  P.citation = std::move(citation);
  P.applicable = false;
  P.reason = std::move(reason);
  return P;
}

Prediction applicable(std::string id, std::string citation, std::string reason, Claim claim) {
  Prediction P;
  P.theorem_id = std::move(id);
  P.citation = std::move(citation);
  P.applicable = true;
  P.reason = std::move(reason);
  P.claim = std::move(claim);
  return P;
}

Claim pcn_claim() { return Claim{ClaimKind::kPcn, 1, {}}; }
Claim not_pcn_claim() { return Claim{ClaimKind::kNotPcn, 0, {}}; }

std::string v2_text(std::uint64_t n) { return v2(n).to_string(); }

// Representative of an exponent in [1, n]; 0 for the invalid exponent 0.
std::uint64_t rep(std::uint64_t e, std::uint64_t n) {
  if (e == 0) return 0;
  const std::uint64_t r = e % n;
  return r == 0 ? n : r;
}

constexpr const char* kGoldCitation =
    "x^(2^k+1) over GF(2^m) is PcN iff v2(m) <= v2(k) and c in GF(2^gcd(k,m)) minus {1}";
constexpr const char* kHalfGoldCitation =
    "x^((p^k+1)/2), c=-1, 1<=k<m, m>=3: PcN iff v2(m) <= v2(k)+1, else uniformity (p^gcd(k,m)+1)/2";
constexpr const char* k3mod4Citation =
    "p^m = 3 mod 4, d(p^k+1) = 2 mod p^m-1, c=-1: x^d is PcN iff d is odd";
constexpr const char* k1mod4Citation =
    "p^m = 1 mod 4, v2(k) = v2(m), d(p^k+1)/2 = (p^m+1)/2 mod p^m-1, c=-1: x^d is PcN";
constexpr const char* kApcnCitation =
    "x^(p^k+1), p odd: c in GF(p^gcd(m,k)) minus {1} gives spectrum ((p^m-1)/2, 1, (p^m-1)/2) iff "
    "v2(m) <= v2(k); c outside gives ((p^m-p^(m/2))/2, p^(m/2), (p^m-p^(m/2))/2) iff k = m/2";

}  // namespace

// ---------------------------------------------------------------------------

Prediction predict_gold_gf2(const Field& F, unsigned k, Element c) {
  if (F.characteristic() != 2) throw std::invalid_argument("gold criterion needs p = 2");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  F.check(c);
  if (c == F.one()) throw std::invalid_argument("no PcN function exists for c = 1 in characteristic 2");
  const unsigned m = F.degree();
  const unsigned g = std::gcd(k, m);
  const bool valuation_ok = v2(m) <= v2(k);
  const bool in_sub = F.in_subfield(c, g);
  std::ostringstream why;
  why << "v2(m)=" << v2_text(m) << (valuation_ok ? " <= " : " > ") << "v2(k)=" << v2_text(k) << "; c "
      << (in_sub ? "in" : "not in") << " GF(2^" << g << ")";
  Prediction P = applicable("gold-gf2", kGoldCitation, why.str(),
                            valuation_ok && in_sub ? pcn_claim() : not_pcn_claim());
  P.d = (std::uint64_t{1} << k) + 1;
  P.c = c;
  return P;
}

bool CorollarySet::admits(const Field& F, std::uint64_t d, Element c) const {
  if (c == F.one()) return false;
  const auto it = exponents.find(rep(d, F.order() - 1));
  if (it == exponents.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](unsigned g) { return F.in_subfield(c, g); });
}

CorollarySet corollary_pcn_set_gf2(unsigned m) {
  if (m < 1 || m > 62) throw std::invalid_argument("m out of range");
  CorollarySet S;
  S.m = m;
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  auto twist_orbit = [&](std::uint64_t d, unsigned g) {
    for (unsigned j = 0; j < m; ++j) {
      S.exponents[rep(d, n)].insert(g);
      d = (d * 2) % n;
    }
  };
  // powers of two with any c != 1
  twist_orbit(1, m);
  // Gold exponents and their inverses; k in [1, m] covers every residue of k
  // mod m together with the valuation condition.
  for (unsigned k = 1; k <= m; ++k) {
    if (v2(m) > v2(k)) continue;
    const unsigned g = std::gcd(k, m);
    const std::uint64_t gold = ((std::uint64_t{1} << k) + 1) % n;
    twist_orbit(gold == 0 ? n : gold, g);
    if (auto inv = inverse_mod(gold, n)) twist_orbit(*inv, g);
  }
  // GF(2^g) lies inside GF(2^h) when g | h; keep the largest subfields only.
  for (auto& [d, degs] : S.exponents) {
    std::set<unsigned> maximal;
    for (unsigned g : degs) {
      const bool inside_other =
          std::any_of(degs.begin(), degs.end(), [&](unsigned h) { return h != g && h % g == 0; });
      if (!inside_other) maximal.insert(g);
    }
    degs = std::move(maximal);
  }
  return S;
}

// ---------------------------------------------------------------------------

Prediction predict_half_gold(std::uint64_t p, unsigned m, unsigned k) {
  if (p == 2 || !is_prime(p))
    return not_applicable("half-gold", kHalfGoldCitation, "needs an odd prime p");
  if (k < 1 || k >= m || m < 3)
    return not_applicable("half-gold", kHalfGoldCitation, "outside the stated range 1 <= k < m, m >= 3");
  const bool ok = v2(m) <= Valuation(v2(k).value() + 1);
  std::ostringstream why;
  why << "v2(m)=" << v2_text(m) << (ok ? " <= " : " > ") << "v2(k)+1=" << v2(k).value() + 1;
  Claim claim = ok ? pcn_claim()
                   : Claim{ClaimKind::kUniformity, (ipow(p, std::gcd(k, m)) + 1) / 2, {}};
  Prediction P = applicable("half-gold", kHalfGoldCitation, why.str(), claim);
  P.d = (ipow(p, k) + 1) / 2;
  return P;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % n), r = n;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(n);
  if (inv < 0) inv += n;
  return static_cast<std::uint64_t>(inv);
}

std::vector<std::uint64_t> solve_linear_congruence(std::uint64_t a, std::uint64_t r, std::uint64_t n) {
  a %= n;
  r %= n;
  const std::uint64_t g = std::gcd(a, n);  // gcd(0, n) = n
  if (r % g != 0) return {};
  const std::uint64_t n_g = n / g;
  const std::uint64_t base =
      n_g == 1 ? 0
               : static_cast<std::uint64_t>((static_cast<unsigned __int128>(r / g) * *inverse_mod(a / g, n_g)) % n_g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < g; ++t) {
    const std::uint64_t v = (base + t * n_g) % n;
    out.push_back(v == 0 ? n : v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> CongruenceSolution::odd_solutions() const {
  std::vector<std::uint64_t> out;
  std::copy_if(solutions.begin(), solutions.end(), std::back_inserter(out), [](auto d) { return d % 2 == 1; });
  return out;
}

std::vector<std::uint64_t> CongruenceSolution::even_solutions() const {
  std::vector<std::uint64_t> out;
  std::copy_if(solutions.begin(), solutions.end(), std::back_inserter(out), [](auto d) { return d % 2 == 0; });
  return out;
}

CongruenceSolution solve_congruence(std::uint64_t p, unsigned m, unsigned k, CongruenceFamily family) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("congruence families need an odd prime p");
  if (k == 0 || m == 0) throw std::invalid_argument("k and m must be >= 1");
  CongruenceSolution S;
  S.family = family;
  S.p = p;
  S.m = m;
  S.k = k;
  const std::uint64_t q = ipow(p, m);
  const std::uint64_t n = q - 1;
  S.modulus = n;
  // p^k mod 2n keeps enough information to halve p^k+1 exactly mod n.
  const std::uint64_t pk_2n = powmod(p, k, 2 * n);
  if (family == CongruenceFamily::kT1) {
    S.coefficient = (pk_2n + 1) % n;
    S.rhs = 2 % n;
  } else {
    S.coefficient = ((pk_2n + 1) / 2) % n;
    S.rhs = ((q + 1) / 2) % n;
  }
  S.gcd = std::gcd(S.coefficient, n);
  S.solutions = solve_linear_congruence(S.coefficient, S.rhs, n);
  S.solvable = !S.solutions.empty();
  for (std::uint64_t d : S.solutions) {
    // d (p^k+1) - 2 = l n; reduce mod 2n to read the parity of l.
    const unsigned __int128 prod = static_cast<unsigned __int128>(d % (2 * n)) * ((pk_2n + 1) % (2 * n));
    const std::uint64_t x = static_cast<std::uint64_t>(prod % (2 * n));
    const std::uint64_t diff = (x + 2 * n - 2) % (2 * n);
    S.ell_odd.push_back(diff / n == 1);
  }
  return S;
}

Prediction predict_thm_3mod4(std::uint64_t p, unsigned m, unsigned k, std::uint64_t d) {
  if (p == 2 || !is_prime(p)) return not_applicable("thm-3mod4", k3mod4Citation, "needs an odd prime p");
  if (k == 0 || m == 0 || d == 0) return not_applicable("thm-3mod4", k3mod4Citation, "k, m, d must be >= 1");
  if (powmod(p, m, 4) != 3) return not_applicable("thm-3mod4", k3mod4Citation, "p^m is not 3 mod 4");
  const std::uint64_t n = ipow(p, m) - 1;
  const std::uint64_t lhs = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(d % n) * ((powmod(p, k, n) + 1) % n)) % n);
  if (lhs != 2 % n) return not_applicable("thm-3mod4", k3mod4Citation, "d(p^k+1) is not 2 mod p^m-1");
  const bool odd = d % 2 == 1;
  Prediction P = applicable("thm-3mod4", k3mod4Citation,
                            std::string("congruence holds; d is ") + (odd ? "odd" : "even"),
                            odd ? pcn_claim() : not_pcn_claim());
  P.d = d;
  return P;
}

Prediction predict_thm_1mod4(std::uint64_t p, unsigned m, unsigned k, std::uint64_t d) {
  if (p == 2 || !is_prime(p)) return not_applicable("thm-1mod4", k1mod4Citation, "needs an odd prime p");
  if (k == 0 || m == 0 || d == 0) return not_applicable("thm-1mod4", k1mod4Citation, "k, m, d must be >= 1");
  if (powmod(p, m, 4) != 1) return not_applicable("thm-1mod4", k1mod4Citation, "p^m is not 1 mod 4");
  if (v2(k) != v2(m)) return not_applicable("thm-1mod4", k1mod4Citation, "v2(k) != v2(m)");
  const std::uint64_t q = ipow(p, m);
  const std::uint64_t n = q - 1;
  const std::uint64_t half = ((powmod(p, k, 2 * n) + 1) / 2) % n;
  const std::uint64_t lhs =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(d % n) * half) % n);
  if (lhs != ((q + 1) / 2) % n)
    return not_applicable("thm-1mod4", k1mod4Citation, "d(p^k+1)/2 is not (p^m+1)/2 mod p^m-1");
  Prediction P = applicable("thm-1mod4", k1mod4Citation, "all side conditions hold", pcn_claim());
  P.d = d;
  return P;
}

Prediction predict_apcn_spectrum(const Field& F, unsigned k, Element c) {
  const std::uint64_t p = F.characteristic();
  const unsigned m = F.degree();
  if (p == 2) return not_applicable("apcn-spectrum", kApcnCitation, "needs odd p");
  if (k == 0) return not_applicable("apcn-spectrum", kApcnCitation, "k must be >= 1");
  F.check(c);
  if (c == F.one()) return not_applicable("apcn-spectrum", kApcnCitation, "c = 1 excluded");
  const unsigned g = std::gcd(m, k);
  const std::uint64_t q = F.order();
  Prediction P;
  if (F.in_subfield(c, g)) {
    if (v2(m) > v2(k))
      return not_applicable("apcn-spectrum", kApcnCitation,
                            "c in GF(p^" + std::to_string(g) + ") but v2(m) > v2(k)");
    P = applicable("apcn-spectrum", kApcnCitation,
                   "c in GF(p^" + std::to_string(g) + ") minus {1}, v2(m) <= v2(k)",
                   Claim{ClaimKind::kSpectrum, 2, Spectrum{{(q - 1) / 2, 1, (q - 1) / 2}}});
  } else {
    if (m % 2 != 0 || 2 * k != m)
      return not_applicable("apcn-spectrum", kApcnCitation,
                            "c outside GF(p^" + std::to_string(g) + ") and k != m/2");
    const std::uint64_t s = ipow(p, m / 2);
    P = applicable("apcn-spectrum", kApcnCitation, "c outside GF(p^" + std::to_string(g) + "), k = m/2",
                   Claim{ClaimKind::kSpectrum, 2, Spectrum{{(q - s) / 2, s, (q - s) / 2}}});
    // The a = 0 term contributes gcd(p^k+1, p^m-1) = p^(m/2)+1 > 2.
    P.notes.push_back("spectrum is taken at a = 1; the a = 0 term gcd(d, p^m-1) = " +
                      std::to_string(s + 1) + " exceeds 2, so the full uniformity is " +
                      std::to_string(s + 1));
  }
  P.d = ipow(p, k) + 1;
  P.c = c;
  return P;
}

DualPair inverse_exponent_dual(const Field& F, std::uint64_t d, Element c) {
  F.check(c);
  const std::uint64_t n = F.order() - 1;
  const auto inv = inverse_mod(d % n, n);
  if (!inv) throw std::invalid_argument("d = " + std::to_string(d) + " is not invertible mod p^m-1");
  DualPair r;
  r.d_inv = rep(*inv == 0 ? n : *inv, n);
  r.c_prime = F.pow(c, d);
  const bool fixed = c == F.zero() || c == F.one() || c == F.minus_one();
  if (fixed && r.c_prime != c) throw std::logic_error("c^d != c for c in {0, 1, -1}");
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Prediction> all_predictions(const Field& F, std::uint64_t d, Element c) {
  std::vector<Prediction> out = known_families_lookup(F, d, c);
  const std::uint64_t p = F.characteristic();
  const unsigned m = F.degree();
  const std::uint64_t n = F.order() - 1;
  const std::uint64_t dr = rep(d, n);
  auto tag = [&](Prediction P, unsigned k) {
    P.notes.insert(P.notes.begin(), "matched with k = " + std::to_string(k));
    P.d = d;
    P.c = c;
    return P;
  };
  if (p == 2) {
    if (c != F.one()) {
      for (unsigned k = 1; k <= m; ++k) {
        if (rep((std::uint64_t{1} << k) + 1, n) == dr) {
          out.push_back(tag(predict_gold_gf2(F, k, c), k));
          break;
        }
      }
    }
    return out;
  }
  const bool minus_one = c == F.minus_one();
  if (minus_one) {
    for (unsigned k = 1; k < m; ++k) {
      if (rep((ipow(p, k) + 1) / 2, n) == dr) {
        auto P = predict_half_gold(p, m, k);
        if (P.applicable) {
          out.push_back(tag(std::move(P), k));
          break;
        }
      }
    }
    for (unsigned k = 1; k <= 2 * m; ++k) {
      auto P = predict_thm_3mod4(p, m, k, d);
      if (P.applicable) {
        out.push_back(tag(std::move(P), k));
        break;
      }
    }
    for (unsigned k = 1; k <= 2 * m; ++k) {
      auto P = predict_thm_1mod4(p, m, k, d);
      if (P.applicable) {
        out.push_back(tag(std::move(P), k));
        break;
      }
    }
  }
  if (c != F.one()) {
    for (unsigned k = 1; k <= 2 * m; ++k) {
      if (rep(ipow(p, k) + 1, n) != dr) continue;
      auto P = predict_apcn_spectrum(F, k, c);
      if (P.applicable) {
        out.push_back(tag(std::move(P), k));
        break;
      }
    }
  }
  return out;
}

}  // namespace pcn
