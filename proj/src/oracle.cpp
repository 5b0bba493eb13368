#include "pcn/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

namespace pcn {

std::string FormulaValue::to_string() const {
  if (integral()) return std::to_string(value());
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

FormulaValue fraction(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return FormulaValue{num, den};
}

std::int64_t spow(std::int64_t b, unsigned e) { return static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(b), e)); }

}  // namespace

std::map<std::uint64_t, FormulaValue> bluher_formula(std::uint64_t p, std::uint64_t Q_, unsigned h) {
  const auto Q = static_cast<std::int64_t>(Q_);
  const std::int64_t Qh = spow(Q, h);
  const std::int64_t Qh1 = Qh * Q;                // Q^(h+1)
  const std::int64_t Qhm1 = h >= 1 ? Qh / Q : 0;  // Q^(h-1)
  const std::uint64_t top = Q_ + 1;
  std::map<std::uint64_t, FormulaValue> f;
  if (h % 2 == 0) {
    f[0] = fraction(Qh1 - Q, 2 * (Q + 1));
    f[1] = fraction(Qhm1, 1);
    f[2] = fraction((Q - 2) * (Qh - 1), 2 * (Q - 1));
    f[top] = fraction(Qhm1 - Q, Q * Q - 1);
  } else if (p % 2 == 1) {
    f[0] = fraction(Qh1 - 1, 2 * (Q + 1));
    f[1] = fraction(Qhm1, 1);
    f[2] = fraction(Qh1 - 2 * Qh - 2 * Q + 3, 2 * (Q - 1));
    f[top] = fraction(Qhm1 - Q, Q * Q - 1);
  } else {
    f[0] = fraction(Qh1 + Q, 2 * (Q + 1));
    f[1] = fraction(Qhm1 - 1, 1);
    f[2] = fraction((Q - 2) * (Qh - 1), 2 * (Q - 1));
    f[top] = fraction(Qhm1 - 1, Q * Q - 1);
  }
  return f;
}

std::uint64_t BluherReport::sum_counts() const {
  std::uint64_t s = 0;
  for (const auto& [i, n] : counts_bruteforce) s += n;
  return s;
}

std::uint64_t BluherReport::sum_weighted() const {
  std::uint64_t s = 0;
  for (const auto& [i, n] : counts_bruteforce) s += i * n;
  return s;
}

bool BluherReport::all_agree() const {
  return std::all_of(agrees.begin(), agrees.end(), [](const auto& kv) { return kv.second; });
}

std::vector<std::uint64_t> BluherReport::non_integral_entries() const {
  std::vector<std::uint64_t> out;
  for (const auto& [i, v] : counts_formula)
    if (!v.integral()) out.push_back(i);
  return out;
}

BluherReport bluher_counts(const Field& F, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const std::uint64_t p = F.characteristic();
  const unsigned m = F.degree();
  const unsigned g = std::gcd(m, k);
  const std::uint64_t n = F.order() - 1;
  BluherReport R;
  R.Q = ipow(p, g);
  R.h = m / g;
  R.formula_case = R.h % 2 == 0 ? 1 : (p % 2 == 1 ? 2 : 3);

  // Every root x lies outside {0, 1} and pins b = x^(p^k+1) / (x - 1), so one
  // pass over x tallies the roots of every g_b at once.
  const std::uint64_t e = (powmod(p, k, n) + 1) % n;
  R.roots_per_b.assign(F.order(), 0);
  for (std::uint32_t xc = 2; xc < F.order(); ++xc) {  // codes 0 and 1 are x = 0, 1
    const Element x{xc};
    const Element b = F.div(F.pow(x, e == 0 ? n : e), F.sub(x, F.one()));
    ++R.roots_per_b[b.code];
  }
  R.counts_formula = bluher_formula(p, R.Q, R.h);
  for (const auto& [i, v] : R.counts_formula) R.counts_bruteforce[i] = 0;
  for (std::uint32_t b = 1; b < F.order(); ++b) {
    const std::uint64_t r = R.roots_per_b[b];
    if (!R.counts_bruteforce.contains(r)) {
      if (std::find(R.unexpected_root_counts.begin(), R.unexpected_root_counts.end(), r) ==
          R.unexpected_root_counts.end())
        R.unexpected_root_counts.push_back(r);
    }
    ++R.counts_bruteforce[r];
  }
  std::sort(R.unexpected_root_counts.begin(), R.unexpected_root_counts.end());
  for (const auto& [i, v] : R.counts_formula)
    R.agrees[i] = v.integral() && static_cast<std::uint64_t>(v.value()) == R.counts_bruteforce[i];
  return R;
}

// ---------------------------------------------------------------------------

SystemCountReport system_counts(const Field& F, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const std::uint64_t p = F.characteristic();
  if (p == 2) throw std::invalid_argument("systems need odd characteristic");
  const unsigned m = F.degree();
  const std::uint32_t q = F.order();
  const std::uint64_t n = q - 1;
  SystemCountReport R;
  R.k = k;
  R.hypothesis = powmod(p, k, 4) == 3 && powmod(p, m, 4) == 3;
  R.counts.assign(q, {0, 0, 0, 0});

  const std::uint64_t gold = (powmod(p, k, n) + 1) % n;               // p^k+1
  const std::uint64_t half = ((powmod(p, k, 2 * n) + 1) / 2) % n;     // (p^k+1)/2
  const auto as_exp = [n](std::uint64_t e) { return e == 0 ? n : e; };

  // b -> b^((p^k+1)/2) need not be injective; keep every preimage.
  std::vector<std::vector<std::uint32_t>> preimages(q);
  for (std::uint32_t b = 0; b < q; ++b) preimages[F.pow(Element{b}, as_exp(half)).code].push_back(b);

  std::vector<Element> sq(q), gp(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    sq[x] = F.mul(Element{x}, Element{x});
    gp[x] = F.pow(Element{x}, as_exp(gold));
  }
  const Element one = F.one();
  const Element minus_one = F.minus_one();
  auto credit = [&](Element target, int system) {
    for (std::uint32_t b : preimages[target.code]) ++R.counts[b][system];
  };
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t y = 1; y < q; ++y) {
      const Element plus = F.add(sq[x], sq[y]);
      const Element minus = F.sub(sq[x], sq[y]);
      const Element gdiff = F.sub(gp[x], gp[y]);
      const Element gsum = F.add(gp[x], gp[y]);
      if (plus == one) credit(F.neg(gdiff), 0);       // b^e = -(x^g - y^g)
      if (minus == one) credit(F.neg(gsum), 1);       // b^e = -(x^g + y^g)
      if (minus == minus_one) credit(gsum, 2);        // b^e = x^g + y^g
      if (plus == minus_one) credit(gdiff, 3);        // b^e = x^g - y^g
    }
  }

  if (R.hypothesis) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto& c = R.counts[b];
      int nonzero = 0;
      for (int i = 0; i < 4; ++i) {
        if (c[i] != 0) ++nonzero;
        if (c[i] != 0 && c[i] != 4)
          R.violations.push_back({Element{b}, "system " + std::to_string(i + 1) + " has " + std::to_string(c[i]) +
                                                  " solutions (expected 0 or 4)"});
      }
      if ((Element{b} == one || Element{b} == minus_one) && nonzero != 0)
        R.violations.push_back({Element{b}, "nonzero count at b = +-1"});
      if (nonzero > 1) R.violations.push_back({Element{b}, "more than one system solvable"});
    }
  }
  return R;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint64_t, Element>> ScanReport::pairs() const {
  std::vector<std::pair<std::uint64_t, Element>> out;
  for (const auto& e : entries)
    for (Element c : e.pcn_constants) out.emplace_back(e.d, c);
  return out;
}

namespace {

struct ScanPartial {
  std::vector<ScanEntry> entries;
  std::uint64_t pairs_tested = 0;
  std::uint64_t evaluations = 0;
};

void scan_exponents(const Field& F, std::uint64_t first, std::uint64_t stride, ScanPartial& out) {
  const std::uint64_t n = F.order() - 1;
  for (std::uint64_t d = first; d <= n; d += stride) {
    const PowerMap P = PowerMap::make(F, d);
    if (P.gcd_d != 1) continue;  // the a = 0 term already has gcd(d, n) > 1 solutions
    PcnProbe probe(F, P);
    ScanEntry entry;
    entry.d = d;
    for (std::uint32_t c = 0; c < F.order(); ++c) {
      if (Element{c} == F.one()) continue;
      ++out.pairs_tested;
      if (probe.is_pcn(Element{c}, &out.evaluations)) entry.pcn_constants.push_back(Element{c});
    }
    if (!entry.pcn_constants.empty()) out.entries.push_back(std::move(entry));
  }
}

}  // namespace

ScanReport pcn_scan(const Field& F, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t n = F.order() - 1;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, n));
  std::vector<ScanPartial> parts(workers);
  if (workers == 1) {
    scan_exponents(F, 1, 1, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { scan_exponents(F, 1 + w, workers, parts[w]); });
    for (auto& t : threads) t.join();
  }
  ScanReport R;
  R.p = F.characteristic();
  R.m = F.degree();
  R.exponents_scanned = n;
  for (auto& part : parts) {
    R.pairs_tested += part.pairs_tested;
    R.evaluations += part.evaluations;
    for (auto& e : part.entries) R.entries.push_back(std::move(e));
  }
  std::sort(R.entries.begin(), R.entries.end(), [](const auto& a, const auto& b) { return a.d < b.d; });
  R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return R;
}

std::vector<std::uint64_t> ConjectureVerdict::exponents() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : scan.entries)
    if (std::any_of(e.pcn_constants.begin(), e.pcn_constants.end(), [](Element c) { return c.code != 0; }))
      out.push_back(e.d);
  return out;
}

ConjectureVerdict conjecture_check(const Field& F, unsigned workers) {
  if (F.characteristic() != 2) throw std::invalid_argument("the conjecture concerns GF(2^m)");
  ConjectureVerdict V;
  V.m = F.degree();
  V.scan = pcn_scan(F, workers);
  V.predicted = corollary_pcn_set_gf2(V.m);
  std::vector<std::pair<std::uint64_t, Element>> expected;
  for (const auto& [d, degs] : V.predicted.exponents)
    for (std::uint32_t c = 2; c < F.order(); ++c)
      if (V.predicted.admits(F, d, Element{c})) expected.emplace_back(d, Element{c});
  std::vector<std::pair<std::uint64_t, Element>> measured;
  for (const auto& pair : V.scan.pairs())
    if (pair.second.code != 0) measured.push_back(pair);
  std::set_difference(measured.begin(), measured.end(), expected.begin(), expected.end(),
                      std::back_inserter(V.scan_not_predicted));
  std::set_difference(expected.begin(), expected.end(), measured.begin(), measured.end(),
                      std::back_inserter(V.predicted_not_scan));
  return V;
}

ConjectureVerdict conjecture_check(unsigned m, unsigned workers) {
  return conjecture_check(Field::build(2, m), workers);
}

// ---------------------------------------------------------------------------

Verdict verify_prediction(const Prediction& P, const Field& F, std::uint64_t d, Element c) {
  if (!P.applicable || !P.claim) throw std::invalid_argument("prediction " + P.theorem_id + " is not applicable");
  const PowerMap map = PowerMap::make(F, d);
  const auto counts = derivative_counts(F, map, c, F.one());
  const UniformityReport U = c_uniformity(F, map, c);
  Verdict V;
  V.uniformity = U.uniformity;
  V.spectrum = spectrum_from_counts(counts);
  std::ostringstream os;
  const Claim& claim = *P.claim;
  switch (claim.kind) {
    case ClaimKind::kPcn: V.confirmed = U.uniformity == 1; break;
    case ClaimKind::kNotPcn: V.confirmed = U.uniformity != 1; break;
    case ClaimKind::kApcn: V.confirmed = U.uniformity == 2; break;
    case ClaimKind::kUniformity: V.confirmed = U.uniformity == claim.value; break;
    case ClaimKind::kSpectrum: V.confirmed = V.spectrum == claim.spectrum; break;
  }
  if (claim.kind == ClaimKind::kSpectrum) {
    os << "spectrum (";
    for (std::size_t i = 0; i < V.spectrum.omega.size(); ++i) os << (i ? ", " : "") << V.spectrum.omega[i];
    os << "), uniformity " << U.uniformity;
  } else {
    os << "uniformity " << U.uniformity << " (" << to_string(U.classification) << ")";
  }
  V.measured = os.str();
  return V;
}

}  // namespace pcn
