#include "pcn/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pcn/cdiff.hpp"
#include "pcn/oracle.hpp"
#include "pcn/theorems.hpp"

namespace pcn {

bool SuiteReport::passed() const { return failed_assertions() == 0; }

std::size_t SuiteReport::failed_assertions() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.assertion && !c.passed; }));
}

const std::vector<std::uint64_t>& published_u_m6() {
  static const std::vector<std::uint64_t> u{1, 2, 4, 8, 10, 13, 16, 17, 19, 20, 26, 32, 34, 38, 40, 41, 52};
  return u;
}

namespace {

using Triple = std::tuple<std::uint32_t, unsigned, unsigned>;

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

std::string field_label(std::uint32_t p, unsigned m) {
  return "GF(" + std::to_string(p) + "^" + std::to_string(m) + ")";
}

void require_no_p(const SuiteParams& params, const std::string& suite) {
  if (params.p || params.m || params.k)
    throw std::invalid_argument("suite '" + suite + "' runs a fixed parameter list and takes no -p/-m/-k");
}

// Either the built-in list or the single triple given on the command line.
std::vector<Triple> triples(const SuiteParams& params, std::vector<Triple> defaults, const std::string& suite) {
  if (!params.p && !params.m && !params.k) return defaults;
  if (!params.p || !params.m)
    throw std::invalid_argument("suite '" + suite + "' needs both -p and -m when overriding its parameters");
  return {Triple{*params.p, *params.m, params.k.value_or(1)}};
}

// ---------------------------------------------------------------------------

void run_examples(const SuiteParams& params, SuiteReport& R) {
  require_no_p(params, "examples");
  struct Row {
    std::uint32_t p;
    unsigned m;
    std::uint64_t d;
  };
  const Row rows[] = {{3, 5, 61}, {7, 3, 43}, {11, 3, 111}, {5, 5, 3645}, {13, 3, 157}};
  for (const Row& row : rows) {
    const Field F = Field::build(row.p, row.m, params.cap);
    const auto U = c_uniformity(F, PowerMap::make(F, row.d), F.minus_one(), params.workers);
    std::ostringstream detail;
    detail << "measured uniformity " << U.uniformity << " (" << to_string(U.classification) << ")";
    for (const Prediction& P : all_predictions(F, row.d, F.minus_one())) {
      if (P.theorem_id != "thm-3mod4" && P.theorem_id != "thm-1mod4") continue;
      const Verdict V = verify_prediction(P, F, row.d, F.minus_one());
      detail << "; " << P.theorem_id << " " << (V.confirmed ? "confirmed" : "refuted");
    }
    R.checks.push_back({"p=" + std::to_string(row.p) + " m=" + std::to_string(row.m) + " d=" + std::to_string(row.d) +
                            " c=-1 is PcN",
                        true, U.uniformity == 1, detail.str()});
  }

  const Field F = Field::build(17, 3, params.cap);
  const CongruenceSolution T2 = solve_congruence(17, 3, 1, CongruenceFamily::kT2);
  const auto u111 = c_uniformity(F, PowerMap::make(F, 111), F.minus_one(), params.workers);
  const bool listed_in_t2 = std::binary_search(T2.solutions.begin(), T2.solutions.end(), 111);
  R.checks.push_back({"p=17 m=3 d=111 c=-1 (listed as PcN)", false, u111.uniformity == 1,
                      "measured uniformity " + std::to_string(u111.uniformity) + " (" +
                          to_string(u111.classification) + "); 111 " +
                          (listed_in_t2 ? "solves" : "does not solve") +
                          " d(p+1)/2 = (p^3+1)/2 mod p^3-1, whose solutions are " + join(T2.solutions)});
  const auto u273 = c_uniformity(F, PowerMap::make(F, 273), F.minus_one(), params.workers);
  const bool in_t2 = std::binary_search(T2.solutions.begin(), T2.solutions.end(), 273);
  R.checks.push_back({"p=17 m=3 d=273 c=-1 is PcN", true, u273.uniformity == 1 && in_t2,
                      "measured uniformity " + std::to_string(u273.uniformity) + "; congruence solution: " +
                          (in_t2 ? "yes" : "no")});
}

// ---------------------------------------------------------------------------

void run_gold(const SuiteParams& params, SuiteReport& R) {
  if (params.p && *params.p != 2) throw std::invalid_argument("suite 'gold' is for p = 2");
  if (params.k) throw std::invalid_argument("suite 'gold' runs every k and takes no -k");
  std::vector<unsigned> ms;
  if (params.m)
    ms.push_back(*params.m);
  else
    for (unsigned m = 2; m <= 8; ++m) ms.push_back(m);

  for (unsigned m : ms) {
    const Field F = Field::build(2, m, params.cap);
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::string first;
    for (unsigned k = 1; k < m; ++k) {
      const PowerMap P = PowerMap::make(F, ipow(2, k) + 1);
      PcnProbe probe(F, P);
      for (std::uint32_t cc = 0; cc < F.order(); ++cc) {
        const Element c{cc};
        if (c == F.one()) continue;
        ++cases;
        const bool measured = probe.is_pcn(c);
        const Prediction pred = predict_gold_gf2(F, k, c);
        const bool predicted = pred.claim && pred.claim->kind == ClaimKind::kPcn;
        if (measured != predicted) {
          if (mismatches++ == 0)
            first = "; first mismatch at k=" + std::to_string(k) + " c=" + std::to_string(cc);
        }
      }
    }
    R.checks.push_back({"gold criterion m=" + std::to_string(m), true, mismatches == 0,
                        std::to_string(cases) + " (k, c) cases, " + std::to_string(mismatches) + " mismatches" + first});

    const ConjectureVerdict V = conjecture_check(F, params.workers);
    R.checks.push_back({"corollary set equals scan m=" + std::to_string(m), true, V.holds(),
                        std::to_string(V.scan.pairs().size()) + " PcN pairs; " +
                            std::to_string(V.scan_not_predicted.size()) + " unpredicted, " +
                            std::to_string(V.predicted_not_scan.size()) + " predicted but absent"});
    R.data.push_back(report::conjecture_json(V));

    if (m == 6) {
      const auto agreed = V.exponents();
      const auto& u = published_u_m6();
      std::vector<std::uint64_t> extra, missing;
      std::set_difference(agreed.begin(), agreed.end(), u.begin(), u.end(), std::back_inserter(extra));
      std::set_difference(u.begin(), u.end(), agreed.begin(), agreed.end(), std::back_inserter(missing));
      R.checks.push_back({"published U for m=6", false, extra.empty() && missing.empty(),
                          "measured exponents " + join(agreed) + "; not in U: " + join(extra) +
                              "; in U but not measured: " + join(missing)});
    }
  }
}

// ---------------------------------------------------------------------------

void run_bluher(const SuiteParams& params, SuiteReport& R) {
  const auto list = triples(params, {{3, 2, 1}, {3, 4, 1}, {5, 2, 1}, {3, 3, 1}}, "bluher");
  for (const auto& [p, m, k] : list) {
    const Field F = Field::build(p, m, params.cap);
    const BluherReport B = bluher_counts(F, k);
    const std::string label = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    const std::uint64_t q = F.order();
    R.checks.push_back({label + " sum identities", true, B.sum_counts() == q - 1 && B.sum_weighted() == q - 2,
                        "sum N_i = " + std::to_string(B.sum_counts()) + ", sum i N_i = " +
                            std::to_string(B.sum_weighted())});
    R.checks.push_back({label + " root counts in {0, 1, 2, Q+1}", true, B.unexpected_root_counts.empty(),
                        B.unexpected_root_counts.empty() ? "none outside" : "outside: " + join(B.unexpected_root_counts)});
    if (B.formula_case != 2) {
      std::ostringstream detail;
      detail << "case " << B.formula_case << ":";
      for (const auto& [i, n] : B.counts_bruteforce)
        detail << " N" << i << "=" << n << "/" << B.counts_formula.at(i).to_string();
      R.checks.push_back({label + " formula agreement", true, B.all_agree(), detail.str()});
    } else {
      for (const auto& [i, n] : B.counts_bruteforce) {
        const FormulaValue& f = B.counts_formula.at(i);
        std::string detail = "measured " + std::to_string(n) + ", formula " + f.to_string();
        if (!f.integral()) {
          const std::uint64_t Q = B.Q;
          const FormulaValue alt{static_cast<std::int64_t>(ipow(Q, B.h - 1) - 1), static_cast<std::int64_t>(Q * Q - 1)};
          detail += " (not an integer); (Q^(h-1)-1)/(Q^2-1) = " + alt.to_string();
        }
        R.checks.push_back({label + " case 2 N" + std::to_string(i), false, B.agrees.at(i), detail});
      }
    }
    R.data.push_back(report::bluher_json(F, k, B));
  }
}

// ---------------------------------------------------------------------------

void run_systems(const SuiteParams& params, SuiteReport& R) {
  const auto list = triples(params, {{3, 3, 1}}, "systems");
  for (const auto& [p, m, k] : list) {
    const Field F = Field::build(p, m, params.cap);
    const SystemCountReport S = system_counts(F, k);
    const std::string label = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    R.data.push_back(report::systems_json(F, S));
    if (!S.hypothesis) {
      R.checks.push_back({label + " hypothesis", false, false,
                          "p^k = p^m = 3 mod 4 does not hold; counts reported without claims"});
      continue;
    }
    std::uint64_t bad_value = 0, bad_pm1 = 0, bad_many = 0;
    for (std::uint32_t b = 0; b < F.order(); ++b) {
      const auto& c = S.counts[b];
      const int nonzero = static_cast<int>(std::count_if(c.begin(), c.end(), [](std::uint64_t v) { return v != 0; }));
      bad_value += static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](std::uint64_t v) { return v != 0 && v != 4; }));
      if ((Element{b} == F.one() || Element{b} == F.minus_one()) && nonzero != 0) ++bad_pm1;
      if (nonzero > 1) ++bad_many;
    }
    const std::string over = " over " + std::to_string(F.order()) + " values of b";
    R.checks.push_back({label + " every count is 0 or 4", true, bad_value == 0,
                        std::to_string(bad_value) + " counts outside {0, 4}" + over});
    R.checks.push_back({label + " no solutions at b = 1, -1", true, bad_pm1 == 0,
                        std::to_string(bad_pm1) + " of b = 1, -1 with solutions"});
    R.checks.push_back({label + " at most one system solvable", true, bad_many == 0,
                        std::to_string(bad_many) + " values of b with several solvable systems"});

    // 4 #{x not in {0, -1} : (x+1)^d + x^d = b} = N_1 + N_2 + N_3 + N_4 for b != 0
    for (std::uint64_t d : solve_congruence(p, m, k, CongruenceFamily::kT1).odd_solutions()) {
      const PowerMap P = PowerMap::make(F, d);
      const auto table = power_table(F, P);
      std::vector<std::uint64_t> hits(F.order(), 0);
      for (std::uint32_t x = 1; x < F.order(); ++x) {
        if (Element{x} == F.minus_one()) continue;
        const Element x1 = F.add(Element{x}, F.one());
        ++hits[F.add(Element{table[x1.code]}, Element{table[x]}).code];
      }
      std::uint64_t mismatches = 0;
      for (std::uint32_t b = 1; b < F.order(); ++b) {
        const auto& c = S.counts[b];
        if (4 * hits[b] != c[0] + c[1] + c[2] + c[3]) ++mismatches;
      }
      R.checks.push_back({label + " d=" + std::to_string(d) + " derivative counts equal system totals / 4", true,
                          mismatches == 0,
                          std::to_string(mismatches) + " mismatching nonzero b; at b = 0 the derivative count is " +
                              std::to_string(hits[0])});
    }
  }
}

// ---------------------------------------------------------------------------

struct SpectrumCase {
  std::uint32_t p;
  unsigned m;
  unsigned k;
  std::function<bool(const Field&, Element)> admits;
  std::string constants;
};

void run_spectrum(const SuiteParams& params, SuiteReport& R) {
  const auto not_one = [](const Field& F, Element c) { return c != F.one(); };
  const auto outside_prime = [](const Field& F, Element c) { return !F.in_subfield(c, 1); };
  std::vector<SpectrumCase> cases;
  if (params.p || params.m || params.k) {
    const auto t = triples(params, {}, "spectrum");
    const auto& [p, m, k] = t.front();
    cases.push_back({p, m, k, not_one, "every c != 1 where the criterion applies"});
  } else {
    cases.push_back({3, 1, 1, [](const Field& F, Element c) { return c == F.from_integer(2); }, "c = 2"});
    cases.push_back({3, 2, 2, not_one, "every c != 1"});
    cases.push_back({3, 2, 1, outside_prime, "every c outside GF(3)"});
    cases.push_back({5, 2, 1, outside_prime, "every c outside GF(5)"});
  }
  for (const SpectrumCase& sc : cases) {
    const Field F = Field::build(sc.p, sc.m, params.cap);
    const PowerMap P = PowerMap::make(F, ipow(sc.p, sc.k) + 1);
    const std::string label =
        "p=" + std::to_string(sc.p) + " m=" + std::to_string(sc.m) + " k=" + std::to_string(sc.k);
    std::uint64_t tested = 0, mismatches = 0, bad_sums = 0;
    std::string example;
    for (std::uint32_t cc = 0; cc < F.order(); ++cc) {
      const Element c{cc};
      if (!sc.admits(F, c) || c == F.one()) continue;
      const Prediction pred = predict_apcn_spectrum(F, sc.k, c);
      if (!pred.applicable) continue;
      ++tested;
      const Spectrum S = c_spectrum(F, P, c, params.workers);
      if (S.total() != F.order() || S.weighted() != F.order()) ++bad_sums;
      if (S != pred.claim->spectrum) {
        if (mismatches++ == 0) example = "; first mismatch at c=" + std::to_string(cc);
      } else if (example.empty()) {
        std::ostringstream os;
        os << "; spectrum (";
        for (std::size_t i = 0; i < S.omega.size(); ++i) os << (i ? ", " : "") << S.omega[i];
        os << ")";
        example = os.str();
      }
    }
    R.checks.push_back({label + " spectrum matches for " + sc.constants, true, tested > 0 && mismatches == 0,
                        std::to_string(tested) + " constants, " + std::to_string(mismatches) + " mismatches" + example});
    R.checks.push_back({label + " spectrum sums", true, bad_sums == 0,
                        std::to_string(bad_sums) + " spectra with sum omega_i or sum i omega_i != p^m"});
  }
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint32_t, unsigned>> fields_up_to(std::uint64_t bound) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned m = 1; q <= bound; ++m, q *= p) out.emplace_back(p, m);
  }
  return out;
}

void run_duality(const SuiteParams& params, SuiteReport& R) {
  if (params.k) throw std::invalid_argument("suite 'duality' takes no -k");
  std::vector<std::pair<std::uint32_t, unsigned>> fields;
  if (params.p && params.m)
    fields.emplace_back(*params.p, *params.m);
  else if (params.p || params.m)
    throw std::invalid_argument("suite 'duality' needs both -p and -m, or neither");
  else
    fields = fields_up_to(243);

  for (const auto& [p, m] : fields) {
    const Field F = Field::build(p, m, params.cap);
    const std::uint64_t n = F.order() - 1;
    std::map<std::uint64_t, std::vector<bool>> pcn;  // invertible d -> PcN flag per c
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (std::gcd(d, n) != 1) continue;
      PcnProbe probe(F, PowerMap::make(F, d));
      auto& flags = pcn[d];
      flags.assign(F.order(), false);
      for (std::uint32_t cc = 0; cc < F.order(); ++cc)
        if (Element{cc} != F.one()) flags[cc] = probe.is_pcn(Element{cc});
    }
    std::uint64_t pairs = 0, mismatches = 0;
    std::string first;
    for (const auto& [d, flags] : pcn) {
      for (std::uint32_t cc = 0; cc < F.order(); ++cc) {
        if (Element{cc} == F.one()) continue;
        const DualPair dual = inverse_exponent_dual(F, d, Element{cc});
        ++pairs;
        if (flags[cc] != pcn.at(dual.d_inv)[dual.c_prime.code]) {
          if (mismatches++ == 0) first = "; first at d=" + std::to_string(d) + " c=" + std::to_string(cc);
        }
      }
    }
    R.checks.push_back({field_label(p, m) + " duality", true, mismatches == 0,
                        std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches" + first});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"examples", "gold", "bluher", "systems", "spectrum", "duality"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  SuiteReport R;
  R.suite = name;
  if (name == "examples")
    run_examples(params, R);
  else if (name == "gold")
    run_gold(params, R);
  else if (name == "bluher")
    run_bluher(params, R);
  else if (name == "systems")
    run_systems(params, R);
  else if (name == "spectrum")
    run_spectrum(params, R);
  else if (name == "duality")
    run_duality(params, R);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  return R;
}

report::Json suite_json(const SuiteReport& R) {
  report::Json checks = report::Json::array();
  for (const SuiteCheck& c : R.checks)
    checks.push_back(report::Json{{"name", c.name},
                                  {"kind", c.assertion ? "assertion" : "annotation"},
                                  {"passed", c.passed},
                                  {"detail", c.detail}});
  return report::Json{{"version", report::kVersion}, {"command", "verify"}, {"suite", R.suite},
                      {"passed", R.passed()}, {"failed_assertions", R.failed_assertions()},
                      {"checks", checks}, {"reports", R.data}};
}

}  // namespace pcn
