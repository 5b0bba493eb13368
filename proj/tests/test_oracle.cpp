#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pcn/oracle.hpp"

using namespace pcn;

namespace {

std::map<std::uint64_t, std::uint64_t> counts_of(const BluherReport& R) { return R.counts_bruteforce; }

// Roots of x^(p^k+1) - b x + b counted by evaluating at every x.
std::vector<std::uint32_t> direct_roots(const Field& F, unsigned k) {
  const std::uint64_t e = ipow(F.characteristic(), k) + 1;
  std::vector<std::uint32_t> roots(F.order(), 0);
  for (std::uint32_t b = 1; b < F.order(); ++b)
    for (std::uint32_t x = 0; x < F.order(); ++x) {
      const Element X{x}, B{b};
      if (F.add(F.sub(F.pow(X, e), F.mul(B, X)), B) == F.zero()) ++roots[b];
    }
  return roots;
}

}  // namespace

TEST(Bluher, EvenDegreeMatchesFormula) {
  const BluherReport a = bluher_counts(Field::build(3, 2), 1);
  EXPECT_EQ(a.formula_case, 1);
  EXPECT_EQ(counts_of(a), (std::map<std::uint64_t, std::uint64_t>{{0, 3}, {1, 3}, {2, 2}, {4, 0}}));
  EXPECT_TRUE(a.all_agree());
  const BluherReport b = bluher_counts(Field::build(5, 2), 1);
  EXPECT_EQ(counts_of(b), (std::map<std::uint64_t, std::uint64_t>{{0, 10}, {1, 5}, {2, 9}, {6, 0}}));
  EXPECT_TRUE(b.all_agree());
  EXPECT_TRUE(bluher_counts(Field::build(3, 4), 1).all_agree());
}

TEST(Bluher, OddDegreeFlagsNonIntegralEntry) {
  const BluherReport R = bluher_counts(Field::build(3, 3), 1);
  EXPECT_EQ(R.formula_case, 2);
  EXPECT_EQ(R.Q, 3u);
  EXPECT_EQ(R.h, 3u);
  EXPECT_EQ(R.sum_counts(), 26u);
  EXPECT_EQ(R.sum_weighted(), 25u);
  EXPECT_EQ(R.non_integral_entries(), (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(R.counts_bruteforce.at(4), 1u);
  EXPECT_EQ(R.counts_bruteforce.at(0), 10u);
  EXPECT_EQ(R.counts_bruteforce.at(1), 9u);
  EXPECT_EQ(R.counts_bruteforce.at(2), 6u);
  EXPECT_FALSE(R.all_agree());
}

TEST(Bluher, CharacteristicTwoCase) {
  const BluherReport R = bluher_counts(Field::build(2, 5), 1);
  EXPECT_EQ(R.formula_case, 3);
  EXPECT_TRUE(R.all_agree());
}

TEST(Bluher, AgreesWithDirectEvaluation) {
  for (const auto& [p, m, k] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {3, 2, 1}, {3, 3, 1}, {3, 4, 2}, {5, 2, 1}, {5, 3, 1}, {7, 2, 1}, {2, 4, 1}, {2, 6, 2}}) {
    const Field F = Field::build(p, m);
    const BluherReport R = bluher_counts(F, k);
    const auto roots = direct_roots(F, k);
    for (std::uint32_t b = 1; b < F.order(); ++b) ASSERT_EQ(R.roots_per_b[b], roots[b]) << p << "^" << m << " b=" << b;
  }
}

TEST(Bluher, RootCountsAndSumsOverRange) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m <= 6; ++m) {
      if (ipow(p, m) > 5000) continue;
      const Field F = Field::build(p, m);
      for (unsigned k = 1; k <= m; ++k) {
        const BluherReport R = bluher_counts(F, k);
        EXPECT_TRUE(R.unexpected_root_counts.empty()) << p << "^" << m << " k=" << k;
        EXPECT_EQ(R.sum_counts(), F.order() - 1);
        EXPECT_EQ(R.sum_weighted(), F.order() - 2);
      }
    }
}

TEST(Bluher, FormulaValues) {
  const auto f = bluher_formula(3, 3, 3);
  EXPECT_EQ(f.at(4).to_string(), "3/4");
  EXPECT_FALSE(f.at(4).integral());
  EXPECT_EQ(f.at(0).value(), 10);
  const FormulaValue whole{12, 4};
  EXPECT_EQ(whole.to_string(), "3");
}

TEST(Systems, ClaimsHoldOnTwentySevenElements) {
  const Field F = Field::build(3, 3);
  const SystemCountReport R = system_counts(F, 1);
  EXPECT_TRUE(R.hypothesis);
  EXPECT_TRUE(R.violations.empty());
  ASSERT_EQ(R.counts.size(), 27u);
  for (Element b : {F.one(), F.minus_one()})
    for (std::uint64_t v : R.counts[b.code]) EXPECT_EQ(v, 0u);
  std::uint64_t solvable = 0;
  for (const auto& c : R.counts) solvable += std::count(c.begin(), c.end(), 4u);
  EXPECT_GT(solvable, 0u);
  EXPECT_THROW(system_counts(Field::build(2, 3), 1), std::invalid_argument);
}

TEST(Systems, HypothesisOnlyWhenBothAreThreeModFour) {
  EXPECT_FALSE(system_counts(Field::build(5, 2), 1).hypothesis);
  EXPECT_FALSE(system_counts(Field::build(3, 2), 1).hypothesis);
  EXPECT_TRUE(system_counts(Field::build(7, 3), 1).hypothesis);
  EXPECT_TRUE(system_counts(Field::build(7, 3), 1).violations.empty());
}

TEST(Systems, TotalsMatchDerivativeCountsAwayFromZero) {
  for (const auto& [p, m, k] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{3, 3, 1}, {3, 5, 1}, {7, 3, 1}}) {
    const Field F = Field::build(p, m);
    const SystemCountReport S = system_counts(F, k);
    for (std::uint64_t d : solve_congruence(p, m, k, CongruenceFamily::kT1).odd_solutions()) {
      const auto counts = derivative_counts(F, PowerMap::make(F, d), F.minus_one(), F.one());
      // drop x = 0 and x = -1, which give b = 1 and b = +-1
      std::vector<std::uint64_t> hits(counts.begin(), counts.end());
      hits[F.one().code] -= 1;
      hits[F.pow(F.minus_one(), d).code] -= 1;
      for (std::uint32_t b = 1; b < F.order(); ++b) {
        const auto& c = S.counts[b];
        EXPECT_EQ(4 * hits[b], c[0] + c[1] + c[2] + c[3]) << p << "^" << m << " d=" << d << " b=" << b;
      }
    }
  }
}

TEST(Scan, ZeroConstantMeansPermutation) {
  for (unsigned m = 2; m <= 6; ++m) {
    const Field F = Field::build(2, m);
    const ScanReport R = pcn_scan(F);
    std::set<std::uint64_t> at_zero;
    for (const auto& [d, c] : R.pairs())
      if (c == F.zero()) at_zero.insert(d);
    std::set<std::uint64_t> invertible;
    for (std::uint64_t d = 1; d < F.order(); ++d)
      if (std::gcd(d, F.order() - 1u) == 1) invertible.insert(d);
    EXPECT_EQ(at_zero, invertible) << "m=" << m;
  }
}

TEST(Scan, ClosedUnderFrobeniusTwist) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 5}, {3, 3}, {5, 2}, {3, 4}}) {
    const Field F = Field::build(p, m);
    const auto pairs = pcn_scan(F).pairs();
    const std::set<std::pair<std::uint64_t, Element>> all(pairs.begin(), pairs.end());
    const std::uint64_t n = F.order() - 1;
    for (const auto& [d, c] : pairs) {
      std::uint64_t twisted = (d * p) % n;
      if (twisted == 0) twisted = n;
      EXPECT_TRUE(all.count({twisted, F.pow(c, p)})) << p << "^" << m << " d=" << d << " c=" << c.code;
    }
  }
}

TEST(Scan, WorkersDoNotChangeResult) {
  const Field F = Field::build(3, 4);
  const ScanReport one = pcn_scan(F, 1);
  for (unsigned w : {2u, 5u, 9u}) {
    const ScanReport many = pcn_scan(F, w);
    EXPECT_EQ(many.pairs(), one.pairs());
    EXPECT_EQ(many.evaluations, one.evaluations);
    EXPECT_EQ(many.pairs_tested, one.pairs_tested);
  }
}

TEST(Scan, QuadraticIsNeverPerfect) {
  const Field F = Field::build(3, 2);
  const auto pairs = pcn_scan(F).pairs();
  for (const auto& [d, c] : pairs) EXPECT_NE(d, 2u);
}

TEST(Conjecture, HoldsForSmallDegrees) {
  for (unsigned m = 2; m <= 7; ++m) {
    const ConjectureVerdict V = conjecture_check(m, 2);
    EXPECT_TRUE(V.holds()) << "m=" << m;
  }
  const ConjectureVerdict six = conjecture_check(6);
  EXPECT_EQ(six.exponents(),
            (std::vector<std::uint64_t>{1, 2, 4, 5, 8, 10, 13, 16, 17, 19, 20, 26, 32, 34, 38, 40, 41, 52}));
  EXPECT_THROW(conjecture_check(Field::build(3, 2)), std::invalid_argument);
}

TEST(VerifyPrediction, ConfirmsAndRefutes) {
  const Field F = Field::build(3, 5);
  EXPECT_TRUE(verify_prediction(predict_thm_3mod4(3, 5, 1, 61), F, 61, F.minus_one()).confirmed);
  EXPECT_TRUE(verify_prediction(predict_thm_3mod4(3, 5, 1, 182), F, 182, F.minus_one()).confirmed);

  const Field F7 = Field::build(7, 1);
  for (const auto& P : known_families_lookup(F7, 2, Element{3}))
    EXPECT_TRUE(verify_prediction(P, F7, 2, Element{3}).confirmed);

  const Field F27 = Field::build(3, 3);
  const Verdict v = verify_prediction(predict_half_gold(3, 3, 1), F27, 2, F27.minus_one());
  EXPECT_FALSE(v.confirmed);
  EXPECT_EQ(v.uniformity, 2u);

  EXPECT_THROW(verify_prediction(predict_half_gold(3, 2, 1), Field::build(3, 2), 2, Element{2}),
               std::invalid_argument);
}
