#include <gtest/gtest.h>

#include <numeric>

#include "pcn/cdiff.hpp"

using namespace pcn;

TEST(PowerMap, ReducesExponent) {
  const Field F = Field::build(3, 2);
  const PowerMap P = PowerMap::make(F, 10);
  EXPECT_EQ(P.d, 10u);
  EXPECT_EQ(P.d_reduced, 2u);
  EXPECT_EQ(P.gcd_d, 2u);
  EXPECT_EQ(PowerMap::make(F, 8).d_reduced, 8u);
  EXPECT_THROW(PowerMap::make(F, 0), std::invalid_argument);
}

TEST(CDelta, EnumerationMatchesSinglePassCounts) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    const Field F = Field::build(p, m);
    const std::uint32_t q = F.order();
    for (std::uint64_t d = 1; d < q; ++d) {
      const PowerMap P = PowerMap::make(F, d);
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t a = 0; a < q; ++a) {
          const auto counts = derivative_counts(F, P, Element{c}, Element{a});
          for (std::uint32_t b = 0; b < q; ++b)
            ASSERT_EQ(counts[b], c_delta(F, P, Element{c}, Element{a}, Element{b}))
                << p << "^" << m << " d=" << d << " c=" << c << " a=" << a << " b=" << b;
        }
    }
  }
}

TEST(CDelta, WorkerCountDoesNotChangeCounts) {
  const Field F = Field::build(3, 5);
  const PowerMap P = PowerMap::make(F, 61);
  const auto one = derivative_counts(F, P, F.minus_one(), F.one(), 1);
  for (unsigned w : {2u, 3u, 7u, 16u}) EXPECT_EQ(derivative_counts(F, P, F.minus_one(), F.one(), w), one);
}

TEST(Uniformity, ReductionToShiftsZeroAndOneMatchesDefinition) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1},
           {19, 1}, {23, 1}}) {
    const Field F = Field::build(p, m);
    for (std::uint64_t d = 1; d < F.order(); ++d) {
      const PowerMap P = PowerMap::make(F, d);
      for (std::uint32_t c = 0; c < F.order(); ++c)
        ASSERT_EQ(c_uniformity(F, P, Element{c}).uniformity, c_uniformity_all_shifts(F, P, Element{c}))
            << p << "^" << m << " d=" << d << " c=" << c;
    }
  }
}

TEST(Uniformity, QuadraticIsAlmostPerfect) {
  const Field F = Field::build(7, 1);
  const PowerMap P = PowerMap::make(F, 2);
  for (std::uint32_t c = 0; c < 7; ++c) {
    if (c == 1) continue;
    const auto U = c_uniformity(F, P, Element{c});
    EXPECT_EQ(U.uniformity, 2u);
    EXPECT_EQ(U.classification, Classification::kApcn);
  }
}

TEST(Uniformity, ClassicalBranchAtCEqualsOne) {
  const Field F = Field::build(2, 3);
  const auto U = c_uniformity(F, PowerMap::make(F, 3), F.one());
  EXPECT_EQ(U.uniformity, 2u);
  EXPECT_EQ(U.branch, UniformityBranch::kNonzeroShiftOnly);
  // the identity map has every derivative constant at c = 1
  EXPECT_EQ(c_uniformity(F, PowerMap::make(F, 1), F.one()).uniformity, 8u);
}

TEST(Uniformity, GcdTermDominatesWhenShiftOneIsSmall) {
  const Field F = Field::build(3, 2);
  const PowerMap P = PowerMap::make(F, 4);  // x^(3+1): gcd(4, 8) = 4
  const auto U = c_uniformity(F, P, Element{5});
  EXPECT_EQ(U.gcd_term, 4u);
  EXPECT_EQ(U.uniformity, std::max<std::uint64_t>(4, U.shift_one_max));
  EXPECT_EQ(U.branch, UniformityBranch::kWithZeroShift);
}

TEST(Uniformity, WitnessReachesMaximum) {
  const Field F = Field::build(3, 4);
  const PowerMap P = PowerMap::make(F, 2);
  const auto U = c_uniformity(F, P, F.minus_one());
  EXPECT_EQ(U.uniformity, 2u);
  ASSERT_TRUE(U.witness_b.has_value());
  EXPECT_EQ(c_delta(F, P, F.minus_one(), F.one(), *U.witness_b), 2u);
  for (std::uint32_t b = 0; b < U.witness_b->code; ++b)
    EXPECT_LT(c_delta(F, P, F.minus_one(), F.one(), Element{b}), 2u);
}

TEST(Spectrum, SumIdentities) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}}) {
    const Field F = Field::build(p, m);
    for (std::uint64_t d = 1; d < F.order(); d += 3)
      for (std::uint32_t c = 0; c < F.order(); ++c) {
        const Spectrum S = c_spectrum(F, PowerMap::make(F, d), Element{c});
        EXPECT_EQ(S.total(), F.order());
        EXPECT_EQ(S.weighted(), F.order());
      }
  }
}

TEST(Spectrum, PermutationAtZeroConstant) {
  const Field F = Field::build(2, 5);
  const Spectrum S = c_spectrum(F, PowerMap::make(F, 7), F.zero());
  EXPECT_EQ(S.omega, (std::vector<std::uint64_t>{0, 32}));
  EXPECT_EQ(S.max_multiplicity(), 1u);
}

TEST(Spectrum, FromCounts) {
  const Spectrum S = spectrum_from_counts({0, 2, 1, 1, 0, 2});
  EXPECT_EQ(S.omega, (std::vector<std::uint64_t>{2, 2, 2}));
}

TEST(Probe, AgreesWithUniformity) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field F = Field::build(p, m);
    for (std::uint64_t d = 1; d < F.order(); ++d) {
      const PowerMap P = PowerMap::make(F, d);
      PcnProbe probe(F, P);
      for (std::uint32_t c = 0; c < F.order(); ++c) {
        if (Element{c} == F.one()) continue;
        ASSERT_EQ(probe.is_pcn(Element{c}), c_uniformity(F, P, Element{c}).uniformity == 1)
            << p << "^" << m << " d=" << d << " c=" << c;
      }
    }
  }
}

TEST(Classification, Names) {
  EXPECT_EQ(to_string(Classification::kPcn), "PcN");
  EXPECT_EQ(to_string(Classification::kApcn), "APcN");
  const Field F = Field::build(3, 5);
  EXPECT_EQ(classify(F, PowerMap::make(F, 61), F.minus_one()), Classification::kPcn);
}
