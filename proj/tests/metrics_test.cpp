#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "textcx/error.hpp"
#include "textcx/metrics.hpp"

namespace textcx {
namespace {

FrequencyProfile prof(std::vector<std::uint64_t> f) { return FrequencyProfile::from_frequencies(f); }

TEST(SpecificDiversity, AppendixRows) {
  std::vector<std::uint64_t> f(27, 1);
  f[0] = 36;  // any split of L=62 over D=27 symbols
  EXPECT_NEAR(specific_diversity(prof(f)), 0.435, 0.0005);
  std::vector<std::uint64_t> g(21, 1);
  g[0] = 16;
  EXPECT_NEAR(specific_diversity(prof(g)), 0.583, 0.0005);
  EXPECT_DOUBLE_EQ(specific_diversity(prof({1, 1, 1})), 1.0);
  EXPECT_THROW(specific_diversity(FrequencyProfile{}), DomainError);
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(entropy(prof({1, 1, 1, 1})), 1.0, 1e-12);
  EXPECT_EQ(entropy(prof({5})), 0.0);
  EXPECT_NEAR(entropy(prof({3, 2, 1})), 0.920620, 5e-7);
  EXPECT_NEAR(entropy(prof({3, 2, 1})), static_cast<double>(oracle::entropy({3, 2, 1})), 1e-12);
  EXPECT_THROW(entropy(FrequencyProfile{}), DomainError);
}

TEST(Entropy, ExhaustiveSmallProfiles) {
  // Every non-increasing frequency list with D <= 5 and L <= 8.
  std::size_t checked = 0;
  std::vector<std::uint64_t> f;
  auto rec = [&](auto&& self, std::uint64_t remaining, std::uint64_t cap) -> void {
    if (!f.empty()) {
      ASSERT_NEAR(entropy(prof(f)), static_cast<double>(oracle::entropy(f)), 1e-12);
      ++checked;
    }
    if (f.size() == 5) return;
    for (std::uint64_t x = 1; x <= std::min(remaining, cap); ++x) {
      f.push_back(x);
      self(self, remaining - x, x);
      f.pop_back();
    }
  };
  rec(rec, 8, 8);
  EXPECT_GT(checked, 50u);
}

TEST(Entropy, PermutationInvariant) {
  const std::vector<double> a{4, 1, 3, 1}, b{1, 1, 3, 4};
  EXPECT_NEAR(entropy(std::span<const double>(a)), entropy(std::span<const double>(b)), 1e-15);
}

TEST(Entropy, BoundsProperty) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto f = oracle::random_ranked(rng, 10, 5);
    if (f.size() < 2) continue;
    const double h = entropy(prof(f));
    EXPECT_GT(h, 0.0);
    EXPECT_LE(h, 1.0);
    if (f.front() != f.back()) EXPECT_LT(h, 1.0);
  }
  EXPECT_NEAR(entropy(prof(std::vector<std::uint64_t>(17, 1))), 1.0, 1e-12);
  EXPECT_NEAR(entropy(prof({2, 2})), 1.0, 1e-12);
}

TEST(ComplexityMeasures, Identities) {
  const auto half = measures_from(0.5, 0.5);
  EXPECT_DOUBLE_EQ(half.c, 1.0);
  const auto zero = complexity_measures(prof({5}));
  EXPECT_EQ(zero.h, 0.0);
  EXPECT_EQ(zero.e, 0.0);
  EXPECT_EQ(zero.s, 1.0);
  EXPECT_EQ(zero.c, 0.0);
  EXPECT_NEAR(measures_from(0.435, 0.921).c, 0.2910, 5e-5);
}

TEST(ComplexityMeasures, RandomProfiles) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const auto m = complexity_measures(prof(oracle::random_ranked(rng, 8, 9)));
    ASSERT_EQ(m.e, m.h);
    ASSERT_NEAR(m.s, 1 - m.h, 1e-12);
    ASSERT_NEAR(m.c, 4 * m.h * (1 - m.h), 1e-12);
    ASSERT_NEAR(m.e + m.s, 1.0, 1e-12);
    ASSERT_LE(m.c, 1.0);
    ASSERT_GE(m.h, 0.0);
    ASSERT_LE(m.h, 1.0);
    ASSERT_GT(m.d, 0.0);
    ASSERT_LE(m.d, 1.0);
  }
}

}  // namespace
}  // namespace textcx
