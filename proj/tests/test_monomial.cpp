#include <random>

#include <gtest/gtest.h>

#include "blowup/error.hpp"
#include "blowup/monomial.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

MonomialIdeal ideal(std::vector<ExponentVector> gens) { return MonomialIdeal(3, std::move(gens)); }

MonomialIdeal m_power(std::int64_t n) { return power(MonomialIdeal::maximal(3), n); }

bool same_membership_on_box(const MonomialIdeal& a, const MonomialIdeal& b, std::int64_t bound) {
  bool same = true;
  oracle::for_each_in_box(oracle::Point(3, bound), [&](const oracle::Point& v) {
    ExponentVector e(v);
    if (a.contains(e) != b.contains(e)) same = false;
  });
  return same;
}

}  // namespace

TEST(Minimalize, DropsMultiples) {
  auto j = minimalize(3, {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(j.generators(), (std::vector<ExponentVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Minimalize, EmptyIsZeroIdeal) {
  auto j = minimalize(3, {});
  EXPECT_TRUE(j.is_zero());
  EXPECT_FALSE(j.contains(ExponentVector{5, 5, 5}));
}

TEST(Minimalize, AntichainUnchanged) {
  std::vector<ExponentVector> gens{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}};
  auto j = minimalize(3, gens);
  EXPECT_EQ(j.size(), 4u);
  for (const auto& g : gens) EXPECT_TRUE(j.contains(g));
}

TEST(Minimalize, DimensionMismatch) {
  try {
    minimalize(3, {{1, 0, 0}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Contains, Examples) {
  const auto m = MonomialIdeal::maximal(3);
  EXPECT_FALSE(m.contains(ExponentVector{0, 0, 0}));
  EXPECT_TRUE(m.contains(ExponentVector{1, 3, 0}));
  const std::vector<std::int64_t> twos{2, 2, 2};
  EXPECT_FALSE(MonomialIdeal::pure_powers(twos).contains(ExponentVector{1, 1, 1}));
}

TEST(Multiply, MaximalSquared) {
  auto m2 = multiply(MonomialIdeal::maximal(3), MonomialIdeal::maximal(3));
  EXPECT_EQ(m2.size(), 6u);
  for (const auto& g : m2.generators()) EXPECT_EQ(g.degree(), 2);
}

TEST(Multiply, UnitIsNeutral) {
  auto j = ideal({{2, 0, 0}, {0, 3, 0}, {1, 1, 1}, {0, 0, 4}});
  EXPECT_EQ(multiply(j, MonomialIdeal::unit(3)), j);
  EXPECT_EQ(power(j, 0), MonomialIdeal::unit(3));
}

TEST(Multiply, PurePowersTimesMaximal) {
  const std::vector<std::int64_t> twos{2, 2, 2};
  const auto q = MonomialIdeal::pure_powers(twos);
  const auto m = MonomialIdeal::maximal(3);
  auto prod = multiply(q, m);
  // Frozen from brute-force pairwise sums followed by minimalization.
  std::vector<ExponentVector> sums;
  for (const auto& g : q.generators()) {
    for (const auto& h : m.generators()) sums.push_back(g + h);
  }
  std::vector<ExponentVector> expected{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {0, 3, 0}, {1, 2, 0},
                                       {0, 2, 1}, {0, 0, 3}, {1, 0, 2}, {0, 1, 2}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(prod.generators(), expected);
  EXPECT_EQ(sums.size(), 9u);
}

TEST(Colength, Examples) {
  EXPECT_EQ(colength(MonomialIdeal::maximal(3)), 1);
  EXPECT_EQ(colength(m_power(2)), 4);
  const std::vector<std::int64_t> twos{2, 2, 2};
  EXPECT_EQ(colength(MonomialIdeal::pure_powers(twos)), 8);
  EXPECT_EQ(colength(MonomialIdeal::unit(3)), 0);
}

TEST(Colength, NotMPrimary) {
  auto j = ideal({{1, 0, 0}, {0, 1, 0}});
  try {
    colength(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMPrimary);
  }
}

TEST(QuotientLength, Examples) {
  const auto m = MonomialIdeal::maximal(3);
  EXPECT_EQ(quotient_length(m, m), 0);
  EXPECT_EQ(quotient_length(m, m_power(2)), 3);
  const std::vector<std::int64_t> twos{2, 2, 2};
  EXPECT_EQ(quotient_length(m_power(4), multiply(MonomialIdeal::pure_powers(twos), m_power(2))), 0);
}

TEST(QuotientLength, NotContained) {
  try {
    quotient_length(m_power(2), MonomialIdeal::maximal(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(MonomialProperties, RandomIdeals) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_ideal(rng, 4, 4);
    auto b = oracle::random_ideal(rng, 4, 4);
    auto c = oracle::random_ideal(rng, 3, 2);

    // minimalize is idempotent and membership-preserving
    EXPECT_EQ(minimalize(3, a.generators()), a);

    auto ab = multiply(a, b);
    EXPECT_EQ(ab, multiply(b, a));
    EXPECT_EQ(multiply(ab, c), multiply(a, multiply(b, c)));

    // colength against a brute-force box count
    EXPECT_EQ(colength(a), oracle::colength(oracle::points_of(a), a.pure_power_box()));

    const auto la = colength(a), lb = colength(b), lab = colength(ab);
    EXPECT_GE(lab, std::max(la, lb));
    EXPECT_EQ(quotient_length(a, ab) + la, lab);

    // powers of an ideal inside m descend
    if (!a.is_unit()) {
      auto a2 = power(a, 2), a3 = power(a, 3);
      EXPECT_TRUE(a2.contains(a3));
      EXPECT_TRUE(a.contains(a2));
      EXPECT_TRUE(same_membership_on_box(multiply(a2, a), a3, 6));
    }
  }
}
