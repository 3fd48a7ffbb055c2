#include <random>

#include <gtest/gtest.h>

#include "blowup/adjoint.hpp"
#include "blowup/error.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

MonomialIdeal pure(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::vector<std::int64_t> e{a, b, c};
  return MonomialIdeal::pure_powers(e);
}
MonomialIdeal m_power(std::int64_t n) { return power(MonomialIdeal::maximal(3), n); }

}  // namespace

TEST(Adjoint, MaximalIdealClosedForm) {
  EXPECT_EQ(adjoint(MonomialIdeal::maximal(3), 1), MonomialIdeal::unit(3));
  EXPECT_EQ(adjoint(MonomialIdeal::maximal(3), 2), MonomialIdeal::unit(3));
  EXPECT_EQ(adjoint(MonomialIdeal::maximal(3), 3), MonomialIdeal::maximal(3));
  for (std::int64_t n = 2; n <= 8; ++n) EXPECT_EQ(adjoint(MonomialIdeal::maximal(3), n), m_power(n - 2)) << n;
}

TEST(Adjoint, AgreesWithHalfspaceOracle) {
  std::mt19937_64 rng(31337);
  const auto normals = oracle::primitive_normals(3, 8);
  for (int trial = 0; trial < 20; ++trial) {
    auto i = oracle::random_ideal(rng, 3, 3);
    const auto gens = oracle::points_of(i);
    const auto box = i.pure_power_box();
    for (std::int64_t n = 1; n <= 3; ++n) {
      auto adj = adjoint(i, n);
      oracle::for_each_in_box(oracle::Point{box[0] * n, box[1] * n, box[2] * n}, [&](const oracle::Point& v) {
        ASSERT_EQ(adj.contains(ExponentVector(v)), oracle::halfspace_adjoint_member(gens, normals, v, n));
      });
    }
  }
}

TEST(Adjoint, NotMPrimary) {
  try {
    adjoint(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMPrimary);
  }
}

TEST(LipmanChain, Examples) {
  auto m = verify_lipman_chain(MonomialIdeal::maximal(3), 6);
  EXPECT_TRUE(m.pass());
  EXPECT_EQ(m.steps.size(), 4u);
  EXPECT_TRUE(verify_lipman_chain(pure(2, 2, 2), 5).pass());
  auto single = verify_lipman_chain(MonomialIdeal::maximal(3), 3);
  ASSERT_EQ(single.steps.size(), 1u);
  EXPECT_TRUE(single.steps[0].pass);
  EXPECT_THROW(verify_lipman_chain(MonomialIdeal::maximal(3), 2), Error);
}

TEST(LipmanChain, WitnessOnMismatch) {
  auto a = m_power(2), b = m_power(3);
  auto w = symmetric_difference_witness(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(a.contains(*w), b.contains(*w));
  EXPECT_FALSE(symmetric_difference_witness(a, a).has_value());
}

TEST(AdjointProperties, RandomIdeals) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    auto i = oracle::random_ideal(rng, 4, 4);
    MonomialIdeal previous = adjoint(i, 1);
    for (std::int64_t n = 2; n <= 5; ++n) {
      auto current = adjoint(i, n);
      EXPECT_TRUE(previous.contains(current));
      EXPECT_TRUE(current.contains(multiply(i, previous)));
      previous = current;
    }
    auto q = MonomialIdeal::pure_powers(i.pure_power_box());
    if (is_reduction(q, i)) {
      for (std::int64_t n = 1; n <= 4; ++n) EXPECT_EQ(adjoint(q, n), adjoint(i, n));
    }
    EXPECT_TRUE(verify_lipman_chain(i, 5).pass());
  }
}
