#include <random>

#include <gtest/gtest.h>

#include "blowup/error.hpp"
#include "blowup/newton.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

MonomialIdeal ideal(std::vector<ExponentVector> gens) { return MonomialIdeal(3, std::move(gens)); }
MonomialIdeal pure(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::vector<std::int64_t> e{a, b, c};
  return MonomialIdeal::pure_powers(e);
}
MonomialIdeal m_power(std::int64_t n) { return power(MonomialIdeal::maximal(3), n); }

}  // namespace

TEST(NewtonPolyhedron, MaximalIdealIsSimplex) {
  auto np = newton_polyhedron(MonomialIdeal::maximal(3));
  ASSERT_EQ(np.facets().size(), 1u);
  EXPECT_EQ(np.facets()[0], (Facet{{1, 1, 1}, 1}));
}

TEST(NewtonPolyhedron, PurePowersOfTwo) {
  auto np = newton_polyhedron(pure(2, 2, 2));
  ASSERT_EQ(np.facets().size(), 1u);
  EXPECT_EQ(np.facets()[0], (Facet{{1, 1, 1}, 2}));
}

TEST(NewtonPolyhedron, FourthPowersWithXYZ) {
  auto i = ideal({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}});
  auto np = newton_polyhedron(i);
  // Hand-derived: planes through two axis points and (1,1,1).
  std::vector<Facet> expected{{{1, 1, 2}, 4}, {{1, 2, 1}, 4}, {{2, 1, 1}, 4}};
  EXPECT_EQ(np.facets(), expected);

  // Exhaustive halfspace oracle agrees on a box at several scales.
  const auto gens = oracle::points_of(i);
  const auto normals = oracle::primitive_normals(3, 6);
  for (std::int64_t n = 1; n <= 3; ++n) {
    oracle::for_each_in_box(oracle::Point(3, 4 * n + 1), [&](const oracle::Point& v) {
      EXPECT_EQ(np.member(ExponentVector(v), Scale{n, 1}), oracle::halfspace_member(gens, normals, v, n));
    });
  }
}

TEST(NewtonPolyhedron, FacetInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto i = oracle::random_ideal(rng, 5, 5);
    auto np = newton_polyhedron(i);
    for (const auto& f : np.facets()) {
      std::int64_t g = 0;
      for (auto a : f.normal) {
        EXPECT_GT(a, 0);
        g = std::gcd(g, a);
      }
      EXPECT_EQ(g, 1);
      std::vector<oracle::Point> tight;
      for (const auto& p : i.generators()) {
        oracle::Point v(p.coords().begin(), p.coords().end());
        auto s = oracle::dot(f.normal, v);
        EXPECT_GE(s, f.rhs);
        if (s == f.rhs) tight.push_back(v);
      }
      // Positive normals leave no recession ray on the face, so three
      // affinely independent generators must be tight.
      bool spans = false;
      for (std::size_t x = 0; x < tight.size(); ++x) {
        for (std::size_t y = x + 1; y < tight.size(); ++y) {
          for (std::size_t z = y + 1; z < tight.size(); ++z) {
            oracle::Point u(3), w(3);
            for (int k = 0; k < 3; ++k) {
              u[k] = tight[y][k] - tight[x][k];
              w[k] = tight[z][k] - tight[x][k];
            }
            if (u[1] * w[2] - u[2] * w[1] != 0 || u[2] * w[0] - u[0] * w[2] != 0 || u[0] * w[1] - u[1] * w[0] != 0) {
              spans = true;
            }
          }
        }
      }
      EXPECT_TRUE(spans);
    }
  }
}

TEST(NewtonPolyhedron, NotMPrimary) {
  try {
    newton_polyhedron(ideal({{1, 0, 0}, {0, 1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMPrimary);
  }
  EXPECT_THROW(newton_polyhedron(MonomialIdeal::unit(3)), Error);
}

TEST(Member, Examples) {
  auto np = newton_polyhedron(MonomialIdeal::maximal(3));
  EXPECT_TRUE(np.member(ExponentVector{0, 2, 0}, Scale{2, 1}));
  EXPECT_FALSE(np.member(ExponentVector{1, 0, 0}, Scale{2, 1}));
  EXPECT_TRUE(newton_polyhedron(pure(2, 2, 2)).member(ExponentVector{1, 1, 0}));
  // Rational scale: (1,0,0) lies in (1/2) NP(m) but not in (3/2) NP(m).
  EXPECT_TRUE(np.member(ExponentVector{1, 0, 0}, Scale{1, 2}));
  EXPECT_FALSE(np.member(ExponentVector{1, 0, 0}, Scale{3, 2}));
}

TEST(InteriorMember, Examples) {
  auto np = newton_polyhedron(MonomialIdeal::maximal(3));
  EXPECT_TRUE(np.interior_member(ExponentVector{1, 1, 1}));
  EXPECT_FALSE(np.interior_member(ExponentVector{1, 0, 0}));
  EXPECT_TRUE(newton_polyhedron(pure(2, 2, 2)).interior_member(ExponentVector{1, 1, 1}));
}

TEST(IntegralClosure, Examples) {
  EXPECT_EQ(integral_closure(MonomialIdeal::maximal(3), 2), m_power(2));
  EXPECT_EQ(integral_closure(pure(2, 2, 2), 1), m_power(2));
  EXPECT_EQ(integral_closure(pure(2, 2, 2), 3), m_power(6));
}

TEST(IntegralClosure, AgreesWithHullFeasibilityOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto i = oracle::random_ideal(rng, 3, 3);
    const auto gens = oracle::points_of(i);
    const auto box = i.pure_power_box();
    auto np = newton_polyhedron(i);
    for (std::int64_t n = 1; n <= 2; ++n) {
      oracle::for_each_in_box(oracle::Point{box[0] * n, box[1] * n, box[2] * n}, [&](const oracle::Point& v) {
        ASSERT_EQ(np.member(ExponentVector(v), Scale{n, 1}), oracle::in_scaled_hull(gens, v, n))
            << "ideal trial " << trial << " n=" << n;
      });
    }
  }
}

TEST(IntegralClosure, Properties) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    auto i = oracle::random_ideal(rng, 4, 4);
    auto c1 = integral_closure(i, 1);
    EXPECT_TRUE(c1.contains(i));
    EXPECT_EQ(integral_closure(c1, 1), c1);
    EXPECT_TRUE(integral_closure(i, 2).contains(power(i, 2)));
    for (std::int64_t a = 1; a <= 2; ++a) {
      for (std::int64_t b = 1; b <= 2; ++b) {
        EXPECT_TRUE(integral_closure(i, a + b).contains(multiply(integral_closure(i, a), integral_closure(i, b))));
      }
    }
  }
}

TEST(IsReduction, Examples) {
  EXPECT_TRUE(is_reduction(pure(2, 2, 2), ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}})));
  EXPECT_TRUE(is_reduction(pure(2, 2, 2), ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})));
  EXPECT_FALSE(is_reduction(pure(2, 2, 2), ideal({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}})));
}

TEST(IsReduction, NotContained) {
  try {
    is_reduction(MonomialIdeal::maximal(3), pure(2, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(IsReduction, ReductionsHaveEqualClosures) {
  std::mt19937_64 rng(55);
  int reductions = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto i = oracle::random_ideal(rng, 4, 4);
    auto q = MonomialIdeal::pure_powers(i.pure_power_box());
    if (!is_reduction(q, i)) continue;
    ++reductions;
    for (std::int64_t n = 1; n <= 3; ++n) EXPECT_EQ(integral_closure(q, n), integral_closure(i, n));
  }
  EXPECT_GT(reductions, 5);
}
