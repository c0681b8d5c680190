#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "upsilon/algebra.hpp"
#include "upsilon/alt_definition.hpp"
#include "upsilon/upsilon.hpp"

namespace upsilon {
namespace {

using testing::R;
using testing::t23;
using testing::t25;
using testing::t37;

Rational alpha_between(const Complex& c, const TComplex& tc, const std::string& from, const std::string& to) {
  const std::size_t x = *c.index_of(from);
  const std::size_t y = *c.index_of(to);
  for (const auto& arrow : tc.differential[x]) {
    if (arrow.target == y) return arrow.alpha;
  }
  throw std::runtime_error("no arrow " + from + " -> " + to);
}

TEST(BuildTComplex, Unknot) {
  const TComplex tc = build_tcomplex(unknot(), R(3, 5));
  ASSERT_EQ(tc.generators.size(), 1u);
  EXPECT_EQ(tc.generators[0].grt, R(0));
  EXPECT_TRUE(tc.differential[0].empty());
}

TEST(BuildTComplex, T37AtOneThird) {
  const Complex c = t37();
  const TComplex tc = build_tcomplex(c, R(1, 3));
  ASSERT_EQ(tc.generators.size(), 9u);
  std::vector<Rational> grt;
  for (const auto& g : tc.generators) grt.push_back(g.grt);
  // Path order x0 y0 x1 y1 x2 y2 x3 y3 x4.
  EXPECT_EQ(grt, (std::vector<Rational>{R(-2), R(-2, 3), R(-1), R(1, 3), R(0), R(5, 3), R(1),
                                        R(8, 3), R(2)}));
  EXPECT_EQ(alpha_between(c, tc, "y0", "x0"), R(-1, 3));
  EXPECT_EQ(alpha_between(c, tc, "y0", "x1"), R(2, 3));
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (const auto& a : tc.differential[x]) {
      EXPECT_EQ(tc.generators[a.target].grt - a.alpha, tc.generators[x].grt - R(1));
      EXPECT_TRUE((tc.generators[x].grt * R(3)).is_integer());
    }
  }
}

TEST(BuildTComplex, T37AtTwo) {
  const Complex c = t37();
  const TComplex tc = build_tcomplex(c, R(2));
  // White (1,6): to (0,6) alpha = 2·((6-6) - (1-0)), to (1,4) alpha = 2·((6-4) - 0).
  EXPECT_EQ(alpha_between(c, tc, "y0", "x0"), R(-2));
  EXPECT_EQ(alpha_between(c, tc, "y0", "x1"), R(4));
}

TEST(BuildTComplex, RejectsTOutsideHalfOpenInterval) {
  EXPECT_THROW(build_tcomplex(t23(), R(0)), std::out_of_range);
  EXPECT_THROW(build_tcomplex(t23(), R(9, 4)), std::out_of_range);
}

TEST(BuildTComplex, DetectsFilteredViolation) {
  const Complex bad = Complex::from_ids({{"a", 1, 0, 0}, {"b", 0, 1, 0}}, {{"a", {"b"}}});
  EXPECT_THROW(build_tcomplex(bad, R(1)), std::logic_error);
}

TEST(BuildTComplex, BoundarySquaresToZero) {
  const Complex c = tensor(t23(), t25());
  const TComplex tc = build_tcomplex(c, R(2, 3));
  for (int g = -1; g <= 2; ++g) {
    EXPECT_EQ(gf2::multiply(tc.boundary(g - 1), tc.boundary(g)).nonzeros(), 0u);
  }
}

TEST(UpsilonAlt, Examples) {
  EXPECT_EQ(upsilon_alt(unknot(), R(1, 2)), R(0));
  EXPECT_EQ(upsilon_alt(t37(), R(4, 5)), R(-4));
  EXPECT_EQ(upsilon_alt(t23(), R(1)), R(-1));
}

TEST(TransformCheck, Examples) {
  EXPECT_TRUE(transform_check(unknot(), R(1)));
  EXPECT_TRUE(transform_check(t37(), R(4, 5)));
  EXPECT_TRUE(transform_check(tensor(t25(), t23()), R(2, 3)));
}

TEST(AltProperties, AgreesWithMainEngine) {
  std::mt19937 rng(77);
  std::vector<Complex> pool{t23(), t25(), t37(), tensor(t23(), t23()), dual(t25())};
  for (int k = 0; k < 10; ++k) pool.push_back(staircase(testing::random_palindromic_steps(rng, 8)));
  for (const Complex& c : pool) {
    const UpsilonEvaluator ev(c);
    for (int k = 0; k < 5; ++k) {
      const Rational t = testing::random_t(rng, false);
      EXPECT_EQ(upsilon_alt(c, t), ev.upsilon(t)) << t;
      EXPECT_TRUE(transform_check(c, t)) << t;
    }
  }
}

}  // namespace
}  // namespace upsilon
