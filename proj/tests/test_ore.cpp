#include <gtest/gtest.h>

#include "generators.hpp"
#include "horex/errors.hpp"
#include "horex/ore.hpp"
#include "oracles.hpp"

using namespace horex;

namespace {

const ParamScalar q = ParamScalar::q();
const ParamScalar k = ParamScalar::k();
const OrePoly x = OrePoly::x();
const OrePoly y = OrePoly::y();

const AlgebraPreset& qp() {
  static const AlgebraPreset p = quantum_plane();
  return p;
}
const AlgebraPreset& env() {
  static const AlgebraPreset p = enveloping();
  return p;
}

OrePoly mono(const ParamScalar& c, std::uint32_t m, std::uint32_t n) { return OrePoly::monomial(c, m, n); }

}  // namespace

TEST(Pi, Examples) {
  EXPECT_EQ(pi(2, 3, env(), BasePoly::y(2)), BasePoly::monomial(6, 2));
  EXPECT_EQ(pi(1, 1, qp(), BasePoly::y()), BasePoly::monomial(q, 1));
  gen::Random rng(4);
  for (int i = 0; i < 20; ++i) {
    const BasePoly b = rng.base_poly();
    EXPECT_EQ(pi(0, 0, qp(), b), b);
    EXPECT_EQ(pi(0, 0, env(), b), b);
  }
  EXPECT_TRUE(pi(1, 2, qp(), BasePoly::y()).is_zero());
}

TEST(Pi, OutOfRangeIsZero) {
  EXPECT_TRUE(pi(-1, 3, env(), BasePoly::y()).is_zero());
  EXPECT_TRUE(pi(4, 3, env(), BasePoly::y()).is_zero());
}

TEST(Pi, MatchesWordEnumeration) {
  for (const auto* preset : {&qp(), &env()}) {
    for (std::uint32_t m = 0; m <= 6; ++m) {
      for (std::uint32_t e = 0; e <= 4; ++e) {
        const BasePoly b = BasePoly::y(e);
        const auto row = pi_row(m, *preset, b);
        ASSERT_EQ(row.size(), m + 1);
        for (std::uint32_t i = 0; i <= m; ++i) {
          const BasePoly expected = oracle::pi_by_words(static_cast<int>(i), m, *preset, b);
          EXPECT_EQ(pi(static_cast<int>(i), m, *preset, b), expected) << preset->name() << " m=" << m << " i=" << i;
          EXPECT_EQ(row[i], expected);
        }
      }
    }
  }
}

TEST(Pi, LiteralPi23) {
  // pi_2^3 = s.s.d + s.d.s + d.s.s, written out term by term.
  for (const auto* preset : {&qp(), &env()}) {
    const MapSpec& s = preset->sigma();
    const MapSpec& d = preset->delta();
    for (std::uint32_t e = 0; e <= 4; ++e) {
      const BasePoly b = BasePoly::y(e);
      EXPECT_EQ(pi(2, 3, *preset, b), s(s(d(b))) + s(d(s(b))) + d(s(s(b))));
    }
  }
}

TEST(Pi, MatchesWordEnumerationForOtherMaps) {
  const AlgebraPreset jackson =
      AlgebraPreset::make("jackson", MapSpec::scaling(q), MapSpec::derivation(BasePoly(1), MapSpec::scaling(q)),
                          MapSpec::identity());
  for (std::uint32_t m = 0; m <= 5; ++m) {
    for (std::uint32_t i = 0; i <= m; ++i) {
      EXPECT_EQ(pi(static_cast<int>(i), m, jackson, BasePoly::y(3)),
                oracle::pi_by_words(static_cast<int>(i), m, jackson, BasePoly::y(3)));
    }
  }
}

TEST(OreMul, Examples) {
  EXPECT_EQ(ore_mul(x, y, qp()), mono(q, 1, 1));
  EXPECT_EQ(ore_mul(x, y, env()), mono(1, 1, 1) + y);
  gen::Random rng(8);
  for (int i = 0; i < 50; ++i) {
    const BasePoly a = rng.base_poly();
    const BasePoly b = rng.base_poly();
    EXPECT_EQ(ore_mul(OrePoly(a), OrePoly(b), qp()), OrePoly(a * b));
    EXPECT_EQ(ore_mul(OrePoly(a), OrePoly(b), env()), OrePoly(a * b));
  }
}

TEST(OreMul, XTimesBaseFollowsOreRule) {
  // x b = sigma(b) x + delta(b)
  gen::Random rng(9);
  for (int i = 0; i < 50; ++i) {
    const BasePoly b = rng.base_poly();
    for (const auto* preset : {&qp(), &env()}) {
      EXPECT_EQ(ore_mul(x, OrePoly(b), *preset),
                OrePoly::from_slice(preset->sigma()(b), 1) + OrePoly(preset->delta()(b)));
    }
  }
}

TEST(ExtendAlpha, Examples) {
  EXPECT_EQ(extend_alpha(qp(), mono(1, 2, 1)), mono(k * k, 2, 1));
  EXPECT_EQ(extend_alpha(qp(), OrePoly(1)), OrePoly(1));
  EXPECT_EQ(extend_alpha(env(), mono(1, 1, 1) + y), mono(k, 1, 1) + mono(k, 1, 0));
}

TEST(Star, Examples) {
  EXPECT_EQ(star(x, y, env()) - star(y, x, env()), mono(k, 1, 0));
  EXPECT_EQ(star(y, y, qp()), mono(k * k, 2, 0));
  gen::Random rng(10);
  for (int i = 0; i < 30; ++i) {
    const OrePoly p = rng.ore_poly();
    EXPECT_EQ(star(OrePoly(1), p, qp()), extend_alpha(qp(), p));
    EXPECT_EQ(star(OrePoly(1), p, env()), extend_alpha(env(), p));
  }
}

TEST(WeakUnit, Examples) {
  EXPECT_TRUE(weak_unit_check(OrePoly(1), qp(), 4).passed);
  EXPECT_TRUE(weak_unit_check(OrePoly(1), env(), 4).passed);
  const WeakUnitResult r = weak_unit_check(y, qp(), 1);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->b, OrePoly(1));
  EXPECT_EQ(r.witness->expected, OrePoly(1));
  EXPECT_NE(r.witness->product, r.witness->expected);
}

TEST(OreProperties, AssociativityOnGrid) {
  const auto grid = monomial_grid(3);
  ASSERT_EQ(grid.size(), 16U);
  for (const auto* preset : {&qp(), &env()}) {
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        const OrePoly ab = ore_mul(a, b, *preset);
        for (const auto& c : grid) {
          ASSERT_EQ(ore_mul(ab, c, *preset), ore_mul(a, ore_mul(b, c, *preset), *preset))
              << preset->name() << ": " << a << ", " << b << ", " << c;
        }
      }
    }
  }
}

TEST(OreProperties, HomAssociativityOfStarOnGrid) {
  const auto grid = monomial_grid(3);
  for (const auto* preset : {&qp(), &env()}) {
    for (const auto& a : grid) {
      const OrePoly alpha_a = extend_alpha(*preset, a);
      for (const auto& b : grid) {
        const OrePoly ab = star(a, b, *preset);
        for (const auto& c : grid) {
          ASSERT_EQ(star(alpha_a, star(b, c, *preset), *preset), star(ab, extend_alpha(*preset, c), *preset))
              << preset->name() << ": " << a << ", " << b << ", " << c;
        }
      }
    }
  }
}

TEST(OreProperties, ExtendedAlphaIsMultiplicative) {
  const auto grid = monomial_grid(3);
  for (const auto* preset : {&qp(), &env()}) {
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        EXPECT_EQ(extend_alpha(*preset, ore_mul(a, b, *preset)),
                  ore_mul(extend_alpha(*preset, a), extend_alpha(*preset, b), *preset));
      }
    }
  }
  gen::Random rng(77);
  for (int i = 0; i < 100; ++i) {
    const OrePoly a = rng.ore_poly();
    const OrePoly b = rng.ore_poly();
    EXPECT_EQ(extend_alpha(env(), ore_mul(a, b, env())), ore_mul(extend_alpha(env(), a), extend_alpha(env(), b), env()));
  }
}

TEST(OreProperties, Bilinearity) {
  gen::Random rng(78);
  for (int i = 0; i < 100; ++i) {
    const OrePoly a = rng.ore_poly(2);
    const OrePoly b = rng.ore_poly(2);
    const OrePoly c = rng.ore_poly(2);
    const ParamScalar w = rng.qk_scalar(2);
    EXPECT_EQ(ore_mul(a * w + b, c, qp()), ore_mul(a, c, qp()) * w + ore_mul(b, c, qp()));
    EXPECT_EQ(ore_mul(c, a * w + b, env()), ore_mul(c, a, env()) * w + ore_mul(c, b, env()));
  }
}

TEST(AlgebraPreset, Validation) {
  EXPECT_THROW(quantum_plane(ParamScalar{}), NonInvertible);
  EXPECT_THROW(preset_by_name("heisenberg"), UnknownName);
  // delta must be a sigma-derivation for this sigma
  EXPECT_THROW(AlgebraPreset::make("bad", MapSpec::scaling(q), MapSpec::euler_derivation(), MapSpec::identity()),
               Error);
  // alpha must commute with sigma and delta
  EXPECT_THROW(AlgebraPreset::make("bad", MapSpec::identity(), MapSpec::euler_derivation(),
                                   MapSpec::endomorphism(BasePoly::y() + BasePoly(1))),
               Error);
  EXPECT_EQ(preset_by_name("enveloping").name(), "enveloping");
  EXPECT_EQ(qp().untwisted().alpha().image_of_y(), BasePoly::y());
}

TEST(OrePolyRender, Canonical) {
  EXPECT_EQ(ore_mul(x, y, env()).to_string(), "y*x + y");
  EXPECT_EQ(star(x, y, qp()).to_string(), "q*k*y*x");
  EXPECT_EQ(OrePoly{}.to_string(), "0");
  EXPECT_EQ((mono((k - 1) * ParamScalar::k(3) * ParamScalar::q(2), 2, 1)).to_string(), "(-q^2*k^3 + q^2*k^4)*y^2*x");
  EXPECT_EQ((mono(-1, 0, 2) + OrePoly(3)).to_string(), "-x^2 + 3");
}
