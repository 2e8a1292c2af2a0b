#include <gtest/gtest.h>

#include "generators.hpp"
#include "horex/base_ring.hpp"
#include "horex/errors.hpp"
#include "horex/ore.hpp"

using namespace horex;

namespace {

const ParamScalar q = ParamScalar::q();
const ParamScalar k = ParamScalar::k();
const BasePoly y = BasePoly::y();

const MapSpec alpha_k = MapSpec::scaling(k);
const MapSpec sigma_q = MapSpec::scaling(q);

}  // namespace

TEST(ApplyEndo, Examples) {
  EXPECT_EQ(apply_endo(alpha_k, BasePoly::y(2)), BasePoly::monomial(k * k, 2));
  EXPECT_EQ(apply_endo(sigma_q, y), BasePoly::monomial(q, 1));
  EXPECT_EQ(apply_endo(alpha_k, BasePoly(1)), BasePoly(1));
  EXPECT_EQ(apply_endo(MapSpec::endomorphism(y * y + BasePoly(1)), BasePoly(1)), BasePoly(1));
}

TEST(ApplyEndo, WrongKind) {
  EXPECT_THROW(apply_endo(MapSpec::euler_derivation(), y), WrongMapKind);
  EXPECT_THROW(apply_deriv(alpha_k, y), WrongMapKind);
  EXPECT_THROW(MapSpec::derivation(y, MapSpec::euler_derivation()), WrongMapKind);
}

TEST(ApplyDeriv, Examples) {
  const MapSpec euler = MapSpec::euler_derivation();
  EXPECT_EQ(apply_deriv(euler, BasePoly::y(2)), BasePoly::monomial(2, 2));
  gen::Random rng(5);
  const MapSpec zero = MapSpec::zero_derivation(MapSpec::identity());
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(apply_deriv(zero, rng.base_poly()).is_zero());
  EXPECT_TRUE(apply_deriv(euler, BasePoly(1)).is_zero());
}

TEST(ApplyDeriv, EulerIsYTimesDerivative) {
  // y d/dy (y^m) = m y^m
  const MapSpec euler = MapSpec::euler_derivation();
  for (std::uint32_t m = 0; m <= 12; ++m) {
    EXPECT_EQ(euler.on_monomial(m), BasePoly::monomial(static_cast<long>(m), m));
  }
}

TEST(ApplyDeriv, JacksonDerivative) {
  // sigma(y) = q y, d(y) = 1 gives the q-derivative: d(y^m) = (1 + q + ... + q^(m-1)) y^(m-1).
  const MapSpec jackson = MapSpec::derivation(BasePoly(1), sigma_q);
  for (std::uint32_t m = 1; m <= 6; ++m) {
    ParamScalar qint;
    for (std::uint32_t j = 0; j < m; ++j) qint += ParamScalar::q(static_cast<std::int32_t>(j));
    EXPECT_EQ(jackson.on_monomial(m), BasePoly::monomial(qint, m - 1));
  }
}

TEST(MapsCommute, Examples) {
  EXPECT_TRUE(maps_commute(alpha_k, sigma_q, 6));
  EXPECT_TRUE(maps_commute(alpha_k, MapSpec::euler_derivation(), 6));

  const auto square = MapSpec::endomorphism(BasePoly::y(2));
  const auto shift = MapSpec::endomorphism(y + BasePoly(1));
  const CommuteResult r = maps_commute(square, shift, 2);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->m, 1U);
  EXPECT_EQ(r.witness->f_after_g, BasePoly::y(2) + BasePoly(1));
  EXPECT_EQ(r.witness->g_after_f, (y + BasePoly(1)) * (y + BasePoly(1)));
  EXPECT_EQ(r.degree_bound, 2U);
}

TEST(MapsCommute, ShiftDoesNotCommuteWithEuler) {
  const CommuteResult r = maps_commute(MapSpec::endomorphism(y + BasePoly(1)), MapSpec::euler_derivation(), 4);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->m, 1U);
}

TEST(BaseRingProperties, EndomorphismsAreMultiplicative) {
  gen::Random rng(11);
  const std::vector<MapSpec> maps = {alpha_k, sigma_q, MapSpec::endomorphism(y * y + q),
                                     MapSpec::endomorphism(k * y + BasePoly(1))};
  for (int i = 0; i < 100; ++i) {
    const BasePoly p = rng.base_poly();
    const BasePoly r = rng.base_poly();
    for (const auto& f : maps) EXPECT_EQ(f(p * r), f(p) * f(r));
  }
}

TEST(BaseRingProperties, TwistedLeibnizRule) {
  // In the commutative ring K[y] a sigma-derivation must be compatible with sigma;
  // these are the compatible pairs exercised here.
  const std::vector<MapSpec> derivations = {
      MapSpec::euler_derivation(),
      MapSpec::zero_derivation(sigma_q),
      MapSpec::derivation(BasePoly(1), sigma_q),                    // Jackson q-derivative
      MapSpec::derivation(BasePoly::monomial(q - 1, 1), sigma_q),   // sigma - id
      MapSpec::derivation(BasePoly::y(2), MapSpec::identity()),     // y^2 d/dy
  };
  gen::Random rng(12);
  for (int i = 0; i < 100; ++i) {
    const BasePoly p = rng.base_poly();
    const BasePoly r = rng.base_poly();
    for (const auto& d : derivations) {
      const MapSpec& sigma = *d.twist();
      EXPECT_EQ(d(p * r), sigma(p) * d(r) + d(p) * r) << d.describe();
    }
  }
}

TEST(BaseRingProperties, PresetShapes) {
  const AlgebraPreset qp = quantum_plane();
  const AlgebraPreset env = enveloping();
  for (std::uint32_t m = 0; m <= 8; ++m) {
    EXPECT_TRUE(qp.delta().on_monomial(m).is_zero());
    EXPECT_EQ(env.sigma().on_monomial(m), BasePoly::y(m));
  }
  for (const auto& preset : {qp, env}) {
    EXPECT_TRUE(maps_commute(preset.alpha(), preset.sigma(), 8));
    EXPECT_TRUE(maps_commute(preset.alpha(), preset.delta(), 8));
  }
}

TEST(BasePoly, ArithmeticAndRender) {
  const BasePoly p = BasePoly::monomial(k * k, 2) - y + BasePoly(3);
  EXPECT_EQ(p.degree(), 2U);
  EXPECT_EQ(p.to_string(), "k^2*y^2 - y + 3");
  EXPECT_FALSE(BasePoly{}.degree());
  EXPECT_EQ((y + BasePoly(1)).pow(2), BasePoly::y(2) + 2 * y + BasePoly(1));
  EXPECT_TRUE((p - p).is_zero());
}
