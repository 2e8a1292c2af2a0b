#include <gtest/gtest.h>

#include <json.hpp>

#include "generators.hpp"
#include "horex/errors.hpp"
#include "horex/hom_structures.hpp"

using namespace horex;

namespace {

const ParamScalar q = ParamScalar::q();
const ParamScalar k = ParamScalar::k();
const OrePoly x = OrePoly::x();
const OrePoly y = OrePoly::y();

const ProductHandle qp_star(quantum_plane(), ProductMode::Star);
const ProductHandle env_star(enveloping(), ProductMode::Star);
const ProductHandle qp_assoc(quantum_plane(), ProductMode::Assoc);
const ProductHandle env_assoc(enveloping(), ProductMode::Assoc);

// (k - 1) k^3
const ParamScalar kfactor = (k - 1) * ParamScalar::k(3);

}  // namespace

TEST(Associator, PaperExamples) {
  EXPECT_EQ(associator(x, y, y, qp_star), OrePoly::monomial(kfactor * ParamScalar::q(2), 2, 1));
  EXPECT_EQ(associator(x, y, y, env_star), OrePoly::monomial(kfactor, 2, 1) + OrePoly::monomial(2 * kfactor, 2, 0));
}

TEST(Associator, VanishesInAssocMode) {
  gen::Random rng(31);
  for (int i = 0; i < 40; ++i) {
    const OrePoly a = rng.ore_poly(2);
    const OrePoly b = rng.ore_poly(2);
    const OrePoly c = rng.ore_poly(2);
    EXPECT_TRUE(associator(a, b, c, qp_assoc).is_zero());
    EXPECT_TRUE(associator(a, b, c, env_assoc).is_zero());
  }
}

TEST(HomAssociator, Examples) {
  EXPECT_TRUE(hom_associator(x, y, y, qp_star).is_zero());
  EXPECT_TRUE(hom_associator(x, y, y, env_star).is_zero());
  const ProductHandle untwisted(enveloping().untwisted(), ProductMode::Assoc);
  gen::Random rng(32);
  for (int i = 0; i < 40; ++i) {
    EXPECT_TRUE(hom_associator(rng.ore_poly(2), rng.ore_poly(2), rng.ore_poly(2), untwisted).is_zero());
  }
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(x, y, env_star), OrePoly::monomial(k, 1, 0));
  EXPECT_EQ(bracket(x, y, env_assoc), y);
  gen::Random rng(33);
  for (int i = 0; i < 40; ++i) {
    const OrePoly a = rng.ore_poly();
    for (const auto* h : {&qp_star, &env_star, &qp_assoc, &env_assoc}) EXPECT_TRUE(bracket(a, a, *h).is_zero());
  }
}

TEST(HomJacobiator, Examples) {
  EXPECT_TRUE(hom_jacobiator(x, y, OrePoly::y(2), env_star).is_zero());
  EXPECT_TRUE(hom_jacobiator(x, y, OrePoly::monomial(1, 1, 1), qp_star).is_zero());
  const ProductHandle untwisted(quantum_plane().untwisted(), ProductMode::Assoc);
  gen::Random rng(34);
  for (int i = 0; i < 30; ++i) {
    const OrePoly a = rng.ore_poly(2);
    const OrePoly b = rng.ore_poly(2);
    EXPECT_TRUE(hom_jacobiator(a, b, b, untwisted).is_zero());
    EXPECT_TRUE(hom_jacobiator(a, a, b, untwisted).is_zero());
  }
}

TEST(Certify, Examples) {
  EXPECT_TRUE(certify(Check::HomAssoc, qp_star, 3).passed);
  EXPECT_TRUE(certify(Check::AntiComm, env_star, 3).passed);

  const CheckReport r = certify("assoc", qp_star, 2);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.bounds, 2U);
  // Lexicographically first failing triple.
  EXPECT_EQ(r.witness->inputs, (std::vector<std::string>{"1", "1", "y"}));
  EXPECT_EQ(r.witness->difference, OrePoly::monomial(k * k - k, 1, 0).to_string());
}

TEST(Certify, AllChecksPassForBothPresets) {
  for (const auto* h : {&qp_star, &env_star}) {
    for (const char* name : {"hom-assoc", "anti-comm", "alpha-mult"}) EXPECT_TRUE(certify(name, *h, 2).passed) << name;
    EXPECT_TRUE(certify(Check::HomJacobi, *h, 1).passed);
    EXPECT_TRUE(certify(Check::WeakUnit, *h, 4).passed);
  }
  EXPECT_TRUE(certify(Check::Assoc, qp_assoc, 2).passed);
  EXPECT_TRUE(certify(Check::Assoc, env_assoc, 2).passed);
}

TEST(Certify, WeakUnitCandidate) {
  const CheckReport r = certify(Check::WeakUnit, qp_star, 1, y);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->inputs.back(), "1");
}

TEST(Certify, UnknownCheck) {
  EXPECT_THROW(certify("commutative", qp_star, 1), UnknownName);
  EXPECT_THROW(parse_check("bridge"), UnknownName);
  EXPECT_THROW(parse_product_mode("lie"), UnknownName);
}

TEST(CheckReport, JsonSchema) {
  const auto failed = nlohmann::json::parse(certify(Check::Assoc, env_star, 1).to_json());
  EXPECT_EQ(failed["check"], "assoc");
  EXPECT_EQ(failed["preset"], "enveloping");
  EXPECT_EQ(failed["mode"], "star");
  EXPECT_EQ(failed["bounds"], 1);
  EXPECT_EQ(failed["passed"], false);
  ASSERT_TRUE(failed.contains("witness"));
  for (const char* key : {"lhs", "rhs", "difference"}) EXPECT_TRUE(failed["witness"][key].is_string());
  EXPECT_EQ(failed["witness"]["inputs"].size(), 3U);
  EXPECT_FALSE(failed.contains("order"));

  const auto passed = nlohmann::json::parse(certify(Check::HomAssoc, env_star, 1).to_json());
  EXPECT_EQ(passed["passed"], true);
  EXPECT_FALSE(passed.contains("witness"));
}

TEST(CheckReport, Text) {
  EXPECT_EQ(certify(Check::HomAssoc, qp_star, 1).to_text(), "hom-assoc [quantum-plane, star, m,n <= 1]: passed\n");
}

TEST(HomProperties, BracketBilinearity) {
  gen::Random rng(1001);
  const ProductHandle* handles[] = {&qp_star, &env_star, &qp_assoc, &env_assoc};
  for (int i = 0; i < 1000; ++i) {
    const ProductHandle& h = *handles[i % 4];
    const OrePoly a = rng.ore_poly(2, 2);
    const OrePoly b = rng.ore_poly(2, 2);
    const OrePoly c = rng.ore_poly(2, 2);
    const ParamScalar u = rng.qk_scalar(2);
    const ParamScalar v = rng.qk_scalar(2);
    ASSERT_EQ(bracket(a * u + b * v, c, h), bracket(a, c, h) * u + bracket(b, c, h) * v);
    ASSERT_EQ(bracket(c, a * u + b * v, h), bracket(c, a, h) * u + bracket(c, b, h) * v);
  }
}

TEST(HomProperties, AlternativityAndAntiCommutativity) {
  gen::Random rng(1002);
  const ProductHandle* handles[] = {&qp_star, &env_star, &qp_assoc, &env_assoc};
  for (int i = 0; i < 1000; ++i) {
    const ProductHandle& h = *handles[i % 4];
    const OrePoly a = rng.ore_poly(2, 3);
    const OrePoly b = rng.ore_poly(2, 3);
    ASSERT_TRUE(bracket(a, a, h).is_zero());
    ASSERT_TRUE((bracket(a, b, h) + bracket(b, a, h)).is_zero());
  }
}

TEST(HomProperties, AssociatorDivisibleByKMinusOne) {
  const auto grid = monomial_grid(3);
  for (const auto* h : {&qp_star, &env_star}) {
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        const OrePoly ab = h->mul(a, b);
        for (const auto& c : grid) {
          const OrePoly value = h->mul(a, h->mul(b, c)) - h->mul(ab, c);
          for (const auto& [deg, coeff] : value.terms()) {
            ASSERT_TRUE(specialize(coeff, std::nullopt, Rational(1), std::nullopt).is_zero())
                << a << ", " << b << ", " << c;
          }
        }
      }
    }
  }
  // The paper's witness coefficient is itself nonzero.
  EXPECT_FALSE(associator(x, y, y, qp_star).coefficient(2, 1).is_zero());
}
