#pragma once

// Associators, brackets and hom-Jacobiators under either the associative Ore
// product or the star product, plus an exhaustive identity checker over
// normal-form monomials.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horex/ore.hpp"

namespace horex {

enum class ProductMode { Assoc, Star };

std::string_view to_string(ProductMode mode);
/// "assoc" or "star"; throws UnknownName otherwise.
ProductMode parse_product_mode(std::string_view name);

/// A product on an Ore extension together with the preset's twisting map.
/// In Assoc mode the product is ore_mul; in Star mode it is alpha o ore_mul.
/// Either way alpha() is the preset's homogeneously extended alpha.
class ProductHandle {
 public:
  ProductHandle(AlgebraPreset preset, ProductMode mode) : preset_(std::move(preset)), mode_(mode) {}

  const AlgebraPreset& preset() const { return preset_; }
  ProductMode mode() const { return mode_; }

  OrePoly mul(const OrePoly& a, const OrePoly& b) const;
  OrePoly alpha(const OrePoly& a) const { return extend_alpha(preset_, a); }

 private:
  AlgebraPreset preset_;
  ProductMode mode_;
};

/// a(bc) - (ab)c
OrePoly associator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h);
/// alpha(a)(bc) - (ab)alpha(c)
OrePoly hom_associator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h);
/// ab - ba
OrePoly bracket(const OrePoly& a, const OrePoly& b, const ProductHandle& h);
/// [alpha(a),[b,c]] + [alpha(c),[a,b]] + [alpha(b),[c,a]]
OrePoly hom_jacobiator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h);

struct CheckWitness {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
  std::string difference;
};

/// Outcome of an exhaustive identity check. passed == !witness.has_value().
struct CheckReport {
  std::string check;
  std::string preset;
  std::string mode;
  std::uint32_t bounds = 0;
  std::optional<std::uint32_t> order;  // series order, deformation checks only
  bool passed = true;
  std::optional<CheckWitness> witness;

  std::string to_json() const;
  std::string to_text() const;
};

enum class Check { HomAssoc, HomJacobi, Assoc, AntiComm, WeakUnit, AlphaMult };

std::string_view to_string(Check check);
/// Throws UnknownName for anything outside
/// {hom-assoc, hom-jacobi, assoc, anti-comm, weak-unit, alpha-mult}.
Check parse_check(std::string_view name);

/// Evaluates the identity on every monomial tuple y^m x^n with m, n <= bounds,
/// in lexicographic tuple order; the first failure is reported as the witness.
/// `unit` is the weak-unit candidate for Check::WeakUnit and is ignored otherwise.
CheckReport certify(Check check, const ProductHandle& h, std::uint32_t bounds, const OrePoly& unit = OrePoly(1));
CheckReport certify(std::string_view check, const ProductHandle& h, std::uint32_t bounds,
                    const OrePoly& unit = OrePoly(1));

}  // namespace horex
