#pragma once

// Ore extensions K[y][x; sigma, delta] in the normal form sum a_{m,n} y^m x^n,
// the hom-associative product a * b := alpha(a . b), and the two algebra presets.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "horex/base_ring.hpp"
#include "horex/coefficients.hpp"

namespace horex {

/// Exponent pair of the normal-form monomial y^m x^n.
struct Bidegree {
  std::uint32_t m = 0;  // y-degree
  std::uint32_t n = 0;  // x-degree

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Element of R[x; sigma, delta] with R = K[y], stored as a sparse map from
/// (m, n) to the coefficient of y^m x^n. Zero coefficients are never stored, so
/// equality is exact coefficient-map equality.
class OrePoly {
 public:
  using Terms = std::map<Bidegree, ParamScalar>;

  OrePoly() = default;
  OrePoly(const ParamScalar& c);  // NOLINT: scalars embed as c * 1
  OrePoly(const BasePoly& a);     // NOLINT: a -> a x^0

  static OrePoly monomial(const ParamScalar& c, std::uint32_t m, std::uint32_t n);
  static OrePoly x(std::uint32_t n = 1) { return monomial(1, 0, n); }
  static OrePoly y(std::uint32_t m = 1) { return monomial(1, m, 0); }
  /// a x^n
  static OrePoly from_slice(const BasePoly& a, std::uint32_t n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamScalar coefficient(std::uint32_t m, std::uint32_t n) const;
  /// Coefficients grouped by x-degree: the polynomial equals sum_n slices[n] x^n.
  std::map<std::uint32_t, BasePoly> slices() const;
  bool is_base() const;  // x-degree 0 only

  bool has_q() const;
  bool has_k() const;
  bool has_t() const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  OrePoly& operator*=(const ParamScalar& c);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend OrePoly operator*(OrePoly a, const ParamScalar& c) { return a *= c; }
  friend OrePoly operator*(const ParamScalar& c, OrePoly a) { return a *= c; }
  friend bool operator==(const OrePoly&, const OrePoly&) = default;

  /// Canonical text form, terms in descending (m, n) order, e.g. "y*x + y".
  std::string to_string() const;

 private:
  void add_term(Bidegree d, const ParamScalar& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const OrePoly& p);

/// The maps (sigma, delta, alpha) defining an Ore extension and its twisting map.
/// Construction verifies that alpha commutes with sigma and delta up to a degree
/// bound, which is the hypothesis under which the star product is hom-associative.
class AlgebraPreset {
 public:
  static AlgebraPreset make(std::string name, MapSpec sigma, MapSpec delta, MapSpec alpha,
                            std::uint32_t commute_bound = 8);

  const std::string& name() const { return name_; }
  const MapSpec& sigma() const { return sigma_; }
  const MapSpec& delta() const { return delta_; }
  const MapSpec& alpha() const { return alpha_; }

  /// Same extension with the twisting map replaced by the identity.
  AlgebraPreset untwisted() const;

 private:
  AlgebraPreset(std::string name, MapSpec sigma, MapSpec delta, MapSpec alpha)
      : name_(std::move(name)), sigma_(std::move(sigma)), delta_(std::move(delta)), alpha_(std::move(alpha)) {}

  std::string name_;
  MapSpec sigma_;
  MapSpec delta_;
  MapSpec alpha_;
};

/// sigma(y) = q y, delta = 0, alpha(y) = k y.
AlgebraPreset quantum_plane(const ParamScalar& q = ParamScalar::q(), const ParamScalar& k = ParamScalar::k());
/// sigma = id, delta = y d/dy, alpha(y) = k y.
AlgebraPreset enveloping(const ParamScalar& k = ParamScalar::k());
/// "quantum-plane" or "enveloping"; q is ignored by the latter.
AlgebraPreset preset_by_name(std::string_view name, const ParamScalar& q = ParamScalar::q(),
                             const ParamScalar& k = ParamScalar::k());

/// pi_i^m(b): sum of all compositions of i copies of sigma and m - i copies of delta.
/// Zero when i < 0 or i > m.
BasePoly pi(int i, std::uint32_t m, const AlgebraPreset& preset, const BasePoly& b);
/// pi_0^m(b), ..., pi_m^m(b) in one pass.
std::vector<BasePoly> pi_row(std::uint32_t m, const AlgebraPreset& preset, const BasePoly& b);

/// Associative Ore product: a x^m . b x^n = sum_i (a pi_i^m(b)) x^(i+n), extended bilinearly.
OrePoly ore_mul(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset);

/// alpha(a x^m) = alpha(a) x^m, extended additively.
OrePoly extend_alpha(const AlgebraPreset& preset, const OrePoly& p);

/// p * r := alpha(p . r)
OrePoly star(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset);

/// Normal-form monomials y^m x^n with m, n <= bound, ordered lexicographically by (m, n).
std::vector<OrePoly> monomial_grid(std::uint32_t bound);

struct WeakUnitResult {
  bool passed = true;
  std::uint32_t degree_bound = 0;
  struct Witness {
    OrePoly b;
    bool left;  // true: e * b failed, false: b * e failed
    OrePoly product;
    OrePoly expected;
  };
  std::optional<Witness> witness;
};

/// Checks e * b == b * e == alpha(b) for every monomial b = y^m x^n, m, n <= degree_bound.
WeakUnitResult weak_unit_check(const OrePoly& e, const AlgebraPreset& preset, std::uint32_t degree_bound);

}  // namespace horex
