#pragma once

// The commutative base ring K[y] and the structured maps acting on it.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "horex/coefficients.hpp"

namespace horex {

/// Polynomial in y with ParamScalar coefficients. Zero coefficients are never stored.
class BasePoly {
 public:
  using Terms = std::map<std::uint32_t, ParamScalar>;

  BasePoly() = default;
  BasePoly(const ParamScalar& c);  // NOLINT: constants embed implicitly

  /// c * y^m
  static BasePoly monomial(const ParamScalar& c, std::uint32_t m);
  static BasePoly y(std::uint32_t m = 1) { return monomial(1, m); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest stored y-degree, nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  /// Coefficient of y^m (zero if absent).
  ParamScalar coefficient(std::uint32_t m) const;
  bool has_k() const;

  BasePoly pow(std::uint32_t e) const;

  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& o);
  BasePoly& operator-=(const BasePoly& o);
  BasePoly& operator*=(const ParamScalar& c);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator*(BasePoly a, const ParamScalar& c) { return a *= c; }
  friend BasePoly operator*(const ParamScalar& c, BasePoly a) { return a *= c; }
  friend bool operator==(const BasePoly&, const BasePoly&) = default;

  std::string to_string() const;

 private:
  void add_term(std::uint32_t m, const ParamScalar& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BasePoly& p);

enum class MapKind { Endomorphism, SigmaDerivation };

/// A K-linear map on K[y] determined by its value on y.
///
/// An Endomorphism extends multiplicatively (constants are fixed). A
/// SigmaDerivation kills constants and extends by the twisted Leibniz rule
/// d(fg) = sigma(f) d(g) + d(f) g, with sigma the attached twist.
class MapSpec {
 public:
  static MapSpec endomorphism(BasePoly image_of_y);
  static MapSpec identity() { return endomorphism(BasePoly::y()); }
  /// y -> c*y
  static MapSpec scaling(const ParamScalar& c) { return endomorphism(BasePoly::monomial(c, 1)); }
  static MapSpec derivation(BasePoly image_of_y, const MapSpec& twist);
  static MapSpec zero_derivation(const MapSpec& twist) { return derivation(BasePoly{}, twist); }
  /// y d/dy, twisted by the identity.
  static MapSpec euler_derivation() { return derivation(BasePoly::y(), identity()); }

  MapKind kind() const { return kind_; }
  const BasePoly& image_of_y() const { return image_; }
  /// The twisting endomorphism of a SigmaDerivation; nullptr for an Endomorphism.
  const MapSpec* twist() const { return twist_.get(); }

  /// Image of y^m.
  BasePoly on_monomial(std::uint32_t m) const;
  /// Applies the map to an arbitrary polynomial, whatever its kind.
  BasePoly operator()(const BasePoly& p) const;

  bool is_zero_map() const { return kind_ == MapKind::SigmaDerivation && image_.is_zero(); }
  bool has_k() const;

  std::string describe() const;

 private:
  MapSpec(MapKind kind, BasePoly image, std::shared_ptr<const MapSpec> twist)
      : kind_(kind), image_(std::move(image)), twist_(std::move(twist)) {}

  MapKind kind_;
  BasePoly image_;
  std::shared_ptr<const MapSpec> twist_;
};

/// Applies an Endomorphism; throws WrongMapKind for a derivation.
BasePoly apply_endo(const MapSpec& f, const BasePoly& p);
/// Applies a SigmaDerivation; throws WrongMapKind for an endomorphism.
BasePoly apply_deriv(const MapSpec& d, const BasePoly& p);

struct CommuteResult {
  bool commute = true;
  std::uint32_t degree_bound = 0;
  /// Smallest m with f(g(y^m)) != g(f(y^m)), with both sides.
  struct Witness {
    std::uint32_t m;
    BasePoly f_after_g;
    BasePoly g_after_f;
  };
  std::optional<Witness> witness;

  explicit operator bool() const { return commute; }
};

/// Checks f o g == g o f on y^0 .. y^degree_bound.
CommuteResult maps_commute(const MapSpec& f, const MapSpec& g, std::uint32_t degree_bound = 8);

}  // namespace horex
