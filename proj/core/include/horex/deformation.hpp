#pragma once

// One-parameter formal deformations: truncated t-series over the Ore extension,
// the twisting series alpha_t, and the deformed product and bracket obtained by
// composing alpha_t with the undeformed product.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "horex/hom_structures.hpp"
#include "horex/ore.hpp"

namespace horex {

inline constexpr std::uint32_t kDefaultSeriesOrder = 8;

/// sum_{i <= N} c_i t^i with OrePoly coefficients, reduced modulo t^(N+1).
///
/// Coefficients are nonzero and free of k and t: all parameter content of a
/// layer lives in q. Violations raise UnsubstitutedParameter.
class SeriesOrePoly {
 public:
  using Layers = std::map<std::uint32_t, OrePoly>;

  explicit SeriesOrePoly(std::uint32_t order = kDefaultSeriesOrder) : order_(order) {}
  /// p t^0
  SeriesOrePoly(const OrePoly& p, std::uint32_t order);
  static SeriesOrePoly from_layers(Layers layers, std::uint32_t order);

  std::uint32_t order() const { return order_; }
  const Layers& layers() const { return layers_; }
  /// Coefficient of t^i (zero if absent or beyond the order).
  OrePoly layer(std::uint32_t i) const;
  bool is_zero() const { return layers_.empty(); }

  SeriesOrePoly truncated(std::uint32_t order) const;

  SeriesOrePoly operator-() const;
  SeriesOrePoly& operator+=(const SeriesOrePoly& o);
  SeriesOrePoly& operator-=(const SeriesOrePoly& o);
  friend SeriesOrePoly operator+(SeriesOrePoly a, const SeriesOrePoly& b) { return a += b; }
  friend SeriesOrePoly operator-(SeriesOrePoly a, const SeriesOrePoly& b) { return a -= b; }
  /// Multiplication by an element of R[[t]] (a k-free ParamScalar, t allowed).
  friend SeriesOrePoly operator*(const ParamScalar& c, const SeriesOrePoly& s);
  /// Layer-wise comparison; the order is not part of the value.
  friend bool operator==(const SeriesOrePoly& a, const SeriesOrePoly& b) { return a.layers_ == b.layers_; }

  /// e.g. "y^2 + 2*y^2*t + y^2*t^2"
  std::string to_string() const;

 private:
  void add_layer(std::uint32_t i, const OrePoly& p);

  Layers layers_;
  std::uint32_t order_;
};

std::ostream& operator<<(std::ostream& os, const SeriesOrePoly& s);

/// The t-th layer map alpha_i: a y^m x^n -> binom(m, i) a y^m x^n.
OrePoly alpha_layer(std::uint32_t i, const OrePoly& p);

/// alpha_t(a y^m x^n) = a ((t+1) y)^m x^n, truncated at t^order. p must be k-free.
SeriesOrePoly alpha_t(const OrePoly& p, std::uint32_t order);
/// R[[t]]-linear extension of alpha_t to a series.
SeriesOrePoly alpha_t(const SeriesOrePoly& p);

/// The deformation of an Ore extension with twisting map y -> k y, written in
/// t = k - 1: alpha_t as above and products composed as alpha_t o (undeformed product).
class DeformedStructure {
 public:
  /// The preset's sigma and delta must be k-free; its alpha is replaced by the identity.
  DeformedStructure(const AlgebraPreset& preset, std::uint32_t order = kDefaultSeriesOrder);

  const AlgebraPreset& base() const { return base_; }
  std::uint32_t order() const { return order_; }

  /// Undeformed product extended R[[t]]-bilinearly (layer convolution).
  SeriesOrePoly product_0(const SeriesOrePoly& p, const SeriesOrePoly& r) const;
  /// Lifts an element to a constant series of this structure's order.
  SeriesOrePoly lift(const OrePoly& p) const;

 private:
  AlgebraPreset base_;
  std::uint32_t order_;
};

/// Layer l of the result is sum_{i+j+s=l} alpha_i(p_j . r_s).
SeriesOrePoly product_t(const SeriesOrePoly& p, const SeriesOrePoly& r, const DeformedStructure& d);
/// product_t(p, r) - product_t(r, p)
SeriesOrePoly bracket_t(const SeriesOrePoly& p, const SeriesOrePoly& r, const DeformedStructure& d);

/// star(p, r) computed with symbolic k, then rewritten in t via k = 1 + t.
SeriesOrePoly series_from_star(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset,
                               std::uint32_t order);

enum class DeformationCheck { HomAssocDeform, HomLieDeform, Bridge };

std::string_view to_string(DeformationCheck check);
/// Throws UnknownName outside {hom-assoc-deform, hom-lie-deform, bridge}.
DeformationCheck parse_deformation_check(std::string_view name);
bool is_deformation_check(std::string_view name);

/// Layer-wise verification over monomials y^m x^n with m, n <= bounds.
///  - Bridge: product_t == series_from_star on all pairs.
///  - HomAssocDeform: alpha_t(a) ._t (b ._t c) == (a ._t b) ._t alpha_t(c) on all triples.
///  - HomLieDeform: alternativity and anti-commutativity of bracket_t on pairs, then
///    bilinearity with weights in R[[t]] and the hom-Jacobi identity on triples.
/// The preset must carry the twisting map y -> k y with symbolic k.
CheckReport check_deformation(const AlgebraPreset& preset, DeformationCheck which, std::uint32_t bounds,
                              std::uint32_t order = kDefaultSeriesOrder);

}  // namespace horex
