#pragma once

// Exact coefficient arithmetic: rationals and the parameter ring Q[q, q^-1, k, t],
// optionally truncated modulo t^(N+1).

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace horex {

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational pow(int exponent) const;
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exponents of a monomial q^q k^k t^t. Ordered lexicographically on (t, k, q),
/// which is the canonical term order of ParamScalar.
struct ParamMonomial {
  std::int32_t q = 0;
  std::uint32_t k = 0;
  std::uint32_t t = 0;

  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
  friend std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.q <=> b.q;
  }

  ParamMonomial operator*(const ParamMonomial& o) const { return {q + o.q, k + o.k, t + o.t}; }
  bool is_one() const { return q == 0 && k == 0 && t == 0; }
};

/// Element of Q[q, q^-1, k, t], optionally reduced modulo t^(N+1).
///
/// Terms are stored sorted by ParamMonomial with no zero coefficients, so two
/// scalars are equal exactly when their term vectors agree.
/// Arithmetic between an untruncated and a truncated scalar truncates to the
/// latter's order; two different orders raise TruncationMismatch.
class ParamScalar {
 public:
  using Term = std::pair<ParamMonomial, Rational>;
  using Order = std::optional<std::uint32_t>;

  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT: scalars promote implicitly
  ParamScalar(long c) : ParamScalar(Rational(c)) {}  // NOLINT

  static ParamScalar monomial(const Rational& c, ParamMonomial m, Order order = std::nullopt);
  static ParamScalar q(std::int32_t e = 1) { return monomial(1, {e, 0, 0}); }
  static ParamScalar k(std::uint32_t e = 1) { return monomial(1, {0, e, 0}); }
  static ParamScalar t(std::uint32_t e = 1, Order order = std::nullopt) {
    return monomial(1, {0, 0, e}, order);
  }
  /// Builds a scalar from arbitrary (possibly repeated, possibly zero) terms.
  static ParamScalar from_terms(std::vector<Term> terms, Order order = std::nullopt);

  const std::vector<Term>& terms() const { return terms_; }
  Order truncation_order() const { return order_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// The value if the scalar is a constant, nullopt otherwise.
  std::optional<Rational> constant_value() const;

  bool has_q() const;
  bool has_k() const;
  bool has_t() const;
  std::uint32_t degree_k() const;
  std::uint32_t degree_t() const;

  /// Copy reduced modulo t^(order+1); tightening only, never loosens an order.
  ParamScalar truncated(std::uint32_t order) const;
  /// Same terms with the truncation marker dropped.
  ParamScalar untruncated() const;
  ParamScalar pow(std::uint32_t e) const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  // Compares terms only; the truncation marker is not part of the value.
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<Term> terms_;
  Order order_;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

/// Resulting truncation order of combining a and b; throws TruncationMismatch
/// when both are truncated at different orders.
ParamScalar::Order combine_orders(ParamScalar::Order a, ParamScalar::Order b);

/// Replaces k by 1 + t and reduces modulo t^(order+1). Input must be t-free.
ParamScalar substitute_k(const ParamScalar& a, std::uint32_t order);

/// Exact value at the given parameter point. q must be nonzero.
Rational evaluate(const ParamScalar& a, const Rational& q, const Rational& k, const Rational& t);

/// Partial evaluation: substitutes the parameters that are given and keeps the rest symbolic.
ParamScalar specialize(const ParamScalar& a, const std::optional<Rational>& q,
                       const std::optional<Rational>& k, const std::optional<Rational>& t);

/// n choose r as an exact integer.
mpz_class binomial(std::uint32_t n, std::uint32_t r);

}  // namespace horex
