#pragma once

// Concrete syntax for elements of the presets: polynomial expressions in the
// generators x, y and the parameters q, k with rational literals.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' int)?
//   atom   := rational | 'q' | 'k' | 'x' | 'y' | '(' expr ')'
//
// '*' is left-associative and parentheses are kept in the tree, so a
// non-associative product is evaluated exactly as written. Only q accepts a
// negative exponent.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horex/coefficients.hpp"
#include "horex/hom_structures.hpp"
#include "horex/ore.hpp"

namespace horex {

struct Expr {
  enum class Kind { Literal, Param, Gen, Neg, Add, Mul, Pow, Group };

  Kind kind = Kind::Literal;
  Rational literal;           // Literal
  char symbol = 0;            // Param: 'q' | 'k'; Gen: 'x' | 'y'
  int exponent = 0;           // Pow
  std::vector<Expr> children;
  std::size_t position = 0;   // offset into the source text

  /// Structural form, e.g. "Add(Mul(x,y),Neg(Mul(Mul(q,y),x)))". Groups print as "Group(...)".
  std::string to_string() const;

  /// Compares structure only; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws ParseError with the offending offset.
Expr parse(std::string_view source);

enum class OutputFormat { Text, Json };

struct CliConfig {
  std::string algebra = "quantum-plane";
  ProductMode product = ProductMode::Star;
  std::optional<Rational> q_value;  // nullopt keeps q symbolic
  std::optional<Rational> k_value;  // nullopt keeps k symbolic
  std::uint32_t degree = 3;
  std::uint32_t order = 8;
  OutputFormat format = OutputFormat::Text;

  ParamScalar q() const;
  ParamScalar k() const;
  AlgebraPreset preset() const;
  ProductHandle handle() const { return ProductHandle(preset(), product); }
};

struct EvalResult {
  OrePoly value;
  std::vector<std::string> warnings;
};

/// Bottom-up evaluation. Scalars (literals, q, k and anything built only from
/// them) act by scalar multiplication; a product of two algebra elements uses
/// the configured product. Ungrouped star chains with three or more algebra
/// factors, and star powers of three or more, are evaluated left-associatively
/// and reported in `warnings`.
EvalResult evaluate_expr(const Expr& e, const CliConfig& cfg);
EvalResult evaluate_expr(const Expr& e, const ProductHandle& h, const ParamScalar& q, const ParamScalar& k);

}  // namespace horex
