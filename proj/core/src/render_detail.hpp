#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "horex/coefficients.hpp"

namespace horex::detail {

struct SignedTerm {
  bool negative = false;
  std::string body;
};

// "y", "y^3"; empty for a zero exponent.
std::string power(std::string_view base, long exponent);

void append_param_factors(std::vector<std::string>& factors, const ParamMonomial& m);

// |c| times the factors, with the sign split off.
SignedTerm render_product(const Rational& c, const std::vector<std::string>& factors);

// A parameter coefficient times a basis monomial; multi-term coefficients are parenthesized.
SignedTerm render_scaled(const ParamScalar& c, const std::vector<std::string>& basis);

// "a + b - c"; "0" when empty.
std::string join_terms(const std::vector<SignedTerm>& terms);

}  // namespace horex::detail
