#include "render_detail.hpp"

#include <sstream>

namespace horex::detail {

std::string power(std::string_view base, long exponent) {
  if (exponent == 0) return {};
  std::string out(base);
  if (exponent != 1) out += "^" + std::to_string(exponent);
  return out;
}

void append_param_factors(std::vector<std::string>& factors, const ParamMonomial& m) {
  if (m.q != 0) factors.push_back(power("q", m.q));
  if (m.k != 0) factors.push_back(power("k", m.k));
  if (m.t != 0) factors.push_back(power("t", m.t));
}

SignedTerm render_product(const Rational& c, const std::vector<std::string>& factors) {
  SignedTerm term;
  term.negative = c.sign() < 0;
  const Rational magnitude = term.negative ? -c : c;
  std::ostringstream os;
  bool first = true;
  if (factors.empty() || !magnitude.is_one()) {
    os << magnitude;
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) os << '*';
    os << f;
    first = false;
  }
  term.body = os.str();
  return term;
}

SignedTerm render_scaled(const ParamScalar& c, const std::vector<std::string>& basis) {
  if (c.terms().size() == 1) {
    const auto& [mono, coeff] = c.terms().front();
    std::vector<std::string> factors;
    append_param_factors(factors, mono);
    factors.insert(factors.end(), basis.begin(), basis.end());
    return render_product(coeff, factors);
  }
  std::string body = "(" + c.to_string() + ")";
  for (const auto& f : basis) body += "*" + f;
  return {false, body};
}

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += "-";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

}  // namespace horex::detail
