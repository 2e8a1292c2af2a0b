#include "horex/coefficients.hpp"

#include <algorithm>
#include <cctype>

#include "horex/errors.hpp"
#include "render_detail.hpp"

namespace horex {

// --- Rational ---------------------------------------------------------------

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw NonInvertible("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num), 1);
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError(slash + 1, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(to_mpz(num), to_mpz(den));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw NonInvertible("negative power of zero");
    return Rational(denominator(), numerator()).pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NonInvertible("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class binomial(std::uint32_t n, std::uint32_t r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

// --- ParamScalar ------------------------------------------------------------

ParamScalar::Order combine_orders(ParamScalar::Order a, ParamScalar::Order b) {
  if (!a) return b;
  if (!b) return a;
  if (*a != *b) {
    throw TruncationMismatch("truncation orders " + std::to_string(*a) + " and " + std::to_string(*b) +
                             " cannot be combined");
  }
  return a;
}

ParamScalar::ParamScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(ParamMonomial{}, c);
}

ParamScalar ParamScalar::monomial(const Rational& c, ParamMonomial m, Order order) {
  ParamScalar out;
  out.order_ = order;
  if (!c.is_zero() && (!order || m.t <= *order)) out.terms_.emplace_back(m, c);
  return out;
}

ParamScalar ParamScalar::from_terms(std::vector<Term> terms, Order order) {
  ParamScalar out;
  out.terms_ = std::move(terms);
  out.order_ = order;
  out.normalize();
  return out;
}

void ParamScalar::normalize() {
  if (order_) {
    std::erase_if(terms_, [n = *order_](const Term& term) { return term.first.t > n; });
  }
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& term) { return term.second.is_zero(); });
  terms_ = std::move(merged);
}

std::optional<Rational> ParamScalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first.is_one()) return terms_[0].second;
  return std::nullopt;
}

bool ParamScalar::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.q != 0; });
}

bool ParamScalar::has_k() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.k != 0; });
}

bool ParamScalar::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.t != 0; });
}

std::uint32_t ParamScalar::degree_k() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.k);
  return d;
}

std::uint32_t ParamScalar::degree_t() const {
  // Sorted by t first, so the last term carries the largest t exponent.
  return terms_.empty() ? 0 : terms_.back().first.t;
}

ParamScalar ParamScalar::truncated(std::uint32_t order) const {
  ParamScalar out = *this;
  out.order_ = order_ ? std::min(*order_, order) : order;
  out.normalize();
  return out;
}

ParamScalar ParamScalar::untruncated() const {
  ParamScalar out = *this;
  out.order_.reset();
  return out;
}

ParamScalar ParamScalar::pow(std::uint32_t e) const {
  ParamScalar result = ParamScalar::monomial(1, {}, order_);
  ParamScalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  order_ = combine_orders(order_, o.order_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  if (order_) std::erase_if(terms_, [n = *order_](const Term& term) { return term.first.t > n; });
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  *this = *this * o;
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar out;
  out.order_ = combine_orders(a.order_, b.order_);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const ParamMonomial m = ma * mb;
      if (out.order_ && m.t > *out.order_) continue;
      out.terms_.emplace_back(m, ca * cb);
    }
  }
  out.normalize();
  return out;
}

std::string ParamScalar::to_string() const {
  std::vector<detail::SignedTerm> rendered;
  rendered.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    std::vector<std::string> factors;
    detail::append_param_factors(factors, mono);
    rendered.push_back(detail::render_product(coeff, factors));
  }
  return detail::join_terms(rendered);
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.to_string(); }

// --- parameter substitution -------------------------------------------------

ParamScalar substitute_k(const ParamScalar& a, std::uint32_t order) {
  if (a.has_t()) throw DoubleSubstitution("substitute_k: scalar already contains t: " + a.to_string());
  std::vector<ParamScalar::Term> terms;
  for (const auto& [mono, coeff] : a.terms()) {
    const std::uint32_t top = std::min(mono.k, order);
    for (std::uint32_t j = 0; j <= top; ++j) {
      terms.emplace_back(ParamMonomial{mono.q, 0, j}, coeff * Rational(binomial(mono.k, j), 1));
    }
  }
  return ParamScalar::from_terms(std::move(terms), order);
}

Rational evaluate(const ParamScalar& a, const Rational& q, const Rational& k, const Rational& t) {
  if (q.is_zero()) throw NonInvertible("q must be invertible; cannot evaluate at q = 0");
  Rational sum;
  for (const auto& [mono, coeff] : a.terms()) {
    sum += coeff * q.pow(mono.q) * k.pow(static_cast<int>(mono.k)) * t.pow(static_cast<int>(mono.t));
  }
  return sum;
}

ParamScalar specialize(const ParamScalar& a, const std::optional<Rational>& q,
                       const std::optional<Rational>& k, const std::optional<Rational>& t) {
  if (q && q->is_zero()) throw NonInvertible("q must be invertible; cannot specialize at q = 0");
  std::vector<ParamScalar::Term> terms;
  terms.reserve(a.terms().size());
  for (auto [mono, coeff] : a.terms()) {
    if (q) {
      coeff *= q->pow(mono.q);
      mono.q = 0;
    }
    if (k) {
      coeff *= k->pow(static_cast<int>(mono.k));
      mono.k = 0;
    }
    if (t) {
      coeff *= t->pow(static_cast<int>(mono.t));
      mono.t = 0;
    }
    terms.emplace_back(mono, std::move(coeff));
  }
  return ParamScalar::from_terms(std::move(terms), a.truncation_order());
}

}  // namespace horex
