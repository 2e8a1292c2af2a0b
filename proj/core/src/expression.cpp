#include "horex/expression.hpp"

#include <cctype>
#include <limits>
#include <variant>

#include "horex/errors.hpp"

namespace horex {

// --- Expr -------------------------------------------------------------------

std::string Expr::to_string() const {
  auto join = [this](std::string_view name) {
    std::string out(name);
    out += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i != 0) out += ',';
      out += children[i].to_string();
    }
    return out + ')';
  };
  switch (kind) {
    case Kind::Literal:
      return literal.to_string();
    case Kind::Param:
    case Kind::Gen:
      return std::string(1, symbol);
    case Kind::Neg:
      return join("Neg");
    case Kind::Add:
      return join("Add");
    case Kind::Mul:
      return join("Mul");
    case Kind::Pow:
      return "Pow(" + children[0].to_string() + "," + std::to_string(exponent) + ")";
    case Kind::Group:
      return join("Group");
  }
  return {};
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.literal == b.literal && a.symbol == b.symbol && a.exponent == b.exponent &&
         a.children == b.children;
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "' (implicit multiplication is not allowed)");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr node(Expr::Kind kind, std::size_t position, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = kind;
    e.position = position;
    e.children = std::move(children);
    return e;
  }

  Expr expr() {
    skip_space();
    const std::size_t start = pos_;
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, start, {std::move(lhs), term()});
      } else if (accept('-')) {
        Expr rhs = node(Expr::Kind::Neg, at, {term()});
        lhs = node(Expr::Kind::Add, start, {std::move(lhs), std::move(rhs)});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    skip_space();
    const std::size_t start = pos_;
    Expr lhs = unary();
    while (accept('*')) lhs = node(Expr::Kind::Mul, start, {std::move(lhs), unary()});
    return lhs;
  }

  Expr unary() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, start, {unary()});
    return factor();
  }

  Expr factor() {
    skip_space();
    const std::size_t start = pos_;
    Expr base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t exp_at = pos_;
    const bool negative = accept('-');
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected an integer exponent after '^'");
    if (digits.size() > 6) fail("exponent too large");
    int value = std::stoi(digits);
    if (negative) {
      if (base.kind != Expr::Kind::Param || base.symbol != 'q') {
        pos_ = exp_at;
        fail("negative exponent is only allowed on q");
      }
      value = -value;
    }
    Expr e = node(Expr::Kind::Pow, start, {std::move(base)});
    e.exponent = value;
    return e;
  }

  std::string read_digits() {
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(begin, pos_ - begin));
  }

  Expr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return node(Expr::Kind::Group, start, {std::move(inner)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = read_digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected a denominator after '/'");
        text += "/" + den;
      }
      Expr e = node(Expr::Kind::Literal, start);
      try {
        e.literal = Rational::parse(text);
      } catch (const NonInvertible&) {
        pos_ = start;
        fail("zero denominator in '" + text + "'");
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string_view word = src_.substr(pos_, end - pos_);
      if (word.size() != 1 || (c != 'q' && c != 'k' && c != 'x' && c != 'y')) {
        fail("unknown symbol '" + std::string(word) + "' (expected q, k, x or y)");
      }
      pos_ = end;
      Expr e = node((c == 'q' || c == 'k') ? Expr::Kind::Param : Expr::Kind::Gen, start);
      e.symbol = c;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

// --- configuration ----------------------------------------------------------

ParamScalar CliConfig::q() const {
  if (!q_value) return ParamScalar::q();
  if (q_value->is_zero()) throw NonInvertible("q must be nonzero");
  return ParamScalar(*q_value);
}

ParamScalar CliConfig::k() const { return k_value ? ParamScalar(*k_value) : ParamScalar::k(); }

AlgebraPreset CliConfig::preset() const { return preset_by_name(algebra, q(), k()); }

// --- evaluation -------------------------------------------------------------

namespace {

using Value = std::variant<ParamScalar, OrePoly>;

OrePoly as_poly(const Value& v) {
  if (const auto* s = std::get_if<ParamScalar>(&v)) return OrePoly(*s);
  return std::get<OrePoly>(v);
}

// Inverse of a single-term scalar such as q, 2*q or 3/2.
ParamScalar invert_monomial(const ParamScalar& s) {
  if (s.terms().size() != 1 || s.terms()[0].first.k != 0 || s.terms()[0].first.t != 0) {
    throw NonInvertible("cannot invert " + s.to_string());
  }
  const auto& [mono, coeff] = s.terms()[0];
  return ParamScalar::monomial(Rational(1) / coeff, {-mono.q, 0, 0});
}

class Evaluator {
 public:
  Evaluator(const ProductHandle& h, ParamScalar q, ParamScalar k) : h_(h), q_(std::move(q)), k_(std::move(k)) {}

  struct Out {
    Value value;
    int chain = 0;  // algebra factors in the ungrouped '*' chain ending here
  };

  Out eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal:
        return {ParamScalar(e.literal)};
      case Expr::Kind::Param:
        return {e.symbol == 'q' ? q_ : k_};
      case Expr::Kind::Gen:
        return {e.symbol == 'x' ? OrePoly::x() : OrePoly::y()};
      case Expr::Kind::Group:
        return {eval(e.children[0]).value};
      case Expr::Kind::Neg: {
        Value v = eval(e.children[0]).value;
        std::visit([](auto& x) { x = -x; }, v);
        return {std::move(v)};
      }
      case Expr::Kind::Add: {
        Value a = eval(e.children[0]).value;
        Value b = eval(e.children[1]).value;
        if (std::holds_alternative<ParamScalar>(a) && std::holds_alternative<ParamScalar>(b)) {
          return {std::get<ParamScalar>(a) + std::get<ParamScalar>(b)};
        }
        return {as_poly(a) + as_poly(b)};
      }
      case Expr::Kind::Mul:
        return mul(e);
      case Expr::Kind::Pow:
        return {power(e)};
    }
    return {};
  }

  std::vector<std::string> warnings;

 private:
  static bool is_algebra(const Value& v) { return std::holds_alternative<OrePoly>(v); }

  Out mul(const Expr& e) {
    const Expr& left_expr = e.children[0];
    Out left = eval(left_expr);
    Out right = eval(e.children[1]);
    int chain = left_expr.kind == Expr::Kind::Mul ? left.chain : (is_algebra(left.value) ? 1 : 0);
    if (is_algebra(right.value)) ++chain;
    if (chain == 3 && h_.mode() == ProductMode::Star) {
      warnings.push_back("warning: unparenthesized star product of three or more algebra factors at position " +
                         std::to_string(e.position) + " evaluated left-associatively");
    }

    const auto* ls = std::get_if<ParamScalar>(&left.value);
    const auto* rs = std::get_if<ParamScalar>(&right.value);
    if (ls && rs) return {*ls * *rs, chain};
    if (ls) return {std::get<OrePoly>(right.value) * *ls, chain};
    if (rs) return {std::get<OrePoly>(left.value) * *rs, chain};
    return {h_.mul(std::get<OrePoly>(left.value), std::get<OrePoly>(right.value)), chain};
  }

  Value power(const Expr& e) {
    Value base = eval(e.children[0]).value;
    const int n = e.exponent;
    if (const auto* s = std::get_if<ParamScalar>(&base)) {
      if (n >= 0) return s->pow(static_cast<std::uint32_t>(n));
      return invert_monomial(*s).pow(static_cast<std::uint32_t>(-n));
    }
    const auto& p = std::get<OrePoly>(base);
    if (n == 0) return ParamScalar(1);
    if (n >= 3 && h_.mode() == ProductMode::Star) {
      warnings.push_back("warning: star power '^" + std::to_string(n) + "' at position " +
                         std::to_string(e.position) + " expanded left-associatively");
    }
    OrePoly acc = p;
    for (int i = 1; i < n; ++i) acc = h_.mul(acc, p);
    return acc;
  }

  const ProductHandle& h_;
  ParamScalar q_;
  ParamScalar k_;
};

}  // namespace

EvalResult evaluate_expr(const Expr& e, const ProductHandle& h, const ParamScalar& q, const ParamScalar& k) {
  Evaluator ev(h, q, k);
  Value v = ev.eval(e).value;
  return {as_poly(v), std::move(ev.warnings)};
}

EvalResult evaluate_expr(const Expr& e, const CliConfig& cfg) {
  return evaluate_expr(e, cfg.handle(), cfg.q(), cfg.k());
}

}  // namespace horex
