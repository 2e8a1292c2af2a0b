#include "horex/base_ring.hpp"

#include <algorithm>

#include "horex/errors.hpp"
#include "render_detail.hpp"

namespace horex {

BasePoly::BasePoly(const ParamScalar& c) { add_term(0, c); }

BasePoly BasePoly::monomial(const ParamScalar& c, std::uint32_t m) {
  BasePoly out;
  out.add_term(m, c);
  return out;
}

void BasePoly::add_term(std::uint32_t m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::uint32_t> BasePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

ParamScalar BasePoly::coefficient(std::uint32_t m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar{} : it->second;
}

bool BasePoly::has_k() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.has_k(); });
}

BasePoly BasePoly::pow(std::uint32_t e) const {
  if (terms_.size() == 1) {
    const auto& [m, c] = *terms_.begin();
    return monomial(c.pow(e), m * e);
  }
  BasePoly result(1);
  BasePoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

BasePoly BasePoly::operator-() const {
  BasePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BasePoly& BasePoly::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

std::string BasePoly::to_string() const {
  std::vector<detail::SignedTerm> rendered;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::vector<std::string> basis;
    if (it->first != 0) basis.push_back(detail::power("y", it->first));
    rendered.push_back(detail::render_scaled(it->second, basis));
  }
  return detail::join_terms(rendered);
}

std::ostream& operator<<(std::ostream& os, const BasePoly& p) { return os << p.to_string(); }

// --- MapSpec ----------------------------------------------------------------

MapSpec MapSpec::endomorphism(BasePoly image_of_y) {
  return MapSpec(MapKind::Endomorphism, std::move(image_of_y), nullptr);
}

MapSpec MapSpec::derivation(BasePoly image_of_y, const MapSpec& twist) {
  if (twist.kind() != MapKind::Endomorphism) {
    throw WrongMapKind("the twist of a sigma-derivation must be an endomorphism");
  }
  return MapSpec(MapKind::SigmaDerivation, std::move(image_of_y), std::make_shared<const MapSpec>(twist));
}

BasePoly MapSpec::on_monomial(std::uint32_t m) const {
  if (kind_ == MapKind::Endomorphism) return image_.pow(m);
  if (m == 0 || image_.is_zero()) return {};
  // d(y^m) = sigma(y) d(y^(m-1)) + d(y) y^(m-1)
  const BasePoly sigma_y = twist_->on_monomial(1);
  BasePoly acc = image_;
  for (std::uint32_t j = 2; j <= m; ++j) acc = sigma_y * acc + image_ * BasePoly::y(j - 1);
  return acc;
}

BasePoly MapSpec::operator()(const BasePoly& p) const {
  BasePoly out;
  for (const auto& [m, c] : p.terms()) out += on_monomial(m) * c;
  return out;
}

bool MapSpec::has_k() const { return image_.has_k() || (twist_ && twist_->has_k()); }

std::string MapSpec::describe() const {
  if (kind_ == MapKind::Endomorphism) return "endomorphism y -> " + image_.to_string();
  return "sigma-derivation y -> " + image_.to_string() + " (twist y -> " + twist_->image_of_y().to_string() +
         ")";
}

BasePoly apply_endo(const MapSpec& f, const BasePoly& p) {
  if (f.kind() != MapKind::Endomorphism) throw WrongMapKind("apply_endo: map is a sigma-derivation");
  return f(p);
}

BasePoly apply_deriv(const MapSpec& d, const BasePoly& p) {
  if (d.kind() != MapKind::SigmaDerivation) throw WrongMapKind("apply_deriv: map is an endomorphism");
  return d(p);
}

CommuteResult maps_commute(const MapSpec& f, const MapSpec& g, std::uint32_t degree_bound) {
  CommuteResult result;
  result.degree_bound = degree_bound;
  for (std::uint32_t m = 0; m <= degree_bound; ++m) {
    BasePoly fg = f(g.on_monomial(m));
    BasePoly gf = g(f.on_monomial(m));
    if (fg != gf) {
      result.commute = false;
      result.witness = CommuteResult::Witness{m, std::move(fg), std::move(gf)};
      break;
    }
  }
  return result;
}

}  // namespace horex
