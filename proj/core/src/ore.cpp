#include "horex/ore.hpp"

#include <algorithm>

#include "horex/errors.hpp"
#include "render_detail.hpp"

namespace horex {

// --- OrePoly ----------------------------------------------------------------

OrePoly::OrePoly(const ParamScalar& c) { add_term({0, 0}, c); }

OrePoly::OrePoly(const BasePoly& a) {
  for (const auto& [m, c] : a.terms()) add_term({m, 0}, c);
}

OrePoly OrePoly::monomial(const ParamScalar& c, std::uint32_t m, std::uint32_t n) {
  OrePoly out;
  out.add_term({m, n}, c);
  return out;
}

OrePoly OrePoly::from_slice(const BasePoly& a, std::uint32_t n) {
  OrePoly out;
  for (const auto& [m, c] : a.terms()) out.add_term({m, n}, c);
  return out;
}

void OrePoly::add_term(Bidegree d, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar OrePoly::coefficient(std::uint32_t m, std::uint32_t n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? ParamScalar{} : it->second;
}

std::map<std::uint32_t, BasePoly> OrePoly::slices() const {
  std::map<std::uint32_t, BasePoly> out;
  for (const auto& [d, c] : terms_) out[d.n] += BasePoly::monomial(c, d.m);
  return out;
}

bool OrePoly::is_base() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.n == 0; });
}

bool OrePoly::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.has_q(); });
}

bool OrePoly::has_k() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.has_k(); });
}

bool OrePoly::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.has_t(); });
}

OrePoly OrePoly::operator-() const {
  OrePoly out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

OrePoly& OrePoly::operator*=(const ParamScalar& c) {
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

std::string OrePoly::to_string() const {
  std::vector<detail::SignedTerm> rendered;
  rendered.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::vector<std::string> basis;
    if (it->first.m != 0) basis.push_back(detail::power("y", it->first.m));
    if (it->first.n != 0) basis.push_back(detail::power("x", it->first.n));
    rendered.push_back(detail::render_scaled(it->second, basis));
  }
  return detail::join_terms(rendered);
}

std::ostream& operator<<(std::ostream& os, const OrePoly& p) { return os << p.to_string(); }

// --- presets ----------------------------------------------------------------

AlgebraPreset AlgebraPreset::make(std::string name, MapSpec sigma, MapSpec delta, MapSpec alpha,
                                  std::uint32_t commute_bound) {
  if (sigma.kind() != MapKind::Endomorphism) throw WrongMapKind(name + ": sigma must be an endomorphism");
  if (delta.kind() != MapKind::SigmaDerivation) throw WrongMapKind(name + ": delta must be a sigma-derivation");
  if (alpha.kind() != MapKind::Endomorphism) throw WrongMapKind(name + ": alpha must be an endomorphism");
  if (delta.twist()->image_of_y() != sigma.image_of_y()) {
    throw Error(name + ": delta must be twisted by sigma");
  }
  if (!maps_commute(alpha, sigma, commute_bound)) throw Error(name + ": alpha does not commute with sigma");
  if (!maps_commute(alpha, delta, commute_bound)) throw Error(name + ": alpha does not commute with delta");
  return AlgebraPreset(std::move(name), std::move(sigma), std::move(delta), std::move(alpha));
}

AlgebraPreset AlgebraPreset::untwisted() const { return AlgebraPreset(name_, sigma_, delta_, MapSpec::identity()); }

AlgebraPreset quantum_plane(const ParamScalar& q, const ParamScalar& k) {
  if (q.is_zero()) throw NonInvertible("quantum-plane: q must be nonzero");
  MapSpec sigma = MapSpec::scaling(q);
  MapSpec delta = MapSpec::zero_derivation(sigma);
  return AlgebraPreset::make("quantum-plane", std::move(sigma), std::move(delta), MapSpec::scaling(k));
}

AlgebraPreset enveloping(const ParamScalar& k) {
  return AlgebraPreset::make("enveloping", MapSpec::identity(), MapSpec::euler_derivation(), MapSpec::scaling(k));
}

AlgebraPreset preset_by_name(std::string_view name, const ParamScalar& q, const ParamScalar& k) {
  if (name == "quantum-plane") return quantum_plane(q, k);
  if (name == "enveloping") return enveloping(k);
  throw UnknownName("unknown algebra '" + std::string(name) + "' (expected quantum-plane or enveloping)");
}

// --- products ---------------------------------------------------------------

std::vector<BasePoly> pi_row(std::uint32_t m, const AlgebraPreset& preset, const BasePoly& b) {
  // pi_i^m = sigma o pi_{i-1}^{m-1} + delta o pi_i^{m-1}, starting from pi_0^0 = id.
  std::vector<BasePoly> row{b};
  for (std::uint32_t level = 1; level <= m; ++level) {
    std::vector<BasePoly> next(level + 1);
    for (std::uint32_t i = 0; i <= level; ++i) {
      if (i >= 1) next[i] += preset.sigma()(row[i - 1]);
      if (i < level && !preset.delta().is_zero_map()) next[i] += preset.delta()(row[i]);
    }
    row = std::move(next);
  }
  return row;
}

BasePoly pi(int i, std::uint32_t m, const AlgebraPreset& preset, const BasePoly& b) {
  if (i < 0 || static_cast<std::uint32_t>(i) > m) return {};
  return pi_row(m, preset, b)[static_cast<std::size_t>(i)];
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset) {
  OrePoly out;
  if (p.is_zero() || r.is_zero()) return out;
  const auto left = p.slices();
  const auto right = r.slices();
  for (const auto& [n_r, b] : right) {
    std::map<std::uint32_t, std::vector<BasePoly>> rows;
    for (const auto& [n_p, a] : left) {
      auto& row = rows[n_p];
      if (row.empty()) row = pi_row(n_p, preset, b);
      for (std::uint32_t i = 0; i <= n_p; ++i) {
        if (row[i].is_zero()) continue;
        out += OrePoly::from_slice(a * row[i], i + n_r);
      }
    }
  }
  return out;
}

OrePoly extend_alpha(const AlgebraPreset& preset, const OrePoly& p) {
  OrePoly out;
  for (const auto& [n, a] : p.slices()) out += OrePoly::from_slice(preset.alpha()(a), n);
  return out;
}

OrePoly star(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset) {
  return extend_alpha(preset, ore_mul(p, r, preset));
}

std::vector<OrePoly> monomial_grid(std::uint32_t bound) {
  std::vector<OrePoly> out;
  out.reserve(static_cast<std::size_t>(bound + 1) * (bound + 1));
  for (std::uint32_t m = 0; m <= bound; ++m) {
    for (std::uint32_t n = 0; n <= bound; ++n) out.push_back(OrePoly::monomial(1, m, n));
  }
  return out;
}

WeakUnitResult weak_unit_check(const OrePoly& e, const AlgebraPreset& preset, std::uint32_t degree_bound) {
  WeakUnitResult result;
  result.degree_bound = degree_bound;
  for (const auto& b : monomial_grid(degree_bound)) {
    OrePoly expected = extend_alpha(preset, b);
    OrePoly left = star(e, b, preset);
    if (left != expected) {
      result.passed = false;
      result.witness = WeakUnitResult::Witness{b, true, std::move(left), std::move(expected)};
      return result;
    }
    OrePoly right = star(b, e, preset);
    if (right != expected) {
      result.passed = false;
      result.witness = WeakUnitResult::Witness{b, false, std::move(right), std::move(expected)};
      return result;
    }
  }
  return result;
}

}  // namespace horex
