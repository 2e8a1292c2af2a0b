#include "horex/deformation.hpp"

#include <vector>

#include "horex/errors.hpp"
#include "render_detail.hpp"

namespace horex {

namespace {

void require_series_coefficient(const OrePoly& p) {
  if (p.has_k()) {
    throw UnsubstitutedParameter("series coefficients must be k-free (substitute k = 1 + t first): " +
                                 p.to_string());
  }
  if (p.has_t()) throw UnsubstitutedParameter("series coefficients must not contain t: " + p.to_string());
}

std::uint32_t common_order(const SeriesOrePoly& a, const SeriesOrePoly& b) {
  if (a.order() != b.order()) {
    throw TruncationMismatch("series orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) +
                             " cannot be combined");
  }
  return a.order();
}

}  // namespace

// --- SeriesOrePoly ----------------------------------------------------------

SeriesOrePoly::SeriesOrePoly(const OrePoly& p, std::uint32_t order) : order_(order) { add_layer(0, p); }

SeriesOrePoly SeriesOrePoly::from_layers(Layers layers, std::uint32_t order) {
  SeriesOrePoly out(order);
  for (const auto& [i, p] : layers) out.add_layer(i, p);
  return out;
}

void SeriesOrePoly::add_layer(std::uint32_t i, const OrePoly& p) {
  if (i > order_ || p.is_zero()) return;
  require_series_coefficient(p);
  auto [it, inserted] = layers_.try_emplace(i, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) layers_.erase(it);
  }
}

OrePoly SeriesOrePoly::layer(std::uint32_t i) const {
  auto it = layers_.find(i);
  return it == layers_.end() ? OrePoly{} : it->second;
}

SeriesOrePoly SeriesOrePoly::truncated(std::uint32_t order) const {
  SeriesOrePoly out(std::min(order, order_));
  for (const auto& [i, p] : layers_) out.add_layer(i, p);
  return out;
}

SeriesOrePoly SeriesOrePoly::operator-() const {
  SeriesOrePoly out = *this;
  for (auto& [i, p] : out.layers_) p = -p;
  return out;
}

SeriesOrePoly& SeriesOrePoly::operator+=(const SeriesOrePoly& o) {
  common_order(*this, o);
  for (const auto& [i, p] : o.layers_) add_layer(i, p);
  return *this;
}

SeriesOrePoly& SeriesOrePoly::operator-=(const SeriesOrePoly& o) { return *this += -o; }

SeriesOrePoly operator*(const ParamScalar& c, const SeriesOrePoly& s) {
  if (c.has_k()) throw UnsubstitutedParameter("series weights must be k-free: " + c.to_string());
  SeriesOrePoly out(s.order());
  for (const auto& [mono, coeff] : c.terms()) {
    const ParamScalar weight = ParamScalar::monomial(coeff, {mono.q, 0, 0});
    for (const auto& [i, p] : s.layers()) out.add_layer(i + mono.t, p * weight);
  }
  return out;
}

std::string SeriesOrePoly::to_string() const {
  std::vector<detail::SignedTerm> rendered;
  for (const auto& [i, p] : layers_) {
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      std::vector<std::string> basis;
      if (it->first.m != 0) basis.push_back(detail::power("y", it->first.m));
      if (it->first.n != 0) basis.push_back(detail::power("x", it->first.n));
      if (i != 0) basis.push_back(detail::power("t", i));
      rendered.push_back(detail::render_scaled(it->second, basis));
    }
  }
  return detail::join_terms(rendered);
}

std::ostream& operator<<(std::ostream& os, const SeriesOrePoly& s) { return os << s.to_string(); }

// --- alpha_t ----------------------------------------------------------------

OrePoly alpha_layer(std::uint32_t i, const OrePoly& p) {
  OrePoly out;
  for (const auto& [d, c] : p.terms()) {
    if (i > d.m) continue;
    out += OrePoly::monomial(c * ParamScalar(Rational(binomial(d.m, i), 1)), d.m, d.n);
  }
  return out;
}

SeriesOrePoly alpha_t(const OrePoly& p, std::uint32_t order) { return alpha_t(SeriesOrePoly(p, order)); }

SeriesOrePoly alpha_t(const SeriesOrePoly& p) {
  SeriesOrePoly::Layers layers;
  for (const auto& [j, pj] : p.layers()) {
    for (std::uint32_t i = 0; i + j <= p.order(); ++i) {
      OrePoly term = alpha_layer(i, pj);
      if (term.is_zero()) break;  // binom(m, i) vanishes for every i past the top y-degree
      layers[i + j] += term;
    }
  }
  return SeriesOrePoly::from_layers(std::move(layers), p.order());
}

// --- deformed products ------------------------------------------------------

DeformedStructure::DeformedStructure(const AlgebraPreset& preset, std::uint32_t order)
    : base_(preset.untwisted()), order_(order) {
  if (preset.sigma().has_k() || preset.delta().has_k()) {
    throw UnsubstitutedParameter("deformation requires sigma and delta free of k");
  }
}

SeriesOrePoly DeformedStructure::lift(const OrePoly& p) const { return SeriesOrePoly(p, order_); }

SeriesOrePoly DeformedStructure::product_0(const SeriesOrePoly& p, const SeriesOrePoly& r) const {
  const std::uint32_t order = common_order(p, r);
  SeriesOrePoly::Layers layers;
  for (const auto& [j, pj] : p.layers()) {
    for (const auto& [s, rs] : r.layers()) {
      if (j + s > order) break;
      layers[j + s] += ore_mul(pj, rs, base_);
    }
  }
  return SeriesOrePoly::from_layers(std::move(layers), order);
}

SeriesOrePoly product_t(const SeriesOrePoly& p, const SeriesOrePoly& r, const DeformedStructure& d) {
  return alpha_t(d.product_0(p, r));
}

SeriesOrePoly bracket_t(const SeriesOrePoly& p, const SeriesOrePoly& r, const DeformedStructure& d) {
  return product_t(p, r, d) - product_t(r, p, d);
}

SeriesOrePoly series_from_star(const OrePoly& p, const OrePoly& r, const AlgebraPreset& preset,
                               std::uint32_t order) {
  SeriesOrePoly::Layers layers;
  const OrePoly product = star(p, r, preset);
  for (const auto& [d, c] : product.terms()) {
    const ParamScalar in_t = substitute_k(c, order);
    for (const auto& [mono, coeff] : in_t.terms()) {
      layers[mono.t] += OrePoly::monomial(ParamScalar::monomial(coeff, {mono.q, 0, 0}), d.m, d.n);
    }
  }
  return SeriesOrePoly::from_layers(std::move(layers), order);
}

// --- checks -----------------------------------------------------------------

namespace {

constexpr std::string_view kDeformationNames[] = {"hom-assoc-deform", "hom-lie-deform", "bridge"};

using SeriesGrid = std::vector<SeriesOrePoly>;
using SeriesTable = std::vector<std::vector<SeriesOrePoly>>;

CheckWitness series_witness(std::vector<std::string> inputs, const SeriesOrePoly& lhs, const SeriesOrePoly& rhs) {
  return {std::move(inputs), lhs.to_string(), rhs.to_string(), (lhs - rhs).to_string()};
}

template <typename Op>
SeriesTable series_table(const SeriesGrid& g, Op&& op) {
  SeriesTable out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i].reserve(g.size());
    for (const auto& b : g) out[i].push_back(op(g[i], b));
  }
  return out;
}

}  // namespace

std::string_view to_string(DeformationCheck check) { return kDeformationNames[static_cast<int>(check)]; }

DeformationCheck parse_deformation_check(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kDeformationNames)); ++i) {
    if (kDeformationNames[i] == name) return static_cast<DeformationCheck>(i);
  }
  throw UnknownName("unknown deformation check '" + std::string(name) + "'");
}

bool is_deformation_check(std::string_view name) {
  for (auto n : kDeformationNames) {
    if (n == name) return true;
  }
  return false;
}

CheckReport check_deformation(const AlgebraPreset& preset, DeformationCheck which, std::uint32_t bounds,
                              std::uint32_t order) {
  CheckReport report;
  report.check = std::string(to_string(which));
  report.preset = preset.name();
  report.mode = "deformed";
  report.bounds = bounds;
  report.order = order;

  const DeformedStructure d(preset, order);
  const std::vector<OrePoly> monomials = monomial_grid(bounds);
  SeriesGrid grid;
  grid.reserve(monomials.size());
  for (const auto& m : monomials) grid.push_back(d.lift(m));
  auto name = [&monomials](std::size_t i) { return monomials[i].to_string(); };
  auto prod = [&d](const SeriesOrePoly& a, const SeriesOrePoly& b) { return product_t(a, b, d); };
  auto br = [&d](const SeriesOrePoly& a, const SeriesOrePoly& b) { return bracket_t(a, b, d); };

  std::optional<CheckWitness> witness;
  auto fail_if = [&witness](std::vector<std::string> inputs, const SeriesOrePoly& lhs, const SeriesOrePoly& rhs) {
    if (lhs == rhs) return false;
    witness = series_witness(std::move(inputs), lhs, rhs);
    return true;
  };

  const std::size_t size = grid.size();
  switch (which) {
    case DeformationCheck::Bridge: {
      for (std::size_t a = 0; a < size && !witness; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
          if (fail_if({name(a), name(b)}, prod(grid[a], grid[b]),
                      series_from_star(monomials[a], monomials[b], preset, order))) {
            break;
          }
        }
      }
      break;
    }
    case DeformationCheck::HomAssocDeform: {
      SeriesGrid alpha;
      for (const auto& g : grid) alpha.push_back(alpha_t(g));
      const SeriesTable p = series_table(grid, prod);
      for (std::size_t a = 0; a < size && !witness; ++a) {
        for (std::size_t b = 0; b < size && !witness; ++b) {
          for (std::size_t c = 0; c < size; ++c) {
            if (fail_if({name(a), name(b), name(c)}, prod(alpha[a], p[b][c]), prod(p[a][b], alpha[c]))) break;
          }
        }
      }
      break;
    }
    case DeformationCheck::HomLieDeform: {
      SeriesGrid alpha;
      for (const auto& g : grid) alpha.push_back(alpha_t(g));
      const SeriesTable bt = series_table(grid, br);
      const SeriesOrePoly zero(order);
      const ParamScalar t = ParamScalar::t();
      // Alternativity and anti-commutativity.
      for (std::size_t a = 0; a < size && !witness; ++a) {
        if (fail_if({name(a), name(a)}, bt[a][a], zero)) break;
        for (std::size_t b = 0; b < size; ++b) {
          const SeriesOrePoly sum = grid[a] + grid[b];
          if (fail_if({name(a), name(b)}, bt[a][b], -bt[b][a]) ||
              fail_if({name(a) + " + " + name(b), name(a) + " + " + name(b)}, br(sum, sum), zero)) {
            break;
          }
        }
      }
      // Bilinearity over R[[t]] and the hom-Jacobi identity.
      for (std::size_t a = 0; a < size && !witness; ++a) {
        for (std::size_t b = 0; b < size && !witness; ++b) {
          for (std::size_t c = 0; c < size; ++c) {
            const SeriesOrePoly left = grid[a] + t * grid[b];
            const SeriesOrePoly right = grid[b] + t * grid[c];
            if (fail_if({name(a) + " + t*" + name(b), name(c)}, br(left, grid[c]), bt[a][c] + t * bt[b][c]) ||
                fail_if({name(a), name(b) + " + t*" + name(c)}, br(grid[a], right), bt[a][b] + t * bt[a][c])) {
              break;
            }
            const SeriesOrePoly jacobi =
                br(alpha[a], bt[b][c]) + br(alpha[c], bt[a][b]) + br(alpha[b], bt[c][a]);
            if (fail_if({name(a), name(b), name(c)}, jacobi, zero)) break;
          }
        }
      }
      break;
    }
  }
  report.passed = !witness;
  report.witness = std::move(witness);
  return report;
}

}  // namespace horex
