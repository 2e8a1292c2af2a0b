#include "horex/hom_structures.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "horex/errors.hpp"

namespace horex {

std::string_view to_string(ProductMode mode) { return mode == ProductMode::Assoc ? "assoc" : "star"; }

ProductMode parse_product_mode(std::string_view name) {
  if (name == "assoc") return ProductMode::Assoc;
  if (name == "star") return ProductMode::Star;
  throw UnknownName("unknown product mode '" + std::string(name) + "' (expected assoc or star)");
}

OrePoly ProductHandle::mul(const OrePoly& a, const OrePoly& b) const {
  return mode_ == ProductMode::Assoc ? ore_mul(a, b, preset_) : star(a, b, preset_);
}

OrePoly associator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h) {
  return h.mul(a, h.mul(b, c)) - h.mul(h.mul(a, b), c);
}

OrePoly hom_associator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h) {
  return h.mul(h.alpha(a), h.mul(b, c)) - h.mul(h.mul(a, b), h.alpha(c));
}

OrePoly bracket(const OrePoly& a, const OrePoly& b, const ProductHandle& h) { return h.mul(a, b) - h.mul(b, a); }

OrePoly hom_jacobiator(const OrePoly& a, const OrePoly& b, const OrePoly& c, const ProductHandle& h) {
  return bracket(h.alpha(a), bracket(b, c, h), h) + bracket(h.alpha(c), bracket(a, b, h), h) +
         bracket(h.alpha(b), bracket(c, a, h), h);
}

// --- reports ----------------------------------------------------------------

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["preset"] = preset;
  j["mode"] = mode;
  j["bounds"] = bounds;
  if (order) j["order"] = *order;
  j["passed"] = passed;
  if (witness) {
    j["witness"] = {{"inputs", witness->inputs},
                    {"lhs", witness->lhs},
                    {"rhs", witness->rhs},
                    {"difference", witness->difference}};
  }
  return j.dump();
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check << " [" << preset << ", " << mode << ", m,n <= " << bounds;
  if (order) os << ", order " << *order;
  os << "]: " << (passed ? "passed" : "FAILED") << '\n';
  if (witness) {
    os << "  inputs:";
    for (std::size_t i = 0; i < witness->inputs.size(); ++i) os << (i == 0 ? " " : ", ") << witness->inputs[i];
    os << "\n  lhs: " << witness->lhs << "\n  rhs: " << witness->rhs << "\n  difference: " << witness->difference
       << '\n';
  }
  return os.str();
}

// --- certification ----------------------------------------------------------

namespace {

constexpr std::string_view kCheckNames[] = {"hom-assoc", "hom-jacobi", "assoc", "anti-comm", "weak-unit",
                                            "alpha-mult"};

using Grid = std::vector<OrePoly>;
using Table = std::vector<std::vector<OrePoly>>;

Table pair_table(const Grid& grid, const std::function<OrePoly(const OrePoly&, const OrePoly&)>& op) {
  Table out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i].reserve(grid.size());
    for (const auto& b : grid) out[i].push_back(op(grid[i], b));
  }
  return out;
}

CheckWitness make_witness(std::vector<std::string> inputs, const OrePoly& lhs, const OrePoly& rhs) {
  return {std::move(inputs), lhs.to_string(), rhs.to_string(), (lhs - rhs).to_string()};
}

// Runs `test` over all triples in lexicographic order and stops at the first failure.
template <typename Test>
std::optional<CheckWitness> over_triples(const Grid& g, Test&& test) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t c = 0; c < g.size(); ++c) {
        auto [lhs, rhs] = test(a, b, c);
        if (lhs != rhs) return make_witness({g[a].to_string(), g[b].to_string(), g[c].to_string()}, lhs, rhs);
      }
    }
  }
  return std::nullopt;
}

template <typename Test>
std::optional<CheckWitness> over_pairs(const Grid& g, Test&& test) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      auto [lhs, rhs] = test(a, b);
      if (lhs != rhs) return make_witness({g[a].to_string(), g[b].to_string()}, lhs, rhs);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Check check) { return kCheckNames[static_cast<int>(check)]; }

Check parse_check(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kCheckNames)); ++i) {
    if (kCheckNames[i] == name) return static_cast<Check>(i);
  }
  throw UnknownName("unknown check '" + std::string(name) + "'");
}

CheckReport certify(Check check, const ProductHandle& h, std::uint32_t bounds, const OrePoly& unit) {
  CheckReport report;
  report.check = std::string(to_string(check));
  report.preset = h.preset().name();
  report.mode = std::string(to_string(h.mode()));
  report.bounds = bounds;

  const Grid grid = monomial_grid(bounds);
  Grid alpha;
  alpha.reserve(grid.size());
  for (const auto& g : grid) alpha.push_back(h.alpha(g));
  auto mul = [&h](const OrePoly& a, const OrePoly& b) { return h.mul(a, b); };

  std::optional<CheckWitness> witness;
  switch (check) {
    case Check::Assoc: {
      const Table prod = pair_table(grid, mul);
      witness = over_triples(grid, [&](std::size_t a, std::size_t b, std::size_t c) {
        return std::pair{h.mul(grid[a], prod[b][c]), h.mul(prod[a][b], grid[c])};
      });
      break;
    }
    case Check::HomAssoc: {
      const Table prod = pair_table(grid, mul);
      witness = over_triples(grid, [&](std::size_t a, std::size_t b, std::size_t c) {
        return std::pair{h.mul(alpha[a], prod[b][c]), h.mul(prod[a][b], alpha[c])};
      });
      break;
    }
    case Check::HomJacobi: {
      const Table br = pair_table(grid, [&h](const OrePoly& a, const OrePoly& b) { return bracket(a, b, h); });
      witness = over_triples(grid, [&](std::size_t a, std::size_t b, std::size_t c) {
        OrePoly sum = bracket(alpha[a], br[b][c], h) + bracket(alpha[c], br[a][b], h) +
                      bracket(alpha[b], br[c][a], h);
        return std::pair{std::move(sum), OrePoly{}};
      });
      break;
    }
    case Check::AntiComm: {
      const Table br = pair_table(grid, [&h](const OrePoly& a, const OrePoly& b) { return bracket(a, b, h); });
      witness = over_pairs(grid, [&](std::size_t a, std::size_t b) { return std::pair{br[a][b], -br[b][a]}; });
      break;
    }
    case Check::AlphaMult: {
      witness = over_pairs(grid, [&](std::size_t a, std::size_t b) {
        return std::pair{h.alpha(h.mul(grid[a], grid[b])), h.mul(alpha[a], alpha[b])};
      });
      break;
    }
    case Check::WeakUnit: {
      for (std::size_t b = 0; b < grid.size() && !witness; ++b) {
        OrePoly left = h.mul(unit, grid[b]);
        if (left != alpha[b]) {
          witness = make_witness({unit.to_string(), grid[b].to_string()}, left, alpha[b]);
          break;
        }
        OrePoly right = h.mul(grid[b], unit);
        if (right != alpha[b]) witness = make_witness({grid[b].to_string(), unit.to_string()}, right, alpha[b]);
      }
      break;
    }
  }
  report.passed = !witness;
  report.witness = std::move(witness);
  return report;
}

CheckReport certify(std::string_view check, const ProductHandle& h, std::uint32_t bounds, const OrePoly& unit) {
  return certify(parse_check(check), h, bounds, unit);
}

}  // namespace horex
