#pragma once

#include <variant>
#include <vector>

#include "eulercat/errors.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

// Cell counts of a connected finite CW complex, indexed by dimension.
// Trailing zeros are trimmed; a component must declare at least one 0-cell.
using CellVector = std::vector<Int>;

struct EmptyHom {
  friend bool operator==(const EmptyHom&, const EmptyHom&) = default;
};
struct FinSetHom {
  Int n;
  friend bool operator==(const FinSetHom&, const FinSetHom&) = default;
};
struct CwHom {
  std::vector<CellVector> components;
  friend bool operator==(const CwHom&, const CwHom&) = default;
};
struct FinCatHom {
  FiniteCategory cat;
  friend bool operator==(const FinCatHom&, const FinCatHom&) = default;
};

// A finite description of an object of the enriching category: the initial
// object, a finite set, a CW complex listed by connected components, or an
// embedded finite category.
using HomObject = std::variant<EmptyHom, FinSetHom, CwHom, FinCatHom>;

inline HomObject empty_hom() { return EmptyHom{}; }

inline HomObject finset_hom(Int n) {
  if (n < 0) throw InvalidHomObject("negative cardinality");
  if (n == 0) return EmptyHom{};
  return FinSetHom{std::move(n)};
}

inline HomObject cw_hom(std::vector<CellVector> components) {
  for (auto& comp : components) {
    while (!comp.empty() && comp.back() == 0) comp.pop_back();
    if (comp.empty() || comp[0] < 1)
      throw InvalidHomObject("CW component must declare at least one 0-cell");
    for (const auto& count : comp)
      if (count < 0) throw InvalidHomObject("negative cell count");
  }
  if (components.empty()) return EmptyHom{};
  return CwHom{std::move(components)};
}

inline HomObject fincat_hom(FiniteCategory cat) {
  if (cat.objects.empty()) return EmptyHom{};
  return FinCatHom{std::move(cat)};
}

inline HomObject point_hom() { return cw_hom({{Int(1)}}); }

inline bool is_empty(const HomObject& h) { return std::holds_alternative<EmptyHom>(h); }

// Number of connected components.
inline Int pi0_count(const HomObject& h) {
  return std::visit(
      [](const auto& v) -> Int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EmptyHom>) return 0;
        if constexpr (std::is_same_v<T, FinSetHom>) return v.n;
        if constexpr (std::is_same_v<T, CwHom>) return static_cast<long>(v.components.size());
        if constexpr (std::is_same_v<T, FinCatHom>)
          return static_cast<long>(pi0_category(v.cat).size());
      },
      h);
}

}  // namespace eulercat
