#pragma once

#include <string>

#include "eulercat/hom.hpp"

namespace eulercat {

// The enriching category, which fixes the measure: set cardinality under Set,
// the recursive finite-category characteristic under Cat, and the alternating
// cell-count sum under Top. Each sends the unit to 1 and the initial object
// to 0, and turns tensor into product and coproduct into sum.
enum class Enrichment { Set, Cat, Top };

inline const char* enrichment_name(Enrichment e) {
  switch (e) {
    case Enrichment::Set: return "set";
    case Enrichment::Cat: return "cat";
    case Enrichment::Top: return "top";
  }
  return "?";
}

inline bool admits(const HomObject& h, Enrichment e) {
  return std::visit(
      [e](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EmptyHom>) return true;
        if constexpr (std::is_same_v<T, FinSetHom>) return true;  // discrete everywhere
        if constexpr (std::is_same_v<T, CwHom>) return e == Enrichment::Top;
        if constexpr (std::is_same_v<T, FinCatHom>) return e == Enrichment::Cat;
      },
      h);
}

inline Rational alternating_cell_sum(const CwHom& cw) {
  Rational total = 0;
  for (const auto& comp : cw.components) {
    Rational sign = 1;
    for (const auto& count : comp) {
      total += sign * Rational(count);
      sign = -sign;
    }
  }
  return total;
}

inline Rational measure(const HomObject& h, Enrichment e) {
  if (!admits(h, e))
    throw VariantNotMeasurable(std::string("hom-object variant not measurable under ") +
                               enrichment_name(e) + " enrichment");
  return std::visit(
      [e](const auto& v) -> Rational {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EmptyHom>) return 0;
        if constexpr (std::is_same_v<T, FinSetHom>) return Rational(v.n);
        if constexpr (std::is_same_v<T, CwHom>) return alternating_cell_sum(v);
        if constexpr (std::is_same_v<T, FinCatHom>) {
          (void)e;
          auto chi = leinster_chi(v.cat);
          if (!chi)
            throw ChiUndefined("embedded finite category admits no Euler characteristic");
          return *chi;
        }
      },
      h);
}

namespace detail {

inline CwHom as_cw(const HomObject& h) {
  if (const auto* cw = std::get_if<CwHom>(&h)) return *cw;
  const auto& fs = std::get<FinSetHom>(h);
  // a finite set as a discrete complex: one point component per element
  if (fs.n > 1000000) throw InvalidHomObject("finite set too large to promote to a complex");
  CwHom out;
  for (Int i = 0; i < fs.n; ++i) out.components.push_back({Int(1)});
  return out;
}

inline FiniteCategory as_fincat(const HomObject& h) {
  if (const auto* fc = std::get_if<FinCatHom>(&h)) return fc->cat;
  const auto& fs = std::get<FinSetHom>(h);
  if (fs.n > 1000000) throw InvalidHomObject("finite set too large to promote to a category");
  return discrete_category(static_cast<std::size_t>(fs.n));
}

inline CellVector convolve(const CellVector& a, const CellVector& b) {
  CellVector out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace detail

// Tensor product of hom-objects; all three enrichments are cartesian, so this
// is the product. Mixed finite sets are promoted to discrete objects.
inline HomObject tensor(const HomObject& a, const HomObject& b, Enrichment e) {
  if (!admits(a, e) || !admits(b, e))
    throw VariantNotMeasurable(std::string("hom-object variant not measurable under ") +
                               enrichment_name(e) + " enrichment");
  if (is_empty(a) || is_empty(b)) return EmptyHom{};
  switch (e) {
    case Enrichment::Set:
      return finset_hom(std::get<FinSetHom>(a).n * std::get<FinSetHom>(b).n);
    case Enrichment::Top: {
      if (std::holds_alternative<FinSetHom>(a) && std::holds_alternative<FinSetHom>(b))
        return finset_hom(std::get<FinSetHom>(a).n * std::get<FinSetHom>(b).n);
      const auto ca = detail::as_cw(a);
      const auto cb = detail::as_cw(b);
      std::vector<CellVector> comps;
      for (const auto& x : ca.components)
        for (const auto& y : cb.components) comps.push_back(detail::convolve(x, y));
      return cw_hom(std::move(comps));
    }
    case Enrichment::Cat: {
      if (std::holds_alternative<FinSetHom>(a) && std::holds_alternative<FinSetHom>(b))
        return finset_hom(std::get<FinSetHom>(a).n * std::get<FinSetHom>(b).n);
      return fincat_hom(product_category(detail::as_fincat(a), detail::as_fincat(b)));
    }
  }
  throw VariantNotMeasurable("unknown enrichment");
}

// Coproduct of hom-objects of the same variant family; the initial object is
// the unit.
inline HomObject coproduct(const HomObject& a, const HomObject& b) {
  if (is_empty(a)) return b;
  if (is_empty(b)) return a;
  if (a.index() != b.index())
    throw MixedVariants("coproduct of hom-objects from different families");
  if (const auto* fa = std::get_if<FinSetHom>(&a))
    return finset_hom(fa->n + std::get<FinSetHom>(b).n);
  if (const auto* ca = std::get_if<CwHom>(&a)) {
    auto comps = ca->components;
    const auto& cb = std::get<CwHom>(b).components;
    comps.insert(comps.end(), cb.begin(), cb.end());
    return cw_hom(std::move(comps));
  }
  return fincat_hom(
      disjoint_union_category(std::get<FinCatHom>(a).cat, std::get<FinCatHom>(b).cat));
}

}  // namespace eulercat
