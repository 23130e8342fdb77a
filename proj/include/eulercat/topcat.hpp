#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/enriched.hpp"

namespace eulercat {

// A finite acyclic topological category: endomorphism spaces are single
// points, and between distinct objects morphisms run in at most one
// direction. The nonempty-hom relation is then a strict partial order.
struct AcyclicTopCategory {
  std::vector<std::string> objects;
  std::vector<HomObject> hom;  // n*n, diagonal is the one-point space

  const HomObject& hom_at(std::size_t a, std::size_t b) const {
    return hom[a * objects.size() + b];
  }
  HomObject& hom_at(std::size_t a, std::size_t b) { return hom[a * objects.size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && !is_empty(hom_at(a, b)); }
};

// Cell counts of the classifying space by dimension; zero entries omitted.
using CellCensus = std::map<std::size_t, Int>;

// Builds the category from its object list and off-diagonal homs. Finite-set
// homs are promoted to discrete complexes; identities are implicit.
inline AcyclicTopCategory assemble_acyclic(
    std::vector<std::string> objects,
    const std::map<std::pair<std::string, std::string>, HomObject>& homs) {
  AcyclicTopCategory a;
  a.objects = std::move(objects);
  const std::size_t n = a.objects.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(a.objects[i], i).second)
      throw NotAcyclic("duplicate object id '" + a.objects[i] + "'");
  a.hom.assign(n * n, empty_hom());
  for (std::size_t i = 0; i < n; ++i) a.hom_at(i, i) = point_hom();
  for (const auto& [pair, h] : homs) {
    auto s = index.find(pair.first);
    auto t = index.find(pair.second);
    if (s == index.end() || t == index.end())
      throw NotAcyclic("hom references unknown object '" +
                       (s == index.end() ? pair.first : pair.second) + "'");
    if (s == t) throw NotAcyclic("endomorphism spaces are implicit single points; drop '" +
                                 pair.first + "->" + pair.second + "'");
    if (is_empty(h)) continue;
    if (std::holds_alternative<FinSetHom>(h))
      a.hom_at(s->second, t->second) = cw_hom(detail::as_cw(h).components);
    else if (std::holds_alternative<CwHom>(h))
      a.hom_at(s->second, t->second) = h;
    else
      throw NotAcyclic("hom('" + pair.first + "','" + pair.second +
                       "') must be a CW complex or a finite set");
  }
  return a;
}

inline ValidationReport validate_acyclic(const AcyclicTopCategory& a) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const std::size_t n = a.objects.size();
  if (a.hom.size() != n * n) {
    note("hom table has wrong size");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a.hom_at(i, i) != point_hom() && a.hom_at(i, i) != finset_hom(1))
      note("endomorphism space of '" + a.objects[i] + "' is not a single point");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& h = a.hom_at(i, j);
      if (!is_empty(h) && !std::holds_alternative<CwHom>(h))
        note("hom('" + a.objects[i] + "','" + a.objects[j] + "') is not a CW complex");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.less(i, j) && a.less(j, i))
        note("morphisms run both ways between '" + a.objects[i] + "' and '" + a.objects[j] +
             "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.less(i, j) && a.less(j, k) && !a.less(i, k) && i != k)
          note("composites of '" + a.objects[i] + "' < '" + a.objects[j] + "' < '" +
               a.objects[k] + "' have nowhere to land");
  return report;
}

inline void require_acyclic(const AcyclicTopCategory& a) {
  const auto report = validate_acyclic(a);
  if (!report.ok()) throw NotAcyclic(report.violations.front());
}

namespace detail {

// Depth-first enumeration of strictly increasing chains in object order.
// The visitor sees every chain of length >= 1 exactly once.
template <typename Visitor>
void for_each_chain(const AcyclicTopCategory& a, Visitor&& visit) {
  const std::size_t n = a.objects.size();
  std::vector<std::size_t> chain;
  std::function<void()> extend = [&]() {
    visit(const_cast<const std::vector<std::size_t>&>(chain));
    const std::size_t last = chain.back();
    for (std::size_t next = 0; next < n; ++next) {
      if (!a.less(last, next)) continue;
      chain.push_back(next);
      extend();
      chain.pop_back();
    }
  };
  for (std::size_t start = 0; start < n; ++start) {
    chain.assign(1, start);
    extend();
  }
}

inline std::vector<std::vector<Rational>> pairwise_chi(const AcyclicTopCategory& a) {
  const std::size_t n = a.objects.size();
  std::vector<std::vector<Rational>> chi(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) chi[i][j] = measure(a.hom_at(i, j), Enrichment::Top);
  return chi;
}

}  // namespace detail

// The alternating chain sum: over strictly increasing chains a_0 < ... < a_j,
// (-1)^j times the product of the hom characteristics along the chain.
// Singleton chains contribute +1 each.
inline Rational chain_chi(const AcyclicTopCategory& a) {
  require_acyclic(a);
  const auto chi = detail::pairwise_chi(a);
  Rational total = 0;
  detail::for_each_chain(a, [&](const std::vector<std::size_t>& chain) {
    Rational weight = (chain.size() - 1) % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) weight *= chi[chain[i]][chain[i + 1]];
    total += weight;
  });
  return total;
}

// The chain-sum coweighting: v(a) collects the signed chain weights over the
// chains ending at a. The certificate v * xi = u* is checked before returning.
inline Coweighting chain_coweighting(const AcyclicTopCategory& a) {
  require_acyclic(a);
  const auto chi = detail::pairwise_chi(a);
  const std::size_t n = a.objects.size();
  Coweighting v;
  v.values.assign(n, Rational(0));
  v.unique = true;  // the similarity matrix of an acyclic category is invertible
  detail::for_each_chain(a, [&](const std::vector<std::size_t>& chain) {
    Rational weight = (chain.size() - 1) % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) weight *= chi[chain[i]][chain[i + 1]];
    v.values[chain.back()] += weight;
  });

  RationalMatrix xi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xi.at(i, j) = chi[i][j];
  if (multiply(v.values, xi) != RationalVector(n, Rational(1)))
    throw CertificateFailed("chain coweighting does not satisfy v*xi = u*");
  return v;
}

// Cell counts of the classifying space, computed over the non-degenerate
// nerve: a chain with j arrows and a choice of one cell per hom contributes a
// cell of dimension j plus the chosen cell dimensions.
inline CellCensus nerve_cell_census(const AcyclicTopCategory& a) {
  require_acyclic(a);
  const std::size_t n = a.objects.size();

  // cell-count polynomial of each nonempty hom, coefficients by dimension
  std::vector<std::vector<std::vector<Int>>> poly(n, std::vector<std::vector<Int>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.less(i, j)) continue;
      const auto& cw = std::get<CwHom>(a.hom_at(i, j));
      std::vector<Int> p;
      for (const auto& comp : cw.components) {
        if (comp.size() > p.size()) p.resize(comp.size(), Int(0));
        for (std::size_t d = 0; d < comp.size(); ++d) p[d] += comp[d];
      }
      poly[i][j] = std::move(p);
    }

  CellCensus census;
  std::vector<std::size_t> chain;
  std::vector<Int> product{Int(1)};
  std::function<void()> extend = [&]() {
    const std::size_t shift = chain.size() - 1;  // the number of arrows
    for (std::size_t d = 0; d < product.size(); ++d)
      if (product[d] != 0) census[shift + d] += product[d];
    const std::size_t last = chain.back();
    for (std::size_t next = 0; next < n; ++next) {
      if (!a.less(last, next)) continue;
      const auto saved = product;
      const auto& q = poly[last][next];
      std::vector<Int> convolved(product.size() + q.size() - 1, Int(0));
      for (std::size_t i = 0; i < product.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) convolved[i + j] += product[i] * q[j];
      product = std::move(convolved);
      chain.push_back(next);
      extend();
      chain.pop_back();
      product = saved;
    }
  };
  for (std::size_t start = 0; start < n; ++start) {
    chain.assign(1, start);
    product.assign(1, Int(1));
    extend();
  }
  return census;
}

inline Rational census_alternating_sum(const CellCensus& census) {
  Rational total = 0;
  for (const auto& [dim, count] : census) total += (dim % 2 == 0 ? 1 : -1) * Rational(count);
  return total;
}

// chi of the classifying space: the alternating sum of the cell census.
inline Rational classifying_chi(const AcyclicTopCategory& a) {
  return census_alternating_sum(nerve_cell_census(a));
}

inline EnrichedCategory to_enriched(const AcyclicTopCategory& a) {
  require_acyclic(a);
  EnrichedCategory e;
  e.enrichment = Enrichment::Top;
  e.objects = a.objects;
  e.hom = a.hom;
  for (std::size_t i = 0; i < a.objects.size(); ++i) e.hom_at(i, i) = point_hom();
  return e;
}

}  // namespace eulercat
