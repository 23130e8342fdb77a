#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulercat/errors.hpp"
#include "eulercat/matrix.hpp"
#include "eulercat/measure.hpp"

namespace eulercat {

// A finite enriched category: an ordered object list and a hom-object for
// every ordered pair, stored row-major. Composition data is not carried; the
// characteristic only reads hom-object measures.
struct EnrichedCategory {
  Enrichment enrichment = Enrichment::Set;
  std::vector<std::string> objects;
  std::vector<HomObject> hom;  // objects.size()^2 entries

  const HomObject& hom_at(std::size_t a, std::size_t b) const {
    return hom[a * objects.size() + b];
  }
  HomObject& hom_at(std::size_t a, std::size_t b) { return hom[a * objects.size() + b]; }
};

inline HomObject unit_hom(Enrichment e) {
  return e == Enrichment::Top ? point_hom() : finset_hom(1);
}

// The one-object category with unit hom.
inline EnrichedCategory unit_category(Enrichment e) {
  EnrichedCategory c;
  c.enrichment = e;
  c.objects = {"*"};
  c.hom = {unit_hom(e)};
  return c;
}

inline ValidationReport validate_enriched(const EnrichedCategory& c) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const std::size_t n = c.objects.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (c.objects[i] == c.objects[j]) note("duplicate object id '" + c.objects[i] + "'");
  if (c.hom.size() != n * n) {
    note("hom table has wrong size");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_empty(c.hom_at(i, i)))
      note("hom('" + c.objects[i] + "','" + c.objects[i] + "') is empty; identities need a home");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!admits(c.hom_at(i, j), c.enrichment))
        note("hom('" + c.objects[i] + "','" + c.objects[j] + "') is not measurable under " +
             enrichment_name(c.enrichment) + " enrichment");
  if (report.ok()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (const auto* fc = std::get_if<FinCatHom>(&c.hom_at(i, j))) {
          auto inner = validate_category(fc->cat);
          if (!inner.ok())
            note("hom('" + c.objects[i] + "','" + c.objects[j] +
                 "'): " + inner.violations.front());
        }
  }
  return report;
}

inline void require_valid(const EnrichedCategory& c) {
  auto report = validate_enriched(c);
  if (!report.ok()) throw InvalidCategory(report.violations.front());
}

// xi(a,b) = |hom(a,b)| in object order.
inline RationalMatrix similarity_matrix(const EnrichedCategory& c) {
  const std::size_t n = c.objects.size();
  RationalMatrix xi(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) xi.at(a, b) = measure(c.hom_at(a, b), c.enrichment);
  return xi;
}

struct Weighting {
  std::vector<Rational> values;  // in object order
  bool unique = true;
};

struct Coweighting {
  std::vector<Rational> values;
  bool unique = true;
};

// Column vector w with xi w = u, canonical solution; none when inconsistent.
inline std::optional<Weighting> weighting(const EnrichedCategory& c) {
  const auto xi = similarity_matrix(c);
  const RationalVector u(xi.rows(), Rational(1));
  auto sol = solve_right_system(xi, u);
  if (!sol) return std::nullopt;
  return Weighting{std::move(sol->values), sol->unique};
}

// Row vector v with v xi = u*, canonical solution; none when inconsistent.
inline std::optional<Coweighting> coweighting(const EnrichedCategory& c) {
  const auto xi = similarity_matrix(c);
  const RationalVector u(xi.rows(), Rational(1));
  auto sol = solve_left_system(xi, u);
  if (!sol) return std::nullopt;
  return Coweighting{std::move(sol->values), sol->unique};
}

// The common sum of a weighting and a coweighting; requires both to exist.
// When xi is invertible both exist and the value is the entry sum of the
// inverse, which is taken as a shortcut.
inline std::optional<Rational> euler_characteristic(const EnrichedCategory& c) {
  const auto xi = similarity_matrix(c);
  if (auto inv = invert(xi)) {
    Rational total = 0;
    for (const auto& x : inv->entries()) total += x;
    return total;
  }
  const RationalVector u(xi.rows(), Rational(1));
  const auto w = solve_right(xi, u);
  if (!w) return std::nullopt;
  if (!solve_left(xi, u)) return std::nullopt;
  Rational total = 0;
  for (const auto& x : *w) total += x;
  return total;
}

// Object set = ordered pairs, hom = tensor of the factors' homs.
inline EnrichedCategory tensor_category(const EnrichedCategory& a, const EnrichedCategory& b) {
  if (a.enrichment != b.enrichment)
    throw EnrichmentMismatch("tensor of categories with different enrichments");
  EnrichedCategory p;
  p.enrichment = a.enrichment;
  const std::size_t na = a.objects.size(), nb = b.objects.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      p.objects.push_back("(" + a.objects[i] + "," + b.objects[j] + ")");
  p.hom.resize(na * nb * na * nb, empty_hom());
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          p.hom_at(i1 * nb + j1, i2 * nb + j2) =
              tensor(a.hom_at(i1, i2), b.hom_at(j1, j2), p.enrichment);
  return p;
}

// Disjoint objects, empty cross homs.
inline EnrichedCategory coproduct_category(const EnrichedCategory& a,
                                           const EnrichedCategory& b) {
  if (a.enrichment != b.enrichment)
    throw EnrichmentMismatch("coproduct of categories with different enrichments");
  bool clash = false;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      if (x == y) clash = true;
  auto left = [&](const std::string& s) { return clash ? "0:" + s : s; };
  auto right = [&](const std::string& s) { return clash ? "1:" + s : s; };

  EnrichedCategory u;
  u.enrichment = a.enrichment;
  const std::size_t na = a.objects.size(), nb = b.objects.size();
  for (const auto& x : a.objects) u.objects.push_back(left(x));
  for (const auto& y : b.objects) u.objects.push_back(right(y));
  u.hom.resize((na + nb) * (na + nb), empty_hom());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) u.hom_at(i, j) = a.hom_at(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) u.hom_at(na + i, na + j) = b.hom_at(i, j);
  return u;
}

// Weighting transfer along an equivalence f: w_A(a) = (C(fa)/C(a)) w_B(fa),
// with C the size of the weak-equivalence class. Class sizes are explicit
// inputs; the caller certifies the result against its similarity matrix.
inline Weighting transfer_weighting(const std::map<std::string, Rational>& w_b,
                                    const std::map<std::string, std::string>& object_map,
                                    const std::map<std::string, Int>& class_size_a,
                                    const std::map<std::string, Int>& class_size_b,
                                    const std::vector<std::string>& a_objects) {
  Weighting out;
  out.unique = false;  // nothing is claimed about the solution space
  for (const auto& a : a_objects) {
    const auto fa = object_map.find(a);
    if (fa == object_map.end()) throw UnknownObject("object '" + a + "' has no image");
    const auto ca = class_size_a.find(a);
    if (ca == class_size_a.end() || ca->second <= 0)
      throw MissingClassSize("no class size for '" + a + "'");
    const auto cb = class_size_b.find(fa->second);
    if (cb == class_size_b.end() || cb->second <= 0)
      throw MissingClassSize("no class size for '" + fa->second + "'");
    const auto wb = w_b.find(fa->second);
    if (wb == w_b.end()) throw UnknownObject("no weighting value at '" + fa->second + "'");
    out.values.push_back(make_rational(cb->second, ca->second) * wb->second);
  }
  return out;
}

// The Set-enriched shadow of an explicit finite category.
inline EnrichedCategory to_enriched(const FiniteCategory& c) {
  const auto k = detail::compile(c);
  EnrichedCategory e;
  e.enrichment = Enrichment::Set;
  e.objects = c.objects;
  e.hom.resize(k.n_obj * k.n_obj, empty_hom());
  for (std::size_t a = 0; a < k.n_obj; ++a)
    for (std::size_t b = 0; b < k.n_obj; ++b)
      e.hom_at(a, b) =
          finset_hom(static_cast<long>(hom_count(k, static_cast<int>(a), static_cast<int>(b))));
  return e;
}

// Isomorphism classes of objects, via exhaustive isomorphism search. Used to
// feed class sizes to transfer_weighting.
inline std::vector<std::vector<std::string>> isomorphism_classes(const FiniteCategory& c) {
  const auto k = detail::compile(c);
  std::vector<int> cls(k.n_obj, -1);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < k.n_obj; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({c.objects[i]});
    for (std::size_t j = i + 1; j < k.n_obj; ++j) {
      if (cls[j] >= 0) continue;
      if (detail::find_iso(k, static_cast<int>(i), static_cast<int>(j)) >= 0) {
        cls[j] = cls[i];
        out[cls[i]].push_back(c.objects[j]);
      }
    }
  }
  return out;
}

// --- 2-groupoids ------------------------------------------------------------

namespace detail {

// Components of a Cat-enriched category by nonempty-hom zigzags; the relation
// must be symmetric for the component category to be a groupoid.
inline std::vector<int> enriched_components(const EnrichedCategory& c) {
  const std::size_t n = c.objects.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_empty(c.hom_at(i, j)) != is_empty(c.hom_at(j, i)))
        throw NotA2Groupoid("hom('" + c.objects[i] + "','" + c.objects[j] +
                            "') is empty in one direction only");
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y)
        if (comp[y] < 0 && !is_empty(c.hom_at(x, y))) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

// chi of a finite 2-groupoid by the closed formula: over the components [x],
// sum #2-automorphisms of an identity divided by #components of hom(x,x).
// Every hom must be a finite groupoid with a constant automorphism count.
inline Rational two_groupoid_chi(const EnrichedCategory& g) {
  if (g.enrichment != Enrichment::Cat)
    throw NotA2Groupoid("2-groupoid formula needs Cat enrichment");
  try {
    require_valid(g);
  } catch (const InvalidCategory& e) {
    throw NotA2Groupoid(e.what());
  }
  const std::size_t n = g.objects.size();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto* fc = std::get_if<FinCatHom>(&g.hom_at(i, j));
      if (!fc) continue;  // empty and finite-set homs are groupoids already
      const auto k = detail::compile(fc->cat);
      for (std::size_t m = 0; m < k.n_mor; ++m)
        if (detail::find_inverse(k, static_cast<int>(m)) < 0)
          throw NotA2Groupoid("hom('" + g.objects[i] + "','" + g.objects[j] +
                              "') is not a groupoid");
    }

  const auto comp = detail::enriched_components(g);
  Rational total = 0;
  std::vector<bool> seen;
  for (std::size_t x = 0; x < n; ++x) {
    if (static_cast<std::size_t>(comp[x]) < seen.size() && seen[comp[x]]) continue;
    if (static_cast<std::size_t>(comp[x]) >= seen.size()) seen.resize(comp[x] + 1, false);
    seen[comp[x]] = true;

    const auto& endo = g.hom_at(x, x);
    Int pi1, pi2;
    if (std::holds_alternative<FinSetHom>(endo)) {
      pi1 = std::get<FinSetHom>(endo).n;
      pi2 = 1;
    } else {
      const auto& cat = std::get<FinCatHom>(endo).cat;
      const auto k = detail::compile(cat);
      const auto classes = pi0_category(cat);
      pi1 = static_cast<long>(classes.size());
      // the 2-automorphism count must not depend on the chosen 1-morphism
      pi2 = -1;
      for (const auto& cls : classes) {
        const int rep = k.obj_index.at(cls.front());
        const Int aut = static_cast<long>(hom_count(k, rep, rep));
        if (pi2 < 0)
          pi2 = aut;
        else if (pi2 != aut)
          throw NotA2Groupoid("hom('" + g.objects[x] + "','" + g.objects[x] +
                              "') has components with different automorphism counts");
      }
    }
    total += Rational(pi2) / Rational(pi1);
  }
  return total;
}

}  // namespace eulercat
