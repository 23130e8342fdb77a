#pragma once

// Shared fixtures and randomized-instance builders for the test suites.
// Everything here is deterministic given the caller's RNG.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "eulercat/enriched.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/measure.hpp"
#include "eulercat/topcat.hpp"

namespace testsupport {

using namespace eulercat;

// --- finite groups as multiplication tables --------------------------------

struct GroupTable {
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[a][b], identity is 0
  std::size_t order() const { return mul.size(); }
};

inline GroupTable cyclic_group(int n) {
  GroupTable g;
  g.name = "Z" + std::to_string(n);
  g.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

inline GroupTable symmetric_group_3() {
  // permutations of {0,1,2}; element 0 is the identity
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  GroupTable g;
  g.name = "S3";
  g.mul.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      for (int c = 0; c < 6; ++c)
        if (perms[c] == ab) g.mul[a][b] = c;
    }
  return g;
}

// --- category builders ------------------------------------------------------

// Connected groupoid with k mutually isomorphic objects and Aut = G:
// one morphism (i, j, a) per object pair and group element.
inline FiniteCategory torsor_groupoid(const std::string& prefix, const GroupTable& g,
                                      std::size_t k) {
  FiniteCategory c;
  auto obj = [&](std::size_t i) { return prefix + "o" + std::to_string(i); };
  auto mor = [&](std::size_t i, std::size_t j, int a) {
    return prefix + "m" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(a);
  };
  for (std::size_t i = 0; i < k; ++i) c.objects.push_back(obj(i));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (int a = 0; a < static_cast<int>(g.order()); ++a)
        c.morphisms.push_back({mor(i, j, a), obj(i), obj(j)});
  for (std::size_t i = 0; i < k; ++i) c.identity[obj(i)] = mor(i, i, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (int a = 0; a < static_cast<int>(g.order()); ++a)
          for (int b = 0; b < static_cast<int>(g.order()); ++b)
            c.composition[{mor(j, l, b), mor(i, j, a)}] = mor(i, l, g.mul[b][a]);
  return c;
}

inline FiniteCategory one_object_group(const std::string& prefix, const GroupTable& g) {
  return torsor_groupoid(prefix, g, 1);
}

inline FiniteCategory symmetric_group_3_category() {
  return one_object_group("s3", symmetric_group_3());
}

inline FiniteCategory indiscrete_category(std::size_t k, const std::string& prefix = "i") {
  return torsor_groupoid(prefix, cyclic_group(1), k);
}

// Poset as a category: one morphism i -> j whenever leq[i][j].
inline FiniteCategory poset_category(const std::vector<std::string>& objects,
                                     const std::vector<std::vector<bool>>& leq) {
  FiniteCategory c;
  c.objects = objects;
  const std::size_t n = objects.size();
  auto mor = [&](std::size_t i, std::size_t j) {
    return "le" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) c.morphisms.push_back({mor(i, j), objects[i], objects[j]});
  for (std::size_t i = 0; i < n; ++i) c.identity[objects[i]] = mor(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (leq[i][j] && leq[j][l]) c.composition[{mor(j, l), mor(i, j)}] = mor(i, l);
  return c;
}

inline FiniteCategory chain_poset(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("p" + std::to_string(i));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return poset_category(objects, leq);
}

inline FiniteCategory ordinal_two() { return chain_poset(2); }

// One-object monoid on {t0..tk} with saturating addition; not a groupoid for k >= 1.
inline FiniteCategory truncated_addition_monoid(std::size_t k) {
  FiniteCategory c;
  c.objects = {"*"};
  auto mor = [](std::size_t i) { return "t" + std::to_string(i); };
  for (std::size_t i = 0; i <= k; ++i) c.morphisms.push_back({mor(i), "*", "*"});
  c.identity["*"] = mor(0);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      c.composition[{mor(i), mor(j)}] = mor(std::min(i + j, k));
  return c;
}

// Action groupoid of G acting on {0..points-1}; act[a][x] = a.x must be an action.
inline FiniteCategory action_groupoid(const GroupTable& g,
                                      const std::vector<std::vector<int>>& act,
                                      std::size_t points) {
  FiniteCategory c;
  auto obj = [](std::size_t x) { return "x" + std::to_string(x); };
  auto mor = [](std::size_t x, int a) {
    return "a" + std::to_string(x) + "_" + std::to_string(a);
  };
  for (std::size_t x = 0; x < points; ++x) c.objects.push_back(obj(x));
  for (std::size_t x = 0; x < points; ++x)
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
      c.morphisms.push_back({mor(x, a), obj(x), obj(act[a][x])});
  for (std::size_t x = 0; x < points; ++x) c.identity[obj(x)] = mor(x, 0);
  for (std::size_t x = 0; x < points; ++x)
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
      for (int b = 0; b < static_cast<int>(g.order()); ++b)
        c.composition[{mor(act[a][x], b), mor(x, a)}] = mor(x, g.mul[b][a]);
  return c;
}

// Functor from the action groupoid to G as a one-object groupoid.
inline Functor action_quotient_functor(const GroupTable& g,
                                       const std::vector<std::vector<int>>& act,
                                       std::size_t points) {
  Functor p;
  p.source = action_groupoid(g, act, points);
  p.target = one_object_group("g", g);
  for (std::size_t x = 0; x < points; ++x) p.object_map["x" + std::to_string(x)] = "go0";
  for (std::size_t x = 0; x < points; ++x)
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
      p.morphism_map["a" + std::to_string(x) + "_" + std::to_string(a)] =
          "gm0_0_" + std::to_string(a);
  return p;
}

// Projection B x F -> B.
inline Functor projection_functor(const FiniteCategory& b, const FiniteCategory& f) {
  Functor p;
  p.source = product_category(b, f);
  p.target = b;
  for (const auto& x : b.objects)
    for (const auto& y : f.objects) p.object_map["(" + x + "," + y + ")"] = x;
  for (const auto& m : b.morphisms)
    for (const auto& n : f.morphisms) p.morphism_map["(" + m.id + "," + n.id + ")"] = m.id;
  return p;
}

inline Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  f.source = c;
  f.target = c;
  for (const auto& o : c.objects) f.object_map[o] = o;
  for (const auto& m : c.morphisms) f.morphism_map[m.id] = m.id;
  return f;
}

// The doubling equivalence: C -> C x indiscrete(2), x -> (x, o0). Every object
// acquires a fresh isomorphic copy, so the inclusion is an equivalence.
inline Functor doubling_inclusion(const FiniteCategory& c) {
  const auto two = indiscrete_category(2, "d");
  Functor f;
  f.source = c;
  f.target = product_category(c, two);
  for (const auto& o : c.objects) f.object_map[o] = "(" + o + ",do0)";
  for (const auto& m : c.morphisms) f.morphism_map[m.id] = "(" + m.id + ",dm0_0_0)";
  return f;
}

// The projection back: C x indiscrete(2) -> C, a DK-equivalence.
inline Functor doubling_projection(const FiniteCategory& c) {
  const auto two = indiscrete_category(2, "d");
  Functor f;
  f.source = product_category(c, two);
  f.target = c;
  for (const auto& o : c.objects)
    for (const auto& t : two.objects) f.object_map["(" + o + "," + t + ")"] = o;
  for (const auto& m : c.morphisms)
    for (const auto& n : two.morphisms) f.morphism_map["(" + m.id + "," + n.id + ")"] = m.id;
  return f;
}

// Two objects 0, 1 with End(0) = G = Z/2, hom(0,1) a G-torsor, hom(1,0) empty.
// An isofibration onto the arrow category whose fibers are not equivalent.
inline FiniteCategory left_gset_category() {
  FiniteCategory c;
  c.objects = {"0", "1"};
  c.morphisms = {{"g0", "0", "0"}, {"g1", "0", "0"}, {"a0", "0", "1"},
                 {"a1", "0", "1"}, {"i1", "1", "1"}};
  c.identity = {{"0", "g0"}, {"1", "i1"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      c.composition[{"g" + std::to_string(j), "g" + std::to_string(i)}] =
          "g" + std::to_string((i + j) % 2);
      c.composition[{"a" + std::to_string(j), "g" + std::to_string(i)}] =
          "a" + std::to_string((i + j) % 2);
    }
  for (int i = 0; i < 2; ++i) c.composition[{"i1", "a" + std::to_string(i)}] = "a" + std::to_string(i);
  c.composition[{"i1", "i1"}] = "i1";
  return c;
}

inline FiniteCategory arrow_category() {
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  return poset_category({"0", "1"}, leq);
}

inline Functor left_gset_fibration() {
  Functor p;
  p.source = left_gset_category();
  p.target = arrow_category();
  p.object_map = {{"0", "0"}, {"1", "1"}};
  p.morphism_map = {{"g0", "le0_0"}, {"g1", "le0_0"}, {"a0", "le0_1"},
                    {"a1", "le0_1"}, {"i1", "le1_1"}};
  return p;
}

// --- randomized instances ---------------------------------------------------

inline GroupTable random_group(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> pick(1, max_order + (max_order >= 6 ? 1 : 0));
  const int choice = pick(rng);
  if (choice > max_order) return symmetric_group_3();
  return cyclic_group(choice);
}

inline FiniteCategory random_groupoid(std::mt19937& rng, int max_components = 4,
                                      int max_group_order = 6, int max_objects_per_component = 3) {
  std::uniform_int_distribution<int> comps(1, max_components);
  std::uniform_int_distribution<int> objs(1, max_objects_per_component);
  const int n = comps(rng);
  FiniteCategory result;
  for (int i = 0; i < n; ++i) {
    const auto g = random_group(rng, max_group_order);
    const auto piece =
        torsor_groupoid("c" + std::to_string(i) + "_", g, static_cast<std::size_t>(objs(rng)));
    result = i == 0 ? piece : disjoint_union_category(result, piece);
  }
  return result;
}

// Random poset category from a random DAG on label-ordered vertices.
inline FiniteCategory random_poset_category(std::mt19937& rng, int max_objects = 5) {
  std::uniform_int_distribution<int> objs(1, max_objects);
  std::uniform_int_distribution<int> coin(0, 2);
  const std::size_t n = static_cast<std::size_t>(objs(rng));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) == 0) leq[i][j] = true;
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("q" + std::to_string(i));
  return poset_category(objects, leq);
}

// A random finite category that certainly admits an Euler characteristic:
// posets, groupoids, small monoids, and products/unions thereof.
inline FiniteCategory random_category(std::mt19937& rng, int depth = 1) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 2);
  switch (pick(rng)) {
    case 0:
      return random_poset_category(rng, 4);
    case 1:
      return random_groupoid(rng, 2, 4, 2);
    case 2: {
      std::uniform_int_distribution<int> k(0, 3);
      return truncated_addition_monoid(static_cast<std::size_t>(k(rng)));
    }
    case 3: {
      auto a = random_category(rng, depth - 1);
      auto b = random_category(rng, depth - 1);
      if (a.morphisms.size() * b.morphisms.size() > 400) return a;
      return product_category(a, b);
    }
    default:
      return disjoint_union_category(random_category(rng, depth - 1),
                                     random_category(rng, depth - 1));
  }
}

// Groupoid with `pi1` components, each one object with Aut = Z/pi2.
inline FiniteCategory hom_groupoid(int pi1, int pi2) {
  FiniteCategory result;
  for (int i = 0; i < pi1; ++i) {
    auto piece = one_object_group("h" + std::to_string(i) + "_", cyclic_group(pi2));
    result = i == 0 ? piece : disjoint_union_category(result, piece);
  }
  return result;
}

// A finite 2-groupoid: components of objects, all homs within a component the
// same groupoid with pi1 components and Aut = Z/pi2, empty homs across.
inline EnrichedCategory random_two_groupoid(std::mt19937& rng, int max_components = 3,
                                            int max_pi1 = 3, int max_pi2 = 4) {
  std::uniform_int_distribution<int> comps(1, max_components);
  std::uniform_int_distribution<int> objs(1, 2);
  std::uniform_int_distribution<int> pi1_of(1, max_pi1);
  std::uniform_int_distribution<int> pi2_of(1, max_pi2);

  EnrichedCategory g;
  g.enrichment = Enrichment::Cat;
  const int n_comp = comps(rng);
  std::vector<int> comp_of;
  std::vector<FiniteCategory> hom_of;
  for (int c = 0; c < n_comp; ++c) {
    const auto hom = hom_groupoid(pi1_of(rng), pi2_of(rng));
    const int k = objs(rng);
    for (int i = 0; i < k; ++i) {
      g.objects.push_back("g" + std::to_string(c) + "_" + std::to_string(i));
      comp_of.push_back(c);
      hom_of.push_back(hom);
    }
  }
  const std::size_t n = g.objects.size();
  g.hom.assign(n * n, empty_hom());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (comp_of[a] == comp_of[b]) g.hom[a * n + b] = fincat_hom(hom_of[a]);
  return g;
}

// Census of one connected random CW component: at most `max_cells` cells up
// to dimension `max_dim`, always at least one 0-cell.
inline CellVector random_census(std::mt19937& rng, int max_dim = 3, int max_cells = 4) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::uniform_int_distribution<int> count(0, 2);
  CellVector census(static_cast<std::size_t>(dim(rng)) + 1, Int(0));
  census[0] = 1;
  int budget = max_cells - 1;
  for (std::size_t d = 1; d < census.size() && budget > 0; ++d) {
    const int c = std::min(count(rng), budget);
    census[d] = c;
    budget -= c;
  }
  return census;
}

inline HomObject random_cw_hom(std::mt19937& rng, int max_components = 2) {
  std::uniform_int_distribution<int> comps(1, max_components);
  std::vector<CellVector> components;
  const int n = comps(rng);
  for (int i = 0; i < n; ++i) components.push_back(random_census(rng));
  return cw_hom(std::move(components));
}

// A hom-object admitted by the given enrichment, never too large.
inline HomObject random_hom(std::mt19937& rng, Enrichment e, bool allow_empty = true) {
  std::uniform_int_distribution<int> pick(allow_empty ? 0 : 1, 3);
  const int choice = pick(rng);
  if (choice == 0) return empty_hom();
  switch (e) {
    case Enrichment::Set: {
      std::uniform_int_distribution<int> n(1, 4);
      return finset_hom(n(rng));
    }
    case Enrichment::Top:
      if (choice == 1) {
        std::uniform_int_distribution<int> n(1, 3);
        return finset_hom(n(rng));
      }
      return random_cw_hom(rng);
    case Enrichment::Cat:
      if (choice == 1) {
        std::uniform_int_distribution<int> n(1, 3);
        return finset_hom(n(rng));
      }
      return fincat_hom(random_category(rng, 0));
  }
  return empty_hom();
}

// Random acyclic topological category: a transitively closed random relation
// on label-ordered objects, a random census on every related pair.
inline AcyclicTopCategory random_acyclic(std::mt19937& rng, int max_objects = 5) {
  std::uniform_int_distribution<int> objs(1, max_objects);
  std::uniform_int_distribution<int> coin(0, 2);
  const std::size_t n = static_cast<std::size_t>(objs(rng));
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) == 0) rel[i][j] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;

  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("a" + std::to_string(i));
  std::map<std::pair<std::string, std::string>, HomObject> homs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i][j]) homs[{objects[i], objects[j]}] = random_cw_hom(rng);
  return assemble_acyclic(objects, homs);
}

// An enriched category that certainly admits chi: unit upper-triangular
// similarity matrix by construction, or a groupoid/category shadow under Set.
inline EnrichedCategory random_enriched(std::mt19937& rng, Enrichment e) {
  std::uniform_int_distribution<int> style(0, 1);
  if (e == Enrichment::Set && style(rng) == 0) return to_enriched(random_category(rng));
  if (e == Enrichment::Cat && style(rng) == 0) return random_two_groupoid(rng, 2, 2, 3);

  std::uniform_int_distribution<int> objs(1, 3);
  const std::size_t n = static_cast<std::size_t>(objs(rng));
  EnrichedCategory c;
  c.enrichment = e;
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back("t" + std::to_string(i));
  c.hom.assign(n * n, empty_hom());
  for (std::size_t i = 0; i < n; ++i) c.hom[i * n + i] = unit_hom(e);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) c.hom[i * n + j] = random_hom(rng, e, false);
  return c;
}

}  // namespace testsupport
