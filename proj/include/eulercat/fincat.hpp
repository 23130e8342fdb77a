#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eulercat/errors.hpp"
#include "eulercat/matrix.hpp"

namespace eulercat {

struct Morphism {
  std::string id, src, tgt;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// A finite category given by explicit data: object list, morphism list,
// identity assignment, and a composition table keyed (g, f) -> g after f.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identity;
  std::map<std::pair<std::string, std::string>, std::string> composition;
  friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;
};

struct Functor {
  FiniteCategory source, target;
  std::map<std::string, std::string> object_map, morphism_map;
  friend bool operator==(const Functor&, const Functor&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Boolean check with a human-readable counterexample. The witness is the
// lexicographically first failure in scan order, so reruns agree.
struct CheckResult {
  bool value = false;
  std::string witness;
};

struct FibrationComponentRow {
  std::string component;  // representative object of the base component
  Rational base_chi, fiber_chi;
};

struct FibrationReport {
  std::vector<FibrationComponentRow> components;
  Rational lhs, rhs;  // chi of the total category vs the component sum
  bool equal = false;
};

namespace detail {

// Index-compiled view of a category. Structural integrity (resolvable ids,
// identities present, composable keys) is enforced here; the algebraic laws
// are the job of validate_category.
struct CompiledCat {
  std::size_t n_obj = 0, n_mor = 0;
  std::unordered_map<std::string, int> obj_index, mor_index;
  std::vector<int> src, tgt;  // per morphism
  std::vector<int> id_of;     // per object
  std::vector<int> comp;      // comp[g * n_mor + f], -1 when not composable

  int compose(int g, int f) const { return comp[g * n_mor + f]; }
};

inline CompiledCat compile(const FiniteCategory& c) {
  CompiledCat k;
  k.n_obj = c.objects.size();
  k.n_mor = c.morphisms.size();
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    if (!k.obj_index.emplace(c.objects[i], static_cast<int>(i)).second)
      throw InvalidCategory("duplicate object id '" + c.objects[i] + "'");
  }
  k.src.resize(k.n_mor);
  k.tgt.resize(k.n_mor);
  for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
    const auto& m = c.morphisms[i];
    if (!k.mor_index.emplace(m.id, static_cast<int>(i)).second)
      throw InvalidCategory("duplicate morphism id '" + m.id + "'");
    auto s = k.obj_index.find(m.src);
    auto t = k.obj_index.find(m.tgt);
    if (s == k.obj_index.end() || t == k.obj_index.end())
      throw InvalidCategory("morphism '" + m.id + "' references an unknown object");
    k.src[i] = s->second;
    k.tgt[i] = t->second;
  }
  k.id_of.assign(k.n_obj, -1);
  for (const auto& [obj, mid] : c.identity) {
    auto o = k.obj_index.find(obj);
    auto m = k.mor_index.find(mid);
    if (o == k.obj_index.end())
      throw InvalidCategory("identity listed for unknown object '" + obj + "'");
    if (m == k.mor_index.end())
      throw InvalidCategory("identity of '" + obj + "' is an unknown morphism");
    if (k.src[m->second] != o->second || k.tgt[m->second] != o->second)
      throw InvalidCategory("identity of '" + obj + "' is not an endomorphism of it");
    k.id_of[o->second] = m->second;
  }
  for (std::size_t i = 0; i < k.n_obj; ++i)
    if (k.id_of[i] < 0)
      throw InvalidCategory("object '" + c.objects[i] + "' has no identity morphism");
  k.comp.assign(k.n_mor * k.n_mor, -1);
  for (const auto& [pair, value] : c.composition) {
    auto g = k.mor_index.find(pair.first);
    auto f = k.mor_index.find(pair.second);
    auto v = k.mor_index.find(value);
    if (g == k.mor_index.end() || f == k.mor_index.end() || v == k.mor_index.end())
      throw InvalidCategory("composition entry references an unknown morphism");
    if (k.src[g->second] != k.tgt[f->second])
      throw InvalidCategory("composition entry ('" + pair.first + "','" + pair.second +
                            "') is not composable");
    k.comp[g->second * k.n_mor + f->second] = v->second;
  }
  return k;
}

// Two-sided inverse of m, or -1. Scans in morphism order.
inline int find_inverse(const CompiledCat& k, int m) {
  for (std::size_t cand = 0; cand < k.n_mor; ++cand) {
    const int w = static_cast<int>(cand);
    if (k.src[w] != k.tgt[m] || k.tgt[w] != k.src[m]) continue;
    if (k.compose(w, m) == k.id_of[k.src[m]] && k.compose(m, w) == k.id_of[k.tgt[m]]) return w;
  }
  return -1;
}

// First isomorphism x -> y in morphism order, or -1.
inline int find_iso(const CompiledCat& k, int x, int y) {
  for (std::size_t m = 0; m < k.n_mor; ++m) {
    const int f = static_cast<int>(m);
    if (k.src[f] != x || k.tgt[f] != y) continue;
    if (find_inverse(k, f) >= 0) return f;
  }
  return -1;
}

inline std::vector<int> component_ids(const CompiledCat& k) {
  // zigzag connectivity: morphisms as undirected edges
  std::vector<int> comp(k.n_obj, -1);
  int next = 0;
  for (std::size_t start = 0; start < k.n_obj; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (std::size_t m = 0; m < k.n_mor; ++m) {
        for (int other : {k.src[m] == x ? k.tgt[m] : -1, k.tgt[m] == x ? k.src[m] : -1}) {
          if (other >= 0 && comp[other] < 0) {
            comp[other] = next;
            stack.push_back(other);
          }
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

// Full invariant audit. Never throws on bad data; lists what is wrong.
inline ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  detail::CompiledCat k;
  try {
    k = detail::compile(c);
  } catch (const InvalidCategory& e) {
    note(e.what());
    return report;  // table checks need resolvable structure
  }

  for (const auto& [pair, value] : c.composition) {
    const int g = k.mor_index.at(pair.first), f = k.mor_index.at(pair.second);
    const int v = k.mor_index.at(value);
    if (k.src[v] != k.src[f] || k.tgt[v] != k.tgt[g])
      note("composite '" + value + "' of ('" + pair.first + "','" + pair.second +
           "') has wrong endpoints");
  }

  for (std::size_t g = 0; g < k.n_mor; ++g)
    for (std::size_t f = 0; f < k.n_mor; ++f) {
      if (k.src[g] != k.tgt[f]) continue;
      if (k.compose(static_cast<int>(g), static_cast<int>(f)) < 0)
        note("missing composite for ('" + c.morphisms[g].id + "','" + c.morphisms[f].id + "')");
    }
  if (!report.ok()) return report;

  for (std::size_t f = 0; f < k.n_mor; ++f) {
    const int fi = static_cast<int>(f);
    if (k.compose(fi, k.id_of[k.src[f]]) != fi || k.compose(k.id_of[k.tgt[f]], fi) != fi)
      note("unit law fails at morphism '" + c.morphisms[f].id + "'");
  }

  for (std::size_t h = 0; h < k.n_mor; ++h)
    for (std::size_t g = 0; g < k.n_mor; ++g) {
      if (k.src[h] != k.tgt[g]) continue;
      const int hg = k.compose(static_cast<int>(h), static_cast<int>(g));
      for (std::size_t f = 0; f < k.n_mor; ++f) {
        if (k.src[g] != k.tgt[f]) continue;
        const int gf = k.compose(static_cast<int>(g), static_cast<int>(f));
        if (k.compose(hg, static_cast<int>(f)) != k.compose(static_cast<int>(h), gf)) {
          note("associativity fails at ('" + c.morphisms[h].id + "','" + c.morphisms[g].id +
               "','" + c.morphisms[f].id + "')");
          return report;  // one associativity witness is enough
        }
      }
    }
  return report;
}

inline void require_valid(const FiniteCategory& c, const char* role = "category") {
  auto report = validate_category(c);
  if (!report.ok()) throw InvalidCategory(std::string(role) + ": " + report.violations.front());
}

// Partition of objects into zigzag-connected classes, in first-seen order.
inline std::vector<std::vector<std::string>> pi0_category(const FiniteCategory& c) {
  const auto k = detail::compile(c);
  const auto comp = detail::component_ids(k);
  int classes = 0;
  for (int id : comp) classes = std::max(classes, id + 1);
  std::vector<std::vector<std::string>> out(classes);
  for (std::size_t i = 0; i < c.objects.size(); ++i) out[comp[i]].push_back(c.objects[i]);
  return out;
}

inline std::size_t hom_count(const detail::CompiledCat& k, int a, int b) {
  std::size_t n = 0;
  for (std::size_t m = 0; m < k.n_mor; ++m)
    if (k.src[m] == a && k.tgt[m] == b) ++n;
  return n;
}

// Matrix of morphism counts in object order; entry (a,b) counts a -> b.
inline RationalMatrix hom_count_matrix(const FiniteCategory& c) {
  const auto k = detail::compile(c);
  RationalMatrix m(k.n_obj, k.n_obj);
  for (std::size_t a = 0; a < k.n_obj; ++a)
    for (std::size_t b = 0; b < k.n_obj; ++b)
      m.at(a, b) = static_cast<long>(hom_count(k, static_cast<int>(a), static_cast<int>(b)));
  return m;
}

// Euler characteristic of a finite category from its counting matrix: the
// common sum of a weighting and a coweighting, when both exist.
inline std::optional<Rational> leinster_chi(const FiniteCategory& c) {
  const auto xi = hom_count_matrix(c);
  const RationalVector u(xi.rows(), Rational(1));
  const auto w = solve_right(xi, u);
  if (!w) return std::nullopt;
  if (!solve_left(xi, u)) return std::nullopt;
  Rational total = 0;
  for (const auto& x : *w) total += x;
  return total;
}

inline ValidationReport validate_functor(const Functor& f) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  detail::CompiledCat s, t;
  try {
    s = detail::compile(f.source);
  } catch (const InvalidCategory& e) {
    note(std::string("source: ") + e.what());
  }
  try {
    t = detail::compile(f.target);
  } catch (const InvalidCategory& e) {
    note(std::string("target: ") + e.what());
  }
  if (!report.ok()) return report;

  std::vector<int> omap(s.n_obj, -1), mmap(s.n_mor, -1);
  for (std::size_t i = 0; i < s.n_obj; ++i) {
    auto it = f.object_map.find(f.source.objects[i]);
    if (it == f.object_map.end()) {
      note("object '" + f.source.objects[i] + "' has no image");
      continue;
    }
    auto img = t.obj_index.find(it->second);
    if (img == t.obj_index.end())
      note("object '" + f.source.objects[i] + "' maps to unknown '" + it->second + "'");
    else
      omap[i] = img->second;
  }
  for (std::size_t i = 0; i < s.n_mor; ++i) {
    auto it = f.morphism_map.find(f.source.morphisms[i].id);
    if (it == f.morphism_map.end()) {
      note("morphism '" + f.source.morphisms[i].id + "' has no image");
      continue;
    }
    auto img = t.mor_index.find(it->second);
    if (img == t.mor_index.end())
      note("morphism '" + f.source.morphisms[i].id + "' maps to unknown '" + it->second + "'");
    else
      mmap[i] = img->second;
  }
  if (!report.ok()) return report;

  for (std::size_t m = 0; m < s.n_mor; ++m) {
    if (t.src[mmap[m]] != omap[s.src[m]] || t.tgt[mmap[m]] != omap[s.tgt[m]])
      note("morphism '" + f.source.morphisms[m].id + "' image has wrong endpoints");
  }
  for (std::size_t o = 0; o < s.n_obj; ++o) {
    if (mmap[s.id_of[o]] != t.id_of[omap[o]])
      note("identity of '" + f.source.objects[o] + "' is not sent to an identity");
  }
  for (std::size_t g = 0; g < s.n_mor; ++g)
    for (std::size_t fm = 0; fm < s.n_mor; ++fm) {
      const int gf = s.compose(static_cast<int>(g), static_cast<int>(fm));
      if (gf < 0) continue;
      if (mmap[gf] != t.compose(mmap[g], mmap[fm])) {
        note("composition not preserved at ('" + f.source.morphisms[g].id + "','" +
             f.source.morphisms[fm].id + "')");
        return report;
      }
    }
  return report;
}

inline void require_valid(const Functor& f) {
  auto report = validate_functor(f);
  if (!report.ok()) throw InvalidFunctor(report.violations.front());
}

// Fully faithful and essentially surjective, checked exhaustively.
inline CheckResult is_equivalence(const Functor& f) {
  require_valid(f);
  const auto s = detail::compile(f.source);
  const auto t = detail::compile(f.target);
  auto omap = [&](int x) { return t.obj_index.at(f.object_map.at(f.source.objects[x])); };
  auto mmap = [&](int m) { return t.mor_index.at(f.morphism_map.at(f.source.morphisms[m].id)); };

  for (std::size_t a = 0; a < s.n_obj; ++a)
    for (std::size_t b = 0; b < s.n_obj; ++b) {
      // faithful on hom(a,b)
      for (std::size_t m1 = 0; m1 < s.n_mor; ++m1) {
        if (s.src[m1] != static_cast<int>(a) || s.tgt[m1] != static_cast<int>(b)) continue;
        for (std::size_t m2 = m1 + 1; m2 < s.n_mor; ++m2) {
          if (s.src[m2] != static_cast<int>(a) || s.tgt[m2] != static_cast<int>(b)) continue;
          if (mmap(m1) == mmap(m2))
            return {false, "not faithful: '" + f.source.morphisms[m1].id + "' and '" +
                               f.source.morphisms[m2].id + "' share an image"};
        }
      }
      // full onto hom(fa,fb)
      for (std::size_t g = 0; g < t.n_mor; ++g) {
        if (t.src[g] != omap(static_cast<int>(a)) || t.tgt[g] != omap(static_cast<int>(b)))
          continue;
        bool hit = false;
        for (std::size_t m = 0; m < s.n_mor && !hit; ++m) {
          if (s.src[m] != static_cast<int>(a) || s.tgt[m] != static_cast<int>(b)) continue;
          hit = mmap(m) == static_cast<int>(g);
        }
        if (!hit)
          return {false, "not full: '" + f.target.morphisms[g].id + "' has no preimage in hom('" +
                             f.source.objects[a] + "','" + f.source.objects[b] + "')"};
      }
    }

  for (std::size_t b = 0; b < t.n_obj; ++b) {
    bool reached = false;
    for (std::size_t a = 0; a < s.n_obj && !reached; ++a)
      reached = detail::find_iso(t, omap(static_cast<int>(a)), static_cast<int>(b)) >= 0;
    if (!reached)
      return {false,
              "not essentially surjective: no object lands isomorphically on '" +
                  f.target.objects[b] + "'"};
  }
  return {true, ""};
}

// Every isomorphism out of the image of an object lifts to an isomorphism.
inline CheckResult is_isofibration(const Functor& p) {
  require_valid(p);
  const auto s = detail::compile(p.source);
  const auto t = detail::compile(p.target);
  auto omap = [&](int x) { return t.obj_index.at(p.object_map.at(p.source.objects[x])); };
  auto mmap = [&](int m) { return t.mor_index.at(p.morphism_map.at(p.source.morphisms[m].id)); };

  for (std::size_t e = 0; e < s.n_obj; ++e) {
    const int pe = omap(static_cast<int>(e));
    for (std::size_t fm = 0; fm < t.n_mor; ++fm) {
      if (t.src[fm] != pe) continue;
      if (detail::find_inverse(t, static_cast<int>(fm)) < 0) continue;
      bool lifted = false;
      for (std::size_t g = 0; g < s.n_mor && !lifted; ++g) {
        if (s.src[g] != static_cast<int>(e)) continue;
        if (mmap(static_cast<int>(g)) != static_cast<int>(fm)) continue;
        lifted = detail::find_inverse(s, static_cast<int>(g)) >= 0;
      }
      if (!lifted)
        return {false, "isomorphism '" + p.target.morphisms[fm].id + "' out of p('" +
                           p.source.objects[e] + "') has no isomorphism lift"};
    }
  }
  return {true, ""};
}

// Subcategory over the identity of b: objects p^{-1}(b), morphisms over 1_b.
inline FiniteCategory strict_fiber(const Functor& p, const std::string& b) {
  require_valid(p);
  const auto t = detail::compile(p.target);
  auto bi = t.obj_index.find(b);
  if (bi == t.obj_index.end()) throw UnknownObject("no object '" + b + "' in the base");
  const std::string& id_b = p.target.morphisms[t.id_of[bi->second]].id;

  FiniteCategory fiber;
  for (const auto& obj : p.source.objects)
    if (p.object_map.at(obj) == b) {
      fiber.objects.push_back(obj);
      fiber.identity[obj] = p.source.identity.at(obj);
    }
  for (const auto& m : p.source.morphisms)
    if (p.morphism_map.at(m.id) == id_b) fiber.morphisms.push_back(m);
  for (const auto& [pair, value] : p.source.composition) {
    auto in_fiber = [&](const std::string& mid) {
      auto it = p.morphism_map.find(mid);
      return it != p.morphism_map.end() && it->second == id_b;
    };
    if (in_fiber(pair.first) && in_fiber(pair.second)) fiber.composition[pair] = value;
  }
  return fiber;
}

// Sum over connected components of 1/#Aut(representative).
inline Rational groupoid_chi(const FiniteCategory& c) {
  const auto k = detail::compile(c);
  for (std::size_t m = 0; m < k.n_mor; ++m)
    if (detail::find_inverse(k, static_cast<int>(m)) < 0)
      throw NotAGroupoid("morphism '" + c.morphisms[m].id + "' has no inverse");
  const auto comp = detail::component_ids(k);
  Rational total = 0;
  std::vector<bool> seen;
  for (std::size_t i = 0; i < k.n_obj; ++i) {
    if (static_cast<std::size_t>(comp[i]) < seen.size() && seen[comp[i]]) continue;
    if (static_cast<std::size_t>(comp[i]) >= seen.size()) seen.resize(comp[i] + 1, false);
    seen[comp[i]] = true;
    const auto aut = hom_count(k, static_cast<int>(i), static_cast<int>(i));
    total += make_rational(1, static_cast<long>(aut));
  }
  return total;
}

// Full subcategory on the given objects.
inline FiniteCategory full_subcategory(const FiniteCategory& c,
                                       const std::vector<std::string>& objects) {
  FiniteCategory sub;
  sub.objects = objects;
  std::map<std::string, bool> keep_obj;
  for (const auto& o : objects) keep_obj[o] = true;
  std::map<std::string, bool> keep_mor;
  for (const auto& m : c.morphisms)
    if (keep_obj.count(m.src) && keep_obj.count(m.tgt)) {
      sub.morphisms.push_back(m);
      keep_mor[m.id] = true;
    }
  for (const auto& o : objects) sub.identity[o] = c.identity.at(o);
  for (const auto& [pair, value] : c.composition)
    if (keep_mor.count(pair.first) && keep_mor.count(pair.second)) sub.composition[pair] = value;
  return sub;
}

// chi(E) against the sum over base components of chi(B_i) * chi(F_i), for an
// isofibration between finite groupoids. Failing hypotheses throw; an unequal
// report would indicate a genuine formula violation.
inline FibrationReport verify_product_formula(const Functor& p) {
  require_valid(p);
  {
    const auto s = detail::compile(p.source);
    for (std::size_t m = 0; m < s.n_mor; ++m)
      if (detail::find_inverse(s, static_cast<int>(m)) < 0)
        throw NotAGroupoid("total category is not a groupoid: morphism '" +
                           p.source.morphisms[m].id + "' has no inverse");
    const auto t = detail::compile(p.target);
    for (std::size_t m = 0; m < t.n_mor; ++m)
      if (detail::find_inverse(t, static_cast<int>(m)) < 0)
        throw NotAGroupoid("base category is not a groupoid: morphism '" +
                           p.target.morphisms[m].id + "' has no inverse");
  }
  if (auto iso = is_isofibration(p); !iso.value) throw NotAnIsofibration(iso.witness);

  FibrationReport report;
  const auto lhs = leinster_chi(p.source);
  if (!lhs) throw ChiUndefined("total category admits no Euler characteristic");
  report.lhs = *lhs;
  report.rhs = 0;
  for (const auto& component : pi0_category(p.target)) {
    FibrationComponentRow row;
    row.component = component.front();
    const auto base = leinster_chi(full_subcategory(p.target, component));
    if (!base) throw ChiUndefined("base component admits no Euler characteristic");
    row.base_chi = *base;
    const auto fiber = leinster_chi(strict_fiber(p, component.front()));
    if (!fiber) throw ChiUndefined("fiber admits no Euler characteristic");
    row.fiber_chi = *fiber;
    report.rhs += row.base_chi * row.fiber_chi;
    report.components.push_back(std::move(row));
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

// --- small builders -------------------------------------------------------

inline FiniteCategory discrete_category(const std::vector<std::string>& objects) {
  FiniteCategory c;
  c.objects = objects;
  for (const auto& o : objects) {
    const std::string id = "1_" + o;
    c.morphisms.push_back({id, o, o});
    c.identity[o] = id;
    c.composition[{id, id}] = id;
  }
  return c;
}

inline FiniteCategory discrete_category(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  return discrete_category(objects);
}

inline FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
  auto pair_id = [](const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
  };
  FiniteCategory p;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) p.objects.push_back(pair_id(x, y));
  for (const auto& m : a.morphisms)
    for (const auto& n : b.morphisms)
      p.morphisms.push_back({pair_id(m.id, n.id), pair_id(m.src, n.src), pair_id(m.tgt, n.tgt)});
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.identity[pair_id(x, y)] = pair_id(a.identity.at(x), b.identity.at(y));
  for (const auto& [ga, va] : a.composition)
    for (const auto& [gb, vb] : b.composition)
      p.composition[{pair_id(ga.first, gb.first), pair_id(ga.second, gb.second)}] =
          pair_id(va, vb);
  return p;
}

inline FiniteCategory disjoint_union_category(const FiniteCategory& a, const FiniteCategory& b) {
  bool clash = false;
  for (const auto& o : b.objects)
    for (const auto& p : a.objects)
      if (o == p) clash = true;
  for (const auto& m : b.morphisms)
    for (const auto& n : a.morphisms)
      if (m.id == n.id) clash = true;
  auto left = [&](const std::string& s) { return clash ? "0:" + s : s; };
  auto right = [&](const std::string& s) { return clash ? "1:" + s : s; };

  FiniteCategory u;
  for (const auto& o : a.objects) u.objects.push_back(left(o));
  for (const auto& o : b.objects) u.objects.push_back(right(o));
  for (const auto& m : a.morphisms) u.morphisms.push_back({left(m.id), left(m.src), left(m.tgt)});
  for (const auto& m : b.morphisms)
    u.morphisms.push_back({right(m.id), right(m.src), right(m.tgt)});
  for (const auto& [o, i] : a.identity) u.identity[left(o)] = left(i);
  for (const auto& [o, i] : b.identity) u.identity[right(o)] = right(i);
  for (const auto& [pair, value] : a.composition)
    u.composition[{left(pair.first), left(pair.second)}] = left(value);
  for (const auto& [pair, value] : b.composition)
    u.composition[{right(pair.first), right(pair.second)}] = right(value);
  return u;
}

}  // namespace eulercat
