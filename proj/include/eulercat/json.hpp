#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>  // nlohmann, vendored

#include "eulercat/enriched.hpp"
#include "eulercat/stratified.hpp"
#include "eulercat/topcat.hpp"

namespace eulercat {

// Insertion-ordered documents keep serialized output byte-stable.
using Json = nlohmann::ordered_json;

namespace jsondetail {

inline const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline Int as_int(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw ParseError(where + ": '" + s + "' is not an integer");
    }
  }
  throw ParseError(where + ": expected an integer");
}

inline Json int_to_json(const Int& n) {
  if (n >= 0 && n <= Int(std::uint64_t(-1))) return Json(n.convert_to<std::uint64_t>());
  if (n < 0 && -n <= Int(std::uint64_t(1) << 62)) return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

inline std::pair<std::string, std::string> split_key(const std::string& key,
                                                     const std::string& sep,
                                                     const std::string& where) {
  const auto pos = key.find(sep);
  if (pos == std::string::npos)
    throw ParseError(where + ": key '" + key + "' lacks the '" + sep + "' separator");
  return {key.substr(0, pos), key.substr(pos + sep.size())};
}

inline void reject_separator(const std::string& id, const std::string& sep,
                             const std::string& where) {
  if (id.find(sep) != std::string::npos)
    throw ParseError(where + ": id '" + id + "' may not contain '" + sep + "'");
}

constexpr const char* kCompose = "∘";  // the ring operator in compose keys

}  // namespace jsondetail

// --- hom-objects ------------------------------------------------------------

inline Json to_json(const HomObject& h);
inline Json to_json(const FiniteCategory& c);
FiniteCategory fincat_from_json(const Json& j, const std::string& where = "category");

inline HomObject hom_from_json(const Json& j, const std::string& where = "hom") {
  using namespace jsondetail;
  const auto kind = as_string(field(j, "kind", where), where + ".kind");
  if (kind == "empty") return empty_hom();
  if (kind == "finset") return finset_hom(as_int(field(j, "n", where), where + ".n"));
  if (kind == "cw") {
    const auto& comps = field(j, "components", where);
    if (!comps.is_array()) throw ParseError(where + ".components: expected an array");
    std::vector<CellVector> components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& comp = comps[i];
      const std::string at = where + ".components[" + std::to_string(i) + "]";
      if (!comp.is_array()) throw ParseError(at + ": expected an array of cell counts");
      CellVector census;
      for (std::size_t d = 0; d < comp.size(); ++d)
        census.push_back(as_int(comp[d], at + "[" + std::to_string(d) + "]"));
      components.push_back(std::move(census));
    }
    try {
      return cw_hom(std::move(components));
    } catch (const InvalidHomObject& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (kind == "fincat") return fincat_hom(fincat_from_json(field(j, "cat", where), where + ".cat"));
  throw ParseError(where + ".kind: unknown kind '" + kind + "'");
}

inline Json to_json(const HomObject& h) {
  using namespace jsondetail;
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EmptyHom>) return Json{{"kind", "empty"}};
        if constexpr (std::is_same_v<T, FinSetHom>)
          return Json{{"kind", "finset"}, {"n", int_to_json(v.n)}};
        if constexpr (std::is_same_v<T, CwHom>) {
          Json comps = Json::array();
          for (const auto& comp : v.components) {
            Json census = Json::array();
            for (const auto& count : comp) census.push_back(int_to_json(count));
            comps.push_back(std::move(census));
          }
          return Json{{"kind", "cw"}, {"components", std::move(comps)}};
        }
        if constexpr (std::is_same_v<T, FinCatHom>)
          return Json{{"kind", "fincat"}, {"cat", to_json(v.cat)}};
      },
      h);
}

// --- finite categories and functors ----------------------------------------

inline FiniteCategory fincat_from_json(const Json& j, const std::string& where) {
  using namespace jsondetail;
  FiniteCategory c;
  const auto& objects = field(j, "objects", where);
  if (!objects.is_array()) throw ParseError(where + ".objects: expected an array");
  for (const auto& o : objects) c.objects.push_back(as_string(o, where + ".objects[]"));

  const auto& morphisms = field(j, "morphisms", where);
  if (!morphisms.is_array()) throw ParseError(where + ".morphisms: expected an array");
  for (const auto& m : morphisms) {
    const std::string at = where + ".morphisms[]";
    Morphism mor{as_string(field(m, "id", at), at + ".id"),
                 as_string(field(m, "src", at), at + ".src"),
                 as_string(field(m, "tgt", at), at + ".tgt")};
    reject_separator(mor.id, kCompose, at);
    c.morphisms.push_back(std::move(mor));
  }

  const auto& identity = field(j, "identity", where);
  if (!identity.is_object()) throw ParseError(where + ".identity: expected an object");
  for (const auto& [obj, mid] : identity.items())
    c.identity[obj] = as_string(mid, where + ".identity['" + obj + "']");

  const auto& compose = field(j, "compose", where);
  if (!compose.is_object()) throw ParseError(where + ".compose: expected an object");
  for (const auto& [key, value] : compose.items()) {
    auto [g, f] = split_key(key, kCompose, where + ".compose");
    c.composition[{g, f}] = as_string(value, where + ".compose['" + key + "']");
  }
  return c;
}

inline Json to_json(const FiniteCategory& c) {
  using namespace jsondetail;
  Json j;
  j["objects"] = c.objects;
  Json morphisms = Json::array();
  for (const auto& m : c.morphisms) {
    reject_separator(m.id, kCompose, "morphisms");
    morphisms.push_back(Json{{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  }
  j["morphisms"] = std::move(morphisms);
  Json identity;
  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it != c.identity.end()) identity[o] = it->second;
  }
  j["identity"] = std::move(identity);
  Json compose;
  for (const auto& [pair, value] : c.composition)
    compose[pair.first + kCompose + pair.second] = value;
  j["compose"] = std::move(compose);
  return j;
}

inline Functor functor_from_json(const Json& j, const std::string& where = "functor") {
  using namespace jsondetail;
  Functor f;
  f.source = fincat_from_json(field(j, "source", where), where + ".source");
  f.target = fincat_from_json(field(j, "target", where), where + ".target");
  const auto& omap = field(j, "object_map", where);
  if (!omap.is_object()) throw ParseError(where + ".object_map: expected an object");
  for (const auto& [k, v] : omap.items())
    f.object_map[k] = as_string(v, where + ".object_map['" + k + "']");
  const auto& mmap = field(j, "morphism_map", where);
  if (!mmap.is_object()) throw ParseError(where + ".morphism_map: expected an object");
  for (const auto& [k, v] : mmap.items())
    f.morphism_map[k] = as_string(v, where + ".morphism_map['" + k + "']");
  return f;
}

inline Json to_json(const Functor& f) {
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  Json omap, mmap;
  for (const auto& [k, v] : f.object_map) omap[k] = v;
  for (const auto& [k, v] : f.morphism_map) mmap[k] = v;
  j["object_map"] = std::move(omap);
  j["morphism_map"] = std::move(mmap);
  return j;
}

// --- enriched categories ----------------------------------------------------

inline Enrichment enrichment_from_json(const Json& j, const std::string& where) {
  const auto name = jsondetail::as_string(j, where);
  if (name == "set") return Enrichment::Set;
  if (name == "cat") return Enrichment::Cat;
  if (name == "top") return Enrichment::Top;
  throw ParseError(where + ": unknown enrichment '" + name + "'");
}

// Omitted hom entries default to the unit on the diagonal and the initial
// object off it; explicit entries override.
inline EnrichedCategory enriched_from_json(const Json& j, const std::string& where = "category") {
  using namespace jsondetail;
  EnrichedCategory c;
  c.enrichment = enrichment_from_json(field(j, "enrichment", where), where + ".enrichment");
  const auto& objects = field(j, "objects", where);
  if (!objects.is_array()) throw ParseError(where + ".objects: expected an array");
  for (const auto& o : objects) c.objects.push_back(as_string(o, where + ".objects[]"));
  const std::size_t n = c.objects.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[c.objects[i]] = i;

  c.hom.assign(n * n, empty_hom());
  for (std::size_t i = 0; i < n; ++i) c.hom_at(i, i) = unit_hom(c.enrichment);

  if (auto it = j.find("hom"); it != j.end()) {
    if (!it->is_object()) throw ParseError(where + ".hom: expected an object");
    for (const auto& [key, value] : it->items()) {
      auto [a, b] = split_key(key, "->", where + ".hom");
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        throw ParseError(where + ".hom['" + key + "']: unknown object '" +
                         (ia == index.end() ? a : b) + "'");
      c.hom_at(ia->second, ib->second) = hom_from_json(value, where + ".hom['" + key + "']");
    }
  }
  return c;
}

inline Json to_json(const EnrichedCategory& c) {
  using namespace jsondetail;
  Json j;
  j["enrichment"] = enrichment_name(c.enrichment);
  for (const auto& o : c.objects) reject_separator(o, "->", "objects");
  j["objects"] = c.objects;
  Json hom;
  const std::size_t n = c.objects.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& h = c.hom_at(a, b);
      const bool is_default = a == b ? h == unit_hom(c.enrichment) : is_empty(h);
      if (!is_default) hom[c.objects[a] + "->" + c.objects[b]] = to_json(h);
    }
  j["hom"] = std::move(hom);
  return j;
}

// --- acyclic topological categories ----------------------------------------

inline AcyclicTopCategory acyclic_from_json(const Json& j, const std::string& where = "category") {
  using namespace jsondetail;
  const auto& objects = field(j, "objects", where);
  if (!objects.is_array()) throw ParseError(where + ".objects: expected an array");
  std::vector<std::string> names;
  for (const auto& o : objects) names.push_back(as_string(o, where + ".objects[]"));

  std::map<std::pair<std::string, std::string>, HomObject> homs;
  if (auto it = j.find("hom"); it != j.end()) {
    if (!it->is_object()) throw ParseError(where + ".hom: expected an object");
    for (const auto& [key, value] : it->items()) {
      auto pair = split_key(key, "->", where + ".hom");
      homs[pair] = hom_from_json(value, where + ".hom['" + key + "']");
    }
  }
  return assemble_acyclic(std::move(names), homs);
}

inline Json to_json(const AcyclicTopCategory& a) {
  using namespace jsondetail;
  Json j;
  for (const auto& o : a.objects) reject_separator(o, "->", "objects");
  j["objects"] = a.objects;
  Json hom;
  const std::size_t n = a.objects.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !is_empty(a.hom_at(x, y)))
        hom[a.objects[x] + "->" + a.objects[y]] = to_json(a.hom_at(x, y));
  j["hom"] = std::move(hom);
  return j;
}

// --- stratified space descriptors -------------------------------------------

inline StratifiedSpaceDescriptor descriptor_from_json(const Json& j,
                                                      const std::string& where = "descriptor") {
  using namespace jsondetail;
  StratifiedSpaceDescriptor d;
  const auto& faces = field(j, "faces", where);
  if (!faces.is_array()) throw ParseError(where + ".faces: expected an array");
  for (const auto& f : faces) {
    const std::string at = where + ".faces[]";
    Face face;
    face.id = as_string(field(f, "id", at), at + ".id");
    const Int dim = as_int(field(f, "dim", at), at + ".dim");
    if (dim < 0 || dim > 1000000) throw ParseError(at + ".dim: out of range");
    face.dim = dim.convert_to<int>();
    d.faces.push_back(std::move(face));
  }
  const auto& order = field(j, "order", where);
  if (!order.is_array()) throw ParseError(where + ".order: expected an array");
  for (const auto& pair : order) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(where + ".order[]: expected a two-element array");
    d.order.emplace_back(as_string(pair[0], where + ".order[][0]"),
                         as_string(pair[1], where + ".order[][1]"));
  }
  const auto& params = field(j, "params", where);
  if (!params.is_object()) throw ParseError(where + ".params: expected an object");
  for (const auto& [key, value] : params.items()) {
    auto pair = split_key(key, "<", where + ".params");
    d.params[pair] = hom_from_json(value, where + ".params['" + key + "']");
  }
  return d;
}

inline Json to_json(const StratifiedSpaceDescriptor& d) {
  using namespace jsondetail;
  Json j;
  Json faces = Json::array();
  for (const auto& f : d.faces) {
    reject_separator(f.id, "<", "faces");
    faces.push_back(Json{{"id", f.id}, {"dim", f.dim}});
  }
  j["faces"] = std::move(faces);
  Json order = Json::array();
  for (const auto& [lo, hi] : d.order) order.push_back(Json::array({lo, hi}));
  j["order"] = std::move(order);
  Json params;
  for (const auto& [pair, h] : d.params) params[pair.first + "<" + pair.second] = to_json(h);
  j["params"] = std::move(params);
  return j;
}

// --- censuses and input dispatch --------------------------------------------

inline Json census_to_json(const CellCensus& census) {
  Json cells;
  for (const auto& [dim, count] : census)
    cells[std::to_string(dim)] = jsondetail::int_to_json(count);
  return Json{{"cells", std::move(cells)},
              {"chi", rational_to_string(census_alternating_sum(census))}};
}

enum class InputKind { FiniteCategoryKind, FunctorKind, EnrichedKind, AcyclicKind, DescriptorKind };

inline InputKind detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("input: expected a JSON object");
  if (j.contains("faces")) return InputKind::DescriptorKind;
  if (j.contains("enrichment")) return InputKind::EnrichedKind;
  if (j.contains("morphisms")) return InputKind::FiniteCategoryKind;
  if (j.contains("object_map")) return InputKind::FunctorKind;
  if (j.contains("objects") && j.contains("hom")) return InputKind::AcyclicKind;
  throw ParseError("input: unrecognized document shape");
}

}  // namespace eulercat
