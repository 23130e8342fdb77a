#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/topcat.hpp"

namespace eulercat {

struct Face {
  std::string id;
  int dim = 0;
  friend bool operator==(const Face&, const Face&) = default;
};

// The chi-relevant data of a cylindrically structured stratified space: the
// face poset with dimensions, and the parameter space between each related
// pair of faces as a CW census. Attaching maps are not represented; whether
// the space actually carries a cylindrical structure over this data is the
// caller's obligation.
struct StratifiedSpaceDescriptor {
  std::vector<Face> faces;
  std::vector<std::pair<std::string, std::string>> order;  // (lo, hi) pairs, transitively closed
  std::map<std::pair<std::string, std::string>, HomObject> params;
};

inline ValidationReport validate_descriptor(const StratifiedSpaceDescriptor& d) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  std::map<std::string, int> dim_of;
  for (const auto& f : d.faces) {
    if (f.dim < 0) note("face '" + f.id + "' has negative dimension");
    if (!dim_of.emplace(f.id, f.dim).second) note("duplicate face id '" + f.id + "'");
  }

  std::map<std::pair<std::string, std::string>, bool> rel;
  for (const auto& [lo, hi] : d.order) {
    if (!dim_of.count(lo) || !dim_of.count(hi)) {
      note("order pair ('" + lo + "','" + hi + "') references an unknown face");
      continue;
    }
    if (lo == hi) {
      note("order is not irreflexive at '" + lo + "'");
      continue;
    }
    if (dim_of[lo] >= dim_of[hi])
      note("order pair ('" + lo + "','" + hi + "') does not increase dimension");
    rel[{lo, hi}] = true;
  }
  for (const auto& [ab, _] : rel)
    for (const auto& [bc, _2] : rel)
      if (ab.second == bc.first && !rel.count({ab.first, bc.second}))
        note("order is not transitive: ('" + ab.first + "','" + ab.second + "','" + bc.second +
             "')");

  for (const auto& [pair, h] : d.params) {
    if (!rel.count(pair)) {
      note("parameter space on ('" + pair.first + "','" + pair.second +
           "') without an order pair");
      continue;
    }
    if (is_empty(h) || !std::holds_alternative<CwHom>(h))
      note("parameter space on ('" + pair.first + "','" + pair.second +
           "') must be a nonempty CW complex");
  }
  for (const auto& [pair, _] : rel)
    if (!d.params.count(pair))
      note("order pair ('" + pair.first + "','" + pair.second + "') has no parameter space");

  return report;
}

// The face category: faces as objects, parameter spaces as homs. Acyclic by
// construction when the descriptor is valid.
inline AcyclicTopCategory face_category(const StratifiedSpaceDescriptor& d) {
  const auto report = validate_descriptor(d);
  if (!report.ok()) throw InvalidDescriptor(report.violations.front());
  std::vector<std::string> objects;
  for (const auto& f : d.faces) objects.push_back(f.id);
  return assemble_acyclic(objects, d.params);
}

inline Rational chi_stratified(const StratifiedSpaceDescriptor& d) {
  return chain_chi(face_category(d));
}

// The alternating sum of cell counts per dimension. For non-closed cells
// this is generally not the Euler characteristic of the space.
inline Rational naive_cell_sum(const StratifiedSpaceDescriptor& d) {
  Rational total = 0;
  for (const auto& f : d.faces) total += f.dim % 2 == 0 ? 1 : -1;
  return total;
}

// Minimal census of the k-sphere: two points for S^0, otherwise one 0-cell
// and one k-cell.
inline HomObject sphere_census(int k) {
  if (k == 0) return cw_hom({{Int(1)}, {Int(1)}});
  CellVector census(static_cast<std::size_t>(k) + 1, Int(0));
  census[0] = 1;
  census[k] = 1;
  return cw_hom({census});
}

// Complex projective n-space with its minimal cell decomposition: one cell in
// each even dimension, circle parameter spaces everywhere. All off-diagonal
// characteristics vanish, so the similarity matrix is the identity.
inline StratifiedSpaceDescriptor gen_cpn(int n) {
  if (n < 0) throw InvalidDescriptor("negative dimension");
  StratifiedSpaceDescriptor d;
  auto face = [](int i) { return "e" + std::to_string(2 * i); };
  for (int i = 0; i <= n; ++i) d.faces.push_back({face(i), 2 * i});
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      d.order.emplace_back(face(i), face(j));
      d.params[{face(i), face(j)}] = sphere_census(1);
    }
  return d;
}

// The product of an n-sphere and an m-sphere with one point removed: an
// n-cell and an m-cell glued into an (n+m)-cell along sphere parameter
// spaces. The face with parameter space S^{n-1} is listed first.
inline StratifiedSpaceDescriptor gen_sphere_product_minus_point(int n, int m) {
  if (n < 1 || m < 1) throw InvalidDescriptor("sphere dimensions must be positive");
  StratifiedSpaceDescriptor d;
  d.faces.push_back({"em", m});
  d.faces.push_back({"en", n});
  d.faces.push_back({"top", n + m});
  d.order.emplace_back("em", "top");
  d.order.emplace_back("en", "top");
  d.params[{"em", "top"}] = sphere_census(n - 1);
  d.params[{"en", "top"}] = sphere_census(m - 1);
  return d;
}

// The half-open interval: a 1-cell with only one endpoint attached.
inline StratifiedSpaceDescriptor gen_half_open_interval() {
  StratifiedSpaceDescriptor d;
  d.faces.push_back({"v", 0});
  d.faces.push_back({"e", 1});
  d.order.emplace_back("v", "e");
  d.params[{"v", "e"}] = point_hom();
  return d;
}

// The n-simplex as a closed regular complex: faces are the nonempty vertex
// subsets, every parameter space a point.
inline StratifiedSpaceDescriptor gen_simplex(int n) {
  if (n < 0) throw InvalidDescriptor("negative dimension");
  const int vertices = n + 1;
  const unsigned total = 1u << vertices;
  auto face_id = [&](unsigned mask) {
    std::string id;
    for (int v = 0; v < vertices; ++v)
      if (mask & (1u << v)) {
        if (!id.empty()) id += '_';
        id += std::to_string(v);
      }
    return id;
  };
  StratifiedSpaceDescriptor d;
  for (unsigned mask = 1; mask < total; ++mask)
    d.faces.push_back({face_id(mask), __builtin_popcount(mask) - 1});
  for (unsigned lo = 1; lo < total; ++lo)
    for (unsigned hi = 1; hi < total; ++hi) {
      if (lo == hi || (lo & hi) != lo) continue;  // lo must be a proper subset
      d.order.emplace_back(face_id(lo), face_id(hi));
      d.params[{face_id(lo), face_id(hi)}] = point_hom();
    }
  return d;
}

}  // namespace eulercat
