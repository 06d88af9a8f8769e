#pragma once

// JSON and CSV forms of hypertrees, dissections, ordered hyperforests,
// factorizations and census tables.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "ncht/complex.hpp"
#include "ncht/dissection.hpp"
#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"
#include "ncht/orderings.hpp"
#include "ncht/permutation.hpp"

namespace ncht::io {

using nlohmann::json;

namespace detail {

inline int get_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidArgument(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

inline std::vector<Hyperedge> edges_from(const json& j) {
  if (!j.contains("edges") || !j.at("edges").is_array()) throw InvalidArgument("missing array field \"edges\"");
  std::vector<Hyperedge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array()) throw InvalidArgument("each hyperedge must be an array of vertices");
    std::vector<int> vs;
    for (const json& v : e) {
      if (!v.is_number_integer()) throw InvalidArgument("vertices must be integers");
      vs.push_back(v.get<int>());
    }
    edges.push_back(Hyperedge::of(vs));
  }
  return edges;
}

}  // namespace detail

// {"n": vertex count, "edges": [[...], ...]}
inline json to_json(const Hyperforest& h) {
  json edges = json::array();
  for (const Hyperedge& e : h.edges()) edges.push_back(e.vertices());
  return {{"n", h.n_plus_1()}, {"edges", edges}};
}

inline Hyperforest hyperforest_from_json(const json& j) {
  return Hyperforest(detail::get_int(j, "n"), detail::edges_from(j));
}

// {"k": vertex count, "diagonals": [[black, gap], ...]}
inline json to_json(const Dissection& d) {
  json diagonals = json::array();
  for (const Diagonal& g : d.diagonals) diagonals.push_back({g.black, g.gap});
  return {{"k", d.n_plus_1}, {"diagonals", diagonals}};
}

inline Dissection dissection_from_json(const json& j) {
  const int k = detail::get_int(j, "k");
  if (!j.contains("diagonals") || !j.at("diagonals").is_array()) throw InvalidArgument("missing array field \"diagonals\"");
  std::vector<Diagonal> ds;
  for (const json& d : j.at("diagonals")) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
      throw InvalidArgument("each diagonal must be a pair [black, gap]");
    ds.push_back({d[0].get<int>(), d[1].get<int>()});
  }
  return make_dissection(k, std::move(ds));
}

// Hypertree JSON with "edges" listed in order and "order" the positions of
// base.edges() in that list, so the edges read top to bottom as ordered.
inline json to_json(const OrderedHyperforest& o) {
  json edges = json::array();
  for (const Hyperedge& e : o.sequence()) edges.push_back(e.vertices());
  json order = json::array();
  for (std::size_t p = 0; p < o.order.size(); ++p) order.push_back(p);
  return {{"n", o.n_plus_1()}, {"edges", edges}, {"order", order}};
}

inline json to_json(const WeaklyOrderedHyperforest& w) {
  json j = to_json(w.base);
  j["levels"] = w.levels;
  return j;
}

// "order" lists edge indices (into "edges") from first to last; without it
// the edges are taken in the order given.
inline OrderedHyperforest ordered_from_json(const json& j) {
  const int size = detail::get_int(j, "n");
  auto edges = detail::edges_from(j);
  std::vector<Hyperedge> sequence;
  if (j.contains("order")) {
    const json& ord = j.at("order");
    if (!ord.is_array() || ord.size() != edges.size()) throw InvalidArgument("\"order\" must list every edge index once");
    std::vector<bool> used(edges.size(), false);
    for (const json& x : ord) {
      if (!x.is_number_integer()) throw InvalidArgument("\"order\" entries must be integers");
      int i = x.get<int>();
      if (i < 0 || i >= static_cast<int>(edges.size()) || used[i]) throw InvalidArgument("\"order\" must list every edge index once");
      used[i] = true;
      sequence.push_back(edges[i]);
    }
  } else {
    sequence = edges;
  }
  return OrderedHyperforest::from_sequence(size, sequence);
}

inline WeaklyOrderedHyperforest weakly_ordered_from_json(const json& j) {
  const int size = detail::get_int(j, "n");
  auto edges = detail::edges_from(j);
  if (!j.contains("levels") || !j.at("levels").is_array() || j.at("levels").size() != edges.size())
    throw InvalidArgument("\"levels\" must give one level per edge");
  Hyperforest h(size, edges);
  std::vector<int> levels(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!j.at("levels")[i].is_number_integer()) throw InvalidArgument("levels must be integers");
    levels[*h.index_of(edges[i])] = j.at("levels")[i].get<int>();
  }
  return WeaklyOrderedHyperforest(std::move(h), std::move(levels));
}

// A factorization is a list of cycle strings; the ground set is n.
inline json factorization_to_json(std::span<const Permutation> fs) {
  json out = json::array();
  for (const Permutation& p : fs) out.push_back(p.to_string());
  return out;
}

inline std::vector<Permutation> factorization_from_json(const json& j, int n_plus_1) {
  if (!j.is_array()) throw InvalidArgument("a factorization is a list of cycle strings");
  std::vector<Permutation> out;
  for (const json& s : j) {
    if (!s.is_string()) throw InvalidArgument("a factorization is a list of cycle strings");
    out.push_back(Permutation::parse(s.get<std::string>(), n_plus_1));
  }
  return out;
}

struct CensusRow {
  int n = 0;
  int dimension = 0;
  std::uint64_t count = 0;
};

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "n,dimension,count\n";
  for (const auto& r : rows) os << r.n << ',' << r.dimension << ',' << r.count << '\n';
  return os.str();
}

inline json census_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"n", r.n}, {"dimension", r.dimension}, {"count", r.count}});
  return out;
}

inline json sphere_report(const Hyperforest& t) {
  SphereView s = sphere_of(t);
  ApartmentClass c = classify_apartment(t);
  json labels = json::array();
  for (const Hyperforest& u : s.tree_labels()) labels.push_back(to_json(u)["edges"]);
  return {{"label", to_json(t)},
          {"chamber_count", s.chamber_count()},
          {"tree_chamber_count", s.tree_chamber_count()},
          {"classification", c.name()},
          {"partition_chambers_in_tree_chamber", c.partition_chambers_in_chamber},
          {"tree_chambers", labels}};
}

}  // namespace ncht::io
