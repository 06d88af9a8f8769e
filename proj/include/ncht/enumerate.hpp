#pragma once

// Enumeration of noncrossing hypertrees, trees and hyperforests.

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "ncht/dissection.hpp"
#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"

namespace ncht {

inline constexpr int kMaxEnumerationVertices = 16;

// The (n+1)(n-1) noncrossing hypertrees with two hyperedges.
inline std::vector<Hyperforest> enumerate_basic(int n_plus_1) {
  std::vector<Hyperforest> out;
  for (const Diagonal& d : all_diagonals(n_plus_1)) out.push_back(basic_hypertree(d, n_plus_1));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

using DiagonalSet = std::bitset<256>;

struct CompatibilityGraph {
  std::vector<Diagonal> diagonals;
  std::vector<DiagonalSet> neighbours;  // compatible diagonals with larger index
};

inline CompatibilityGraph compatibility_graph(int n_plus_1) {
  if (n_plus_1 < 2 || n_plus_1 > kMaxEnumerationVertices)
    throw CapExceeded("hypertree enumeration supports 2.." + std::to_string(kMaxEnumerationVertices) + " vertices");
  CompatibilityGraph g;
  g.diagonals = all_diagonals(n_plus_1);
  const std::size_t m = g.diagonals.size();
  g.neighbours.assign(m, {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (compatible(g.diagonals[i], g.diagonals[j], n_plus_1)) g.neighbours[i].set(j);
  return g;
}

// Visits every clique (including the empty one) exactly once, each with its
// members in increasing order. Only cliques of size <= max_size are visited.
template <class Visit>
void for_each_clique(const CompatibilityGraph& g, int max_size, std::vector<int>& clique, const DiagonalSet& candidates,
                     Visit& visit) {
  visit(clique);
  if (static_cast<int>(clique.size()) == max_size) return;
  for (std::size_t i = 0; i < g.diagonals.size(); ++i) {
    if (!candidates.test(i)) continue;
    clique.push_back(static_cast<int>(i));
    for_each_clique(g, max_size, clique, candidates & g.neighbours[i], visit);
    clique.pop_back();
  }
}

inline DiagonalSet all_of(std::size_t m) {
  DiagonalSet s;
  for (std::size_t i = 0; i < m; ++i) s.set(i);
  return s;
}

}  // namespace detail

// Calls visit(hypertree, dissection) for every noncrossing hypertree on
// n_plus_1 vertices, optionally only those with the given hyperedge count.
template <class Visit>
void for_each_nchypertree(int n_plus_1, std::optional<int> edge_count, Visit&& visit) {
  auto g = detail::compatibility_graph(n_plus_1);
  const int max_size = edge_count ? *edge_count - 1 : n_plus_1;
  if (edge_count && (*edge_count < 1 || *edge_count > n_plus_1 - 1)) return;
  std::vector<int> clique;
  auto on_clique = [&](const std::vector<int>& members) {
    if (edge_count && static_cast<int>(members.size()) != max_size) return;
    std::vector<Diagonal> ds;
    for (int i : members) ds.push_back(g.diagonals[i]);
    Dissection d{n_plus_1, std::move(ds)};
    visit(dissection_to_hypertree(d), d);
  };
  detail::for_each_clique(g, max_size, clique, detail::all_of(g.diagonals.size()), on_clique);
}

inline std::vector<Hyperforest> enumerate_nchypertrees(int n_plus_1, std::optional<int> edge_count = std::nullopt) {
  std::vector<Hyperforest> out;
  for_each_nchypertree(n_plus_1, edge_count, [&](Hyperforest h, const Dissection&) { out.push_back(std::move(h)); });
  std::sort(out.begin(), out.end());
  return out;
}

// counts[k] = number of noncrossing hypertrees with k hyperedges (k >= 1);
// counted as cliques without building the hypertrees.
inline std::vector<std::uint64_t> count_by_edges(int n_plus_1) {
  auto g = detail::compatibility_graph(n_plus_1);
  std::vector<std::uint64_t> counts(n_plus_1 + 1, 0);
  std::vector<int> clique;
  auto on_clique = [&](const std::vector<int>& members) { ++counts[members.size() + 1]; };
  detail::for_each_clique(g, n_plus_1, clique, detail::all_of(g.diagonals.size()), on_clique);
  counts.resize(n_plus_1);
  return counts;
}

// Noncrossing trees: hypertrees with n hyperedges, all of size 2.
inline std::vector<Hyperforest> enumerate_nctrees(int n_plus_1) {
  if (n_plus_1 == 1) return {Hyperforest::trivial(1)};
  return enumerate_nchypertrees(n_plus_1, n_plus_1 - 1);
}

// Every noncrossing hyperforest (including the empty one), by backtracking
// over candidate hyperedges. Exponential; meant for small vertex counts.
inline std::vector<Hyperforest> enumerate_nchyperforests(int n_plus_1) {
  if (n_plus_1 < 1 || n_plus_1 > 8) throw CapExceeded("hyperforest enumeration supports at most 8 vertices");
  std::vector<Hyperedge::Mask> candidates;
  for (Hyperedge::Mask m = 1; m < (Hyperedge::Mask{1} << n_plus_1); ++m)
    if (std::popcount(m) >= 2) candidates.push_back(m);
  std::vector<Hyperforest> out;
  std::vector<Hyperedge::Mask> chosen;
  std::vector<int> component(n_plus_1 + 1);
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    std::vector<Hyperedge> edges;
    for (auto m : chosen) edges.push_back(Hyperedge::from_mask(m));
    out.emplace_back(n_plus_1, std::move(edges));
    for (std::size_t i = start; i < candidates.size(); ++i) {
      Hyperedge::Mask m = candidates[i];
      bool ok = true;
      for (auto c : chosen)
        if (!weakly_noncrossing(c, m, n_plus_1)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // Acyclic iff the new hyperedge meets each component at most once.
      std::vector<int> seen;
      for (Hyperedge::Mask x = m; x && ok; x &= x - 1) {
        int c = component[std::countr_zero(x) + 1];
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) ok = false;
        seen.push_back(c);
      }
      if (!ok) continue;
      auto saved = component;
      int target = seen.front();
      for (int v = 1; v <= n_plus_1; ++v)
        if (std::find(seen.begin(), seen.end(), component[v]) != seen.end()) component[v] = target;
      chosen.push_back(m);
      extend(i + 1);
      chosen.pop_back();
      component = std::move(saved);
    }
  };
  std::iota(component.begin(), component.end(), 0);
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncht
