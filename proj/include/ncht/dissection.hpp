#pragma once

// Dissections of the 2(n+1)-gon whose black vertices are the polygon
// vertices 1..n+1 and whose white vertices are the edge midpoints. A
// diagonal joins black vertex `black` to the midpoint following vertex
// `gap` (between gap and gap+1, cyclically).

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"

namespace ncht {

struct Diagonal {
  int black = 0;
  int gap = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Position on the 2(n+1)-gon, counted clockwise from vertex 1.
inline int black_position(int v) { return 2 * (v - 1); }
inline int white_position(int gap) { return 2 * (gap - 1) + 1; }

inline bool is_valid_diagonal(const Diagonal& d, int n_plus_1) {
  if (d.black < 1 || d.black > n_plus_1 || d.gap < 1 || d.gap > n_plus_1) return false;
  int before = (d.black + n_plus_1 - 2) % n_plus_1 + 1;
  return d.gap != d.black && d.gap != before;
}

inline bool diagonals_cross(const Diagonal& a, const Diagonal& b, int n_plus_1) {
  const int m = 2 * n_plus_1;
  int p = black_position(a.black), q = white_position(a.gap);
  int r = black_position(b.black), s = white_position(b.gap);
  if (p == r || p == s || q == r || q == s) return false;
  auto inside = [&](int x) { return ((x - p) % m + m) % m < ((q - p) % m + m) % m; };
  return inside(r) != inside(s);
}

inline bool compatible(const Diagonal& a, const Diagonal& b, int n_plus_1) {
  return a != b && !diagonals_cross(a, b, n_plus_1);
}

struct Dissection {
  int n_plus_1 = 0;
  std::vector<Diagonal> diagonals;  // sorted

  int polygon_size() const { return 2 * n_plus_1; }
  friend bool operator==(const Dissection&, const Dissection&) = default;
};

inline Dissection make_dissection(int n_plus_1, std::vector<Diagonal> diagonals) {
  if (n_plus_1 < 2 || n_plus_1 > kMaxVertices) throw InvalidArgument("vertex count out of range");
  std::sort(diagonals.begin(), diagonals.end());
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    const Diagonal& d = diagonals[i];
    if (!is_valid_diagonal(d, n_plus_1))
      throw InvalidArgument("(" + std::to_string(d.black) + "," + std::to_string(d.gap) + ") is not a diagonal between a black and a white vertex");
    for (std::size_t j = 0; j < i; ++j)
      if (!compatible(diagonals[j], d, n_plus_1)) throw InvalidArgument("diagonals cross or repeat");
  }
  return Dissection{n_plus_1, std::move(diagonals)};
}

// Lower and upper hyperedge of the basic hypertree cut out by one diagonal.
inline std::pair<Hyperedge, Hyperedge> diagonal_sides(const Diagonal& d, int n_plus_1) {
  Hyperedge::Mask lower = 0, upper = 0;
  for (int v = d.black;; v = v % n_plus_1 + 1) {
    lower |= Hyperedge::bit(v);
    if (v == d.gap) break;
  }
  for (int v = d.gap % n_plus_1 + 1;; v = v % n_plus_1 + 1) {
    upper |= Hyperedge::bit(v);
    if (v == d.black) break;
  }
  return {Hyperedge::from_mask(lower), Hyperedge::from_mask(upper)};
}

// The noncrossing hypertree with two hyperedges determined by a diagonal.
inline Hyperforest basic_hypertree(const Diagonal& d, int n_plus_1) {
  if (!is_valid_diagonal(d, n_plus_1)) throw InvalidArgument("not a diagonal");
  auto [lower, upper] = diagonal_sides(d, n_plus_1);
  return Hyperforest(n_plus_1, {lower, upper});
}

// Every diagonal of the 2(n+1)-gon, in sorted order.
inline std::vector<Diagonal> all_diagonals(int n_plus_1) {
  std::vector<Diagonal> out;
  for (int b = 1; b <= n_plus_1; ++b)
    for (int g = 1; g <= n_plus_1; ++g)
      if (is_valid_diagonal({b, g}, n_plus_1)) out.push_back({b, g});
  return out;
}

// Cutting along each diagonal; the black vertices of each region form a
// hyperedge.
inline Hyperforest dissection_to_hypertree(const Dissection& d) {
  const int m = d.polygon_size();
  std::vector<std::vector<int>> regions(1);
  regions[0].resize(m);
  std::iota(regions[0].begin(), regions[0].end(), 0);
  for (const Diagonal& diag : d.diagonals) {
    int p = black_position(diag.black), q = white_position(diag.gap);
    bool done = false;
    for (auto& region : regions) {
      auto ip = std::find(region.begin(), region.end(), p);
      auto iq = std::find(region.begin(), region.end(), q);
      if (ip == region.end() || iq == region.end()) continue;
      std::size_t a = ip - region.begin(), b = iq - region.begin();
      if (a > b) std::swap(a, b);
      std::vector<int> inner(region.begin() + a, region.begin() + b + 1);
      std::vector<int> outer(region.begin() + b, region.end());
      outer.insert(outer.end(), region.begin(), region.begin() + a + 1);
      region = std::move(inner);
      regions.push_back(std::move(outer));
      done = true;
      break;
    }
    if (!done) throw InvalidArgument("diagonals cross");
  }
  std::vector<Hyperedge> edges;
  for (const auto& region : regions) {
    Hyperedge::Mask mask = 0;
    for (int pos : region)
      if (pos % 2 == 0) mask |= Hyperedge::bit(pos / 2 + 1);
    edges.push_back(Hyperedge::from_mask(mask));
  }
  return Hyperforest(d.n_plus_1, std::move(edges));
}

// One diagonal per covering relation of the hyperedge poset: it leaves the
// shared vertex and ends at the only boundary edge lying in neither half of
// the tree cut along that cover.
inline Dissection hypertree_to_dissection(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  const int size = t.n_plus_1();
  HyperedgePoset poset(t);
  std::vector<Diagonal> diagonals;
  for (const auto& cover : poset.covers()) {
    // Side of the Hasse tree containing `cover.lower` once the cover is cut.
    std::vector<bool> side(t.edge_count(), false);
    std::vector<int> stack{cover.lower};
    side[cover.lower] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      auto visit = [&](int y) {
        if (side[y] || (x == cover.lower && y == cover.upper)) return;
        side[y] = true;
        stack.push_back(y);
      };
      for (int y : poset.upper_covers(x)) visit(y);
      for (int y : poset.lower_covers(x)) visit(y);
    }
    Hyperedge::Mask low = 0, high = 0;
    for (int i = 0; i < t.edge_count(); ++i) (side[i] ? low : high) |= t.edge(i).mask();
    int gap = 0;
    for (int i = 1; i <= size; ++i) {
      Hyperedge::Mask pair = Hyperedge::bit(i) | Hyperedge::bit(i % size + 1);
      if ((low & pair) != pair && (high & pair) != pair) {
        if (gap) throw std::logic_error("two free boundary edges at a cover");
        gap = i;
      }
    }
    if (!gap) throw std::logic_error("no free boundary edge at a cover");
    diagonals.push_back({cover.vertex, gap});
  }
  return make_dissection(size, std::move(diagonals));
}

}  // namespace ncht
