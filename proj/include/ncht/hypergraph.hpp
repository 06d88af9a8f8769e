#pragma once

// Hyperforests on the vertices 1..n+1 of a convex polygon, labeled clockwise.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncht/error.hpp"
#include "ncht/permutation.hpp"

namespace ncht {

inline constexpr int kMaxVertices = 32;

// A set of at least two polygon vertices, stored as a bitmask (bit v-1).
class Hyperedge {
public:
  using Mask = std::uint32_t;

  Hyperedge() = default;

  static Hyperedge from_mask(Mask mask) {
    if (std::popcount(mask) < 2) throw InvalidArgument("a hyperedge needs at least 2 vertices");
    Hyperedge e;
    e.mask_ = mask;
    return e;
  }

  static Hyperedge of(std::span<const int> vertices) {
    Mask m = 0;
    for (int v : vertices) {
      if (v < 1 || v > kMaxVertices) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
      if (m & bit(v)) throw InvalidArgument("repeated vertex " + std::to_string(v) + " in hyperedge");
      m |= bit(v);
    }
    return from_mask(m);
  }

  static Hyperedge of(std::initializer_list<int> vertices) {
    return of(std::span<const int>(vertices.begin(), vertices.size()));
  }

  static constexpr Mask bit(int v) { return Mask{1} << (v - 1); }

  Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int v) const { return (mask_ & bit(v)) != 0; }
  int min_vertex() const { return std::countr_zero(mask_) + 1; }
  int max_vertex() const { return kMaxVertices - std::countl_zero(mask_); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  int shared_count(const Hyperedge& other) const { return std::popcount(mask_ & other.mask_); }

  // Lexicographic order on the sorted vertex lists.
  friend std::strong_ordering operator<=>(const Hyperedge& a, const Hyperedge& b) {
    Mask x = a.mask_, y = b.mask_;
    while (x && y) {
      int vx = std::countr_zero(x), vy = std::countr_zero(y);
      if (vx != vy) return vx <=> vy;
      x &= x - 1;
      y &= y - 1;
    }
    return (x != 0) <=> (y != 0);
  }
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const Hyperedge& e) { return os << e.to_string(); }

private:
  Mask mask_ = 0;
};

namespace detail {

// Every element of b \ a lies in one gap between cyclically consecutive
// elements of a.
inline bool in_single_gap(Hyperedge::Mask a, Hyperedge::Mask b, int n_plus_1) {
  Hyperedge::Mask rest = b & ~a;
  if (!rest) return true;
  int start = std::countr_zero(a) + 1;
  int gap = -1;
  int current = 0;
  for (int step = 1; step <= n_plus_1; ++step) {
    int v = (start - 1 + step) % n_plus_1 + 1;
    if (a & Hyperedge::bit(v)) {
      ++current;
    } else if (rest & Hyperedge::bit(v)) {
      if (gap == -1) gap = current;
      else if (gap != current) return false;
    }
  }
  return true;
}

}  // namespace detail

// Two vertex subsets of the polygon are weakly noncrossing when they share at
// most one vertex and each lies, apart from that vertex, in a single gap of
// the other. Both directions matter once a vertex is shared: the chord
// {1,3} fits in a gap of {1,2,4} but not conversely.
inline bool weakly_noncrossing(Hyperedge::Mask a, Hyperedge::Mask b, int n_plus_1) {
  if (std::popcount(a & b) > 1) return false;
  return detail::in_single_gap(a, b, n_plus_1) && detail::in_single_gap(b, a, n_plus_1);
}

class Hyperforest {
public:
  Hyperforest() = default;

  // Validates weak disjointness and acyclicity, then sorts the hyperedges.
  Hyperforest(int n_plus_1, std::vector<Hyperedge> edges) : n_(n_plus_1), edges_(std::move(edges)) {
    if (n_ < 1 || n_ > kMaxVertices) throw InvalidArgument("vertex count " + std::to_string(n_) + " out of range");
    const Hyperedge::Mask all = n_ == 32 ? ~Hyperedge::Mask{0} : (Hyperedge::Mask{1} << n_) - 1;
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].size() < 2) throw InvalidArgument("a hyperedge needs at least 2 vertices");
      if (edges_[i].mask() & ~all) throw InvalidArgument("hyperedge " + edges_[i].to_string() + " uses a vertex beyond " + std::to_string(n_));
      if (i && edges_[i] == edges_[i - 1]) throw InvalidArgument("duplicate hyperedge " + edges_[i].to_string());
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (std::size_t j = i + 1; j < edges_.size(); ++j)
        if (edges_[i].shared_count(edges_[j]) > 1)
          throw InvalidArgument("hyperedges " + edges_[i].to_string() + " and " + edges_[j].to_string() + " share more than one vertex");
    std::vector<int> parent(n_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Hyperedge& e : edges_) {
      auto vs = e.vertices();
      std::vector<int> roots;
      for (int v : vs) roots.push_back(find(v));
      std::sort(roots.begin(), roots.end());
      if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw InvalidArgument("hyperedge " + e.to_string() + " closes a cycle");
      for (int r : roots) parent[r] = roots.front();
    }
  }

  Hyperforest(int n_plus_1, std::initializer_list<std::initializer_list<int>> edges)
      : Hyperforest(n_plus_1, to_edges(edges)) {}

  static Hyperforest trivial(int n_plus_1) { return Hyperforest(n_plus_1, std::vector<Hyperedge>{}); }

  // The single hyperedge containing every vertex.
  static Hyperforest coxeter(int n_plus_1) {
    std::vector<int> all(n_plus_1);
    std::iota(all.begin(), all.end(), 1);
    return Hyperforest(n_plus_1, {Hyperedge::of(all)});
  }

  int n_plus_1() const { return n_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Hyperedge& edge(int i) const { return edges_[i]; }

  std::optional<int> index_of(const Hyperedge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  int degree(int v) const {
    int d = 0;
    for (const Hyperedge& e : edges_) d += e.contains(v);
    return d;
  }

  // Component label (smallest vertex) of every vertex, indexed 1..n+1.
  std::vector<int> component_labels() const {
    std::vector<int> parent(n_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Hyperedge& e : edges_) {
      int r = find(e.min_vertex());
      for (int v : e.vertices()) {
        int s = find(v);
        if (s < r) std::swap(r, s);
        parent[s] = r;
      }
    }
    std::vector<int> label(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) label[v] = find(v);
    return label;
  }

  int component_count() const {
    auto label = component_labels();
    int count = 0;
    for (int v = 1; v <= n_; ++v) count += label[v] == v;
    return count;
  }

  friend bool operator==(const Hyperforest&, const Hyperforest&) = default;
  friend std::strong_ordering operator<=>(const Hyperforest& a, const Hyperforest& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) s += ' ';
      s += edges_[i].to_string();
    }
    return s + "]/" + std::to_string(n_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Hyperforest& h) { return os << h.to_string(); }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const Hyperedge& e : edges_) h = h * 0x9E3779B97F4A7C15ull ^ e.mask();
    return h;
  }

private:
  static std::vector<Hyperedge> to_edges(std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<Hyperedge> out;
    for (auto e : edges) out.push_back(Hyperedge::of(e));
    return out;
  }

  int n_ = 0;
  std::vector<Hyperedge> edges_;
};

// Connected; equivalently sum(size(e) - 1) = |V| - 1 for a hyperforest.
inline bool is_hypertree(const Hyperforest& h) {
  int excess = 0;
  for (const Hyperedge& e : h.edges()) excess += e.size() - 1;
  bool connected = h.component_count() == 1;
  if (connected != (excess == h.n_plus_1() - 1))
    throw std::logic_error("hyperforest connectivity disagrees with the hyperedge size count");
  return connected;
}

// 2|V| - |E| - 2|C|.
inline int height(const Hyperforest& h) {
  return 2 * h.n_plus_1() - h.edge_count() - 2 * h.component_count();
}

// sum_v (deg(v) - 1) = |E| - 1, meaningful for hypertrees.
inline bool excess_degree_identity(const Hyperforest& h) {
  int excess = 0;
  for (int v = 1; v <= h.n_plus_1(); ++v) excess += h.degree(v) - 1;
  return excess == h.edge_count() - 1;
}

inline bool is_noncrossing(const Hyperforest& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!weakly_noncrossing(es[i].mask(), es[j].mask(), h.n_plus_1())) return false;
  return true;
}

inline bool is_noncrossing_hypertree(const Hyperforest& h) { return is_noncrossing(h) && is_hypertree(h); }

inline bool is_tree(const Hyperforest& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](const Hyperedge& e) { return e.size() == 2; }) &&
         is_hypertree(h);
}

// The partition whose blocks are the connected components (singletons dropped).
inline Hyperforest partition_closure(const Hyperforest& h) {
  auto label = h.component_labels();
  std::vector<Hyperedge::Mask> blocks(h.n_plus_1() + 1, 0);
  for (int v = 1; v <= h.n_plus_1(); ++v) blocks[label[v]] |= Hyperedge::bit(v);
  std::vector<Hyperedge> out;
  for (Hyperedge::Mask m : blocks)
    if (std::popcount(m) >= 2) out.push_back(Hyperedge::from_mask(m));
  return Hyperforest(h.n_plus_1(), std::move(out));
}

// Product of the increasing cycles of a hyperforest whose hyperedges are
// pairwise disjoint (a partition).
inline Permutation partition_permutation(const Hyperforest& partition) {
  std::vector<Permutation::Cycle> cycles;
  for (const Hyperedge& e : partition.edges()) cycles.push_back(e.vertices());
  return Permutation::from_cycles(partition.n_plus_1(), cycles);
}

// The noncrossing permutation of a noncrossing hyperforest.
inline Permutation noncrossing_permutation(const Hyperforest& h) { return partition_permutation(partition_closure(h)); }

inline Hyperforest partition_of_permutation(const Permutation& p) {
  std::vector<Hyperedge> blocks;
  for (const auto& c : p.cycles()) blocks.push_back(Hyperedge::of(c));
  return Hyperforest(p.size(), std::move(blocks));
}

// Indices of the hyperedges at v, ordered as met when scanning the polygon
// clockwise from v+1 (left to right when standing at v facing inward).
inline std::vector<int> local_order(const Hyperforest& h, int v) {
  const int size = h.n_plus_1();
  std::vector<std::pair<int, int>> keyed;
  for (int i = 0; i < h.edge_count(); ++i) {
    const Hyperedge& e = h.edge(i);
    if (!e.contains(v)) continue;
    int first = size;
    for (int u : e.vertices())
      if (u != v) first = std::min(first, ((u - v - 1) % size + size) % size);
    keyed.emplace_back(first, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto [key, i] : keyed) out.push_back(i);
  return out;
}

// Partial order on the hyperedges of a noncrossing hyperforest generated by
// the local orders at every vertex. Elements are indices into edges().
class HyperedgePoset {
public:
  struct Cover {
    int lower;
    int upper;
    int vertex;  // the shared vertex
    friend bool operator==(const Cover&, const Cover&) = default;
    friend auto operator<=>(const Cover&, const Cover&) = default;
  };

  explicit HyperedgePoset(const Hyperforest& h) : size_(h.edge_count()) {
    if (!is_noncrossing(h)) throw InvalidArgument("hyperedge posets need a noncrossing hyperforest");
    for (int v = 1; v <= h.n_plus_1(); ++v) {
      auto order = local_order(h, v);
      for (std::size_t i = 1; i < order.size(); ++i) covers_.push_back({order[i - 1], order[i], v});
    }
    std::sort(covers_.begin(), covers_.end());
    below_.assign(size_, std::vector<bool>(size_, false));
    up_.assign(size_, {});
    down_.assign(size_, {});
    for (const Cover& c : covers_) {
      up_[c.lower].push_back(c.upper);
      down_[c.upper].push_back(c.lower);
    }
    for (int i = 0; i < size_; ++i) {
      std::vector<int> stack(up_[i].begin(), up_[i].end());
      while (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        if (below_[i][j]) continue;
        below_[i][j] = true;
        stack.insert(stack.end(), up_[j].begin(), up_[j].end());
      }
    }
    // Hasse diagram must be a forest whose edges are exactly the local covers.
    std::vector<int> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Cover& c : covers_) {
      int a = find(c.lower), b = find(c.upper);
      if (a == b) throw std::logic_error("hyperedge poset Hasse diagram has a cycle");
      parent[a] = b;
    }
  }

  int size() const { return size_; }
  const std::vector<Cover>& covers() const { return covers_; }

  // Strictly below.
  bool less(int a, int b) const { return below_[a][b]; }
  bool comparable(int a, int b) const { return a == b || below_[a][b] || below_[b][a]; }

  bool is_cover(int a, int b) const {
    return std::any_of(covers_.begin(), covers_.end(), [&](const Cover& c) { return c.lower == a && c.upper == b; });
  }

  const std::vector<int>& upper_covers(int a) const { return up_[a]; }
  const std::vector<int>& lower_covers(int a) const { return down_[a]; }

  bool is_minimal(int a) const { return down_[a].empty(); }
  bool is_maximal(int a) const { return up_[a].empty(); }

  bool is_total_order() const {
    for (int a = 0; a < size_; ++a)
      for (int b = a + 1; b < size_; ++b)
        if (!comparable(a, b)) return false;
    return true;
  }

  // Every element is minimal or maximal.
  bool is_bipartite_height_two() const {
    for (int a = 0; a < size_; ++a)
      if (!is_minimal(a) && !is_maximal(a)) return false;
    return true;
  }

  // A strict order (sequence of indices) respecting the poset.
  bool is_linear_extension(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != size_) return false;
    std::vector<int> pos(size_, -1);
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (order[p] < 0 || order[p] >= size_ || pos[order[p]] != -1) return false;
      pos[order[p]] = static_cast<int>(p);
    }
    return std::all_of(covers_.begin(), covers_.end(), [&](const Cover& c) { return pos[c.lower] < pos[c.upper]; });
  }

  // All linear extensions in lexicographic order of index sequences.
  std::vector<std::vector<int>> linear_extensions() const {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<int> pending(size_);
    for (int a = 0; a < size_; ++a) pending[a] = static_cast<int>(down_[a].size());
    std::vector<bool> used(size_, false);
    extend(current, pending, used, out);
    return out;
  }

  std::vector<int> first_linear_extension() const {
    std::vector<int> out;
    std::vector<int> pending(size_);
    for (int a = 0; a < size_; ++a) pending[a] = static_cast<int>(down_[a].size());
    std::vector<bool> used(size_, false);
    for (int step = 0; step < size_; ++step) {
      for (int a = 0; a < size_; ++a) {
        if (used[a] || pending[a]) continue;
        used[a] = true;
        out.push_back(a);
        for (int b : up_[a]) --pending[b];
        break;
      }
    }
    return out;
  }

  // Counted over down-sets; fine for the poset sizes met at desk scale.
  std::uint64_t count_linear_extensions() const {
    if (size_ > 30) throw CapExceeded("linear extension count limited to 30 elements");
    std::vector<std::uint32_t> below_mask(size_, 0);
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        if (below_[b][a]) below_mask[a] |= std::uint32_t{1} << b;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> layer{{0u, 1u}};
    for (int step = 0; step < size_; ++step) {
      std::vector<std::pair<std::uint32_t, std::uint64_t>> next;
      for (auto [set, ways] : layer)
        for (int a = 0; a < size_; ++a)
          if (!(set >> a & 1u) && (below_mask[a] & ~set) == 0) next.emplace_back(set | (std::uint32_t{1} << a), ways);
      std::sort(next.begin(), next.end());
      layer.clear();
      for (auto& [set, ways] : next) {
        if (!layer.empty() && layer.back().first == set) layer.back().second += ways;
        else layer.emplace_back(set, ways);
      }
    }
    return layer.empty() ? 1 : layer.front().second;
  }

private:
  void extend(std::vector<int>& current, std::vector<int>& pending, std::vector<bool>& used,
              std::vector<std::vector<int>>& out) const {
    if (static_cast<int>(current.size()) == size_) {
      out.push_back(current);
      return;
    }
    for (int a = 0; a < size_; ++a) {
      if (used[a] || pending[a]) continue;
      used[a] = true;
      current.push_back(a);
      for (int b : up_[a]) --pending[b];
      extend(current, pending, used, out);
      for (int b : up_[a]) ++pending[b];
      current.pop_back();
      used[a] = false;
    }
  }

  int size_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::vector<int>> up_, down_;
};

inline HyperedgePoset hyperedge_poset(const Hyperforest& h) { return HyperedgePoset(h); }

// Replaces two hyperedges sharing exactly one vertex by their union. With
// require_noncrossing the pair must be a cover in the hyperedge poset, which
// is exactly when the result stays noncrossing.
inline Hyperforest merge(const Hyperforest& h, const Hyperedge& a, const Hyperedge& b, bool require_noncrossing = false) {
  auto ia = h.index_of(a), ib = h.index_of(b);
  if (!ia || !ib) throw InvalidArgument("merge: hyperedge not present");
  if (a.shared_count(b) != 1) throw InvalidArgument("merge: hyperedges must share exactly one vertex");
  if (require_noncrossing) {
    HyperedgePoset poset(h);
    if (!poset.is_cover(*ia, *ib) && !poset.is_cover(*ib, *ia))
      throw InvalidArgument("merge: " + a.to_string() + " and " + b.to_string() + " are not adjacent in a local order");
  }
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : h.edges())
    if (e != a && e != b) edges.push_back(e);
  edges.push_back(Hyperedge::from_mask(a.mask() | b.mask()));
  return Hyperforest(h.n_plus_1(), std::move(edges));
}

// Inverse of merge: replaces `whole` by two parts meeting in one vertex.
inline Hyperforest split(const Hyperforest& h, const Hyperedge& whole, const Hyperedge& a, const Hyperedge& b) {
  if (!h.index_of(whole)) throw InvalidArgument("split: hyperedge not present");
  if (a.shared_count(b) != 1 || (a.mask() | b.mask()) != whole.mask())
    throw InvalidArgument("split: parts must cover the hyperedge and meet in exactly one vertex");
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : h.edges())
    if (e != whole) edges.push_back(e);
  edges.push_back(a);
  edges.push_back(b);
  return Hyperforest(h.n_plus_1(), std::move(edges));
}

// Dihedral relabelings of the polygon.
inline Hyperforest relabel(const Hyperforest& h, const std::vector<int>& image /* 1-based, size n+2 */) {
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : h.edges()) {
    Hyperedge::Mask m = 0;
    for (int v : e.vertices()) m |= Hyperedge::bit(image[v]);
    edges.push_back(Hyperedge::from_mask(m));
  }
  return Hyperforest(h.n_plus_1(), std::move(edges));
}

// Rotation v -> v + steps (mod n+1).
inline Hyperforest rotate(const Hyperforest& h, int steps) {
  const int size = h.n_plus_1();
  std::vector<int> image(size + 1);
  for (int v = 1; v <= size; ++v) image[v] = ((v - 1 + steps) % size + size) % size + 1;
  return relabel(h, image);
}

}  // namespace ncht

template <>
struct std::hash<ncht::Hyperforest> {
  std::size_t operator()(const ncht::Hyperforest& h) const noexcept { return h.hash(); }
};
