#pragma once

// Spheres, tree simplices and the noncrossing hypertree complex viewed
// inside the noncrossing partition link.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ncht/enumerate.hpp"
#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"
#include "ncht/lattice.hpp"
#include "ncht/orderings.hpp"

namespace ncht {

// Full chain of noncrossing permutations, identity first and c last.
using Chain = std::vector<Permutation>;

inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// (1/(2n+1)) binom(3n, n): noncrossing trees on n+1 vertices.
inline std::uint64_t fuss_catalan(int n) { return binomial(3 * n, n) / static_cast<std::uint64_t>(2 * n + 1); }

struct SphereView {
  Hyperforest label;
  int edge_count = 0;
  // One entry per ordering of the hyperedges (all k! of them, which give
  // pairwise distinct chains); orderings[i] produces chambers[i].
  std::vector<std::vector<int>> orderings;
  std::vector<Chain> chambers;
  // Tree chamber (the noncrossing hypertree under the standardized name) ->
  // indices of the partition chambers it contains.
  std::map<Hyperforest, std::vector<int>> tree_chambers;

  std::size_t chamber_count() const { return chambers.size(); }
  std::size_t tree_chamber_count() const { return tree_chambers.size(); }

  std::set<Hyperforest> tree_labels() const {
    std::set<Hyperforest> out;
    for (const auto& [tree, members] : tree_chambers) out.insert(tree);
    return out;
  }
};

inline SphereView sphere_of(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("sphere_of expects a noncrossing hypertree");
  if (t.edge_count() > 9) throw CapExceeded("spheres are enumerated for at most 9 hyperedges");
  SphereView s;
  s.label = t;
  s.edge_count = t.edge_count();
  std::vector<int> order(t.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::set<Chain> seen;
  do {
    OrderedHyperforest o(t, order);
    Chain chain = prefix_chain(o);
    if (!seen.insert(chain).second) throw std::logic_error("two orderings of a hypertree gave one chain");
    s.tree_chambers[standardize(o).base].push_back(static_cast<int>(s.chambers.size()));
    s.orderings.push_back(order);
    s.chambers.push_back(std::move(chain));
  } while (std::next_permutation(order.begin(), order.end()));
  return s;
}

// Hypertrees labeling the top-dimensional tree simplices of Sphere(t).
inline std::set<Hyperforest> tree_simplices_in(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  std::set<Hyperforest> out;
  std::vector<int> order(t.edge_count());
  std::iota(order.begin(), order.end(), 0);
  do {
    out.insert(standardize(OrderedHyperforest(t, order)).base);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Caches, per vertex count, the tree simplices of every sphere. Built once
// under a lock; lookups afterwards only read.
class SphereIndex {
public:
  static const SphereIndex& get(int n_plus_1) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SphereIndex>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n_plus_1];
    if (!slot) slot.reset(new SphereIndex(n_plus_1));
    return *slot;
  }

  int n_plus_1() const { return n_; }
  const std::vector<Hyperforest>& hypertrees() const { return hypertrees_; }

  const std::set<Hyperforest>& tree_simplices_in(const Hyperforest& t) const { return inside_.at(t); }
  const std::set<Hyperforest>& spheres_containing(const Hyperforest& t) const { return containing_.at(t); }

private:
  explicit SphereIndex(int n_plus_1) : n_(n_plus_1) {
    if (n_plus_1 > 8) throw CapExceeded("sphere index is built for at most 8 vertices");
    hypertrees_ = enumerate_nchypertrees(n_plus_1);
    for (const Hyperforest& t : hypertrees_) {
      inside_[t] = ncht::tree_simplices_in(t);
      containing_[t];
    }
    for (const Hyperforest& t : hypertrees_)
      for (const Hyperforest& u : inside_[t]) containing_[u].insert(t);
  }

  int n_;
  std::vector<Hyperforest> hypertrees_;
  std::map<Hyperforest, std::set<Hyperforest>> inside_, containing_;
};

// Hypertrees sigma with the same number of hyperedges whose sphere contains
// the tree simplex of t.
inline std::set<Hyperforest> spheres_containing(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  std::set<Hyperforest> out;
  for_each_nchypertree(t.n_plus_1(), t.edge_count(), [&](const Hyperforest& s, const Dissection&) {
    if (tree_simplices_in(s).count(t)) out.insert(s);
  });
  return out;
}

struct LinkSimplex {
  Chain chain;  // interior elements only, bottom and top dropped
  WeaklyOrderedHyperforest standard_name;

  friend bool operator==(const LinkSimplex&, const LinkSimplex&) = default;
};

// Weak linear extensions of the hyperedge poset, as level vectors.
inline std::vector<std::vector<int>> weak_proper_orderings(const Hyperforest& t) {
  HyperedgePoset poset(t);
  const int k = poset.size();
  std::vector<std::vector<int>> out;
  std::vector<int> levels(k, -1);
  std::function<void(int, int)> place = [&](int level, int placed) {
    if (placed == k) {
      out.push_back(levels);
      return;
    }
    std::vector<int> available;
    for (int a = 0; a < k; ++a) {
      if (levels[a] != -1) continue;
      bool ready = true;
      for (int b : poset.lower_covers(a))
        if (levels[b] == -1) ready = false;
      if (ready) available.push_back(a);
    }
    const int m = static_cast<int>(available.size());
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
      int count = 0;
      for (int i = 0; i < m; ++i)
        if (subset >> i & 1u) {
          levels[available[i]] = level;
          ++count;
        }
      place(level + 1, placed + count);
      for (int i = 0; i < m; ++i)
        if (subset >> i & 1u) levels[available[i]] = -1;
    }
  };
  place(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Simplices of the link whose standard name is a weak proper ordering of t;
// the strict orderings give the partition chambers inside Chamber(t).
inline std::vector<LinkSimplex> simplex_of(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  std::vector<LinkSimplex> out;
  for (auto& levels : weak_proper_orderings(t)) {
    WeaklyOrderedHyperforest w(t, levels);
    Chain chain = level_chain(w);
    Chain interior(chain.begin() + 1, chain.end() - 1);
    out.push_back({std::move(interior), std::move(w)});
  }
  return out;
}

struct FVector {
  int n_plus_1 = 0;
  std::vector<std::uint64_t> f;  // f[i + 1] = f_i, starting with f_{-1}
  std::int64_t reduced_euler = 0;
};

inline FVector f_vector(int n_plus_1) {
  auto counts = count_by_edges(n_plus_1);
  FVector fv;
  fv.n_plus_1 = n_plus_1;
  for (int k = 1; k < static_cast<int>(counts.size()); ++k) fv.f.push_back(counts[k]);
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < fv.f.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<std::int64_t>(fv.f[i]);
  fv.reduced_euler = chi;
  return fv;
}

struct AmalgamationCensus {
  int n_plus_1 = 0;
  std::uint64_t chains = 0;             // all simplices of the link, empty one included
  std::uint64_t partition_chambers = 0;
  // groups[k] = hypertrees with k hyperedges that occur as standard names.
  std::vector<std::uint64_t> groups;
  // Partition chambers grouped by the noncrossing tree they amalgamate into.
  std::map<Hyperforest, std::uint64_t> chambers_per_tree;
  // Simplices (all dimensions) grouped by the hypertree of their name.
  std::map<Hyperforest, std::uint64_t> simplices_per_hypertree;
};

// Groups every simplex of the link by the underlying hypertree of its
// standard name.
inline AmalgamationCensus amalgamate(int n_plus_1) {
  if (n_plus_1 > 7) throw CapExceeded("amalgamation enumerates every chain; at most 7 vertices");
  NCPartitionLattice lattice(n_plus_1);
  AmalgamationCensus census;
  census.n_plus_1 = n_plus_1;
  census.groups.assign(n_plus_1, 0);
  lattice.for_each_chain([&](const std::vector<int>& indices) {
    Chain chain = lattice.permutations_of(indices);
    WeaklyOrderedHyperforest name = standard_name(chain);
    ++census.chains;
    ++census.simplices_per_hypertree[name.base];
    if (static_cast<int>(indices.size()) == n_plus_1) {
      ++census.partition_chambers;
      ++census.chambers_per_tree[name.base];
    }
  });
  for (const auto& [h, count] : census.simplices_per_hypertree) ++census.groups[h.edge_count()];
  return census;
}

// Boundary edges {i, i+1} of the tree form one connected piece.
inline bool is_caterpillar(const Hyperforest& t) {
  if (!is_tree(t)) return false;
  const int size = t.n_plus_1();
  std::vector<int> present;
  for (int i = 1; i <= size; ++i) {
    Hyperedge::Mask pair = Hyperedge::bit(i) | Hyperedge::bit(i % size + 1);
    if (std::popcount(pair) == 2 && t.index_of(Hyperedge::from_mask(pair))) present.push_back(i);
  }
  if (present.empty()) return false;
  if (static_cast<int>(present.size()) >= size - 1) return true;
  // Present boundary edges form one arc iff exactly one of them is not
  // preceded (cyclically) by another present edge.
  int starts = 0;
  for (int i : present) {
    int prev = (i + size - 2) % size + 1;
    if (std::find(present.begin(), present.end(), prev) == present.end()) ++starts;
  }
  return starts == 1;
}

// Every hyperedge is minimal or maximal in the hyperedge poset.
inline bool is_min_max(const Hyperforest& t) { return HyperedgePoset(t).is_bipartite_height_two(); }

inline bool is_zigzag(const Hyperforest& t) { return is_tree(t) && is_min_max(t); }

struct ApartmentClass {
  bool cross_polytope = false;  // every hyperedge minimal or maximal
  bool caterpillar = false;     // trees whose boundary edges are connected
  bool total_order = false;
  int edge_count = 0;
  std::uint64_t tree_chamber_count = 0;
  std::uint64_t partition_chambers_in_chamber = 0;

  std::string name() const {
    if (cross_polytope && caterpillar) return "cross_polytope+caterpillar";
    if (cross_polytope) return "cross_polytope";
    if (caterpillar) return "caterpillar";
    return "other";
  }
};

inline ApartmentClass classify_apartment(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  HyperedgePoset poset(t);
  ApartmentClass c;
  c.edge_count = t.edge_count();
  c.cross_polytope = poset.is_bipartite_height_two();
  c.caterpillar = is_caterpillar(t);
  c.total_order = poset.is_total_order();
  c.tree_chamber_count = tree_simplices_in(t).size();
  c.partition_chambers_in_chamber = poset.count_linear_extensions();
  return c;
}

}  // namespace ncht
