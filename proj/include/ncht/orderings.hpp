#pragma once

// Ordered hyperforests, reduced factorizations and standard names.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"
#include "ncht/permutation.hpp"

namespace ncht {

// A hyperforest with a strict order on its hyperedges. `order[p]` is the
// index (into base.edges()) of the hyperedge in position p.
struct OrderedHyperforest {
  Hyperforest base;
  std::vector<int> order;

  OrderedHyperforest() = default;

  OrderedHyperforest(Hyperforest h, std::vector<int> ord) : base(std::move(h)), order(std::move(ord)) {
    std::vector<int> check(order);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < static_cast<int>(check.size()); ++i)
      if (check[i] != i) throw InvalidArgument("order is not a permutation of the hyperedge indices");
    if (static_cast<int>(check.size()) != base.edge_count())
      throw InvalidArgument("order length differs from the number of hyperedges");
  }

  // Hyperedges listed in their intended order.
  static OrderedHyperforest from_sequence(int n_plus_1, const std::vector<Hyperedge>& sequence) {
    Hyperforest h(n_plus_1, sequence);
    std::vector<int> ord;
    for (const Hyperedge& e : sequence) ord.push_back(*h.index_of(e));
    return OrderedHyperforest(std::move(h), std::move(ord));
  }

  static OrderedHyperforest from_sequence(int n_plus_1, std::initializer_list<std::initializer_list<int>> sequence) {
    std::vector<Hyperedge> es;
    for (auto e : sequence) es.push_back(Hyperedge::of(e));
    return from_sequence(n_plus_1, es);
  }

  int n_plus_1() const { return base.n_plus_1(); }

  std::vector<Hyperedge> sequence() const {
    std::vector<Hyperedge> out;
    for (int i : order) out.push_back(base.edge(i));
    return out;
  }

  friend bool operator==(const OrderedHyperforest& a, const OrderedHyperforest& b) {
    return a.base == b.base && a.order == b.order;
  }
  friend auto operator<=>(const OrderedHyperforest& a, const OrderedHyperforest& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.order <=> b.order;
  }

  std::string to_string() const {
    std::string s;
    for (const Hyperedge& e : sequence()) s += e.to_string();
    return s.empty() ? "{}" : s;
  }
};

// A hyperforest with a weak order: hyperedge i sits at level levels[i].
// Levels are normalized to 0..L-1 so equal weak orders compare equal.
struct WeaklyOrderedHyperforest {
  Hyperforest base;
  std::vector<int> levels;

  WeaklyOrderedHyperforest() = default;

  WeaklyOrderedHyperforest(Hyperforest h, std::vector<int> lv) : base(std::move(h)), levels(std::move(lv)) {
    if (static_cast<int>(levels.size()) != base.edge_count())
      throw InvalidArgument("one level per hyperedge is required");
    std::vector<int> distinct(levels);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& l : levels) l = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin());
  }

  int level_count() const { return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end()) + 1; }

  std::vector<std::vector<int>> level_members() const {
    std::vector<std::vector<int>> out(level_count());
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) out[levels[i]].push_back(i);
    return out;
  }

  bool is_strict() const { return level_count() == base.edge_count(); }

  friend bool operator==(const WeaklyOrderedHyperforest&, const WeaklyOrderedHyperforest&) = default;
  friend auto operator<=>(const WeaklyOrderedHyperforest& a, const WeaklyOrderedHyperforest& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.levels <=> b.levels;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& level : level_members()) {
      s += '[';
      for (int i : level) s += base.edge(i).to_string();
      s += ']';
    }
    return s.empty() ? "[]" : s;
  }
};

inline WeaklyOrderedHyperforest as_weak(const OrderedHyperforest& o) {
  std::vector<int> levels(o.order.size());
  for (std::size_t p = 0; p < o.order.size(); ++p) levels[o.order[p]] = static_cast<int>(p);
  return WeaklyOrderedHyperforest(o.base, std::move(levels));
}

inline bool is_proper(const OrderedHyperforest& o) {
  if (!is_noncrossing(o.base)) return false;
  return HyperedgePoset(o.base).is_linear_extension(o.order);
}

// p < p' forces a strictly higher level.
inline bool is_weakly_proper(const WeaklyOrderedHyperforest& w) {
  if (!is_noncrossing(w.base)) return false;
  HyperedgePoset poset(w.base);
  for (const auto& c : poset.covers())
    if (w.levels[c.lower] >= w.levels[c.upper]) return false;
  return true;
}

// p <= p' only forces a level that is not lower.
inline bool is_extremely_weak_extension(const WeaklyOrderedHyperforest& w) {
  if (!is_noncrossing(w.base)) return false;
  HyperedgePoset poset(w.base);
  for (const auto& c : poset.covers())
    if (w.levels[c.lower] > w.levels[c.upper]) return false;
  return true;
}

// The increasing cycles of the hyperedges, in order.
inline std::vector<Permutation> factors(const OrderedHyperforest& o) {
  std::vector<Permutation> out;
  for (const Hyperedge& e : o.sequence()) out.push_back(irreducible_from_hyperedge(e.vertices(), o.n_plus_1()));
  return out;
}

inline Permutation permutation_of(const OrderedHyperforest& o) { return product(factors(o), o.n_plus_1()); }

inline std::string factorization_string(std::span<const Permutation> fs) {
  std::string s;
  for (const Permutation& f : fs) s += f.to_string();
  return s.empty() ? "()" : s;
}

struct Factorization {
  std::vector<Permutation> factors;
  Permutation product;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization to_factorization(const OrderedHyperforest& o) {
  auto fs = factors(o);
  Permutation p = product(fs, o.n_plus_1());
  return {std::move(fs), std::move(p)};
}

// Supports of the factors become the hyperedges, in factor order.
inline OrderedHyperforest factorization_to_hyperforest(const Factorization& f) {
  const int size = f.product.size();
  for (const Permutation& p : f.factors) {
    if (p.size() != size) throw InvalidArgument("factor sizes differ from the product");
    if (!p.is_irreducible()) throw InvalidArgument("factor " + p.to_string() + " is not irreducible");
  }
  if (!is_reduced_product(f.factors, f.product))
    throw NotReduced(factorization_string(f.factors) + " for " + f.product.to_string());
  std::vector<Hyperedge> sequence;
  for (const Permutation& p : f.factors) sequence.push_back(Hyperedge::of(p.support()));
  return OrderedHyperforest::from_sequence(size, sequence);
}

// All single-cycle permutations of {1..n_plus_1}.
inline std::vector<Permutation> all_cycles(int n_plus_1) {
  std::vector<Permutation> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n_plus_1); ++mask) {
    if (std::popcount(mask) < 2) continue;
    Permutation::Cycle points;
    for (int v = 1; v <= n_plus_1; ++v)
      if (mask >> (v - 1) & 1u) points.push_back(v);
    // Fix the least point first and permute the rest.
    do {
      out.push_back(Permutation::cycle(n_plus_1, points));
    } while (std::next_permutation(points.begin() + 1, points.end()));
  }
  return out;
}

// Every reduced factorization of sigma into irreducible permutations.
inline std::vector<std::vector<Permutation>> irreducible_factorizations(const Permutation& sigma) {
  if (sigma.size() > 7) throw CapExceeded("factorizations are enumerated for at most 7 points");
  const auto cycles = all_cycles(sigma.size());
  std::map<Permutation, std::vector<std::vector<Permutation>>> memo;
  std::function<const std::vector<std::vector<Permutation>>&(const Permutation&)> go =
      [&](const Permutation& p) -> const std::vector<std::vector<Permutation>>& {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::vector<std::vector<Permutation>> result;
    if (p.is_identity()) {
      result.push_back({});
    } else {
      const int len = reflection_length(p);
      for (const Permutation& f : cycles) {
        Permutation rest = compose(f.inverse(), p);
        if (reflection_length(f) + reflection_length(rest) != len) continue;
        for (const auto& tail : go(rest)) {
          std::vector<Permutation> seq{f};
          seq.insert(seq.end(), tail.begin(), tail.end());
          result.push_back(std::move(seq));
        }
      }
    }
    return memo.emplace(p, std::move(result)).first->second;
  };
  return go(sigma);
}

// Linear extensions of the hyperedge poset, lexicographic in index order.
inline std::vector<std::vector<int>> proper_orderings(const Hyperforest& t) {
  return HyperedgePoset(t).linear_extensions();
}

inline OrderedHyperforest canonical_proper_ordering(const Hyperforest& t) {
  return OrderedHyperforest(t, HyperedgePoset(t).first_linear_extension());
}

// Noncrossing permutations of the partition closures of the prefixes
// (first element the identity, last the closure of everything).
inline std::vector<Permutation> prefix_chain(const OrderedHyperforest& o) {
  const int size = o.n_plus_1();
  std::vector<Permutation> chain{Permutation::identity(size)};
  std::vector<Hyperedge> prefix;
  for (const Hyperedge& e : o.sequence()) {
    prefix.push_back(e);
    Hyperforest closure = partition_closure(Hyperforest(size, prefix));
    if (!is_noncrossing(closure)) throw LeavesLattice("prefix closure " + closure.to_string() + " is crossing");
    chain.push_back(partition_permutation(closure));
  }
  return chain;
}

// Same for a weak order: one chain element per level.
inline std::vector<Permutation> level_chain(const WeaklyOrderedHyperforest& w) {
  const int size = w.base.n_plus_1();
  std::vector<Permutation> chain{Permutation::identity(size)};
  std::vector<Hyperedge> prefix;
  for (const auto& level : w.level_members()) {
    for (int i : level) prefix.push_back(w.base.edge(i));
    Hyperforest closure = partition_closure(Hyperforest(size, prefix));
    if (!is_noncrossing(closure)) throw LeavesLattice("prefix closure " + closure.to_string() + " is crossing");
    chain.push_back(partition_permutation(closure));
  }
  return chain;
}

// The weakly properly ordered hyperforest read off a chain of noncrossing
// permutations: the cycles of consecutive quotients, one level per step.
inline WeaklyOrderedHyperforest standard_name(std::span<const Permutation> chain) {
  if (chain.empty()) throw InvalidArgument("empty chain");
  const int size = chain.front().size();
  std::vector<Hyperedge> edges;
  std::vector<std::pair<Hyperedge, int>> tagged;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    Permutation label = quotient_label(chain[j - 1], chain[j]);
    if (label.is_identity()) throw InvalidArgument("chain repeats an element");
    for (const auto& c : label.cycles()) tagged.emplace_back(Hyperedge::of(c), static_cast<int>(j) - 1);
  }
  for (const auto& [e, level] : tagged) edges.push_back(e);
  Hyperforest h(size, edges);
  std::vector<int> levels(h.edge_count());
  for (const auto& [e, level] : tagged) levels[*h.index_of(e)] = level;
  return WeaklyOrderedHyperforest(std::move(h), std::move(levels));
}

// Rewrites an ordering of a noncrossing hyperforest into the properly
// ordered hyperforest naming the same chain of partitions.
inline OrderedHyperforest standardize(const OrderedHyperforest& o) {
  if (!is_noncrossing(o.base)) throw InvalidArgument("standardize expects a noncrossing hyperforest");
  auto chain = prefix_chain(o);
  std::vector<Hyperedge> sequence;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    Permutation label = quotient_label(chain[j - 1], chain[j]);
    sequence.push_back(Hyperedge::of(label.support()));
  }
  return OrderedHyperforest::from_sequence(o.n_plus_1(), sequence);
}

// Polygon reflection v -> shift - v (mod n+1); the default fixes the axis
// through the midpoint of {1, n+1} and sends v to n+2-v.
inline int reflect_vertex(int v, int n_plus_1, int shift) {
  return ((shift - v - 1) % n_plus_1 + n_plus_1) % n_plus_1 + 1;
}

inline Hyperforest reflect(const Hyperforest& t, std::optional<int> shift = std::nullopt) {
  const int size = t.n_plus_1();
  const int s = shift.value_or(size + 1);
  std::vector<int> image(size + 1);
  for (int v = 1; v <= size; ++v) image[v] = reflect_vertex(v, size, s);
  return relabel(t, image);
}

// Reflected hyperedges in reversed order.
inline OrderedHyperforest reflect(const OrderedHyperforest& o, std::optional<int> shift = std::nullopt) {
  const int size = o.n_plus_1();
  const int s = shift.value_or(size + 1);
  std::vector<Hyperedge> sequence;
  for (const Hyperedge& e : o.sequence()) {
    Hyperedge::Mask m = 0;
    for (int v : e.vertices()) m |= Hyperedge::bit(reflect_vertex(v, size, s));
    sequence.push_back(Hyperedge::from_mask(m));
  }
  std::reverse(sequence.begin(), sequence.end());
  return OrderedHyperforest::from_sequence(size, sequence);
}

// Reverses the canonical proper ordering and standardizes. Applying it
// twice rotates the hypertree one step clockwise.
inline Hyperforest kreweras_opposite(const Hyperforest& t) {
  if (!is_noncrossing_hypertree(t)) throw InvalidArgument("expected a noncrossing hypertree");
  OrderedHyperforest o = canonical_proper_ordering(t);
  std::reverse(o.order.begin(), o.order.end());
  return standardize(o).base;
}

}  // namespace ncht
