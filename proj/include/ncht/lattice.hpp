#pragma once

// The lattice of noncrossing partitions of {1, ..., n+1}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncht/error.hpp"
#include "ncht/hypergraph.hpp"
#include "ncht/permutation.hpp"

namespace ncht {

class NCPartitionLattice {
public:
  static constexpr int kMaxVertices = 12;

  explicit NCPartitionLattice(int n_plus_1) : n_(n_plus_1) {
    if (n_ < 1 || n_ > kMaxVertices)
      throw CapExceeded("partition lattices are built for 1.." + std::to_string(kMaxVertices) + " vertices");
    std::vector<int> label(n_ + 1, 0);
    std::vector<int> open;
    generate(1, label, open);
    std::sort(elements_.begin(), elements_.end(), [](const Element& a, const Element& b) {
      return a.rank != b.rank ? a.rank < b.rank : a.key < b.key;
    });
    for (int i = 0; i < size(); ++i) index_.emplace(elements_[i].key, i);
    covers_up_.assign(size(), {});
    covers_down_.assign(size(), {});
    for (int i = 0; i < size(); ++i) {
      const auto& mins = elements_[i].block_mins;
      for (std::size_t a = 0; a < mins.size(); ++a)
        for (std::size_t b = a + 1; b < mins.size(); ++b) {
          std::vector<int> merged = elements_[i].label;
          for (int v = 1; v <= n_; ++v)
            if (merged[v] == mins[b]) merged[v] = mins[a];
          auto it = index_.find(key_of(merged));
          if (it == index_.end()) continue;
          covers_up_[i].push_back(it->second);
          covers_down_[it->second].push_back(i);
        }
    }
    for (auto& c : covers_up_) std::sort(c.begin(), c.end());
    for (auto& c : covers_down_) std::sort(c.begin(), c.end());
  }

  int n_plus_1() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int rank(int i) const { return elements_[i].rank; }

  const Permutation& permutation(int i) const { return elements_[i].perm; }
  Hyperforest partition(int i) const { return partition_of_permutation(elements_[i].perm); }

  std::optional<int> index_of(const Permutation& p) const {
    if (p.size() != n_) return std::nullopt;
    std::vector<int> label(n_ + 1);
    for (int v = 1; v <= n_; ++v) label[v] = v;
    for (const auto& c : p.cycles())
      for (int v : c) label[v] = c.front();
    auto it = index_.find(key_of(label));
    if (it == index_.end() || elements_[it->second].perm != p) return std::nullopt;
    return it->second;
  }

  const std::vector<int>& upper_covers(int i) const { return covers_up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return covers_down_[i]; }

  std::size_t cover_count() const {
    std::size_t total = 0;
    for (const auto& c : covers_up_) total += c.size();
    return total;
  }

  // Block refinement.
  bool leq(int i, int j) const {
    const auto& a = elements_[i].label;
    const auto& b = elements_[j].label;
    for (int v = 1; v <= n_; ++v)
      if (b[v] != b[a[v]]) return false;
    return true;
  }

  std::uint64_t count_maximal_chains() const {
    std::vector<std::uint64_t> ways(size(), 0);
    ways[bottom()] = 1;
    for (int i = 0; i < size(); ++i)
      for (int j : covers_up_[i]) ways[j] += ways[i];
    return ways[top()];
  }

  // Visits each maximal chain as a list of element indices, bottom to top.
  template <class Visit>
  void for_each_maximal_chain(Visit&& visit) const {
    std::vector<int> chain{bottom()};
    std::function<void()> walk = [&] {
      int last = chain.back();
      if (last == top()) {
        visit(static_cast<const std::vector<int>&>(chain));
        return;
      }
      for (int j : covers_up_[last]) {
        chain.push_back(j);
        walk();
        chain.pop_back();
      }
    };
    walk();
  }

  // Visits each chain bottom = x0 < x1 < ... < xm = top (any m >= 1); the
  // interior elements are the simplices of the link.
  template <class Visit>
  void for_each_chain(Visit&& visit) const {
    if (size() == 1) {
      visit(std::vector<int>{0});
      return;
    }
    std::vector<std::vector<int>> above(size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && leq(i, j)) above[i].push_back(j);
    std::vector<int> chain{bottom()};
    std::function<void()> walk = [&] {
      for (int j : above[chain.back()]) {
        chain.push_back(j);
        if (j == top()) visit(static_cast<const std::vector<int>&>(chain));
        else walk();
        chain.pop_back();
      }
    };
    walk();
  }

  std::vector<Permutation> permutations_of(const std::vector<int>& chain) const {
    std::vector<Permutation> out;
    for (int i : chain) out.push_back(elements_[i].perm);
    return out;
  }

private:
  struct Element {
    std::vector<int> label;  // label[v] = least vertex of v's block
    std::vector<int> block_mins;
    std::uint64_t key = 0;
    int rank = 0;
    Permutation perm;
  };

  std::uint64_t key_of(const std::vector<int>& label) const {
    std::uint64_t k = 0;
    for (int v = 1; v <= n_; ++v) k = k << 4 | static_cast<std::uint64_t>(label[v] - 1);
    return k;
  }

  // Vertex v joins a block that is still open (closing every block opened
  // after it) or starts a new one; this yields each noncrossing partition once.
  void generate(int v, std::vector<int>& label, std::vector<int>& open) {
    if (v > n_) {
      Element e;
      e.label = label;
      std::vector<Permutation::Cycle> cycles;
      for (int u = 1; u <= n_; ++u)
        if (label[u] == u) {
          e.block_mins.push_back(u);
          Permutation::Cycle c;
          for (int w = u; w <= n_; ++w)
            if (label[w] == u) c.push_back(w);
          if (c.size() > 1) cycles.push_back(std::move(c));
        }
      e.key = key_of(label);
      e.rank = n_ - static_cast<int>(e.block_mins.size());
      e.perm = Permutation::from_cycles(n_, cycles);
      elements_.push_back(std::move(e));
      return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      std::vector<int> saved(open.begin() + i + 1, open.end());
      open.resize(i + 1);
      label[v] = open[i];
      generate(v + 1, label, open);
      open.insert(open.end(), saved.begin(), saved.end());
    }
    open.push_back(v);
    label[v] = v;
    generate(v + 1, label, open);
    open.pop_back();
  }

  int n_;
  std::vector<Element> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> covers_up_, covers_down_;
};

inline NCPartitionLattice build_lattice(int n_plus_1) { return NCPartitionLattice(n_plus_1); }

}  // namespace ncht
