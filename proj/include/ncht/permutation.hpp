#pragma once

// Exact permutation algebra on the ground set {1, ..., n+1}.
//
// Products are read left to right: in `compose(a, b)` the left factor is
// applied first. With this convention two cycles meeting in one point
// concatenate, (a,b1,...,bk)(a,c1,...,cl) = (a,b1,...,bk,c1,...,cl).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncht/error.hpp"

namespace ncht {

class Permutation {
public:
  using Cycle = std::vector<int>;

  Permutation() = default;

  // One-line notation, 1-based: images[i-1] is the image of i.
  static Permutation from_images(std::vector<int> images) {
    const int size = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int& x : images) {
      if (x < 1 || x > size || seen[x - 1])
        throw InvalidArgument("images do not form a bijection");
      seen[x - 1] = true;
      --x;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  static Permutation identity(int n_plus_1) {
    if (n_plus_1 < 1) throw InvalidArgument("ground set must be nonempty");
    Permutation p;
    p.img_.resize(n_plus_1);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  // Cycles are 1-based; points not mentioned are fixed.
  static Permutation from_cycles(int n_plus_1, std::span<const Cycle> cycles) {
    Permutation p = identity(n_plus_1);
    std::vector<bool> used(n_plus_1, false);
    for (const Cycle& cyc : cycles) {
      for (int x : cyc) {
        if (x < 1 || x > n_plus_1) throw InvalidArgument("cycle point " + std::to_string(x) + " out of range");
        if (used[x - 1]) throw InvalidArgument("point " + std::to_string(x) + " repeated in cycles");
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.img_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    }
    return p;
  }

  static Permutation from_cycles(int n_plus_1, std::initializer_list<Cycle> cycles) {
    return from_cycles(n_plus_1, std::span<const Cycle>(cycles.begin(), cycles.size()));
  }

  static Permutation cycle(int n_plus_1, Cycle points) {
    const Cycle cycles[] = {std::move(points)};
    return from_cycles(n_plus_1, cycles);
  }

  // The Coxeter element (1,2,...,n+1).
  static Permutation coxeter(int n_plus_1) {
    Permutation p = identity(n_plus_1);
    for (int i = 0; i < n_plus_1; ++i) p.img_[i] = (i + 1) % n_plus_1;
    return p;
  }

  // Parses cycle notation such as "(1,3,4)(5,6,7,8,9)" or "()". When
  // n_plus_1 is 0 the ground set is the largest point mentioned.
  static Permutation parse(std::string_view text, int n_plus_1 = 0) {
    std::vector<Cycle> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    int largest = 0;
    skip_ws();
    if (i == text.size()) throw InvalidArgument("empty permutation text");
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidArgument("expected '(' in \"" + std::string(text) + "\"");
      ++i;
      Cycle cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InvalidArgument("expected a number in \"" + std::string(text) + "\"");
        int x = std::stoi(std::string(text.substr(start, i - start)));
        cyc.push_back(x);
        largest = std::max(largest, x);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip_ws();
          if (i < text.size() && text[i] == ')') throw InvalidArgument("dangling ',' in \"" + std::string(text) + "\"");
        }
      }
      if (i == text.size()) throw InvalidArgument("unterminated cycle in \"" + std::string(text) + "\"");
      ++i;
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    if (n_plus_1 == 0) n_plus_1 = std::max(largest, 1);
    return from_cycles(n_plus_1, cycles);
  }

  int size() const { return static_cast<int>(img_.size()); }

  // Image of the 1-based point x.
  int operator()(int x) const { return img_[x - 1] + 1; }

  std::vector<int> images() const {
    std::vector<int> out(img_);
    for (int& x : out) ++x;
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation q;
    q.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i) q.img_[img_[i]] = i;
    return q;
  }

  // Canonical cycles: each starts at its least point, sorted by least point.
  std::vector<Cycle> cycles(bool include_fixed = false) const {
    std::vector<Cycle> out;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      Cycle cyc;
      for (int x = start; !seen[x]; x = img_[x]) {
        seen[x] = true;
        cyc.push_back(x + 1);
      }
      if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  // Number of cycles, fixed points included.
  int cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int count = 0;
    for (int start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      ++count;
      for (int x = start; !seen[x]; x = img_[x]) seen[x] = true;
    }
    return count;
  }

  // Points moved by the permutation, as a sorted list.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) out.push_back(i + 1);
    return out;
  }

  // A single nontrivial cycle running through its support in increasing
  // (boundary) order.
  bool is_irreducible() const {
    auto cyc = cycles();
    return cyc.size() == 1 && std::is_sorted(cyc.front().begin(), cyc.front().end());
  }

  std::string to_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const Cycle& c : cyc) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

  std::size_t hash() const {
    std::size_t h = img_.size();
    for (int x : img_) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }

private:
  friend Permutation compose(const Permutation& a, const Permutation& b);
  std::vector<int> img_;  // 0-based images
};

// Left-to-right product: apply a, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw InvalidArgument("ground set sizes differ (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  Permutation out;
  out.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < a.img_.size(); ++i) out.img_[i] = b.img_[a.img_[i]];
  return out;
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

// Product of a sequence, left to right. An empty sequence needs the size.
inline Permutation product(std::span<const Permutation> factors, int n_plus_1) {
  Permutation out = Permutation::identity(n_plus_1);
  for (const Permutation& f : factors) out = compose(out, f);
  return out;
}

// beta^{-1} sigma beta, the unique solution of sigma beta = beta sigma'.
inline Permutation conjugate(const Permutation& sigma, const Permutation& beta) {
  return compose(compose(beta.inverse(), sigma), beta);
}

// Minimal number of transpositions with product p.
inline int reflection_length(const Permutation& p) { return p.size() - p.cycle_count(); }

inline bool is_reduced_product(std::span<const Permutation> factors, const Permutation& prod) {
  if (factors.empty()) return prod.is_identity();
  int total = 0;
  Permutation acc = Permutation::identity(prod.size());
  for (const Permutation& f : factors) {
    acc = compose(acc, f);
    total += reflection_length(f);
  }
  return acc == prod && total == reflection_length(prod);
}

// The increasing cycle on a vertex set of size at least two.
inline Permutation irreducible_from_hyperedge(std::span<const int> edge, int n_plus_1) {
  if (edge.size() < 2) throw InvalidArgument("a hyperedge needs at least 2 vertices");
  Permutation::Cycle sorted(edge.begin(), edge.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("repeated vertex in hyperedge");
  return Permutation::cycle(n_plus_1, std::move(sorted));
}

// Cycle supports form a noncrossing partition of the cyclically ordered
// ground set and every cycle is increasing.
inline bool is_noncrossing_permutation(const Permutation& p) {
  const int size = p.size();
  std::vector<int> block(size + 1, 0);
  auto cyc = p.cycles();
  for (std::size_t b = 0; b < cyc.size(); ++b) {
    if (!std::is_sorted(cyc[b].begin(), cyc[b].end())) return false;
    for (int x : cyc[b]) block[x] = static_cast<int>(b) + 1;
  }
  // Blocks cross iff some a < b < c < d has a, c in one block and b, d in
  // another. Scanning with a stack of open blocks detects this in O(n).
  std::vector<int> remaining(cyc.size() + 1, 0);
  for (std::size_t b = 0; b < cyc.size(); ++b) remaining[b + 1] = static_cast<int>(cyc[b].size());
  std::vector<int> open;
  for (int x = 1; x <= size; ++x) {
    int b = block[x];
    if (b == 0) continue;
    if (!open.empty() && open.back() == b) {
      // continue current innermost block
    } else if (std::find(open.begin(), open.end(), b) != open.end()) {
      return false;
    } else {
      open.push_back(b);
    }
    if (--remaining[b] == 0) open.pop_back();
  }
  return true;
}

// The unique sigma with lower * sigma = upper and additive lengths.
inline Permutation quotient_label(const Permutation& lower, const Permutation& upper) {
  Permutation sigma = compose(lower.inverse(), upper);
  if (reflection_length(lower) + reflection_length(sigma) != reflection_length(upper))
    throw NotComparable(lower.to_string() + " is not below " + upper.to_string());
  return sigma;
}

inline bool precedes_in_reflection_order(const Permutation& lower, const Permutation& upper) {
  Permutation sigma = compose(lower.inverse(), upper);
  return reflection_length(lower) + reflection_length(sigma) == reflection_length(upper);
}

}  // namespace ncht

template <>
struct std::hash<ncht::Permutation> {
  std::size_t operator()(const ncht::Permutation& p) const noexcept { return p.hash(); }
};
