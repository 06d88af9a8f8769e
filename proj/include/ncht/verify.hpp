#pragma once

// Exhaustive and sampled checks of the counting results and bijections.
// Each runner returns a report listing failing witnesses.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncht/complex.hpp"
#include "ncht/dissection.hpp"
#include "ncht/enumerate.hpp"
#include "ncht/io.hpp"
#include "ncht/lattice.hpp"
#include "ncht/orderings.hpp"

namespace ncht::verify {

using nlohmann::json;

struct Report {
  std::string id;
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
  json info = json::object();

  Report(std::string check, int size) : id(std::move(check)), n(size) {}

  bool passed() const { return failures.empty(); }

  void fail(std::string witness) {
    if (failures.size() < 25) failures.push_back(std::move(witness));
    else if (failures.size() == 25) failures.push_back("...");
  }

  void expect(bool ok, const std::string& witness) {
    ++checked;
    if (!ok) fail(witness);
  }

  json to_json() const {
    return {{"check", id}, {"n", n}, {"passed", passed()}, {"checked", checked}, {"failures", failures}, {"info", info}};
  }
};

// Alternating permutation counts 1, 1, 1, 2, 5, 16, ... by the boustrophedon
// (Seidel) triangle.
inline std::uint64_t euler_zigzag(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 0);
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[i - j];
    row = std::move(next);
  }
  return row.back();
}

inline std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::string show(const Hyperforest& h) { return io::to_json(h).dump(); }

// f-vector row: enumeration against clique counting and closed forms.
inline Report table1(int n) {
  Report r{"table1", n};
  const int size = n + 1;
  FVector fv = f_vector(size);
  auto all = enumerate_nchypertrees(size);
  std::vector<std::uint64_t> by_edges(size, 0);
  for (const auto& h : all) ++by_edges[h.edge_count()];
  for (int k = 1; k < size; ++k)
    r.expect(by_edges[k] == fv.f[k - 1], "hypertrees with " + std::to_string(k) + " hyperedges: enumerated " +
                                             std::to_string(by_edges[k]) + ", cliques " + std::to_string(fv.f[k - 1]));
  r.expect(fv.f.front() == 1, "f_-1 != 1");
  r.expect(fv.f[1] == static_cast<std::uint64_t>(size * (size - 2)), "f_0 != (n+1)(n-1)");
  r.expect(fv.f.back() == fuss_catalan(n), "top face count is not Fuss-Catalan");
  const std::int64_t signed_catalan = (n % 2 ? -1 : 1) * static_cast<std::int64_t>(catalan(n));
  r.expect(fv.reduced_euler == signed_catalan, "reduced Euler characteristic is not a signed Catalan number");
  r.info = {{"f", fv.f}, {"reduced_euler", fv.reduced_euler}};
  return r;
}

// Vertex and chamber row: both complexes' vertex and chamber counts.
inline Report table2(int n) {
  Report r{"table2", n};
  const int size = n + 1;
  NCPartitionLattice lattice(size);
  const std::uint64_t link_vertices = static_cast<std::uint64_t>(lattice.size()) - 2;
  const std::uint64_t link_chambers = lattice.count_maximal_chains();
  const std::uint64_t trees = count_by_edges(size).back();
  r.expect(static_cast<std::uint64_t>(lattice.size()) == catalan(size), "lattice size is not Catalan");
  r.expect(link_chambers == power(size, n - 1), "maximal chains != (n+1)^(n-1)");
  r.expect(trees == fuss_catalan(n), "noncrossing trees != Fuss-Catalan");
  r.info = {{"ncht_vertices", size * (size - 2)},
            {"ncht_chambers", trees},
            {"ncpl_vertices", link_vertices},
            {"ncpl_chambers", link_chambers}};
  return r;
}

// Reduced factorizations into irreducibles versus properly ordered
// noncrossing hyperforests, both directions, for every noncrossing
// permutation.
inline Report bijection(int n) {
  Report r{"bijection", n};
  const int size = n + 1;
  if (size > 6) throw CapExceeded("bijection check is exhaustive; at most n = 5");
  NCPartitionLattice lattice(size);
  std::map<Permutation, std::set<OrderedHyperforest>> from_factorizations, from_hyperforests;
  std::uint64_t factorizations = 0;
  for (int i = 0; i < lattice.size(); ++i) {
    const Permutation& sigma = lattice.permutation(i);
    auto& bucket = from_factorizations[sigma];
    for (auto& fs : irreducible_factorizations(sigma)) {
      ++factorizations;
      OrderedHyperforest o = factorization_to_hyperforest({fs, sigma});
      const std::string w = factorization_string(fs);
      r.expect(is_noncrossing(o.base), w + ": hyperforest is crossing");
      r.expect(is_proper(o), w + ": ordering is not proper");
      r.expect(noncrossing_permutation(o.base) == sigma, w + ": closure differs from the product");
      r.expect(factors(o) == fs, w + ": factors do not round-trip");
      bucket.insert(o);
    }
  }
  std::uint64_t ordered = 0;
  for (const Hyperforest& h : enumerate_nchyperforests(size)) {
    for (auto& order : proper_orderings(h)) {
      ++ordered;
      OrderedHyperforest o(h, order);
      Permutation sigma = permutation_of(o);
      auto fs = factors(o);
      r.expect(sigma == noncrossing_permutation(h), o.to_string() + ": product is not the closure permutation");
      r.expect(is_reduced_product(fs, sigma), o.to_string() + ": product is not reduced");
      r.expect(factorization_to_hyperforest({fs, sigma}) == o, o.to_string() + ": does not round-trip");
      from_hyperforests[sigma].insert(std::move(o));
    }
  }
  for (auto& [sigma, set] : from_factorizations)
    r.expect(from_hyperforests[sigma] == set, sigma.to_string() + ": the two sides differ");
  r.expect(from_hyperforests.size() == from_factorizations.size(), "products on the two sides differ");
  r.info = {{"noncrossing_permutations", lattice.size()}, {"factorizations", factorizations}, {"ordered_hyperforests", ordered}};
  return r;
}

// |spheres containing Simplex(t)| = |tree simplices in Sphere(t)|.
inline Report duality(int n) {
  Report r{"duality", n};
  const auto& index = SphereIndex::get(n + 1);
  for (const Hyperforest& t : index.hypertrees()) {
    auto a = index.spheres_containing(t).size(), b = index.tree_simplices_in(t).size();
    r.expect(a == b, show(t) + ": " + std::to_string(a) + " spheres contain it, its sphere has " + std::to_string(b));
  }
  r.info = {{"hypertrees", index.hypertrees().size()}};
  return r;
}

// Min/max hypertrees have 2^(k-1) tree chambers; zig-zag trees have the
// alternating-permutation count of partition chambers.
inline Report cross_polytope(int n) {
  Report r{"cross_polytope", n};
  std::uint64_t minmax = 0, converse_hits = 0, zigzags = 0;
  for (const Hyperforest& t : enumerate_nchypertrees(n + 1)) {
    const std::uint64_t expected = std::uint64_t{1} << (t.edge_count() - 1);
    const std::uint64_t got = tree_simplices_in(t).size();
    r.expect(got >= expected, show(t) + ": fewer than 2^(k-1) tree chambers");
    if (is_min_max(t)) {
      ++minmax;
      r.expect(got == expected, show(t) + ": min/max hypertree with " + std::to_string(got) + " tree chambers");
      if (is_tree(t)) {
        ++zigzags;
        auto ext = HyperedgePoset(t).count_linear_extensions();
        r.expect(ext == euler_zigzag(n), show(t) + ": zig-zag tree chamber has " + std::to_string(ext) + " partition chambers");
      }
    } else if (got == expected) {
      ++converse_hits;
    }
  }
  r.info = {{"min_max_hypertrees", minmax}, {"zigzag_trees", zigzags}, {"other_hypertrees_at_minimum", converse_hits},
            {"zigzag_partition_chambers", euler_zigzag(n)}};
  return r;
}

// Caterpillar count, and caterpillar <=> one partition chamber per tree
// chamber (checked when with_chambers). Apartment sizes are reported.
inline Report caterpillar(int n, bool with_chambers) {
  Report r{"caterpillar", n};
  std::uint64_t count = 0, single = 0;
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (const Hyperforest& t : enumerate_nctrees(n + 1)) {
    const bool cat = is_caterpillar(t);
    count += cat;
    if (!with_chambers) continue;
    HyperedgePoset poset(t);
    const bool one = poset.count_linear_extensions() == 1;
    single += one;
    r.expect(cat == one, show(t) + ": caterpillar " + std::to_string(cat) + " but single chamber " + std::to_string(one));
    r.expect(cat == poset.is_total_order(), show(t) + ": caterpillar flag disagrees with a total hyperedge poset");
    if (cat) {
      std::uint64_t chambers = tree_simplices_in(t).size();
      lo = std::min(lo, chambers);
      hi = std::max(hi, chambers);
    }
  }
  // Growing an interval {i, i+1} left or right one vertex at a time up to
  // n vertices: (n+1) starts and n-2 binary choices.
  const std::uint64_t expected = n < 2 ? 1 : (n + 1) * power(2, n - 2);
  r.expect(count == expected, "caterpillars: " + std::to_string(count) + ", expected " + std::to_string(expected));
  r.info = {{"caterpillars", count}};
  if (with_chambers)
    r.info.update({{"single_chamber_trees", single},
                   {"apartment_tree_chambers_min", lo},
                   {"apartment_tree_chambers_max", hi},
                   {"catalan_n", catalan(n)}});
  return r;
}

// Link simplices grouped by standard name reproduce the hypertree complex.
inline Report amalgamation(int n) {
  Report r{"amalgamation", n};
  const int size = n + 1;
  AmalgamationCensus census = amalgamate(size);
  auto counts = count_by_edges(size);
  for (int k = 1; k < size; ++k)
    r.expect(census.groups[k] == counts[k], "groups with " + std::to_string(k) + " hyperedges: " +
                                               std::to_string(census.groups[k]) + " vs " + std::to_string(counts[k]));
  r.expect(census.partition_chambers == power(size, n - 1), "partition chambers != (n+1)^(n-1)");
  r.expect(census.chambers_per_tree.size() == fuss_catalan(n), "tree chambers != Fuss-Catalan");
  std::uint64_t total = 0;
  for (const Hyperforest& t : enumerate_nctrees(size)) {
    auto ext = HyperedgePoset(t).count_linear_extensions();
    total += ext;
    auto it = census.chambers_per_tree.find(t);
    r.expect(it != census.chambers_per_tree.end() && it->second == ext,
             show(t) + ": grouped chambers differ from the linear extension count");
  }
  r.expect(total == power(size, n - 1), "sum of linear extensions != (n+1)^(n-1)");
  for (const auto& [h, count] : census.simplices_per_hypertree)
    r.expect(count == weak_proper_orderings(h).size(), show(h) + ": simplex count differs from weak proper orderings");
  r.info = {{"chains", census.chains}, {"partition_chambers", census.partition_chambers},
            {"tree_chambers", census.chambers_per_tree.size()}, {"groups", census.groups}};
  return r;
}

// Position at which each hyperedge joins a single block along the chain.
inline std::vector<int> arrival_positions(const Hyperforest& t, const Chain& chain) {
  std::vector<int> pos(t.edge_count(), -1);
  for (int i = 0; i < t.edge_count(); ++i) {
    auto vs = t.edge(i).vertices();
    for (std::size_t j = 0; j < chain.size(); ++j) {
      bool joined = std::all_of(vs.begin(), vs.end(), [&](int v) {
        for (int u = vs.front(), steps = 0; steps < t.n_plus_1(); u = chain[j](u), ++steps)
          if (u == v) return true;
        return false;
      });
      if (joined) {
        pos[i] = static_cast<int>(j);
        break;
      }
    }
  }
  return pos;
}

// Sphere, dissection, standardization and reflection properties of one
// hypertree.
inline void check_hypertree(const Hyperforest& t, Report& r) {
  const std::string w = show(t);
  const int k = t.edge_count();

  SphereView s = sphere_of(t);
  r.expect(s.chamber_count() == factorial(k), w + ": sphere does not have k! chambers");
  std::map<Chain, int> faces;
  for (const Chain& c : s.chambers)
    for (std::size_t j = 1; j + 1 < c.size(); ++j) {
      Chain face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      ++faces[face];
    }
  for (const auto& [face, count] : faces) r.expect(count == 2, w + ": a codimension-one face lies in " + std::to_string(count) + " chambers");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      std::uint64_t before = 0;
      for (const Chain& c : s.chambers) {
        auto pos = arrival_positions(t, c);
        before += pos[a] < pos[b];
      }
      r.expect(2 * before == factorial(k), w + ": hemisphere count is not k!/2");
    }

  Dissection d = hypertree_to_dissection(t);
  r.expect(static_cast<int>(d.diagonals.size()) == k - 1, w + ": diagonal count != k-1");
  r.expect(dissection_to_hypertree(d) == t, w + ": dissection does not round-trip");

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  do {
    OrderedHyperforest o(t, order);
    OrderedHyperforest std1 = standardize(o);
    r.expect(is_proper(std1), w + ": standardized ordering is not proper");
    r.expect(standardize(std1) == std1, w + ": standardize is not idempotent");
    r.expect(prefix_chain(std1) == prefix_chain(o), w + ": standardize changed the chain");
  } while (std::next_permutation(order.begin(), order.end()));

  HyperedgePoset poset(t);
  Hyperforest rt = reflect(t);
  HyperedgePoset rposet(rt);
  std::vector<int> image(k);
  for (int i = 0; i < k; ++i) image[i] = *rt.index_of(reflect(Hyperforest(t.n_plus_1(), std::vector<Hyperedge>{t.edge(i)})).edge(0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) r.expect(poset.less(a, b) == rposet.less(image[b], image[a]), w + ": reflected poset is not the dual");
  for (auto& ext : poset.linear_extensions()) {
    OrderedHyperforest o(t, ext);
    r.expect(is_proper(reflect(o)), w + ": reversed reflection of a proper ordering is not proper");
  }
}

// Exhaustive for n <= 4; for larger n a fixed pseudo-random sample.
inline Report properties(int n, std::size_t sample = 40) {
  Report r{"properties", n};
  auto all = enumerate_nchypertrees(n + 1);
  std::vector<Hyperforest> chosen;
  if (n <= 4 || all.size() <= sample) {
    chosen = all;
  } else {
    std::mt19937 rng(20260415u + static_cast<unsigned>(n));
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), sample, rng);
  }
  for (const Hyperforest& t : chosen) check_hypertree(t, r);
  r.info = {{"hypertrees_checked", chosen.size()}, {"hypertrees_total", all.size()}, {"exhaustive", chosen.size() == all.size()}};
  return r;
}

}  // namespace ncht::verify
