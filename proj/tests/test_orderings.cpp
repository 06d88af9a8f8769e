#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ncht/complex.hpp"
#include "ncht/enumerate.hpp"
#include "ncht/orderings.hpp"

using ncht::Hyperedge;
using ncht::Hyperforest;
using ncht::OrderedHyperforest;
using ncht::Permutation;

namespace {

std::vector<Permutation> parse_all(const std::vector<std::string>& cycles, int size) {
  std::vector<Permutation> out;
  for (const auto& s : cycles) out.push_back(Permutation::parse(s, size));
  return out;
}

int cycles_of(const std::vector<int>& img) {
  std::vector<bool> seen(img.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = img[j] - 1) seen[j] = true;
  }
  return count;
}

// Length from a hand-rolled cycle count, not the library's.
int length(const Permutation& p) { return p.size() - cycles_of(p.images()); }

// Increasing cycles on every subset of size >= 2.
std::vector<Permutation> increasing_cycles(int size) {
  std::vector<Permutation> out;
  for (unsigned m = 1; m < (1u << size); ++m) {
    Permutation::Cycle c;
    for (int v = 1; v <= size; ++v)
      if (m >> (v - 1) & 1u) c.push_back(v);
    if (c.size() >= 2) out.push_back(Permutation::cycle(size, c));
  }
  return out;
}

// Every sequence of increasing cycles whose lengths add up along the way and
// whose product stays below c.
std::set<std::vector<Permutation>> reduced_irreducible_factorizations(int size) {
  const auto cycles = increasing_cycles(size);
  const Permutation c = Permutation::coxeter(size);
  std::set<std::vector<Permutation>> out;
  std::vector<Permutation> seq;
  std::function<void(const Permutation&)> grow = [&](const Permutation& acc) {
    out.insert(seq);
    for (const auto& f : cycles) {
      Permutation next = acc * f;
      if (length(next) != length(acc) + length(f)) continue;
      if (length(next) + length(next.inverse() * c) != length(c)) continue;
      seq.push_back(f);
      grow(next);
      seq.pop_back();
    }
  };
  grow(Permutation::identity(size));
  return out;
}

// sigma'_i = beta_i^-1 sigma_i beta_i, where beta_i multiplies, in proper
// order, the factors that precede e_i but come after it properly.
std::vector<Permutation> conjugation_oracle(const OrderedHyperforest& o) {
  const int k = static_cast<int>(o.order.size());
  auto sigma = ncht::factors(o);
  auto proper = ncht::canonical_proper_ordering(o.base).order;
  std::vector<int> proper_pos(k), original_pos(k);
  for (int p = 0; p < k; ++p) proper_pos[proper[p]] = p;
  for (int p = 0; p < k; ++p) original_pos[o.order[p]] = p;
  std::vector<Permutation> out;
  for (int i = 0; i < k; ++i) {
    const int ei = o.order[i];
    Permutation beta = Permutation::identity(o.n_plus_1());
    for (int p = 0; p < k; ++p) {
      const int ej = proper[p];
      if (original_pos[ej] < i && proper_pos[ej] > proper_pos[ei]) beta = beta * sigma[original_pos[ej]];
    }
    out.push_back(ncht::conjugate(sigma[i], beta));
  }
  return out;
}

}  // namespace

TEST(Ordered, SequenceRoundTrip) {
  auto o = OrderedHyperforest::from_sequence(9, {{3, 4, 5}, {5, 6}, {2, 3}, {1, 3}, {5, 7, 8, 9}});
  EXPECT_EQ(ncht::factorization_string(ncht::factors(o)), "(3,4,5)(5,6)(2,3)(1,3)(5,7,8,9)");
  // Not proper, so the product of the factors in this order is not c.
  EXPECT_FALSE(ncht::is_proper(o));
  EXPECT_NE(ncht::permutation_of(o), Permutation::coxeter(9));
  EXPECT_EQ(ncht::permutation_of(ncht::canonical_proper_ordering(o.base)), Permutation::coxeter(9));
  EXPECT_THROW(OrderedHyperforest(o.base, {0, 1, 2, 3}), ncht::InvalidArgument);
  EXPECT_THROW(OrderedHyperforest(o.base, {0, 1, 2, 3, 3}), ncht::InvalidArgument);
}

TEST(Standardize, StandardNamesWorkedCase) {
  auto o = OrderedHyperforest::from_sequence(9, {{3, 4, 5}, {5, 6}, {2, 3}, {1, 3}, {5, 7, 8, 9}});
  auto s = ncht::standardize(o);
  EXPECT_EQ(ncht::factors(s), parse_all({"(3,4,5)", "(3,6)", "(2,3)", "(1,2)", "(1,7,8,9)"}, 9));
  EXPECT_EQ(ncht::factors(s)[4].to_string(), "(1,7,8,9)");
  EXPECT_TRUE(ncht::is_proper(s));
  EXPECT_EQ(ncht::prefix_chain(s), ncht::prefix_chain(o));
  EXPECT_EQ(ncht::proper_orderings(s.base).size(), 1u);
}

// Undoing the conjugations for the reflected name. The factorization of c^-1
// rho_4 rho_2 rho_1 rho_5 rho_3 is sorted into index order by conjugating each
// factor with the later factors of smaller index.
TEST(Standardize, ReversingDirectionWorkedCase) {
  const auto rho = parse_all({"(3,2)", "(2,1)", "(5,4,3)", "(9,8,7,1)", "(6,3)"}, 9);
  const std::vector<int> given{3, 1, 0, 4, 2};
  std::vector<Permutation> in_given_order;
  for (int i : given) in_given_order.push_back(rho[i]);
  EXPECT_EQ(ncht::factorization_string(in_given_order), "(1,9,8,7)(1,2)(2,3)(3,6)(3,5,4)");
  EXPECT_EQ(ncht::product(in_given_order, 9), Permutation::coxeter(9).inverse());

  std::vector<Permutation> sorted;
  for (int i = 0; i < 5; ++i) {
    Permutation beta = Permutation::identity(9);
    const auto at = std::find(given.begin(), given.end(), i) - given.begin();
    for (auto q = at + 1; q < 5; ++q)
      if (given[q] < i) beta = beta * rho[given[q]];
    sorted.push_back(ncht::conjugate(rho[i], beta));
  }
  const auto expected = parse_all({"(3,2)", "(3,1)", "(5,4,3)", "(9,8,7,5)", "(6,5)"}, 9);
  EXPECT_EQ(sorted, expected);
  EXPECT_EQ(ncht::product(sorted, 9), Permutation::coxeter(9).inverse());
  EXPECT_TRUE(ncht::is_reduced_product(sorted, Permutation::coxeter(9).inverse()));
  // With (9,8,7,6) in fourth place the product is no longer c^-1.
  auto misprint = expected;
  misprint[3] = Permutation::parse("(9,8,7,6)");
  EXPECT_NE(ncht::product(misprint, 9), Permutation::coxeter(9).inverse());

  // It is the reflected proper ordering of the tree {1,3} {2,3} {3,4,5} {5,6}
  // {5,7,8,9}, read through v -> 10 - v.
  std::vector<int> mirror(9);
  for (int v = 1; v <= 9; ++v) mirror[v - 1] = 10 - v;
  const Permutation r = Permutation::from_images(mirror);
  const Hyperforest tau(9, {{1, 3}, {2, 3}, {3, 4, 5}, {5, 6}, {5, 7, 8, 9}});
  auto reflected = ncht::reflect(ncht::canonical_proper_ordering(tau));
  EXPECT_TRUE(ncht::is_proper(reflected));
  std::vector<Permutation> back;
  for (const auto& f : ncht::factors(reflected)) back.push_back(ncht::conjugate(f, r));
  EXPECT_EQ(back, expected);
  const auto proper = ncht::factors(ncht::canonical_proper_ordering(tau));
  EXPECT_EQ(ncht::factorization_string(proper), "(5,6)(5,7,8,9)(3,4,5)(1,3)(2,3)");
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(expected[i], proper[proper.size() - 1 - i].inverse());
}

TEST(Standardize, MatchesConjugationOracle) {
  for (int size = 3; size <= 6; ++size)
    for (const auto& t : ncht::enumerate_nchypertrees(size)) {
      std::vector<int> order(t.edge_count());
      std::iota(order.begin(), order.end(), 0);
      do {
        OrderedHyperforest o(t, order);
        ASSERT_EQ(ncht::factors(ncht::standardize(o)), conjugation_oracle(o)) << o.to_string();
      } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST(Standardize, IdempotentAndFixesProperOrderings) {
  for (int size = 3; size <= 7; ++size)
    for (const auto& t : ncht::enumerate_nchypertrees(size)) {
      for (const auto& ord : ncht::proper_orderings(t)) {
        OrderedHyperforest o(t, ord);
        ASSERT_EQ(ncht::standardize(o), o) << o.to_string();
      }
      auto o = ncht::canonical_proper_ordering(t);
      std::reverse(o.order.begin(), o.order.end());
      auto s = ncht::standardize(o);
      ASSERT_TRUE(ncht::is_proper(s));
      ASSERT_EQ(ncht::standardize(s), s);
    }
}

TEST(Standardize, WeakNamesRoundTripThroughChains) {
  for (int size = 3; size <= 6; ++size)
    for (const auto& t : ncht::enumerate_nchypertrees(size))
      for (const auto& levels : ncht::weak_proper_orderings(t)) {
        ncht::WeaklyOrderedHyperforest w(t, levels);
        ASSERT_TRUE(ncht::is_weakly_proper(w));
        ASSERT_EQ(ncht::standard_name(ncht::level_chain(w)), w) << w.to_string();
      }
}

TEST(Factorization, BijectionWithProperlyOrderedHyperforests) {
  for (int size = 2; size <= 5; ++size) {
    auto oracle = reduced_irreducible_factorizations(size);
    std::set<std::vector<Permutation>> from_forests;
    for (const auto& h : ncht::enumerate_nchyperforests(size))
      for (const auto& ord : ncht::proper_orderings(h)) {
        OrderedHyperforest o(h, ord);
        auto f = ncht::to_factorization(o);
        ASSERT_EQ(ncht::factorization_to_hyperforest(f), o);
        from_forests.insert(f.factors);
      }
    EXPECT_EQ(from_forests, oracle) << size;
    for (const auto& fs : oracle) {
      auto prod = ncht::product(fs, size);
      auto o = ncht::factorization_to_hyperforest({fs, prod});
      ASSERT_TRUE(ncht::is_proper(o));
      ASSERT_EQ(ncht::factors(o), fs);
    }
  }
  EXPECT_EQ(reduced_irreducible_factorizations(5).size(), 467u);
}

TEST(Factorization, IrreducibleFactorizationsOfCoxeter) {
  // Proper orderings of noncrossing hypertrees, summed.
  for (int size = 2; size <= 6; ++size) {
    std::size_t expected = 0;
    for (const auto& t : ncht::enumerate_nchypertrees(size)) expected += ncht::proper_orderings(t).size();
    EXPECT_EQ(ncht::irreducible_factorizations(Permutation::coxeter(size)).size(), expected);
  }
}

TEST(Factorization, RejectsNonReducedAndReducible) {
  auto t = Permutation::parse("(1,2)", 3);
  EXPECT_THROW(ncht::factorization_to_hyperforest({{t, t}, Permutation::identity(3)}), ncht::NotReduced);
  auto bad = Permutation::parse("(1,3,2)");
  EXPECT_THROW(ncht::factorization_to_hyperforest({{bad}, bad}), ncht::InvalidArgument);
}

TEST(Reflection, ReflectedPosetIsTheDual) {
  for (int size = 3; size <= 7; ++size)
    for (const auto& t : ncht::enumerate_nchypertrees(size)) {
      auto rt = ncht::reflect(t);
      ncht::HyperedgePoset p(t), q(rt);
      auto image = [&](int a) {
        Hyperedge::Mask m = 0;
        for (int v : t.edge(a).vertices()) m |= Hyperedge::bit(size + 1 - v);
        return *rt.index_of(Hyperedge::from_mask(m));
      };
      for (int a = 0; a < t.edge_count(); ++a)
        for (int b = 0; b < t.edge_count(); ++b) ASSERT_EQ(p.less(a, b), q.less(image(b), image(a))) << t;
      for (const auto& ord : ncht::proper_orderings(t)) ASSERT_TRUE(ncht::is_proper(ncht::reflect(OrderedHyperforest(t, ord))));
    }
}

// Reversing a proper ordering and standardizing, twice, rotates one step.
TEST(Kreweras, TwiceIsRotation) {
  for (int size = 3; size <= 7; ++size)
    for (const auto& t : ncht::enumerate_nchypertrees(size)) {
      auto k = ncht::kreweras_opposite(t);
      ASSERT_TRUE(ncht::is_noncrossing_hypertree(k));
      ASSERT_EQ(k.edge_count(), t.edge_count());
      ASSERT_EQ(ncht::kreweras_opposite(k), ncht::rotate(t, 1)) << t;
      for (const auto& ord : ncht::proper_orderings(t)) {
        OrderedHyperforest o(t, ord);
        std::reverse(o.order.begin(), o.order.end());
        ASSERT_EQ(ncht::standardize(o).base, k) << t;
      }
    }
}
