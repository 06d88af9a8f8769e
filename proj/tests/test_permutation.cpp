#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "ncht/permutation.hpp"

using ncht::Permutation;

namespace {

// Breadth-first search over Sym(n) with transpositions as generators.
std::map<std::vector<int>, int> transposition_distances(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  std::map<std::vector<int>, int> dist{{id, 0}};
  std::queue<std::vector<int>> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    auto p = frontier.front();
    frontier.pop();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto q = p;
        std::swap(q[i], q[j]);
        if (dist.emplace(q, dist[p] + 1).second) frontier.push(q);
      }
  }
  return dist;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST(Permutation, ParsePrintRoundTrip) {
  auto p = Permutation::parse("(1,3,4)(5,6,7,8,9)");
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.to_string(), "(1,3,4)(5,6,7,8,9)");
  EXPECT_EQ(Permutation::parse("()", 4), Permutation::identity(4));
  EXPECT_EQ(Permutation::parse(" ( 2 , 1 ) ", 3).to_string(), "(1,2)");
}

TEST(Permutation, ParseRejectsMalformedText) {
  EXPECT_THROW(Permutation::parse("1,2)"), ncht::InvalidArgument);
  EXPECT_THROW(Permutation::parse("(1,2"), ncht::InvalidArgument);
  EXPECT_THROW(Permutation::parse("(1,1)"), ncht::InvalidArgument);
  EXPECT_THROW(Permutation::parse("(1,)"), ncht::InvalidArgument);
  EXPECT_THROW(Permutation::parse(""), ncht::InvalidArgument);
}

// Left factor acts first: 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
TEST(Permutation, ComposeAppliesLeftFactorFirst) {
  auto a = Permutation::parse("(1,2)", 3);
  auto b = Permutation::parse("(2,3)", 3);
  auto ab = a * b;
  EXPECT_EQ(ab(1), 3);
  EXPECT_EQ(ab(2), 1);
  EXPECT_EQ(ab(3), 2);
  EXPECT_EQ(ab, Permutation::parse("(1,3,2)"));
}

TEST(Permutation, WorkedProducts) {
  // Irreducibles sharing one point concatenate.
  EXPECT_EQ(Permutation::parse("(5,6)", 9) * Permutation::parse("(5,7,8,9)"), Permutation::parse("(5,6,7,8,9)"));
  EXPECT_EQ(Permutation::parse("(3,4,5)", 9) * Permutation::parse("(1,3)", 9) * Permutation::parse("(2,3)", 9),
            Permutation::parse("(1,2,3,4,5)", 9));
  EXPECT_EQ(Permutation::parse("(5,7,8,9)") * Permutation::parse("(1,2,3,4,5)", 9),
            Permutation::parse("(1,2,3,4,5,7,8,9)"));
  EXPECT_EQ(Permutation::parse("(1,2,3,4,5)", 9) * Permutation::parse("(1,7,8,9)"),
            Permutation::parse("(1,2,3,4,5,7,8,9)"));
  std::vector<Permutation> fs;
  for (auto s : {"(9,8,7,1)", "(2,1)", "(3,2)", "(6,3)", "(5,4,3)"}) fs.push_back(Permutation::parse(s, 9));
  EXPECT_EQ(ncht::product(fs, 9), Permutation::coxeter(9).inverse());
  EXPECT_TRUE(ncht::is_reduced_product(fs, Permutation::coxeter(9).inverse()));
}

// beta^-1 sigma beta relabels the points of sigma by beta.
TEST(Permutation, ConjugationRelabels) {
  for (const auto& sigma : all_permutations(4))
    for (const auto& beta : all_permutations(4)) {
      auto c = ncht::conjugate(sigma, beta);
      for (int x = 1; x <= 4; ++x) ASSERT_EQ(c(beta(x)), beta(sigma(x)));
    }
}

TEST(Permutation, ReflectionLengthMatchesTranspositionDistance) {
  for (int n = 1; n <= 5; ++n) {
    auto dist = transposition_distances(n);
    for (const auto& p : all_permutations(n)) ASSERT_EQ(ncht::reflection_length(p), dist.at(p.images())) << p;
  }
}

// Elements below c in absolute order, found by length additivity alone.
TEST(Permutation, NoncrossingPermutationsAreTheIntervalBelowCoxeter) {
  const std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    auto c = Permutation::coxeter(n);
    int below = 0;
    for (const auto& p : all_permutations(n)) {
      bool additive = ncht::reflection_length(p) + ncht::reflection_length(p.inverse() * c) == ncht::reflection_length(c);
      ASSERT_EQ(ncht::is_noncrossing_permutation(p), additive) << p;
      below += additive;
    }
    EXPECT_EQ(below, catalan[n]);
  }
}

TEST(Permutation, IrreducibleFromHyperedgeIsIncreasingCycle) {
  const int edge[] = {7, 1, 9, 8};
  auto p = ncht::irreducible_from_hyperedge(edge, 9);
  EXPECT_EQ(p.to_string(), "(1,7,8,9)");
  EXPECT_TRUE(p.is_irreducible());
  EXPECT_TRUE(ncht::is_noncrossing_permutation(p));
  EXPECT_FALSE(Permutation::parse("(1,3,2)").is_irreducible());
}

TEST(Permutation, QuotientLabel) {
  auto lower = Permutation::parse("(1,2)", 4);
  auto upper = Permutation::parse("(1,2,3)", 4);
  auto q = ncht::quotient_label(lower, upper);
  EXPECT_EQ(lower * q, upper);
  EXPECT_TRUE(ncht::precedes_in_reflection_order(lower, upper));
  EXPECT_THROW(ncht::quotient_label(Permutation::parse("(1,3)", 4), Permutation::parse("(1,2)(3,4)")),
               ncht::NotComparable);
}
