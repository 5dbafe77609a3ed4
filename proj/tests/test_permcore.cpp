#include <gtest/gtest.h>

#include "bfc/bfc.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

Permutation s(int i) { return Permutation::simple(i); }
Permutation one_line(int offset, std::vector<int> images) { return Permutation(offset, images); }

}  // namespace

TEST(Permutation, CanonicalWindowIsMinimal) {
  const Permutation p(-3, {-3, -2, 0, -1, 1});
  EXPECT_EQ(p.offset(), -1);
  EXPECT_EQ(p.images(), (std::vector<int>{0, -1}));
  EXPECT_EQ(p, s(-1));
  EXPECT_TRUE(Permutation(4, {4, 5, 6}).is_identity());
  EXPECT_THROW(Permutation(0, {0, 0}), InvalidPermutation);
  EXPECT_THROW(Permutation(0, {1, 2}), InvalidPermutation);
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(Permutation{}, Permutation{}), Permutation{});
  EXPECT_EQ(compose(s(1), s(2)), one_line(1, {2, 3, 1}));
  EXPECT_EQ(compose(s(2), s(1)), one_line(1, {3, 1, 2}));
}

TEST(Compose, MatchesPositionSwapOracle) {
  for (const Word& w : {Word{1, 2}, Word{2, 1}, Word{0, 1, -1, 0}, Word{3, 2, 5, 4, 1}})
    EXPECT_EQ(product_word(w), oracle::by_position_swaps(w));
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Permutation{}), 0);
  EXPECT_EQ(length(s(5)), 1);
  EXPECT_EQ(length(one_line(1, {3, 1, 2})), 2);
}

TEST(Words, ProductAndReduced) {
  EXPECT_EQ(product_word({}), Permutation{});
  EXPECT_FALSE(is_reduced({1, 1}));
  EXPECT_TRUE(is_reduced({1, 2, 1, 4, 3}));
}

TEST(ReducedWords, Examples) {
  EXPECT_EQ(reduced_words(Permutation{}), std::vector<Word>{Word{}});
  EXPECT_EQ(reduced_words(one_line(1, {2, 3, 1})), std::vector<Word>{(Word{1, 2})});
  EXPECT_EQ(reduced_words(one_line(1, {3, 2, 1})).size(), 2u);
}

TEST(ReducedWords, MatchBruteForce) {
  for (const Permutation& p : oracle::symmetric_group(4)) {
    const auto words = reduced_words(p);
    EXPECT_EQ(std::set<Word>(words.begin(), words.end()), oracle::reduced_words(p));
  }
}

TEST(ReducedWords, BoundExceeded) {
  Caps caps;
  caps.max_length = 2;
  EXPECT_THROW(reduced_words(one_line(1, {3, 2, 1}), caps), BoundExceeded);
}

TEST(KBruhat, Examples) {
  auto targets = [](const Permutation& p, int k) {
    std::set<std::tuple<Permutation, int, int>> out;
    for (const KCover& c : kbruhat_covers(p, k)) out.emplace(c.target, c.a, c.b);
    return out;
  };
  EXPECT_EQ(targets(Permutation{}, 1),
            (std::set<std::tuple<Permutation, int, int>>{{s(1), 1, 2}}));
  const auto from_s1 = targets(s(1), 1);
  EXPECT_TRUE(from_s1.contains({one_line(1, {3, 1, 2}), 1, 3}));
  EXPECT_TRUE(from_s1.contains({s(1) * Permutation::transposition(0, 2), 0, 2}));
  EXPECT_EQ(targets(Permutation{}, 0),
            (std::set<std::tuple<Permutation, int, int>>{{s(0), 0, 1}}));
}

TEST(KBruhat, CoversAddOneToLength) {
  for (const Permutation& p : permutation_pool(-2, 2, 3))
    for (int k = -1; k <= 1; ++k)
      for (const KCover& c : kbruhat_covers(p, k)) {
        EXPECT_EQ(c.target.length(), p.length() + 1);
        EXPECT_LE(c.a, k);
        EXPECT_GT(c.b, k);
        EXPECT_EQ(c.target, p * Permutation::transposition(c.a, c.b));
      }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(Permutation{}, 5), Permutation{});
  EXPECT_EQ(tau(s(1), 1), s(2));
  const Permutation w = product_word({3, 1, 0, 2});
  EXPECT_EQ(tau(tau(w, 3), -3), w);
}

TEST(Grassmannian, SortExamples) {
  EXPECT_EQ(grassmannian_sort(one_line(1, {4, 2, 3, 5, 6, 1}), 3),
            one_line(1, {2, 3, 4, 1, 5, 6}));
  EXPECT_EQ(grassmannian_sort(Permutation{}, 2), Permutation{});
  EXPECT_EQ(grassmannian_sort(s(2), 5), Permutation{});
}

TEST(Grassmannian, PartitionExamples) {
  EXPECT_EQ(grassmannian_partition(Permutation{}, 3), Partition{});
  EXPECT_EQ(grassmannian_partition(one_line(0, {1, 2, 0}), 1), (Partition{1, 1}));
  EXPECT_EQ(grassmannian_partition(one_line(1, {3, 1, 2}), 1), (Partition{2}));
  EXPECT_THROW(grassmannian_partition(one_line(1, {3, 1, 2}), 2), NotGrassmannian);
}

TEST(Grassmannian, RoundTrip) {
  for (int k = -1; k <= 3; ++k)
    for (const Partition& lambda : partitions_up_to(6)) {
      const Permutation u = grassmannian_from_partition(lambda, k);
      EXPECT_TRUE(is_grassmannian(u, k));
      EXPECT_EQ(grassmannian_partition(u, k), lambda);
      EXPECT_EQ(u.length(), lambda.size());
    }
}

TEST(PiK, Examples) {
  EXPECT_EQ(pi_k(Permutation{}, 2), Partition{});
  EXPECT_EQ(pi_k(s(1), 1), (Partition{1}));
  EXPECT_EQ(pi_k(s(1), 5), Partition{});
}

TEST(Maya, Examples) {
  const MayaDiagram vacuum = maya_from_partition(Partition{}, 0);
  for (int i = -5; i <= 0; ++i) EXPECT_TRUE(vacuum.occupied(i));
  for (int i = 1; i <= 5; ++i) EXPECT_FALSE(vacuum.occupied(i));

  // Labels of (3,1) at k = 3 read ..., 0, 1, 4, 2, 5, 6, 3, 7, 8, ...
  const Permutation labels = maya_labels(maya_from_partition(Partition{3, 1}, 3));
  const std::vector<int> expected{-1, 0, 1, 4, 2, 5, 6, 3, 7, 8};
  EXPECT_EQ(labels.one_line(-1, 9), expected);

  const auto [lambda, center] = partition_from_maya(maya_from_partition(Partition{2, 2, 1}, 2));
  EXPECT_EQ(lambda, (Partition{2, 2, 1}));
  EXPECT_EQ(center, 2);
}

TEST(Maya, Malformed) {
  EXPECT_THROW(MayaDiagram(0, {false, true}, 5), MalformedMaya);
  EXPECT_NO_THROW(MayaDiagram(0, {false, true}, 0));
}

TEST(Partition, Basics) {
  EXPECT_THROW(Partition({1, 2}), InvalidPartition);
  EXPECT_EQ((Partition{3, 1, 0}), (Partition{3, 1}));
  EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
}
