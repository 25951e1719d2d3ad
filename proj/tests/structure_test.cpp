#include "permclass/structure.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace permclass {
namespace {

std::vector<Perm> deletions(const Perm& p) {
  std::vector<Perm> out;
  for (std::size_t skip = 0; skip < p.size(); ++skip) {
    std::vector<int> v;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != skip) v.push_back(p[i]);
    out.push_back(pattern_of(v));
  }
  return out;
}

TEST(Decomposition, Examples) {
  const auto d = up_decomposition(Perm{2, 1, 5, 3, 4});
  EXPECT_EQ(d.blocks, (std::vector<Perm>{Perm{2, 1}, Perm{3, 1, 2}}));
  EXPECT_EQ(up_decomposition(Perm::identity(6)).blocks, std::vector<Perm>(6, Perm{1}));
  EXPECT_EQ(up_decomposition(Perm::decreasing(6)).blocks.size(), 1u);
  EXPECT_EQ(down_decomposition(Perm::decreasing(6)).blocks, std::vector<Perm>(6, Perm{1}));
  EXPECT_EQ(down_decomposition(Perm{3, 4, 1, 2}).blocks, (std::vector<Perm>{Perm{1, 2}, Perm{1, 2}}));
}

TEST(Decomposition, EmptyInput) {
  for (auto f : {&up_decomposition, &down_decomposition}) {
    try {
      f(Perm{});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::EmptyInput);
    }
  }
  EXPECT_THROW(h_plus(Perm{}), Error);
  EXPECT_THROW(al(Perm{}), Error);
  EXPECT_THROW(s_k(Perm{}, 2), Error);
}

TEST(Decomposition, ReconstructionAndIndecomposableBlocks) {
  for (const auto& p : oracle::perms_up_to(8, 1)) {
    const auto up = up_decomposition(p);
    const auto down = down_decomposition(p);
    ASSERT_EQ(up.recombine(), p);
    ASSERT_EQ(down.recombine(), p);
    for (const auto& b : up.blocks) ASSERT_TRUE(is_up_indecomposable(b));
    for (const auto& b : down.blocks) ASSERT_TRUE(is_down_indecomposable(b));
  }
}

// Indecomposability by definition: no split point s with s ⊕ t.
bool up_indecomposable_by_definition(const Perm& p) {
  for (std::size_t cut = 1; cut < p.size(); ++cut) {
    bool all_low = true;
    for (std::size_t i = 0; i < cut; ++i) all_low = all_low && p[i] <= static_cast<int>(cut);
    if (all_low) return false;
  }
  return true;
}

TEST(Decomposition, IndecomposableMatchesDefinition) {
  for (const auto& p : oracle::perms_up_to(7, 1)) {
    ASSERT_EQ(is_up_indecomposable(p), up_indecomposable_by_definition(p));
    ASSERT_EQ(is_down_indecomposable(p), up_indecomposable_by_definition(complement(p)));
  }
}

TEST(HPlus, Examples) {
  EXPECT_EQ(h_plus(Perm::identity(5)), 1u);
  EXPECT_EQ(h_plus(Perm::decreasing(5)), 5u);
  EXPECT_EQ(h_plus(Perm{2, 1, 5, 3, 4}), 3u);
  EXPECT_EQ(h_minus(Perm::identity(5)), 5u);
  EXPECT_EQ(h_minus(Perm::decreasing(5)), 1u);
}

TEST(Alternating, Examples) {
  EXPECT_TRUE(is_alternating(Perm{3, 1, 4, 2}));
  EXPECT_FALSE(is_alternating(Perm{1, 2}));
  EXPECT_TRUE(is_alternating(Perm{1}));
  EXPECT_TRUE(is_alternating(Perm{}));
  // The zig-zag 2143 is not alternating in the odd-above-even sense.
  EXPECT_FALSE(is_alternating(Perm{2, 1, 4, 3}));
  EXPECT_TRUE(is_alternating(Perm{2, 1}));
}

TEST(Al, Examples) {
  EXPECT_EQ(al(Perm{1, 2, 3}), 1u);
  EXPECT_EQ(al(Perm{2, 1}), 2u);
  EXPECT_EQ(al(Perm{3, 1, 4, 2}), 4u);
}

TEST(Al, AgreesWithPatternEnumeration) {
  for (const auto& p : oracle::perms_up_to(7, 1)) ASSERT_EQ(al(p), oracle::al(p)) << to_string(p);
}

TEST(KDecomposition, Examples) {
  EXPECT_EQ(k_decomposition(Perm{2, 1, 4, 3}, 2), (IntervalPartition{{1, 2}, {3, 4}}));
  EXPECT_EQ(k_decomposition(Perm::identity(7), 2), (IntervalPartition{{1, 7}}));
  EXPECT_EQ(s_k(Perm{2, 1, 4, 3}, 2), SegStat::of(2));
  EXPECT_EQ(s_k(Perm::identity(7), 2), SegStat::of(1));
  EXPECT_TRUE(s_k(Perm{2, 1, 4, 3}, 1).is_unbounded());
  EXPECT_THROW(s_k(Perm{1}, 1).value(), Error);
}

TEST(KDecomposition, KBelowTwo) {
  try {
    k_decomposition(Perm{1, 2}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UseSegStatUnbounded);
  }
}

TEST(KDecomposition, TwoMeansMonotoneRuns) {
  // With k = 2 every interval restriction must be monotone.
  for (const auto& p : oracle::perms_up_to(7, 1)) {
    for (const auto& iv : k_decomposition(p, 2)) {
      bool inc = true, dec = true;
      for (std::size_t i = iv.first; i < iv.last; ++i) {
        inc = inc && p.at(i) < p.at(i + 1);
        dec = dec && p.at(i) > p.at(i + 1);
      }
      ASSERT_TRUE(inc || dec);
    }
  }
}

TEST(KDecomposition, PartitionCoversAndIsMaximal) {
  for (const auto& p : oracle::perms_up_to(7, 1)) {
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto parts = k_decomposition(p, k);
      std::size_t next = 1;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& iv = parts[j];
        ASSERT_EQ(iv.first, next);
        ASSERT_GE(iv.last, iv.first);
        PointSet pos;
        for (auto i = iv.first; i <= iv.last; ++i) pos.push_back(i);
        ASSERT_TRUE(in_h_union(restriction(p, pos), k));
        if (iv.last < p.size()) {
          pos.push_back(iv.last + 1);
          ASSERT_FALSE(in_h_union(restriction(p, pos), k));
        }
        next = iv.last + 1;
      }
      ASSERT_EQ(next, p.size() + 1);
    }
  }
}

// Smallest number of intervals over all interval partitions whose pieces lie in H⁺_k ∪ H⁻_k.
std::size_t min_weak_partition(const Perm& p, std::size_t k) {
  const auto n = p.size();
  std::size_t best = n + 1;
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::size_t pieces = 0;
    bool ok = true;
    std::size_t start = 1;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      if (i == n || (cuts >> (i - 1) & 1u)) {
        PointSet pos;
        for (auto j = start; j <= i; ++j) pos.push_back(j);
        ok = in_h_union(restriction(p, pos), k);
        ++pieces;
        start = i + 1;
      }
    }
    if (ok) best = std::min(best, pieces);
  }
  return best;
}

TEST(KDecomposition, GreedyIsMinimalAmongWeakDecompositions) {
  for (const auto& p : oracle::perms_up_to(7, 1))
    for (std::size_t k : {2u, 3u}) ASSERT_EQ(s_k(p, k).value(), min_weak_partition(p, k)) << to_string(p);
}

TEST(Properties, IndecomposableHasIndecomposableChild) {
  for (const auto& p : oracle::perms_up_to(7, 2)) {
    const auto kids = deletions(p);
    if (is_up_indecomposable(p))
      ASSERT_TRUE(std::any_of(kids.begin(), kids.end(), [](const Perm& s) { return is_up_indecomposable(s); }))
          << to_string(p);
    if (is_down_indecomposable(p))
      ASSERT_TRUE(std::any_of(kids.begin(), kids.end(), [](const Perm& s) { return is_down_indecomposable(s); }))
          << to_string(p);
  }
}

TEST(Properties, OnePointGrowthBoundsAlAndSk) {
  for (const auto& tau : oracle::perms_up_to(6, 2)) {
    for (const auto& sigma : deletions(tau)) {
      ASSERT_LE(al(tau), al(sigma) + 2);
      for (std::size_t k : {2u, 3u}) ASSERT_LE(s_k(tau, k).value(), s_k(sigma, k).value() + 2);
    }
  }
}

void compositions(std::size_t remaining, const Perm& acc, std::set<Perm>& out) {
  if (remaining == 0) {
    out.insert(acc);
    return;
  }
  for (std::size_t part = 1; part <= remaining; ++part)
    compositions(remaining - part, direct_sum(acc, Perm::decreasing(part)), out);
}

TEST(Properties, SumsOfDecreasingBlocksCountPowersOfTwo) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<Perm> sums;
    compositions(n, Perm{}, sums);
    ASSERT_EQ(sums.size(), std::size_t{1} << (n - 1)) << n;
    for (const auto& s : sums) ASSERT_EQ(s.size(), n);
  }
}

} // namespace
} // namespace permclass
