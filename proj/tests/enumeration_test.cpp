#include "permclass/enumeration.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <random>
#include <set>

namespace permclass {
namespace {

const CountSeq kFourBasisCounts =
    make_count_seq({1, 2, 5, 12, 28, 65, 152, 355, 829, 1936, 4521, 10558});

TEST(Enumerate, Examples) {
  auto s3 = enumerate_avoiders({Perm{1, 2, 3}}, 3);
  EXPECT_EQ(s3.size(), 5u);
  EXPECT_EQ(std::find(s3.begin(), s3.end(), Perm{1, 2, 3}), s3.end());
  EXPECT_EQ(enumerate_avoiders({}, 3).size(), 6u);
  EXPECT_EQ(enumerate_avoiders(four_basis(), 4).size(), 12u);
  EXPECT_TRUE(enumerate_avoiders({Perm{1}}, 3).empty());
  EXPECT_EQ(enumerate_avoiders({Perm{1, 2}}, 4), std::vector<Perm>{Perm::decreasing(4)});
}

TEST(Enumerate, MatchesFilterOfAllPermutations) {
  const std::vector<std::vector<Perm>> bases{
      {Perm{1, 2, 3}}, {Perm{2, 3, 1}}, {Perm{1, 3, 2, 4}}, four_basis(), {Perm{2, 4, 1, 3}, Perm{3, 1, 4, 2}}, {}};
  for (const auto& basis : bases)
    for (std::size_t n = 1; n <= 7; ++n) ASSERT_EQ(enumerate_avoiders(basis, n), oracle::avoiders(basis, n)) << n;
}

TEST(Enumerate, ParallelIsScheduleIndependent) {
  const auto reference = enumerate_avoiders_serial(four_basis(), 10);
  for (int threads : {1, 2, 5, 16}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(enumerate_avoiders(four_basis(), 10), reference);
    const std::vector<Perm> parents = enumerate_avoiders_serial({Perm{1, 2, 3}}, 7);
    EXPECT_EQ(extend_level(parents, {Perm{1, 2, 3}}), extend_level_serial(parents, {Perm{1, 2, 3}}));
  }
}

TEST(Enumerate, DeletingAPointStaysInTheClass) {
  const auto basis = four_basis();
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto level = enumerate_avoiders(basis, n);
    const auto below = enumerate_avoiders(basis, n - 1);
    const std::set<Perm> below_set(below.begin(), below.end());
    for (const auto& p : level)
      for (std::size_t skip = 1; skip <= n; ++skip) {
        PointSet pos;
        for (std::size_t i = 1; i <= n; ++i)
          if (i != skip) pos.push_back(i);
        ASSERT_TRUE(below_set.contains(restriction(p, pos)));
      }
  }
}

TEST(Count, KnownSequences) {
  EXPECT_EQ(count_avoiders(four_basis(), 12), kFourBasisCounts);
  EXPECT_EQ(count_avoiders({Perm{1, 2, 3}, Perm{3, 2, 1, 4}, Perm{2, 1, 4, 3}}, 5), make_count_seq({1, 2, 5, 12, 29}));
  EXPECT_EQ(count_avoiders({Perm{1, 2, 3}, Perm{3, 2, 1, 4}}, 4), make_count_seq({1, 2, 5, 13}));
  EXPECT_EQ(count_avoiders({Perm{1, 2, 3}}, 5), make_count_seq({1, 2, 5, 14, 42}));
}

TEST(Count, BasisMonotonicity) {
  const std::vector<Perm> small{Perm{1, 2, 3}};
  const std::vector<Perm> mid{Perm{1, 2, 3}, Perm{3, 2, 1, 4}};
  const std::vector<Perm> big{Perm{1, 2, 3}, Perm{3, 2, 1, 4}, Perm{2, 1, 4, 3}};
  const auto a = count_avoiders(small, 9);
  const auto b = count_avoiders(mid, 9);
  const auto c = count_avoiders(big, 9);
  const auto d = count_avoiders(four_basis(), 9);
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_LE(b.at(n), a.at(n));
    EXPECT_LE(c.at(n), b.at(n));
    EXPECT_LE(d.at(n), c.at(n));
  }
}

TEST(StateMachine, SeedsAndStep) {
  EXPECT_EQ(seed_state(), (StateVector{0, 0, 0, 0, 1}));
  EXPECT_EQ(abcde_step(seed_state()), (StateVector{1, 0, 0, 1, 0}));
  EXPECT_EQ(abcde_step(StateVector{1, 0, 0, 1, 0}), (StateVector{2, 1, 0, 2, 0}));
  EXPECT_EQ(abcde_step(StateVector{0, 0, 0, 0, 0}), (StateVector{0, 0, 0, 0, 0}));
  EXPECT_EQ(abcde_census(2), (StateVector{1, 0, 0, 1, 0}));
  EXPECT_EQ(abcde_census(3).sum(), 5);
  try {
    abcde_census(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UseSeedVector);
  }
}

// Independent census: filter all permutations and classify by first two values.
StateVector brute_census(std::size_t n) {
  StateVector v{0, 0, 0, 0, 0};
  const int top = static_cast<int>(n);
  for (const auto& p : oracle::avoiders(four_basis(), n)) {
    if (p[0] == top - 1) ++v.a;
    else if (p[0] == top - 2) ++v.b;
    else if (p[0] <= top - 3) ++v.c;
    else if (p[1] >= top - 3) ++v.d;
    else ++v.e;
  }
  return v;
}

TEST(StateMachine, CensusMatchesEvolutionComponentwise) {
  const auto evolved = abcde_evolve(12);
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_EQ(abcde_census(n), evolved[n - 1]) << n;
    EXPECT_EQ(evolved[n - 1].sum(), kFourBasisCounts.at(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(brute_census(n), evolved[n - 1]) << n;
}

TEST(StateMachine, MaximumSitsInFirstThreePositions) {
  for (std::size_t n = 2; n <= 10; ++n)
    for (const auto& p : enumerate_avoiders(four_basis(), n)) {
      const auto inv = inverse(p);
      ASSERT_LE(inv.at(n), 3) << to_string(p);
    }
}

TEST(Recurrence, Evaluate) {
  const auto s = make_recurrence({1, 2, 2, 1, 1}, {1, 2, 5, 12, 28});
  const auto seq = eval_recurrence(s, 13);
  EXPECT_EQ(seq.at(12), 10558);
  EXPECT_EQ(seq.at(13), 24656);
  EXPECT_EQ(eval_recurrence(make_recurrence({2, 1}, {1, 2}), 5).at(5), 29);
  EXPECT_EQ(eval_recurrence(make_recurrence({1}, {7}), 6), make_count_seq({7, 7, 7, 7, 7, 7}));
  LinearRecurrence half{{mpq_class(1, 2)}, {3}};
  EXPECT_THROW(eval_recurrence(half, 2), Error);
}

TEST(Recurrence, FitKnownSequences) {
  const auto s = fit_recurrence(kFourBasisCounts, 5);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->order(), 5u);
  EXPECT_EQ(*s, make_recurrence({1, 2, 2, 1, 1}, {1, 2, 5, 12, 28}));

  const auto t_seq = eval_recurrence(make_recurrence({2, 1}, {1, 2}), 10);
  const auto t = fit_recurrence(t_seq, 4);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, make_recurrence({2, 1}, {1, 2}));

  CountSeq catalan;
  for (unsigned long n = 1; n <= 12; ++n) catalan.values.push_back(oracle::catalan(n));
  EXPECT_FALSE(fit_recurrence(catalan, 5));
}

TEST(Recurrence, NeedMoreTerms) {
  try {
    fit_recurrence(make_count_seq({1, 2, 3, 4, 5}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NeedMoreTerms);
  }
  EXPECT_NO_THROW(fit_recurrence(make_count_seq({1, 2, 3, 4, 5, 6}), 2));
}

TEST(Recurrence, RationalCoefficients) {
  // Averaging the previous two terms keeps everything integral for a while.
  const auto seq = make_count_seq({256, 0, 128, 64, 96, 80, 88, 84, 86, 85});
  const auto r = fit_recurrence(seq, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->coefficients, (std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 2)}));
}

TEST(Recurrence, FitInvertsEvaluation) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    LinearRecurrence r;
    for (std::size_t i = 0; i < d; ++i) {
      r.coefficients.emplace_back(static_cast<long>(rng() % 4) + (i + 1 == d ? 1 : 0));
      r.initial.emplace_back(static_cast<long>(1 + rng() % 9));
    }
    const auto seq = eval_recurrence(r, 14);
    const auto fit = fit_recurrence(seq, 4);
    ASSERT_TRUE(fit);
    // A lower order can only win when the sequence genuinely satisfies it.
    ASSERT_LE(fit->order(), d);
    ASSERT_EQ(eval_recurrence(*fit, 14), seq);
    if (fit->order() == d) ASSERT_EQ(fit->coefficients, r.coefficients);
  }
}

TEST(GeneratingFunction, Examples) {
  const auto s = gf_from_recurrence(make_recurrence({1, 2, 2, 1, 1}, {1, 2, 5, 12, 28}));
  EXPECT_EQ(s.numerator, (IntPoly{0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(s.denominator, (IntPoly{1, -1, -2, -2, -1, -1}));
  const auto t = gf_from_recurrence(make_recurrence({2, 1}, {1, 2}));
  EXPECT_EQ(t.denominator, (IntPoly{1, -2, -1}));
  const auto one = gf_from_recurrence(make_recurrence({1}, {1}));
  EXPECT_EQ(one.numerator, (IntPoly{0, 1}));
  EXPECT_EQ(one.denominator, (IntPoly{1, -1}));
}

TEST(GeneratingFunction, SeriesReproducesRecurrence) {
  std::mt19937 rng(4);
  std::vector<LinearRecurrence> recs{make_recurrence({1, 2, 2, 1, 1}, {1, 2, 5, 12, 28}),
                                     make_recurrence({2, 1}, {1, 2}), make_recurrence({3, -1}, {1, 2})};
  for (int trial = 0; trial < 10; ++trial) {
    LinearRecurrence r;
    for (std::size_t i = 0, d = 1 + rng() % 5; i < d; ++i) {
      r.coefficients.emplace_back(static_cast<long>(rng() % 7) - 3);
      r.initial.emplace_back(static_cast<long>(rng() % 11) - 5);
    }
    recs.push_back(r);
  }
  for (const auto& r : recs) {
    const auto seq = eval_recurrence(r, 25);
    const auto series = series_coefficients(gf_from_recurrence(r), 25);
    for (std::size_t n = 1; n <= 25; ++n) ASSERT_EQ(series[n - 1], mpq_class(seq.at(n)));
  }
}

TEST(GeneratingFunction, TransferMatrixAgreesWithSeries) {
  const auto gf = gf_from_recurrence(make_recurrence({1, 2, 2, 1, 1}, {1, 2, 5, 12, 28}));
  const auto series = series_coefficients(gf, 30);
  const auto states = abcde_evolve(30);
  for (std::size_t n = 1; n <= 30; ++n) ASSERT_EQ(series[n - 1], mpq_class(states[n - 1].sum())) << n;
}

} // namespace
} // namespace permclass
