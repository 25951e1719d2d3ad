#pragma once

#include "permclass/perm.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace permclass {

/// Exact counts indexed from n = 1: values[0] is the count for n = 1.
struct CountSeq {
  std::vector<mpz_class> values;

  std::size_t size() const noexcept { return values.size(); }
  /// Term for 1-based index n.
  const mpz_class& at(std::size_t n) const { return values.at(n - 1); }

  bool operator==(const CountSeq&) const = default;
};

CountSeq make_count_seq(std::initializer_list<long> terms);

/// S_n(basis), sorted lexicographically. Grown level by level: every member of
/// length n arises from exactly one member of length n-1 by inserting the value
/// n, so parents are extended in parallel without duplicates.
std::vector<Perm> enumerate_avoiders(const std::vector<Perm>& basis, std::size_t n);

/// Serial reference for enumerate_avoiders.
std::vector<Perm> enumerate_avoiders_serial(const std::vector<Perm>& basis, std::size_t n);

/// Children of one level: the avoiders obtained by inserting the new maximum
/// into each parent. Parallel over parents; output order follows the parents.
std::vector<Perm> extend_level(const std::vector<Perm>& parents, const std::vector<Perm>& basis);
std::vector<Perm> extend_level_serial(const std::vector<Perm>& parents, const std::vector<Perm>& basis);

/// |S_n(basis)| for n = 1..max_n. Keeps only the current level in memory.
CountSeq count_avoiders(const std::vector<Perm>& basis, std::size_t max_n);

/// The basis {123, 3214, 2143, 15432} whose avoiders the five-state machine counts.
std::vector<Perm> four_basis();

/// Sizes of the five classes A..E of the four-basis avoiders of one length.
struct StateVector {
  mpz_class a, b, c, d, e;

  mpz_class sum() const { return a + b + c + d + e; }
  bool operator==(const StateVector&) const = default;
};

/// The n = 1 convention (0, 0, 0, 0, 1).
StateVector seed_state();

/// One insertion step: a' = 2d + e, b' = a, c' = b, d' = a + b + d + e, e' = c.
StateVector abcde_step(const StateVector& v);

/// State vectors for n = 1..max_n evolved from the seed.
std::vector<StateVector> abcde_evolve(std::size_t max_n);

/// Classifies every avoider of length n by its first two values:
///   A: π(1) = n-1, B: π(1) = n-2, C: π(1) <= n-3,
///   D: π(1) = n and π(2) >= n-3, E: π(1) = n and π(2) <= n-4.
/// Throws Error(UseSeedVector) for n < 2.
StateVector abcde_census(std::size_t n);

/// u_n = c_1 u_{n-1} + ... + c_d u_{n-d} for n > d, with u_1..u_d given.
struct LinearRecurrence {
  std::vector<mpq_class> coefficients;
  std::vector<mpz_class> initial;

  std::size_t order() const noexcept { return coefficients.size(); }
  bool operator==(const LinearRecurrence&) const = default;
};

LinearRecurrence make_recurrence(std::initializer_list<long> coefficients,
                                 std::initializer_list<long> initial);

/// Terms 1..max_n. Throws Error(Unsupported) if a term is not an integer.
CountSeq eval_recurrence(const LinearRecurrence& r, std::size_t max_n);

/// Smallest-order recurrence (order <= max_order) consistent with every term of
/// seq, found by exact rational elimination over the whole overdetermined
/// system. Each candidate order d must leave at least d + 2 surplus equations.
/// Returns nullopt when no order fits; throws Error(NeedMoreTerms) when seq has
/// fewer than 2 * max_order + 2 terms.
std::optional<LinearRecurrence> fit_recurrence(const CountSeq& seq, std::size_t max_order);

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<mpz_class>;

/// P(x) / Q(x) with Q(0) != 0.
struct RationalGF {
  IntPoly numerator;
  IntPoly denominator;
};

/// Generating function sum_{n>=1} u_n x^n; the denominator is
/// 1 - c_1 x - ... - c_d x^d scaled to integer coefficients.
RationalGF gf_from_recurrence(const LinearRecurrence& r);

/// Power-series coefficients of x^1..x^count.
std::vector<mpq_class> series_coefficients(const RationalGF& gf, std::size_t count);

} // namespace permclass
