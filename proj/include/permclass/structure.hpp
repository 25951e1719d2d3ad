#pragma once

#include "permclass/perm.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace permclass {

enum class Direction { Up, Down };

/// Splitting of a permutation into ⊕-indecomposable (Up) or
/// ⊖-indecomposable (Down) blocks, left to right.
struct Decomposition {
  Direction direction;
  std::vector<Perm> blocks;

  /// Folds the blocks back together with ⊕ or ⊖.
  Perm recombine() const;
};

Decomposition up_decomposition(const Perm& p);
Decomposition down_decomposition(const Perm& p);

bool is_up_indecomposable(const Perm& p);
bool is_down_indecomposable(const Perm& p);

/// Longest block of the up (resp. down) decomposition.
std::size_t h_plus(const Perm& p);
std::size_t h_minus(const Perm& p);

/// True iff every value at an odd position exceeds every value at an even position.
bool is_alternating(const Perm& p);

/// Longest alternating pattern of p or of its inverse.
std::size_t al(const Perm& p);

/// Longest alternating pattern of p itself (no inverse).
std::size_t al_direct(const Perm& p);

/// Value of s_k: a positive count, or unbounded (only for k = 1).
class SegStat {
public:
  static SegStat unbounded() { return SegStat(std::nullopt); }
  static SegStat of(std::size_t value) { return SegStat(value); }

  bool is_unbounded() const noexcept { return !value_; }
  /// Throws Error(Undefined) when unbounded.
  std::size_t value() const;

  bool operator==(const SegStat&) const = default;

private:
  explicit SegStat(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// Closed 1-based interval [first, last] of positions.
struct Interval {
  std::size_t first;
  std::size_t last;

  std::size_t length() const noexcept { return last - first + 1; }
  bool operator==(const Interval&) const = default;
};

using IntervalPartition = std::vector<Interval>;

/// h⁺(p) < k or h⁻(p) < k.
bool in_h_union(const Perm& p, std::size_t k);

/// Greedy left-to-right partition into longest intervals whose restriction
/// lies in H⁺_k ∪ H⁻_k. Requires k >= 2 (Error UseSegStatUnbounded) and a
/// nonempty permutation (Error EmptyInput).
IntervalPartition k_decomposition(const Perm& p, std::size_t k);

/// Number of intervals of the k-decomposition; unbounded for k = 1.
SegStat s_k(const Perm& p, std::size_t k);

} // namespace permclass
