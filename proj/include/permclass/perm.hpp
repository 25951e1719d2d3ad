#pragma once

#include "permclass/error.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/**
 * A finite permutation in one-line notation with 1-based values.
 *
 * A Perm of length n holds each of 1..n exactly once. The empty permutation
 * is a valid value. Instances are immutable once built; every constructor
 * path validates the bijection invariant.
 */
class Perm {
public:
  Perm() = default;

  /// Throws Error(InvalidSequence) unless values is a permutation of 1..n.
  explicit Perm(std::vector<int> values);
  Perm(std::initializer_list<int> values) : Perm(std::vector<int>(values)) {}

  static Perm identity(std::size_t n);
  static Perm decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position pos.
  int at(std::size_t pos) const { return values_.at(pos - 1); }
  /// Value at 0-based index i, unchecked.
  int operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<const int> values() const noexcept { return values_; }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

private:
  struct Trusted {};
  Perm(Trusted, std::vector<int> values) noexcept : values_(std::move(values)) {}
  friend Perm pattern_of(std::span<const int>);

  std::vector<int> values_;
};

/// Strictly increasing 1-based positions into some permutation.
using PointSet = std::vector<std::size_t>;

/// The unique permutation order-isomorphic to seq (rank replacement).
/// Throws Error(InvalidSequence) on duplicate entries.
Perm pattern_of(std::span<const int> seq);
inline Perm pattern_of(std::initializer_list<int> seq) {
  return pattern_of(std::span<const int>(seq.begin(), seq.size()));
}

/// Pattern of the subsequence of p at the given positions.
/// Throws Error(InvalidPointSet) if positions are out of range or not strictly increasing.
Perm restriction(const Perm& p, const PointSet& positions);

/// Positions of host forming an occurrence of pat, if any. Depth-first search
/// over host positions; a candidate must fall inside the value window left by
/// the already-matched neighbours of the next pattern value.
std::optional<PointSet> find_embedding(const Perm& pat, const Perm& host);

/// pat ≺ host. The empty pattern is contained in everything.
bool contains(const Perm& pat, const Perm& host);

inline bool avoids(const Perm& host, std::span<const Perm> basis) {
  for (const auto& b : basis)
    if (contains(b, host)) return false;
  return true;
}

Perm inverse(const Perm& p);
Perm reverse(const Perm& p);
Perm complement(const Perm& p);

Perm direct_sum(const Perm& s, const Perm& t);
Perm skew_sum(const Perm& s, const Perm& t);

/// skeleton[parts...]: every point of the skeleton is blown up into a block
/// patterned on the matching part. Throws Error(InvalidInflation) on arity
/// mismatch or an empty part.
Perm inflate(const Perm& skeleton, std::span<const Perm> parts);

/// Text form: a digit string ("2143") when every value is a single digit and
/// no comma is present, otherwise comma-separated values. Whitespace around
/// values is ignored. Throws Error(InvalidSequence) naming the bad token.
Perm parse_perm(std::string_view text);

/// Digit string for n <= 9, comma-separated for n > 9.
std::string to_string(const Perm& p);
std::ostream& operator<<(std::ostream& out, const Perm& p);

/// All permutations of length n in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

} // namespace permclass

template <>
struct std::hash<permclass::Perm> {
  std::size_t operator()(const permclass::Perm& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.values()) h = h * 131 + static_cast<std::size_t>(v);
    return h;
  }
};
