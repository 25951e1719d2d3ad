#include "permclass/structure.hpp"

#include <algorithm>

namespace permclass {

namespace {

void require_nonempty(const Perm& p, const char* what) {
  if (p.empty()) throw Error(Errc::EmptyInput, std::string(what) + " of the empty permutation");
}

Decomposition split(const Perm& p, Direction dir) {
  require_nonempty(p, dir == Direction::Up ? "up-decomposition" : "down-decomposition");
  const auto n = p.size();
  Decomposition d{dir, {}};
  std::size_t start = 0;
  int lo = static_cast<int>(n) + 1;
  int hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
    // A block ends where the prefix occupies the bottom (up) or top (down) values.
    const bool cut = dir == Direction::Up ? hi == static_cast<int>(i + 1)
                                          : lo == static_cast<int>(n - i);
    if (cut) {
      d.blocks.push_back(pattern_of(p.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return d;
}

std::size_t longest_block(const Decomposition& d) {
  std::size_t best = 0;
  for (const auto& b : d.blocks) best = std::max(best, b.size());
  return best;
}

} // namespace

Perm Decomposition::recombine() const {
  Perm out;
  for (const auto& b : blocks) out = direction == Direction::Up ? direct_sum(out, b) : skew_sum(out, b);
  return out;
}

Decomposition up_decomposition(const Perm& p) { return split(p, Direction::Up); }
Decomposition down_decomposition(const Perm& p) { return split(p, Direction::Down); }

bool is_up_indecomposable(const Perm& p) { return !p.empty() && up_decomposition(p).blocks.size() == 1; }
bool is_down_indecomposable(const Perm& p) { return !p.empty() && down_decomposition(p).blocks.size() == 1; }

std::size_t h_plus(const Perm& p) { return longest_block(up_decomposition(p)); }
std::size_t h_minus(const Perm& p) { return longest_block(down_decomposition(p)); }

bool is_alternating(const Perm& p) {
  int min_odd = static_cast<int>(p.size()) + 1;
  int max_even = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 0)
      min_odd = std::min(min_odd, p[i]);
    else
      max_even = std::max(max_even, p[i]);
  }
  return min_odd > max_even;
}

// An alternating pattern of length m occurs iff for some threshold t the
// positions can be picked high, low, high, ... with highs > t >= lows. For a
// fixed t the longest such pick is the number of high/low runs once any
// leading low run is dropped.
std::size_t al_direct(const Perm& p) {
  require_nonempty(p, "al");
  const auto n = p.size();
  std::size_t best = 1;
  for (std::size_t t = 1; t < n; ++t) {
    std::size_t runs = 0;
    bool prev_high = false;
    bool started = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool high = p[i] > static_cast<int>(t);
      if (!started) {
        if (!high) continue;
        started = true;
        runs = 1;
      } else if (high != prev_high) {
        ++runs;
      }
      prev_high = high;
    }
    best = std::max(best, runs);
  }
  return best;
}

std::size_t al(const Perm& p) {
  return std::max(al_direct(p), al_direct(inverse(p)));
}

std::size_t SegStat::value() const {
  if (!value_) throw Error(Errc::Undefined, "s_k is unbounded");
  return *value_;
}

bool in_h_union(const Perm& p, std::size_t k) {
  if (p.empty()) return true;
  return h_plus(p) < k || h_minus(p) < k;
}

IntervalPartition k_decomposition(const Perm& p, std::size_t k) {
  if (k < 2)
    throw Error(Errc::UseSegStatUnbounded,
                "k-decomposition needs k >= 2 (got " + std::to_string(k) + "); s_1 is unbounded");
  require_nonempty(p, "k-decomposition");
  const auto n = p.size();
  IntervalPartition parts;
  std::size_t first = 1;
  while (first <= n) {
    // Membership is closed under shrinking the interval, so extend until it fails.
    std::size_t last = first;
    while (last < n) {
      const auto window = p.values().subspan(first - 1, last + 1 - first + 1);
      if (!in_h_union(pattern_of(window), k)) break;
      ++last;
    }
    parts.push_back({first, last});
    first = last + 1;
  }
  return parts;
}

SegStat s_k(const Perm& p, std::size_t k) {
  require_nonempty(p, "s_k");
  if (k == 0) throw Error(Errc::InvalidIndex, "s_k needs k >= 1");
  if (k == 1) return SegStat::unbounded();
  return SegStat::of(k_decomposition(p, k).size());
}

} // namespace permclass
