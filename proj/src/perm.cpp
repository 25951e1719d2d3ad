#include "permclass/perm.hpp"

#include <ostream>
#include <algorithm>
#include <charconv>
#include <numeric>

namespace permclass {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::InvalidSequence: return "InvalidSequence";
  case Errc::InvalidPointSet: return "InvalidPointSet";
  case Errc::InvalidInflation: return "InvalidInflation";
  case Errc::EmptyInput: return "EmptyInput";
  case Errc::UseSegStatUnbounded: return "UseSegStatUnbounded";
  case Errc::InvalidIndex: return "InvalidIndex";
  case Errc::NotATree: return "NotATree";
  case Errc::UseSeedVector: return "UseSeedVector";
  case Errc::NeedMoreTerms: return "NeedMoreTerms";
  case Errc::Unsupported: return "Unsupported";
  case Errc::NoRootAboveOne: return "NoRootAboveOne";
  case Errc::Undefined: return "Undefined";
  }
  return "Unknown";
}

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw Error(Errc::InvalidSequence,
                  "not a permutation of 1.." + std::to_string(n) + ": offending value " +
                      std::to_string(v));
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(Trusted{}, std::move(v));
}

Perm Perm::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Perm(Trusted{}, std::move(v));
}

Perm pattern_of(std::span<const int> seq) {
  const auto n = seq.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]])
      throw Error(Errc::InvalidSequence, "duplicate entry " + std::to_string(seq[order[r]]));
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Perm(Perm::Trusted{}, std::move(ranks));
}

Perm restriction(const Perm& p, const PointSet& positions) {
  std::vector<int> sub;
  sub.reserve(positions.size());
  std::size_t prev = 0;
  for (auto pos : positions) {
    if (pos < 1 || pos > p.size() || pos <= prev)
      throw Error(Errc::InvalidPointSet,
                  "position " + std::to_string(pos) + " out of range or out of order for length " +
                      std::to_string(p.size()));
    sub.push_back(p.at(pos));
    prev = pos;
  }
  return pattern_of(sub);
}

namespace {

// For pattern index j, the earlier pattern indices holding the nearest smaller
// and nearest larger values. Matching host values must lie strictly between the
// host values already chosen for those two indices.
struct Neighbours {
  std::vector<int> below;
  std::vector<int> above;
};

Neighbours pattern_neighbours(const Perm& pat) {
  const auto k = pat.size();
  Neighbours nb{std::vector<int>(k, -1), std::vector<int>(k, -1)};
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (pat[i] < pat[j] && (nb.below[j] < 0 || pat[i] > pat[nb.below[j]]))
        nb.below[j] = static_cast<int>(i);
      if (pat[i] > pat[j] && (nb.above[j] < 0 || pat[i] < pat[nb.above[j]]))
        nb.above[j] = static_cast<int>(i);
    }
  }
  return nb;
}

class Matcher {
public:
  Matcher(const Perm& pat, const Perm& host)
      : pat_(pat), host_(host), nb_(pattern_neighbours(pat)), chosen_(pat.size()) {}

  bool search(std::size_t j, std::size_t from) {
    const auto k = pat_.size();
    if (j == k) return true;
    const int lo = nb_.below[j] < 0 ? pat_[j] - 1 : host_[chosen_[nb_.below[j]]];
    const int hi = nb_.above[j] < 0 ? static_cast<int>(host_.size()) - (static_cast<int>(k) - pat_[j]) + 1
                                    : host_[chosen_[nb_.above[j]]];
    // Leave room for the remaining k - j - 1 pattern entries.
    for (std::size_t pos = from; pos + (k - j) <= host_.size(); ++pos) {
      const int v = host_[pos];
      if (v <= lo || v >= hi) continue;
      chosen_[j] = pos;
      if (search(j + 1, pos + 1)) return true;
    }
    return false;
  }

  PointSet embedding() const {
    PointSet out(chosen_.size());
    for (std::size_t i = 0; i < chosen_.size(); ++i) out[i] = chosen_[i] + 1;
    return out;
  }

private:
  const Perm& pat_;
  const Perm& host_;
  Neighbours nb_;
  std::vector<std::size_t> chosen_;
};

} // namespace

std::optional<PointSet> find_embedding(const Perm& pat, const Perm& host) {
  if (pat.size() > host.size()) return std::nullopt;
  Matcher m(pat, host);
  if (!m.search(0, 0)) return std::nullopt;
  return m.embedding();
}

bool contains(const Perm& pat, const Perm& host) {
  return find_embedding(pat, host).has_value();
}

Perm inverse(const Perm& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i + 1);
  return Perm(std::move(inv));
}

Perm reverse(const Perm& p) {
  std::vector<int> r(p.values().rbegin(), p.values().rend());
  return Perm(std::move(r));
}

Perm complement(const Perm& p) {
  const int n1 = static_cast<int>(p.size()) + 1;
  std::vector<int> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = n1 - p[i];
  return Perm(std::move(c));
}

Perm direct_sum(const Perm& s, const Perm& t) {
  std::vector<int> v(s.values().begin(), s.values().end());
  const int shift = static_cast<int>(s.size());
  for (int x : t.values()) v.push_back(shift + x);
  return Perm(std::move(v));
}

Perm skew_sum(const Perm& s, const Perm& t) {
  std::vector<int> v;
  v.reserve(s.size() + t.size());
  const int shift = static_cast<int>(t.size());
  for (int x : s.values()) v.push_back(shift + x);
  for (int x : t.values()) v.push_back(x);
  return Perm(std::move(v));
}

Perm inflate(const Perm& skeleton, std::span<const Perm> parts) {
  if (parts.size() != skeleton.size())
    throw Error(Errc::InvalidInflation, "skeleton of length " + std::to_string(skeleton.size()) +
                                            " needs " + std::to_string(skeleton.size()) +
                                            " parts, got " + std::to_string(parts.size()));
  // offset[v] = total size of the parts whose skeleton value is below v.
  std::vector<int> offset(skeleton.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty())
      throw Error(Errc::InvalidInflation, "part " + std::to_string(i + 1) + " is empty");
    offset[skeleton[i]] = static_cast<int>(parts[i].size());
  }
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<int> v;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int base = offset[skeleton[i] - 1];
    for (int x : parts[i].values()) v.push_back(base + x);
  }
  return Perm(std::move(v));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

Perm parse_perm(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw Error(Errc::InvalidSequence, "bad permutation text '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto token = trim(text.substr(start, end - start));
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(Errc::InvalidSequence, "bad permutation token '" + std::string(token) + "' in '" +
                                               std::string(text) + "'");
      values.push_back(v);
      start = end + 1;
    }
  }
  try {
    return Perm(std::move(values));
  } catch (const Error& e) {
    throw Error(Errc::InvalidSequence, "'" + std::string(text) + "': " + e.what());
  }
}

std::string to_string(const Perm& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::ostream& operator<<(std::ostream& out, const Perm& p) { return out << (p.empty() ? "()" : to_string(p)); }

} // namespace permclass
