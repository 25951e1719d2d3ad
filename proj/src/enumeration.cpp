#include "permclass/enumeration.hpp"

#include <algorithm>
#include <numeric>

namespace permclass {

CountSeq make_count_seq(std::initializer_list<long> terms) {
  CountSeq s;
  for (long t : terms) s.values.emplace_back(t);
  return s;
}

namespace {

void append_children(const Perm& parent, const std::vector<Perm>& basis, std::vector<Perm>& out) {
  const auto n = parent.size() + 1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<int> v(parent.values().begin(), parent.values().end());
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(n));
    Perm child(std::move(v));
    if (avoids(child, basis)) out.push_back(std::move(child));
  }
}

std::vector<Perm> first_level(const std::vector<Perm>& basis) {
  // The empty permutation belongs to the class unless the basis holds it.
  if (!avoids(Perm{}, basis)) return {};
  return {Perm{}};
}

} // namespace

std::vector<Perm> extend_level_serial(const std::vector<Perm>& parents, const std::vector<Perm>& basis) {
  std::vector<Perm> out;
  for (const auto& p : parents) append_children(p, basis, out);
  return out;
}

std::vector<Perm> extend_level(const std::vector<Perm>& parents, const std::vector<Perm>& basis) {
  std::vector<std::vector<Perm>> per_parent(parents.size());
  const auto count = static_cast<long long>(parents.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    append_children(parents[idx], basis, per_parent[idx]);
  }
  std::vector<Perm> out;
  for (auto& kids : per_parent)
    for (auto& k : kids) out.push_back(std::move(k));
  return out;
}

std::vector<Perm> enumerate_avoiders(const std::vector<Perm>& basis, std::size_t n) {
  auto level = first_level(basis);
  for (std::size_t len = 1; len <= n && !level.empty(); ++len) level = extend_level(level, basis);
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<Perm> enumerate_avoiders_serial(const std::vector<Perm>& basis, std::size_t n) {
  auto level = first_level(basis);
  for (std::size_t len = 1; len <= n && !level.empty(); ++len) level = extend_level_serial(level, basis);
  std::sort(level.begin(), level.end());
  return level;
}

CountSeq count_avoiders(const std::vector<Perm>& basis, std::size_t max_n) {
  CountSeq out;
  auto level = first_level(basis);
  for (std::size_t len = 1; len <= max_n; ++len) {
    if (!level.empty()) level = extend_level(level, basis);
    out.values.emplace_back(static_cast<unsigned long>(level.size()));
  }
  return out;
}

std::vector<Perm> four_basis() {
  return {Perm{1, 2, 3}, Perm{3, 2, 1, 4}, Perm{2, 1, 4, 3}, Perm{1, 5, 4, 3, 2}};
}

StateVector seed_state() { return {0, 0, 0, 0, 1}; }

StateVector abcde_step(const StateVector& v) {
  return {2 * v.d + v.e, v.a, v.b, v.a + v.b + v.d + v.e, v.c};
}

std::vector<StateVector> abcde_evolve(std::size_t max_n) {
  std::vector<StateVector> out;
  if (max_n == 0) return out;
  out.push_back(seed_state());
  while (out.size() < max_n) out.push_back(abcde_step(out.back()));
  return out;
}

StateVector abcde_census(std::size_t n) {
  if (n < 2)
    throw Error(Errc::UseSeedVector, "the five-way split needs n >= 2; use the seed vector for n = 1");
  StateVector v{0, 0, 0, 0, 0};
  const int top = static_cast<int>(n);
  for (const auto& p : enumerate_avoiders(four_basis(), n)) {
    const int first = p[0];
    if (first == top - 1)
      ++v.a;
    else if (first == top - 2)
      ++v.b;
    else if (first <= top - 3)
      ++v.c;
    else if (p[1] >= top - 3)
      ++v.d;
    else
      ++v.e;
  }
  return v;
}

LinearRecurrence make_recurrence(std::initializer_list<long> coefficients, std::initializer_list<long> initial) {
  LinearRecurrence r;
  for (long c : coefficients) r.coefficients.emplace_back(c);
  for (long u : initial) r.initial.emplace_back(u);
  return r;
}

CountSeq eval_recurrence(const LinearRecurrence& r, std::size_t max_n) {
  if (r.order() == 0 || r.initial.size() != r.order())
    throw Error(Errc::Unsupported, "recurrence needs order >= 1 and exactly one initial term per coefficient");
  CountSeq out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n <= r.order()) {
      out.values.push_back(r.initial[n - 1]);
      continue;
    }
    mpq_class next = 0;
    for (std::size_t i = 1; i <= r.order(); ++i) next += r.coefficients[i - 1] * out.values[n - 1 - i];
    if (next.get_den() != 1)
      throw Error(Errc::Unsupported, "term " + std::to_string(n) + " is not an integer: " + next.get_str());
    out.values.push_back(next.get_num());
  }
  return out;
}

namespace {

// Solves rows * x = rhs exactly; free variables are set to zero. Returns
// nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return std::nullopt;
  const auto cols = rows.front().size() - 1;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    auto piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const mpq_class inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const mpq_class f = rows[o][c];
      for (std::size_t k = c; k <= cols; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t o = r; o < rows.size(); ++o)
    if (rows[o][cols] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rows[i][cols];
  return x;
}

} // namespace

std::optional<LinearRecurrence> fit_recurrence(const CountSeq& seq, std::size_t max_order) {
  const auto n = seq.size();
  if (max_order == 0) throw Error(Errc::Unsupported, "max order must be >= 1");
  if (n < 2 * max_order + 2)
    throw Error(Errc::NeedMoreTerms, "fitting up to order " + std::to_string(max_order) + " needs " +
                                         std::to_string(2 * max_order + 2) + " terms, got " +
                                         std::to_string(n));
  for (std::size_t d = 1; d <= max_order; ++d) {
    // One equation per term u_m, m = d+1..n.
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t m = d + 1; m <= n; ++m) {
      std::vector<mpq_class> row;
      for (std::size_t i = 1; i <= d; ++i) row.emplace_back(seq.at(m - i));
      row.emplace_back(seq.at(m));
      rows.push_back(std::move(row));
    }
    auto coeffs = solve_exact(std::move(rows));
    if (!coeffs) continue;
    LinearRecurrence r{std::move(*coeffs), {seq.values.begin(), seq.values.begin() + static_cast<std::ptrdiff_t>(d)}};
    if (eval_recurrence(r, n) == seq) return r;
  }
  return std::nullopt;
}

RationalGF gf_from_recurrence(const LinearRecurrence& r) {
  const auto d = r.order();
  if (d == 0 || r.initial.size() != d) throw Error(Errc::Unsupported, "malformed recurrence");
  std::vector<mpq_class> q(d + 1);
  q[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) q[i] = -r.coefficients[i - 1];
  std::vector<mpq_class> p(d + 1, 0);
  for (std::size_t m = 1; m <= d; ++m) {
    mpq_class v = r.initial[m - 1];
    for (std::size_t i = 1; i < m; ++i) v -= r.coefficients[i - 1] * r.initial[m - 1 - i];
    p[m] = v;
  }
  mpz_class scale = 1;
  for (const auto& c : q) scale = lcm(scale, c.get_den());
  for (const auto& c : p) scale = lcm(scale, c.get_den());
  RationalGF gf;
  for (const auto& c : p) gf.numerator.push_back(mpq_class(c * scale).get_num());
  for (const auto& c : q) gf.denominator.push_back(mpq_class(c * scale).get_num());
  while (gf.numerator.size() > 1 && gf.numerator.back() == 0) gf.numerator.pop_back();
  return gf;
}

std::vector<mpq_class> series_coefficients(const RationalGF& gf, std::size_t count) {
  if (gf.denominator.empty() || gf.denominator[0] == 0)
    throw Error(Errc::Undefined, "denominator has zero constant term");
  const mpq_class q0 = gf.denominator[0];
  std::vector<mpq_class> a(count + 1, 0);
  for (std::size_t m = 0; m <= count; ++m) {
    mpq_class v = m < gf.numerator.size() ? mpq_class(gf.numerator[m]) : mpq_class(0);
    for (std::size_t i = 1; i <= m && i < gf.denominator.size(); ++i) v -= gf.denominator[i] * a[m - i];
    a[m] = v / q0;
  }
  return {a.begin() + 1, a.end()};
}

} // namespace permclass
