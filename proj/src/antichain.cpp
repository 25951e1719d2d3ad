#include "permclass/antichain.hpp"

#include <algorithm>
#include <set>

namespace permclass {

Perm mu(std::size_t i) {
  if (i < 7 || i % 2 == 0)
    throw Error(Errc::InvalidIndex, "mu index must be odd and >= 7, got " + std::to_string(i));
  const int k = static_cast<int>(i - 5) / 2;
  std::vector<int> v{2 * k + 2, 2 * k + 5, 2 * k + 4};
  for (int j = k; j >= 2; --j) {
    v.push_back(2 * j);
    v.push_back(2 * j + 3);
  }
  for (int x : {1, 5, 3, 2}) v.push_back(x);
  return Perm(std::move(v));
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 1; v <= adj_.size(); ++v)
    for (auto w : adj_[v - 1])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  const auto& nb = neighbours(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b || a < 1 || b < 1 || a > adj_.size() || b > adj_.size())
    throw Error(Errc::InvalidIndex, "bad edge " + std::to_string(a) + "-" + std::to_string(b));
  if (adjacent(a, b)) return;
  adj_[a - 1].push_back(b);
  adj_[b - 1].push_back(a);
}

Graph perm_graph(const Perm& p) {
  Graph g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] < p[j]) g.add_edge(i + 1, j + 1);
  return g;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  const auto n = g_.vertex_count();
  if (n == 0) throw Error(Errc::NotATree, "empty graph is not a tree");
  if (g_.edge_count() != n - 1)
    throw Error(Errc::NotATree, std::to_string(n) + " vertices but " + std::to_string(g_.edge_count()) +
                                    " edges");
  std::vector<bool> seen(n + 1, false);
  std::vector<std::size_t> stack{1};
  seen[1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g_.neighbours(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error(Errc::NotATree, "graph is disconnected");
}

namespace {

std::vector<std::size_t> centres(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> deg(n + 1);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (auto v : leaves)
      for (auto w : g.neighbours(v))
        if (--deg[w] == 1) next.push_back(w);
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::string encode(const Graph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto w : g.neighbours(v))
    if (w != parent) kids.push_back(encode(g, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

} // namespace

std::string Tree::canonical_form() const {
  std::string best;
  for (auto c : centres(g_)) {
    auto code = encode(g_, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Tree double_fork(std::size_t i) {
  if (i < 6) throw Error(Errc::InvalidIndex, "double fork needs at least 6 vertices, got " + std::to_string(i));
  const auto path = i - 2;
  Graph g(i);
  for (std::size_t v = 1; v < path; ++v) g.add_edge(v, v + 1);
  g.add_edge(2, path + 1);
  g.add_edge(path - 1, path + 2);
  return Tree(std::move(g));
}

bool tree_isomorphic(const Tree& a, const Tree& b) {
  return a.vertex_count() == b.vertex_count() && a.canonical_form() == b.canonical_form();
}

namespace {

std::vector<Perm> distinct_in_order(const std::vector<Perm>& perms) {
  std::vector<Perm> out;
  std::set<Perm> seen;
  for (const auto& p : perms)
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

// Members are distinct, so only a strictly shorter one can be contained.
bool comparable(const Perm& a, const Perm& b) {
  if (a.size() == b.size()) return false;
  return a.size() < b.size() ? contains(a, b) : contains(b, a);
}

AntichainReport report_for(const std::vector<Perm>& members, std::size_t first_hit, std::size_t total) {
  AntichainReport r;
  r.members = members.size();
  if (first_hit == total) {
    r.pairs_checked = total;
    return r;
  }
  r.is_antichain = false;
  r.pairs_checked = first_hit + 1;
  // Recover (i, j) from the row-major pair index.
  std::size_t idx = first_hit;
  std::size_t i = 0;
  while (idx >= members.size() - i - 1) {
    idx -= members.size() - i - 1;
    ++i;
  }
  const auto& a = members[i];
  const auto& b = members[i + 1 + idx];
  r.witness = a.size() < b.size() ? std::make_pair(a, b) : std::make_pair(b, a);
  return r;
}

} // namespace

AntichainReport check_antichain_serial(const std::vector<Perm>& perms) {
  const auto members = distinct_in_order(perms);
  const auto m = members.size();
  const std::size_t total = m * (m - (m > 0 ? 1 : 0)) / 2;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++idx)
      if (comparable(members[i], members[j])) return report_for(members, idx, total);
  return report_for(members, total, total);
}

AntichainReport check_antichain(const std::vector<Perm>& perms) {
  const auto members = distinct_in_order(perms);
  const auto m = members.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  const auto total = pairs.size();
  std::vector<char> hit(total, 0);
  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long t = 0; t < count; ++t) {
    const auto [i, j] = pairs[static_cast<std::size_t>(t)];
    hit[static_cast<std::size_t>(t)] = comparable(members[i], members[j]) ? 1 : 0;
  }
  const auto first = static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 1) - hit.begin());
  return report_for(members, first, total);
}

GraphCertificate certify_mu(std::size_t i) {
  const auto g = perm_graph(mu(i));
  GraphCertificate cert{i, false, false};
  try {
    Tree t(g);
    cert.is_tree = true;
    cert.matches_double_fork = tree_isomorphic(t, double_fork(i));
  } catch (const Error& e) {
    if (e.code() != Errc::NotATree) throw;
  }
  return cert;
}

std::vector<Perm> minimal_elements(std::vector<Perm> perms) {
  perms = distinct_in_order(perms);
  std::vector<Perm> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < perms.size() && minimal; ++j)
      if (j != i && perms[j].size() < perms[i].size() && contains(perms[j], perms[i])) minimal = false;
    if (minimal) out.push_back(perms[i]);
  }
  return out;
}

std::vector<Perm> maximal_elements(std::vector<Perm> perms) {
  perms = distinct_in_order(perms);
  std::vector<Perm> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < perms.size() && maximal; ++j)
      if (j != i && perms[j].size() > perms[i].size() && contains(perms[i], perms[j])) maximal = false;
    if (maximal) out.push_back(perms[i]);
  }
  return out;
}

ClassSpec ClassSpec::avoiding(std::vector<Perm> basis) {
  return ClassSpec(AvoidanceBasis{minimal_elements(std::move(basis))});
}

ClassSpec ClassSpec::closure_of(std::vector<Perm> generators) {
  return ClassSpec(ClosureOf{maximal_elements(std::move(generators))});
}

const std::vector<Perm>& ClassSpec::perms() const {
  return std::visit([](const auto& k) -> const std::vector<Perm>& { return k.perms; }, kind_);
}

bool ClassSpec::contains_member(const Perm& p) const {
  if (is_closure()) {
    for (const auto& g : perms())
      if (contains(p, g)) return true;
    return false;
  }
  return avoids(p, perms());
}

namespace {

// Calls f on every strictly increasing k-subset of 1..n.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  PointSet pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i + 1;
  while (true) {
    f(pos);
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

std::vector<Perm> one_point_extensions(const Perm& p) {
  const auto n = p.size() + 1;
  std::vector<Perm> out;
  out.reserve(n * n);
  for (std::size_t value = 1; value <= n; ++value)
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::vector<int> v;
      v.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pos) v.push_back(static_cast<int>(value));
        if (i < p.size()) v.push_back(p[i] >= static_cast<int>(value) ? p[i] + 1 : p[i]);
      }
      out.emplace_back(std::move(v));
    }
  return out;
}

bool all_deletions_in(const Perm& p, const std::set<Perm>& level) {
  for (std::size_t skip = 0; skip < p.size(); ++skip) {
    std::vector<int> v;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != skip) v.push_back(p[i]);
    if (!level.contains(pattern_of(v))) return false;
  }
  return true;
}

} // namespace

std::vector<Perm> closure_members(const std::vector<Perm>& generators, std::size_t n) {
  std::set<Perm> found;
  for (const auto& g : generators) {
    if (g.size() < n) continue;
    if (n == 0) {
      found.insert(Perm{});
      continue;
    }
    for_each_subset(g.size(), n, [&](const PointSet& pos) { found.insert(restriction(g, pos)); });
  }
  return {found.begin(), found.end()};
}

std::vector<Perm> basis_up_to(const ClassSpec& c, std::size_t max_len) {
  if (!c.contains_member(Perm{})) return {Perm{}};
  std::vector<Perm> basis;
  std::set<Perm> members{Perm{}};
  for (std::size_t n = 1; n <= max_len && !members.empty(); ++n) {
    std::set<Perm> candidates;
    for (const auto& m : members)
      for (auto& e : one_point_extensions(m)) candidates.insert(std::move(e));
    std::set<Perm> next;
    for (const auto& cand : candidates) {
      if (c.contains_member(cand))
        next.insert(cand);
      else if (all_deletions_in(cand, members))
        basis.push_back(cand);
    }
    members = std::move(next);
  }
  return basis;
}

} // namespace permclass
