#pragma once

#include "permclass/perm.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace permclass {

/// The member of the antichain U of length i (odd, >= 7). Throws Error(InvalidIndex) otherwise.
Perm mu(std::size_t i);

/// Undirected simple graph on vertices 1..n.
class Graph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Graph(std::size_t n = 0) : adj_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  /// Sorted edge list with first < second.
  std::vector<Edge> edges() const;
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_.at(v - 1); }
  std::size_t degree(std::size_t v) const { return neighbours(v).size(); }
  bool adjacent(std::size_t a, std::size_t b) const;

  void add_edge(std::size_t a, std::size_t b);

private:
  std::vector<std::vector<std::size_t>> adj_;
};

/// Ascent graph G(π): vertex i is the point (i, π(i)); i ~ j iff i < j and π(i) < π(j).
Graph perm_graph(const Perm& p);

/// A graph checked to be connected and acyclic.
class Tree {
public:
  /// Throws Error(NotATree) if g is disconnected or cyclic.
  explicit Tree(Graph g);

  const Graph& graph() const noexcept { return g_; }
  std::size_t vertex_count() const noexcept { return g_.vertex_count(); }

  /// AHU string of the tree rooted at its centre; the lexicographically
  /// smaller one when there are two centres.
  std::string canonical_form() const;

private:
  Graph g_;
};

/// Path on i-2 vertices with a pendant hung on the second and on the
/// penultimate path vertex. Throws Error(InvalidIndex) for i < 6.
Tree double_fork(std::size_t i);

bool tree_isomorphic(const Tree& a, const Tree& b);

/// Result of an antichain check. On failure witness holds (smaller, larger)
/// where the first is contained in the second; equal permutations given twice
/// are treated as a single member.
struct AntichainReport {
  bool is_antichain = true;
  std::optional<std::pair<Perm, Perm>> witness;
  std::size_t members = 0;
  std::size_t pairs_checked = 0;
};

/// First comparable pair in (i, j) index order, checking pairs in parallel.
/// The reported witness does not depend on the thread schedule.
AntichainReport check_antichain(const std::vector<Perm>& perms);

/// Serial reference for check_antichain.
AntichainReport check_antichain_serial(const std::vector<Perm>& perms);

inline bool is_antichain(const std::vector<Perm>& perms) { return check_antichain(perms).is_antichain; }

/// Outcome of the ascent-graph certificate for one member of U.
struct GraphCertificate {
  std::size_t index;
  bool is_tree;
  bool matches_double_fork;
};

GraphCertificate certify_mu(std::size_t i);

/// A permutation class given by a finite basis or as the downward closure of finite generators.
class ClassSpec {
public:
  struct AvoidanceBasis { std::vector<Perm> perms; };
  struct ClosureOf { std::vector<Perm> perms; };

  /// Keeps only the minimal basis elements.
  static ClassSpec avoiding(std::vector<Perm> basis);
  /// Keeps only the maximal generators.
  static ClassSpec closure_of(std::vector<Perm> generators);

  bool is_closure() const noexcept { return std::holds_alternative<ClosureOf>(kind_); }
  const std::vector<Perm>& perms() const;

  bool contains_member(const Perm& p) const;

private:
  explicit ClassSpec(std::variant<AvoidanceBasis, ClosureOf> k) : kind_(std::move(k)) {}
  std::variant<AvoidanceBasis, ClosureOf> kind_;
};

/// All length-n permutations contained in some generator, sorted.
std::vector<Perm> closure_members(const std::vector<Perm>& generators, std::size_t n);

/// Minimal non-members of the class of length at most max_len, sorted by
/// length then lexicographically.
std::vector<Perm> basis_up_to(const ClassSpec& c, std::size_t max_len);

/// Drops every element that contains another (keeps minimal ones), preserving order.
std::vector<Perm> minimal_elements(std::vector<Perm> perms);
/// Drops every element contained in another (keeps maximal ones), preserving order.
std::vector<Perm> maximal_elements(std::vector<Perm> perms);

} // namespace permclass
