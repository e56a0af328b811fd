#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace starspec {

/// A starlike tree S_{s; n_1, ..., n_s}: a root vertex g0 with s pendant
/// paths of lengths n_k attached to it. The branch lengths form a multiset and
/// are kept sorted in descending order, so equal multisets compare equal.
///
/// The empty shape (s = 0) is the single-vertex graph A1. Shapes with s <= 2
/// are paths; they are accepted as given and not re-rooted here (see
/// shape_from_edge_list for the canonical path form S_{1; N-1}).
class StarlikeShape {
 public:
  StarlikeShape() = default;
  explicit StarlikeShape(std::vector<int> branches);

  std::span<const int> branches() const noexcept { return branches_; }
  int branch(int k) const { return branches_.at(static_cast<std::size_t>(k - 1)); }
  int branch_count() const noexcept { return static_cast<int>(branches_.size()); }
  int branch_sum() const noexcept { return vertex_count_ - 1; }
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return vertex_count_ - 1; }
  bool is_single_vertex() const noexcept { return branches_.empty(); }

  /// "s;n1,...,ns" with branches in canonical order, e.g. "3;5,2,1".
  std::string to_string() const;

  friend bool operator==(const StarlikeShape&, const StarlikeShape&) = default;
  friend auto operator<=>(const StarlikeShape& a, const StarlikeShape& b) {
    return a.branches_ <=> b.branches_;
  }

 private:
  std::vector<int> branches_;
  int vertex_count_ = 1;
};

std::ostream& operator<<(std::ostream& os, const StarlikeShape& shape);

/// Position of a vertex in the root/branch numbering: the root g0 has
/// branch == 0; otherwise g_m^k has branch == k (1-based) and position == m,
/// with g_m^k adjacent to g_{m+1}^k and g_{n_k}^k adjacent to g0.
struct VertexId {
  int branch = 0;
  int position = 0;

  bool is_root() const noexcept { return branch == 0; }
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Bijection between VertexId and matrix rows 0..N-1. The root maps to 0 and
/// branch k occupies a contiguous block ordered g_1^k ... g_{n_k}^k.
class VertexNumbering {
 public:
  explicit VertexNumbering(const StarlikeShape& shape);

  int size() const noexcept { return size_; }
  int index_of(VertexId v) const;
  VertexId vertex_at(int index) const;

 private:
  std::vector<int> offsets_;
  std::vector<int> lengths_;
  int size_;
};

using Edge = std::pair<int, int>;

/// Undirected 0/1 adjacency of a shape under VertexNumbering.
struct Adjacency {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> neighbors;

  int degree(int v) const { return static_cast<int>(neighbors.at(static_cast<std::size_t>(v)).size()); }
};

Adjacency adjacency(const StarlikeShape& shape);

/// Recognizes a starlike tree given as an edge list over vertices
/// 0..V-1 (V = largest label + 1; an empty list is the single vertex).
/// Throws Error{kNotATree} or Error{kMultipleBranchVertices}.
StarlikeShape shape_from_edge_list(std::span<const Edge> edges);

/// The graph's canonical shape: paths (s <= 2) become S_{1; N-1}, every
/// other shape is returned unchanged.
StarlikeShape canonical_graph(const StarlikeShape& shape);

/// Reads the edge-list text format: one "u v" pair per line, blank lines and
/// '#' comments ignored. Throws Error{kParse} on malformed lines.
std::vector<Edge> read_edge_list(std::istream& in);

/// All shapes with 1 <= s and sum of branch lengths in [1, max_sum], ordered
/// by branch sum and then lexicographically (descending branch lists).
std::vector<StarlikeShape> all_shapes(int max_sum);

}  // namespace starspec
