#include "starspec/shape.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "starspec/error.hpp"

namespace starspec {

StarlikeShape::StarlikeShape(std::vector<int> branches)
    : branches_(std::move(branches)) {
  for (int n : branches_) {
    if (n < 1) {
      throw Error(Errc::kInvalidShape,
                  "branch lengths must be positive, got " + std::to_string(n));
    }
  }
  std::sort(branches_.begin(), branches_.end(), std::greater<>());
  vertex_count_ = 1 + std::accumulate(branches_.begin(), branches_.end(), 0);
}

std::string StarlikeShape::to_string() const {
  std::string out = std::to_string(branch_count()) + ";";
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(branches_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const StarlikeShape& shape) {
  return os << "S_{" << shape.to_string() << "}";
}

VertexNumbering::VertexNumbering(const StarlikeShape& shape)
    : size_(shape.vertex_count()) {
  int next = 1;
  for (int n : shape.branches()) {
    offsets_.push_back(next);
    lengths_.push_back(n);
    next += n;
  }
}

int VertexNumbering::index_of(VertexId v) const {
  if (v.is_root()) return 0;
  const auto k = static_cast<std::size_t>(v.branch - 1);
  if (v.branch < 1 || k >= offsets_.size() || v.position < 1 ||
      v.position > lengths_[k]) {
    throw std::out_of_range("vertex id outside the shape");
  }
  return offsets_[k] + v.position - 1;
}

VertexId VertexNumbering::vertex_at(int index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("vertex index");
  if (index == 0) return {};
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const auto k = static_cast<int>(it - offsets_.begin());
  return {k, index - offsets_[static_cast<std::size_t>(k - 1)] + 1};
}

Adjacency adjacency(const StarlikeShape& shape) {
  const VertexNumbering numbering(shape);
  Adjacency adj;
  adj.vertex_count = shape.vertex_count();
  adj.neighbors.resize(static_cast<std::size_t>(adj.vertex_count));
  auto connect = [&adj](int u, int v) {
    adj.edges.emplace_back(u, v);
    adj.neighbors[static_cast<std::size_t>(u)].push_back(v);
    adj.neighbors[static_cast<std::size_t>(v)].push_back(u);
  };
  for (int k = 1; k <= shape.branch_count(); ++k) {
    const int n = shape.branch(k);
    for (int m = 1; m < n; ++m) {
      connect(numbering.index_of({k, m}), numbering.index_of({k, m + 1}));
    }
    connect(numbering.index_of({k, n}), 0);
  }
  return adj;
}

StarlikeShape shape_from_edge_list(std::span<const Edge> edges) {
  int vertex_count = 1;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw Error(Errc::kParse, "negative vertex label");
    vertex_count = std::max({vertex_count, u + 1, v + 1});
  }
  const auto size = static_cast<std::size_t>(vertex_count);
  if (edges.size() + 1 != size) {
    throw Error(Errc::kNotATree,
                std::to_string(vertex_count) + " vertices but " +
                    std::to_string(edges.size()) + " edges");
  }

  std::vector<std::vector<int>> neighbors(size);
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(Errc::kNotATree, "self-loop at vertex " + std::to_string(u));
    neighbors[static_cast<std::size_t>(u)].push_back(v);
    neighbors[static_cast<std::size_t>(v)].push_back(u);
  }

  // With |E| = V - 1, connectivity is equivalent to being a tree.
  std::vector<bool> seen(size, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : neighbors[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != size) throw Error(Errc::kNotATree, "graph is disconnected or has a cycle");

  int root = -1;
  for (std::size_t v = 0; v < size; ++v) {
    if (neighbors[v].size() >= 3) {
      if (root >= 0) {
        throw Error(Errc::kMultipleBranchVertices,
                    "vertices " + std::to_string(root) + " and " +
                        std::to_string(v) + " both have degree >= 3");
      }
      root = static_cast<int>(v);
    }
  }

  if (vertex_count == 1) return StarlikeShape{};
  if (root < 0) return StarlikeShape({vertex_count - 1});

  std::vector<int> branches;
  for (int first : neighbors[static_cast<std::size_t>(root)]) {
    int previous = root;
    int current = first;
    int length = 1;
    while (neighbors[static_cast<std::size_t>(current)].size() == 2) {
      const auto& nb = neighbors[static_cast<std::size_t>(current)];
      const int next = nb[0] == previous ? nb[1] : nb[0];
      previous = current;
      current = next;
      ++length;
    }
    branches.push_back(length);
  }
  return StarlikeShape(std::move(branches));
}

StarlikeShape canonical_graph(const StarlikeShape& shape) {
  return shape_from_edge_list(adjacency(shape).edges);
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 ||
        u > 1'000'000 || v > 1'000'000) {
      throw Error(Errc::kParse, "edge list line " + std::to_string(line_no) +
                                    ": expected two non-negative integers");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return edges;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& prefix,
                std::vector<StarlikeShape>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StarlikeShape> all_shapes(int max_sum) {
  std::vector<StarlikeShape> out;
  std::vector<int> prefix;
  for (int total = 1; total <= max_sum; ++total) {
    partitions(total, total, prefix, out);
  }
  return out;
}

}  // namespace starspec
