#include "abstree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace abstree {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadAssignment: return "BadAssignment";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Tree::Tree(std::vector<Edge> edges, std::vector<std::vector<Vertex>> adjacency)
    : edges_(std::move(edges)), adjacency_(std::move(adjacency)) {
  for (const auto& nbrs : adjacency_) {
    max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
  }
}

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw Error(ErrorCode::NotATree, "a tree needs at least one vertex");
  }
  const auto label_ok = [n](Vertex x) {
    return x >= 0 && static_cast<std::size_t>(x) < n;
  };
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const auto& e : sorted) {
    if (!label_ok(e.u) || !label_ok(e.v)) {
      throw Error(ErrorCode::BadLabel, "edge (" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) +
                                           ") has a label outside 0.." +
                                           std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::NotATree,
                  "self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" +
                                              std::to_string(dup->u) + "," +
                                              std::to_string(dup->v) + ")");
  }
  if (sorted.size() != n - 1) {
    throw Error(ErrorCode::NotATree,
                "expected " + std::to_string(n - 1) + " edges for " +
                    std::to_string(n) + " vertices, got " +
                    std::to_string(sorted.size()));
  }

  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& e : sorted) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::NotATree, "graph is disconnected (" +
                                         std::to_string(reached) + " of " +
                                         std::to_string(n) +
                                         " vertices reachable from 0)");
  }
  return Tree(std::move(sorted), std::move(adjacency));
}

bool Tree::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::map<int, std::size_t> degree_counts(const Tree& tree) {
  std::map<int, std::size_t> counts;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    ++counts[tree.degree(static_cast<Vertex>(v))];
  }
  return counts;
}

std::vector<Vertex> pendent_vertices(const Tree& tree) {
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(static_cast<Vertex>(v)) == 1) {
      leaves.push_back(static_cast<Vertex>(v));
    }
  }
  return leaves;
}

std::vector<PendentPath> pendent_paths(const Tree& tree) {
  std::vector<PendentPath> paths;
  if (tree.max_degree() < 3) return paths;
  for (Vertex leaf : pendent_vertices(tree)) {
    PendentPath path;
    path.vertices.push_back(leaf);
    Vertex prev = leaf;
    Vertex cur = tree.neighbors(leaf)[0];
    // With a branch vertex present, a walk from a leaf through degree-2
    // vertices cannot reach another leaf.
    while (tree.degree(cur) == 2) {
      path.vertices.push_back(cur);
      auto nbrs = tree.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    path.vertices.push_back(cur);
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<Edge> pendent_path_edges(const Tree& tree) {
  std::vector<Edge> out;
  for (const auto& path : pendent_paths(tree)) {
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      out.emplace_back(path.vertices[i], path.vertices[i + 1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> e2_edges(const Tree& tree) {
  std::vector<Edge> out;
  for (const auto& e : tree.edges()) {
    if (tree.degree(e.u) == 2 && tree.degree(e.v) == 2) out.push_back(e);
  }
  return out;
}

std::vector<Vertex> centers(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> remaining_degree(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    remaining_degree[v] = tree.degree(static_cast<Vertex>(v));
    if (remaining_degree[v] == 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex y : tree.neighbors(leaf)) {
        if (--remaining_degree[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// AHU encoding of the subtree hanging from root, excluding `parent`.
std::string encode_rooted(const Tree& tree, Vertex root, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex y : tree.neighbors(root)) {
    if (y != parent) children.push_back(encode_rooted(tree, y, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

}  // namespace

CanonicalCode canonical_code(const Tree& tree) {
  const auto c = centers(tree);
  if (c.size() == 1) {
    return CanonicalCode{"u" + encode_rooted(tree, c[0], -1)};
  }
  std::string a = encode_rooted(tree, c[0], c[1]);
  std::string b = encode_rooted(tree, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return CanonicalCode{"b" + a + b};
}

bool isomorphic(const Tree& a, const Tree& b) {
  return a.vertex_count() == b.vertex_count() &&
         canonical_code(a) == canonical_code(b);
}

Tree relabel(const Tree& tree, std::span<const Vertex> new_label) {
  const std::size_t n = tree.vertex_count();
  if (new_label.size() != n) {
    throw Error(ErrorCode::BadLabel, "relabeling has wrong length");
  }
  std::vector<char> used(n, 0);
  for (Vertex x : new_label) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || used[x]) {
      throw Error(ErrorCode::BadLabel, "relabeling is not a permutation");
    }
    used[x] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(tree.edge_count());
  for (const auto& e : tree.edges()) {
    edges.emplace_back(new_label[e.u], new_label[e.v]);
  }
  return Tree::from_edges(n, edges);
}

}  // namespace abstree
