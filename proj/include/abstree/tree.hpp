#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "abstree/error.hpp"

namespace abstree {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Immutable labeled tree on vertices 0..n-1. The only way to obtain one is
// through from_edges, which rejects anything that is not a tree.
class Tree {
 public:
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted ascending.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const noexcept { return max_degree_; }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }

  friend bool operator==(const Tree& a, const Tree& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  Tree(std::vector<Edge> edges, std::vector<std::vector<Vertex>> adjacency);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  int max_degree_ = 0;
};

// v_0 is a leaf, v_s has degree >= 3, everything in between has degree 2.
struct PendentPath {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size() - 1; }
  Vertex leaf() const { return vertices.front(); }
  Vertex anchor() const { return vertices.back(); }
};

// Isomorphism-class key. Equal codes <=> isomorphic trees.
struct CanonicalCode {
  std::string value;

  auto operator<=>(const CanonicalCode&) const = default;
};

// degree -> number of vertices with that degree
std::map<int, std::size_t> degree_counts(const Tree& tree);

std::vector<Vertex> pendent_vertices(const Tree& tree);

// One path per leaf, ordered by leaf label. Empty when max degree <= 2.
std::vector<PendentPath> pendent_paths(const Tree& tree);

// Edges lying on some pendent path, sorted.
std::vector<Edge> pendent_path_edges(const Tree& tree);

// Edges whose endpoints both have degree 2, sorted.
std::vector<Edge> e2_edges(const Tree& tree);

// One or two centers (the middle of any longest path), ascending.
std::vector<Vertex> centers(const Tree& tree);

CanonicalCode canonical_code(const Tree& tree);

bool isomorphic(const Tree& a, const Tree& b);

// Applies new_label[old] to every vertex. new_label must be a permutation.
Tree relabel(const Tree& tree, std::span<const Vertex> new_label);

}  // namespace abstree
