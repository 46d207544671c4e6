#include "abstree/transforms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "abstree/enumerate.hpp"

namespace abstree {
namespace {

void require_vertex(const Tree& tree, Vertex v) {
  if (!tree.contains(v)) {
    throw Error(ErrorCode::BadLabel, "vertex " + std::to_string(v) + " is not in the tree");
  }
}

// Hangs 3 - deg(x) leaves on every vertex of the internal tree, after
// relabeling it in BFS order from its smallest-labeled end vertex.
Tree shape_from_internal(const Tree& internal) {
  const std::size_t m = internal.vertex_count();
  Vertex start = 0;
  for (std::size_t x = 0; x < m; ++x) {
    if (internal.degree(static_cast<Vertex>(x)) <= 1) {
      start = static_cast<Vertex>(x);
      break;
    }
  }
  std::vector<Vertex> order;
  std::vector<Vertex> label(m, -1);
  std::deque<Vertex> queue{start};
  label[start] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (Vertex y : internal.neighbors(x)) {
      if (label[y] < 0) {
        label[y] = static_cast<Vertex>(order.size() + queue.size());
        queue.push_back(y);
      }
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : internal.edges()) edges.emplace_back(label[e.u], label[e.v]);
  Vertex next = static_cast<Vertex>(m);
  for (Vertex x : order) {
    for (int i = internal.degree(x); i < 3; ++i) edges.emplace_back(label[x], next++);
  }
  return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

Tree path_tree(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Tree::from_edges(m, edges);
}

void check_shape(const Tree& shape, int s) {
  const std::size_t expected = 2 * static_cast<std::size_t>(s) - 2;
  if (shape.vertex_count() != expected) {
    throw Error(ErrorCode::ShapeMismatch,
                "a (" + std::to_string(s) + ",3)-regular tree has " +
                    std::to_string(expected) + " vertices, shape has " +
                    std::to_string(shape.vertex_count()));
  }
  std::size_t leaves = 0;
  for (std::size_t x = 0; x < shape.vertex_count(); ++x) {
    const int d = shape.degree(static_cast<Vertex>(x));
    if (d == 1) {
      ++leaves;
    } else if (d != 3) {
      throw Error(ErrorCode::ShapeMismatch, "shape has an internal vertex of degree " +
                                                std::to_string(d));
    }
  }
  if (leaves != static_cast<std::size_t>(s)) {
    throw Error(ErrorCode::ShapeMismatch, "shape has " + std::to_string(leaves) +
                                              " leaves, expected " + std::to_string(s));
  }
}

}  // namespace

Contraction contract_edge(const Tree& tree, Edge edge) {
  if (!tree.has_edge(edge.u, edge.v)) {
    throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(edge.u) + "," +
                                          std::to_string(edge.v) + ") is not an edge");
  }
  const std::size_t n = tree.vertex_count();
  const Vertex keep = edge.u;
  const Vertex drop = edge.v;
  std::vector<Vertex> label_map(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto vx = static_cast<Vertex>(x);
    if (vx == drop) {
      label_map[x] = keep;
    } else {
      label_map[x] = vx > drop ? vx - 1 : vx;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(n - 2);
  for (const auto& e : tree.edges()) {
    if (e == edge) continue;
    edges.emplace_back(label_map[e.u], label_map[e.v]);
  }
  return Contraction{Tree::from_edges(n - 1, edges), std::move(label_map)};
}

Tree split_vertex(const Tree& tree, const SplitSpec& spec) {
  require_vertex(tree, spec.v);
  if (spec.left.empty() || spec.right.empty()) {
    throw Error(ErrorCode::BadPartition, "both sides of a split must be non-empty");
  }
  std::vector<Vertex> all(spec.left);
  all.insert(all.end(), spec.right.begin(), spec.right.end());
  std::sort(all.begin(), all.end());
  const auto nbrs = tree.neighbors(spec.v);
  if (!std::equal(all.begin(), all.end(), nbrs.begin(), nbrs.end())) {
    throw Error(ErrorCode::BadPartition,
                "sides must partition the neighbors of vertex " + std::to_string(spec.v));
  }
  const auto fresh = static_cast<Vertex>(tree.vertex_count());
  const std::set<Vertex> right(spec.right.begin(), spec.right.end());
  std::vector<Edge> edges;
  edges.reserve(tree.edge_count() + 1);
  for (const auto& e : tree.edges()) {
    if (e.u == spec.v && right.count(e.v)) {
      edges.emplace_back(fresh, e.v);
    } else if (e.v == spec.v && right.count(e.u)) {
      edges.emplace_back(e.u, fresh);
    } else {
      edges.push_back(e);
    }
  }
  edges.emplace_back(spec.v, fresh);
  return Tree::from_edges(tree.vertex_count() + 1, edges);
}

std::vector<Tree> k3_regular_shapes(int s) {
  if (s < 3) {
    throw Error(ErrorCode::BadArity, "(s,3)-regular trees need s >= 3, got " + std::to_string(s));
  }
  const auto internal_count = static_cast<std::size_t>(s - 2);
  const Tree caterpillar = default_k3_shape(s);
  const CanonicalCode caterpillar_code = canonical_code(caterpillar);

  std::vector<std::pair<CanonicalCode, Tree>> others;
  for_each_tree(EnumSpec{internal_count, std::nullopt, 3}, [&](const Tree& internal) {
    Tree shape = shape_from_internal(internal);
    CanonicalCode code = canonical_code(shape);
    if (code != caterpillar_code) others.emplace_back(std::move(code), std::move(shape));
    return true;
  });
  std::sort(others.begin(), others.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Tree> shapes{caterpillar};
  for (auto& [code, shape] : others) shapes.push_back(std::move(shape));
  return shapes;
}

Tree default_k3_shape(int s) {
  if (s < 3) {
    throw Error(ErrorCode::BadArity, "(s,3)-regular trees need s >= 3, got " + std::to_string(s));
  }
  return shape_from_internal(path_tree(static_cast<std::size_t>(s - 2)));
}

std::vector<Vertex> shape_leaves(const Tree& shape) { return pendent_vertices(shape); }

LeafAssignment default_assignment(const Tree& tree, Vertex v, const Tree& shape) {
  require_vertex(tree, v);
  std::vector<Vertex> nbrs(tree.neighbors(v).begin(), tree.neighbors(v).end());
  std::stable_sort(nbrs.begin(), nbrs.end(), [&tree](Vertex a, Vertex b) {
    return tree.degree(a) > tree.degree(b);
  });
  const auto leaves = shape_leaves(shape);
  if (leaves.size() != nbrs.size()) {
    throw Error(ErrorCode::ShapeMismatch, "shape has " + std::to_string(leaves.size()) +
                                              " leaves but vertex has degree " +
                                              std::to_string(nbrs.size()));
  }
  LeafAssignment out;
  for (std::size_t i = 0; i < leaves.size(); ++i) out.emplace_back(leaves[i], nbrs[i]);
  return out;
}

Tree replace_with_3regular(const Tree& tree, Vertex v, const Tree& shape,
                           const LeafAssignment& assignment) {
  require_vertex(tree, v);
  const int s = tree.degree(v);
  if (s < 4) {
    throw Error(ErrorCode::BadArity, "replacement needs degree >= 4, vertex " +
                                         std::to_string(v) + " has degree " + std::to_string(s));
  }
  check_shape(shape, s);

  const auto leaves = shape_leaves(shape);
  if (assignment.size() != leaves.size()) {
    throw Error(ErrorCode::BadAssignment, "assignment must pair all " +
                                              std::to_string(leaves.size()) + " shape leaves");
  }
  std::set<Vertex> seen_leaves;
  std::set<Vertex> seen_nbrs;
  for (const auto& [leaf, nbr] : assignment) {
    if (!shape.contains(leaf) || shape.degree(leaf) != 1 || !seen_leaves.insert(leaf).second) {
      throw Error(ErrorCode::BadAssignment,
                  std::to_string(leaf) + " is not an unused shape leaf");
    }
    if (!tree.has_edge(v, nbr) || !seen_nbrs.insert(nbr).second) {
      throw Error(ErrorCode::BadAssignment,
                  std::to_string(nbr) + " is not an unused neighbor of " + std::to_string(v));
    }
  }

  const std::size_t n = tree.vertex_count();
  std::vector<Vertex> shape_label(shape.vertex_count(), -1);
  Vertex next = static_cast<Vertex>(n);
  bool first = true;
  for (std::size_t x = 0; x < shape.vertex_count(); ++x) {
    if (shape.degree(static_cast<Vertex>(x)) == 1) continue;
    shape_label[x] = first ? v : next++;
    first = false;
  }

  std::vector<Edge> edges;
  edges.reserve(n + static_cast<std::size_t>(s));
  for (const auto& e : tree.edges()) {
    if (e.u != v && e.v != v) edges.push_back(e);
  }
  for (const auto& e : shape.edges()) {
    if (shape_label[e.u] >= 0 && shape_label[e.v] >= 0) {
      edges.emplace_back(shape_label[e.u], shape_label[e.v]);
    }
  }
  for (const auto& [leaf, nbr] : assignment) {
    edges.emplace_back(shape_label[shape.neighbors(leaf)[0]], nbr);
  }
  return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

Tree replace_with_3regular(const Tree& tree, Vertex v) {
  require_vertex(tree, v);
  const int s = tree.degree(v);
  if (s < 4) {
    throw Error(ErrorCode::BadArity, "replacement needs degree >= 4, vertex " +
                                         std::to_string(v) + " has degree " + std::to_string(s));
  }
  const Tree shape = default_k3_shape(s);
  return replace_with_3regular(tree, v, shape, default_assignment(tree, v, shape));
}

Tree add_pendent_vertex(const Tree& tree, Vertex x) {
  require_vertex(tree, x);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  edges.emplace_back(x, static_cast<Vertex>(tree.vertex_count()));
  return Tree::from_edges(tree.vertex_count() + 1, edges);
}

Tree subdivide_edge(const Tree& tree, Edge edge, int count) {
  if (!tree.has_edge(edge.u, edge.v)) {
    throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(edge.u) + "," +
                                          std::to_string(edge.v) + ") is not an edge");
  }
  if (count < 0) throw Error(ErrorCode::BadParameters, "negative subdivision count");
  std::vector<Edge> edges;
  for (const auto& e : tree.edges()) {
    if (e != edge) edges.push_back(e);
  }
  Vertex prev = edge.u;
  Vertex next = static_cast<Vertex>(tree.vertex_count());
  for (int i = 0; i < count; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, edge.v);
  return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace abstree
