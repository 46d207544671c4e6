#include "abstree/families.hpp"

#include <set>
#include <string>

#include "abstree/transforms.hpp"

namespace abstree {

Tree make_path(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Tree::from_edges(n, edges);
}

Tree make_star(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "star needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Tree::from_edges(n, edges);
}

Tree make_spider(std::span<const int> legs) {
  if (legs.size() < 3) {
    throw Error(ErrorCode::BadParameters, "spider needs at least 3 legs");
  }
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : legs) {
    if (len < 1) throw Error(ErrorCode::BadParameters, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

std::vector<Tree> make_family(const FamilyDescriptor& family) {
  switch (family.kind) {
    case FamilyKind::Path: return {make_path(family.n)};
    case FamilyKind::Star: return {make_star(family.n)};
    case FamilyKind::Spider: return {make_spider(family.legs)};
    case FamilyKind::KThreeRegular: return k3_regular_shapes(family.k);
    case FamilyKind::TStar: return tstar_family(family.n, family.k);
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

bool tstar_parameters_valid(std::size_t n, int k) noexcept {
  return k >= 3 && static_cast<std::size_t>(k) <= (n + 2) / 3;
}

namespace {

// Calls visit(parts) for every composition of total into `parts.size()`
// positive parts, in lexicographic order.
template <typename Visit>
void for_each_composition(int total, std::vector<int>& parts, std::size_t index, Visit&& visit) {
  const int remaining_slots = static_cast<int>(parts.size() - index);
  if (remaining_slots == 1) {
    parts[index] = total;
    visit(parts);
    return;
  }
  for (int first = 1; first <= total - (remaining_slots - 1); ++first) {
    parts[index] = first;
    for_each_composition(total - first, parts, index + 1, visit);
  }
}

}  // namespace

std::vector<Tree> tstar_family(std::size_t n, int k) {
  if (!tstar_parameters_valid(n, k)) {
    throw Error(ErrorCode::OutOfRange,
                "extremal family needs 3 <= k <= floor((n+2)/3), got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  const int budget = static_cast<int>(n) - (2 * k - 2);
  std::vector<Tree> members;
  std::set<CanonicalCode> seen;
  for (const Tree& shape : k3_regular_shapes(k)) {
    const auto leaves = shape_leaves(shape);
    std::vector<int> parts(static_cast<std::size_t>(k));
    for_each_composition(budget, parts, 0, [&](const std::vector<int>& extra) {
      std::vector<Edge> edges;
      for (const auto& e : shape.edges()) {
        if (shape.degree(e.u) != 1 && shape.degree(e.v) != 1) edges.push_back(e);
      }
      Vertex next = static_cast<Vertex>(shape.vertex_count());
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        const Vertex leaf = leaves[i];
        Vertex prev = shape.neighbors(leaf)[0];
        for (int j = 0; j < extra[i]; ++j) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        edges.emplace_back(prev, leaf);
      }
      Tree member = Tree::from_edges(static_cast<std::size_t>(next), edges);
      if (seen.insert(canonical_code(member)).second) members.push_back(std::move(member));
    });
  }
  return members;
}

bool is_tstar_member(const Tree& tree) {
  if (tree.max_degree() != 3) return false;
  const std::size_t n = tree.vertex_count();
  std::vector<Vertex> branch;
  for (std::size_t x = 0; x < n; ++x) {
    const auto v = static_cast<Vertex>(x);
    if (tree.degree(v) == 3) branch.push_back(v);
    if (tree.degree(v) == 1 && tree.degree(tree.neighbors(v)[0]) == 3) return false;
  }
  // Connectivity of the subgraph induced on degree-3 vertices.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{branch.front()};
  seen[branch.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : tree.neighbors(x)) {
      if (!seen[y] && tree.degree(y) == 3) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == branch.size();
}

}  // namespace abstree
