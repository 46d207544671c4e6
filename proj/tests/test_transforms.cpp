#include <doctest.h>

#include <algorithm>
#include <set>

#include "abstree/enumerate.hpp"
#include "abstree/families.hpp"
#include "abstree/transforms.hpp"
#include "test_support.hpp"

using namespace abstree;
using test_support::tree;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

std::multiset<int> degrees(const Tree& t) {
  std::multiset<int> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) out.insert(t.degree(static_cast<Vertex>(v)));
  return out;
}

bool is_k3_regular(const Tree& t, int s) {
  if (t.vertex_count() != static_cast<std::size_t>(2 * s - 2)) return false;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const int d = t.degree(static_cast<Vertex>(v));
    if (d != 1 && d != 3) return false;
  }
  return pendent_vertices(t).size() == static_cast<std::size_t>(s);
}

// Vertex 0 of degree d with neighbours 1..d; neighbour i gets extra leaves
// to reach degree nbr_degrees[i-1].
Tree hub(std::initializer_list<int> nbr_degrees) {
  std::vector<Edge> edges;
  int next = static_cast<int>(nbr_degrees.size()) + 1;
  int i = 1;
  for (int d : nbr_degrees) {
    edges.emplace_back(0, i);
    for (int j = 1; j < d; ++j) edges.emplace_back(i, next++);
    ++i;
  }
  return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace

TEST_CASE("contract_edge") {
  CHECK(contract_edge(make_path(3), Edge(0, 1)).tree == make_path(2));
  CHECK(isomorphic(contract_edge(make_path(3), Edge(1, 2)).tree, make_path(2)));
  CHECK(isomorphic(contract_edge(make_path(5), Edge(1, 2)).tree, make_path(4)));
  CHECK(isomorphic(contract_edge(make_path(5), Edge(2, 3)).tree, make_path(4)));
  const Contraction c = contract_edge(make_star(4), Edge(0, 2));
  CHECK(isomorphic(c.tree, make_star(3)));
  CHECK(c.label_map == std::vector<Vertex>{0, 1, 0, 2});
  CHECK(code_of([] { contract_edge(make_path(4), Edge(0, 2)); }) == ErrorCode::NotAnEdge);
  CHECK(code_of([] { contract_edge(make_path(4), Edge(3, 9)); }) == ErrorCode::NotAnEdge);
}

TEST_CASE("split_vertex") {
  const Tree ds = split_vertex(make_star(5), {.v = 0, .left = {1, 2}, .right = {3, 4}});
  CHECK(ds.vertex_count() == 6);
  CHECK(degree_counts(ds) == std::map<int, std::size_t>{{1, 4}, {3, 2}});
  CHECK(ds.has_edge(0, 5));

  CHECK(isomorphic(split_vertex(make_path(3), {.v = 1, .left = {0}, .right = {2}}), make_path(4)));

  const Tree s33 = split_vertex(make_star(7), {.v = 0, .left = {1, 2, 3}, .right = {4, 5, 6}});
  CHECK(degree_counts(s33) == std::map<int, std::size_t>{{1, 6}, {4, 2}});

  const Tree s5 = make_star(5);
  CHECK(code_of([&] { split_vertex(s5, {.v = 0, .left = {1, 2, 3, 4}, .right = {}}); }) ==
        ErrorCode::BadPartition);
  CHECK(code_of([&] { split_vertex(s5, {.v = 0, .left = {1, 2}, .right = {2, 3, 4}}); }) ==
        ErrorCode::BadPartition);
  CHECK(code_of([&] { split_vertex(s5, {.v = 0, .left = {1, 2}, .right = {3}}); }) ==
        ErrorCode::BadPartition);
  CHECK(code_of([&] { split_vertex(s5, {.v = 1, .left = {0}, .right = {2}}); }) ==
        ErrorCode::BadPartition);
}

TEST_CASE("split undoes contract on every internal edge for n <= 8") {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const Tree& t : free_trees(n)) {
      for (const Edge& e : t.edges()) {
        if (t.degree(e.u) < 2 || t.degree(e.v) < 2) continue;
        const Contraction c = contract_edge(t, e);
        SplitSpec spec{.v = c.label_map[e.u], .left = {}, .right = {}};
        for (Vertex x : t.neighbors(e.u))
          if (x != e.v) spec.left.push_back(c.label_map[x]);
        for (Vertex x : t.neighbors(e.v))
          if (x != e.u) spec.right.push_back(c.label_map[x]);
        CHECK(isomorphic(split_vertex(c.tree, spec), t));
      }
    }
  }
}

TEST_CASE("k3_regular_shapes") {
  CHECK(code_of([] { k3_regular_shapes(2); }) == ErrorCode::BadArity);
  const auto s3 = k3_regular_shapes(3);
  REQUIRE(s3.size() == 1);
  CHECK(isomorphic(s3[0], make_star(4)));
  CHECK(k3_regular_shapes(4).size() == 1);
  const auto s6 = k3_regular_shapes(6);
  CHECK(s6.size() == 2);
  for (int s = 3; s <= 9; ++s) {
    const auto shapes = k3_regular_shapes(s);
    std::set<CanonicalCode> codes;
    for (const Tree& t : shapes) {
      CHECK(is_k3_regular(t, s));
      codes.insert(canonical_code(t));
    }
    CHECK(codes.size() == shapes.size());
    CHECK(isomorphic(shapes.front(), default_k3_shape(s)));
    // Independent count: filter the census.
    std::size_t filtered = 0;
    for_each_tree({.n = static_cast<std::size_t>(2 * s - 2), .leaves = s}, [&](const Tree& t) {
      filtered += is_k3_regular(t, s);
      return true;
    });
    CHECK(filtered == shapes.size());
  }
}

TEST_CASE("replace_with_3regular on a star") {
  const Tree r = replace_with_3regular(make_star(5), 0);
  CHECK(r.vertex_count() == 6);
  CHECK(degree_counts(r) == std::map<int, std::size_t>{{1, 4}, {3, 2}});
}

TEST_CASE("replace_with_3regular on the degree-5 illustration") {
  for (const Tree& t : {hub({4, 2, 3, 1, 1}), hub({3, 1, 2, 3, 1})}) {
    const Tree r = replace_with_3regular(t, 0);
    CHECK(r.vertex_count() == t.vertex_count() + 2);
    for (Vertex x = 1; x <= 5; ++x) CHECK(r.degree(x) == t.degree(x));
    CHECK(r.degree(0) == 3);
    CHECK(r.degree(static_cast<Vertex>(t.vertex_count())) == 3);
    CHECK(r.degree(static_cast<Vertex>(t.vertex_count() + 1)) == 3);
  }
}

TEST_CASE("both degree-6 shapes give valid, different results") {
  const Tree t = hub({2, 3, 1, 4, 2, 1});
  std::set<CanonicalCode> codes;
  for (const Tree& shape : k3_regular_shapes(6)) {
    const Tree r = replace_with_3regular(t, 0, shape, default_assignment(t, 0, shape));
    CHECK(r.vertex_count() == t.vertex_count() + 3);
    codes.insert(canonical_code(r));
  }
  CHECK(codes.size() == 2);
}

TEST_CASE("replacement keeps outside degrees and adds s - 2 degree-3 vertices") {
  for (std::size_t n = 5; n <= 9; ++n) {
    for (const Tree& t : free_trees(n)) {
      for (std::size_t v = 0; v < n; ++v) {
        const Vertex vx = static_cast<Vertex>(v);
        const int s = t.degree(vx);
        if (s < 4) continue;
        for (const Tree& shape : k3_regular_shapes(s)) {
          const Tree r = replace_with_3regular(t, vx, shape, default_assignment(t, vx, shape));
          std::multiset<int> expected = degrees(t);
          expected.erase(expected.find(s));
          for (int i = 0; i < s - 2; ++i) expected.insert(3);
          CHECK(degrees(r) == expected);
          for (Vertex x : t.neighbors(vx)) CHECK(r.degree(x) == t.degree(x));
        }
      }
    }
  }
}

TEST_CASE("replacement errors") {
  const Tree t = make_star(6);
  const Tree shape5 = default_k3_shape(5);
  CHECK(code_of([&] { replace_with_3regular(make_star(4), 0); }) == ErrorCode::BadArity);
  CHECK(code_of([&] { replace_with_3regular(t, 9); }) == ErrorCode::BadLabel);
  CHECK(code_of([&] { replace_with_3regular(t, 0, default_k3_shape(4), {}); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of([&] { replace_with_3regular(t, 0, make_path(8), {}); }) == ErrorCode::ShapeMismatch);
  auto assignment = default_assignment(t, 0, shape5);
  assignment.pop_back();
  CHECK(code_of([&] { replace_with_3regular(t, 0, shape5, assignment); }) ==
        ErrorCode::BadAssignment);
  assignment = default_assignment(t, 0, shape5);
  assignment[0].second = assignment[1].second;
  CHECK(code_of([&] { replace_with_3regular(t, 0, shape5, assignment); }) ==
        ErrorCode::BadAssignment);
}

TEST_CASE("add_pendent_vertex and subdivide_edge") {
  CHECK(add_pendent_vertex(make_path(3), 2) == make_path(4));
  const Tree sub = subdivide_edge(make_star(4), Edge(0, 1), 2);
  CHECK(sub.vertex_count() == 6);
  const int legs[] = {3, 1, 1};
  CHECK(isomorphic(sub, make_spider(legs)));
  CHECK_THROWS_AS(subdivide_edge(make_path(3), Edge(0, 2), 1), Error);
}
