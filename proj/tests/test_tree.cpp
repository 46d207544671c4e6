#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "abstree/enumerate.hpp"
#include "abstree/families.hpp"
#include "abstree/tree.hpp"
#include "test_support.hpp"

using namespace abstree;
using test_support::tree;

namespace {

ErrorCode error_of(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  try {
    tree(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("from_edges accepts small trees") {
  const Tree p2 = tree(2, {{0, 1}});
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  const Tree p3 = tree(3, {{1, 0}, {2, 1}});
  CHECK(p3.degree(1) == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));
  const Tree single = tree(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.max_degree() == 0);
}

TEST_CASE("from_edges rejects non-trees") {
  CHECK(error_of(4, {{0, 1}, {2, 3}}) == ErrorCode::NotATree);  // disconnected
  CHECK(error_of(3, {{0, 1}, {1, 2}, {2, 0}}) == ErrorCode::NotATree);
  CHECK(error_of(4, {{0, 1}, {1, 2}, {2, 0}}) == ErrorCode::NotATree);  // cycle + isolated
  CHECK(error_of(2, {{0, 0}}) == ErrorCode::NotATree);
  CHECK(error_of(0, {}) == ErrorCode::NotATree);
  CHECK(error_of(3, {{0, 1}, {1, 3}}) == ErrorCode::BadLabel);
  CHECK(error_of(3, {{0, 1}, {-1, 2}}) == ErrorCode::BadLabel);
  CHECK(error_of(3, {{0, 1}, {1, 0}}) == ErrorCode::DuplicateEdge);
}

TEST_CASE("degree_counts") {
  CHECK(degree_counts(make_star(5)) == std::map<int, std::size_t>{{1, 4}, {4, 1}});
  CHECK(degree_counts(make_path(5)) == std::map<int, std::size_t>{{1, 2}, {2, 3}});
  const int legs[] = {2, 2, 2};
  CHECK(degree_counts(make_spider(legs)) == std::map<int, std::size_t>{{1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("handshake holds on every enumerated tree") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : free_trees(n)) {
      std::size_t vertices = 0, degree_sum = 0;
      for (auto [d, c] : degree_counts(t)) {
        vertices += c;
        degree_sum += static_cast<std::size_t>(d) * c;
      }
      CHECK(vertices == n);
      CHECK(degree_sum == 2 * (n - 1));
    }
  }
}

TEST_CASE("pendent_vertices") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(pendent_vertices(make_path(n)) == std::vector<Vertex>{0, static_cast<Vertex>(n - 1)});
    CHECK(pendent_vertices(make_star(n + 1)).size() == n);
  }
  const Tree member = tstar_family(10, 3).front();
  CHECK(pendent_vertices(member).size() == 3);
}

TEST_CASE("pendent_paths") {
  const int legs[] = {2, 2, 2};
  const auto spider_paths = pendent_paths(make_spider(legs));
  REQUIRE(spider_paths.size() == 3);
  for (const auto& p : spider_paths) {
    CHECK(p.length() == 2);
    CHECK(p.anchor() == 0);
  }

  const auto star_paths = pendent_paths(make_star(4));
  REQUIRE(star_paths.size() == 3);
  for (const auto& p : star_paths) CHECK(p.length() == 1);

  CHECK(pendent_paths(make_path(6)).empty());
  CHECK(pendent_paths(make_path(2)).empty());
  CHECK(pendent_paths(tree(1, {})).empty());
}

TEST_CASE("pendent paths cover exactly the degree-2 vertices that see a leaf first") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const Tree& t : free_trees(n)) {
      if (t.max_degree() < 3) continue;
      std::vector<int> cover(n, 0);
      for (const auto& p : pendent_paths(t)) {
        CHECK(t.degree(p.leaf()) == 1);
        CHECK(t.degree(p.anchor()) >= 3);
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) ++cover[p.vertices[i]];
      }
      for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        if (t.degree(vx) != 2) {
          CHECK(cover[v] == 0);
          continue;
        }
        // Walk both ways until leaving the degree-2 chain.
        bool sees_leaf = false;
        for (Vertex start : t.neighbors(vx)) {
          Vertex prev = vx, cur = start;
          while (t.degree(cur) == 2) {
            auto nb = t.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
          }
          sees_leaf = sees_leaf || t.degree(cur) == 1;
        }
        CHECK(cover[v] == (sees_leaf ? 1 : 0));
      }
    }
  }
}

TEST_CASE("e2_edges") {
  CHECK(e2_edges(make_path(5)) == std::vector<Edge>{Edge(1, 2), Edge(2, 3)});
  CHECK(e2_edges(make_star(7)).empty());
  const int short_legs[] = {3, 1, 1};
  CHECK(e2_edges(make_spider(short_legs)).size() == 1);
  const int legs[] = {4, 2, 1};
  const Tree eight = make_spider(legs);
  CHECK(eight.vertex_count() == 8);
  CHECK(e2_edges(eight).size() == 2);
}

TEST_CASE("centers") {
  CHECK(centers(make_path(5)) == std::vector<Vertex>{2});
  CHECK(centers(make_path(6)) == std::vector<Vertex>{2, 3});
  CHECK(centers(make_star(6)) == std::vector<Vertex>{0});
  CHECK(centers(tree(1, {})) == std::vector<Vertex>{0});
  CHECK(centers(make_path(2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("canonical_code identifies relabelings") {
  const Tree a = tree(4, {{0, 1}, {1, 2}, {2, 3}});
  const Tree b = tree(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(make_star(4)));

  const Tree six = tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
  std::vector<Vertex> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<CanonicalCode> codes;
  do {
    codes.insert(canonical_code(relabel(six, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(codes.size() == 1);
}

TEST_CASE("canonical_code agrees with permutation isomorphism for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Tree> pool;
    for (const Tree& t : free_trees(static_cast<std::size_t>(n))) {
      pool.push_back(t);
      pool.push_back(relabel(t, test_support::shuffled(t.vertex_count(), static_cast<unsigned>(pool.size()))));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const bool same_code = canonical_code(pool[i]) == canonical_code(pool[j]);
        const bool iso = oracle::brute_isomorphic(n, test_support::edge_list(pool[i]),
                                                  test_support::edge_list(pool[j]));
        CHECK(same_code == iso);
      }
    }
  }
}

TEST_CASE("relabel rejects non-permutations") {
  const Tree p3 = make_path(3);
  const Vertex dup[] = {0, 0, 1};
  CHECK_THROWS_AS(relabel(p3, dup), Error);
  const Vertex short_map[] = {0, 1};
  CHECK_THROWS_AS(relabel(p3, short_map), Error);
}
