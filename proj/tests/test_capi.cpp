#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "abstree/abstree.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  abstree_string_free(s);
  return out;
}

abstree_tree* path5() {
  abstree_tree* t = nullptr;
  REQUIRE(abstree_tree_parse("5 4\n0 1\n1 2\n2 3\n3 4\n", &t) == ABSTREE_OK);
  return t;
}

}  // namespace

TEST_CASE("tree construction and queries") {
  const int32_t edges[] = {0, 1, 0, 2, 0, 3};
  abstree_tree* t = nullptr;
  REQUIRE(abstree_tree_from_edges(4, edges, 3, &t) == ABSTREE_OK);
  CHECK(abstree_tree_vertex_count(t) == 4);
  CHECK(abstree_tree_edge_count(t) == 3);
  CHECK(abstree_tree_max_degree(t) == 3);
  CHECK(abstree_tree_leaf_count(t) == 3);
  CHECK(abstree_tree_e2_count(t) == 0);
  int32_t d = -1;
  CHECK(abstree_tree_degree(t, 0, &d) == ABSTREE_OK);
  CHECK(d == 3);
  CHECK(abstree_tree_degree(t, 7, &d) == ABSTREE_BAD_LABEL);
  int32_t out[6] = {};
  CHECK(abstree_tree_edges(t, out, 6) == 6);
  CHECK(std::memcmp(out, edges, sizeof out) == 0);
  CHECK(take([&] {
          char* s = nullptr;
          REQUIRE(abstree_tree_to_text(t, &s) == ABSTREE_OK);
          return s;
        }()) == "4 3\n0 1\n0 2\n0 3\n");

  abstree_tree* copy = nullptr;
  REQUIRE(abstree_tree_clone(t, &copy) == ABSTREE_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(abstree_tree_canonical_code(t, &a) == ABSTREE_OK);
  REQUIRE(abstree_tree_canonical_code(copy, &b) == ABSTREE_OK);
  CHECK(take(a) == take(b));
  abstree_tree_free(copy);
  abstree_tree_free(t);
  abstree_tree_free(nullptr);
}

TEST_CASE("error reporting") {
  const int32_t disconnected[] = {0, 1, 2, 3};
  abstree_tree* t = nullptr;
  CHECK(abstree_tree_from_edges(4, disconnected, 2, &t) == ABSTREE_NOT_A_TREE);
  CHECK(t == nullptr);
  CHECK(std::strlen(abstree_last_error()) > 0);
  CHECK(std::string(abstree_status_name(ABSTREE_NOT_A_TREE)) != "");
  CHECK(abstree_tree_parse("3 2\n0 1\n", &t) == ABSTREE_PARSE_ERROR);
  CHECK(abstree_tree_parse(nullptr, &t) == ABSTREE_NULL_ARGUMENT);
  CHECK(abstree_tree_parse("2 1\n0 1\n", nullptr) == ABSTREE_NULL_ARGUMENT);
  const int32_t dup[] = {0, 1, 1, 0};
  CHECK(abstree_tree_from_edges(3, dup, 2, &t) == ABSTREE_DUPLICATE_EDGE);
}

TEST_CASE("indices") {
  abstree_tree* t = path5();
  double v = 0;
  CHECK(abstree_index(t, ABSTREE_INDEX_ABS, 0, &v) == ABSTREE_OK);
  CHECK(v == doctest::Approx(2.5689141).epsilon(1e-7));
  CHECK(abstree_index(t, ABSTREE_INDEX_HARMONIC, 0, &v) == ABSTREE_OK);
  CHECK(v == doctest::Approx(7.0 / 3));
  CHECK(abstree_index(t, ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY, NAN, &v) == ABSTREE_BAD_PARAMETERS);
  abstree_tree_free(t);

  const int64_t triples[] = {1, 2, 2, 2, 2, 2};
  CHECK(abstree_index_from_histogram(triples, 2, ABSTREE_INDEX_ABS, 0, &v) == ABSTREE_OK);
  CHECK(v == doctest::Approx(2.5689141).epsilon(1e-7));
  const int64_t bad[] = {0, 2, 1};
  CHECK(abstree_index_from_histogram(bad, 1, ABSTREE_INDEX_ABS, 0, &v) == ABSTREE_DEGENERATE_EDGE);

  abstree_index_kind kind;
  CHECK(abstree_index_kind_parse("randic", &kind) == ABSTREE_OK);
  CHECK(kind == ABSTREE_INDEX_RANDIC);
  CHECK(std::string(abstree_index_kind_name(kind)) == "randic");
  CHECK(abstree_index_kind_parse("wiener", &kind) == ABSTREE_BAD_PARAMETERS);
}

TEST_CASE("transforms") {
  abstree_tree* p = path5();
  abstree_tree* c = nullptr;
  REQUIRE(abstree_contract_edge(p, 1, 2, &c) == ABSTREE_OK);
  CHECK(abstree_tree_vertex_count(c) == 4);
  abstree_tree_free(c);
  CHECK(abstree_contract_edge(p, 0, 2, &c) == ABSTREE_NOT_AN_EDGE);
  abstree_tree_free(p);

  abstree_tree* star = nullptr;
  REQUIRE(abstree_make_star(5, &star) == ABSTREE_OK);
  const int32_t left[] = {1, 2}, right[] = {3, 4};
  abstree_tree* split = nullptr;
  REQUIRE(abstree_split_vertex(star, 0, left, 2, right, 2, &split) == ABSTREE_OK);
  CHECK(abstree_tree_max_degree(split) == 3);
  abstree_tree_free(split);
  CHECK(abstree_split_vertex(star, 0, left, 2, right, 1, &split) == ABSTREE_BAD_PARTITION);

  abstree_tree* r = nullptr;
  REQUIRE(abstree_replace_with_3regular(star, 0, nullptr, nullptr, 0, &r) == ABSTREE_OK);
  CHECK(abstree_tree_vertex_count(r) == 6);
  CHECK(abstree_tree_max_degree(r) == 3);
  abstree_tree_free(r);
  CHECK(abstree_replace_with_3regular(star, 1, nullptr, nullptr, 0, &r) == ABSTREE_BAD_ARITY);
  abstree_tree_free(star);

  abstree_tree_list* shapes = nullptr;
  REQUIRE(abstree_k3_regular_shapes(6, &shapes) == ABSTREE_OK);
  CHECK(abstree_tree_list_size(shapes) == 2);
  CHECK(abstree_tree_list_get(shapes, 2) == nullptr);
  abstree_tree_list_free(shapes);
  CHECK(abstree_k3_regular_shapes(2, &shapes) == ABSTREE_BAD_ARITY);
}

TEST_CASE("families and enumeration") {
  const int32_t legs[] = {2, 2, 2};
  abstree_tree* s = nullptr;
  REQUIRE(abstree_make_spider(legs, 3, &s) == ABSTREE_OK);
  CHECK(abstree_is_tstar_member(s) == 1);
  abstree_tree_free(s);

  abstree_tree_list* fam = nullptr;
  REQUIRE(abstree_tstar_family(10, 3, &fam) == ABSTREE_OK);
  CHECK(abstree_tree_list_size(fam) == 3);
  abstree_tree_list_free(fam);
  CHECK(abstree_tstar_family(9, 4, &fam) == ABSTREE_OUT_OF_RANGE);

  uint64_t count = 0;
  CHECK(abstree_enumerate_count(7, -1, -1, &count) == ABSTREE_OK);
  CHECK(count == 11);
  CHECK(abstree_enumerate_count(6, 5, 4, &count) == ABSTREE_OK);
  CHECK(count == 0);
  CHECK(abstree_enumerate_count(0, -1, -1, &count) == ABSTREE_OUT_OF_RANGE);

  abstree_tree_list* list = nullptr;
  REQUIRE(abstree_enumerate(6, 3, -1, &list) == ABSTREE_OK);
  char* text = nullptr;
  REQUIRE(abstree_tree_list_to_text(list, &text) == ABSTREE_OK);
  abstree_tree_list* again = nullptr;
  REQUIRE(abstree_tree_list_parse(text, &again) == ABSTREE_OK);
  abstree_string_free(text);
  CHECK(abstree_tree_list_size(again) == abstree_tree_list_size(list));
  abstree_tree_list_free(again);
  abstree_tree_list_free(list);
}

TEST_CASE("verification") {
  CHECK(abstree_in_theorem_range(10, 4) == 1);
  CHECK(abstree_in_theorem_range(9, 4) == 0);
  double f = 0;
  REQUIRE(abstree_formula_min_abs(10, 3, &f) == ABSTREE_OK);
  CHECK(f == doctest::Approx(6.177161159).epsilon(1e-10));
  CHECK(abstree_formula_min_abs(9, 4, &f) == ABSTREE_OUT_OF_RANGE);

  double m = 0;
  size_t argmin = 0;
  REQUIRE(abstree_min_abs_bruteforce(9, 4, 0, 1, 1e-9, &m, &argmin) == ABSTREE_OK);
  CHECK(argmin >= 1);

  abstree_report* r = nullptr;
  REQUIRE(abstree_verify(10, 3, 0, 1e-9, 2, &r) == ABSTREE_OK);
  CHECK(abstree_report_pass(r) == 1);
  CHECK(abstree_report_n(r) == 10);
  CHECK(abstree_report_k(r) == 3);
  CHECK(abstree_report_chemical(r) == 0);
  CHECK(abstree_report_tolerance(r) == 1e-9);
  CHECK(abstree_report_formula(r) == doctest::Approx(abstree_report_bruteforce(r)));
  CHECK(abstree_report_argmin_count(r) == 3);
  CHECK(abstree_report_tstar_count(r) == 3);
  CHECK(abstree_report_class_size(r) > 3);
  CHECK(abstree_report_argmin_code(r, 0) != nullptr);
  CHECK(abstree_report_argmin_code(r, 3) == nullptr);
  CHECK(abstree_report_reason(r) != nullptr);
  abstree_report_free(r);
  CHECK(abstree_verify(9, 4, 0, 1e-9, 1, &r) == ABSTREE_OUT_OF_RANGE);

  abstree_lemma_records* recs = nullptr;
  REQUIRE(abstree_lemma_suite("2.3", 1, 8, &recs) == ABSTREE_OK);
  const size_t n = abstree_lemma_records_size(recs);
  CHECK(n > 0);
  for (size_t i = 0; i < n; ++i) {
    CHECK(std::string(abstree_lemma_record_lemma(recs, i)) == "2.3");
    CHECK(abstree_lemma_record_pass(recs, i) == 1);
    CHECK(abstree_lemma_record_strict(recs, i) == 1);
    CHECK(abstree_lemma_record_lhs(recs, i) > abstree_lemma_record_rhs(recs, i));
    CHECK(abstree_lemma_record_instance(recs, i) != nullptr);
  }
  abstree_lemma_records_free(recs);
  CHECK(abstree_lemma_suite("3.1", 1, 8, &recs) == ABSTREE_UNKNOWN_LEMMA);
}
