#include "abstree/abstree.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "abstree/edgelist.hpp"
#include "abstree/enumerate.hpp"
#include "abstree/families.hpp"
#include "abstree/indices.hpp"
#include "abstree/transforms.hpp"
#include "abstree/verify.hpp"

struct abstree_tree {
  abstree::Tree tree;
};

struct abstree_tree_list {
  std::vector<abstree_tree> trees;
};

struct abstree_report {
  abstree::VerificationReport report;
  std::vector<std::string> argmin;
};

struct abstree_lemma_records {
  std::vector<abstree::LemmaCheckRecord> records;
};

namespace {

thread_local std::string g_last_error;

abstree_status to_status(abstree::ErrorCode code) {
  using abstree::ErrorCode;
  switch (code) {
    case ErrorCode::NotATree: return ABSTREE_NOT_A_TREE;
    case ErrorCode::BadLabel: return ABSTREE_BAD_LABEL;
    case ErrorCode::DuplicateEdge: return ABSTREE_DUPLICATE_EDGE;
    case ErrorCode::NotAnEdge: return ABSTREE_NOT_AN_EDGE;
    case ErrorCode::BadPartition: return ABSTREE_BAD_PARTITION;
    case ErrorCode::BadArity: return ABSTREE_BAD_ARITY;
    case ErrorCode::ShapeMismatch: return ABSTREE_SHAPE_MISMATCH;
    case ErrorCode::BadAssignment: return ABSTREE_BAD_ASSIGNMENT;
    case ErrorCode::BadParameters: return ABSTREE_BAD_PARAMETERS;
    case ErrorCode::OutOfRange: return ABSTREE_OUT_OF_RANGE;
    case ErrorCode::DegenerateEdge: return ABSTREE_DEGENERATE_EDGE;
    case ErrorCode::UnknownLemma: return ABSTREE_UNKNOWN_LEMMA;
    case ErrorCode::ParseError: return ABSTREE_PARSE_ERROR;
  }
  return ABSTREE_INTERNAL_ERROR;
}

abstree_status fail(abstree_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
abstree_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return ABSTREE_OK;
  } catch (const abstree::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ABSTREE_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ABSTREE_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

abstree::IndexKind to_kind(abstree_index_kind kind, double alpha) {
  switch (kind) {
    case ABSTREE_INDEX_ABS: return abstree::IndexKind::abs();
    case ABSTREE_INDEX_RANDIC: return abstree::IndexKind::randic();
    case ABSTREE_INDEX_SUM_CONNECTIVITY: return abstree::IndexKind::sum_connectivity();
    case ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY:
      return abstree::IndexKind::general_sum_connectivity(alpha);
    case ABSTREE_INDEX_HARMONIC: return abstree::IndexKind::harmonic();
    case ABSTREE_INDEX_ABC: return abstree::IndexKind::abc();
  }
  throw abstree::Error(abstree::ErrorCode::BadParameters, "unknown index kind");
}

abstree_tree* wrap(abstree::Tree t) { return new abstree_tree{std::move(t)}; }

abstree_tree_list* wrap_list(std::vector<abstree::Tree> trees) {
  auto* list = new abstree_tree_list;
  list->trees.reserve(trees.size());
  for (auto& t : trees) list->trees.push_back(abstree_tree{std::move(t)});
  return list;
}

std::vector<abstree::Edge> edges_from(const int32_t* labels, size_t m) {
  std::vector<abstree::Edge> edges;
  edges.reserve(m);
  for (size_t i = 0; i < m; ++i) edges.emplace_back(labels[2 * i], labels[2 * i + 1]);
  return edges;
}

#define ABSTREE_REQUIRE(cond) \
  if (!(cond)) return fail(ABSTREE_NULL_ARGUMENT, "null argument: " #cond)

}  // namespace

extern "C" {

const char* abstree_last_error(void) { return g_last_error.c_str(); }

const char* abstree_status_name(abstree_status status) {
  switch (status) {
    case ABSTREE_OK: return "OK";
    case ABSTREE_NOT_A_TREE: return "NotATree";
    case ABSTREE_BAD_LABEL: return "BadLabel";
    case ABSTREE_DUPLICATE_EDGE: return "DuplicateEdge";
    case ABSTREE_NOT_AN_EDGE: return "NotAnEdge";
    case ABSTREE_BAD_PARTITION: return "BadPartition";
    case ABSTREE_BAD_ARITY: return "BadArity";
    case ABSTREE_SHAPE_MISMATCH: return "ShapeMismatch";
    case ABSTREE_BAD_ASSIGNMENT: return "BadAssignment";
    case ABSTREE_BAD_PARAMETERS: return "BadParameters";
    case ABSTREE_OUT_OF_RANGE: return "OutOfRange";
    case ABSTREE_DEGENERATE_EDGE: return "DegenerateEdge";
    case ABSTREE_UNKNOWN_LEMMA: return "UnknownLemma";
    case ABSTREE_PARSE_ERROR: return "ParseError";
    case ABSTREE_NULL_ARGUMENT: return "NullArgument";
    case ABSTREE_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

void abstree_string_free(char* s) { std::free(s); }

abstree_status abstree_tree_from_edges(size_t n, const int32_t* edges, size_t m,
                                       abstree_tree** out) {
  ABSTREE_REQUIRE(out);
  ABSTREE_REQUIRE(edges || m == 0);
  return guarded([&] { *out = wrap(abstree::Tree::from_edges(n, edges_from(edges, m))); });
}

abstree_status abstree_tree_parse(const char* text, abstree_tree** out) {
  ABSTREE_REQUIRE(text && out);
  return guarded([&] { *out = wrap(abstree::parse_edge_list(text)); });
}

abstree_status abstree_tree_clone(const abstree_tree* tree, abstree_tree** out) {
  ABSTREE_REQUIRE(tree && out);
  return guarded([&] { *out = wrap(tree->tree); });
}

void abstree_tree_free(abstree_tree* tree) { delete tree; }

size_t abstree_tree_vertex_count(const abstree_tree* tree) {
  return tree ? tree->tree.vertex_count() : 0;
}

size_t abstree_tree_edge_count(const abstree_tree* tree) {
  return tree ? tree->tree.edge_count() : 0;
}

size_t abstree_tree_edges(const abstree_tree* tree, int32_t* out, size_t capacity) {
  if (!tree || !out) return 0;
  size_t written = 0;
  for (const auto& e : tree->tree.edges()) {
    if (written + 2 > capacity) break;
    out[written++] = e.u;
    out[written++] = e.v;
  }
  return written;
}

abstree_status abstree_tree_degree(const abstree_tree* tree, int32_t v, int32_t* out) {
  ABSTREE_REQUIRE(tree && out);
  if (!tree->tree.contains(v)) return fail(ABSTREE_BAD_LABEL, "vertex not in tree");
  *out = tree->tree.degree(v);
  return ABSTREE_OK;
}

int32_t abstree_tree_max_degree(const abstree_tree* tree) {
  return tree ? tree->tree.max_degree() : 0;
}

size_t abstree_tree_leaf_count(const abstree_tree* tree) {
  return tree ? abstree::pendent_vertices(tree->tree).size() : 0;
}

size_t abstree_tree_e2_count(const abstree_tree* tree) {
  return tree ? abstree::e2_edges(tree->tree).size() : 0;
}

abstree_status abstree_tree_to_text(const abstree_tree* tree, char** out) {
  ABSTREE_REQUIRE(tree && out);
  return guarded([&] { *out = copy_string(abstree::format_edge_list(tree->tree)); });
}

abstree_status abstree_tree_canonical_code(const abstree_tree* tree, char** out) {
  ABSTREE_REQUIRE(tree && out);
  return guarded([&] { *out = copy_string(abstree::canonical_code(tree->tree).value); });
}

abstree_status abstree_tree_list_parse(const char* text, abstree_tree_list** out) {
  ABSTREE_REQUIRE(text && out);
  return guarded([&] { *out = wrap_list(abstree::parse_edge_lists(text)); });
}

void abstree_tree_list_free(abstree_tree_list* list) { delete list; }

size_t abstree_tree_list_size(const abstree_tree_list* list) {
  return list ? list->trees.size() : 0;
}

const abstree_tree* abstree_tree_list_get(const abstree_tree_list* list, size_t i) {
  if (!list || i >= list->trees.size()) return nullptr;
  return &list->trees[i];
}

abstree_status abstree_tree_list_to_text(const abstree_tree_list* list, char** out) {
  ABSTREE_REQUIRE(list && out);
  return guarded([&] {
    std::vector<abstree::Tree> trees;
    for (const auto& t : list->trees) trees.push_back(t.tree);
    *out = copy_string(abstree::format_edge_lists(trees));
  });
}

abstree_status abstree_index_kind_parse(const char* name, abstree_index_kind* out) {
  ABSTREE_REQUIRE(name && out);
  for (int k = ABSTREE_INDEX_ABS; k <= ABSTREE_INDEX_ABC; ++k) {
    const auto kind = static_cast<abstree_index_kind>(k);
    if (std::strcmp(name, abstree_index_kind_name(kind)) == 0) {
      *out = kind;
      return ABSTREE_OK;
    }
  }
  g_last_error = std::string("unknown index kind '") + name + "'";
  return ABSTREE_BAD_PARAMETERS;
}

const char* abstree_index_kind_name(abstree_index_kind kind) {
  switch (kind) {
    case ABSTREE_INDEX_ABS: return "abs";
    case ABSTREE_INDEX_RANDIC: return "randic";
    case ABSTREE_INDEX_SUM_CONNECTIVITY: return "sumconn";
    case ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY: return "gensumconn";
    case ABSTREE_INDEX_HARMONIC: return "harmonic";
    case ABSTREE_INDEX_ABC: return "abc";
  }
  return "unknown";
}

abstree_status abstree_index(const abstree_tree* tree, abstree_index_kind kind, double alpha,
                             double* out) {
  ABSTREE_REQUIRE(tree && out);
  return guarded([&] { *out = abstree::index_value(tree->tree, to_kind(kind, alpha)).value; });
}

abstree_status abstree_index_from_histogram(const int64_t* triples, size_t len,
                                            abstree_index_kind kind, double alpha,
                                            double* out) {
  ABSTREE_REQUIRE(out);
  ABSTREE_REQUIRE(triples || len == 0);
  return guarded([&] {
    abstree::EdgeTypeHistogram h;
    for (size_t i = 0; i < len; ++i) {
      const int64_t a = triples[3 * i];
      const int64_t b = triples[3 * i + 1];
      const int64_t c = triples[3 * i + 2];
      if (c < 0 || a > INT32_MAX || b > INT32_MAX) {
        throw abstree::Error(abstree::ErrorCode::BadParameters, "bad histogram entry");
      }
      h.add(static_cast<int>(a < 0 ? 0 : a), static_cast<int>(b < 0 ? 0 : b),
            static_cast<uint64_t>(c));
    }
    *out = abstree::index_value(h, to_kind(kind, alpha)).value;
  });
}

abstree_status abstree_contract_edge(const abstree_tree* tree, int32_t u, int32_t v,
                                     abstree_tree** out) {
  ABSTREE_REQUIRE(tree && out);
  return guarded([&] { *out = wrap(abstree::contract_edge(tree->tree, abstree::Edge(u, v)).tree); });
}

abstree_status abstree_split_vertex(const abstree_tree* tree, int32_t v, const int32_t* left,
                                    size_t left_len, const int32_t* right, size_t right_len,
                                    abstree_tree** out) {
  ABSTREE_REQUIRE(tree && out);
  ABSTREE_REQUIRE(left || left_len == 0);
  ABSTREE_REQUIRE(right || right_len == 0);
  return guarded([&] {
    abstree::SplitSpec spec{v, std::vector<abstree::Vertex>(left, left + left_len),
                            std::vector<abstree::Vertex>(right, right + right_len)};
    *out = wrap(abstree::split_vertex(tree->tree, spec));
  });
}

abstree_status abstree_replace_with_3regular(const abstree_tree* tree, int32_t v,
                                             const abstree_tree* shape,
                                             const int32_t* assignment, size_t assignment_len,
                                             abstree_tree** out) {
  ABSTREE_REQUIRE(tree && out);
  ABSTREE_REQUIRE(assignment || assignment_len == 0);
  return guarded([&] {
    if (!shape && assignment_len == 0) {
      *out = wrap(abstree::replace_with_3regular(tree->tree, v));
      return;
    }
    if (!tree->tree.contains(v)) {
      throw abstree::Error(abstree::ErrorCode::BadLabel, "vertex not in tree");
    }
    const abstree::Tree chosen =
        shape ? shape->tree : abstree::default_k3_shape(std::max(3, tree->tree.degree(v)));
    abstree::LeafAssignment a;
    if (assignment_len == 0) {
      a = abstree::default_assignment(tree->tree, v, chosen);
    } else {
      for (size_t i = 0; i < assignment_len; ++i) {
        a.emplace_back(assignment[2 * i], assignment[2 * i + 1]);
      }
    }
    *out = wrap(abstree::replace_with_3regular(tree->tree, v, chosen, a));
  });
}

abstree_status abstree_k3_regular_shapes(int32_t s, abstree_tree_list** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = wrap_list(abstree::k3_regular_shapes(s)); });
}

abstree_status abstree_make_path(size_t n, abstree_tree** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = wrap(abstree::make_path(n)); });
}

abstree_status abstree_make_star(size_t n, abstree_tree** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = wrap(abstree::make_star(n)); });
}

abstree_status abstree_make_spider(const int32_t* legs, size_t len, abstree_tree** out) {
  ABSTREE_REQUIRE(out);
  ABSTREE_REQUIRE(legs || len == 0);
  return guarded([&] {
    std::vector<int> l(legs, legs + len);
    *out = wrap(abstree::make_spider(l));
  });
}

abstree_status abstree_tstar_family(size_t n, int32_t k, abstree_tree_list** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = wrap_list(abstree::tstar_family(n, k)); });
}

int abstree_is_tstar_member(const abstree_tree* tree) {
  return tree && abstree::is_tstar_member(tree->tree) ? 1 : 0;
}

namespace {
abstree::EnumSpec make_spec(size_t n, int32_t k, int32_t max_degree) {
  abstree::EnumSpec spec{n, std::nullopt, std::nullopt};
  if (k >= 0) spec.leaves = k;
  if (max_degree >= 0) spec.max_degree = max_degree;
  return spec;
}
}  // namespace

abstree_status abstree_enumerate(size_t n, int32_t k, int32_t max_degree,
                                 abstree_tree_list** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = wrap_list(abstree::enumerate_trees(make_spec(n, k, max_degree))); });
}

abstree_status abstree_enumerate_count(size_t n, int32_t k, int32_t max_degree, uint64_t* out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = abstree::count_trees(make_spec(n, k, max_degree)); });
}

int abstree_in_theorem_range(size_t n, int32_t k) { return abstree::in_theorem_range(n, k); }

abstree_status abstree_formula_min_abs(size_t n, int32_t k, double* out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] { *out = abstree::formula_min_abs(n, k); });
}

abstree_status abstree_min_abs_bruteforce(size_t n, int32_t k, int chemical, unsigned threads,
                                          double tolerance, double* minimum,
                                          size_t* argmin_count) {
  ABSTREE_REQUIRE(minimum);
  return guarded([&] {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
      throw abstree::Error(abstree::ErrorCode::BadParameters, "tolerance must be finite and >= 0");
    }
    const auto r = abstree::min_abs_bruteforce(n, k, chemical != 0, threads, tolerance);
    *minimum = r.minimum;
    if (argmin_count) *argmin_count = r.argmin.size();
  });
}

abstree_status abstree_verify(size_t n, int32_t k, int chemical, double tolerance,
                              unsigned threads, abstree_report** out) {
  ABSTREE_REQUIRE(out);
  return guarded([&] {
    auto* r = new abstree_report;
    try {
      r->report = abstree::verify_theorem(n, k, chemical != 0, tolerance, threads);
    } catch (...) {
      delete r;
      throw;
    }
    for (const auto& code : r->report.argmin_codes) r->argmin.push_back(code.value);
    *out = r;
  });
}

void abstree_report_free(abstree_report* report) { delete report; }
size_t abstree_report_n(const abstree_report* r) { return r ? r->report.n : 0; }
int32_t abstree_report_k(const abstree_report* r) { return r ? r->report.k : 0; }
int abstree_report_chemical(const abstree_report* r) { return r && r->report.chemical; }
double abstree_report_formula(const abstree_report* r) { return r ? r->report.formula_value : NAN; }
double abstree_report_bruteforce(const abstree_report* r) {
  return r ? r->report.bruteforce_min : NAN;
}
double abstree_report_tolerance(const abstree_report* r) { return r ? r->report.tolerance : NAN; }
uint64_t abstree_report_class_size(const abstree_report* r) {
  return r ? r->report.class_size : 0;
}
size_t abstree_report_argmin_count(const abstree_report* r) { return r ? r->argmin.size() : 0; }
size_t abstree_report_tstar_count(const abstree_report* r) {
  return r ? r->report.tstar_codes.size() : 0;
}
const char* abstree_report_argmin_code(const abstree_report* r, size_t i) {
  return r && i < r->argmin.size() ? r->argmin[i].c_str() : nullptr;
}
const char* abstree_report_reason(const abstree_report* r) {
  return r ? r->report.reason.c_str() : nullptr;
}
int abstree_report_pass(const abstree_report* r) {
  return r && r->report.verdict == abstree::Verdict::Pass;
}

abstree_status abstree_lemma_suite(const char* lemma, size_t min_n, size_t max_n,
                                   abstree_lemma_records** out) {
  ABSTREE_REQUIRE(lemma && out);
  return guarded([&] {
    const auto id = abstree::parse_lemma_id(lemma);
    *out = new abstree_lemma_records{abstree::lemma_suite(id, {min_n, max_n})};
  });
}

void abstree_lemma_records_free(abstree_lemma_records* records) { delete records; }

size_t abstree_lemma_records_size(const abstree_lemma_records* records) {
  return records ? records->records.size() : 0;
}

namespace {
const abstree::LemmaCheckRecord* record_at(const abstree_lemma_records* records, size_t i) {
  return records && i < records->records.size() ? &records->records[i] : nullptr;
}
}  // namespace

const char* abstree_lemma_record_lemma(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r ? abstree::lemma_label(r->lemma).data() : nullptr;
}
const char* abstree_lemma_record_instance(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r ? r->instance.c_str() : nullptr;
}
double abstree_lemma_record_lhs(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r ? r->lhs : NAN;
}
double abstree_lemma_record_rhs(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r ? r->rhs : NAN;
}
int abstree_lemma_record_strict(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r && r->strict;
}
int abstree_lemma_record_pass(const abstree_lemma_records* records, size_t i) {
  const auto* r = record_at(records, i);
  return r && r->pass;
}

}  // extern "C"
