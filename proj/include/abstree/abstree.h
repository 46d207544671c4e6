/*
 * C interface to the abstree library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an abstree_status;
 * on failure the output pointer is left untouched and abstree_last_error()
 * describes the problem for the calling thread. Strings returned through
 * char** are heap-allocated and released with abstree_string_free.
 */
#ifndef ABSTREE_ABSTREE_H
#define ABSTREE_ABSTREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(ABSTREE_BUILDING_LIBRARY)
#define ABSTREE_API __attribute__((visibility("default")))
#else
#define ABSTREE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abstree_status {
  ABSTREE_OK = 0,
  ABSTREE_NOT_A_TREE = 1,
  ABSTREE_BAD_LABEL = 2,
  ABSTREE_DUPLICATE_EDGE = 3,
  ABSTREE_NOT_AN_EDGE = 4,
  ABSTREE_BAD_PARTITION = 5,
  ABSTREE_BAD_ARITY = 6,
  ABSTREE_SHAPE_MISMATCH = 7,
  ABSTREE_BAD_ASSIGNMENT = 8,
  ABSTREE_BAD_PARAMETERS = 9,
  ABSTREE_OUT_OF_RANGE = 10,
  ABSTREE_DEGENERATE_EDGE = 11,
  ABSTREE_UNKNOWN_LEMMA = 12,
  ABSTREE_PARSE_ERROR = 13,
  ABSTREE_NULL_ARGUMENT = 14,
  ABSTREE_INTERNAL_ERROR = 15
} abstree_status;

typedef enum abstree_index_kind {
  ABSTREE_INDEX_ABS = 0,
  ABSTREE_INDEX_RANDIC = 1,
  ABSTREE_INDEX_SUM_CONNECTIVITY = 2,
  ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY = 3,
  ABSTREE_INDEX_HARMONIC = 4,
  ABSTREE_INDEX_ABC = 5
} abstree_index_kind;

typedef struct abstree_tree abstree_tree;
typedef struct abstree_tree_list abstree_tree_list;
typedef struct abstree_report abstree_report;
typedef struct abstree_lemma_records abstree_lemma_records;

/* Errors */
ABSTREE_API const char* abstree_last_error(void);
ABSTREE_API const char* abstree_status_name(abstree_status status);
ABSTREE_API void abstree_string_free(char* s);

/* Trees. `edges` holds 2*m labels: u0 v0 u1 v1 ... */
ABSTREE_API abstree_status abstree_tree_from_edges(size_t n, const int32_t* edges, size_t m,
                                                   abstree_tree** out);
ABSTREE_API abstree_status abstree_tree_parse(const char* text, abstree_tree** out);
ABSTREE_API abstree_status abstree_tree_clone(const abstree_tree* tree, abstree_tree** out);
ABSTREE_API void abstree_tree_free(abstree_tree* tree);
ABSTREE_API size_t abstree_tree_vertex_count(const abstree_tree* tree);
ABSTREE_API size_t abstree_tree_edge_count(const abstree_tree* tree);
/* Copies min(capacity, 2*m) labels of the sorted edge list into out. */
ABSTREE_API size_t abstree_tree_edges(const abstree_tree* tree, int32_t* out, size_t capacity);
ABSTREE_API abstree_status abstree_tree_degree(const abstree_tree* tree, int32_t v, int32_t* out);
ABSTREE_API int32_t abstree_tree_max_degree(const abstree_tree* tree);
ABSTREE_API size_t abstree_tree_leaf_count(const abstree_tree* tree);
ABSTREE_API size_t abstree_tree_e2_count(const abstree_tree* tree);
ABSTREE_API abstree_status abstree_tree_to_text(const abstree_tree* tree, char** out);
ABSTREE_API abstree_status abstree_tree_canonical_code(const abstree_tree* tree, char** out);

/* Tree lists */
ABSTREE_API abstree_status abstree_tree_list_parse(const char* text, abstree_tree_list** out);
ABSTREE_API void abstree_tree_list_free(abstree_tree_list* list);
ABSTREE_API size_t abstree_tree_list_size(const abstree_tree_list* list);
/* Borrowed pointer, valid while the list lives; NULL when out of range. */
ABSTREE_API const abstree_tree* abstree_tree_list_get(const abstree_tree_list* list, size_t i);
ABSTREE_API abstree_status abstree_tree_list_to_text(const abstree_tree_list* list, char** out);

/* Indices. alpha is read only for the general sum-connectivity kind. */
ABSTREE_API abstree_status abstree_index_kind_parse(const char* name, abstree_index_kind* out);
ABSTREE_API const char* abstree_index_kind_name(abstree_index_kind kind);
ABSTREE_API abstree_status abstree_index(const abstree_tree* tree, abstree_index_kind kind,
                                         double alpha, double* out);
/* `triples` holds 3*len values: a0 b0 count0 a1 b1 count1 ... */
ABSTREE_API abstree_status abstree_index_from_histogram(const int64_t* triples, size_t len,
                                                        abstree_index_kind kind, double alpha,
                                                        double* out);

/* Transformations */
ABSTREE_API abstree_status abstree_contract_edge(const abstree_tree* tree, int32_t u, int32_t v,
                                                 abstree_tree** out);
ABSTREE_API abstree_status abstree_split_vertex(const abstree_tree* tree, int32_t v,
                                                const int32_t* left, size_t left_len,
                                                const int32_t* right, size_t right_len,
                                                abstree_tree** out);
/* shape may be NULL (default caterpillar shape). assignment holds
   2*assignment_len values (shape leaf, neighbor) and may be NULL with
   assignment_len == 0 for the default assignment. */
ABSTREE_API abstree_status abstree_replace_with_3regular(const abstree_tree* tree, int32_t v,
                                                         const abstree_tree* shape,
                                                         const int32_t* assignment,
                                                         size_t assignment_len,
                                                         abstree_tree** out);
ABSTREE_API abstree_status abstree_k3_regular_shapes(int32_t s, abstree_tree_list** out);

/* Families */
ABSTREE_API abstree_status abstree_make_path(size_t n, abstree_tree** out);
ABSTREE_API abstree_status abstree_make_star(size_t n, abstree_tree** out);
ABSTREE_API abstree_status abstree_make_spider(const int32_t* legs, size_t len,
                                               abstree_tree** out);
ABSTREE_API abstree_status abstree_tstar_family(size_t n, int32_t k, abstree_tree_list** out);
ABSTREE_API int abstree_is_tstar_member(const abstree_tree* tree);

/* Enumeration. k < 0 means any leaf count; max_degree < 0 means no cap. */
ABSTREE_API abstree_status abstree_enumerate(size_t n, int32_t k, int32_t max_degree,
                                             abstree_tree_list** out);
ABSTREE_API abstree_status abstree_enumerate_count(size_t n, int32_t k, int32_t max_degree,
                                                   uint64_t* out);

/* Verification. threads == 0 uses every core. */
ABSTREE_API int abstree_in_theorem_range(size_t n, int32_t k);
ABSTREE_API abstree_status abstree_formula_min_abs(size_t n, int32_t k, double* out);
ABSTREE_API abstree_status abstree_min_abs_bruteforce(size_t n, int32_t k, int chemical,
                                                      unsigned threads, double tolerance,
                                                      double* minimum, size_t* argmin_count);
ABSTREE_API abstree_status abstree_verify(size_t n, int32_t k, int chemical, double tolerance,
                                          unsigned threads, abstree_report** out);
ABSTREE_API void abstree_report_free(abstree_report* report);
ABSTREE_API size_t abstree_report_n(const abstree_report* report);
ABSTREE_API int32_t abstree_report_k(const abstree_report* report);
ABSTREE_API int abstree_report_chemical(const abstree_report* report);
ABSTREE_API double abstree_report_formula(const abstree_report* report);
ABSTREE_API double abstree_report_bruteforce(const abstree_report* report);
ABSTREE_API double abstree_report_tolerance(const abstree_report* report);
ABSTREE_API uint64_t abstree_report_class_size(const abstree_report* report);
ABSTREE_API size_t abstree_report_argmin_count(const abstree_report* report);
ABSTREE_API size_t abstree_report_tstar_count(const abstree_report* report);
/* Borrowed strings, valid while the report lives. */
ABSTREE_API const char* abstree_report_argmin_code(const abstree_report* report, size_t i);
ABSTREE_API const char* abstree_report_reason(const abstree_report* report);
ABSTREE_API int abstree_report_pass(const abstree_report* report);

/* Lemma suites. lemma is "2.1" .. "2.6". */
ABSTREE_API abstree_status abstree_lemma_suite(const char* lemma, size_t min_n, size_t max_n,
                                               abstree_lemma_records** out);
ABSTREE_API void abstree_lemma_records_free(abstree_lemma_records* records);
ABSTREE_API size_t abstree_lemma_records_size(const abstree_lemma_records* records);
ABSTREE_API const char* abstree_lemma_record_lemma(const abstree_lemma_records* records, size_t i);
ABSTREE_API const char* abstree_lemma_record_instance(const abstree_lemma_records* records,
                                                      size_t i);
ABSTREE_API double abstree_lemma_record_lhs(const abstree_lemma_records* records, size_t i);
ABSTREE_API double abstree_lemma_record_rhs(const abstree_lemma_records* records, size_t i);
ABSTREE_API int abstree_lemma_record_strict(const abstree_lemma_records* records, size_t i);
ABSTREE_API int abstree_lemma_record_pass(const abstree_lemma_records* records, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* ABSTREE_ABSTREE_H */
