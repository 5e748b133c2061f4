#ifndef THOMPSONF_H
#define THOMPSONF_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(THOMPSONF_BUILDING)
#    define TF_API __declspec(dllexport)
#  else
#    define TF_API __declspec(dllimport)
#  endif
#else
#  define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_PARSE_ERROR,
  TF_NOT_POWER_OF_TWO,
  TF_NOT_MONOTONE,
  TF_SLOPE_NOT_POWER_OF_TWO,
  TF_COORDINATE_OUT_OF_RANGE,
  TF_OUT_OF_RANGE,
  TF_NOT_IN_ORBITAL,
  TF_ITERATION_CAP,
  TF_BAD_INPUT,
  TF_NEGATIVE_INDEX,
  TF_SYNTAX_ERROR,
  TF_UNBOUND_NAME,
  TF_SUPPORT_OUT_OF_RANGE,
  TF_NOT_FINITE_INDEX,
  TF_NULL_ARGUMENT,
  TF_INTERNAL_ERROR
} tf_status;

typedef enum tf_format { TF_FORMAT_TEXT = 0, TF_FORMAT_JSON = 1 } tf_format;

typedef enum tf_element_view {
  TF_VIEW_FULL = 0,  /* breaks, phi, orbitals */
  TF_VIEW_PHI,
  TF_VIEW_ORBITALS
} tf_element_view;

typedef struct tf_element tf_element;
typedef struct tf_env tf_env;
typedef struct tf_subgroup tf_subgroup;

/* Message of the last failure on this thread; "" after success. */
TF_API const char* tf_last_error(void);
TF_API const char* tf_status_name(tf_status status);
/* Nonzero for parse/validation failures, zero for mathematical ones. */
TF_API int tf_status_is_validation(tf_status status);

/* Every char** output is allocated by the library. */
TF_API void tf_string_free(char* s);

/* Elements of F. */
TF_API tf_status tf_element_from_breaks(const char* breaks, tf_element** out);
TF_API tf_status tf_element_from_json(const char* json, tf_element** out);
TF_API tf_status tf_element_standard(const char* name, tf_element** out); /* f0 f1 g0 g1 x0..x9 */
TF_API void tf_element_free(tf_element* f);

TF_API tf_status tf_element_compose(const tf_element* f, const tf_element* g, tf_element** out);
TF_API tf_status tf_element_inverse(const tf_element* f, tf_element** out);
TF_API tf_status tf_element_conjugate(const tf_element* f, const tf_element* g, tf_element** out);
TF_API tf_status tf_element_commutator(const tf_element* f, const tf_element* g, tf_element** out);
TF_API tf_status tf_element_power(const tf_element* f, int64_t n, tf_element** out);
TF_API tf_status tf_element_rev(const tf_element* f, tf_element** out);

TF_API tf_status tf_element_equal(const tf_element* f, const tf_element* g, int* out);
TF_API tf_status tf_element_phi(const tf_element* f, int64_t* e0, int64_t* e1);
/* at is a rational such as "3/8"; the value is written as a report. */
TF_API tf_status tf_element_evaluate(const tf_element* f, const char* at, tf_format fmt, char** out);
TF_API tf_status tf_element_report(const tf_element* f, tf_element_view view, tf_format fmt, char** out);
TF_API tf_status tf_element_to_json(const tf_element* f, char** out);
/* Pushes c toward the lower end of the orbital containing it; cap 0 means the default. */
TF_API tf_status tf_element_push_to_end(const tf_element* f, const char* c, const char* eps, uint64_t cap,
                                        tf_format fmt, char** out);

/* Named elements for word evaluation. */
TF_API tf_status tf_env_create(tf_env** out);
TF_API void tf_env_free(tf_env* env);
TF_API tf_status tf_env_load_json(tf_env* env, const char* json);
TF_API tf_status tf_env_set(tf_env* env, const char* name, const tf_element* f);
TF_API tf_status tf_word_eval(const tf_env* env, const char* word, tf_element** out);

/* Finite-index subgroups, given as <F', generators>. */
TF_API tf_status tf_subgroup_from_phi_pairs(const char* pairs, tf_subgroup** out);
TF_API tf_status tf_subgroup_from_json(const char* json, tf_subgroup** out);
TF_API tf_status tf_subgroup_from_elements(const tf_element* const* elements, int64_t count, tf_subgroup** out);
TF_API void tf_subgroup_free(tf_subgroup* h);
TF_API tf_status tf_subgroup_canonical(const tf_subgroup* h, int64_t* g, int64_t* hh, int64_t* m);
TF_API tf_status tf_subgroup_analyze(const tf_subgroup* h, tf_format fmt, char** out);
TF_API tf_status tf_subgroup_iso_check(const tf_subgroup* h1, const tf_subgroup* h2, tf_format fmt, int* isomorphic,
                                       char** out);

TF_API tf_status tf_enumerate_index(int64_t n, tf_format fmt, char** out);
TF_API tf_status tf_classify_index(int64_t n, tf_format fmt, char** out);

/* Builds y0, y1 for K(a,b) and verifies them. has_seed = 0 uses the default completion. */
TF_API tf_status tf_kab_report(int64_t a, int64_t b, int has_seed, uint64_t seed, tf_format fmt, int* all_passed,
                               char** out);

#ifdef __cplusplus
}
#endif

#endif
