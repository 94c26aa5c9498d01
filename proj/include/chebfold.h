#ifndef CHEBFOLD_H
#define CHEBFOLD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

typedef enum {
  CF_OK = 0,
  CF_ERR_ARGUMENT = 1,
  CF_ERR_PARSE = 2,
  CF_ERR_MUTATION = 3,
  CF_ERR_ARITHMETIC = 4,
  CF_ERR_INTERNAL = 5
} cf_status;

typedef struct cf_folding cf_folding;
typedef struct cf_matrix cf_matrix;

/* message of the last failed call on this thread, never NULL */
CF_API const char* cf_last_error(void);
/* strings returned through char** out parameters are owned by the caller */
CF_API void cf_string_free(char* s);
CF_API const char* cf_version(void);

/* kind: "H3", "H4", "I2" (n >= 2), "I2series" (n >= 2), "F4E6" */
CF_API cf_status cf_folding_new(const char* kind, int n, cf_folding** out);
CF_API void cf_folding_free(cf_folding* f);
CF_API cf_status cf_folding_json(const cf_folding* f, char** out);
CF_API int cf_folding_size(const cf_folding* f);
CF_API int cf_folding_folded_size(const cf_folding* f);

CF_API cf_status cf_matrix_from_json(const char* text, cf_matrix** out);
CF_API cf_status cf_matrix_to_json(const cf_matrix* a, char** out);
CF_API cf_status cf_matrix_mutate(const cf_matrix* a, int k, cf_matrix** out);
CF_API void cf_matrix_free(cf_matrix* a);

/* product table and sigma values of the Chebyshev ring of rank n */
CF_API cf_status cf_ring_table(int n, char** out_json);

CF_API cf_status cf_unfold_check(const cf_folding* f, int depth, int random_words, int random_length,
                                 uint64_t seed, int* passed, char** out_json);

/* format: "json", "dot", "csv" */
CF_API cf_status cf_ar_build(const cf_folding* f, const char* format, char** out);
/* Dynkin quiver "A", "D" or "E" with p vertices, alternating orientation */
CF_API cf_status cf_ar_build_dynkin(const char* type, int p, const char* format, char** out);

CF_API cf_status cf_fold_report(const cf_folding* f, int* passed, char** out_json);

CF_API cf_status cf_tropical_walk(const cf_folding* f, int depth, int random_words, int random_length,
                                  uint64_t seed, int* passed, char** out_json);
CF_API cf_status cf_tropical_csv(const cf_folding* f, const int* word, size_t length, char** out_csv);
CF_API cf_status cf_seed_count(const cf_folding* f, size_t cap, char** out_json);

/* format: "json" or "dot" */
CF_API cf_status cf_tilting(const cf_folding* f, const char* format, int* passed, char** out);

CF_API cf_status cf_verify_all(const char* kind, int n, uint64_t seed, int* passed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
