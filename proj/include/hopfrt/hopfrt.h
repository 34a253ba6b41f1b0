/* C interface to the rooted-tree Hopf algebra runtime.
 *
 * Every function returns a status code. On failure the message (and, for
 * parse errors, the character position) is kept per thread and can be read
 * with hopfrt_last_error / hopfrt_last_error_position until the next call.
 * Strings returned through `char**` are owned by the caller and released
 * with hopfrt_string_free; handles with their matching *_free function.
 */
#ifndef HOPFRT_H
#define HOPFRT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HOPFRT_API __declspec(dllexport)
#else
#define HOPFRT_API __attribute__((visibility("default")))
#endif

typedef enum hopfrt_status {
  HOPFRT_OK = 0,
  HOPFRT_ERR_PARSE = 1,
  HOPFRT_ERR_INVALID_ARGUMENT = 2,
  HOPFRT_ERR_TRUNCATION = 3,
  HOPFRT_ERR_INTERNAL = 4
} hopfrt_status;

typedef struct hopfrt_lincomb hopfrt_lincomb;
typedef struct hopfrt_tensor hopfrt_tensor;
typedef struct hopfrt_field hopfrt_field;

HOPFRT_API const char* hopfrt_last_error(void);
/* Position of the last parse error, or -1. */
HOPFRT_API long hopfrt_last_error_position(void);
HOPFRT_API void hopfrt_string_free(char* s);

/* Linear combinations of forests, e.g. "2 [[]]*[] - 1/2 [[][]] + 3". */
HOPFRT_API hopfrt_status hopfrt_lincomb_parse(const char* text, hopfrt_lincomb** out);
HOPFRT_API hopfrt_status hopfrt_lincomb_render(const hopfrt_lincomb* x, char** out);
HOPFRT_API void hopfrt_lincomb_free(hopfrt_lincomb* x);

HOPFRT_API hopfrt_status hopfrt_tensor_render(const hopfrt_tensor* x, char** out);
HOPFRT_API void hopfrt_tensor_free(hopfrt_tensor* x);

/* Canonical serializations of all trees with n vertices, one per line. */
HOPFRT_API hopfrt_status hopfrt_enumerate_trees(size_t n, char** out);

HOPFRT_API hopfrt_status hopfrt_coproduct(const hopfrt_lincomb* x, hopfrt_tensor** out);
HOPFRT_API hopfrt_status hopfrt_antipode(const hopfrt_lincomb* x, hopfrt_lincomb** out);
HOPFRT_API hopfrt_status hopfrt_multiply(const hopfrt_lincomb* a, const hopfrt_lincomb* b, hopfrt_lincomb** out);
/* N_t(x); `by` is a tree or "1" (grading operator). */
HOPFRT_API hopfrt_status hopfrt_grow(const char* by, const hopfrt_lincomb* x, hopfrt_lincomb** out);
HOPFRT_API hopfrt_status hopfrt_delta_k(size_t k, hopfrt_lincomb** out);

/* Growth expression for a tree, e.g. "N{[]}(.)". */
HOPFRT_API hopfrt_status hopfrt_decompose(const char* tree, char** out);

/* Basis of A_S up to max_degree, one line per element, grouped by degree.
 * With check_closure set, *closed receives 1 or 0 and the report ends with
 * a closure line; otherwise *closed is 1. `generators` is comma separated. */
HOPFRT_API hopfrt_status hopfrt_subalgebra(const char* generators, size_t max_degree, int check_closure,
                                           char** out, int* closed);

/* Vector field, one line per component: "f1 = x2 + 1/2 x1^2". */
HOPFRT_API hopfrt_status hopfrt_field_parse(const char* text, int order, hopfrt_field** out);
HOPFRT_API void hopfrt_field_free(hopfrt_field* f);
HOPFRT_API int hopfrt_field_order(const hopfrt_field* f);

/* φ(t), one line per component. */
HOPFRT_API hopfrt_status hopfrt_butcher_tree(const hopfrt_field* f, const char* tree, char** out);
/* d^k x/ds^k at s = 0 for k = 0..K, one line per k. */
HOPFRT_API hopfrt_status hopfrt_butcher_taylor(const hopfrt_field* f, int K, char** out);

/* γ_t(ψ) for curvature Γ, as a polynomial in x, y truncated at `order`. */
HOPFRT_API hopfrt_status hopfrt_cm_gamma(const char* psi, const char* gamma, const char* tree, int order,
                                         char** out);

/* Runs a verification suite; *passed receives 1 when every relation holds. */
HOPFRT_API hopfrt_status hopfrt_verify(const char* suite, size_t max_degree, uint64_t seed, int json, char** out,
                                       int* passed);

#ifdef __cplusplus
}
#endif

#endif
