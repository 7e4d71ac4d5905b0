/*
 * C API for the colorcomp library: exact counting and enumeration of colored
 * compositions, the Invert transform family, ordinary Bell polynomials and
 * linear recurrence transport.
 *
 * All big numbers cross the boundary as decimal strings (rationals as "p/q")
 * so no precision is lost. Every constructor hands back an opaque handle the
 * caller frees with the matching *_free; strings returned through char**
 * are freed with cc_string_free. Functions return CC_OK or an error code;
 * cc_last_error() gives a thread-local message for the last failure.
 */
#ifndef COLORCOMP_H
#define COLORCOMP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CC_API
#define CC_API __attribute__((visibility("default")))
#endif

typedef enum {
    CC_OK = 0,
    CC_ERR_DOMAIN = 1,       /* argument outside the defined range */
    CC_ERR_SHAPE = 2,        /* length/arity mismatch */
    CC_ERR_CAP = 3,          /* enumeration exceeds the object cap */
    CC_ERR_INSUFFICIENT = 4, /* fewer input terms than requested */
    CC_ERR_NONINTEGRAL = 5,  /* rational result requested as integers */
    CC_ERR_PARSE = 6         /* malformed textual input */
} cc_status;

typedef struct cc_seq cc_seq;               /* integer sequence prefix */
typedef struct cc_coloration cc_coloration; /* prefix + cyclic tail */
typedef struct cc_poly cc_poly;             /* sparse multivariate polynomial */
typedef struct cc_linrec cc_linrec;         /* linear recurrence */

CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* --- sequences ------------------------------------------------------- */

CC_API cc_status cc_seq_parse(const char* comma_list, cc_seq** out);
CC_API cc_status cc_seq_format(const cc_seq* s, const char* sep, char** out);
CC_API size_t cc_seq_len(const cc_seq* s);
CC_API cc_status cc_seq_term(const cc_seq* s, size_t index, char** out);
CC_API void cc_seq_free(cc_seq* s);

CC_API cc_status cc_convolve(const cc_seq* a, const cc_seq* b, cc_seq** out);
CC_API cc_status cc_sigma(const cc_seq* a, cc_seq** out);
CC_API cc_status cc_subtract(const cc_seq* a, const cc_seq* b, cc_seq** out);

/* --- colorations ------------------------------------------------------ */

/* prefix_list may be empty; tail_list must name at least one entry. */
CC_API cc_status cc_coloration_new(const char* prefix_list,
                                   const char* tail_list,
                                   cc_coloration** out);
CC_API cc_status cc_coloration_value_at(const cc_coloration* x, long i,
                                        char** out);
CC_API void cc_coloration_free(cc_coloration* x);

/* --- Invert transforms ------------------------------------------------ */

CC_API cc_status cc_invert_interpolated(const cc_seq* a, const char* x_rational,
                                        long n_terms, cc_seq** out);

/*
 * Inverse-based criterion: *verdict = 1 and *prefix holds the coloration
 * prefix, or *verdict = 0 and the witness names the first negative term.
 * Unused outputs are left untouched.
 */
CC_API cc_status cc_coloration_of(const cc_seq* a, int* verdict,
                                  cc_seq** prefix, long* witness_index,
                                  char** witness_value);

CC_API cc_status cc_count_from_coloration(const cc_coloration* x, long n_terms,
                                          cc_seq** out);

/* --- counting --------------------------------------------------------- */

typedef enum {
    CC_COUNT_RECURRENCE = 0,
    CC_COUNT_MULTINOMIAL = 1,
    CC_COUNT_INVERT = 2
} cc_count_method;

/* A_1..A_n */
CC_API cc_status cc_count_sequence(const cc_coloration* x, long n,
                                   cc_count_method method, cc_seq** out);

/* P_0..P_n */
CC_API cc_status cc_parts_sequence(const cc_coloration* x, long n,
                                   cc_seq** out);

typedef enum {
    CC_BLACKTIE_CONV = 0,
    CC_BLACKTIE_T5 = 1,
    CC_BLACKTIE_T6 = 2
} cc_blacktie_method;

/* B_0..B_n */
CC_API cc_status cc_blacktie_sequence(const cc_coloration* x, long n,
                                      cc_blacktie_method method, cc_seq** out);

/*
 * Newline-separated rendered compositions of n (or black-tie tilings when
 * blacktie != 0); *count receives the number of objects. The empty
 * composition renders as an empty line.
 */
CC_API cc_status cc_enumerate(const cc_coloration* x, long n, int blacktie,
                              long cap, char** lines, long* count);

/* --- Bell polynomials ------------------------------------------------- */

CC_API cc_status cc_bell_partial(long n, long k, cc_poly** out);
CC_API cc_status cc_bell_complete(long n, cc_poly** out);
CC_API cc_status cc_composition_polynomial(long n, cc_poly** out);
CC_API cc_status cc_poly_derivative(const cc_poly* p, long var_index,
                                    cc_poly** out);
CC_API cc_status cc_poly_to_string(const cc_poly* p, const char* var_prefix,
                                   char** out);
CC_API cc_status cc_poly_evaluate(const cc_poly* p, const cc_seq* point,
                                  char** out);
CC_API int cc_poly_equal(const cc_poly* a, const cc_poly* b);
CC_API void cc_poly_free(cc_poly* p);

/* --- linear recurrences ----------------------------------------------- */

/* Entries are integers or rationals "p/q"; order = number of coefficients. */
CC_API cc_status cc_linrec_new(const char* coeffs_list,
                               const char* initials_list, cc_linrec** out);
CC_API cc_status cc_linrec_generate(const cc_linrec* rec, long n_terms,
                                    cc_seq** out);
CC_API cc_status cc_linrec_invert(const cc_linrec* rec, const char* x_rational,
                                  cc_linrec** out);
CC_API void cc_linrec_free(cc_linrec* rec);

CC_API cc_status cc_rbonacci(long r, long n_terms, cc_seq** out);
CC_API cc_status cc_rbonacci_inverse_identity(long r, long n_terms, int* holds);

#ifdef __cplusplus
}
#endif

#endif /* COLORCOMP_H */
