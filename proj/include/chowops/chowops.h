/*
 * chowops - mod-p Steenrod operation calculus on Chow rings.
 *
 * C interface to the shared library. All objects are opaque handles;
 * functions return a status code and write results through out
 * parameters. On any failure the out parameters are untouched and
 * chowops_last_error() describes the problem (thread-local).
 *
 * Strings returned through char** out parameters are heap-allocated
 * and must be released with chowops_string_free().
 */

#ifndef CHOWOPS_H
#define CHOWOPS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CHOWOPS_API __declspec(dllexport)
#else
#define CHOWOPS_API __attribute__((visibility("default")))
#endif

typedef enum chowops_status {
    CHOWOPS_OK = 0,
    CHOWOPS_ERR_INVALID_ARG = 1, /* bad handle, range or precondition */
    CHOWOPS_ERR_PARSE = 2,       /* malformed expression */
    CHOWOPS_ERR_MISMATCH = 3,    /* mode/prime/module mismatch */
    CHOWOPS_ERR_INTERNAL = 4
} chowops_status;

typedef enum chowops_mode {
    CHOWOPS_MODE_CHARP = 0, /* operations on mod-p Chow groups, char p base */
    CHOWOPS_MODE_CHAR0 = 1  /* characteristic-0 comparison mode */
} chowops_mode;

typedef enum chowops_format {
    CHOWOPS_FORMAT_TEXT = 0,
    CHOWOPS_FORMAT_JSON = 1
} chowops_format;

typedef struct chowops_element chowops_element; /* operation element */
typedef struct chowops_module chowops_module;   /* quadric or projective space */
typedef struct chowops_class chowops_class;     /* element of a module */

CHOWOPS_API const char* chowops_version(void);
/* Message for the most recent failure on this thread; never NULL. */
CHOWOPS_API const char* chowops_last_error(void);
CHOWOPS_API void chowops_string_free(char* s);

/* ---- operation elements ---- */

CHOWOPS_API chowops_status chowops_element_parse(int prime, chowops_mode mode, const char* expr,
                                                 chowops_element** out);
CHOWOPS_API chowops_status chowops_element_reduce(const chowops_element* e,
                                                  chowops_element** out);
CHOWOPS_API chowops_status chowops_element_compose(const chowops_element* e1,
                                                   const chowops_element* e2,
                                                   chowops_element** out);
CHOWOPS_API chowops_status chowops_element_format(const chowops_element* e,
                                                  chowops_format format, char** out);
CHOWOPS_API int chowops_element_is_zero(const chowops_element* e);
CHOWOPS_API void chowops_element_free(chowops_element* e);

/* ---- modules and classes ---- */

CHOWOPS_API chowops_status chowops_module_quadric(int dimX, chowops_module** out);
CHOWOPS_API chowops_status chowops_module_projspace(int n, int prime, chowops_module** out);
CHOWOPS_API void chowops_module_free(chowops_module* m);

CHOWOPS_API chowops_status chowops_class_parse(const chowops_module* m, const char* expr,
                                               chowops_class** out);
/* act(e, x): e must be in CharPChow mode with the module's prime. */
CHOWOPS_API chowops_status chowops_class_act(const chowops_element* e, const chowops_class* x,
                                             chowops_class** out);
CHOWOPS_API chowops_status chowops_class_format(const chowops_class* x, chowops_format format,
                                                char** out);
CHOWOPS_API void chowops_class_free(chowops_class* x);

/* ---- dual algebra: coaction on H(Bmu_p) ---- */

/* expr is a polynomial in u, v ("u", "v^3", "u*u", "2*v + u*v^2").
 * The coaction of each term is evaluated in the target ring, so formal
 * squares like u*u are legal and give 0. */
CHOWOPS_API chowops_status chowops_coaction(int prime, int truncation, const char* expr,
                                            chowops_format format, char** out);

/* ---- characteristic classes ---- */

/* deg(w_n(-T_X)) for the split quadric of dimension n, and the mod-p
 * quotient deg/p. */
CHOWOPS_API chowops_status chowops_rost(int quadric_dim, int prime, long long* deg,
                                        int* quotient_mod_p);

/* Total class of f(x) = 1 + x^(p-1) for a bundle spec like
 * "(1+2h)^1 (1+h)^-4", printed as an integer polynomial. */
CHOWOPS_API chowops_status chowops_wclass(const char* spec, int prime, int truncation,
                                          chowops_format format, char** out);

/* ---- quadratic form bounds ---- */

/* Feasible first Witt indices for a form of the given dimension;
 * writes up to cap values, sets *count to the full number. */
CHOWOPS_API chowops_status chowops_hoffmann_i1(int dim, int* out, int cap, int* count);
/* v2(i1) >= min(v2(i2),...,v2(ih)) - 1 for a chain of height len >= 2
 * on a form of dimension dim; *ok receives 0 or 1. */
CHOWOPS_API chowops_status chowops_v2_chain_ok(int dim, const int* indices, int len, int* ok);
/* Allowed dimensions of anisotropic forms in I^n_q below 2^(n+1). */
CHOWOPS_API chowops_status chowops_inq_dims(int n, long long* out, int cap, int* count);

#ifdef __cplusplus
}
#endif

#endif /* CHOWOPS_H */
