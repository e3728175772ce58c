#ifndef DETREP_H
#define DETREP_H

/*
 * C interface to the determinantal representation engine. All functions
 * returning detrep_status leave a thread-local message retrievable through
 * detrep_last_error_message() on failure. Strings handed out through char**
 * are heap copies; release them with detrep_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum detrep_status {
  DETREP_OK = 0,
  DETREP_E_SYNTAX = 1,
  DETREP_E_INHOMOGENEOUS = 2,
  DETREP_E_NOT_ZERO_DIMENSIONAL = 3,
  DETREP_E_NOT_SMOOTH = 4,
  DETREP_E_DEGREE_TOO_SMALL = 5,
  DETREP_E_POINT_NOT_ON_CURVE = 6,
  DETREP_E_FORM_VANISHES_ON_CURVE = 7,
  DETREP_E_WRONG_DEGREE = 8,
  DETREP_E_EFFECTIVE_DIVISOR = 9,
  DETREP_E_INTERNAL_RANK = 10,
  DETREP_E_DIVISION_FAILURE = 11,
  DETREP_E_NOT_THETA_CHARACTERISTIC = 12,
  DETREP_E_NOT_PROPORTIONAL = 13,
  DETREP_E_ZERO_DETERMINANT = 14,
  DETREP_E_NOT_DIVISIBLE = 15,
  DETREP_E_BAD_PRESENTATION = 16,
  DETREP_E_DEGENERATE_ADJUGATE = 17,
  DETREP_E_NOT_AN_AUTOMORPHISM = 18,
  DETREP_E_UNKNOWN_NAME = 19,
  DETREP_E_FILE_FORMAT = 20,
  DETREP_E_INTERNAL = 21
} detrep_status;

typedef struct detrep_curvefile detrep_curvefile;
typedef struct detrep_matrix detrep_matrix;

/* message and payload of the last failure on this thread; the payload is the
 * h0 value after DETREP_E_EFFECTIVE_DIVISOR and the line number after file
 * format errors, 0 otherwise */
const char* detrep_last_error_message(void);
long detrep_last_error_payload(void);

void detrep_string_free(char* s);

/* sectioned curve description: [curve], [points], [pairs], [divisors], [mw] */
detrep_status detrep_curvefile_parse(const char* text, detrep_curvefile** out);
void detrep_curvefile_free(detrep_curvefile* cf);
int detrep_curvefile_degree(const detrep_curvefile* cf);
int detrep_curvefile_genus(const detrep_curvefile* cf);
int detrep_curvefile_has_mw(const detrep_curvefile* cf);

/* one matrix row per line, comma-separated linear forms */
detrep_status detrep_matrix_parse(const char* text, detrep_matrix** out);
void detrep_matrix_free(detrep_matrix* m);
int detrep_matrix_size(const detrep_matrix* m);
detrep_status detrep_matrix_render(const detrep_matrix* m, char** text_out);

/* det(m) = c * F: writes c as "p/q" and whether m equals its transpose */
detrep_status detrep_verify(const detrep_curvefile* cf, const detrep_matrix* m,
                            char** constant_out, int* symmetric_out);

/* representation of the named degree g-1 divisor class. algorithm selects the
 * kernel (1) or adjugate (2) route; symmetric != 0 forces the symmetric
 * construction (theta classes only); monic != 0 rescales so det = F. The
 * result is re-verified before it is returned. */
detrep_status detrep_represent(const detrep_curvefile* cf, const char* divisor_name,
                               int algorithm, int symmetric, int monic,
                               detrep_matrix** out);

/* matrix plus its verification data in JSON */
detrep_status detrep_matrix_json(const detrep_curvefile* cf, const detrep_matrix* m,
                                 char** json_out);

/* full class catalog. as_json != 0 emits the fixed schema
 * {"curve", "d", "classes": [{"label", "effective", "theta", "matrix",
 * "det_constant"}]}; text mode appends a pairwise inequivalence summary over
 * the produced matrices. threads >= 1 caps the enumeration pool. */
detrep_status detrep_classify(const detrep_curvefile* cf, int as_json, int threads,
                              char** report_out);

/* equivalence M' = A M B of two verified representations */
detrep_status detrep_equiv(const detrep_curvefile* cf, const detrep_matrix* a,
                           const detrep_matrix* b, int* equivalent_out);

#ifdef __cplusplus
}
#endif

#endif /* DETREP_H */
