/*
 * C interface to the qtorb library.
 *
 * Models are opaque handles. Every report is returned as a NUL-terminated
 * canonical JSON string that the caller releases with qtorb_string_free().
 * On any status other than QTORB_OK, qtorb_last_error() describes the
 * failure for the calling thread.
 */
#ifndef QTORB_QTORB_H
#define QTORB_QTORB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QTORB_API __declspec(dllexport)
#else
#define QTORB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtorb_status {
  QTORB_OK = 0,
  QTORB_ERROR_NULL_ARGUMENT = 1,
  QTORB_ERROR_INVALID_MODEL = 2,  /* parse or validation failure */
  QTORB_ERROR_NOT_QUASI_SL = 3,
  QTORB_ERROR_INVALID_BLOWUP = 4,
  QTORB_ERROR_INVALID_ARGUMENT = 5,
  QTORB_ERROR_OUT_OF_MEMORY = 6,
  QTORB_ERROR_INTERNAL = 7
} qtorb_status;

typedef struct qtorb_model qtorb_model;

QTORB_API const char* qtorb_status_string(qtorb_status status);
QTORB_API const char* qtorb_last_error(void);
QTORB_API void qtorb_string_free(char* str);

/* Parses and validates a model from JSON text. */
QTORB_API qtorb_status qtorb_model_parse(const char* json, qtorb_model** out);
QTORB_API void qtorb_model_free(qtorb_model* model);
QTORB_API qtorb_status qtorb_model_to_json(const qtorb_model* model, char** out);
QTORB_API int qtorb_model_dimension(const qtorb_model* model);
QTORB_API int qtorb_model_facet_count(const qtorb_model* model);

/* Validation report. Returns QTORB_ERROR_INVALID_MODEL with a report listing
 * every violation when the text is not a valid model. */
QTORB_API qtorb_status qtorb_validate(const char* json, char** report);

QTORB_API qtorb_status qtorb_faces_report(const qtorb_model* model, char** out);
QTORB_API qtorb_status qtorb_sectors_report(const qtorb_model* model, char** out);
QTORB_API qtorb_status qtorb_betti_report(const qtorb_model* model, char** out);

/* Chen-Ruan report. *identities_ok is set to 1 when all three assembly routes
 * agree and every identity holds. */
QTORB_API qtorb_status qtorb_cr_report(const qtorb_model* model, char** out, int* identities_ok);

/* Ehrhart report. With use_oracle != 0 dilates are counted exhaustively and
 * *consistent reports agreement with the Box-age polynomials. */
QTORB_API qtorb_status qtorb_ehrhart_report(const qtorb_model* model, int use_oracle, char** out,
                                            int* consistent);

/* A blowup at the face given by `face` (facet indices) with weights given as
 * "p/q" strings, parallel to `face`. */
QTORB_API qtorb_status qtorb_blow_up(const qtorb_model* model, const int* face,
                                     const char* const* weights, size_t len, qtorb_model** out,
                                     char** summary);

/* Crepant blowup plus every McKay check; *verdict is 1 on pass. */
QTORB_API qtorb_status qtorb_mckay_report(const qtorb_model* model, const int* face,
                                          const char* const* weights, size_t len, char** out,
                                          int* verdict);

QTORB_API qtorb_status qtorb_fuzz_report(uint64_t seed, int count, int n, int budget,
                                         int use_oracle, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QTORB_QTORB_H */
