#ifndef CHORDIDX_CHORDIDX_H
#define CHORDIDX_CHORDIDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CI_API __declspec(dllexport)
#else
#define CI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ci_diagram ci_diagram;

typedef enum ci_status {
  CI_OK = 0,
  CI_MALFORMED_TOKEN = 1,
  CI_DUPLICATE_PASSAGE = 2,
  CI_SIGN_MISMATCH = 3,
  CI_SIDE_INDEX_OUT_OF_RANGE = 4,
  CI_MISSING_GENUS_HEADER = 5,
  CI_WRONG_LENGTH = 6,
  CI_NON_INTEGER = 7,
  CI_UNKNOWN_CROSSING = 8,
  CI_UNKNOWN_CHORD = 9,
  CI_NOT_ADMISSIBLE = 10,
  CI_NOT_MOD2_ADMISSIBLE = 11,
  CI_LENGTH_MISMATCH = 12,
  CI_GENUS_MISMATCH = 13,
  CI_SITE_NOT_ELIGIBLE = 14,
  CI_INVALID_ARGUMENT = 15,
  CI_OVERFLOW = 16,
  CI_NULL_ARGUMENT = 100,
  CI_INTERNAL = 101
} ci_status;

/* Name such as "MalformedToken"; never NULL. */
CI_API const char* ci_status_name(ci_status status);

/* Message of the last failed call on this thread ("" if none). */
CI_API const char* ci_last_error_message(void);

/* Intersection number of the class rejected by the last CI_NOT_ADMISSIBLE
   failure on this thread. */
CI_API int64_t ci_last_pairing(void);

/* Parses the genus/walk/class text format. */
CI_API ci_status ci_diagram_parse(const char* text, ci_diagram** out);
CI_API void ci_diagram_free(ci_diagram* d);

/* Strings returned by the library are released with ci_string_free. */
CI_API ci_status ci_diagram_serialize(const ci_diagram* d, char** out);
CI_API void ci_string_free(char* s);

CI_API ci_status ci_diagram_genus(const ci_diagram* d, int* out);
CI_API ci_status ci_diagram_crossing_count(const ci_diagram* d, size_t* out);
CI_API ci_status ci_diagram_writhe(const ci_diagram* d, int64_t* out);

/* Writes min(cap, 2g) coordinates of the knot class; *len receives 2g. */
CI_API ci_status ci_diagram_knot_class(const ci_diagram* d, int64_t* buf, size_t cap, size_t* len);

/* 1 if the file carried a class line. */
CI_API ci_status ci_diagram_has_class(const ci_diagram* d, int* out);

/* alpha: NULL uses the file's class line if any; "auto" uses the knot class;
   otherwise 2g whitespace-separated integers.
   invariants: comma-separated names or "all". The report is JSON. */
CI_API ci_status ci_compute(const ci_diagram* d, const char* alpha, const char* invariants, int normalized,
                            char** json);

CI_API ci_status ci_chord_index(const ci_diagram* d, const char* alpha, int64_t crossing, int64_t* out);

/* Runs the identity checks; *all_passed is 1 when every check passed. */
CI_API ci_status ci_verify(const ci_diagram* d, const char* alpha, uint64_t seed, char** json, int* all_passed);

/* Zero-class scan with coefficients bounded by `bound`. */
CI_API ci_status ci_scan(const ci_diagram* d, int bound, char** json);

#ifdef __cplusplus
}
#endif

#endif
