/*
 * Copyright 2026 The twobridge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the twobridge library: tabulation of 2-bridge links,
 * diagrams and invariants, identification against a link table, and
 * splitting numbers.
 *
 * Every fallible function returns a tb_status. On failure a description is
 * available from tb_last_error() on the same thread until the next failing
 * call. Handles are opaque, owned by the caller and released with the
 * matching *_free function; *_free accepts NULL.
 *
 * Text results use caller buffers: up to `capacity` bytes including the
 * terminating NUL are written to `buffer`, and `*length` receives the full
 * length without the NUL. If the text does not fit, TB_ERR_BUFFER_TOO_SMALL is
 * returned and the buffer is left untouched. A NULL buffer with capacity 0
 * only sets `*length` and returns TB_OK.
 */

#ifndef TWOBRIDGE_H_
#define TWOBRIDGE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TWOBRIDGE_BUILDING)
#define TB_API __declspec(dllexport)
#else
#define TB_API __declspec(dllimport)
#endif
#else
#define TB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
  TB_OK = 0,
  TB_ERR_INVALID_ARGUMENT = 1,
  TB_ERR_NOT_COPRIME = 2,
  TB_ERR_OVERFLOW = 3,
  TB_ERR_PARSE = 4,
  TB_ERR_DUPLICATE_ID = 5,
  TB_ERR_MALFORMED_DIAGRAM = 6,
  TB_ERR_CAPACITY = 7,
  TB_ERR_IO = 8,
  TB_ERR_NOT_FOUND = 9,
  TB_ERR_INCONSISTENT = 10,
  TB_ERR_BUFFER_TOO_SMALL = 11,
  TB_ERR_INTERNAL = 12
} tb_status;

/* Longest Conway form any API call produces. */
#define TB_MAX_FORM_LENGTH 32

TB_API const char* tb_version(void);
TB_API const char* tb_status_name(tb_status status);
TB_API const char* tb_last_error(void);

/* ---- Fractions and continued fractions ---------------------------------- */

/* p/q = a1 + 1/(a2 + 1/(... + 1/an)) in lowest terms. */
TB_API tb_status tb_eval_cf(const uint32_t* entries, size_t count, uint64_t* p, uint64_t* q);

/* Regular continued fraction of p/q for p >= q; its entry sum is the
 * crossing number. TB_ERR_BUFFER_TOO_SMALL with `*count` set if `capacity`
 * is too small. */
TB_API tb_status tb_continued_fraction(uint64_t p, uint64_t q, uint32_t* entries,
                                       size_t capacity, size_t* count);

TB_API tb_status tb_mod_inverse(int64_t q, uint64_t p, uint64_t* inverse);

/* {q, q^-1, p-q, (p-q)^-1} mod p, ascending; between 1 and 4 values. */
TB_API tb_status tb_class_members(uint64_t p, uint64_t q, uint64_t members[4], size_t* count);

/* ---- Tabulation ---------------------------------------------------------- */

typedef struct tb_tabulation tb_tabulation;

typedef struct tb_row {
  uint32_t crossing_number;
  uint64_t p;
  uint64_t canonical_q;
  uint64_t members[4];
  size_t member_count;
  size_t raw_count;          /* compositions collapsed into this class */
  int oriented_count;        /* 2 or 4 */
  int mirror_degenerate;     /* q^-1 == p - q */
  uint32_t form[TB_MAX_FORM_LENGTH]; /* chosen Conway form */
  size_t form_length;
  uint64_t form_q;           /* denominator of the chosen form's value */
} tb_row;

/* All link classes with crossing number in [n_min, n_max]; n_min >= 1. */
TB_API tb_status tb_tabulate(uint32_t n_min, uint32_t n_max, tb_tabulation** out);
TB_API size_t tb_tabulation_size(const tb_tabulation* tabulation);
TB_API tb_status tb_tabulation_row(const tb_tabulation* tabulation, size_t index, tb_row* row);
TB_API void tb_tabulation_free(tb_tabulation* tabulation);

/* Number of compositions of n with odd numerator. */
TB_API tb_status tb_knot_candidate_count(uint32_t n, size_t* count);

/* ---- Diagrams and invariants --------------------------------------------- */

typedef struct tb_diagram tb_diagram;

TB_API tb_status tb_diagram_from_conway(const uint32_t* entries, size_t count, tb_diagram** out);
/* "[X(1,4,2,5),...]", optionally prefixed by "PD:". */
TB_API tb_status tb_diagram_from_pd(const char* text, tb_diagram** out);
TB_API void tb_diagram_free(tb_diagram* diagram);

TB_API size_t tb_diagram_crossing_count(const tb_diagram* diagram);
TB_API size_t tb_diagram_component_count(const tb_diagram* diagram);

TB_API tb_status tb_diagram_pd(const tb_diagram* diagram, char* buffer, size_t capacity,
                               size_t* length);
TB_API tb_status tb_diagram_gauss(const tb_diagram* diagram, char* buffer, size_t capacity,
                                  size_t* length);
/* Kauffman bracket as "coef*A^exp+..." by ascending exponent. */
TB_API tb_status tb_diagram_bracket(const tb_diagram* diagram, char* buffer, size_t capacity,
                                    size_t* length);
/* Identification key of a two-component diagram. */
TB_API tb_status tb_diagram_key(const tb_diagram* diagram, char* buffer, size_t capacity,
                                size_t* length);
TB_API tb_status tb_diagram_writhe(const tb_diagram* diagram, int* writhe);
TB_API tb_status tb_diagram_linking_number(const tb_diagram* diagram, int* linking_number);

/* ---- Link tables and identification -------------------------------------- */

typedef struct tb_link_table tb_link_table;

/* The compiled-in table of Thistlethwaite PD codes. */
TB_API tb_status tb_link_table_builtin(tb_link_table** out);
/* Lines "id<TAB>PD:[X(a,b,c,d),...]"; '#' starts a comment line. */
TB_API tb_status tb_link_table_load(const char* path, tb_link_table** out);
TB_API tb_status tb_link_table_parse(const char* text, tb_link_table** out);
TB_API size_t tb_link_table_size(const tb_link_table* table);
TB_API void tb_link_table_free(tb_link_table* table);

typedef struct tb_identification tb_identification;

/* Identifies the class of (p, q) drawn with `crossing_number` crossings.
 * TB_ERR_NOT_FOUND if no member of the class has an expansion of that total. */
TB_API tb_status tb_identify(const tb_link_table* table, uint64_t p, uint64_t q,
                             uint32_t crossing_number, tb_identification** out);
TB_API tb_status tb_identify_row(const tb_link_table* table, const tb_tabulation* tabulation,
                                 size_t index, tb_identification** out);
/* The unique matching id, or NULL when unmatched or ambiguous. */
TB_API const char* tb_identification_id(const tb_identification* identification);
TB_API size_t tb_identification_candidate_count(const tb_identification* identification);
TB_API const char* tb_identification_candidate(const tb_identification* identification,
                                               size_t index);
TB_API void tb_identification_free(tb_identification* identification);

/* ---- Splitting numbers ---------------------------------------------------- */

typedef struct tb_splitting {
  int found;          /* 0: no expansion of this total has the pattern */
  uint32_t sp;
  uint64_t member_q;  /* class member whose expansion matched */
  uint32_t form[TB_MAX_FORM_LENGTH];
  size_t form_length;
} tb_splitting;

TB_API tb_status tb_splitting_number(uint64_t p, uint64_t q, uint32_t crossing_number,
                                     tb_splitting* out);
TB_API tb_status tb_splitting_row(const tb_tabulation* tabulation, size_t index, tb_splitting* out);

/* ---- Published tables and verification ------------------------------------ */

typedef struct tb_fixture tb_fixture;

typedef struct tb_fixture_row {
  uint32_t n;
  uint64_t p;
  uint64_t q;
  const uint32_t* conway;  /* owned by the fixture */
  size_t conway_length;
  const char* id;          /* owned by the fixture; "" when absent */
  int has_sp;
  uint32_t sp;
} tb_fixture_row;

TB_API tb_status tb_fixture_builtin(tb_fixture** out);
/* JSON array of {n, p, q, conway, id, sp?} records, or CSV n,p,q,conway,id,sp. */
TB_API tb_status tb_fixture_load(const char* path, tb_fixture** out);
TB_API size_t tb_fixture_size(const tb_fixture* fixture);
TB_API tb_status tb_fixture_row_at(const tb_fixture* fixture, size_t index, tb_fixture_row* row);
TB_API tb_status tb_fixture_find(const tb_fixture* fixture, const char* id, size_t* index);
TB_API void tb_fixture_free(tb_fixture* fixture);

typedef struct tb_report tb_report;

/* Compares the tabulation with fixture rows of crossing number in
 * [n_min, n_max]. `table` may be NULL to skip the id check. */
TB_API tb_status tb_verify(const tb_tabulation* tabulation, const tb_fixture* fixture,
                           const tb_link_table* table, uint32_t n_min, uint32_t n_max,
                           tb_report** out);
TB_API size_t tb_report_classes_checked(const tb_report* report);
TB_API size_t tb_report_discrepancy_count(const tb_report* report);
TB_API const char* tb_report_discrepancy(const tb_report* report, size_t index);
TB_API const char* tb_report_summary(const tb_report* report);
TB_API void tb_report_free(tb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TWOBRIDGE_H_ */
