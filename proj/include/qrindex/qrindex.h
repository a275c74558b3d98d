// Copyright 2026 The qrindex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the quadratic-residue indexing library.
 *
 * All big integers cross the boundary as NUL-terminated decimal strings.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with qri_string_free. Every function returns a qri_status; on
 * failure, qri_last_error() describes the problem for the calling thread.
 *
 * Handles are opaque. A qri_modulus is immutable and may be shared between
 * threads; a qri_bit_source must be used by one thread at a time. */

#ifndef QRINDEX_QRINDEX_H_
#define QRINDEX_QRINDEX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define QRI_API __declspec(dllexport)
#else
#  define QRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qri_status {
  QRI_OK = 0,
  QRI_ERR_UNDEFINED_GCD = 1,
  QRI_ERR_INVALID_MODULUS = 2,
  QRI_ERR_NO_INVERSE = 3,
  QRI_ERR_NOT_COPRIME = 4,
  QRI_ERR_NOT_A_RESIDUE = 5,
  QRI_ERR_PRECONDITION = 6,
  QRI_ERR_INDEX_OUT_OF_RANGE = 7,
  QRI_ERR_SYNTAX = 8,
  QRI_ERR_COMPOSITE_CLAIMED_PRIME = 9,
  QRI_ERR_REPEATED_PRIME = 10,
  QRI_ERR_PRODUCT_TOO_SMALL = 11,
  QRI_ERR_ZERO_EXPONENT = 12,
  QRI_ERR_ORACLE_CAP_EXCEEDED = 13,
  QRI_ERR_BIT_SOURCE_EXHAUSTED = 14,
  QRI_ERR_REJECTION_LIMIT = 15,
  QRI_ERR_INVALID_ARGUMENT = 16, /* null handle or pointer, unknown enum */
  QRI_ERR_INTERNAL = 17
} qri_status;

typedef enum qri_method {
  QRI_METHOD_INDEX = 0,
  QRI_METHOD_CLASSICAL = 1
} qri_method;

typedef struct qri_modulus qri_modulus;
typedef struct qri_bit_source qri_bit_source;

typedef struct qri_ledger {
  uint64_t bits_consumed;
  uint64_t attempts;   /* rejection rounds of the uniform draw */
  uint64_t candidates; /* classical method: x values tried */
} qri_ledger;

typedef struct qri_sample_report {
  qri_method method;
  uint64_t samples;
  uint64_t total_bits;
  uint64_t total_attempts;
  uint64_t total_candidates;
  double mean_bits_per_sample;
  double mean_attempts_per_sample;
  double mean_candidates_per_sample;
  double theoretical_floor; /* log2 of the index-space size */
} qri_sample_report;

typedef struct qri_selftest_summary {
  uint64_t moduli_checked;
  uint64_t indices_checked;
  uint64_t failures;
  uint64_t first_failing_n; /* 0 when nothing failed */
} qri_selftest_summary;

/* Stable identifier such as "not-a-residue"; "ok" for QRI_OK. */
QRI_API const char* qri_status_name(qri_status status);

/* Message for the most recent failure on this thread ("" if none). */
QRI_API const char* qri_last_error(void);

QRI_API void qri_string_free(char* s);

/* Factorization text, e.g. "2^4 * 3 * 5^2". */
QRI_API qri_status qri_modulus_parse(const char* text, qri_modulus** out);
QRI_API void qri_modulus_free(qri_modulus* m);

QRI_API qri_status qri_modulus_n(const qri_modulus* m, char** out);
QRI_API qri_status qri_modulus_phi(const qri_modulus* m, char** out);
/* Canonical factorization text. */
QRI_API qri_status qri_modulus_text(const qri_modulus* m, char** out);
/* Radices separated by single spaces, least significant first. */
QRI_API qri_status qri_radix_schedule(const qri_modulus* m, char** out);

QRI_API qri_status qri_index_space_size(const qri_modulus* m, char** out);
QRI_API qri_status qri_decode(const qri_modulus* m, const char* index,
                              char** residue);
QRI_API qri_status qri_encode(const qri_modulus* m, const char* residue,
                              char** index);
QRI_API qri_status qri_is_quadratic_residue(const qri_modulus* m,
                                            const char* z, int* out);

/* Seeded sources use std::mt19937_64(seed), bits taken least significant
 * first from each 64-bit output. Scripted sources replay '0'/'1' text. */
QRI_API qri_status qri_bit_source_new_seeded(uint64_t seed,
                                             qri_bit_source** out);
QRI_API qri_status qri_bit_source_new_os(qri_bit_source** out);
QRI_API qri_status qri_bit_source_new_scripted(const char* bits,
                                               qri_bit_source** out);
QRI_API void qri_bit_source_free(qri_bit_source* src);

/* One uniform quadratic residue. ledger may be NULL. */
QRI_API qri_status qri_sample(const qri_modulus* m, qri_bit_source* src,
                              qri_method method, char** residue,
                              qri_ledger* ledger);

/* Index method on seed, classical method on seed + 1. */
QRI_API qri_status qri_compare_bit_budgets(const qri_modulus* m,
                                           uint64_t n_samples, uint64_t seed,
                                           qri_sample_report* index_report,
                                           qri_sample_report* classical_report);

/* Brute-force certification of every N in [2, max_n]. detail (may be NULL)
 * receives the first violation found, or "" when all passed. */
QRI_API qri_status qri_selftest(uint64_t max_n, qri_selftest_summary* summary,
                                char** detail);

#ifdef __cplusplus
}
#endif

#endif /* QRINDEX_QRINDEX_H_ */
