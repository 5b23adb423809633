/* Copyright 2026 The Pentaform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the pentaform shared library.
 *
 * Documents (quintuple sets, pentaform games, gm games) are opaque handles
 * created from canonical JSON and freed with pf_document_free. Operations
 * return PF_OK or an error code; pf_last_error() describes the most recent
 * failure on the calling thread. Strings returned through out-parameters
 * are owned by the caller and released with pf_string_free.
 *
 * Structured results (axiom reports, recall reports, round-trip reports,
 * component summaries) are JSON text; documents produced by operations are
 * new handles.
 */

#ifndef PENTAFORM_PENTAFORM_H_
#define PENTAFORM_PENTAFORM_H_

#include <stddef.h>

#if defined(_WIN32)
#define PENTAFORM_API __declspec(dllexport)
#else
#define PENTAFORM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pf_document pf_document;

typedef enum pf_status {
  PF_OK = 0,
  /* Bad argument to an API call (wrong document kind, bad coords, ...). */
  PF_ERR_INVALID_ARGUMENT = 1,
  /* Malformed or non-conforming JSON input. */
  PF_ERR_SCHEMA = 2,
  /* File could not be read or written. */
  PF_ERR_IO = 3,
  /* A named node, situation, or successor does not exist. */
  PF_ERR_UNKNOWN_KEY = 4,
  /* The relation lacks the axioms the operation needs. */
  PF_ERR_AXIOM = 5,
  /* A semantic precondition failed (separation, subroot, chain order, ...). */
  PF_ERR_PRECONDITION = 6,
  PF_ERR_INTERNAL = 7
} pf_status;

typedef enum pf_document_kind {
  PF_DOC_QUINTUPLE_SET = 0,
  PF_DOC_PENTAFORM_GAME = 1,
  PF_DOC_GM_GAME = 2
} pf_document_kind;

/* Message for the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next API call on the same thread. */
PENTAFORM_API const char* pf_last_error(void);

PENTAFORM_API void pf_string_free(char* s);
PENTAFORM_API void pf_document_free(pf_document* doc);

/* Parses canonical-format JSON. */
PENTAFORM_API pf_status pf_document_parse(const char* bytes,
                                          pf_document** out);
PENTAFORM_API pf_status pf_document_read_file(const char* path,
                                              pf_document** out);
/* Canonical bytes: stable across calls and equal for equal structures. */
PENTAFORM_API pf_status pf_document_serialize(const pf_document* doc,
                                              char** out_json);
PENTAFORM_API pf_status pf_document_write_file(const pf_document* doc,
                                               const char* path);
PENTAFORM_API pf_status pf_document_kind_of(const pf_document* doc,
                                            pf_document_kind* out);
/* Newline-separated parser warnings (may be empty). */
PENTAFORM_API pf_status pf_document_warnings(const pf_document* doc,
                                             char** out_text);

/* Axiom report for relation documents, condition report for gm games:
 * {"axioms":[{"axiom":...,"status":"pass"|"fail",...}],
 *  "is_pentaform":..., "is_block":...}. */
PENTAFORM_API pf_status pf_validate(const pf_document* doc,
                                    char** report_json);

/* Component sets, root, start/end nodes, information sets, feasibility. */
PENTAFORM_API pf_status pf_info(const pf_document* doc, char** info_json);

/* The slice of the relation at a situation. `situation` is an atom, or
 * JSON {"set": [...]} / ["..."] for node-set situations. */
PENTAFORM_API pf_status pf_slice(const pf_document* doc,
                                 const char* situation, pf_document** out);

/* Projection onto a coordinate string such as "JI" or "WAY":
 * {"coords":..., "tuples":[[...], ...]}. */
PENTAFORM_API pf_status pf_project(const pf_document* doc, const char* coords,
                                   char** relation_json);

/* Graphviz text for the relation's tree. */
PENTAFORM_API pf_status pf_export_dot(const pf_document* doc,
                                      char** dot_text);

/* Converts between the two game forms; target is "gm" or "pentaform". */
PENTAFORM_API pf_status pf_convert(const pf_document* doc, const char* target,
                                   pf_document** out);

/* Round-trip report. Gm games: {"direction":"gm","identity":...,
 * "equalities":[{"name":...,"holds":...} x16]}. Pentaform games:
 * {"direction":"pentaform","identity":...,"rewritten":...,"detail":...}. */
PENTAFORM_API pf_status pf_roundtrip(const pf_document* doc,
                                     char** report_json);

/* {"subroots":[...]} for a pentaform relation. */
PENTAFORM_API pf_status pf_subroots(const pf_document* doc, char** json);

/* The subgame rooted at a decision node that is a subroot. */
PENTAFORM_API pf_status pf_subgame(const pf_document* doc, const char* node,
                                   pf_document** out);

/* Union of relations. mode "pair" (two weakly separated blocks), "family"
 * (strongly separated blocks), or "chain" (nested pentaforms, one root).
 * summary_json reports start/end nodes (pair/family) or the root (chain). */
PENTAFORM_API pf_status pf_union(const pf_document* const* docs, size_t count,
                                 const char* mode, pf_document** out,
                                 char** summary_json);

/* {"perfect_recall":{"ok":...,"witness":...},
 *  "no_absentmindedness":{"ok":...,"witness":...}}. */
PENTAFORM_API pf_status pf_recall(const pf_document* doc, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* PENTAFORM_PENTAFORM_H_ */
