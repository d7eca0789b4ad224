/* C interface to the word-equation toolkit. All handles are opaque; every
 * function returning wq_status leaves a message for wq_last_error() on
 * failure. Strings returned through char** must be released with
 * wq_string_free. */
#ifndef WORDEQ_WORDEQ_H
#define WORDEQ_WORDEQ_H

#include <stddef.h>

#if defined(_WIN32)
#define WQ_API __declspec(dllexport)
#else
#define WQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wq_status {
  WQ_OK = 0,
  WQ_ERR_PARSE = 1,
  WQ_ERR_IO = 2,
  WQ_ERR_INVALID_ARGUMENT = 3,
  WQ_ERR_RESOURCE = 4,
  WQ_ERR_INTERNAL = 5
} wq_status;

typedef enum wq_verdict_kind { WQ_SAT = 0, WQ_UNSAT = 1, WQ_UNSUPPORTED = 2 } wq_verdict_kind;

typedef struct wq_problem wq_problem;
typedef struct wq_verdict wq_verdict;

WQ_API const char* wq_version(void);
/* Message of the last failure on the calling thread; empty if none. */
WQ_API const char* wq_last_error(void);

WQ_API wq_status wq_problem_parse(const char* text, size_t len, wq_problem** out);
WQ_API void wq_problem_free(wq_problem* p);
/* 1 when the problem contains (get-model). */
WQ_API int wq_problem_wants_model(const wq_problem* p);

WQ_API wq_status wq_solve(const wq_problem* p, wq_verdict** out);
/* Bounded exhaustive search. Sat iff a model exists within the bounds;
 * otherwise the verdict is unsat (meaning: none up to the bounds). */
WQ_API wq_status wq_oracle(const wq_problem* p, size_t max_len, long long max_int, wq_verdict** out);

WQ_API wq_verdict_kind wq_verdict_kind_of(const wq_verdict* v);
/* Reason text for unsupported verdicts, empty otherwise. */
WQ_API const char* wq_verdict_reason(const wq_verdict* v);
WQ_API size_t wq_verdict_model_size(const wq_verdict* v);
/* i-th model entry as a (define-fun ...) line; NULL when out of range. */
WQ_API const char* wq_verdict_model_entry(const wq_verdict* v, size_t i);
WQ_API void wq_verdict_free(wq_verdict* v);

/* Solved-form statistics over files and directories. */
WQ_API wq_status wq_analyze(const char* const* paths, size_t n, int tsv, char** out);

/* Sentence for a machine description and input word; with check_bound > 0
 * also runs the bounded validity check and sets *found to 1 when a
 * counterexample exists (it is then reported in the output text). */
WQ_API wq_status wq_encode_2cm(const char* machine_text, const char* input, long check_bound, char** out,
                               int* found);

WQ_API void wq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
