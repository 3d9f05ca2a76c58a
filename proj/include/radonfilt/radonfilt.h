/*
 * radonfilt C API
 *
 * Exact-arithmetic construction and verification of the generalized Radon
 * filtrations on the subset lattice (symmetric group) and the subspace
 * lattice over F_q (finite general linear group).
 *
 * All computation runs behind opaque task handles. Typical use:
 *
 *   rf_task *t = rf_task_new("decompose");
 *   rf_task_set(t, "family", "subset");
 *   rf_task_set(t, "n", "6");
 *   rf_task_set(t, "s", "3");
 *   int rc = rf_task_run(t);             // 0 ok, 1 usage, 2 inconsistency
 *   puts(rf_task_output(t));             // JSON or CSV report
 *   rf_task_free(t);
 */
#ifndef RADONFILT_H
#define RADONFILT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef RF_API
#define RF_API __attribute__((visibility("default")))
#endif

#define RF_OK 0
#define RF_ERR_USAGE 1         /* invalid parameters */
#define RF_ERR_INCONSISTENT 2  /* a mathematical check failed */

typedef struct rf_task rf_task;

/* command: "decompose" | "spherical" | "verify" | "count". NULL on OOM or
 * unknown command (the command is validated at run time too). */
RF_API rf_task *rf_task_new(const char *command);
RF_API void rf_task_free(rf_task *t);

/* Configuration keys: "family" (subset|subspace), "n", "s", "q",
 * "format" (json|csv), "check", "jobs", "max-level-points".
 * Returns RF_OK or RF_ERR_USAGE. */
RF_API int rf_task_set(rf_task *t, const char *key, const char *value);

/* Runs the task; returns RF_OK, RF_ERR_USAGE or RF_ERR_INCONSISTENT. */
RF_API int rf_task_run(rf_task *t);

/* Report text (empty before a successful run). Owned by the task. */
RF_API const char *rf_task_output(const rf_task *t);

/* Error message of the last run, or "" when none. Owned by the task. */
RF_API const char *rf_task_error(const rf_task *t);

/* Scalar helpers. Each writes the decimal value into buf (NUL-terminated)
 * and returns the number of characters required (excluding the NUL), or -1
 * for invalid arguments. A return value >= len means the buffer was too
 * small and buf holds a truncated result. */
RF_API int rf_binomial(long n, long m, char *buf, size_t len);
RF_API int rf_q_integer(long n, long q, char *buf, size_t len);
RF_API int rf_gaussian_binomial(long n, long m, long q, char *buf, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* RADONFILT_H */
