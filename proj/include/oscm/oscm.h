/*
 * oscm — one-sided crossing minimization solvers.
 *
 * C interface to the solver library: opaque handles, status-code returns,
 * and a thread-local message for the last failing call. Every handle
 * returned by an oscm_* constructor is owned by the caller and released
 * with the matching *_free function.
 */
#ifndef OSCM_H
#define OSCM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OSCM_API __declspec(dllexport)
#else
#define OSCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as CLI exit codes for the documented taxonomy
 * (0 ok, 2 parse, 3 capacity, 4 not-found, 5 invalid-solution). */
typedef enum oscm_status {
    OSCM_OK = 0,
    OSCM_ERROR = 1,
    OSCM_ERR_PARSE = 2,
    OSCM_ERR_CAPACITY = 3,
    OSCM_ERR_NOT_FOUND = 4,
    OSCM_ERR_INVALID_SOLUTION = 5,
    OSCM_ERR_IO = 6,
    OSCM_ERR_TIMEOUT = 7,
    OSCM_ERR_INVALID_ARGUMENT = 8
} oscm_status;

typedef enum oscm_algorithm {
    OSCM_ALGO_AUTO = 0,
    OSCM_ALGO_SLOW_DP = 1,
    OSCM_ALGO_FAST_DP = 2,
    OSCM_ALGO_MITM_DP = 3,
    OSCM_ALGO_GOLDEN = 4,
    OSCM_ALGO_SUBEXPO = 5,
    OSCM_ALGO_BRUTE = 6
} oscm_algorithm;

typedef struct oscm_instance oscm_instance;
typedef struct oscm_result oscm_result;
typedef struct oscm_profile oscm_profile;

OSCM_API const char *oscm_version(void);

/* Message for the most recent failing call on this thread; empty string when
 * no failure happened yet. */
OSCM_API const char *oscm_last_error(void);

/* ---- instances ------------------------------------------------------- */

OSCM_API oscm_status oscm_instance_parse(const char *text, size_t len, oscm_instance **out);
OSCM_API oscm_status oscm_instance_read_file(const char *path, oscm_instance **out);
OSCM_API oscm_status oscm_instance_generate(uint32_t n_free, uint32_t n_fixed,
                                            double edge_probability, uint64_t seed,
                                            oscm_instance **out);
OSCM_API void oscm_instance_free(oscm_instance *inst);

OSCM_API uint32_t oscm_instance_n_free(const oscm_instance *inst);
OSCM_API uint32_t oscm_instance_n_fixed(const oscm_instance *inst);
OSCM_API uint64_t oscm_instance_edge_count(const oscm_instance *inst);

/* Serialized PACE text; release with oscm_text_free. */
OSCM_API oscm_status oscm_instance_serialize(const oscm_instance *inst, char **out_text);
OSCM_API void oscm_text_free(char *text);

/* ---- solving --------------------------------------------------------- */

typedef struct oscm_solve_options {
    oscm_algorithm algorithm;
    uint32_t threads;       /* >= 1 */
    uint64_t max_k;         /* golden k-doubling cap */
    uint32_t width_cap;     /* subexpo window cap */
    uint64_t memory_budget; /* bytes; 0 = 75% of detected RAM */
    uint32_t brute_cap;     /* brute-force n_free cap */
    double timeout_seconds; /* 0 = none */
} oscm_solve_options;

OSCM_API void oscm_solve_options_init(oscm_solve_options *opts);

OSCM_API oscm_status oscm_solve(const oscm_instance *inst, const oscm_solve_options *opts,
                                oscm_result **out);
OSCM_API void oscm_result_free(oscm_result *result);

OSCM_API uint64_t oscm_result_crossings(const oscm_result *result);
OSCM_API uint32_t oscm_result_size(const oscm_result *result);
/* Copies the order (0-based free-vertex indices) into the caller's buffer. */
OSCM_API oscm_status oscm_result_order(const oscm_result *result, uint32_t *buffer,
                                       size_t buffer_len);
/* PACE solution lines (original 1-based ids); release with oscm_text_free. */
OSCM_API oscm_status oscm_result_solution_text(const oscm_instance *inst,
                                               const oscm_result *result, char **out_text);

/* ---- verification ---------------------------------------------------- */

/* Crossing count of an explicit order of 0-based free-vertex indices. */
OSCM_API oscm_status oscm_count_crossings(const oscm_instance *inst, const uint32_t *order,
                                          size_t len, uint64_t *out);
/* Crossing count of a PACE solution file (original 1-based ids). */
OSCM_API oscm_status oscm_verify_solution_text(const oscm_instance *inst, const char *text,
                                               size_t len, uint64_t *out);

/* ---- interval characterization --------------------------------------- */

OSCM_API oscm_status oscm_characterize(const oscm_instance *inst, oscm_profile **out);
OSCM_API void oscm_profile_free(oscm_profile *profile);

OSCM_API uint32_t oscm_profile_max_width(const oscm_profile *profile);
/* Number of sweep positions (two per free vertex with at least one edge). */
OSCM_API uint32_t oscm_profile_positions(const oscm_profile *profile);
OSCM_API uint32_t oscm_profile_width_at(const oscm_profile *profile, uint32_t t);
/* Number of sweep positions where the active window has exactly `width`
 * vertices. */
OSCM_API uint64_t oscm_profile_width_count(const oscm_profile *profile, uint32_t width);

/* ---- benchmarking ----------------------------------------------------- */

/* Runs the benchmark described by a JSON config file and writes the report
 * it names. output_override / format_override (NULL = keep the config's
 * values) redirect the report; progress lines go to stderr when verbose is
 * nonzero. */
OSCM_API oscm_status oscm_bench_run(const char *config_path, const char *output_override,
                                    const char *format_override, int verbose);

#ifdef __cplusplus
}
#endif

#endif /* OSCM_H */
