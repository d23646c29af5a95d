/* C interface to the remlab core.
 *
 * Graphs are opaque handles. Every operation takes its parameters as a JSON
 * object (NULL or "" selects the defaults) and returns its result as a JSON
 * text handle. Functions return RL_OK or an error status; the message for the
 * most recent failure on the calling thread is available from rl_last_error().
 * Every handle returned through an out parameter is owned by the caller.
 *
 * Each options object accepts "budget" (node expansions); without it the
 * limit comes from REMOVAL_LAB_BUDGET or the built-in default. Unknown keys
 * are rejected. Results that carry audits have an "audit" member of the form
 * {"passed": bool, "failures": [string, ...]}.
 */
#ifndef REMLAB_REMLAB_H
#define REMLAB_REMLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RL_API __attribute__((visibility("default")))
#else
#define RL_API
#endif

typedef enum rl_status {
    RL_OK = 0,
    RL_INVALID_ARGUMENT = 1,
    RL_PRECONDITION_FAILED = 2,
    RL_BUDGET_EXCEEDED = 3,
    RL_IO_ERROR = 4,
    RL_INTERNAL_ERROR = 5
} rl_status;

typedef struct rl_graph rl_graph;
typedef struct rl_text rl_text;

RL_API const char * rl_version(void);
RL_API const char * rl_status_name(rl_status status);
/* Message of the last failed call on this thread; "" after a success. */
RL_API const char * rl_last_error(void);

/* Graphs. edges holds m pairs (2m entries), 0-indexed. */
RL_API rl_status rl_graph_new(size_t n, const uint32_t * edges, size_t m, rl_graph ** out);
/* Edge-list text: "n m" then m lines "u v". */
RL_API rl_status rl_graph_parse(const char * text, rl_graph ** out);
RL_API rl_status rl_graph_read(const char * path, rl_graph ** out);
RL_API rl_status rl_graph_write(const rl_graph * g, const char * path);
RL_API rl_status rl_graph_text(const rl_graph * g, rl_text ** out);
RL_API size_t rl_graph_order(const rl_graph * g);
RL_API size_t rl_graph_size(const rl_graph * g);
RL_API void rl_graph_free(rl_graph * g);

RL_API const char * rl_text_data(const rl_text * t);
RL_API size_t rl_text_size(const rl_text * t);
RL_API void rl_text_free(rl_text * t);

/* Sidecar files. Copies: JSON array of arrays. Partitions: JSON object
 * {"parts": [names], "part_of": [part index per vertex]}. */
RL_API rl_status rl_copies_read(const char * path, rl_text ** out);
RL_API rl_status rl_copies_write(const char * path, const char * copies_json);
RL_API rl_status rl_partition_read(const char * path, size_t n, rl_text ** out);
RL_API rl_status rl_partition_write(const char * path, const char * partition_json);

/* Order, size, minimum degree, odd girth, bipartiteness, chi, critical edges. */
RL_API rl_status rl_analyze(const rl_graph * g, const char * options, rl_text ** out);

/* Options: none. Result: {"status": "found" | "none", "map": [...]}.
 * Budget exhaustion is RL_BUDGET_EXCEEDED. */
RL_API rl_status rl_hom(const rl_graph * h, const rl_graph * f, const char * options, rl_text ** out);

/* Minimal homomorphic images, each with a witness. */
RL_API rl_status rl_images(const rl_graph * h, const char * options, rl_text ** out);

/* Options: "parts" (array of vertex arrays, one per pattern vertex, or per
 * class with "blowup"), "anchor" [x, y, a, b], "blowup" [s_1, ..., s_h]. */
RL_API rl_status rl_count(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out);

/* Options: "seed" (shuffles the root order when present). */
RL_API rl_status rl_pack(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out);

/* Options: "copies" (odd cycles of one length, required), "k" (required),
 * "seed", "draws", "max_cycles". */
RL_API rl_status rl_boost(const rl_graph * g, const char * options, rl_text ** out);

/* Options: "kind" (turan, rs_gadget, lemma7, thm9), "n", "k", "r", "m",
 * "parts", "set_bound", "alpha", "eps", "seed", "no_critical_edge" (thm9).
 * The graph is returned separately. */
RL_API rl_status rl_construct(const char * options, rl_graph ** graph, rl_text ** out);

/* Options: "edge" [x, y] (default: first critical edge), "mode" (auto,
 * triangle, cycle), "k". */
RL_API rl_status rl_decompose(const rl_graph * h, const char * options, rl_text ** out);

/* Options: "k", "alpha", "seed", "refine" (bool). G' is returned separately
 * when g_prime is not NULL. */
RL_API rl_status rl_cleanup(const rl_graph * g, const char * options, rl_graph ** g_prime, rl_text ** out);

/* Options: "alpha", "seed", "max_anchors", "samples_per_anchor". */
RL_API rl_status rl_pipeline(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out);

/* Options: "q", "trials", "seed", "trial_budget". */
RL_API rl_status rl_test_hom(const rl_graph * g, const rl_graph * f, const char * options, rl_text ** out);

/* Edit-distance bounds towards "maps to F". */
RL_API rl_status rl_certify_far(const rl_graph * g, const rl_graph * f, const char * options, rl_text ** out);

/* Options: "family" (lemma7, thm9, thm9-general), "gamma", "sweep" (array),
 * "n", "k", "r", "seed". Result rows plus "csv" and power-law fits. */
RL_API rl_status rl_estimate(const rl_graph * h, const char * options, rl_text ** out);

/* Writes the standard corpus into dir; the result is the manifest. */
RL_API rl_status rl_corpus_generate(const char * dir, uint64_t seed, rl_text ** out);

#ifdef __cplusplus
}
#endif

#endif
