/* C interface to the ecdg library. Every object is an opaque handle; every call returns an
   ecdg_status, with details for the calling thread available from ecdg_last_error().
   Strings returned through char** are owned by the caller and released with ecdg_string_free. */
#ifndef ECDG_ECDG_H
#define ECDG_ECDG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ECDG_API __declspec(dllexport)
#else
#define ECDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecdg_status {
    ECDG_OK = 0,
    ECDG_INPUT = 1,        /* malformed arguments or files */
    ECDG_HYPOTHESIS = 2,   /* a colour has a path of its forbidden length */
    ECDG_PRECONDITION = 3, /* e.g. no spanning transitive tournament */
    ECDG_SCALE = 4,        /* exact search refused the instance size */
    ECDG_CERTIFICATE = 5,  /* internal certificate failed */
    ECDG_IO = 6,
    ECDG_INTERNAL = 7
} ecdg_status;

typedef struct ecdg_graph ecdg_graph;
typedef struct ecdg_partition ecdg_partition;
typedef struct ecdg_stability ecdg_stability;

ECDG_API const char* ecdg_last_error(void);
ECDG_API const char* ecdg_status_name(ecdg_status status);
ECDG_API void ecdg_string_free(char* text);

/* Graphs. `ell` strings are comma-separated order vectors such as "2,3". */
ECDG_API ecdg_status ecdg_graph_load(const char* path, ecdg_graph** out);
ECDG_API ecdg_status ecdg_graph_parse(const char* text, ecdg_graph** out);
/* Generator specs: "binary", "cube 2,3", "example4 2,3 chooser=max". */
ECDG_API ecdg_status ecdg_graph_generate(const char* spec, uint32_t n, ecdg_graph** out);
ECDG_API ecdg_status ecdg_graph_save(const ecdg_graph* g, const char* path);
ECDG_API ecdg_status ecdg_graph_edge_list(const ecdg_graph* g, char** text);
ECDG_API void ecdg_graph_free(ecdg_graph* g);
ECDG_API uint32_t ecdg_graph_vertex_count(const ecdg_graph* g);
ECDG_API uint32_t ecdg_graph_colour_count(const ecdg_graph* g);
ECDG_API ecdg_status ecdg_graph_colour_of(const ecdg_graph* g, uint32_t u, uint32_t v, uint32_t* colour);
ECDG_API ecdg_status ecdg_graph_set_colour(ecdg_graph* g, uint32_t u, uint32_t v, uint32_t colour);

/* Lexicographically least path of exactly `length` edges in `colour`. *found is 0 when there
   is none; otherwise its vertices go to `vertices` (capacity `capacity`) and the count to *count. */
ECDG_API ecdg_status ecdg_mono_path(const ecdg_graph* g, uint32_t colour, size_t length, int* found,
                                    uint32_t* vertices, size_t capacity, size_t* count);
/* Exact longest path length in `colour`; refuses n above `cap` (at most 24). */
ECDG_API ecdg_status ecdg_longest_mono_path(const ecdg_graph* g, uint32_t colour, uint32_t cap, size_t* length);

/* Violation counts of the per-edge invariants. */
ECDG_API ecdg_status ecdg_verify_bit_reversal(const ecdg_graph* g, int k, size_t* violations);
ECDG_API ecdg_status ecdg_verify_lex(const ecdg_graph* g, const char* ell, size_t* violations);
/* Path bounds for every colour plus lex monotonicity against the round-robin cube partition.
   *violations counts paths found plus lex violations. */
ECDG_API ecdg_status ecdg_verify_report(const ecdg_graph* g, const char* ell, size_t* violations, char** text);

/* Partition into clique-colour classes. */
ECDG_API ecdg_status ecdg_partition_compute(const ecdg_graph* g, const char* ell, ecdg_partition** out);
ECDG_API void ecdg_partition_free(ecdg_partition* p);
ECDG_API size_t ecdg_partition_class_count(const ecdg_partition* p);
/* Members of class `index`, ascending; *count receives the class size even when it exceeds
   `capacity`. */
ECDG_API ecdg_status ecdg_partition_members(const ecdg_partition* p, size_t index, uint32_t* members,
                                            size_t capacity, size_t* count);
ECDG_API ecdg_status ecdg_partition_render(const ecdg_partition* p, char** text);
ECDG_API ecdg_status ecdg_pathcover_render(const ecdg_partition* p, char** text);
ECDG_API ecdg_status ecdg_density_render(const ecdg_partition* p, uint32_t n, int csv, char** text);

/* Longest-path layering of the subgraph of the listed colours ("1,2"; empty means all). */
ECDG_API ecdg_status ecdg_ghrv_render(const ecdg_graph* g, const char* colours, char** text);
/* Spanning transitive tournament inside the subgraph of the listed colours. *exists is 0 and
   the text names a complement cycle when there is none. */
ECDG_API ecdg_status ecdg_tournament_render(const ecdg_graph* g, const char* colours, int* exists, char** text);

/* Stability reconstruction. */
ECDG_API ecdg_status ecdg_stability_compute(const ecdg_graph* g, const char* ell, size_t threshold,
                                            ecdg_stability** out);
ECDG_API void ecdg_stability_free(ecdg_stability* s);
ECDG_API int ecdg_stability_reconstructed(const ecdg_stability* s);
ECDG_API int ecdg_stability_clean(const ecdg_stability* s);
ECDG_API int ecdg_stability_observations_pass(const ecdg_stability* s);
ECDG_API size_t ecdg_stability_deleted_count(const ecdg_stability* s);
ECDG_API size_t ecdg_stability_violation_count(const ecdg_stability* s);
ECDG_API ecdg_status ecdg_stability_render(const ecdg_stability* s, int csv, char** text);

/* DOT text. `colour` 0 means every colour; `slide_ell` NULL or "" disables the slide filter;
   `max_n` 0 keeps the default limit of 200 vertices. */
ECDG_API ecdg_status ecdg_export_dot(const ecdg_graph* g, uint32_t colour, const char* slide_ell,
                                     uint32_t max_n, char** text);

#ifdef __cplusplus
}
#endif

#endif
