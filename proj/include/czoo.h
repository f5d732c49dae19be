/* czoo — graph centrality toolkit, C interface.
 *
 * All functions return a czoo_status (0 on success); on failure the
 * thread-local message/reason pair describes what went wrong. Objects are
 * opaque handles owned by the caller and released with the matching _free.
 */
#ifndef CZOO_H
#define CZOO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct czoo_graph_s czoo_graph;
typedef struct czoo_result_s czoo_result;

typedef enum czoo_status {
    CZOO_OK = 0,
    CZOO_ERR_USAGE = 1,       /* bad arguments, unknown measure or parameter */
    CZOO_ERR_REQUIREMENT = 2, /* graph violates a measure's requirements */
    CZOO_ERR_CONVERGENCE = 3, /* iterative solver failed */
    CZOO_ERR_IO = 4           /* file access or parse failure */
} czoo_status;

typedef enum czoo_result_kind {
    CZOO_RESULT_SCORES = 0,
    CZOO_RESULT_SEEDSET = 1,
    CZOO_RESULT_DECOMPOSITION = 2
} czoo_result_kind;

typedef enum czoo_entry_state {
    CZOO_ENTRY_DEFINED = 0,
    CZOO_ENTRY_UNDEFINED = 1,
    CZOO_ENTRY_NEG_INFINITY = 2 /* removal disconnects the graph */
} czoo_entry_state;

typedef enum czoo_format { CZOO_FORMAT_CSV = 0, CZOO_FORMAT_JSON = 1 } czoo_format;

typedef struct czoo_load_options {
    int directed;       /* treat edges as directed */
    int weighted;       /* read the third column as weight */
    int invert_weights; /* weights are strengths: store 1/w as cost */
    int strict_loops;   /* reject self-loops instead of dropping them */
} czoo_load_options;

/* ---- library ---- */
const char* czoo_version(void);

/* Thread-local last error (valid until the next failing call). */
const char* czoo_last_error_message(void);
/* Machine-readable token, e.g. "requires-connected". */
const char* czoo_last_error_reason(void);

/* ---- graphs ---- */
czoo_status czoo_graph_load(const char* path, const czoo_load_options* options,
                            czoo_graph** out);
czoo_status czoo_graph_parse(const char* edge_list_text, const czoo_load_options* options,
                             czoo_graph** out);
void czoo_graph_free(czoo_graph* graph);

int64_t czoo_graph_node_count(const czoo_graph* graph);
int64_t czoo_graph_edge_count(const czoo_graph* graph);
int czoo_graph_directed(const czoo_graph* graph);
/* Label of a node id (first-appearance order); NULL when out of range. */
const char* czoo_graph_label(const czoo_graph* graph, int64_t node);
int czoo_graph_warning_count(const czoo_graph* graph);
const char* czoo_graph_warning(const czoo_graph* graph, int index);

/* ---- measure registry ---- */
int64_t czoo_measure_count(void);
/* Accessors by registry index (alphabetical); NULL / -1 out of range. */
const char* czoo_measure_name(int64_t index);
const char* czoo_measure_title(int64_t index);
int czoo_measure_kind(int64_t index);
/* Comma-joined lists; empty string when none. */
const char* czoo_measure_aliases(int64_t index);
const char* czoo_measure_requirements(int64_t index);
/* One line per parameter: "name:type:default:description"; empty when none. */
const char* czoo_measure_params(int64_t index);
/* Resolve a canonical name or alias to a registry index; -1 when unknown. */
int64_t czoo_measure_find(const char* name_or_alias);

/* ---- computation ---- */
/* params is a comma-separated "k=v" list; NULL or "" for defaults. */
czoo_status czoo_compute(const czoo_graph* graph, const char* measure, const char* params,
                         czoo_result** out);

int czoo_result_kind_of(const czoo_result* result);
int64_t czoo_result_size(const czoo_result* result);
/* Scores: value at node i. Seed sets: election score at rank i.
 * Decompositions: core index of node i. */
double czoo_result_value(const czoo_result* result, int64_t i);
int czoo_result_state(const czoo_result* result, int64_t i);
/* Seed sets: elected node at rank i; other kinds: i itself. */
int64_t czoo_result_node(const czoo_result* result, int64_t i);
/* Decompositions: onion layer of node i; other kinds: 0. */
int64_t czoo_result_layer(const czoo_result* result, int64_t i);
int czoo_result_warning_count(const czoo_result* result);
const char* czoo_result_warning(const czoo_result* result, int index);

/* Serialized output; free with czoo_string_free. */
czoo_status czoo_result_render(const czoo_result* result, const czoo_graph* graph,
                               czoo_format format, char** out);
czoo_status czoo_result_write(const czoo_result* result, const czoo_graph* graph,
                              const char* path, czoo_format format);
void czoo_result_free(czoo_result* result);
void czoo_string_free(char* text);

/* ---- rank comparison ---- */
/* Kendall tau-b over nodes defined in both measures. */
czoo_status czoo_compare(const czoo_graph* graph, const char* measure_a, const char* params_a,
                         const char* measure_b, const char* params_b, double* tau_out,
                         int64_t* n_out);

#ifdef __cplusplus
}
#endif

#endif /* CZOO_H */
