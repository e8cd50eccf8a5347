#ifndef EVGI_H
#define EVGI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum evgi_status
{
  EVGI_OK = 0,
  EVGI_INVALID_ARGUMENT = 1,
  EVGI_PARSE_ERROR = 2,
  EVGI_CAP_EXCEEDED = 3,
  EVGI_TOLERANCE_ERROR = 4,
  EVGI_INTERNAL_ERROR = 5
} evgi_status;

typedef enum evgi_format
{
  EVGI_FORMAT_AUTO = 0,
  EVGI_FORMAT_EDGE_LIST = 1,
  EVGI_FORMAT_GRAPH6 = 2
} evgi_format;

typedef struct evgi_graph evgi_graph;
typedef struct evgi_spectrum evgi_spectrum;
typedef struct evgi_aut evgi_aut;
typedef struct evgi_iso evgi_iso;

/* Zero eigen/sweep tolerances select the size-dependent defaults. */
typedef struct evgi_options
{
  double tol_eig;
  double tol_sweep;
  double tol_point;
  double tol_gram;
  uint64_t cap;
} evgi_options;

void evgi_options_init(evgi_options *opt);

/* Message of the last failing call on this thread, "" if none. */
const char *evgi_last_error(void);

const char *evgi_status_name(evgi_status status);

/* Strings returned as char* are owned by the caller. */
void evgi_string_free(char *s);

/* Graphs. Vertices are 0-based here; text formats are 1-based. */
evgi_status evgi_graph_create(size_t n, evgi_graph **out);
evgi_status evgi_graph_add_edge(evgi_graph *g, size_t u, size_t v);
evgi_status evgi_graph_parse(const char *text, evgi_format format, evgi_graph **out);
evgi_status evgi_graph_relabel(const evgi_graph *g, const uint32_t *images, evgi_graph **out);
size_t evgi_graph_vertex_count(const evgi_graph *g);
size_t evgi_graph_edge_count(const evgi_graph *g);
/* 1 when both graphs have the same vertex count and edge set. */
int evgi_graph_equal(const evgi_graph *a, const evgi_graph *b);
void evgi_graph_destroy(evgi_graph *g);

/* Grouped adjacency spectrum, eigenvalues descending. */
evgi_status evgi_spectrum_compute(const evgi_graph *g, const evgi_options *opt, evgi_spectrum **out);
size_t evgi_spectrum_group_count(const evgi_spectrum *s);
double evgi_spectrum_eigenvalue(const evgi_spectrum *s, size_t i);
size_t evgi_spectrum_multiplicity(const evgi_spectrum *s, size_t i);
size_t evgi_spectrum_warning_count(const evgi_spectrum *s);
const char *evgi_spectrum_warning(const evgi_spectrum *s, size_t i);
void evgi_spectrum_destroy(evgi_spectrum *s);

/* Automorphism group. */
evgi_status evgi_automorphism_group(const evgi_graph *g, const evgi_options *opt, evgi_aut **out);
const char *evgi_aut_order(const evgi_aut *a);
int evgi_aut_verified(const evgi_aut *a);
size_t evgi_aut_degree(const evgi_aut *a);
size_t evgi_aut_generator_count(const evgi_aut *a);
/* Image array of length evgi_aut_degree, 0-based. */
const uint32_t *evgi_aut_generator(const evgi_aut *a, size_t i);
size_t evgi_aut_diagnostic_count(const evgi_aut *a);
const char *evgi_aut_diagnostic(const evgi_aut *a, size_t i);
/* Borrowed; lives as long as the result. */
const evgi_spectrum *evgi_aut_spectrum(const evgi_aut *a);
/* Per-eigenspace projected point sets as JSON. */
char *evgi_aut_projections_json(const evgi_aut *a);
void evgi_aut_destroy(evgi_aut *a);

/* Isomorphism. */
evgi_status evgi_isomorphic(const evgi_graph *g1, const evgi_graph *g2, const evgi_options *opt,
                            evgi_iso **out);
int evgi_iso_decision(const evgi_iso *r);
const char *evgi_iso_reason(const evgi_iso *r);
/* NULL unless isomorphic; maps vertices of g1 to vertices of g2. */
const uint32_t *evgi_iso_witness(const evgi_iso *r);
size_t evgi_iso_degree(const evgi_iso *r);
size_t evgi_iso_diagnostic_count(const evgi_iso *r);
const char *evgi_iso_diagnostic(const evgi_iso *r, size_t i);
void evgi_iso_destroy(evgi_iso *r);

/* Permutation helpers. */
char *evgi_permutation_cycles(const uint32_t *images, size_t n, int one_based);
evgi_status evgi_permutation_parse_cycles(const char *text, size_t n, int one_based, uint32_t *images);
/* Order of the group generated by count image arrays of degree n, decimal. */
evgi_status evgi_group_order(size_t n, const uint32_t *images, size_t count, char **order);
evgi_status evgi_verify_automorphism(const evgi_graph *g, const uint32_t *images, int *ok);

/* Brute-force references; n <= 10 and n <= 8 respectively. */
evgi_status evgi_oracle_aut_count(const evgi_graph *g, uint64_t *count);
evgi_status evgi_oracle_isomorphic(const evgi_graph *g1, const evgi_graph *g2, int *isomorphic);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
