/* C interface to the curvelab library.
 *
 * All functions return 0 on success or a nonzero error code; the message for
 * the most recent failure on the calling thread is available through
 * clb_last_error().  Strings returned through char** are owned by the caller
 * and must be released with clb_string_free().
 */
#ifndef CURVELAB_H
#define CURVELAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clb_graph clb_graph;    /* weighted linear graph */
typedef struct clb_rooted clb_rooted;  /* finite rooted graph */

enum clb_status {
  CLB_OK = 0,
  CLB_INVALID_ARGUMENT,
  CLB_PARSE_ERROR,
  CLB_VERTEX_OUT_OF_SUPPORT,
  CLB_EDGE_OUT_OF_SUPPORT,
  CLB_EMPTY_INTERVAL,
  CLB_NOT_NORMALIZED,
  CLB_NOT_CONCAVE,
  CLB_NOT_POSITIVE,
  CLB_NOT_COMPLETE,
  CLB_NON_POSITIVE_ARGUMENT,
  CLB_DIMENSION_NOT_ABOVE_TWO,
  CLB_DIMENSION_BELOW_FOUR,
  CLB_CD_HYPOTHESIS_FAILED,
  CLB_HYPOTHESIS_FAILED,
  CLB_MEASURE_KIND_UNSUPPORTED,
  CLB_RADIUS_EXCEEDS_SUPPORT,
  CLB_DISCONNECTED,
  CLB_NOT_WEAKLY_SYMMETRIC,
  CLB_INCONSISTENT_SPEC,
  CLB_PARAMETER_ORDER_VIOLATED,
  CLB_UNSUPPORTED,
  CLB_ASSERTION_FAILED,
  CLB_UNKNOWN
};

const char* clb_version(void);
const char* clb_last_error(void);
void clb_string_free(char* s);

/* ---- construction and serialization ---- */

int clb_graph_parse(const char* json_text, clb_graph** out);
int clb_graph_to_json(const clb_graph* g, char** out);
void clb_graph_free(clb_graph* g);

int clb_rooted_parse(const char* json_text, clb_rooted** out);
int clb_rooted_to_json(const clb_rooted* rg, char** out);
void clb_rooted_free(clb_rooted* rg);

/* Dimension arguments are doubles; pass INFINITY for the unbounded case. */
int clb_graph_model_space(double dimension, long length, clb_graph** out);
int clb_graph_exp_family(double omega, double mu, clb_graph** out);
int clb_graph_from_concave(const double* xs, const double* ys, long count,
                           clb_graph** out);
int clb_graph_restrict(const clb_graph* g, long a, long b, int renormalize,
                       clb_graph** out);
int clb_rooted_tree(const long* branching, const double* sphere_weights,
                    const double* sphere_measures, long depth,
                    double root_measure, clb_rooted** out);

/* ---- curvature ---- */

int clb_optimal_curvature(const clb_graph* g, long n, double dimension,
                          double* out);
int clb_cd_holds(const clb_graph* g, long n, double curvature, double dimension,
                 int* out);
int clb_ollivier(const clb_graph* g, long n, double* out);
int clb_curvature_profile_csv(const clb_graph* g, long lo, long hi,
                              double dimension, char** out);
/* found = 0 and vertex/slack untouched when CD(K, D) holds on [lo, hi]. */
int clb_find_cd_violation(const clb_graph* g, double curvature,
                          double dimension, long lo, long hi, int* found,
                          long* vertex, double* slack);

/* ---- global analysis ---- */

int clb_series_json(const clb_graph* g, char** out);
int clb_analyze_json(const clb_graph* g, char** out);
int clb_growth_class(const clb_graph* g, char** label, double* a_g);
int clb_positive_certificate(double omega, double mu, double* curvature,
                             double* dimension, double* identity_residual);
int clb_resistance(const clb_graph* g, long n, double* out);

/* ---- inequalities ---- */

int clb_doubling(const clb_graph* g, const long* centers, long center_count,
                 long r_max, double* c_sd, double* c_vd);
int clb_cheeger(const clb_graph* g, double* out);
int clb_spectral_gap(const clb_graph* g, double* out);
int clb_poincare_best_constant(const clb_graph* g, long x0, long radius,
                               double* out);
int clb_ellipticity(const clb_graph* g, long lo, long hi, double* out);
int clb_sd_product_check(const clb_graph* g1, const clb_graph* g2, long x1,
                         long x2, long r_max, double* c1, double* c2,
                         double* c_product, int* ok);

/* ---- model comparison ---- */

/* dim_prefix may be NULL (constant dimension dim_tail). */
int clb_compare_json(const clb_graph* model, const clb_graph* g,
                     const double* dim_prefix, long dim_prefix_count,
                     double dim_tail, long hi, char** out);

/* ---- rooted graphs ---- */

int clb_rooted_symmetry_json(const clb_rooted* rg, char** out);
int clb_rooted_project(const clb_rooted* rg, clb_graph** out,
                       int* physical_symmetric, int* normalized_symmetric);
int clb_rooted_product(const clb_rooted* a, const clb_rooted* b,
                       clb_rooted** out);
int clb_rooted_transfer_json(const clb_rooted* rg, double dimension, long depth,
                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* CURVELAB_H */
