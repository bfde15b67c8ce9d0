#include "curvelab.h"

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "curvelab/analysis.hpp"
#include "curvelab/curvature.hpp"
#include "curvelab/graph.hpp"
#include "curvelab/inequalities.hpp"
#include "curvelab/json_io.hpp"
#include "curvelab/model.hpp"
#include "curvelab/rooted.hpp"

using nlohmann::json;
using namespace curvelab;

struct clb_graph {
  LinearGraph g;
};

struct clb_rooted {
  RootedGraph rg;
};

namespace {

thread_local std::string t_last_error;

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CLB_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return CLB_PARSE_ERROR;
    case ErrorCode::VertexOutOfSupport: return CLB_VERTEX_OUT_OF_SUPPORT;
    case ErrorCode::EdgeOutOfSupport: return CLB_EDGE_OUT_OF_SUPPORT;
    case ErrorCode::EmptyInterval: return CLB_EMPTY_INTERVAL;
    case ErrorCode::NotNormalized: return CLB_NOT_NORMALIZED;
    case ErrorCode::NotConcave: return CLB_NOT_CONCAVE;
    case ErrorCode::NotPositive: return CLB_NOT_POSITIVE;
    case ErrorCode::NotComplete: return CLB_NOT_COMPLETE;
    case ErrorCode::NonPositiveArgument: return CLB_NON_POSITIVE_ARGUMENT;
    case ErrorCode::DimensionNotAboveTwo: return CLB_DIMENSION_NOT_ABOVE_TWO;
    case ErrorCode::DimensionBelowFour: return CLB_DIMENSION_BELOW_FOUR;
    case ErrorCode::CdHypothesisFailed: return CLB_CD_HYPOTHESIS_FAILED;
    case ErrorCode::HypothesisFailed: return CLB_HYPOTHESIS_FAILED;
    case ErrorCode::MeasureKindUnsupported: return CLB_MEASURE_KIND_UNSUPPORTED;
    case ErrorCode::RadiusExceedsSupport: return CLB_RADIUS_EXCEEDS_SUPPORT;
    case ErrorCode::Disconnected: return CLB_DISCONNECTED;
    case ErrorCode::NotWeaklySymmetric: return CLB_NOT_WEAKLY_SYMMETRIC;
    case ErrorCode::InconsistentSpec: return CLB_INCONSISTENT_SPEC;
    case ErrorCode::ParameterOrderViolated: return CLB_PARAMETER_ORDER_VIOLATED;
    case ErrorCode::Unsupported: return CLB_UNSUPPORTED;
    case ErrorCode::AssertionFailed: return CLB_ASSERTION_FAILED;
  }
  return CLB_UNKNOWN;
}

template <typename Fn>
int guarded(Fn fn) {
  try {
    fn();
    return CLB_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CLB_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

DimensionParam dim(double d) {
  return std::isinf(d) ? DimensionParam::infinite() : DimensionParam(d);
}

json series_to_json(const std::vector<SeriesVerdict>& verdicts) {
  json arr = json::array();
  for (const auto& v : verdicts) {
    arr.push_back({{"property", to_string(v.property)},
                   {"verdict", to_string(v.verdict)},
                   {"partial_sum", v.partial_sum},
                   {"truncation", v.truncation},
                   {"rule", v.rule}});
  }
  return arr;
}

}  // namespace

extern "C" {

const char* clb_version(void) { return "0.1.0"; }

const char* clb_last_error(void) { return t_last_error.c_str(); }

void clb_string_free(char* s) { std::free(s); }

int clb_graph_parse(const char* json_text, clb_graph** out) {
  return guarded([&] {
    if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
    *out = new clb_graph{parse_graph(json_text)};
  });
}

int clb_graph_to_json(const clb_graph* g, char** out) {
  return guarded([&] { *out = dup_string(graph_to_json(g->g)); });
}

void clb_graph_free(clb_graph* g) { delete g; }

int clb_rooted_parse(const char* json_text, clb_rooted** out) {
  return guarded([&] {
    if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
    *out = new clb_rooted{parse_rooted(json_text)};
  });
}

int clb_rooted_to_json(const clb_rooted* rg, char** out) {
  return guarded([&] { *out = dup_string(rooted_to_json(rg->rg)); });
}

void clb_rooted_free(clb_rooted* rg) { delete rg; }

int clb_graph_model_space(double dimension, long length, clb_graph** out) {
  return guarded([&] { *out = new clb_graph{model_space(dimension, length)}; });
}

int clb_graph_exp_family(double omega, double mu, clb_graph** out) {
  return guarded([&] { *out = new clb_graph{exp_family(omega, mu)}; });
}

int clb_graph_from_concave(const double* xs, const double* ys, long count,
                           clb_graph** out) {
  return guarded([&] {
    std::vector<ConcaveSample> samples;
    for (long i = 0; i < count; ++i) samples.push_back({xs[i], ys[i]});
    *out = new clb_graph{build_from_concave(samples)};
  });
}

int clb_graph_restrict(const clb_graph* g, long a, long b, int renormalize,
                       clb_graph** out) {
  return guarded(
      [&] { *out = new clb_graph{restrict_graph(g->g, a, b, renormalize != 0)}; });
}

int clb_rooted_tree(const long* branching, const double* sphere_weights,
                    const double* sphere_measures, long depth,
                    double root_measure, clb_rooted** out) {
  return guarded([&] {
    std::vector<long> br(branching, branching + depth);
    std::vector<double> ws(sphere_weights, sphere_weights + depth);
    std::vector<double> ms(sphere_measures, sphere_measures + depth);
    *out = new clb_rooted{symmetric_tree(br, ws, ms, root_measure)};
  });
}

int clb_optimal_curvature(const clb_graph* g, long n, double dimension,
                          double* out) {
  return guarded([&] { *out = optimal_curvature(g->g, n, dim(dimension)); });
}

int clb_cd_holds(const clb_graph* g, long n, double curvature, double dimension,
                 int* out) {
  return guarded(
      [&] { *out = cd_holds(g->g, n, curvature, dim(dimension)) ? 1 : 0; });
}

int clb_ollivier(const clb_graph* g, long n, double* out) {
  return guarded([&] { *out = ollivier(g->g, n); });
}

int clb_curvature_profile_csv(const clb_graph* g, long lo, long hi,
                              double dimension, char** out) {
  return guarded([&] {
    *out = dup_string(curvature_profile(g->g, lo, hi, dim(dimension)).to_csv());
  });
}

int clb_find_cd_violation(const clb_graph* g, double curvature,
                          double dimension, long lo, long hi, int* found,
                          long* vertex, double* slack) {
  return guarded([&] {
    auto v = find_cd_violation(g->g, curvature, dim(dimension), lo, hi);
    *found = v.has_value() ? 1 : 0;
    if (v) {
      *vertex = v->vertex;
      *slack = v->slack;
    }
  });
}

int clb_series_json(const clb_graph* g, char** out) {
  return guarded(
      [&] { *out = dup_string(series_to_json(series_tests(g->g)).dump(2)); });
}

int clb_analyze_json(const clb_graph* g, char** out) {
  return guarded([&] {
    json report;
    report["version"] = clb_version();
    report["tolerances"] = {{"cd", kCdTolerance},
                            {"psd_eigen_floor", kPsdEigenFloor},
                            {"bisect", kBisectTolerance}};
    report["graph"] = json::parse(graph_to_json(g->g));
    try {
      report["series"] = series_to_json(series_tests(g->g));
    } catch (const Error&) {
      report["series"] = nullptr;
    }
    try {
      GrowthClass growth = classify_volume_growth(g->g);
      report["growth_class"] = to_string(growth.label);
      report["A_G"] = growth.a_g;
    } catch (const Error&) {
      report["growth_class"] = nullptr;
      report["A_G"] = nullptr;
    }
    try {
      long hi = 50;
      if (!g->g.weights().tail.decidable())
        hi = std::min(hi, long(g->g.weights().prefix.size()) - 2);
      MetricTable table = intrinsic_sigma(g->g, hi + 1);
      ScDecayReport decay = sc_from_curvature_decay(g->g, table, 0, hi);
      report["curvature_decay"] = {
          {"constant", decay.constant},
          {"constant_first_half", decay.constant_first_half},
          {"hypothesis_ok", decay.hypothesis_ok},
          {"sc_verdict", to_string(decay.verdict.verdict)},
          {"theorem_consistent", decay.theorem_consistent}};
    } catch (const Error&) {
      report["curvature_decay"] = nullptr;
    }
    *out = dup_string(report.dump(2));
  });
}

int clb_growth_class(const clb_graph* g, char** label, double* a_g) {
  return guarded([&] {
    GrowthClass growth = classify_volume_growth(g->g);
    *label = dup_string(to_string(growth.label));
    *a_g = growth.a_g;
  });
}

int clb_positive_certificate(double omega, double mu, double* curvature,
                             double* dimension, double* identity_residual) {
  return guarded([&] {
    PositiveCertificate cert = positive_certificate(omega, mu);
    *curvature = cert.K;
    *dimension = cert.D;
    *identity_residual = cert.identity_residual;
  });
}

int clb_resistance(const clb_graph* g, long n, double* out) {
  return guarded([&] { *out = resistance(g->g, n); });
}

int clb_doubling(const clb_graph* g, const long* centers, long center_count,
                 long r_max, double* c_sd, double* c_vd) {
  return guarded([&] {
    std::vector<long> cs(centers, centers + center_count);
    DoublingReport report = doubling_constants(g->g, cs, r_max);
    *c_sd = report.c_sd;
    *c_vd = report.c_vd;
  });
}

int clb_cheeger(const clb_graph* g, double* out) {
  return guarded([&] { *out = cheeger(g->g); });
}

int clb_spectral_gap(const clb_graph* g, double* out) {
  return guarded([&] { *out = spectral_gap(g->g); });
}

int clb_poincare_best_constant(const clb_graph* g, long x0, long radius,
                               double* out) {
  return guarded([&] { *out = poincare_best_constant(g->g, x0, radius); });
}

int clb_ellipticity(const clb_graph* g, long lo, long hi, double* out) {
  return guarded([&] { *out = ellipticity(g->g, lo, hi); });
}

int clb_sd_product_check(const clb_graph* g1, const clb_graph* g2, long x1,
                         long x2, long r_max, double* c1, double* c2,
                         double* c_product, int* ok) {
  return guarded([&] {
    SdProductCheck check = sd_product_check(g1->g, g2->g, x1, x2, r_max);
    *c1 = check.c1;
    *c2 = check.c2;
    *c_product = check.c_product;
    *ok = check.ok ? 1 : 0;
  });
}

int clb_compare_json(const clb_graph* model, const clb_graph* g,
                     const double* dim_prefix, long dim_prefix_count,
                     double dim_tail, long hi, char** out) {
  return guarded([&] {
    DimensionFunction fn;
    if (dim_prefix)
      fn.prefix.assign(dim_prefix, dim_prefix + dim_prefix_count);
    fn.tail = dim_tail;
    ComparisonReport report = compare(model->g, g->g, fn, hi);
    json j;
    j["d_plus_rows"] = json::array();
    for (const auto& r : report.d_plus_rows) {
      j["d_plus_rows"].push_back({{"x", r.x},
                                  {"d_plus_model", r.d_plus_model},
                                  {"d_plus_g", r.d_plus_g},
                                  {"dominance", r.dominance}});
    }
    j["measure_ratio_rows"] = json::array();
    for (const auto& r : report.measure_ratio_rows) {
      j["measure_ratio_rows"].push_back({{"x", r.x},
                                         {"y", r.y},
                                         {"ratio_model", r.ratio_model},
                                         {"ratio_g", r.ratio_g},
                                         {"dominance", r.dominance}});
    }
    j["hypothesis_failures"] = report.hypothesis_failures;
    j["all_dominant"] = report.all_dominant();
    *out = dup_string(j.dump(2));
  });
}

int clb_rooted_symmetry_json(const clb_rooted* rg, char** out) {
  return guarded([&] {
    SymmetryCheck check = check_weak_symmetry(rg->rg);
    json j;
    j["symmetric"] = check.symmetric;
    if (check.symmetric) {
      j["spheres"] = json::array();
      for (const auto& row : check.rows)
        j["spheres"].push_back(
            {{"n", row.n}, {"d_plus", row.d_plus}, {"m", row.m}});
    } else {
      j["witness"] = {{"a", check.witness_a},
                      {"b", check.witness_b},
                      {"field", check.witness_field}};
    }
    *out = dup_string(j.dump(2));
  });
}

int clb_rooted_project(const clb_rooted* rg, clb_graph** out,
                       int* physical_symmetric, int* normalized_symmetric) {
  return guarded([&] {
    Projection proj = project(rg->rg);
    if (physical_symmetric) *physical_symmetric = proj.physical_symmetric;
    if (normalized_symmetric) *normalized_symmetric = proj.normalized_symmetric;
    *out = new clb_graph{std::move(proj.graph)};
  });
}

int clb_rooted_product(const clb_rooted* a, const clb_rooted* b,
                       clb_rooted** out) {
  return guarded(
      [&] { *out = new clb_rooted{cartesian_product(a->rg, b->rg)}; });
}

int clb_rooted_transfer_json(const clb_rooted* rg, double dimension, long depth,
                             char** out) {
  return guarded([&] {
    TransferReport report =
        projection_curvature_transfer(rg->rg, dim(dimension), depth);
    json j;
    j["rows"] = json::array();
    for (const auto& r : report.rows) {
      j["rows"].push_back({{"r", r.r},
                           {"k_projection", r.k_projection},
                           {"k_sphere_min", r.k_sphere_min},
                           {"ok", r.ok}});
    }
    j["all_ok"] = report.all_ok;
    *out = dup_string(j.dump(2));
  });
}

}  // extern "C"
