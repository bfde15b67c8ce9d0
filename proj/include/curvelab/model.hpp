#pragma once

#include <vector>

#include "curvelab/curvature.hpp"
#include "curvelab/graph.hpp"

namespace curvelab {

/// Dimension function N : N0 -> [2, inf], tabulated prefix plus constant tail.
struct DimensionFunction {
  std::vector<double> prefix;
  double tail = std::numeric_limits<double>::infinity();

  static DimensionFunction constant(double d) { return {{}, d}; }

  double at(long n) const {
    double v = (n >= 0 && std::size_t(n) < prefix.size()) ? prefix[std::size_t(n)]
                                                          : tail;
    if (!(v >= 2.0))
      fail(ErrorCode::InvalidArgument, "dimension function values must be >= 2");
    return v;
  }
};

/// Local growth rate of the zero-curvature model at dimension D:
/// p_D(n) = (D-2) / (2D + 4(n-1)).
double model_growth_rate(double D, long n);

/// The normalized model graph with growth rates p_D, materialized on
/// {0..length} with m(0) = 1.  Requires D > 2 finite.
LinearGraph model_space(double D, long length);

/// True iff the optimal curvature at dimension N(x) is <= tol for all
/// x <= length.
bool is_model_space(const LinearGraph& g0, const DimensionFunction& N,
                    long length, double tol = kCdTolerance);

struct ComparisonDegreeRow {
  long x = 0;
  double d_plus_model = 0.0;
  double d_plus_g = 0.0;
  bool dominance = false;
};

struct ComparisonRatioRow {
  long x = 0;
  long y = 0;
  double ratio_model = 0.0;
  double ratio_g = 0.0;
  bool dominance = false;
};

struct ComparisonReport {
  std::vector<ComparisonDegreeRow> d_plus_rows;
  std::vector<ComparisonRatioRow> measure_ratio_rows;
  std::vector<long> hypothesis_failures;  // vertices where K*(G0) > K*(G)

  bool all_dominant() const {
    for (const auto& r : d_plus_rows)
      if (!r.dominance) return false;
    for (const auto& r : measure_ratio_rows)
      if (!r.dominance) return false;
    return true;
  }
};

/// Bishop-Gromov style comparison of a model space against a normalized graph
/// on [0, hi].  Hypothesis failures are reported per vertex, not thrown.
ComparisonReport compare(const LinearGraph& g0, const LinearGraph& g,
                         const DimensionFunction& N, long hi);

/// Checks p(n) <= p_D(n) on [lo, hi]; the CD(0, D) hypothesis is verified
/// first and CdHypothesisFailed is thrown if it does not hold.
bool growth_rate_bound(const LinearGraph& g, double D, long lo, long hi);

/// Checks m(j)/m(i) <= ((j+1)/(i+1))^(D-2) for a CD(0, D) graph, D >= 4.
bool measure_growth_bound(const LinearGraph& g, double D, long i, long j);

/// Checks p(n) >= -tol on [lo, hi].
bool nonneg_p_check(const LinearGraph& g, long lo, long hi,
                    double tol = 1e-12);

}  // namespace curvelab
