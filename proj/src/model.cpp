#include "curvelab/model.hpp"

#include <cmath>

namespace curvelab {

double model_growth_rate(double D, long n) {
  return (D - 2.0) / (2.0 * D + 4.0 * double(n - 1));
}

LinearGraph model_space(double D, long length) {
  if (!(D > 2.0) || std::isinf(D))
    fail(ErrorCode::DimensionNotAboveTwo,
         "model space requires a finite dimension > 2");
  if (length < 1) fail(ErrorCode::InvalidArgument, "length must be >= 1");

  // m(0) = 1; w(n,n+1) = m(n)(1/2 + p(n)); m(n+1) = w(n,n+1)/(1/2 - p(n+1)).
  WeightModel w;
  w.prefix.reserve(std::size_t(length));
  double m = 1.0;
  for (long n = 0; n < length; ++n) {
    double wn = m * (0.5 + model_growth_rate(D, n));
    w.prefix.push_back(wn);
    m = wn / (0.5 - model_growth_rate(D, n + 1));
  }
  w.tail = TailModel::undecidable();
  return LinearGraph(Support::half_line(), std::move(w),
                     MeasureSpec::normalized());
}

bool is_model_space(const LinearGraph& g0, const DimensionFunction& N,
                    long length, double tol) {
  if (!g0.is_normalized())
    fail(ErrorCode::NotNormalized, "model spaces are normalized graphs");
  for (long x = 0; x <= length; ++x) {
    if (optimal_curvature(g0, x, DimensionParam(N.at(x))) > tol) return false;
  }
  return true;
}

ComparisonReport compare(const LinearGraph& g0, const LinearGraph& g,
                         const DimensionFunction& N, long hi) {
  if (!g0.is_normalized() || !g.is_normalized())
    fail(ErrorCode::NotNormalized, "comparison requires normalized graphs");

  ComparisonReport report;
  const double tol = 1e-12;

  for (long x = 0; x <= hi; ++x) {
    if (!g.contains(x)) break;
    DimensionParam d(N.at(x));
    double k0 = optimal_curvature(g0, x, d);
    double kg = optimal_curvature(g, x, d);
    if (k0 > kg + kCdTolerance) {
      report.hypothesis_failures.push_back(x);
      continue;
    }
    ComparisonDegreeRow row;
    row.x = x;
    row.d_plus_model = g0.degrees(x).d_plus;
    row.d_plus_g = g.degrees(x).d_plus;
    row.dominance = row.d_plus_model >= row.d_plus_g - tol;
    report.d_plus_rows.push_back(row);
  }

  auto ratio_row = [&](long x, long y) {
    ComparisonRatioRow row;
    row.x = x;
    row.y = y;
    row.ratio_model = g0.measure(y) / g0.measure(x);
    row.ratio_g = g.measure(y) / g.measure(x);
    row.dominance =
        row.ratio_model >= row.ratio_g - tol * std::max(1.0, row.ratio_g);
    return row;
  };
  // Ratio conclusions are only claimed when the hypothesis held throughout.
  if (report.hypothesis_failures.empty()) {
    for (long y = 1; y <= hi && g.contains(y); ++y) {
      report.measure_ratio_rows.push_back(ratio_row(y - 1, y));
      if (y > 1) report.measure_ratio_rows.push_back(ratio_row(0, y));
    }
  }
  return report;
}

bool growth_rate_bound(const LinearGraph& g, double D, long lo, long hi) {
  if (!g.is_normalized())
    fail(ErrorCode::NotNormalized, "growth rate bound requires normalized");
  DimensionParam d(D);
  for (long n = lo; n <= hi; ++n) {
    if (!cd_holds(g, n, 0.0, d))
      fail(ErrorCode::CdHypothesisFailed,
           "CD(0,D) fails at n=" + std::to_string(n));
  }
  for (long n = std::max(lo, 0L); n <= hi; ++n) {
    if (g.degrees(n).p > model_growth_rate(D, n) + 1e-12) return false;
  }
  return true;
}

bool measure_growth_bound(const LinearGraph& g, double D, long i, long j) {
  if (!g.is_normalized())
    fail(ErrorCode::NotNormalized, "measure growth bound requires normalized");
  if (D < 4.0)
    fail(ErrorCode::DimensionBelowFour, "measure growth bound requires D >= 4");
  if (!(0 <= i && i < j))
    fail(ErrorCode::InvalidArgument, "requires 0 <= i < j");
  DimensionParam d(D);
  for (long n = 0; n <= j; ++n) {
    if (!cd_holds(g, n, 0.0, d))
      fail(ErrorCode::CdHypothesisFailed,
           "CD(0,D) fails at n=" + std::to_string(n));
  }
  double ratio = g.measure(j) / g.measure(i);
  double bound = std::pow(double(j + 1) / double(i + 1), D - 2.0);
  return ratio <= bound * (1.0 + 1e-9);
}

bool nonneg_p_check(const LinearGraph& g, long lo, long hi, double tol) {
  for (long n = lo; n <= hi; ++n) {
    if (g.degrees(n).p < -tol) return false;
  }
  return true;
}

}  // namespace curvelab
