#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/graph.hpp"

namespace curvelab {

/// Numeric conventions used throughout the curvature engine.
inline constexpr double kCdTolerance = 1e-9;
inline constexpr double kPsdEigenFloor = -1e-12;
inline constexpr double kBisectTolerance = 1e-10;

/// The two scalar terms of the 2x2 matrix condition.  W_minus = a - K and
/// W_plus = b - K; cross = (1-2/D)^2 d_-(n) d_+(n).  A missing neighbor
/// zeroes the corresponding term and drops the cross term.
struct WTerms {
  double w_minus = 0.0;
  double w_plus = 0.0;
  double a = 0.0;
  double b = 0.0;
  double cross = 0.0;
  bool has_left = false;
  bool has_right = false;
};

WTerms w_terms(const LinearGraph& g, long n, double K, DimensionParam D);

/// CD(K, D, n) via the scalar reduction; delegates to the PSD oracle for D < 2.
bool cd_holds(const LinearGraph& g, long n, double K, DimensionParam D,
              double tol = kCdTolerance);

/// Supremal K with CD(K, D, n).  +infinity (unconstrained) for an isolated
/// vertex.  Requires D >= 2 or D = inf.
double optimal_curvature(const LinearGraph& g, long n, DimensionParam D);

/// Independent oracle: assembles the quadratic form
///   Q(f) = Gamma2(f)(x) - K Gamma(f)(x) - (Delta f(x))^2 / D
/// over functions supported on the 2-ball of x and checks that its smallest
/// eigenvalue is >= kPsdEigenFloor.
bool cd_oracle_psd(const GraphView& view, long x, double K, DimensionParam D);

/// Supremal K via bisection on the PSD oracle.
double optimal_curvature_psd(const GraphView& view, long x, DimensionParam D);

/// Ollivier curvature of the edge (n, n+1).
double ollivier(const LinearGraph& g, long n);

/// Curvature bound from Ollivier curvature under a log-concave measure;
/// nothing when the log-concavity hypothesis fails.
std::optional<double> ollivier_cd_bound(const LinearGraph& g, long n);

/// Ratio contraction bound; -infinity on (0, 1/4].
double phi(double x);

/// Checks w_{n+1}/w_n <= phi(w_{n-1}/w_{n-2}) on a physical graph.
bool ratio_chain_check(const LinearGraph& g, long n, double tol = kCdTolerance);

/// Growth-rate transfer functions for normalized graphs.  Arguments a, b are
/// local growth rates with |b| <= 1/2.  Zero numerators kill the fraction;
/// a zero denominator alone sends G to -infinity.
double F_fn(double a, double b, double K, DimensionParam D);
double G_fn(double a, double b, double K, DimensionParam D);

bool cd_holds_normalized(const LinearGraph& g, long n, double K,
                         DimensionParam D, double tol = kCdTolerance);
double optimal_curvature_normalized(const LinearGraph& g, long n,
                                    DimensionParam D);

struct CdViolation {
  long vertex = 0;
  double slack = 0.0;  // K*(vertex) - K, negative at a violation
};

std::optional<CdViolation> find_cd_violation(const LinearGraph& g, double K,
                                             DimensionParam D, long lo,
                                             long hi);

struct ProfileRow {
  long n = 0;
  double d_minus = 0.0;
  double d_plus = 0.0;
  double p = 0.0;
  double kappa_right = 0.0;  // NaN when the right edge is missing
  double k_star = 0.0;
};

struct CurvatureProfile {
  std::vector<ProfileRow> rows;
  std::string to_csv() const;
};

CurvatureProfile curvature_profile(const LinearGraph& g, long lo, long hi,
                                   DimensionParam D);

}  // namespace curvelab
