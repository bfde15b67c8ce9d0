#pragma once

#include <string>
#include <vector>

#include "curvelab/curvature.hpp"
#include "curvelab/graph.hpp"

namespace curvelab {

enum class SeriesProperty {
  Complete,
  StochasticallyComplete,
  Recurrent,
  Feller,
  FiniteVolume,
};

enum class Verdict { Yes, No, Undecided };

struct SeriesVerdict {
  SeriesProperty property = SeriesProperty::Complete;
  Verdict verdict = Verdict::Undecided;
  double partial_sum = 0.0;
  long truncation = 0;
  std::string rule;
};

const char* to_string(SeriesProperty p);
const char* to_string(Verdict v);

/// Symbolic verdicts for completeness, stochastic completeness, recurrence,
/// the Feller criterion and finite volume.  Decisions come from the tail
/// models; partial sums are reported for transparency only.
std::vector<SeriesVerdict> series_tests(const LinearGraph& g,
                                        long truncation = 1000000);

/// Cutoff function eta_k of the completeness construction: eta_k(0) = 1 and
/// steps of 1/sqrt(k w_n) down one parity class of edges.
LocalFunction cutoff_function(const LinearGraph& g, long k);

struct MetricTable {
  std::vector<double> edge_len;  // edge_len[n] = length of (n, n+1)
  std::vector<double> dist0;     // dist0[n] = distance from 0 to n
};

/// Path metric with edge lengths (Deg(n) v Deg(n+1))^{-1/2}.
MetricTable intrinsic_sigma(const LinearGraph& g, long length);

bool is_intrinsic(const LinearGraph& g, const MetricTable& table,
                  double tol = 1e-12);

/// Measure of the metric ball of radius r around 0; the table must reach
/// beyond the ball.
double ball_volume(const LinearGraph& g, const MetricTable& table, double r);

/// Checks w_{n-2} - 2 w_n + w_{n+2} <= -6K on [lo, hi] after verifying
/// CD(K, inf) at n and n+1 for every n in the range.
bool second_difference_check(const LinearGraph& g, double K, long lo, long hi);

struct WeightGrowthConstants {
  double c_lin = 0.0;   // max w_n / (n+1)
  double c_quad = 0.0;  // max w_n / (n+1)^2
};

WeightGrowthConstants weight_growth_check(const LinearGraph& g, double K,
                                          long lo, long hi);

enum class GrowthLabel { Linear, Intermediate, Quadratic, Undecided };

const char* to_string(GrowthLabel label);

struct GrowthClass {
  GrowthLabel label = GrowthLabel::Undecided;
  double a_g = 0.0;  // limit of (w_{2n+2} - w_{2n}) / 2
};

GrowthClass classify_volume_growth(const LinearGraph& g);

struct ConcaveEnvelopes {
  std::vector<double> f_samples;  // even-interpolant values on [lo, hi]
  std::vector<double> g_samples;  // odd-interpolant values on [lo, hi]
  double a_g = 0.0;
  long n0 = 0;
  double max_deviation = 0.0;  // max |w_n - f(n)| over [n0, hi]
  bool bound_ok = false;       // max_deviation <= 3 a_g + slack
};

ConcaveEnvelopes concave_envelopes(const LinearGraph& g, long lo, long hi,
                                   double slack = 0.05);

struct ScDecayReport {
  bool hypothesis_ok = false;
  double constant = 0.0;             // max of K*(n)_- / (1 + rho(n,0)^2)
  double constant_first_half = 0.0;  // same maximum on the first half range
  SeriesVerdict verdict;
  bool theorem_consistent = false;
};

ScDecayReport sc_from_curvature_decay(const LinearGraph& g,
                                      const MetricTable& table, long lo,
                                      long hi);

/// Builds a physical half-line graph w_n = f(n + N) from a positive concave
/// piecewise-linear function, with N the minimal index >= 2 such that
/// f(N+1) <= 4 f(N).
struct ConcaveSample {
  double x = 0.0;
  double y = 0.0;
};

LinearGraph build_from_concave(const std::vector<ConcaveSample>& samples);

/// The two-sided exponential family restricted to the half line:
/// w(n,n+1) = omega^{-n}, m(n) = mu^{-n}, 1 < omega < mu.
LinearGraph exp_family(double omega, double mu);

struct PositiveCertificate {
  double K = 0.0;
  double D = 0.0;
  double identity_residual = 0.0;
};

/// A certified (K > 0, D < inf) pair for the exponential family.
PositiveCertificate positive_certificate(double omega, double mu);

/// Effective resistance between 0 and n on a physical graph.
double resistance(const LinearGraph& g, long n);

}  // namespace curvelab
