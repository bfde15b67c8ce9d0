#pragma once

#include <vector>

#include "curvelab/graph.hpp"
#include "curvelab/rooted.hpp"

namespace curvelab {

/// Hard cap on dense eigensolves and exhaustive ball scans.
inline constexpr long kMaxDenseVertices = 4096;

struct DoublingReport {
  double c_sd = 0.0;  // max m(S_j)/m(S_i) over j <= 2i+1
  double c_vd = 0.0;  // max m(B_2R)/m(B_R) over R <= r_max
  long r_max = 0;
  std::vector<long> centers;
  long excluded_pairs = 0;  // (i,j) pairs with an empty sphere
};

/// Exhaustive sphere/volume doubling maxima in the combinatorial metric.
DoublingReport doubling_constants(const LinearGraph& g,
                                  const std::vector<long>& centers, long r_max);
DoublingReport doubling_constants(const RootedGraph& rg, long r_max);

/// Cheeger constant h = min over cuts of w(A, A^c) / (m(A) ^ m(A^c)) of a
/// finite path; prefix cuts are optimal for paths.
double cheeger(const LinearGraph& g);

/// Second-smallest eigenvalue of the weighted Laplacian pencil L f = lambda m f
/// on a finite path.
double spectral_gap(const LinearGraph& g);

/// Best constant of the Poincare inequality on the ball pair (B_R, B_2R):
///   sup_f  sum_{B_R} m (f - f_B)^2  /  (R^2 sum_{x,y in B_2R} w (f(x)-f(y))^2)
/// with the edge sum over ordered pairs.
double poincare_best_constant(const LinearGraph& g, long x0, long R);

/// Minimal edge-weight-to-measure ratio w(x,y)/m(x) over the range.
double ellipticity(const LinearGraph& g, long lo, long hi);

struct SdProductCheck {
  double c1 = 0.0;
  double c2 = 0.0;
  double c_product = 0.0;
  bool ok = false;  // c_product <= 2 c1 c2
};

/// Sphere doubling of a Cartesian product against the 2 C1 C2 bound.
SdProductCheck sd_product_check(const LinearGraph& g1, const LinearGraph& g2,
                                long x1, long x2, long r_max);

}  // namespace curvelab
