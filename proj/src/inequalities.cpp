#include "curvelab/inequalities.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace curvelab {

namespace {

// Measure of the combinatorial sphere S_i(x0), or nothing when the sphere is
// empty.  Evaluation past a tabulated prefix becomes RadiusExceedsSupport.
std::optional<double> sphere_measure(const LinearGraph& g, long x0, long i) {
  double m = 0.0;
  bool any = false;
  try {
    if (g.contains(x0 + i)) {
      m += g.measure(x0 + i);
      any = true;
    }
    if (i > 0 && g.contains(x0 - i)) {
      m += g.measure(x0 - i);
      any = true;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsupported)
      fail(ErrorCode::RadiusExceedsSupport,
           "sphere of radius " + std::to_string(i) +
               " leaves the tabulated support");
    throw;
  }
  if (!any) return std::nullopt;
  return m;
}

DoublingReport doubling_from_spheres(
    const std::vector<std::vector<std::optional<double>>>& sphere_m,
    long r_max) {
  DoublingReport report;
  report.r_max = r_max;
  for (const auto& spheres : sphere_m) {
    std::vector<double> ball(spheres.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < spheres.size(); ++i) {
      if (spheres[i]) acc += *spheres[i];
      ball[i] = acc;
    }
    for (long i = 0; i <= r_max; ++i) {
      for (long j = 0; j <= std::min(r_max, 2 * i + 1); ++j) {
        if (!spheres[std::size_t(i)] || !spheres[std::size_t(j)]) {
          ++report.excluded_pairs;
          continue;
        }
        report.c_sd =
            std::max(report.c_sd, *spheres[std::size_t(j)] / *spheres[std::size_t(i)]);
      }
    }
    for (long r = 1; r <= r_max; ++r) {
      report.c_vd = std::max(report.c_vd,
                             ball[std::size_t(2 * r)] / ball[std::size_t(r)]);
    }
  }
  return report;
}

}  // namespace

DoublingReport doubling_constants(const LinearGraph& g,
                                  const std::vector<long>& centers,
                                  long r_max) {
  if (r_max < 1) fail(ErrorCode::InvalidArgument, "r_max must be >= 1");
  std::vector<std::vector<std::optional<double>>> sphere_m;
  for (long x0 : centers) {
    g.require_vertex(x0);
    std::vector<std::optional<double>> spheres;
    for (long i = 0; i <= 2 * r_max; ++i)
      spheres.push_back(sphere_measure(g, x0, i));
    sphere_m.push_back(std::move(spheres));
  }
  DoublingReport report = doubling_from_spheres(sphere_m, r_max);
  report.centers = centers;
  return report;
}

DoublingReport doubling_constants(const RootedGraph& rg, long r_max) {
  if (r_max < 1) fail(ErrorCode::InvalidArgument, "r_max must be >= 1");
  std::vector<std::optional<double>> spheres;
  for (long i = 0; i <= 2 * r_max; ++i) {
    if (i > rg.depth()) {
      spheres.push_back(std::nullopt);
      continue;
    }
    double m = 0.0;
    for (long v : rg.spheres()[std::size_t(i)]) m += rg.measure(v);
    spheres.push_back(m);
  }
  DoublingReport report = doubling_from_spheres({spheres}, r_max);
  report.centers = {rg.root()};
  return report;
}

namespace {

void require_finite_path(const LinearGraph& g) {
  if (g.support().kind != Support::Kind::Interval)
    fail(ErrorCode::Disconnected, "requires a finite path restriction");
  if (g.support().lo == g.support().hi)
    fail(ErrorCode::Disconnected, "single vertex has no cuts");
  long n = g.support().hi - g.support().lo + 1;
  if (n > kMaxDenseVertices)
    fail(ErrorCode::InvalidArgument,
         "path too large for dense solves (cap " +
             std::to_string(kMaxDenseVertices) + ")");
}

}  // namespace

double cheeger(const LinearGraph& g) {
  require_finite_path(g);
  long lo = g.support().lo, hi = g.support().hi;
  double total = 0.0;
  for (long n = lo; n <= hi; ++n) total += g.measure(n);

  // On a path an optimal cut is a prefix cut.
  double h = std::numeric_limits<double>::infinity();
  double m_a = 0.0;
  for (long k = lo; k < hi; ++k) {
    m_a += g.measure(k);
    h = std::min(h, g.weight(k) / std::min(m_a, total - m_a));
  }
  return h;
}

double spectral_gap(const LinearGraph& g) {
  require_finite_path(g);
  long lo = g.support().lo, hi = g.support().hi;
  long n = hi - lo + 1;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (long k = lo; k <= hi; ++k) M(k - lo, k - lo) = g.measure(k);
  for (long k = lo; k < hi; ++k) {
    long i = k - lo;
    double w = g.weight(k);
    L(i, i) += w;
    L(i + 1, i + 1) += w;
    L(i, i + 1) -= w;
    L(i + 1, i) -= w;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(L, M);
  return solver.eigenvalues()[1];
}

double poincare_best_constant(const LinearGraph& g, long x0, long R) {
  if (R < 1) fail(ErrorCode::InvalidArgument, "R must be >= 1");
  g.require_vertex(x0);

  std::vector<long> ball2;
  try {
    for (long v = x0 - 2 * R; v <= x0 + 2 * R; ++v) {
      if (!g.contains(v)) continue;
      g.measure(v);
      ball2.push_back(v);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsupported)
      fail(ErrorCode::RadiusExceedsSupport,
           "ball of radius " + std::to_string(2 * R) +
               " leaves the tabulated support");
    throw;
  }
  long n = long(ball2.size());
  if (n > kMaxDenseVertices)
    fail(ErrorCode::InvalidArgument, "ball too large for dense solves");

  // Dirichlet form over ordered pairs in B_2R (twice the edge form) and the
  // centered mass form supported on B_R.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd Mt = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i + 1 < n; ++i) {
    if (ball2[std::size_t(i + 1)] != ball2[std::size_t(i)] + 1) continue;
    double w = 2.0 * g.weight(ball2[std::size_t(i)]);
    A(i, i) += w;
    A(i + 1, i + 1) += w;
    A(i, i + 1) -= w;
    A(i + 1, i) -= w;
  }
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);
  double total = 0.0;
  for (long i = 0; i < n; ++i) {
    long v = ball2[std::size_t(i)];
    if (std::abs(v - x0) <= R) {
      mass[i] = g.measure(v);
      total += mass[i];
    }
  }
  for (long i = 0; i < n; ++i) Mt(i, i) = mass[i];
  Mt -= (mass * mass.transpose()) / total;

  // Deflate the constants (the nullspace of A) before the pencil solve.
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd B = Q.rightCols(n - 1);
  Eigen::MatrixXd Ar = B.transpose() * A * B;
  Eigen::MatrixXd Mr = B.transpose() * Mt * B;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(Mr, Ar);
  double nu = solver.eigenvalues().maxCoeff();
  return std::max(0.0, nu) / (double(R) * double(R));
}

double ellipticity(const LinearGraph& g, long lo, long hi) {
  if (!g.is_normalized())
    fail(ErrorCode::NotNormalized, "ellipticity is defined for normalized");
  double alpha = std::numeric_limits<double>::infinity();
  for (long x = lo; x <= hi; ++x) {
    if (!g.contains(x) || !g.has_edge(x)) continue;
    double w = g.weight(x);
    alpha = std::min(alpha, w / g.measure(x));
    alpha = std::min(alpha, w / g.measure(x + 1));
  }
  return alpha;
}

namespace {

// Materializes the ball of radius `radius` around x0 as a rooted graph.
RootedGraph ball_as_rooted(const LinearGraph& g, long x0, long radius) {
  std::vector<RootedGraph::Edge> edges;
  std::map<long, double> measure;
  try {
    for (long v = x0 - radius; v <= x0 + radius; ++v) {
      if (!g.contains(v)) continue;
      measure[v] = g.measure(v);
      if (v < x0 + radius && g.has_edge(v)) {
        edges.emplace_back(v, v + 1, g.weight(v));
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsupported)
      fail(ErrorCode::RadiusExceedsSupport,
           "ball of radius " + std::to_string(radius) +
               " leaves the tabulated support");
    throw;
  }
  return RootedGraph(x0, edges, measure);
}

}  // namespace

SdProductCheck sd_product_check(const LinearGraph& g1, const LinearGraph& g2,
                                long x1, long x2, long r_max) {
  SdProductCheck check;
  check.c1 = doubling_constants(g1, {x1}, r_max).c_sd;
  check.c2 = doubling_constants(g2, {x2}, r_max).c_sd;

  RootedGraph a = ball_as_rooted(g1, x1, 2 * r_max + 1);
  RootedGraph b = ball_as_rooted(g2, x2, 2 * r_max + 1);
  // Sphere scans are cheap; allow products a good deal larger than the
  // eigensolve cap.
  if (long(a.vertices().size()) * long(b.vertices().size()) > 8 * kMaxDenseVertices)
    fail(ErrorCode::InvalidArgument, "product too large for exhaustive scan");
  check.c_product = doubling_constants(cartesian_product(a, b), r_max).c_sd;
  check.ok = check.c_product <= 2.0 * check.c1 * check.c2 + 1e-12;
  return check;
}

}  // namespace curvelab
