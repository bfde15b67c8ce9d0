#include "curvelab/curvature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace curvelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

WTerms w_terms(const LinearGraph& g, long n, double K, DimensionParam D) {
  g.require_vertex(n);
  WTerms t;
  t.has_left = g.contains(n - 1);
  t.has_right = g.contains(n + 1);
  Degrees dn = g.degrees(n);

  if (t.has_left) {
    Degrees dl = g.degrees(n - 1);
    t.a = 0.5 * (-dl.d_minus + 3.0 * dl.d_plus + D.c4d() * dn.d_minus -
                 dn.d_plus);
    t.w_minus = t.a - K;
  }
  if (t.has_right) {
    Degrees dr = g.degrees(n + 1);
    t.b = 0.5 * (-dr.d_plus + 3.0 * dr.d_minus + D.c4d() * dn.d_plus -
                 dn.d_minus);
    t.w_plus = t.b - K;
  }
  if (t.has_left && t.has_right) {
    double c = D.cd();
    t.cross = c * c * dn.d_minus * dn.d_plus;
  }
  return t;
}

bool cd_holds(const LinearGraph& g, long n, double K, DimensionParam D,
              double tol) {
  if (!D.is_inf() && D.value < 2.0) {
    // The scalar reduction is only derived for D >= 2; fall back to the
    // eigenvalue oracle.
    LinearGraphView view(g);
    return cd_oracle_psd(view, n, K, D);
  }
  WTerms t = w_terms(g, n, K, D);
  if (!t.has_left && !t.has_right) return true;
  if (!t.has_left) return t.w_plus >= -tol;
  if (!t.has_right) return t.w_minus >= -tol;
  double scale = std::max(1.0, std::abs(t.cross));
  return t.w_minus >= -tol && t.w_plus >= -tol &&
         t.w_minus * t.w_plus >= t.cross - tol * scale;
}

double optimal_curvature(const LinearGraph& g, long n, DimensionParam D) {
  if (!D.is_inf() && D.value < 2.0) {
    LinearGraphView view(g);
    return optimal_curvature_psd(view, n, D);
  }
  WTerms t = w_terms(g, n, 0.0, D);
  if (!t.has_left && !t.has_right) return kInf;  // unconstrained
  if (!t.has_left) return t.b;
  if (!t.has_right) return t.a;
  double mid = 0.5 * (t.a + t.b);
  double half = 0.5 * (t.a - t.b);
  return mid - std::sqrt(half * half + t.cross);
}

namespace {

// Dense evaluation helpers for the PSD oracle.  Functions are supported on an
// explicit vertex list; everything else evaluates to zero.
struct BallFn {
  const std::unordered_map<long, int>* pos;
  const Eigen::VectorXd* vals;

  double operator()(long v) const {
    auto it = pos->find(v);
    return it == pos->end() ? 0.0 : (*vals)[it->second];
  }
};

double view_laplacian(const GraphView& view, const BallFn& f, long v) {
  double acc = 0.0;
  for (auto [u, w] : view.neighbors(v)) acc += w * (f(u) - f(v));
  return acc / view.measure(v);
}

double view_gamma(const GraphView& view, const BallFn& f, long v) {
  double acc = 0.0;
  for (auto [u, w] : view.neighbors(v)) {
    double d = f(u) - f(v);
    acc += w * d * d;
  }
  return 0.5 * acc / view.measure(v);
}

double view_gamma2(const GraphView& view, const BallFn& f, long x) {
  double m = view.measure(x);
  double gamma_x = view_gamma(view, f, x);
  double lap_x = view_laplacian(view, f, x);
  double d_gamma = 0.0;
  double g_fdf = 0.0;
  for (auto [y, w] : view.neighbors(x)) {
    d_gamma += w * (view_gamma(view, f, y) - gamma_x);
    g_fdf += w * (f(y) - f(x)) * (view_laplacian(view, f, y) - lap_x);
  }
  return 0.5 * d_gamma / m - 0.5 * g_fdf / m;
}

std::vector<long> two_ball(const GraphView& view, long x) {
  std::vector<long> verts{x};
  for (auto [y, wy] : view.neighbors(x)) {
    verts.push_back(y);
    for (auto [z, wz] : view.neighbors(y)) verts.push_back(z);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

Eigen::MatrixXd cd_form_matrix(const GraphView& view, long x, double K,
                               DimensionParam D) {
  std::vector<long> verts = two_ball(view, x);
  const int n = int(verts.size());
  std::unordered_map<long, int> pos;
  for (int i = 0; i < n; ++i) pos[verts[i]] = i;

  auto q = [&](const Eigen::VectorXd& v) {
    BallFn f{&pos, &v};
    double lap = view_laplacian(view, f, x);
    return view_gamma2(view, f, x) - K * view_gamma(view, f, x) -
           D.inv() * lap * lap;
  };

  Eigen::MatrixXd m(n, n);
  std::vector<double> diag(std::size_t(n), 0.0);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    diag[std::size_t(i)] = q(e);
    m(i, i) = diag[std::size_t(i)];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e[i] = 1.0;
      e[j] = 1.0;
      double v = 0.5 * (q(e) - diag[std::size_t(i)] - diag[std::size_t(j)]);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

}  // namespace

bool cd_oracle_psd(const GraphView& view, long x, double K, DimensionParam D) {
  Eigen::MatrixXd m = cd_form_matrix(view, x, K, D);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  double floor = kPsdEigenFloor * std::max(1.0, m.cwiseAbs().maxCoeff());
  return solver.eigenvalues().minCoeff() >= floor;
}

double optimal_curvature_psd(const GraphView& view, long x, DimensionParam D) {
  if (view.neighbors(x).empty()) return kInf;

  double deg = 0.0;
  for (auto [y, w] : view.neighbors(x)) deg += w;
  deg /= view.measure(x);
  double scale = std::max(1.0, deg);

  double lo = 0.0, hi = 0.0;
  if (cd_oracle_psd(view, x, 0.0, D)) {
    hi = 10.0 * scale;
    while (cd_oracle_psd(view, x, hi, D)) {
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  } else {
    lo = -10.0 * scale;
    while (!cd_oracle_psd(view, x, lo, D)) {
      lo *= 2.0;
      if (lo < -1e300)
        fail(ErrorCode::AssertionFailed, "psd bisection bracket diverged");
    }
  }
  while (hi - lo > kBisectTolerance * std::max(1.0, std::abs(lo))) {
    double mid = 0.5 * (lo + hi);
    if (cd_oracle_psd(view, x, mid, D))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ollivier(const LinearGraph& g, long n) {
  if (!g.contains(n) || !g.contains(n + 1))
    fail(ErrorCode::EdgeOutOfSupport,
         "edge (" + std::to_string(n) + "," + std::to_string(n + 1) +
             ") not in support");
  Degrees dn = g.degrees(n);
  Degrees dr = g.degrees(n + 1);
  return dr.d_minus - dr.d_plus - dn.d_minus + dn.d_plus;
}

std::optional<double> ollivier_cd_bound(const LinearGraph& g, long n) {
  g.require_vertex(n);
  g.require_vertex(n - 1);
  g.require_vertex(n + 1);
  double ml = g.measure(n - 1), mc = g.measure(n), mr = g.measure(n + 1);
  if (ml * mr > mc * mc * (1.0 + 1e-12)) return std::nullopt;
  double k_right = ollivier(g, n);
  double k_left = ollivier(g, n - 1);
  return 0.5 * std::min(k_left, k_right);
}

double phi(double x) {
  if (!(x > 0.0))
    fail(ErrorCode::NonPositiveArgument, "phi requires a positive argument");
  if (x <= 0.25) return -kInf;
  return 0.25 * (7.0 - 9.0 / (4.0 * x - 1.0));
}

bool ratio_chain_check(const LinearGraph& g, long n, double tol) {
  if (!g.is_physical())
    fail(ErrorCode::MeasureKindUnsupported,
         "ratio chain check requires a physical graph");
  if (n < 2) fail(ErrorCode::InvalidArgument, "ratio chain check needs n >= 2");
  double bound = phi(g.weight(n - 1) / g.weight(n - 2));
  return g.weight(n + 1) / g.weight(n) <= bound + tol;
}

double F_fn(double a, double b, double K, DimensionParam D) {
  return D.cd() * (0.5 - b) + 2.0 * a - K;
}

double G_fn(double a, double b, double K, DimensionParam D) {
  double c = D.cd();
  double num = c * c * (0.5 - b);
  double frac;
  if (num == 0.0) {
    frac = 0.0;
  } else {
    double den = F_fn(a, b, K, D);
    if (den == 0.0) return -kInf;
    frac = num / den;
  }
  return (0.5 + b) * (c - frac) - K;
}

namespace {

bool cd_normalized_at(const LinearGraph& g, long n, double K, DimensionParam D,
                      double tol) {
  double b = g.degrees(n).p;
  double a = g.contains(n - 1) ? g.degrees(n - 1).p : 0.0;
  if (g.contains(n - 1) && F_fn(a, b, K, D) < -tol) return false;
  return 2.0 * g.degrees(n + 1).p <= G_fn(a, b, K, D) + tol;
}

}  // namespace

bool cd_holds_normalized(const LinearGraph& g, long n, double K,
                         DimensionParam D, double tol) {
  if (!g.is_normalized())
    fail(ErrorCode::NotNormalized, "graph measure is not normalized");
  g.require_vertex(n);
  g.require_vertex(n + 1);
  return cd_normalized_at(g, n, K, D, tol);
}

double optimal_curvature_normalized(const LinearGraph& g, long n,
                                    DimensionParam D) {
  if (!g.is_normalized())
    fail(ErrorCode::NotNormalized, "graph measure is not normalized");
  g.require_vertex(n);
  g.require_vertex(n + 1);

  auto holds = [&](double K) { return cd_normalized_at(g, n, K, D, 0.0); };
  double lo = 0.0, hi = 0.0;
  if (holds(0.0)) {
    hi = 10.0;
    while (holds(hi)) hi *= 2.0;
  } else {
    lo = -10.0;
    while (!holds(lo)) lo *= 2.0;
  }
  while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
    double mid = 0.5 * (lo + hi);
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<CdViolation> find_cd_violation(const LinearGraph& g, double K,
                                             DimensionParam D, long lo,
                                             long hi) {
  for (long n = lo; n <= hi; ++n) {
    if (!cd_holds(g, n, K, D))
      return CdViolation{n, optimal_curvature(g, n, D) - K};
  }
  return std::nullopt;
}

std::string CurvatureProfile::to_csv() const {
  std::string out = "n,d_minus,d_plus,p,kappa_right,k_star\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n,
                  r.d_minus, r.d_plus, r.p, r.kappa_right, r.k_star);
    out += buf;
  }
  return out;
}

CurvatureProfile curvature_profile(const LinearGraph& g, long lo, long hi,
                                   DimensionParam D) {
  CurvatureProfile profile;
  for (long n = lo; n <= hi; ++n) {
    ProfileRow row;
    row.n = n;
    Degrees d = g.degrees(n);
    row.d_minus = d.d_minus;
    row.d_plus = d.d_plus;
    row.p = d.p;
    row.kappa_right = g.contains(n + 1)
                          ? ollivier(g, n)
                          : std::numeric_limits<double>::quiet_NaN();
    row.k_star = optimal_curvature(g, n, D);
    profile.rows.push_back(row);
  }
  return profile;
}

}  // namespace curvelab
