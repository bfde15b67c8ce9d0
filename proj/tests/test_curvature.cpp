#include <doctest.h>

#include <cmath>
#include <random>

#include "curvelab/curvature.hpp"
#include "util.hpp"

using namespace curvelab;
using namespace curvelab::testutil;

namespace {

const DimensionParam kInfD = DimensionParam::infinite();

LinearGraph exp24() {
  // w(n,n+1) = 2^{-n}, m(n) = 4^{-n}.
  SequenceModel m;
  m.tail = TailModel::exponential(1.0, 0.25);
  return LinearGraph(Support::line(),
                     WeightModel{{}, TailModel::exponential(1.0, 0.5)},
                     MeasureSpec::explicit_(std::move(m)));
}

}  // namespace

TEST_CASE("w terms on the constant line") {
  for (double c : {0.5, 1.0, 3.0}) {
    LinearGraph g = physical_line(TailModel::constant(c));
    WTerms t = w_terms(g, 0, 0.0, kInfD);
    CHECK(t.w_minus == doctest::Approx(c));
    CHECK(t.w_plus == doctest::Approx(c));
    CHECK(t.cross == doctest::Approx(c * c));
  }
}

TEST_CASE("w terms boundary convention") {
  LinearGraph g = physical_half_line(TailModel::constant(1.0));
  WTerms t = w_terms(g, 0, 0.0, kInfD);
  CHECK(t.w_minus == 0.0);
  CHECK(t.a == 0.0);
  CHECK(t.cross == 0.0);
  CHECK_FALSE(t.has_left);
}

TEST_CASE("w terms of the exponential family at n = 0") {
  LinearGraph g = exp24();
  WTerms t = w_terms(g, 0, 0.0, kInfD);
  CHECK(t.a == doctest::Approx(0.75));
  CHECK(t.b == doctest::Approx(4.5));
  CHECK(t.cross == doctest::Approx(2.0));
}

TEST_CASE("cd_holds on the constant line") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  CHECK(cd_holds(g, 0, 0.0, kInfD));
  CHECK_FALSE(cd_holds(g, 0, 0.01, kInfD));
}

TEST_CASE("constant line has exactly zero optimal curvature") {
  for (double c : {0.5, 1.0, 2.0}) {
    LinearGraph g = physical_line(TailModel::constant(c));
    for (double d : {2.0, 3.0, 10.0}) {
      CHECK(std::abs(optimal_curvature(g, 0, DimensionParam(d))) <= 1e-12);
    }
    CHECK(std::abs(optimal_curvature(g, 0, kInfD)) <= 1e-12);
  }
}

TEST_CASE("exponential family closed form at n = 0") {
  LinearGraph g = exp24();
  double expected = 2.625 - std::sqrt(5.515625);
  CHECK(optimal_curvature(g, 0, kInfD) == doctest::Approx(expected).epsilon(1e-12));
  // Cross-check through the PSD bisection oracle.
  LinearGraphView view(g);
  CHECK(optimal_curvature_psd(view, 0, kInfD) ==
        doctest::Approx(expected).epsilon(1e-7));
}

TEST_CASE("exponential family curvature doubles per vertex") {
  LinearGraph g = exp24();
  double k0 = optimal_curvature(g, 0, kInfD);
  double prev = k0;
  for (long n = 1; n <= 30; ++n) {
    double k = optimal_curvature(g, n, kInfD);
    CHECK(k == doctest::Approx(2.0 * prev).epsilon(1e-9));
    prev = k;
  }
  CHECK(optimal_curvature(g, 30, kInfD) ==
        doctest::Approx(std::pow(2.0, 30) * k0).epsilon(1e-9));
}

TEST_CASE("cd monotonicity in K") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    LinearGraph g = random_window(rng);
    double k = optimal_curvature(g, 1, kInfD);
    CHECK(cd_holds(g, 1, k - 1e-6, kInfD));
    CHECK(cd_holds(g, 1, k - 10.0, kInfD));
    CHECK_FALSE(cd_holds(g, 1, k + 1e-6, kInfD));
    CHECK_FALSE(cd_holds(g, 1, k + 1.0, kInfD));
  }
}

TEST_CASE("dimension monotonicity of K*") {
  std::mt19937 rng(29);
  std::vector<DimensionParam> dims{DimensionParam(2.0), DimensionParam(3.0),
                                   DimensionParam(6.0), DimensionParam(50.0),
                                   kInfD};
  for (int trial = 0; trial < 50; ++trial) {
    LinearGraph g = random_window(rng);
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& d : dims) {
      double k = optimal_curvature(g, 0, d);
      CHECK(k >= prev - 1e-10);
      prev = k;
    }
  }
}

TEST_CASE("closed form agrees with the PSD oracle") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dpick(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    LinearGraph g = random_window(rng);
    DimensionParam d = kInfD;
    switch (dpick(rng)) {
      case 0: d = DimensionParam(2.0); break;
      case 1: d = DimensionParam(2.5); break;
      case 2: d = DimensionParam(7.0); break;
      default: break;
    }
    LinearGraphView view(g);
    for (long n : {-4L, 0L, 3L, 8L}) {
      double k_closed = optimal_curvature(g, n, d);
      double k_psd = optimal_curvature_psd(view, n, d);
      CHECK(k_closed == doctest::Approx(k_psd).epsilon(1e-8));
    }
  }
}

TEST_CASE("PSD oracle is the authority below dimension two") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  DimensionParam d(1.0);
  // At D = 1 the (Delta f)^2 penalty is strong; CD(0,1) fails on the
  // constant line but some negative K works.
  CHECK_FALSE(cd_holds(g, 0, 0.0, d));
  LinearGraphView view(g);
  double k = optimal_curvature_psd(view, 0, d);
  CHECK(k < 0.0);
  CHECK(cd_holds(g, 0, k - 1e-6, d));
}

TEST_CASE("scaling w and m together changes nothing") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    LinearGraph g = random_window(rng);
    if (g.measure_spec().kind != MeasureSpec::Kind::Explicit) continue;
    double lambda = 3.7;
    WeightModel w = g.weights();
    for (double& v : w.prefix) v *= lambda;
    SequenceModel m = g.measure_spec().values;
    for (double& v : m.prefix) v *= lambda;
    LinearGraph scaled(g.support(), std::move(w),
                       MeasureSpec::explicit_(std::move(m)));
    for (long n = g.support().lo; n <= g.support().hi; ++n) {
      CHECK(scaled.degrees(n).d_plus ==
            doctest::Approx(g.degrees(n).d_plus).epsilon(1e-12));
      CHECK(optimal_curvature(scaled, n, kInfD) ==
            doctest::Approx(optimal_curvature(g, n, kInfD)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ollivier curvature") {
  LinearGraph flat = physical_line(TailModel::constant(2.0));
  CHECK(ollivier(flat, 0) == doctest::Approx(0.0));
  CHECK(ollivier(flat, 5) == doctest::Approx(0.0));

  LinearGraph affine = physical_half_line(TailModel::affine(1.0, 1.0));
  for (long n = 1; n <= 10; ++n)
    CHECK(ollivier(affine, n) == doctest::Approx(0.0));

  LinearGraph bumpy = physical_half_line({1.0, 3.0, 4.0});
  CHECK(ollivier(bumpy, 1) == doctest::Approx(1.0));
}

TEST_CASE("ollivier bridge to CD") {
  LinearGraph flat = physical_line(TailModel::constant(1.0));
  auto k = ollivier_cd_bound(flat, 3);
  REQUIRE(k.has_value());
  CHECK(*k == doctest::Approx(0.0));
  CHECK(cd_holds(flat, 3, *k, kInfD));

  LinearGraph conc = physical_half_line(TailModel::power(1.0, 0.5, 3));
  auto k5 = ollivier_cd_bound(conc, 5);
  REQUIRE(k5.has_value());
  CHECK(*k5 >= 0.0);
  CHECK(cd_holds(conc, 5, *k5, kInfD));

  // Log-concavity failure: m(4) m(6) > m(5)^2.
  SequenceModel m;
  m.prefix = {1, 1, 1, 1, 1, 1, 2, 1, 1, 1};
  m.tail = TailModel::constant(1.0);
  LinearGraph g(Support::half_line(), WeightModel{{}, TailModel::constant(1.0)},
                MeasureSpec::explicit_(std::move(m)));
  CHECK_FALSE(ollivier_cd_bound(g, 5).has_value());
}

TEST_CASE("ollivier bridge holds whenever applicable") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    LinearGraph g = random_window(rng);
    for (long n = -3; n <= 7; ++n) {
      auto k = ollivier_cd_bound(g, n);
      if (k) CHECK(cd_holds(g, n, *k, kInfD));
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(1.0) == doctest::Approx(1.0));
  CHECK(std::isinf(phi(0.2)));
  CHECK(phi(0.2) < 0.0);
  CHECK(std::isinf(phi(0.25)));
  CHECK(phi(0.9) == doctest::Approx(0.25 * (7.0 - 9.0 / 2.6)).epsilon(1e-12));
  CHECK_THROWS_AS((void)phi(0.0), Error);
  CHECK_THROWS_AS((void)phi(-1.0), Error);
}

TEST_CASE("F and G conventions") {
  CHECK(F_fn(0.5, 0.5, 0.0, kInfD) == doctest::Approx(1.0));
  CHECK(G_fn(0.5, 0.5, 0.0, kInfD) == doctest::Approx(1.0));
  CHECK(F_fn(0.0, 0.5, 0.0, DimensionParam(5.0)) == doctest::Approx(0.0));
  CHECK(std::isfinite(G_fn(0.0, 0.5, 0.0, DimensionParam(5.0))));
  CHECK(G_fn(0.5, 0.25, 0.0, DimensionParam(4.0)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("normalized dual path agrees with the closed form") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> val(0.5, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    WeightModel w;
    for (int i = 0; i < 12; ++i) w.prefix.push_back(val(rng));
    LinearGraph g(Support::interval(0, 12), std::move(w),
                  MeasureSpec::normalized());
    for (const auto& d : {DimensionParam(2.0), DimensionParam(4.0), kInfD}) {
      for (long n : {0L, 3L, 7L}) {
        double lhs = optimal_curvature_normalized(g, n, d);
        double rhs = optimal_curvature(g, n, d);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("find_cd_violation") {
  LinearGraph flat = physical_line(TailModel::constant(1.0));
  CHECK_FALSE(find_cd_violation(flat, 0.0, kInfD, -20, 20).has_value());

  // One weight bumped by 10% on a [-50, 50] window.
  WeightModel w;
  for (long n = -50; n < 50; ++n) w.prefix.push_back(n == 0 ? 1.1 : 1.0);
  LinearGraph bumped(Support::interval(-50, 50), std::move(w),
                     MeasureSpec::physical());
  auto v = find_cd_violation(bumped, 0.0, kInfD, -40, 40);
  REQUIRE(v.has_value());
  CHECK(std::abs(v->vertex) <= 2);
  CHECK(v->slack < 0.0);
}

TEST_CASE("curvature profile") {
  LinearGraph g = exp24();
  CurvatureProfile p = curvature_profile(g, 0, 10, kInfD);
  REQUIRE(p.rows.size() == 11);
  for (std::size_t i = 1; i < p.rows.size(); ++i) {
    CHECK(p.rows[i].k_star ==
          doctest::Approx(2.0 * p.rows[i - 1].k_star).epsilon(1e-9));
  }
  std::string csv = p.to_csv();
  CHECK(csv.rfind("n,d_minus,d_plus,p,kappa_right,k_star", 0) == 0);

  CurvatureProfile empty = curvature_profile(g, 5, 4, kInfD);
  CHECK(empty.rows.empty());
}

TEST_CASE("isolated vertex is unconstrained") {
  SequenceModel m;
  m.prefix = {1.0};
  LinearGraph g(Support::interval(0, 0), WeightModel{{}, TailModel::undecidable()},
                MeasureSpec::explicit_(std::move(m)));
  CHECK(std::isinf(optimal_curvature(g, 0, kInfD)));
  CHECK(optimal_curvature(g, 0, kInfD) > 0.0);
}
