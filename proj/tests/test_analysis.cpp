#include <doctest.h>

#include <cmath>

#include "curvelab/analysis.hpp"
#include "curvelab/curvature.hpp"
#include "util.hpp"

using namespace curvelab;
using namespace curvelab::testutil;

namespace {

Verdict verdict_of(const std::vector<SeriesVerdict>& vs, SeriesProperty p) {
  for (const auto& v : vs)
    if (v.property == p) return v.verdict;
  FAIL("property missing");
  return Verdict::Undecided;
}

LinearGraph exp24() {
  SequenceModel m;
  m.tail = TailModel::exponential(1.0, 0.25);
  return LinearGraph(Support::half_line(),
                     WeightModel{{}, TailModel::exponential(1.0, 0.5)},
                     MeasureSpec::explicit_(std::move(m)));
}

}  // namespace

TEST_CASE("series criteria on power weights") {
  LinearGraph sq = physical_half_line(TailModel::power(1.0, 2.0, 1));
  auto v = series_tests(sq);
  CHECK(verdict_of(v, SeriesProperty::Complete) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::StochasticallyComplete) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::Recurrent) == Verdict::No);

  LinearGraph cu = physical_half_line(TailModel::power(1.0, 3.0, 1));
  CHECK(verdict_of(series_tests(cu), SeriesProperty::StochasticallyComplete) ==
        Verdict::No);
}

TEST_CASE("series criteria on constant weights") {
  LinearGraph g = physical_half_line(TailModel::constant(3.0));
  auto v = series_tests(g);
  CHECK(verdict_of(v, SeriesProperty::Complete) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::StochasticallyComplete) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::Recurrent) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::FiniteVolume) == Verdict::No);
}

TEST_CASE("exponential family is non-Feller with finite volume") {
  auto v = series_tests(exp24());
  CHECK(verdict_of(v, SeriesProperty::FiniteVolume) == Verdict::Yes);
  CHECK(verdict_of(v, SeriesProperty::Feller) == Verdict::No);
}

TEST_CASE("undecidable tails stay undecided") {
  LinearGraph g = physical_half_line({1.0, 2.0, 3.0});
  auto v = series_tests(g);
  CHECK(verdict_of(v, SeriesProperty::Complete) == Verdict::Undecided);
  CHECK(verdict_of(v, SeriesProperty::Recurrent) == Verdict::Undecided);
}

TEST_CASE("series tests reject non-physical completeness questions") {
  LinearGraph g = normalized_half_line(TailModel::constant(1.0));
  auto v = series_tests(g);
  for (const auto& entry : v) {
    CHECK(entry.property != SeriesProperty::Complete);
    CHECK(entry.property != SeriesProperty::Recurrent);
  }
}

TEST_CASE("cutoff functions") {
  LinearGraph g = physical_half_line(TailModel::constant(1.0));
  LocalFunction eta = cutoff_function(g, 4);
  CHECK(eta(0) == 1.0);
  CHECK(eta(5) == 0.0);
  CHECK(eta(4) >= 0.0);
  for (long n = 0; n <= 8; ++n) CHECK(gamma(g, eta, n) <= 0.25 + 1e-12);

  LocalFunction eta100 = cutoff_function(g, 100);
  long support_len = long(eta100.values.size());
  CHECK(support_len >= 18);
  CHECK(support_len <= 23);
  // eta_k grows pointwise in k.
  for (long n = 0; n <= 8; ++n) CHECK(eta100(n) >= eta(n) - 1e-12);

  LinearGraph bad = physical_half_line(TailModel::power(1.0, 4.0, 1));
  CHECK_THROWS_AS((void)cutoff_function(bad, 4), Error);
}

TEST_CASE("intrinsic path metric") {
  LinearGraph g = physical_half_line(TailModel::constant(1.0));
  MetricTable t = intrinsic_sigma(g, 20);
  CHECK(t.edge_len[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(t.edge_len[7] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(is_intrinsic(g, t));

  MetricTable inflated = t;
  inflated.edge_len[3] *= 1.5;
  CHECK_FALSE(is_intrinsic(g, inflated));
}

TEST_CASE("sigma equals 1/sqrt(w_n + w_{n+1}) for non-decreasing physical") {
  LinearGraph g = physical_half_line(TailModel::affine(0.5, 1.0));
  MetricTable t = intrinsic_sigma(g, 30);
  for (long n = 1; n < 29; ++n) {
    CHECK(t.edge_len[std::size_t(n)] ==
          doctest::Approx(1.0 / std::sqrt(g.weight(n) + g.weight(n + 1))));
  }
}

TEST_CASE("ball volume lower bound under CD(0,inf)") {
  LinearGraph g = physical_half_line(TailModel::constant(4.0));
  MetricTable t = intrinsic_sigma(g, 100);
  for (long r = 1; r <= 10; ++r) {
    CHECK(ball_volume(g, t, double(r)) >=
          std::floor(std::sqrt(g.weight(0)) * double(r)));
  }
  CHECK_THROWS_AS((void)ball_volume(g, t, 1e9), Error);
}

TEST_CASE("second differences under CD(K,inf)") {
  LinearGraph affine = physical_half_line(TailModel::affine(0.5, 1.0));
  CHECK(second_difference_check(affine, 0.0, 2, 30));

  LinearGraph conc = physical_half_line(TailModel::power(1.0, 0.5, 3));
  CHECK(second_difference_check(conc, 0.0, 2, 30));
}

TEST_CASE("weight growth constants") {
  LinearGraph g = physical_half_line(TailModel::affine(0.5, 1.0));
  WeightGrowthConstants c = weight_growth_check(g, 0.0, 0, 40);
  CHECK(c.c_lin <= 1.0 + 1e-12);

  LinearGraph flat = physical_half_line(TailModel::constant(1.0));
  CHECK(weight_growth_check(flat, 0.0, 0, 40).c_lin == doctest::Approx(1.0));
}

TEST_CASE("volume growth classification") {
  LinearGraph flat = physical_half_line(TailModel::constant(2.0));
  GrowthClass a = classify_volume_growth(flat);
  CHECK(a.label == GrowthLabel::Linear);
  CHECK(a.a_g == 0.0);

  LinearGraph conc = physical_half_line(TailModel::power(1.0, 0.5, 3));
  CHECK(classify_volume_growth(conc).label == GrowthLabel::Intermediate);

  LinearGraph affine = physical_half_line(TailModel::affine(0.5, 1.0));
  GrowthClass c = classify_volume_growth(affine);
  CHECK(c.label == GrowthLabel::Quadratic);
  CHECK(c.a_g == doctest::Approx(0.5));

  LinearGraph undec = physical_half_line({1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(classify_volume_growth(undec).label == GrowthLabel::Undecided);
}

TEST_CASE("growth label matches direct ball counting") {
  LinearGraph affine = physical_half_line(TailModel::affine(0.5, 1.0));
  MetricTable t = intrinsic_sigma(affine, 4000);
  for (long r = 10; r <= 60; r += 10) {
    double vol = ball_volume(affine, t, double(r));
    CHECK(vol / (double(r) * double(r)) > 0.05);
    CHECK(vol / (double(r) * double(r)) < 20.0);
  }
}

TEST_CASE("concave envelopes") {
  LinearGraph affine = physical_half_line(TailModel::affine(0.5, 1.0));
  ConcaveEnvelopes env = concave_envelopes(affine, 1, 41);
  CHECK(env.a_g == doctest::Approx(0.5));
  CHECK(env.bound_ok);
  CHECK(env.max_deviation <= 3.0 * env.a_g + 0.05);
}

TEST_CASE("stochastic completeness from curvature decay") {
  LinearGraph flat = physical_half_line(TailModel::constant(1.0));
  MetricTable t = intrinsic_sigma(flat, 120);
  ScDecayReport r = sc_from_curvature_decay(flat, t, 0, 100);
  CHECK(r.hypothesis_ok);
  CHECK(r.constant == doctest::Approx(0.0));
  CHECK(r.verdict.verdict == Verdict::Yes);
  CHECK(r.theorem_consistent);

  LinearGraph cu = physical_half_line(TailModel::power(1.0, 3.0, 1));
  MetricTable tc = intrinsic_sigma(cu, 160);
  ScDecayReport rc = sc_from_curvature_decay(cu, tc, 0, 140);
  CHECK(rc.verdict.verdict == Verdict::No);
  CHECK_FALSE(rc.hypothesis_ok);  // contrapositive: the constant blows up
  CHECK(rc.theorem_consistent);
}

TEST_CASE("build from concave samples") {
  SUBCASE("square root") {
    std::vector<ConcaveSample> s;
    for (long x = 0; x <= 80; ++x)
      s.push_back({double(x), std::sqrt(double(x) + 1.0)});
    LinearGraph g = build_from_concave(s);
    for (long n = 0; n <= 40; ++n)
      CHECK(g.weight(n) == doctest::Approx(std::sqrt(double(n) + 3.0)));
    for (long n = 1; n <= 40; ++n)
      CHECK(cd_holds(g, n, 0.0, DimensionParam::infinite()));
  }
  SUBCASE("affine") {
    std::vector<ConcaveSample> s{{0.0, 1.0}, {100.0, 101.0}};
    LinearGraph g = build_from_concave(s);
    for (long n = 0; n <= 60; ++n)
      CHECK(g.weight(n) == doctest::Approx(double(n) + 3.0));
    for (long n = 1; n <= 60; ++n)
      CHECK(ollivier(g, n) == doctest::Approx(0.0));
  }
  SUBCASE("constant") {
    std::vector<ConcaveSample> s{{0.0, 2.5}};
    LinearGraph g = build_from_concave(s);
    CHECK(g.weight(0) == doctest::Approx(2.5));
    CHECK(g.weights().tail.kind == TailModel::Kind::Constant);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(
        (void)build_from_concave({{0.0, 1.0}, {1.0, -1.0}}), Error);
    CHECK_THROWS_AS(
        (void)build_from_concave({{0.0, 1.0}, {1.0, 2.0}, {2.0, 4.0}}), Error);
  }
}

TEST_CASE("exponential family construction guards") {
  CHECK_THROWS_AS((void)exp_family(2.0, 2.0), Error);
  CHECK_THROWS_AS((void)exp_family(0.5, 2.0), Error);
  LinearGraph g = exp_family(2.0, 4.0);
  CHECK(g.weight(3) == doctest::Approx(0.125));
  CHECK(g.measure(2) == doctest::Approx(0.0625));
}

TEST_CASE("positive certificate for (2, 4)") {
  PositiveCertificate cert = positive_certificate(2.0, 4.0);
  CHECK(cert.K > 0.0);
  CHECK(std::isfinite(cert.D));
  CHECK(std::abs(cert.identity_residual) <= 1e-9);
  LinearGraph g = exp_family(2.0, 4.0);
  DimensionParam d(cert.D);
  for (long n = 0; n <= 100; ++n) CHECK(cd_holds(g, n, cert.K, d));
}

TEST_CASE("resistance partial sums") {
  LinearGraph unit = physical_half_line(TailModel::constant(1.0));
  CHECK(resistance(unit, 10) == doctest::Approx(10.0));

  LinearGraph lin = physical_half_line(TailModel::affine(1.0, 1.0));
  CHECK(resistance(lin, 3) == doctest::Approx(11.0 / 6.0));

  LinearGraph geo = physical_half_line(TailModel::exponential(1.0, 2.0));
  CHECK(resistance(geo, 400) == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)resistance(geo, 0), Error);
}
