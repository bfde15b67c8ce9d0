#include <doctest.h>

#include <random>

#include "curvelab/graph.hpp"
#include "curvelab/json_io.hpp"
#include "util.hpp"

using namespace curvelab;
using namespace curvelab::testutil;

TEST_CASE("degrees on the constant physical line") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  Degrees d = g.degrees(0);
  CHECK(d.d_minus == 1.0);
  CHECK(d.d_plus == 1.0);
  CHECK(d.p == 0.5);
  CHECK(d.deg == 2.0);
}

TEST_CASE("degrees at the normalized half-line boundary") {
  LinearGraph g = normalized_half_line(TailModel::constant(1.0));
  Degrees d0 = g.degrees(0);
  CHECK(d0.d_minus == 0.0);
  CHECK(d0.d_plus == 1.0);
  CHECK(d0.p == 0.5);
  CHECK(d0.deg == 1.0);

  Degrees d3 = g.degrees(3);
  CHECK(d3.d_minus == 0.5);
  CHECK(d3.d_plus == 0.5);
  CHECK(d3.p == 0.0);
  CHECK(d3.deg == 1.0);
}

TEST_CASE("normalized graphs have Deg == 1 everywhere") {
  LinearGraph g = normalized_half_line(TailModel::affine(0.25, 1.0));
  for (long n = 0; n <= 40; ++n)
    CHECK(g.degrees(n).deg == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vertex out of support") {
  LinearGraph g = physical_half_line(TailModel::constant(1.0));
  CHECK_THROWS_AS((void)g.degrees(-1), Error);
}

TEST_CASE("laplacian, gamma, gamma2 on the identity function") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  std::vector<double> vals;
  for (long k = -5; k <= 5; ++k) vals.push_back(double(k));
  LocalFunction f(-5, vals);
  CHECK(laplacian(g, f, 0) == doctest::Approx(0.0));
  CHECK(gamma(g, f, 0) == doctest::Approx(1.0));
  CHECK(gamma2(g, f, 0) == doctest::Approx(0.0));
}

TEST_CASE("zero function") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  LocalFunction f;
  CHECK(laplacian(g, f, 0) == 0.0);
  CHECK(gamma(g, f, 0) == 0.0);
  CHECK(gamma2(g, f, 0) == 0.0);
}

TEST_CASE("indicator at the origin") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  LocalFunction f = LocalFunction::indicator(0);
  CHECK(laplacian(g, f, 0) == doctest::Approx(-2.0));
  CHECK(gamma(g, f, 0) == doctest::Approx(1.0));
}

TEST_CASE("gamma agrees with the operator form") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    LinearGraph g = random_window(rng);
    std::vector<double> fv, hv;
    for (int i = 0; i < 13; ++i) {
      fv.push_back(val(rng));
      hv.push_back(val(rng));
    }
    LocalFunction f(-4, fv), h(-4, hv);
    for (long n = -3; n <= 7; ++n) {
      CHECK(gamma(g, f, h, n) ==
            doctest::Approx(gamma_operator_form(g, f, h, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("operators are invariant under adding constants") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  LinearGraph g = random_window(rng);
  std::vector<double> fv;
  for (int i = 0; i < 13; ++i) fv.push_back(val(rng));
  LocalFunction f(-4, fv);
  std::vector<double> shifted = fv;
  for (double& v : shifted) v += 3.25;
  // Shifting only on the window is a true constant shift for interior n.
  LocalFunction fs(-4, shifted);
  for (long n = -2; n <= 6; ++n) {
    CHECK(laplacian(g, f, n) == doctest::Approx(laplacian(g, fs, n)).epsilon(1e-12));
    CHECK(gamma(g, f, n) == doctest::Approx(gamma(g, fs, n)).epsilon(1e-12));
    CHECK(gamma2(g, f, n) == doctest::Approx(gamma2(g, fs, n)).epsilon(1e-12));
  }
}

TEST_CASE("operators only see the 2-ball") {
  LinearGraph g = physical_line(TailModel::constant(1.0));
  std::vector<double> fv{1.0, -2.0, 0.5, 3.0, -1.0};
  LocalFunction f(-2, fv);
  std::vector<double> far = fv;
  far.push_back(0.0);
  far.push_back(0.0);
  far.push_back(99.0);  // vertex 5, outside B_2(0)
  LocalFunction f2(-2, far);
  CHECK(laplacian(g, f, 0) == laplacian(g, f2, 0));
  CHECK(gamma(g, f, 0) == gamma(g, f2, 0));
  CHECK(gamma2(g, f, 0) == gamma2(g, f2, 0));
}

TEST_CASE("restriction keeps the parent measure") {
  LinearGraph g = normalized_half_line(TailModel::constant(1.0));
  LinearGraph r = restrict_graph(g, 0, 3);
  CHECK(r.support().kind == Support::Kind::Interval);
  CHECK(r.measure(0) == 1.0);
  CHECK(r.measure(1) == 2.0);
  CHECK(r.measure(2) == 2.0);
  CHECK(r.measure(3) == 2.0);
  CHECK(r.weight(0) == 1.0);
  CHECK_THROWS_AS((void)r.weight(3), Error);
}

TEST_CASE("minimal restriction and degenerate input") {
  LinearGraph g = physical_half_line(TailModel::constant(2.0));
  LinearGraph r = restrict_graph(g, 4, 5);
  CHECK(r.weight(4) == 2.0);
  CHECK_THROWS_AS((void)restrict_graph(g, 3, 3), Error);
}

TEST_CASE("tail model evaluation") {
  CHECK(TailModel::power(2.0, 0.5, 3).eval(1) == doctest::Approx(4.0));
  CHECK(TailModel::affine(0.5, 1.0).eval(4) == doctest::Approx(3.0));
  CHECK(TailModel::exponential(1.0, 0.5).eval(3) == doctest::Approx(0.125));
  CHECK_THROWS_AS((void)TailModel::undecidable().eval(0), Error);
}

TEST_CASE("graph JSON round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    LinearGraph g = random_window(rng);
    LinearGraph back = parse_graph(graph_to_json(g));
    CHECK(back.support().kind == g.support().kind);
    CHECK(back.support().lo == g.support().lo);
    CHECK(back.support().hi == g.support().hi);
    CHECK(back.measure_spec().kind == g.measure_spec().kind);
    for (long n = g.support().lo; n < g.support().hi; ++n)
      CHECK(back.weight(n) == g.weight(n));
    for (long n = g.support().lo; n <= g.support().hi; ++n)
      CHECK(back.measure(n) == g.measure(n));
  }
}

TEST_CASE("parse errors surface as ParseError") {
  CHECK_THROWS_AS((void)parse_graph("{not json"), Error);
  CHECK_THROWS_AS((void)parse_graph(R"({"support":{"kind":"ring"}})"), Error);
}
