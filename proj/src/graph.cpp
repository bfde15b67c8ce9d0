#include "curvelab/graph.hpp"

namespace curvelab {

double laplacian(const LinearGraph& g, const LocalFunction& f, long n) {
  g.require_vertex(n);
  double acc = 0.0;
  if (g.has_edge(n - 1)) acc += g.weight(n - 1) * (f(n - 1) - f(n));
  if (g.has_edge(n)) acc += g.weight(n) * (f(n + 1) - f(n));
  return acc / g.measure(n);
}

double gamma(const LinearGraph& g, const LocalFunction& f,
             const LocalFunction& h, long n) {
  g.require_vertex(n);
  double acc = 0.0;
  if (g.has_edge(n - 1))
    acc += g.weight(n - 1) * (f(n - 1) - f(n)) * (h(n - 1) - h(n));
  if (g.has_edge(n))
    acc += g.weight(n) * (f(n + 1) - f(n)) * (h(n + 1) - h(n));
  return 0.5 * acc / g.measure(n);
}

double gamma(const LinearGraph& g, const LocalFunction& f, long n) {
  return gamma(g, f, f, n);
}

double gamma_operator_form(const LinearGraph& g, const LocalFunction& f,
                           const LocalFunction& h, long n) {
  g.require_vertex(n);
  // Evaluate Delta(fh), f Delta h, h Delta f at n without materializing the
  // product as a LocalFunction.
  double m = g.measure(n);
  double d_fh = 0.0, d_f = 0.0, d_h = 0.0;
  auto add = [&](long y, double w) {
    d_fh += w * (f(y) * h(y) - f(n) * h(n));
    d_f += w * (f(y) - f(n));
    d_h += w * (h(y) - h(n));
  };
  if (g.has_edge(n - 1)) add(n - 1, g.weight(n - 1));
  if (g.has_edge(n)) add(n + 1, g.weight(n));
  return 0.5 * (d_fh - f(n) * d_h - h(n) * d_f) / m;
}

double gamma2(const LinearGraph& g, const LocalFunction& f, long n) {
  g.require_vertex(n);
  // Gamma2(f)(n) = 1/2 Delta Gamma(f)(n) - Gamma(f, Delta f)(n).  Both terms
  // only need values on the 2-ball of n.
  double m = g.measure(n);
  double gamma_n = gamma(g, f, n);

  double d_gamma = 0.0;   // Delta Gamma(f)(n) * m(n)
  double g_fdf = 0.0;     // Gamma(f, Delta f)(n) * 2 m(n)
  double lap_n = laplacian(g, f, n);
  auto add = [&](long y, double w) {
    d_gamma += w * (gamma(g, f, y) - gamma_n);
    g_fdf += w * (f(y) - f(n)) * (laplacian(g, f, y) - lap_n);
  };
  if (g.has_edge(n - 1)) add(n - 1, g.weight(n - 1));
  if (g.has_edge(n)) add(n + 1, g.weight(n));
  return 0.5 * d_gamma / m - 0.5 * g_fdf / m;
}

LinearGraph restrict_graph(const LinearGraph& g, long a, long b,
                           bool renormalize) {
  if (a >= b) fail(ErrorCode::EmptyInterval, "restriction requires a < b");
  g.require_vertex(a);
  g.require_vertex(b);

  WeightModel w;
  w.prefix.reserve(std::size_t(b - a));
  for (long n = a; n < b; ++n) w.prefix.push_back(g.weight(n));
  w.tail = TailModel::undecidable();

  if (renormalize)
    return LinearGraph(Support::interval(a, b), std::move(w),
                       MeasureSpec::normalized());

  SequenceModel m;
  m.prefix.reserve(std::size_t(b - a + 1));
  for (long n = a; n <= b; ++n) m.prefix.push_back(g.measure(n));
  m.tail = TailModel::undecidable();
  return LinearGraph(Support::interval(a, b), std::move(w),
                     MeasureSpec::explicit_(std::move(m)));
}

}  // namespace curvelab
