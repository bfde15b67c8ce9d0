#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "curvelab/errors.hpp"

namespace curvelab {

/// Vertex set of a linear graph: the half line N0, the full line Z, or a
/// finite integer interval.
struct Support {
  enum class Kind { HalfLine, Line, Interval };

  Kind kind = Kind::HalfLine;
  long lo = 0;
  long hi = 0;

  static Support half_line() { return {Kind::HalfLine, 0, 0}; }
  static Support line() { return {Kind::Line, 0, 0}; }
  static Support interval(long lo, long hi) {
    if (lo > hi) fail(ErrorCode::EmptyInterval, "interval requires lo <= hi");
    return {Kind::Interval, lo, hi};
  }

  bool contains(long n) const {
    switch (kind) {
      case Kind::HalfLine: return n >= 0;
      case Kind::Line: return true;
      case Kind::Interval: return n >= lo && n <= hi;
    }
    return false;
  }

  bool bounded_below() const { return kind != Kind::Line; }
  bool bounded_above() const { return kind == Kind::Interval; }

  /// Smallest vertex; only defined when bounded below.
  long min_vertex() const {
    if (kind == Kind::Line)
      fail(ErrorCode::Unsupported, "line support has no minimal vertex");
    return kind == Kind::HalfLine ? 0 : lo;
  }
};

/// Symbolic tail of a weight or measure sequence.  Tails keep series
/// convergence decisions exact; an Undecidable tail has no values.
struct TailModel {
  enum class Kind { Constant, Affine, Power, Exponential, Undecidable };

  Kind kind = Kind::Undecidable;
  double c = 1.0;          // Constant / Power / Exponential scale
  double gamma = 0.0;      // Power exponent
  long shift = 0;          // Power shift: c * (n + shift)^gamma
  double slope = 0.0;      // Affine
  double intercept = 1.0;  // Affine
  double base = 1.0;       // Exponential: c * base^n

  static TailModel constant(double c) { return {Kind::Constant, c}; }
  static TailModel affine(double slope, double intercept) {
    TailModel t;
    t.kind = Kind::Affine;
    t.slope = slope;
    t.intercept = intercept;
    return t;
  }
  static TailModel power(double c, double gamma, long shift = 0) {
    TailModel t;
    t.kind = Kind::Power;
    t.c = c;
    t.gamma = gamma;
    t.shift = shift;
    return t;
  }
  static TailModel exponential(double c, double base) {
    TailModel t;
    t.kind = Kind::Exponential;
    t.c = c;
    t.base = base;
    return t;
  }
  static TailModel undecidable() { return {}; }

  bool decidable() const { return kind != Kind::Undecidable; }

  double eval(long n) const {
    switch (kind) {
      case Kind::Constant: return c;
      case Kind::Affine: return slope * double(n) + intercept;
      case Kind::Power: return c * std::pow(double(n + shift), gamma);
      case Kind::Exponential: return c * std::pow(base, double(n));
      case Kind::Undecidable:
        fail(ErrorCode::Unsupported, "undecidable tail has no values");
    }
    return 0.0;
  }
};

/// Finitely tabulated prefix plus a symbolic tail.  Index 0 is the first
/// tabulated entry; the tail covers every index at or beyond the prefix.
struct SequenceModel {
  std::vector<double> prefix;
  TailModel tail = TailModel::undecidable();

  double eval(long idx) const {
    if (idx >= 0 && std::size_t(idx) < prefix.size()) return prefix[idx];
    return tail.eval(idx);
  }
};

using WeightModel = SequenceModel;

struct MeasureSpec {
  enum class Kind { Physical, Normalized, Explicit };

  Kind kind = Kind::Physical;
  SequenceModel values;  // Explicit only

  static MeasureSpec physical() { return {Kind::Physical, {}}; }
  static MeasureSpec normalized() { return {Kind::Normalized, {}}; }
  static MeasureSpec explicit_(SequenceModel values) {
    return {Kind::Explicit, std::move(values)};
  }
};

struct Degrees {
  double d_minus = 0.0;
  double d_plus = 0.0;
  double p = 0.0;    // d_plus - 1/2
  double deg = 0.0;  // d_minus + d_plus
};

/// A weighted linear graph (V, w, m).  Edge weights are indexed by the left
/// vertex of the edge: weight(n) = w(n, n+1).  Prefix index 0 corresponds to
/// the minimal vertex for bounded supports and to vertex 0 on the line.
class LinearGraph {
public:
  LinearGraph(Support support, WeightModel weights, MeasureSpec measure)
      : support_(support),
        weights_(std::move(weights)),
        measure_(std::move(measure)),
        base_(support.bounded_below() ? support.min_vertex() : 0) {}

  const Support& support() const { return support_; }
  const WeightModel& weights() const { return weights_; }
  const MeasureSpec& measure_spec() const { return measure_; }
  long prefix_base() const { return base_; }

  bool contains(long n) const { return support_.contains(n); }

  bool has_edge(long n) const {
    return support_.contains(n) && support_.contains(n + 1);
  }

  /// w(n, n+1).  Throws EdgeOutOfSupport if the edge does not exist.
  double weight(long n) const {
    if (!has_edge(n))
      fail(ErrorCode::EdgeOutOfSupport, "edge (" + std::to_string(n) + "," +
                                            std::to_string(n + 1) +
                                            ") not in support");
    double w = weights_.eval(n - base_);
    if (!(w > 0.0))
      fail(ErrorCode::InvalidArgument,
           "non-positive edge weight at n=" + std::to_string(n));
    return w;
  }

  double measure(long n) const {
    require_vertex(n);
    double m = 0.0;
    switch (measure_.kind) {
      case MeasureSpec::Kind::Physical:
        m = 1.0;
        break;
      case MeasureSpec::Kind::Normalized:
        if (has_edge(n - 1)) m += weight(n - 1);
        if (has_edge(n)) m += weight(n);
        break;
      case MeasureSpec::Kind::Explicit:
        m = measure_.values.eval(n - base_);
        break;
    }
    if (!(m > 0.0))
      fail(ErrorCode::InvalidArgument,
           "non-positive vertex measure at n=" + std::to_string(n));
    return m;
  }

  Degrees degrees(long n) const {
    require_vertex(n);
    Degrees d;
    double m = measure(n);
    if (has_edge(n - 1)) d.d_minus = weight(n - 1) / m;
    if (has_edge(n)) d.d_plus = weight(n) / m;
    d.p = d.d_plus - 0.5;
    d.deg = d.d_minus + d.d_plus;
    return d;
  }

  bool is_physical() const {
    return measure_.kind == MeasureSpec::Kind::Physical;
  }
  bool is_normalized() const {
    return measure_.kind == MeasureSpec::Kind::Normalized;
  }

  void require_vertex(long n) const {
    if (!support_.contains(n))
      fail(ErrorCode::VertexOutOfSupport,
           "vertex " + std::to_string(n) + " not in support");
  }

private:
  Support support_;
  WeightModel weights_;
  MeasureSpec measure_;
  long base_;
};

/// A finitely supported function on the vertices.
struct LocalFunction {
  long support_lo = 0;
  std::vector<double> values;

  LocalFunction() = default;
  LocalFunction(long lo, std::vector<double> vals)
      : support_lo(lo), values(std::move(vals)) {}

  double operator()(long n) const {
    long idx = n - support_lo;
    if (idx < 0 || std::size_t(idx) >= values.size()) return 0.0;
    return values[std::size_t(idx)];
  }

  static LocalFunction indicator(long n) { return LocalFunction(n, {1.0}); }
};

/// Dimension parameter D in (0, inf]; c_D = 1 - 2/D with c_inf = 1.
struct DimensionParam {
  double value = std::numeric_limits<double>::infinity();

  DimensionParam() = default;
  explicit DimensionParam(double v) : value(v) {
    if (!(v > 0.0))
      fail(ErrorCode::InvalidArgument, "dimension must be positive");
  }

  static DimensionParam infinite() { return DimensionParam(); }

  bool is_inf() const { return std::isinf(value); }
  double cd() const { return is_inf() ? 1.0 : 1.0 - 2.0 / value; }
  double c4d() const { return is_inf() ? 1.0 : 1.0 - 4.0 / value; }
  double inv() const { return is_inf() ? 0.0 : 1.0 / value; }
};

double laplacian(const LinearGraph& g, const LocalFunction& f, long n);

/// Carre du champ, summed form: 1/(2m) sum_y w (f(y)-f(x)) (g(y)-g(x)).
double gamma(const LinearGraph& g, const LocalFunction& f,
             const LocalFunction& h, long n);
double gamma(const LinearGraph& g, const LocalFunction& f, long n);

/// Carre du champ via the operator identity (Delta(fg) - f Delta g - g Delta f)/2.
double gamma_operator_form(const LinearGraph& g, const LocalFunction& f,
                           const LocalFunction& h, long n);

double gamma2(const LinearGraph& g, const LocalFunction& f, long n);

/// Restriction to [a, b]; keeps the parent measure unless renormalize is set.
LinearGraph restrict_graph(const LinearGraph& g, long a, long b,
                           bool renormalize = false);

/// Adjacency interface for the generic CD oracle (linear and rooted graphs).
class GraphView {
public:
  virtual ~GraphView() = default;
  virtual std::vector<std::pair<long, double>> neighbors(long v) const = 0;
  virtual double measure(long v) const = 0;
};

class LinearGraphView final : public GraphView {
public:
  explicit LinearGraphView(const LinearGraph& g) : g_(g) {}

  std::vector<std::pair<long, double>> neighbors(long v) const override {
    std::vector<std::pair<long, double>> out;
    if (g_.has_edge(v - 1)) out.emplace_back(v - 1, g_.weight(v - 1));
    if (g_.has_edge(v)) out.emplace_back(v + 1, g_.weight(v));
    return out;
  }

  double measure(long v) const override { return g_.measure(v); }

private:
  const LinearGraph& g_;
};

}  // namespace curvelab
