#include "curvelab/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace curvelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Asymptotic class c * base^n * n^degree of a positive sequence; enough to
// decide convergence of all the series criteria exactly.
struct SeriesClass {
  bool decidable = false;
  double base = 1.0;
  double degree = 0.0;
};

SeriesClass tail_class(const TailModel& t) {
  switch (t.kind) {
    case TailModel::Kind::Constant:
      return {true, 1.0, 0.0};
    case TailModel::Kind::Affine:
      return {true, 1.0, t.slope > 0.0 ? 1.0 : 0.0};
    case TailModel::Kind::Power:
      return {true, 1.0, t.gamma};
    case TailModel::Kind::Exponential:
      return {true, t.base, 0.0};
    case TailModel::Kind::Undecidable:
      return {};
  }
  return {};
}

bool series_converges(const SeriesClass& c) {
  return c.base < 1.0 || (c.base == 1.0 && c.degree < -1.0);
}

SeriesClass measure_class(const LinearGraph& g) {
  switch (g.measure_spec().kind) {
    case MeasureSpec::Kind::Physical:
      return {true, 1.0, 0.0};
    case MeasureSpec::Kind::Normalized:
      return tail_class(g.weights().tail);
    case MeasureSpec::Kind::Explicit:
      return tail_class(g.measure_spec().values.tail);
  }
  return {};
}

// Largest index with an evaluable weight, capped by the truncation.
long weight_horizon(const LinearGraph& g, long truncation) {
  if (g.weights().tail.decidable()) return truncation;
  return long(g.weights().prefix.size()) - 1;
}

long measure_horizon(const LinearGraph& g, long truncation) {
  switch (g.measure_spec().kind) {
    case MeasureSpec::Kind::Physical:
      return truncation;
    case MeasureSpec::Kind::Normalized:
      return weight_horizon(g, truncation) - 1;
    case MeasureSpec::Kind::Explicit:
      if (g.measure_spec().values.tail.decidable()) return truncation;
      return long(g.measure_spec().values.prefix.size()) - 1;
  }
  return 0;
}

template <typename Term>
double partial_sum(long lo, long hi, Term term) {
  long double acc = 0.0L;
  for (long n = lo; n <= hi; ++n) {
    double t = 0.0;
    try {
      t = term(n);
    } catch (const Error&) {
      break;  // term underflowed to zero or left the tabulated range
    }
    if (!std::isfinite(t) || acc > 1e300L) return kInf;
    acc += t;
  }
  return double(acc);
}

}  // namespace

const char* to_string(SeriesProperty p) {
  switch (p) {
    case SeriesProperty::Complete: return "complete";
    case SeriesProperty::StochasticallyComplete: return "stochastically_complete";
    case SeriesProperty::Recurrent: return "recurrent";
    case SeriesProperty::Feller: return "feller";
    case SeriesProperty::FiniteVolume: return "finite_volume";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

const char* to_string(GrowthLabel label) {
  switch (label) {
    case GrowthLabel::Linear: return "linear";
    case GrowthLabel::Intermediate: return "intermediate";
    case GrowthLabel::Quadratic: return "quadratic";
    case GrowthLabel::Undecided: return "undecided";
  }
  return "?";
}

std::vector<SeriesVerdict> series_tests(const LinearGraph& g, long truncation) {
  if (g.support().kind != Support::Kind::HalfLine)
    fail(ErrorCode::Unsupported, "series tests are defined on the half line");

  std::vector<SeriesVerdict> out;
  SeriesClass w = tail_class(g.weights().tail);
  long whor = weight_horizon(g, truncation);

  auto decide = [](SeriesClass cls, bool diverging_means_yes) {
    if (!cls.decidable) return Verdict::Undecided;
    bool div = !series_converges(cls);
    return (div == diverging_means_yes) ? Verdict::Yes : Verdict::No;
  };

  if (g.is_physical()) {
    // Completeness: sum 1/sqrt(w_n).
    SeriesVerdict v;
    v.property = SeriesProperty::Complete;
    v.verdict = decide({w.decidable, 1.0 / std::sqrt(w.base), -w.degree / 2.0},
                       true);
    v.truncation = whor;
    v.partial_sum =
        partial_sum(0, whor, [&](long n) { return 1.0 / std::sqrt(g.weight(n)); });
    v.rule = "complete iff sum 1/sqrt(w_n) diverges";
    out.push_back(v);

    // Stochastic completeness: sum n/w_n.
    v = {};
    v.property = SeriesProperty::StochasticallyComplete;
    v.verdict = decide({w.decidable, 1.0 / w.base, 1.0 - w.degree}, true);
    v.truncation = whor;
    v.partial_sum =
        partial_sum(0, whor, [&](long n) { return double(n) / g.weight(n); });
    v.rule = "stochastically complete iff sum n/w_n diverges";
    out.push_back(v);

    // Recurrence: sum 1/w_n (resistance to infinity).
    v = {};
    v.property = SeriesProperty::Recurrent;
    v.verdict = decide({w.decidable, 1.0 / w.base, -w.degree}, true);
    v.truncation = whor;
    v.partial_sum = partial_sum(0, whor, [&](long n) { return 1.0 / g.weight(n); });
    v.rule = "recurrent iff sum 1/w_n diverges";
    out.push_back(v);
  }

  SeriesClass m = measure_class(g);
  long mhor = measure_horizon(g, truncation);
  {
    SeriesVerdict v;
    v.property = SeriesProperty::FiniteVolume;
    v.verdict = decide(m, false);
    v.truncation = mhor;
    v.partial_sum = partial_sum(0, mhor, [&](long n) { return g.measure(n); });
    v.rule = "finite volume iff sum m(n) converges";
    out.push_back(v);
  }

  {
    // Non-Feller test: finite volume together with convergence of
    // sum_n (sum_{k>n} m(k)) / w_n.
    SeriesVerdict v;
    v.property = SeriesProperty::Feller;
    v.truncation = 0;
    if (!w.decidable || !m.decidable) {
      v.verdict = Verdict::Undecided;
      v.rule = "non-Feller test needs decidable tails";
    } else if (!series_converges(m)) {
      v.verdict = Verdict::Undecided;
      v.rule = "non-Feller test requires finite volume";
    } else {
      SeriesClass tail_sum = m.base < 1.0
                                 ? SeriesClass{true, m.base, m.degree}
                                 : SeriesClass{true, 1.0, m.degree + 1.0};
      SeriesClass ratio{true, tail_sum.base / w.base,
                        tail_sum.degree - w.degree};
      if (series_converges(ratio)) {
        v.verdict = Verdict::No;
        v.rule = "finite volume and sum (sum_{k>n} m(k))/w_n converges";
        long hor = std::min(weight_horizon(g, truncation),
                            measure_horizon(g, truncation));
        // Transparency sum with the measure tail accumulated backwards.
        long double tail_acc = 0.0L;
        std::vector<double> tail_vals(std::size_t(hor + 1), 0.0);
        for (long n = hor; n >= 0; --n) {
          tail_vals[std::size_t(n)] = double(tail_acc);
          try {
            tail_acc += g.measure(n);
          } catch (const Error&) {
            // Underflowed terms contribute nothing to the tail sum.
          }
        }
        v.truncation = hor;
        v.partial_sum = partial_sum(0, hor - 1, [&](long n) {
          return tail_vals[std::size_t(n)] / g.weight(n);
        });
      } else {
        v.verdict = Verdict::Undecided;
        v.rule = "sufficient non-Feller criterion does not apply";
      }
    }
    out.push_back(v);
  }
  return out;
}

LocalFunction cutoff_function(const LinearGraph& g, long k) {
  if (!g.is_physical())
    fail(ErrorCode::MeasureKindUnsupported,
         "cutoff construction requires a physical graph");
  if (g.support().kind != Support::Kind::HalfLine)
    fail(ErrorCode::Unsupported, "cutoff construction needs the half line");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");

  SeriesClass w = tail_class(g.weights().tail);
  if (!w.decidable)
    fail(ErrorCode::Unsupported, "cutoff construction needs a decidable tail");
  if (series_converges({true, 1.0 / std::sqrt(w.base), -w.degree / 2.0}))
    fail(ErrorCode::NotComplete,
         "sum 1/sqrt(w_n) converges; no cutoff family exists");

  // Step down on odd edges first, matching the completeness construction.
  std::vector<double> values{1.0};
  double eta = 1.0;
  const long cap = 10'000'000;
  for (long n = 0; n < cap && eta > 0.0; ++n) {
    if (n % 2 == 1)
      eta = std::max(0.0, eta - 1.0 / std::sqrt(double(k) * g.weight(n)));
    values.push_back(eta);
  }
  if (eta > 0.0)
    fail(ErrorCode::AssertionFailed, "cutoff construction did not terminate");
  while (values.size() > 1 && values.back() == 0.0) values.pop_back();
  return LocalFunction(0, std::move(values));
}

MetricTable intrinsic_sigma(const LinearGraph& g, long length) {
  if (length < 1) fail(ErrorCode::InvalidArgument, "length must be >= 1");
  MetricTable t;
  t.edge_len.reserve(std::size_t(length));
  t.dist0.reserve(std::size_t(length) + 1);
  t.dist0.push_back(0.0);
  for (long n = 0; n < length; ++n) {
    double deg = std::max(g.degrees(n).deg, g.degrees(n + 1).deg);
    t.edge_len.push_back(1.0 / std::sqrt(deg));
    t.dist0.push_back(t.dist0.back() + t.edge_len.back());
  }
  return t;
}

bool is_intrinsic(const LinearGraph& g, const MetricTable& table, double tol) {
  long length = long(table.edge_len.size());
  for (long n = 0; n < length; ++n) {
    double acc = 0.0;
    if (n >= 1) acc += g.weight(n - 1) * table.edge_len[std::size_t(n - 1)] *
                       table.edge_len[std::size_t(n - 1)];
    acc += g.weight(n) * table.edge_len[std::size_t(n)] *
           table.edge_len[std::size_t(n)];
    if (acc > g.measure(n) * (1.0 + tol)) return false;
  }
  return true;
}

double ball_volume(const LinearGraph& g, const MetricTable& table, double r) {
  if (table.dist0.empty() || table.dist0.back() <= r)
    fail(ErrorCode::RadiusExceedsSupport,
         "metric table does not reach past radius r");
  double acc = 0.0;
  for (long n = 0; std::size_t(n) < table.dist0.size(); ++n) {
    if (table.dist0[std::size_t(n)] <= r) acc += g.measure(n);
  }
  return acc;
}

bool second_difference_check(const LinearGraph& g, double K, long lo, long hi) {
  if (K > 0.0) fail(ErrorCode::InvalidArgument, "requires K <= 0");
  DimensionParam inf = DimensionParam::infinite();
  for (long n = std::max(lo, 2L); n <= hi; ++n) {
    if (!cd_holds(g, n, K, inf) || !cd_holds(g, n + 1, K, inf))
      fail(ErrorCode::CdHypothesisFailed,
           "CD(K,inf) fails near n=" + std::to_string(n));
    double second = g.weight(n - 2) - 2.0 * g.weight(n) + g.weight(n + 2);
    if (second > -6.0 * K + 1e-9) return false;
  }
  return true;
}

WeightGrowthConstants weight_growth_check(const LinearGraph& g, double K,
                                          long lo, long hi) {
  DimensionParam inf = DimensionParam::infinite();
  WeightGrowthConstants c;
  for (long n = lo; n <= hi; ++n) {
    if (!cd_holds(g, n, K, inf))
      fail(ErrorCode::CdHypothesisFailed,
           "CD(K,inf) fails at n=" + std::to_string(n));
    if (!g.has_edge(n)) continue;
    double w = g.weight(n);
    c.c_lin = std::max(c.c_lin, w / double(n + 1));
    c.c_quad = std::max(c.c_quad, w / (double(n + 1) * double(n + 1)));
  }
  return c;
}

namespace {

void verify_cd0_prefix(const LinearGraph& g) {
  long p = long(g.weights().prefix.size());
  long hi = g.weights().tail.decidable() ? p + 8 : p - 2;
  hi = std::min(hi, 64L);
  DimensionParam inf = DimensionParam::infinite();
  for (long n = 1; n <= hi; ++n) {
    if (!cd_holds(g, n, 0.0, inf))
      fail(ErrorCode::CdHypothesisFailed,
           "CD(0,inf) fails at n=" + std::to_string(n));
  }
}

}  // namespace

GrowthClass classify_volume_growth(const LinearGraph& g) {
  if (!g.is_physical())
    fail(ErrorCode::MeasureKindUnsupported,
         "volume growth classification requires a physical graph");
  verify_cd0_prefix(g);

  const TailModel& t = g.weights().tail;
  GrowthClass out;
  auto estimate_a_g = [&](long n) {
    return 0.5 * (g.weights().eval(2 * n + 2) - g.weights().eval(2 * n));
  };
  switch (t.kind) {
    case TailModel::Kind::Constant:
      out.label = GrowthLabel::Linear;
      break;
    case TailModel::Kind::Affine:
      out.label = t.slope > 0.0 ? GrowthLabel::Quadratic : GrowthLabel::Linear;
      out.a_g = t.slope;
      break;
    case TailModel::Kind::Power:
      if (t.gamma <= 0.0) {
        out.label = GrowthLabel::Linear;
      } else if (t.gamma < 1.0) {
        out.label = GrowthLabel::Intermediate;
      } else {
        out.label = GrowthLabel::Quadratic;
        out.a_g = t.gamma == 1.0 ? t.c : estimate_a_g(1000000);
      }
      break;
    case TailModel::Kind::Exponential:
      out.label = t.base <= 1.0 ? GrowthLabel::Linear : GrowthLabel::Quadratic;
      if (t.base > 1.0) out.a_g = estimate_a_g(500);
      break;
    case TailModel::Kind::Undecidable: {
      out.label = GrowthLabel::Undecided;
      long p = long(g.weights().prefix.size());
      if (p >= 3) out.a_g = estimate_a_g((p - 3) / 2);
      break;
    }
  }
  return out;
}

ConcaveEnvelopes concave_envelopes(const LinearGraph& g, long lo, long hi,
                                   double slack) {
  if (lo < 1 || hi < lo + 3)
    fail(ErrorCode::InvalidArgument, "range must satisfy 1 <= lo, lo+3 <= hi");
  ConcaveEnvelopes env;
  auto even_interp = [&](long n) {
    return n % 2 == 0 ? g.weight(n) : 0.5 * (g.weight(n - 1) + g.weight(n + 1));
  };
  auto odd_interp = [&](long n) {
    return n % 2 == 1 ? g.weight(n) : 0.5 * (g.weight(n - 1) + g.weight(n + 1));
  };
  for (long n = lo; n <= hi; ++n) {
    env.f_samples.push_back(even_interp(n));
    env.g_samples.push_back(odd_interp(n));
  }
  long m = (hi - 2) / 2 - 1;
  env.a_g = 0.5 * (g.weight(2 * m + 2) - g.weight(2 * m));
  env.n0 = lo + (hi - lo) / 2;
  for (long n = env.n0; n <= hi; ++n) {
    env.max_deviation =
        std::max(env.max_deviation, std::abs(g.weight(n) - even_interp(n)));
  }
  env.bound_ok = env.max_deviation <= 3.0 * env.a_g + slack;
  return env;
}

ScDecayReport sc_from_curvature_decay(const LinearGraph& g,
                                      const MetricTable& table, long lo,
                                      long hi) {
  if (!is_intrinsic(g, table))
    fail(ErrorCode::InvalidArgument, "metric table is not intrinsic");
  if (hi >= long(table.dist0.size()))
    fail(ErrorCode::RadiusExceedsSupport, "metric table too short for range");

  ScDecayReport report;
  DimensionParam inf = DimensionParam::infinite();
  long mid = lo + (hi - lo) / 2;
  for (long n = lo; n <= hi; ++n) {
    double k = optimal_curvature(g, n, inf);
    double rho = table.dist0[std::size_t(n)];
    double c = std::max(0.0, -k) / (1.0 + rho * rho);
    report.constant = std::max(report.constant, c);
    if (n <= mid) report.constant_first_half = std::max(
        report.constant_first_half, c);
  }
  report.hypothesis_ok =
      report.constant <= 1.5 * report.constant_first_half + 1e-9;

  for (const auto& v : series_tests(g)) {
    if (v.property == SeriesProperty::StochasticallyComplete)
      report.verdict = v;
  }
  report.theorem_consistent =
      !(report.hypothesis_ok && report.verdict.verdict == Verdict::No);
  return report;
}

namespace {

double piecewise_eval(const std::vector<ConcaveSample>& s, double t) {
  if (t <= s.front().x) return s.front().y;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (t <= s[i].x) {
      double u = (t - s[i - 1].x) / (s[i].x - s[i - 1].x);
      return s[i - 1].y + u * (s[i].y - s[i - 1].y);
    }
  }
  const auto& a = s[s.size() - 2];
  const auto& b = s.back();
  double slope = (b.y - a.y) / (b.x - a.x);
  return b.y + slope * (t - b.x);
}

}  // namespace

LinearGraph build_from_concave(const std::vector<ConcaveSample>& samples) {
  if (samples.empty())
    fail(ErrorCode::InvalidArgument, "need at least one sample");
  std::vector<ConcaveSample> s = samples;
  if (s.size() == 1) s.push_back({s[0].x + 1.0, s[0].y});
  double prev_slope = kInf;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i].y > 0.0)) fail(ErrorCode::NotPositive, "samples must be > 0");
    if (i > 0) {
      if (!(s[i].x > s[i - 1].x))
        fail(ErrorCode::InvalidArgument, "sample x must be increasing");
      double slope = (s[i].y - s[i - 1].y) / (s[i].x - s[i - 1].x);
      if (slope > prev_slope + 1e-9)
        fail(ErrorCode::NotConcave, "slopes must be non-increasing");
      prev_slope = slope;
    }
  }

  long N = -1;
  for (long n = 2; n < 1000000; ++n) {
    if (piecewise_eval(s, double(n + 1)) <= 4.0 * piecewise_eval(s, double(n))) {
      N = n;
      break;
    }
  }
  if (N < 0) fail(ErrorCode::NotConcave, "no shift with f(N+1) <= 4 f(N)");

  double x_last = s.back().x;
  double final_slope = (s.back().y - s[s.size() - 2].y) /
                       (s.back().x - s[s.size() - 2].x);
  long T = std::max(2L, long(std::ceil(x_last)) - N + 1);
  WeightModel w;
  w.prefix.reserve(std::size_t(T));
  for (long n = 0; n < T; ++n)
    w.prefix.push_back(piecewise_eval(s, double(n + N)));
  if (final_slope == 0.0) {
    w.tail = TailModel::constant(s.back().y);
  } else {
    TailModel t;
    t.kind = TailModel::Kind::Affine;
    t.slope = final_slope;
    t.intercept = s.back().y + final_slope * (double(N) - x_last);
    w.tail = t;
  }
  return LinearGraph(Support::half_line(), std::move(w),
                     MeasureSpec::physical());
}

LinearGraph exp_family(double omega, double mu) {
  if (!(1.0 < omega && omega < mu))
    fail(ErrorCode::ParameterOrderViolated, "requires 1 < omega < mu");
  WeightModel w;
  w.tail = TailModel::exponential(1.0, 1.0 / omega);
  SequenceModel m;
  m.tail = TailModel::exponential(1.0, 1.0 / mu);
  return LinearGraph(Support::half_line(), std::move(w),
                     MeasureSpec::explicit_(std::move(m)));
}

PositiveCertificate positive_certificate(double omega, double mu) {
  if (!(1.0 < omega && omega < mu))
    fail(ErrorCode::ParameterOrderViolated, "requires 1 < omega < mu");
  double alpha = mu / omega;

  auto f_minus = [&](double K, double invD) {
    return -omega / alpha + 3.0 / alpha + (1.0 - 4.0 * invD) * omega - 1.0 -
           2.0 * K;
  };
  auto f_plus = [&](double K, double invD) {
    return -alpha + 3.0 * omega * alpha + (1.0 - 4.0 * invD) - omega - 2.0 * K;
  };

  PositiveCertificate cert;
  {
    double lhs = f_minus(0, 0) * f_plus(0, 0) - 4.0 * omega;
    double rhs = (alpha - 1.0) * (omega - 1.0) *
                 (3.0 - omega + alpha * (3.0 * omega - 1.0)) / alpha;
    cert.identity_residual = lhs - rhs;
    if (std::abs(cert.identity_residual) > 1e-9 * std::max(1.0, std::abs(rhs)))
      fail(ErrorCode::AssertionFailed, "factored product identity violated");
    if (!(lhs > 0.0))
      fail(ErrorCode::AssertionFailed, "no positive slack at (inf, 0)");
  }

  auto feasible = [&](double K, double invD) {
    double fm = f_minus(K, invD), fp = f_plus(K, invD);
    double c = 1.0 - 2.0 * invD;
    return fm > 0.0 && fp > 0.0 && 0.25 * fm * fp >= omega * c * c;
  };

  // Largest feasible 1/D at K = 0, then largest feasible K at half of it.
  double t_lo = 0.0, t_hi = 0.25;
  if (feasible(0.0, t_hi)) {
    t_lo = t_hi;
  } else {
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (t_lo + t_hi);
      (feasible(0.0, mid) ? t_lo : t_hi) = mid;
    }
  }
  double invD = 0.5 * t_lo;
  if (!(invD > 0.0))
    fail(ErrorCode::AssertionFailed, "no finite dimension found");

  double k_lo = 0.0, k_hi = 1.0;
  while (feasible(k_hi, invD)) k_hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (k_lo + k_hi);
    (feasible(mid, invD) ? k_lo : k_hi) = mid;
  }
  cert.K = 0.5 * k_lo;
  cert.D = 1.0 / invD;
  if (!(cert.K > 0.0))
    fail(ErrorCode::AssertionFailed, "no positive curvature bound found");
  return cert;
}

double resistance(const LinearGraph& g, long n) {
  if (!g.is_physical())
    fail(ErrorCode::MeasureKindUnsupported, "resistance requires physical");
  if (n < 1) fail(ErrorCode::InvalidArgument, "requires n >= 1");
  double acc = 0.0;
  for (long k = 0; k < n; ++k) acc += 1.0 / g.weight(k);
  return acc;
}

}  // namespace curvelab
