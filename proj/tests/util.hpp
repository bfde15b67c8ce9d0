#pragma once

#include <random>

#include "curvelab/graph.hpp"

namespace curvelab::testutil {

inline LinearGraph physical_line(TailModel tail) {
  return LinearGraph(Support::line(), WeightModel{{}, tail},
                     MeasureSpec::physical());
}

inline LinearGraph physical_half_line(TailModel tail) {
  return LinearGraph(Support::half_line(), WeightModel{{}, tail},
                     MeasureSpec::physical());
}

inline LinearGraph physical_half_line(std::vector<double> prefix,
                                      TailModel tail = TailModel::undecidable()) {
  return LinearGraph(Support::half_line(),
                     WeightModel{std::move(prefix), tail},
                     MeasureSpec::physical());
}

inline LinearGraph normalized_half_line(TailModel tail) {
  return LinearGraph(Support::half_line(), WeightModel{{}, tail},
                     MeasureSpec::normalized());
}

inline LinearGraph normalized_line(TailModel tail) {
  return LinearGraph(Support::line(), WeightModel{{}, tail},
                     MeasureSpec::normalized());
}

/// Random finite window graph with mixed measure kinds, for cross-validation
/// harnesses.  Vertices [lo, hi]; weights and explicit measures in [0.5, 2].
inline LinearGraph random_window(std::mt19937& rng, long lo = -4, long hi = 8) {
  std::uniform_real_distribution<double> val(0.5, 2.0);
  std::uniform_int_distribution<int> kind(0, 2);
  WeightModel w;
  for (long n = lo; n < hi; ++n) w.prefix.push_back(val(rng));
  switch (kind(rng)) {
    case 0:
      return LinearGraph(Support::interval(lo, hi), std::move(w),
                         MeasureSpec::physical());
    case 1:
      return LinearGraph(Support::interval(lo, hi), std::move(w),
                         MeasureSpec::normalized());
    default: {
      SequenceModel m;
      for (long n = lo; n <= hi; ++n) m.prefix.push_back(val(rng));
      return LinearGraph(Support::interval(lo, hi), std::move(w),
                         MeasureSpec::explicit_(std::move(m)));
    }
  }
}

}  // namespace curvelab::testutil
