#pragma once

#include <functional>
#include <string>

namespace levym {

enum class SeriesMode { all_positive, alternating_safe };

struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
  bool divergent = false;
  bool undecided = false;
  std::string certificate;
};

struct SeriesOptions {
  double rel_tol = 1e-12;
  long max_terms = 100000;
  int divergence_window = 16;  // consecutive non-decreasing terms => divergent
  double cap = 1e12;
};

/// Safeguarded summation of term(n) for n = 1, 2, ...
/// all_positive mode requires eventually monotone nonnegative terms; the
/// divergence window and the running-sum cap decide blow-up.
SeriesResult sum_series(const std::function<double(long)>& term, SeriesMode mode,
                        const SeriesOptions& opts = {});

}  // namespace levym
