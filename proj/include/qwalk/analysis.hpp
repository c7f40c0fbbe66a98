#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qwalk {

/// Long-run diagnostics of an <x>(t) series.
struct SeriesDiagnostics {
  /// Smallest t whose sign differs from the sign of the first entry.
  std::optional<int> first_sign_change;
  /// Largest t with <x> > 0.
  std::optional<int> last_positive_step;
  /// Ordinary least-squares slope over the full series, per step.
  double linear_trend_slope = 0.0;
  /// Mean spacing of detrended zero up-crossings (interpolated); absent
  /// with fewer than two up-crossings.
  std::optional<double> dominant_period;
  /// RMS of the detrended series against a moving average that tracks the
  /// dominant oscillation -- surfaces the short-period ripple. Diagnostic
  /// only.
  double short_period_residual_rms = 0.0;
};

/// Throws std::domain_error on an empty series; t must be strictly
/// increasing.
SeriesDiagnostics diagnose(std::span<const std::pair<int, double>> series);

/// Pointwise difference between `series` and the single-game-A series at
/// the same alpha over t = 1..t_max. Throws std::domain_error if the
/// lengths differ.
std::vector<std::pair<int, double>> compare_to_game_A(
    std::span<const std::pair<int, double>> series, double alpha, int t_max);

}  // namespace qwalk
