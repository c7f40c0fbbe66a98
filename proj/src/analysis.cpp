#include "qwalk/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/evolution.hpp"

namespace qwalk {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

struct TrendFit {
  double intercept = 0.0;
  double slope = 0.0;
};

TrendFit least_squares(std::span<const std::pair<int, double>> series) {
  const double n = static_cast<double>(series.size());
  double sum_t = 0.0, sum_v = 0.0;
  for (const auto& [t, v] : series) {
    sum_t += t;
    sum_v += v;
  }
  const double mean_t = sum_t / n;
  const double mean_v = sum_v / n;
  double stt = 0.0, stv = 0.0;
  for (const auto& [t, v] : series) {
    const double dt = t - mean_t;
    stt += dt * dt;
    stv += dt * (v - mean_v);
  }
  TrendFit fit;
  fit.slope = stt > 0.0 ? stv / stt : 0.0;
  fit.intercept = mean_v - fit.slope * mean_t;
  return fit;
}

}  // namespace

SeriesDiagnostics diagnose(std::span<const std::pair<int, double>> series) {
  if (series.empty()) {
    throw std::domain_error("series is empty");
  }

  SeriesDiagnostics diag;

  const int start_sign = sign_of(series.front().second);
  for (const auto& [t, v] : series) {
    if (!diag.first_sign_change && sign_of(v) != start_sign) {
      diag.first_sign_change = t;
    }
    if (v > 0.0) {
      diag.last_positive_step = t;
    }
  }

  const TrendFit fit = least_squares(series);
  diag.linear_trend_slope = fit.slope;

  std::vector<double> detrended;
  detrended.reserve(series.size());
  for (const auto& [t, v] : series) {
    detrended.push_back(v - (fit.intercept + fit.slope * t));
  }

  // Up-crossings of the detrended series, with the crossing time
  // interpolated on the segment that brackets zero.
  std::vector<double> crossings;
  for (std::size_t k = 1; k < detrended.size(); ++k) {
    if (detrended[k - 1] < 0.0 && detrended[k] >= 0.0) {
      const double t0 = series[k - 1].first;
      const double t1 = series[k].first;
      const double frac =
          -detrended[k - 1] / (detrended[k] - detrended[k - 1]);
      crossings.push_back(t0 + frac * (t1 - t0));
    }
  }
  if (crossings.size() >= 2) {
    diag.dominant_period = (crossings.back() - crossings.front()) /
                           static_cast<double>(crossings.size() - 1);
  }

  // Short-period ripple: residual against a moving average short enough to
  // follow the dominant oscillation, so only faster wiggle survives.
  std::size_t window = std::max<std::size_t>(3, detrended.size() / 10);
  if (diag.dominant_period) {
    window = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::lround(*diag.dominant_period / 10)));
  }
  window = std::min(window, detrended.size());
  double sum_sq = 0.0;
  std::size_t count = 0;
  const std::size_t half = window / 2;
  for (std::size_t k = half; k + (window - half) <= detrended.size(); ++k) {
    double avg = 0.0;
    for (std::size_t m = k - half; m < k - half + window; ++m) {
      avg += detrended[m];
    }
    avg /= static_cast<double>(window);
    const double r = detrended[k] - avg;
    sum_sq += r * r;
    ++count;
  }
  diag.short_period_residual_rms =
      count > 0 ? std::sqrt(sum_sq / static_cast<double>(count)) : 0.0;

  return diag;
}

std::vector<std::pair<int, double>> compare_to_game_A(
    std::span<const std::pair<int, double>> series, double alpha, int t_max) {
  if (static_cast<int>(series.size()) != t_max) {
    throw std::domain_error("series length does not match t_max");
  }
  const auto baseline = expectation_series(GameSequence{"A"},
                                           PhasePair{alpha, alpha}, t_max);
  std::vector<std::pair<int, double>> delta;
  delta.reserve(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    delta.emplace_back(series[k].first,
                       series[k].second - baseline[k].second);
  }
  return delta;
}

}  // namespace qwalk
