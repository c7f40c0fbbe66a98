#pragma once

#include <vector>

#include "qwalk/evolution.hpp"

namespace qwalk {

/// Uniform inclusive grid over (alpha, beta) for one sequence and step
/// count. alpha_at(0) == alpha_min and alpha_at(n_alpha-1) == alpha_max.
struct SweepGrid {
  double alpha_min = 0.0, alpha_max = 0.2;
  double beta_min = 0.0, beta_max = 0.2;
  int n_alpha = 81, n_beta = 81;
  GameSequence sequence;
  int steps = 100;

  double alpha_at(int i) const;
  double beta_at(int j) const;

  /// Throws std::domain_error on n_alpha/n_beta < 2, min >= max, steps < 1.
  void validate() const;
};

struct SweepResult {
  SweepGrid grid;
  std::vector<double> values;  // row-major, [i * n_beta + j]

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.n_beta + j];
  }
};

/// <x> after grid.steps steps from the standard initial state, for every
/// grid cell. Cells are independent; any worker count gives bit-identical
/// values because each cell writes its own slot. threads == 0 means
/// hardware concurrency, threads == 1 is the serial reference path.
SweepResult sweep(const SweepGrid& grid, int threads = 0);

struct PositiveCell {
  double alpha;
  double beta;
  double exp_x;
};

/// Cells strictly above `threshold`, ordered by alpha then beta.
std::vector<PositiveCell> positive_region(const SweepResult& result,
                                          double threshold = 0.0);

/// Canonical game sequences of period <= max_len: all words over {A, B}
/// reduced to their primitive period (ABAB -> AB), deduplicated under the
/// letterwise A<->B swap (which only relabels alpha<->beta), with the all-B
/// word folded into A. Each class is represented by its lexicographically
/// smallest member starting with A; the list is ordered by length then
/// lexicographically. Throws std::domain_error unless 1 <= max_len <= 8.
std::vector<GameSequence> enumerate_sequences(int max_len);

struct ScreenEntry {
  GameSequence sequence;
  int steps;          // largest multiple of the period <= the base step count
  double max_exp_x;   // max <x> over cells with alpha > 0 and beta > 0
  bool has_positive;  // max_exp_x > 0
};

/// Sweeps every canonical sequence of period <= max_len over the prototype
/// grid (its sequence and steps fields are replaced per entry; proto.steps
/// is the base step count). Entries follow enumerate_sequences order.
std::vector<ScreenEntry> parrondo_screen(int max_len, const SweepGrid& proto,
                                         int threads = 0);

}  // namespace qwalk
