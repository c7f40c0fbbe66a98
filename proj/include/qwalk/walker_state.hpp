#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Joint position x chirality state after t steps. Amplitudes cover the
/// reachable window x in [-t, t]; array index i corresponds to x = i - t.
/// Sites with x not congruent to t (mod 2) carry exactly zero amplitude.
struct WalkerState {
  int t = 0;
  std::vector<cplx> left;   // a_L(x), size 2t+1
  std::vector<cplx> right;  // a_R(x), size 2t+1

  std::size_t sites() const { return left.size(); }
  int min_x() const { return -t; }
  int x_of(std::size_t i) const { return static_cast<int>(i) - t; }
};

/// Parameters of the general one-site initial state
///   sqrt(eta) |R> + e^{i mu} sqrt(1-eta) |L>,  all at x = 0.
struct InitialStateSpec {
  double eta = 0.5;
  double mu = 0.0;
};

/// (|0,L> - |0,R>) / sqrt(2) -- the symmetric starting point used for all
/// game runs.
WalkerState standard_initial_state();

/// Throws std::domain_error if eta is outside [0, 1].
WalkerState general_initial_state(const InitialStateSpec& spec);

double norm_squared(const WalkerState& state);

/// P(x) = |a_L(x)|^2 + |a_R(x)|^2. Entries below 1e-300 are omitted.
std::map<int, double> position_distribution(const WalkerState& state);

/// <x> = sum_x x P(x).
double expectation_position(const WalkerState& state);

}  // namespace qwalk
