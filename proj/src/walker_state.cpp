#include "qwalk/walker_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwalk {

WalkerState standard_initial_state() {
  const double s = 1.0 / std::sqrt(2.0);
  WalkerState state;
  state.t = 0;
  state.left = {cplx(s, 0.0)};
  state.right = {cplx(-s, 0.0)};
  return state;
}

WalkerState general_initial_state(const InitialStateSpec& spec) {
  if (!(spec.eta >= 0.0 && spec.eta <= 1.0)) {
    std::ostringstream msg;
    msg << "eta must be in [0, 1], got " << spec.eta;
    throw std::domain_error(msg.str());
  }
  WalkerState state;
  state.t = 0;
  state.left = {std::polar(std::sqrt(1.0 - spec.eta), spec.mu)};
  state.right = {cplx(std::sqrt(spec.eta), 0.0)};
  return state;
}

double norm_squared(const WalkerState& state) {
  double total = 0.0;
  for (std::size_t i = 0; i < state.sites(); ++i) {
    total += std::norm(state.left[i]) + std::norm(state.right[i]);
  }
  return total;
}

std::map<int, double> position_distribution(const WalkerState& state) {
  std::map<int, double> dist;
  for (std::size_t i = 0; i < state.sites(); ++i) {
    const double p = std::norm(state.left[i]) + std::norm(state.right[i]);
    if (p >= 1e-300) {
      dist.emplace(state.x_of(i), p);
    }
  }
  return dist;
}

double expectation_position(const WalkerState& state) {
  double mean = 0.0;
  for (std::size_t i = 0; i < state.sites(); ++i) {
    const double p = std::norm(state.left[i]) + std::norm(state.right[i]);
    mean += static_cast<double>(state.x_of(i)) * p;
  }
  return mean;
}

}  // namespace qwalk
